#include "chungfeller/io.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

namespace cf::io {

namespace {

using nlohmann::json;

Rational weight_from_json(const json& w) {
  if (w.is_string()) return parse_rational(w.get<std::string>());
  if (w.is_number_integer()) return Rational(w.get<long>());
  throw std::invalid_argument("weight must be an exact-rational string such as \"3/2\"");
}

WeightedIndexSet index_set_from_json(const json& doc, const char* key) {
  if (!doc.contains(key)) return {};
  const json& arr = doc.at(key);
  if (!arr.is_array()) throw std::invalid_argument(std::string("\"") + key + "\" must be an array");
  std::vector<WeightedIndexSet::Entry> entries;
  for (const json& e : arr) {
    if (!e.is_object() || !e.contains("i") || !e.at("i").is_number_integer()) {
      throw std::invalid_argument(std::string("each entry of \"") + key + "\" needs an integer \"i\"");
    }
    const Rational w = e.contains("w") ? weight_from_json(e.at("w")) : Rational(1);
    entries.emplace_back(e.at("i").get<int>(), w);
  }
  return WeightedIndexSet(entries);
}

json index_set_to_json(const WeightedIndexSet& set) {
  json arr = json::array();
  for (const auto& [i, w] : set.entries()) arr.push_back({{"i", i}, {"w", to_string(w)}});
  return arr;
}

std::string term(const Rational& c, int y_exp, int z_exp, bool bivariate) {
  std::string out = to_string(c) + " *";
  if (bivariate) out += " y^" + std::to_string(y_exp);
  out += " z^" + std::to_string(z_exp);
  return out;
}

json failure_to_json(const Failure& f) {
  json out = {{"n", f.n},
              {"m", f.m ? json(*f.m) : json(nullptr)},
              {"expected", to_string(f.expected)},
              {"actual", to_string(f.actual)},
              {"source", f.source}};
  return out;
}

}  // namespace

StepSetSpec parse_spec_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed spec JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("class") || !doc.at("class").is_number_integer()) {
    throw std::invalid_argument("spec JSON needs an integer \"class\"");
  }
  return make_spec(doc.at("class").get<int>(), index_set_from_json(doc, "A"), index_set_from_json(doc, "B"));
}

json spec_to_json(const StepSetSpec& spec) {
  return {{"class", spec.class_id()}, {"A", index_set_to_json(spec.down_set())}, {"B", index_set_to_json(spec.flat_set())}};
}

WeightedIndexSet parse_index_weights(std::string_view text) {
  auto trim = [](std::string_view v) {
    while (!v.empty() && v.front() == ' ') v.remove_prefix(1);
    while (!v.empty() && v.back() == ' ') v.remove_suffix(1);
    return v;
  };
  text = trim(text);
  std::vector<WeightedIndexSet::Entry> entries;
  if (text.empty()) return {};

  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string_view item = trim(text.substr(pos, comma - pos));
    if (item.empty()) throw std::invalid_argument("empty entry in index list '" + std::string(text) + "'");

    const std::size_t colon = item.find(':');
    const std::string_view index_text = trim(item.substr(0, colon));
    int index = 0;
    const auto [ptr, ec] = std::from_chars(index_text.data(), index_text.data() + index_text.size(), index);
    if (index_text.empty() || ec != std::errc{} || ptr != index_text.data() + index_text.size()) {
      throw std::invalid_argument("bad index '" + std::string(index_text) + "'");
    }
    const Rational w = colon == std::string_view::npos ? Rational(1) : parse_rational(item.substr(colon + 1));
    entries.emplace_back(index, w);

    if (comma == text.size()) break;
    pos = comma + 1;
  }
  return WeightedIndexSet(entries);
}

std::string join_csv(std::span<const Rational> values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ',';
    out += to_string(values[i]);
  }
  return out;
}

std::string table_to_csv(const StatTable& table) {
  std::string out;
  for (int n = 0; n <= table.n_max(); ++n) {
    out += join_csv(table.row(n));
    out += '\n';
  }
  return out;
}

json table_to_json(const StatTable& table, std::string_view kind) {
  json rows = json::array();
  for (int n = 0; n <= table.n_max(); ++n) {
    json row = json::array();
    for (const Rational& v : table.row(n)) row.push_back(to_string(v));
    rows.push_back(std::move(row));
  }
  return {{"kind", kind}, {"n_max", table.n_max()}, {"rows", std::move(rows)}};
}

std::vector<std::string> series_terms(const SeriesUni& s) {
  std::vector<std::string> out;
  for (int n = 0; n <= s.order(); ++n) {
    if (s[n] != 0) out.push_back(term(s[n], 0, n, false));
  }
  return out;
}

std::vector<std::string> series_terms(const SeriesBi& s) {
  std::vector<std::string> out;
  for (int n = 0; n <= s.order(); ++n) {
    for (int m = 0; m <= n; ++m) {
      if (s.at(n, m) != 0) out.push_back(term(s.at(n, m), m, n, true));
    }
  }
  return out;
}

json series_to_json(const SeriesBi& s, std::string_view name) {
  return {{"series", name}, {"order", s.order()}, {"terms", series_terms(s)}};
}

json path_to_json(const Path& path) {
  json arr = json::array();
  for (const Step& s : path.steps()) arr.push_back({{"dx", s.dx}, {"dy", s.dy}});
  return arr;
}

json pointed_to_json(const PointedPath& pointed) {
  return {{"path", path_to_json(pointed.path())}, {"p", pointed.pointed_length()}};
}

json report_to_json(const VerificationReport& report) {
  json out = {{"check", report.check_name},
              {"passed", report.passed},
              {"n_max", report.n_max},
              {"spec", report.spec ? spec_to_json(*report.spec) : json(nullptr)},
              {"first_failure", report.first_failure ? failure_to_json(*report.first_failure) : json(nullptr)}};
  if (!report.violations.empty()) {
    json all = json::array();
    for (const Failure& f : report.violations) all.push_back(failure_to_json(f));
    out["violations"] = std::move(all);
  }
  if (!report.notes.empty()) out["notes"] = report.notes;
  return out;
}

std::string report_to_csv(const VerificationReport& report) {
  std::ostringstream os;
  os << "check,passed,n,m,expected,actual,source\n";
  os << report.check_name << ',' << (report.passed ? "true" : "false");
  if (const auto& f = report.first_failure) {
    os << ',' << f->n << ',' << (f->m ? std::to_string(*f->m) : "") << ',' << to_string(f->expected) << ','
       << to_string(f->actual) << ",\"" << f->source << '"';
  } else {
    os << ",,,,,";
  }
  os << '\n';
  return os.str();
}

}  // namespace cf::io
