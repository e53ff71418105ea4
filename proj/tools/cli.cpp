#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "chungfeller/enumerate.hpp"
#include "chungfeller/io.hpp"
#include "chungfeller/series.hpp"
#include "chungfeller/verify.hpp"

namespace cf::cli {

namespace {

using nlohmann::json;

struct SharedOptions {
  std::string spec_file;
  int class_id = 1;
  std::string down = "1:1";
  std::string flat;
  int n = 5;
  std::string format = "csv";
  bool allow_large_n = false;
};

void add_shared(CLI::App& cmd, SharedOptions& o) {
  cmd.add_option("--spec", o.spec_file, "Step-set spec JSON file")->check(CLI::ExistingFile);
  cmd.add_option("--class", o.class_id, "Step class (1, 2 or 3)");
  cmd.add_option("--A", o.down, "Down-step indices with weights, e.g. \"1:1,3:1/2\"");
  cmd.add_option("--B", o.flat, "Flat-step indices with weights, e.g. \"1:1\"");
  cmd.add_option("--n", o.n, "Maximum n (truncation order or path length)");
  cmd.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  cmd.add_flag("--allow-large-n", o.allow_large_n, "Permit n above 12");
}

StepSetSpec load_spec(const SharedOptions& o) {
  if (!o.spec_file.empty()) {
    std::ifstream in(o.spec_file);
    std::stringstream buf;
    buf << in.rdbuf();
    return io::parse_spec_json(buf.str());
  }
  return make_spec(o.class_id, io::parse_index_weights(o.down), io::parse_index_weights(o.flat));
}

void emit_series(const CliConfig& c, const SeriesBi& s, std::ostream& out) {
  if (c.output_format == OutputFormat::json) {
    out << io::series_to_json(s, c.series).dump() << '\n';
  } else {
    for (const auto& t : io::series_terms(s)) out << t << '\n';
  }
}

int run_coeffs(const CliConfig& c, std::ostream& out) {
  const int n = c.n_max;
  const StepSetSpec& spec = c.spec;
  if (c.series == "F") {
    std::vector<Rational> values;
    if (c.source == "brute") {
      values = nonneg_weight_sums(spec, n, Execution::parallel);
    } else {
      const SeriesUni f = solve_F(spec, n);
      values.assign(f.coeffs().begin(), f.coeffs().end());
    }
    if (c.output_format == OutputFormat::json) {
      json arr = json::array();
      for (const auto& v : values) arr.push_back(to_string(v));
      out << json{{"series", "F"}, {"order", n}, {"coefficients", arr}}.dump() << '\n';
    } else {
      out << io::join_csv(values) << '\n';
    }
    return kOk;
  }

  const SeriesUni f = solve_F(spec, n);
  if (c.series == "H") {
    const SeriesUni h = build_H(spec, f, c.k.value_or(1), n);
    if (c.output_format == OutputFormat::json) {
      out << json{{"series", "H"}, {"k", c.k.value_or(1)}, {"order", n}, {"terms", io::series_terms(h)}}.dump()
          << '\n';
    } else {
      for (const auto& t : io::series_terms(h)) out << t << '\n';
    }
    return kOk;
  }

  const SeriesBi p = build_P(spec, f, n);
  if (c.series == "P") {
    emit_series(c, p, out);
  } else if (c.series == "G") {
    emit_series(c, build_G(spec, f, n), out);
  } else if (c.series == "D") {
    emit_series(c, build_D_product(build_G(spec, f, n), p), out);
  } else if (c.series == "D-closed") {
    emit_series(c, build_D_closed(f, n), out);
  } else if (c.series == "M") {
    emit_series(c, build_M(spec, f, p, n), out);
  } else if (c.series == "M-sum") {
    emit_series(c, build_M_sum(spec, f, p, n), out);
  } else {
    throw std::invalid_argument("unknown series '" + c.series + "'");
  }
  return kOk;
}

StatTable series_table(const SeriesBi& s) {
  StatTable t(s.order());
  for (int n = 0; n <= s.order(); ++n) {
    for (int m = 0; m <= n; ++m) t.at(n, m) = s.at(n, m);
  }
  return t;
}

int run_table(const CliConfig& c, std::ostream& out) {
  const std::string kind = c.table_kind.value_or("dyck");
  StatTable table(0);
  if (c.source == "brute") {
    table = kind == "dyck" ? dyck_table(c.spec, c.n_max, Execution::parallel)
                           : motzkin_table(c.spec, c.n_max, Execution::parallel);
  } else {
    const SeriesUni f = solve_F(c.spec, c.n_max);
    const SeriesBi p = build_P(c.spec, f, c.n_max);
    table = series_table(kind == "dyck" ? build_D_product(build_G(c.spec, f, c.n_max), p)
                                        : build_M(c.spec, f, p, c.n_max));
  }
  if (c.output_format == OutputFormat::json) {
    out << io::table_to_json(table, kind).dump() << '\n';
  } else {
    out << io::table_to_csv(table);
  }
  return kOk;
}

int run_enumerate(const CliConfig& c, std::ostream& out) {
  if (c.output_format != OutputFormat::json) throw std::invalid_argument("enumerate only emits JSON (--format json)");
  json arr = json::array();
  if (c.what == "pointed") {
    for (const auto& p : enumerate_pointed(c.spec, c.k.value_or(1), c.n_max, Execution::parallel)) {
      arr.push_back(io::pointed_to_json(p));
    }
  } else if (c.what == "nonnegative") {
    for (const auto& p : enumerate_nonnegative(c.spec, c.n_max, Execution::parallel)) arr.push_back(io::path_to_json(p));
  } else {
    for (const auto& p : enumerate_paths(c.spec, c.k.value_or(0), c.n_max, Execution::parallel)) {
      arr.push_back(io::path_to_json(p));
    }
  }
  out << arr.dump() << '\n';
  return kOk;
}

PointedStatistic builtin_statistic(const std::string& name) {
  if (name == "nonpositive") return nonpositive_pointed_length;
  if (name == "abs-min") return abs_min_pointed_length;
  if (name == "zero") return [](const PointedPath&) { return 0; };
  throw std::invalid_argument("unknown statistic '" + name + "'");
}

int emit_report(const CliConfig& c, const VerificationReport& r, std::ostream& out) {
  if (c.output_format == OutputFormat::json) {
    out << io::report_to_json(r).dump() << '\n';
  } else {
    out << io::report_to_csv(r);
  }
  return r.passed ? kOk : kCheckFailed;
}

int run_verify(const CliConfig& c, std::ostream& out) {
  VerifyOptions opts;
  opts.verbose = c.verbose;
  const std::string kind = c.table_kind.value_or("dyck");
  if (kind == "dyck") return emit_report(c, check_dyck_type(c.spec, c.n_max, opts), out);
  if (kind == "motzkin") return emit_report(c, check_motzkin_type(c.spec, c.n_max, opts), out);
  if (kind == "known") return emit_report(c, check_known_sequences(c.n_max, opts), out);
  if (kind == "scan") return emit_report(c, scan_statistic(c.spec, c.n_max, builtin_statistic(c.statistic), opts), out);
  throw std::invalid_argument("unknown verify kind '" + kind + "'");
}

}  // namespace

int run(const CliConfig& c, std::ostream& out, std::ostream& err) {
  try {
    if (c.n_max < 0) throw std::invalid_argument("--n must be >= 0");
    if (c.n_max > kLargeN && !c.override_large_n) {
      throw std::invalid_argument("--n above " + std::to_string(kLargeN) +
                                  " grows exponentially; pass --allow-large-n to proceed");
    }
    switch (c.command) {
      case Command::coeffs:
        return run_coeffs(c, out);
      case Command::table:
        return run_table(c, out);
      case Command::enumerate:
        return run_enumerate(c, out);
      case Command::verify:
        return run_verify(c, out);
      case Command::identities: {
        return emit_report(c, check_identities(c.spec, c.n_max, VerifyOptions{c.verbose, Execution::parallel}), out);
      }
    }
  } catch (const OutOfScope& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  }
  return kBadInput;
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weighted lattice paths and Chung-Feller verification"};
  app.require_subcommand(1);

  SharedOptions shared;
  CliConfig config;
  std::string kind;
  int k = 0;

  auto* coeffs = app.add_subcommand("coeffs", "Series coefficients (F by default)");
  auto* table = app.add_subcommand("table", "Pointed-path statistic table");
  auto* enumerate = app.add_subcommand("enumerate", "List paths as JSON");
  auto* verify = app.add_subcommand("verify", "Chung-Feller checks");
  auto* identities = app.add_subcommand("identities", "Generating-function identity suite");
  for (auto* cmd : {coeffs, table, enumerate, verify, identities}) add_shared(*cmd, shared);

  coeffs->add_option("--series", config.series, "F, G, P, D, D-closed, M, M-sum or H")
      ->check(CLI::IsMember({"F", "G", "P", "D", "D-closed", "M", "M-sum", "H"}));
  std::string coeffs_source = "series";
  std::string table_source = "brute";
  coeffs->add_option("--source", coeffs_source, "F from the series or from brute force")
      ->check(CLI::IsMember({"series", "brute"}));
  coeffs->add_option("--k", k, "Exponent k for H");
  table->add_option("--kind", kind, "dyck or motzkin")->check(CLI::IsMember({"dyck", "motzkin"}));
  table->add_option("--source", table_source, "brute or series")->check(CLI::IsMember({"series", "brute"}));
  enumerate->add_option("--what", config.what, "paths, nonnegative or pointed")
      ->check(CLI::IsMember({"paths", "nonnegative", "pointed"}));
  enumerate->add_option("--k", k, "End height");
  verify->add_option("--kind", kind, "dyck, motzkin, known or scan")
      ->check(CLI::IsMember({"dyck", "motzkin", "known", "scan"}));
  verify->add_option("--stat", config.statistic, "Candidate for --kind scan: nonpositive, abs-min or zero")
      ->check(CLI::IsMember({"nonpositive", "abs-min", "zero"}));
  for (auto* cmd : {verify, identities}) cmd->add_flag("--verbose", config.verbose, "List every violation");

  std::vector<std::string> argv_tail(args.begin() + (args.empty() ? 0 : 1), args.end());
  std::reverse(argv_tail.begin(), argv_tail.end());
  try {
    app.parse(argv_tail);
  } catch (const CLI::CallForHelp&) {
    const auto chosen = app.get_subcommands();
    out << (chosen.empty() ? app.help() : chosen.front()->help());
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  }

  CLI::App* chosen = app.get_subcommands().front();
  const std::map<std::string, Command> names = {{"coeffs", Command::coeffs},
                                                {"table", Command::table},
                                                {"enumerate", Command::enumerate},
                                                {"verify", Command::verify},
                                                {"identities", Command::identities}};
  config.command = names.at(chosen->get_name());
  if (!kind.empty()) config.table_kind = kind;
  if (auto* opt = chosen->get_option_no_throw("--k"); opt != nullptr && opt->count() > 0) config.k = k;
  config.source = config.command == Command::table ? table_source : coeffs_source;
  config.n_max = shared.n;
  config.output_format = shared.format == "json" ? OutputFormat::json : OutputFormat::csv;
  config.override_large_n = shared.allow_large_n;

  try {
    config.spec = load_spec(shared);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  }
  return run(config, out, err);
}

}  // namespace cf::cli
