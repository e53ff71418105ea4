// Acceptance suite. `acceptance N` runs criterion N, `acceptance` runs all of
// them. One PASS/FAIL line per criterion; exit status 0 iff every selected
// criterion passed.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "chungfeller/enumerate.hpp"
#include "chungfeller/rational.hpp"
#include "chungfeller/series.hpp"
#include "chungfeller/stepset.hpp"
#include "chungfeller/verify.hpp"

namespace {

using namespace cf;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool passed = true;
  std::string summary;
  std::vector<std::string> details;
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

Rational q(long p, long d) {
  Rational r(p, d);
  r.canonicalize();
  return r;
}

std::string describe(const StepSetSpec& spec) {
  std::ostringstream os;
  os << "class " << spec.class_id() << " A={";
  const char* sep = "";
  for (const auto& [i, w] : spec.down_set().entries()) {
    os << sep << i << ':' << to_string(w);
    sep = ",";
  }
  os << "} B={";
  sep = "";
  for (const auto& [i, w] : spec.flat_set().entries()) {
    os << sep << i << ':' << to_string(w);
    sep = ",";
  }
  os << '}';
  return os.str();
}

std::string describe(const Failure& f) {
  std::ostringstream os;
  os << "n=" << f.n;
  if (f.m) os << " m=" << *f.m;
  os << " expected " << to_string(f.expected) << " actual " << to_string(f.actual) << " (" << f.source << ")";
  return os.str();
}

// Three parameter sets per class, the last of each with non-unit rational
// weights.
std::vector<StepSetSpec> theorem_specs(bool include_class_three) {
  std::vector<StepSetSpec> specs = {
      make_spec(1, {{1, 1}}, {}),
      make_spec(1, {{1, 1}, {3, 1}}, {}),
      make_spec(1, {{1, q(1, 2)}, {2, 3}}, {{1, q(2, 3)}}),
      make_spec(2, {{1, 1}}, {{1, 1}}),
      make_spec(2, {{5, 1}}, {{1, 1}}),
      make_spec(2, {{1, q(3, 2)}, {2, 1}}, {{2, q(1, 3)}}),
  };
  if (include_class_three) {
    specs.push_back(make_spec(3, {{2, 1}}, {{1, 1}}));
    specs.push_back(make_spec(3, {{3, 1}}, {{1, 1}}));
    specs.push_back(make_spec(3, {{1, q(1, 2)}, {2, 2}}, {{1, 1}, {2, q(1, 3)}}));
  }
  return specs;
}

Outcome criterion_1() {
  Outcome o;
  const auto catalan = catalan_numbers(10);
  auto t0 = Clock::now();
  const SeriesUni f = solve_F(dyck_spec(), 10);
  const double series_s = seconds_since(t0);
  for (int n = 0; n <= 10; ++n) {
    if (f[n] != catalan[n]) {
      o.passed = false;
      o.details.push_back("series f_" + std::to_string(n) + " = " + to_string(f[n]) + ", Catalan " +
                          to_string(catalan[n]));
    }
  }
  t0 = Clock::now();
  const auto brute = nonneg_weight_sums(dyck_spec(), 8, Execution::parallel);
  const double brute_s = seconds_since(t0);
  for (int n = 0; n <= 8; ++n) {
    if (brute[n] != catalan[n]) {
      o.passed = false;
      o.details.push_back("brute f_" + std::to_string(n) + " = " + to_string(brute[n]) + ", Catalan " +
                          to_string(catalan[n]));
    }
  }
  if (series_s >= 1.0) o.passed = false;
  if (brute_s >= 30.0) o.passed = false;
  char buf[200];
  std::snprintf(buf, sizeof buf, "Catalan f_n, series n<=10 in %.3f s (<1 s), brute force n<=8 in %.3f s (<30 s)",
                series_s, brute_s);
  o.summary = buf;
  return o;
}

Outcome criterion_2() {
  Outcome o;
  const auto expected = motzkin_numbers(10);
  const SeriesUni f = solve_F(motzkin_spec(), 10);
  const auto brute = nonneg_weight_sums(motzkin_spec(), 10, Execution::parallel);
  for (int n = 0; n <= 10; ++n) {
    if (f[n] != expected[n] || brute[n] != expected[n]) {
      o.passed = false;
      o.details.push_back("n=" + std::to_string(n) + ": recurrence " + to_string(expected[n]) + ", series " +
                          to_string(f[n]) + ", brute " + to_string(brute[n]));
    }
  }
  o.summary = "Motzkin f_n against M = 1 + zM + z^2 M^2 for n<=10 (series and brute force)";
  return o;
}

Outcome theorem_run(bool motzkin_type) {
  Outcome o;
  const auto t0 = Clock::now();
  const auto specs = theorem_specs(!motzkin_type);
  for (const auto& spec : specs) {
    const auto report = motzkin_type ? check_motzkin_type(spec, 7) : check_dyck_type(spec, 7);
    if (!report.passed) {
      o.passed = false;
      o.details.push_back(describe(spec) + ": " + describe(*report.first_failure));
    }
  }
  const double s = seconds_since(t0);
  if (s >= 300.0) o.passed = false;
  char buf[200];
  std::snprintf(buf, sizeof buf, "%s-type uniformity for %zu specs over %s, n<=7, %.2f s (<300 s)",
                motzkin_type ? "Motzkin" : "Dyck", specs.size(), motzkin_type ? "classes 1-2" : "classes 1-3", s);
  o.summary = buf;
  return o;
}

Outcome criterion_3() { return theorem_run(false); }
Outcome criterion_4() { return theorem_run(true); }

StepSetSpec random_weighted_spec(std::mt19937& rng, int class_id) {
  std::uniform_int_distribution<int> coin(0, 1);
  std::uniform_int_distribution<int> small(1, 5);
  auto pick = [&](bool force_first) {
    std::vector<WeightedIndexSet::Entry> entries;
    for (int i = 1; i <= 3; ++i) {
      if (!(force_first && i == 1) && coin(rng) == 0) continue;
      entries.emplace_back(i, q(small(rng), small(rng)));
    }
    return WeightedIndexSet(entries);
  };
  const WeightedIndexSet down = pick(true);
  return make_spec(class_id, down, pick(false));
}

Outcome criterion_5() {
  Outcome o;
  std::mt19937 rng(20240601);
  int counts[4] = {0, 0, 0, 0};
  const auto t0 = Clock::now();
  for (int trial = 0; trial < 100; ++trial) {
    const int c = 1 + trial % 3;
    const auto spec = random_weighted_spec(rng, c);
    ++counts[c];
    const auto report = check_identities(spec, 10);
    if (!report.passed) {
      o.passed = false;
      o.details.push_back(describe(spec) + ": " + describe(*report.first_failure));
    }
  }
  char buf[200];
  std::snprintf(buf, sizeof buf,
                "identity suite at N=10 for 100 random rational-weight specs (%d/%d/%d per class), %.2f s", counts[1],
                counts[2], counts[3], seconds_since(t0));
  o.summary = buf;
  return o;
}

// Exhaustive search over every path of length 14 on {(1,1),(1,0),(5,-1)}.
// With at most two (5,-1) steps the end height lies in [-2, 14], so scanning
// that range of k covers every path.
Outcome criterion_6() {
  Outcome o;
  const StepSetSpec spec = make_spec(2, {{5, 1}}, {{1, 1}});
  const int length = 14;
  const int want_p = 2, want_lbar = 8, want_ml = 6, want_lp = 10, want_mlp = 8;

  long paths = 0;
  long pointable = 0;
  long matches = 0;
  std::map<int, long> pair_hits_by_final_length;  // (l̄, ml) = (8, 6) by final step length
  std::set<std::pair<int, int>> pairs_with_long_tail;
  std::string witness;
  for (int k = -2; k <= length; ++k) {
    const PathWalker walker(spec, k, length);
    walker.walk([&](const Leaf& leaf) {
      ++paths;
      const WalkState& s = leaf.state;
      if (s.nonpositive == want_lbar && s.abs_min_length == want_ml) ++pair_hits_by_final_length[leaf.final_length];
      if (leaf.final_length <= want_p) return;
      ++pointable;
      pairs_with_long_tail.insert({s.nonpositive, s.abs_min_length});
      const int lp = s.nonpositive + want_p;
      const int mlp = s.abs_min_length + want_p;
      if (s.nonpositive == want_lbar && s.abs_min_length == want_ml && lp == want_lp && mlp == want_mlp) {
        ++matches;
        if (witness.empty()) {
          const Path path = to_path(walker, leaf.letters);
          for (const Step& st : path.steps()) witness += "(" + std::to_string(st.dx) + "," + std::to_string(st.dy) + ")";
        }
      }
    });
  }

  o.passed = matches > 0;
  std::ostringstream sum;
  sum << "published pointed-path example (l=14, p=2, l̄=8, ml=6, lp̄=10, mlp=8): searched " << paths << " paths, " << pointable
      << " admit p=2, " << matches << " match";
  o.summary = sum.str();
  if (!witness.empty()) o.details.push_back("witness " + witness);
  if (matches == 0) {
    for (const auto& [fl, count] : pair_hits_by_final_length) {
      o.details.push_back("(l̄, ml) = (8, 6) occurs on " + std::to_string(count) + " paths with final step length " +
                          std::to_string(fl) + " (p=2 needs length >= 3)");
    }
    std::ostringstream near;
    near << "pairs (l̄, ml) with ml=6 among paths admitting p=2:";
    for (const auto& [lb, ml] : pairs_with_long_tail) {
      if (ml == want_ml) near << " (" << lb << "," << ml << ")";
    }
    o.details.push_back(near.str());
    o.details.push_back("no path satisfies the published values under end-point heights and the rightmost minimum");
  }
  return o;
}

Outcome criterion_7() {
  Outcome o;
  int checked = 0;
  for (const auto& spec : theorem_specs(true)) {
    const SeriesUni f = solve_F(spec, 7);
    const StatTable dyck = dyck_table(spec, 7, Execution::parallel);
    const bool motz = spec.class_id() != 3;
    const StatTable mtab = motz ? motzkin_table(spec, 7, Execution::parallel) : StatTable(7);
    for (int n = 0; n <= 7; ++n) {
      const Rational want = (n + 1) * f[n];
      ++checked;
      if (dyck.row_sum(n) != want || (motz && mtab.row_sum(n) != want)) {
        o.passed = false;
        o.details.push_back(describe(spec) + " n=" + std::to_string(n) + ": row sum " + to_string(dyck.row_sum(n)) +
                            ", (n+1) f_n = " + to_string(want));
      }
    }
  }
  o.summary = "row sums equal (n+1) f_n, " + std::to_string(checked) + " rows over 9 specs, n<=7";
  return o;
}

Outcome criterion_8() {
  Outcome o;
  const PointedStatistic zero = [](const PointedPath&) { return 0; };
  const auto report = scan_statistic(dyck_spec(), 5, zero);
  const auto& f = report.first_failure;
  o.passed = !report.passed && f && f->n == 1 && f->m == 1 && f->expected == 1 && f->actual == 0;
  o.summary = "constant-zero statistic on the Dyck spec is rejected at (1, 1) with expected 1, actual 0";
  if (f) o.details.push_back("first failure " + describe(*f));
  if (report.passed) o.details.push_back("report passed");
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::function<Outcome()>> criteria = {criterion_1, criterion_2, criterion_3, criterion_4,
                                                           criterion_5, criterion_6, criterion_7, criterion_8};
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) {
    const int c = std::atoi(argv[i]);
    if (c < 1 || c > static_cast<int>(criteria.size())) {
      std::fprintf(stderr, "usage: %s [criterion 1-%zu]...\n", argv[0], criteria.size());
      return 2;
    }
    selected.push_back(c);
  }
  if (selected.empty()) {
    for (int c = 1; c <= static_cast<int>(criteria.size()); ++c) selected.push_back(c);
  }

  bool all = true;
  for (int c : selected) {
    const Outcome o = criteria[c - 1]();
    std::printf("%s criterion %d: %s\n", o.passed ? "PASS" : "FAIL", c, o.summary.c_str());
    for (const auto& d : o.details) std::printf("    %s\n", d.c_str());
    all = all && o.passed;
  }
  return all ? 0 : 1;
}
