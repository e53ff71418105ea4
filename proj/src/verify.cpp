#include "chungfeller/verify.hpp"

#include <span>
#include <utility>

namespace cf {

namespace {

class FailureLog {
 public:
  FailureLog(VerificationReport& report, bool verbose) : report_(report), verbose_(verbose) {}

  // True once a non-verbose log has seen its first failure.
  bool done() const { return !verbose_ && !report_.passed; }

  void compare(int n, std::optional<int> m, const Rational& expected, const Rational& actual, std::string source) {
    if (done() || expected == actual) return;
    record({n, m, expected, actual, std::move(source)});
  }

  void record(Failure f) {
    if (done()) return;
    report_.passed = false;
    if (!report_.first_failure) report_.first_failure = f;
    if (verbose_) report_.violations.push_back(std::move(f));
  }

  void compare_row(int n, std::span<const Rational> row, const Rational& expected, const std::string& source) {
    for (int m = 1; m < static_cast<int>(row.size()); ++m) compare(n, m, expected, row[m], source);
    if (!row.empty()) compare(n, 0, expected, row[0], source);
  }

 private:
  VerificationReport& report_;
  bool verbose_;
};

VerificationReport make_report(std::string name, std::optional<StepSetSpec> spec, int n_max) {
  if (n_max < 0) throw std::invalid_argument("n_max must be >= 0");
  VerificationReport r;
  r.check_name = std::move(name);
  r.spec = std::move(spec);
  r.n_max = n_max;
  return r;
}

}  // namespace

VerificationReport check_dyck_type(const StepSetSpec& spec, int n_max, const VerifyOptions& opts) {
  VerificationReport report = make_report("dyck_type", spec, n_max);
  const auto f_brute = nonneg_weight_sums(spec, n_max, opts.exec);
  const SeriesUni f = solve_F(spec, n_max);
  const StatTable table = dyck_table(spec, n_max, opts.exec);
  const SeriesBi d = build_D_product(build_G(spec, f, n_max), build_P(spec, f, n_max));

  FailureLog log(report, opts.verbose);
  for (int n = 0; n <= n_max && !log.done(); ++n) {
    log.compare(n, std::nullopt, f[n], f_brute[n], "nonnegative path enumeration vs F series");
    log.compare_row(n, table.row(n), f[n], "pointed path enumeration by non-positive pointed length");
    log.compare_row(n, d.row(n), f[n], "series G * P");
  }
  return report;
}

VerificationReport check_motzkin_type(const StepSetSpec& spec, int n_max, const VerifyOptions& opts) {
  if (spec.class_id() == 3) {
    throw OutOfScope("Motzkin-type check is out of scope for class 3: the result is only established for classes 1 and 2");
  }
  VerificationReport report = make_report("motzkin_type", spec, n_max);
  const auto f_brute = nonneg_weight_sums(spec, n_max, opts.exec);
  const SeriesUni f = solve_F(spec, n_max);
  const StatTable table = motzkin_table(spec, n_max, opts.exec);
  const SeriesBi m_series = build_M(spec, f, build_P(spec, f, n_max), n_max);

  FailureLog log(report, opts.verbose);
  for (int n = 0; n <= n_max && !log.done(); ++n) {
    log.compare(n, std::nullopt, f[n], f_brute[n], "nonnegative path enumeration vs F series");
    log.compare_row(n, table.row(n), f[n], "pointed path enumeration by absolute minimum pointed length");
    log.compare_row(n, m_series.row(n), f[n], "series M closed form");
  }
  return report;
}

VerificationReport check_identities(const StepSetSpec& spec, int order, const VerifyOptions& opts) {
  VerificationReport report = make_report("identities", spec, order);
  FailureLog log(report, opts.verbose);

  const SeriesUni f = solve_F(spec, order);
  const SeriesUni residual = f_residual(spec, f);
  for (int n = 0; n <= order; ++n) log.compare(n, std::nullopt, 0, residual[n], "F functional equation residual");

  const SeriesBi p = build_P(spec, f, order);
  const SeriesBi d_closed = build_D_closed(f, order);
  const SeriesBi d_product = build_D_product(build_G(spec, f, order), p);
  for (int n = 0; n <= order; ++n) {
    for (int m = 0; m <= n; ++m) log.compare(n, m, d_closed.at(n, m), d_product.at(n, m), "G * P vs D closed form");
  }

  if (spec.class_id() == 3) {
    report.notes.emplace_back("M identities skipped: out of scope for class 3");
    return report;
  }
  const SeriesBi m_closed = build_M(spec, f, p, order);
  const SeriesBi m_sum = build_M_sum(spec, f, p, order);
  for (int n = 0; n <= order; ++n) {
    for (int m = 0; m <= n; ++m) {
      log.compare(n, m, d_closed.at(n, m), m_closed.at(n, m), "M closed form vs D closed form");
      log.compare(n, m, m_closed.at(n, m), m_sum.at(n, m), "M summation form vs M closed form");
    }
  }
  return report;
}

std::vector<Rational> catalan_numbers(int n_max) {
  std::vector<Rational> c;
  for (int n = 0; n <= n_max; ++n) {
    c.push_back(binomial(2UL * static_cast<unsigned long>(n), static_cast<unsigned long>(n)) / Rational(n + 1));
  }
  return c;
}

std::vector<Rational> motzkin_numbers(int n_max) {
  std::vector<Rational> m;
  for (int n = 0; n <= n_max; ++n) {
    if (n == 0) {
      m.emplace_back(1);
      continue;
    }
    Rational v = m[n - 1];
    for (int k = 0; k <= n - 2; ++k) v += m[k] * m[n - 2 - k];
    m.push_back(v);
  }
  return m;
}

VerificationReport check_known_sequences(int n_max, const VerifyOptions& opts) {
  VerificationReport report = make_report("known_sequences", std::nullopt, n_max);
  FailureLog log(report, opts.verbose);
  const SeriesUni dyck = solve_F(dyck_spec(), n_max);
  const SeriesUni motzkin = solve_F(motzkin_spec(), n_max);
  const auto catalan = catalan_numbers(n_max);
  const auto motz = motzkin_numbers(n_max);
  for (int n = 0; n <= n_max; ++n) {
    log.compare(n, std::nullopt, catalan[n], dyck[n], "Dyck spec F vs binomial Catalan formula");
    log.compare(n, std::nullopt, motz[n], motzkin[n], "Motzkin spec F vs Motzkin recurrence");
  }
  return report;
}

VerificationReport scan_statistic(const StepSetSpec& spec, int n_max, const PointedStatistic& stat,
                                  const VerifyOptions& opts) {
  VerificationReport report = make_report("scan_statistic", spec, n_max);
  FailureLog log(report, opts.verbose);
  const auto f = nonneg_weight_sums(spec, n_max, opts.exec);
  try {
    const StatTable table = statistic_table(spec, 1, n_max, stat, opts.exec);
    for (int n = 0; n <= n_max && !log.done(); ++n) {
      log.compare_row(n, table.row(n), f[n], "pointed path enumeration by candidate statistic");
    }
  } catch (const StatisticRangeError& e) {
    log.record({e.n(), e.value(), Rational(e.n()), Rational(e.value()), "statistic value outside [0, n]"});
  }
  return report;
}

}  // namespace cf
