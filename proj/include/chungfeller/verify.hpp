#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chungfeller/enumerate.hpp"
#include "chungfeller/rational.hpp"
#include "chungfeller/series.hpp"
#include "chungfeller/stepset.hpp"

namespace cf {

struct Failure {
  int n = 0;
  std::optional<int> m;  // absent for per-n comparisons such as f_n itself
  Rational expected;
  Rational actual;
  std::string source;  // which computation disagreed

  friend bool operator==(const Failure&, const Failure&) = default;
};

struct VerificationReport {
  std::string check_name;
  std::optional<StepSetSpec> spec;  // absent for the fixed-spec sequence check
  int n_max = 0;
  bool passed = true;
  std::optional<Failure> first_failure;
  std::vector<Failure> violations;  // every failure, filled in verbose mode
  std::vector<std::string> notes;

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

struct VerifyOptions {
  bool verbose = false;
  Execution exec = Execution::parallel;
};

// Rows ascend in n. Within a row the cells m = 1..n are compared before m = 0:
// bucket 0 is where a degenerate statistic piles up its mass, so the first
// reported cell is one the statistic failed to reach.

// Brute-force f̄_{n,m} against brute-force f_n, the F series, and G * P.
VerificationReport check_dyck_type(const StepSetSpec& spec, int n_max, const VerifyOptions& opts = {});
// Brute-force ḡ_{n,m} against f_n and the closed-form M series.
// Throws OutOfScope for class 3.
VerificationReport check_motzkin_type(const StepSetSpec& spec, int n_max, const VerifyOptions& opts = {});
// F residual, G * P = D closed form and, for classes 1 and 2,
// M closed = M summation = D closed form, all to order n_max.
VerificationReport check_identities(const StepSetSpec& spec, int order, const VerifyOptions& opts = {});
// F for the Dyck spec against the binomial Catalan formula and F for the
// Motzkin spec against the Motzkin recurrence.
VerificationReport check_known_sequences(int n_max, const VerifyOptions& opts = {});
// Whether an arbitrary pointed-path statistic is uniform with value f_n.
VerificationReport scan_statistic(const StepSetSpec& spec, int n_max, const PointedStatistic& stat,
                                  const VerifyOptions& opts = {});

// c_n = binom(2n, n) / (n + 1).
std::vector<Rational> catalan_numbers(int n_max);
// m_n from M = 1 + z M + z^2 M^2: m_n = m_{n-1} + sum_{k=0}^{n-2} m_k m_{n-2-k}.
std::vector<Rational> motzkin_numbers(int n_max);

}  // namespace cf
