#include "chungfeller/verify.hpp"

#include <random>
#include <stdexcept>

#include <gtest/gtest.h>

#include "test_support.hpp"

namespace cf {
namespace {

const PointedStatistic kNonpositive = [](const PointedPath& p) { return nonpositive_pointed_length(p); };
const PointedStatistic kAbsMin = [](const PointedPath& p) { return abs_min_pointed_length(p); };
const PointedStatistic kZero = [](const PointedPath&) { return 0; };

TEST(Verify, DyckAndMotzkinSpecsPass) {
  for (const auto& spec : {dyck_spec(), motzkin_spec()}) {
    const auto dyck = check_dyck_type(spec, 6);
    EXPECT_TRUE(dyck.passed);
    EXPECT_FALSE(dyck.first_failure);
    EXPECT_EQ(dyck.check_name, "dyck_type");
    EXPECT_EQ(dyck.n_max, 6);
    EXPECT_EQ(dyck.spec, spec);
    EXPECT_TRUE(check_motzkin_type(spec, 6).passed);
    EXPECT_TRUE(check_identities(spec, 8).passed);
  }
}

TEST(Verify, KnownSequences) {
  const auto r = check_known_sequences(15);
  EXPECT_TRUE(r.passed);
  EXPECT_FALSE(r.spec);
  EXPECT_EQ(catalan_numbers(6), (std::vector<Rational>{1, 1, 2, 5, 14, 42, 132}));
  EXPECT_EQ(motzkin_numbers(7), (std::vector<Rational>{1, 1, 2, 4, 9, 21, 51, 127}));
}

TEST(Verify, ClassThreeMotzkinIsOutOfScope) {
  const auto spec = make_spec(3, {{2, 1}}, {{1, 1}});
  EXPECT_THROW(check_motzkin_type(spec, 4), OutOfScope);
  const auto ids = check_identities(spec, 8);
  EXPECT_TRUE(ids.passed);
  ASSERT_EQ(ids.notes.size(), 1u);
  EXPECT_NE(ids.notes[0].find("class 3"), std::string::npos);
  EXPECT_TRUE(check_dyck_type(spec, 6).passed);
}

TEST(Verify, RejectsNegativeRange) {
  EXPECT_THROW(check_dyck_type(dyck_spec(), -1), std::invalid_argument);
  EXPECT_THROW(check_known_sequences(-1), std::invalid_argument);
}

TEST(Verify, ConstantStatisticFailsAtFirstPositiveBucket) {
  const auto r = scan_statistic(dyck_spec(), 5, kZero);
  EXPECT_FALSE(r.passed);
  ASSERT_TRUE(r.first_failure);
  EXPECT_EQ(r.first_failure->n, 1);
  EXPECT_EQ(r.first_failure->m, 1);
  EXPECT_EQ(r.first_failure->expected, 1);
  EXPECT_EQ(r.first_failure->actual, 0);
  EXPECT_TRUE(r.violations.empty());
}

TEST(Verify, UniformStatisticsPassTheScan) {
  EXPECT_TRUE(scan_statistic(dyck_spec(), 5, kNonpositive).passed);
  EXPECT_TRUE(scan_statistic(motzkin_spec(), 5, kAbsMin).passed);
  EXPECT_TRUE(scan_statistic(make_spec(1, {{1, 1}, {3, 1}}, {}), 5, kAbsMin).passed);
}

TEST(Verify, OutOfRangeStatisticIsReported) {
  const PointedStatistic length = [](const PointedPath& p) { return total_length(p.path()); };
  const auto r = scan_statistic(dyck_spec(), 4, length);
  EXPECT_FALSE(r.passed);
  ASSERT_TRUE(r.first_failure);
  EXPECT_EQ(r.first_failure->n, 1);
  EXPECT_EQ(r.first_failure->source, "statistic value outside [0, n]");
}

TEST(Verify, VerboseCollectsEveryViolation) {
  const auto quiet = scan_statistic(motzkin_spec(), 4, kZero);
  const auto loud = scan_statistic(motzkin_spec(), 4, kZero, {.verbose = true});
  EXPECT_FALSE(loud.passed);
  EXPECT_EQ(loud.first_failure, quiet.first_failure);
  ASSERT_FALSE(loud.violations.empty());
  EXPECT_EQ(loud.violations.front(), *loud.first_failure);
  // Row n has n + 1 cells, all wrong: cells 1..n are empty and cell 0 holds (n + 1) f_n.
  EXPECT_EQ(loud.violations.size(), 2u + 3u + 4u + 5u);
  for (const auto& v : loud.violations) EXPECT_TRUE(v.m);
}

TEST(Verify, DeterministicAcrossRunsAndExecutionModes) {
  const auto spec = make_spec(2, {{1, Rational(1, 2)}, {2, 1}}, {{1, 2}});
  const VerifyOptions serial{.verbose = true, .exec = Execution::serial};
  const VerifyOptions parallel{.verbose = true, .exec = Execution::parallel};
  EXPECT_EQ(check_dyck_type(spec, 5, serial), check_dyck_type(spec, 5, parallel));
  EXPECT_EQ(check_motzkin_type(spec, 5, serial), check_motzkin_type(spec, 5, parallel));
  EXPECT_EQ(scan_statistic(spec, 5, kZero, serial), scan_statistic(spec, 5, kZero, parallel));
  EXPECT_EQ(check_identities(spec, 7), check_identities(spec, 7));
}

TEST(VerifyProperties, RandomWeightedSpecs) {
  std::mt19937 rng(77);
  for (int trial = 0; trial < 18; ++trial) {
    const int c = 1 + trial % 3;
    const auto spec = testing::random_spec(rng, c, 3, trial % 2 == 0);
    EXPECT_TRUE(check_dyck_type(spec, 6).passed) << "trial " << trial;
    if (c != 3) EXPECT_TRUE(check_motzkin_type(spec, 6).passed) << "trial " << trial;
    EXPECT_TRUE(check_identities(spec, 9).passed) << "trial " << trial;
    // f_n from the tables agrees with the independent coefficient recursion.
    const auto f = testing::oracle_f(spec, 6);
    const StatTable t = dyck_table(spec, 6);
    for (int n = 0; n <= 6; ++n) EXPECT_EQ(t.row_sum(n), (n + 1) * f[n]);
  }
}

}  // namespace
}  // namespace cf
