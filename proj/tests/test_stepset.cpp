#include "chungfeller/stepset.hpp"

#include <random>
#include <stdexcept>

#include <gtest/gtest.h>

#include "test_support.hpp"

namespace cf {
namespace {

Step step(int dx, int dy, int length, const Rational& w, StepKind kind, int index) {
  return Step{kind, index, dx, dy, length, w};
}

TEST(StepSet, DyckClassOne) {
  const auto steps = steps_of(make_spec(1, {{1, 1}}, {}));
  ASSERT_EQ(steps.size(), 2u);
  EXPECT_EQ(steps[0], step(1, 1, 1, 1, StepKind::up, 0));
  EXPECT_EQ(steps[1], step(1, -1, 0, 1, StepKind::down, 1));
}

TEST(StepSet, MotzkinClassTwoAllLengthsOne) {
  const auto steps = steps_of(make_spec(2, {{1, 1}}, {{1, 1}}));
  ASSERT_EQ(steps.size(), 3u);
  EXPECT_EQ(steps[0], step(1, 1, 1, 1, StepKind::up, 0));
  EXPECT_EQ(steps[1], step(1, -1, 1, 1, StepKind::down, 1));
  EXPECT_EQ(steps[2], step(1, 0, 1, 1, StepKind::flat, 1));
}

TEST(StepSet, ClassThreeDownStepDropsByIndex) {
  // Down step of index i is (1, -i) with length 0; {(1,1),(2,0),(1,-3)} is A = {3}, B = {1}.
  const auto two = steps_of(make_spec(3, {{2, 1}}, {{1, 1}}));
  ASSERT_EQ(two.size(), 3u);
  EXPECT_EQ(two[1], step(1, -2, 0, 1, StepKind::down, 2));
  EXPECT_EQ(two[2], step(2, 0, 1, 1, StepKind::flat, 1));

  const auto three = steps_of(make_spec(3, {{3, 1}}, {{1, 1}}));
  EXPECT_EQ(three[0], step(1, 1, 1, 1, StepKind::up, 0));
  EXPECT_EQ(three[1], step(1, -3, 0, 1, StepKind::down, 3));
  EXPECT_EQ(three[2], step(2, 0, 1, 1, StepKind::flat, 1));
}

TEST(StepSet, ClassOneLongDownStep) {
  const auto steps = steps_of(make_spec(1, {{1, 1}, {3, 1}}, {}));
  ASSERT_EQ(steps.size(), 3u);
  EXPECT_EQ(steps[1], step(1, -1, 0, 1, StepKind::down, 1));
  EXPECT_EQ(steps[2], step(5, -1, 2, 1, StepKind::down, 3));
}

TEST(StepSet, ClassTwoLongDownStep) {
  const auto steps = steps_of(make_spec(2, {{5, 1}}, {{1, 1}}));
  ASSERT_EQ(steps.size(), 3u);
  EXPECT_EQ(steps[1], step(5, -1, 5, 1, StepKind::down, 5));
  EXPECT_EQ(steps[2], step(1, 0, 1, 1, StepKind::flat, 1));
}

TEST(StepSet, OrderingIsByAscendingIndexRegardlessOfInput) {
  const auto spec = make_spec(1, {{3, Rational(1, 2)}, {1, 2}}, {{2, 1}, {1, 3}});
  const auto steps = steps_of(spec);
  ASSERT_EQ(steps.size(), 5u);
  EXPECT_EQ(steps[1].index, 1);
  EXPECT_EQ(steps[1].weight, 2);
  EXPECT_EQ(steps[2].index, 3);
  EXPECT_EQ(steps[2].weight, Rational(1, 2));
  EXPECT_EQ(steps[3].kind, StepKind::flat);
  EXPECT_EQ(steps[3].index, 1);
  EXPECT_EQ(steps[4].index, 2);
  EXPECT_EQ(steps_of(spec), steps_of(spec));
}

TEST(StepSet, RejectsBadIndicesAndClasses) {
  EXPECT_THROW(WeightedIndexSet({{0, 1}}), std::invalid_argument);
  EXPECT_THROW(WeightedIndexSet({{-2, 1}}), std::invalid_argument);
  EXPECT_THROW(WeightedIndexSet({{2, 1}, {2, 3}}), std::invalid_argument);
  EXPECT_THROW(make_spec(0, {}, {}), std::invalid_argument);
  EXPECT_THROW(make_spec(4, {{1, 1}}, {}), std::invalid_argument);
}

TEST(StepSet, EmptySetsAndZeroWeightsAccepted) {
  const auto empty = make_spec(2, {}, {});
  ASSERT_EQ(empty.steps().size(), 1u);
  EXPECT_EQ(empty.steps()[0].kind, StepKind::up);

  const auto zero = make_spec(1, {{1, 0}}, {});
  EXPECT_EQ(zero.steps()[1].weight, 0);
}

TEST(StepSet, LengthsMatchClassTableForRandomSpecs) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const int cls = 1 + trial % 3;
    const auto spec = testing::random_spec(rng, cls, 6);
    for (const Step& s : spec.steps()) {
      if (s.kind == StepKind::up) {
        EXPECT_EQ(s.length, 1);
        EXPECT_EQ(s.weight, 1);
        continue;
      }
      const int i = s.index;
      const bool down = s.kind == StepKind::down;
      const int expected_len = down ? (cls == 1 ? i - 1 : cls == 2 ? i : 0) : i;
      EXPECT_EQ(s.length, expected_len);
      EXPECT_EQ(s.weight, down ? spec.down_set().weight(i) : spec.flat_set().weight(i));
      EXPECT_NE(std::pair(s.dx, s.dy), std::pair(0, 0));
      // Zero length exactly for class 1 with i = 1 and every class 3 down step.
      EXPECT_EQ(s.length == 0, down && ((cls == 1 && i == 1) || cls == 3));
    }
  }
}

}  // namespace
}  // namespace cf
