#pragma once

#include <cstddef>
#include <cstdint>
#include <exception>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "chungfeller/path.hpp"
#include "chungfeller/rational.hpp"
#include "chungfeller/stepset.hpp"

namespace cf {

enum class Execution { serial, parallel };

// Triangular table t[n][m], 0 <= m <= n <= n_max, of exact rationals.
class StatTable {
 public:
  explicit StatTable(int n_max);

  int n_max() const { return n_max_; }
  const Rational& at(int n, int m) const { return rows_.at(n).at(m); }
  Rational& at(int n, int m) { return rows_.at(n).at(m); }
  std::span<const Rational> row(int n) const { return rows_.at(n); }
  Rational row_sum(int n) const;

  // Entrywise sum; both tables must have the same n_max.
  void merge(const StatTable& other);

  friend bool operator==(const StatTable&, const StatTable&) = default;

 private:
  int n_max_;
  std::vector<std::vector<Rational>> rows_;
};

// Statistics of a DFS prefix, updated one step at a time.
struct WalkState {
  int height = 0;
  int remaining = 0;        // length budget still to spend
  int nonpositive = 0;      // l̄ of the prefix
  int lowest = 0;           // minimum y over the prefix's points
  int abs_min_length = 0;   // ml of the prefix
  int consumed = 0;         // l of the prefix
  Rational weight = 1;
};

// A complete path reached by the walker. Letters index spec.steps().
struct Leaf {
  std::span<const std::uint32_t> letters;
  const WalkState& state;
  int final_length;  // length of the last step, 0 for the empty path
};

// Depth-first generator of every word over the step alphabet with total
// length `total_length` that ends at height `end_height` and, if `floor` is
// set, never goes below it.
//
// Termination: the potential remaining + (height + remaining - end_height)
// starts at 2 * total_length - end_height, is kept >= 0 by the prune, and
// drops by at least one with every step (an up step spends one unit of
// length; a zero-length down step spends height). max_steps() is that bound
// and the walker checks it on every push.
class PathWalker {
 public:
  // Throws std::invalid_argument for a negative length, a floor above the
  // origin, or an alphabet with a zero-length step that does not descend.
  PathWalker(const StepSetSpec& spec, int end_height, int total_length, std::optional<int> floor = std::nullopt);

  std::size_t max_steps() const { return max_steps_; }

  // Serial reference traversal, visiting leaves in deterministic order.
  template <class Visitor>
  void walk(Visitor&& visit) const {
    std::vector<std::uint32_t> letters;
    letters.reserve(max_steps_);
    WalkState state;
    state.remaining = total_length_;
    descend(letters, state, visit);
  }

  // Runs one accumulator per frontier subtree and merges them in traversal
  // order, so a parallel run yields exactly what a serial run yields.
  // Acc needs operator()(const Leaf&) and merge(Acc&&).
  template <class Acc, class Make>
  Acc reduce(Execution exec, Make make) const;

  std::span<const Step> alphabet() const { return alphabet_; }
  const StepSetSpec& spec() const { return spec_; }

 private:
  struct WorkItem {
    std::vector<std::uint32_t> letters;
    WalkState state;
    bool leaf_only;  // emit this prefix as a leaf, do not descend
  };

  bool is_leaf(const WalkState& s) const { return s.remaining == 0 && s.height == end_height_; }
  bool admissible(const WalkState& s, const Step& step) const;
  void apply(WalkState& s, const Step& step) const;
  int final_length(std::span<const std::uint32_t> letters) const {
    return letters.empty() ? 0 : alphabet_[letters.back()].length;
  }
  void check_depth(std::size_t depth) const;

  template <class Visitor>
  void descend(std::vector<std::uint32_t>& letters, const WalkState& state, Visitor& visit) const {
    if (is_leaf(state)) visit(Leaf{letters, state, final_length(letters)});
    for (std::uint32_t i = 0; i < alphabet_.size(); ++i) {
      const Step& step = alphabet_[i];
      if (!admissible(state, step)) continue;
      WalkState next = state;
      apply(next, step);
      letters.push_back(i);
      check_depth(letters.size());
      descend(letters, next, visit);
      letters.pop_back();
    }
  }

  std::vector<WorkItem> frontier(std::size_t depth) const;
  void frontier_from(std::vector<std::uint32_t>& letters, const WalkState& state, std::size_t depth,
                     std::vector<WorkItem>& out) const;

  StepSetSpec spec_;
  std::vector<Step> alphabet_;
  int end_height_;
  int total_length_;
  std::optional<int> floor_;
  bool has_down_;
  std::size_t max_steps_;
};

std::size_t frontier_depth();

template <class Acc, class Make>
Acc PathWalker::reduce(Execution exec, Make make) const {
  Acc total = make();
  if (exec == Execution::serial) {
    walk(total);
    return total;
  }

  const std::vector<WorkItem> items = frontier(frontier_depth());
  std::vector<Acc> partial;
  partial.reserve(items.size());
  for (std::size_t i = 0; i < items.size(); ++i) partial.push_back(make());
  std::vector<std::exception_ptr> errors(items.size());

  const auto count = static_cast<std::int64_t>(items.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < count; ++i) {
    try {
      const WorkItem& item = items[i];
      if (item.leaf_only) {
        partial[i](Leaf{item.letters, item.state, final_length(item.letters)});
      } else {
        std::vector<std::uint32_t> letters = item.letters;
        letters.reserve(max_steps_);
        descend(letters, item.state, partial[i]);
      }
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }

  for (std::size_t i = 0; i < items.size(); ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    total.merge(std::move(partial[i]));
  }
  return total;
}

// Materializes a leaf as a Path over the walker's alphabet.
Path to_path(const PathWalker& walker, std::span<const std::uint32_t> letters);

// Every (S,k)-lattice path of the given total length.
std::vector<Path> enumerate_paths(const StepSetSpec& spec, int k, int total_length,
                                  Execution exec = Execution::serial);
// (S,0)-paths that never go below y = 0.
std::vector<Path> enumerate_nonnegative(const StepSetSpec& spec, int total_length,
                                        Execution exec = Execution::serial);
// (S,-depth)-paths that never go below y = -depth.
std::vector<Path> enumerate_above_floor(const StepSetSpec& spec, int depth, int total_length,
                                        Execution exec = Execution::serial);
// Pointed (S,k)-paths: final step of length >= 1, every mark 0 <= p < l(s_m).
// Throws std::invalid_argument if total_length < 1.
std::vector<PointedPath> enumerate_pointed(const StepSetSpec& spec, int k, int total_length,
                                           Execution exec = Execution::serial);

// Weighted counts of pointed (S,1)-paths of length n + 1 bucketed by
// l̄(L) + p. t[0][0] = 1 by convention.
StatTable dyck_table(const StepSetSpec& spec, int n_max, Execution exec = Execution::serial);
// Same population bucketed by ml(L) + p.
StatTable motzkin_table(const StepSetSpec& spec, int n_max, Execution exec = Execution::serial);
// f_n: weighted count of nonnegative (S,0)-paths of length n.
std::vector<Rational> nonneg_weight_sums(const StepSetSpec& spec, int n_max, Execution exec = Execution::serial);
// Weighted count of (S,-depth)-nonnegative paths of each length n <= n_max.
std::vector<Rational> floor_weight_sums(const StepSetSpec& spec, int depth, int n_max,
                                        Execution exec = Execution::serial);

using PointedStatistic = std::function<int(const PointedPath&)>;

// Thrown when a statistic maps a path of length n + 1 outside [0, n].
class StatisticRangeError : public std::out_of_range {
 public:
  StatisticRangeError(int n, int value)
      : std::out_of_range("statistic value " + std::to_string(value) + " outside [0, " + std::to_string(n) +
                          "] at n = " + std::to_string(n)),
        n_(n),
        value_(value) {}
  int n() const { return n_; }
  int value() const { return value_; }

 private:
  int n_;
  int value_;
};

// Pointed (S,k)-paths of length n + 1 bucketed by an arbitrary statistic.
StatTable statistic_table(const StepSetSpec& spec, int k, int n_max, const PointedStatistic& stat,
                          Execution exec = Execution::serial);

}  // namespace cf
