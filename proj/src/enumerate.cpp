#include "chungfeller/enumerate.hpp"

#include <algorithm>
#include <utility>

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace cf {

StatTable::StatTable(int n_max) : n_max_(n_max) {
  if (n_max < 0) throw std::invalid_argument("n_max must be >= 0");
  rows_.resize(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) rows_[n].assign(static_cast<std::size_t>(n) + 1, Rational(0));
}

Rational StatTable::row_sum(int n) const {
  Rational s = 0;
  for (const Rational& v : row(n)) s += v;
  return s;
}

void StatTable::merge(const StatTable& other) {
  if (other.n_max_ != n_max_) throw std::invalid_argument("StatTable::merge: n_max mismatch");
  for (int n = 0; n <= n_max_; ++n) {
    for (int m = 0; m <= n; ++m) rows_[n][m] += other.rows_[n][m];
  }
}

PathWalker::PathWalker(const StepSetSpec& spec, int end_height, int total_length, std::optional<int> floor)
    : spec_(spec), alphabet_(steps_of(spec)), end_height_(end_height), total_length_(total_length), floor_(floor) {
  if (total_length < 0) throw std::invalid_argument("total length must be >= 0");
  if (floor_ && *floor_ > 0) throw std::invalid_argument("floor must be <= 0 (paths start at the origin)");
  for (const Step& s : alphabet_) {
    if (s.length < 0 || (s.length == 0 && s.dy >= 0)) {
      throw std::invalid_argument("enumeration cannot terminate: a zero-length step must descend");
    }
  }
  has_down_ = std::any_of(alphabet_.begin(), alphabet_.end(), [](const Step& s) { return s.dy < 0; });
  const long bound = 2L * total_length - end_height;
  max_steps_ = bound < 0 ? 0 : static_cast<std::size_t>(bound);
}

bool PathWalker::admissible(const WalkState& s, const Step& step) const {
  if (step.length > s.remaining) return false;
  const int height = s.height + step.dy;
  const int remaining = s.remaining - step.length;
  // Up steps are the only way up and each costs one unit of length.
  if (height + remaining < end_height_) return false;
  if (!has_down_ && height > end_height_) return false;
  if (floor_ && height < *floor_) return false;
  return true;
}

void PathWalker::apply(WalkState& s, const Step& step) const {
  s.height += step.dy;
  s.remaining -= step.length;
  s.consumed += step.length;
  s.weight *= step.weight;
  if (s.height <= 0) s.nonpositive += step.length;
  // Rightmost minimum: ties move the position right.
  if (s.height <= s.lowest) {
    s.lowest = s.height;
    s.abs_min_length = s.consumed;
  }
}

void PathWalker::check_depth(std::size_t depth) const {
  if (depth > max_steps_) throw std::logic_error("path walker exceeded its step-count bound");
}

void PathWalker::frontier_from(std::vector<std::uint32_t>& letters, const WalkState& state, std::size_t depth,
                               std::vector<WorkItem>& out) const {
  if (letters.size() == depth) {
    out.push_back({letters, state, false});
    return;
  }
  if (is_leaf(state)) out.push_back({letters, state, true});
  for (std::uint32_t i = 0; i < alphabet_.size(); ++i) {
    const Step& step = alphabet_[i];
    if (!admissible(state, step)) continue;
    WalkState next = state;
    apply(next, step);
    letters.push_back(i);
    check_depth(letters.size());
    frontier_from(letters, next, depth, out);
    letters.pop_back();
  }
}

std::vector<PathWalker::WorkItem> PathWalker::frontier(std::size_t depth) const {
  std::vector<WorkItem> out;
  std::vector<std::uint32_t> letters;
  WalkState state;
  state.remaining = total_length_;
  frontier_from(letters, state, depth, out);
  return out;
}

std::size_t frontier_depth() {
#if defined(_OPENMP)
  const int threads = omp_get_max_threads();
  return threads <= 1 ? 2 : (threads <= 8 ? 3 : 4);
#else
  return 2;
#endif
}

Path to_path(const PathWalker& walker, std::span<const std::uint32_t> letters) {
  std::vector<Step> steps;
  steps.reserve(letters.size());
  for (std::uint32_t i : letters) steps.push_back(walker.alphabet()[i]);
  return Path(walker.spec(), std::move(steps));
}

namespace {

struct PathCollector {
  const PathWalker* walker;
  std::vector<Path> paths;

  void operator()(const Leaf& leaf) { paths.push_back(to_path(*walker, leaf.letters)); }
  void merge(PathCollector&& other) {
    paths.insert(paths.end(), std::make_move_iterator(other.paths.begin()),
                 std::make_move_iterator(other.paths.end()));
  }
};

struct PointedCollector {
  const PathWalker* walker;
  std::vector<PointedPath> paths;

  void operator()(const Leaf& leaf) {
    if (leaf.final_length < 1) return;
    const Path path = to_path(*walker, leaf.letters);
    for (int p = 0; p < leaf.final_length; ++p) paths.emplace_back(path, p);
  }
  void merge(PointedCollector&& other) {
    paths.insert(paths.end(), std::make_move_iterator(other.paths.begin()),
                 std::make_move_iterator(other.paths.end()));
  }
};

struct WeightSum {
  Rational total = 0;
  void operator()(const Leaf& leaf) { total += leaf.state.weight; }
  void merge(WeightSum&& other) { total += other.total; }
};

enum class PointedStat { nonpositive, abs_min };

// One row of a pointed-path table: length n + 1 paths, bucket = stat + p.
struct RowBuckets {
  PointedStat stat;
  std::vector<Rational> cells;

  void operator()(const Leaf& leaf) {
    if (leaf.final_length < 1) return;
    const int base = stat == PointedStat::nonpositive ? leaf.state.nonpositive : leaf.state.abs_min_length;
    for (int p = 0; p < leaf.final_length; ++p) cells.at(static_cast<std::size_t>(base + p)) += leaf.state.weight;
  }
  void merge(RowBuckets&& other) {
    for (std::size_t m = 0; m < cells.size(); ++m) cells[m] += other.cells[m];
  }
};

struct StatisticBuckets {
  const PathWalker* walker;
  const PointedStatistic* stat;
  int n;
  std::vector<Rational> cells;

  void operator()(const Leaf& leaf) {
    if (leaf.final_length < 1) return;
    const Path path = to_path(*walker, leaf.letters);
    for (int p = 0; p < leaf.final_length; ++p) {
      const int value = (*stat)(PointedPath(path, p));
      if (value < 0 || value > n) throw StatisticRangeError(n, value);
      cells[static_cast<std::size_t>(value)] += leaf.state.weight;
    }
  }
  void merge(StatisticBuckets&& other) {
    for (std::size_t m = 0; m < cells.size(); ++m) cells[m] += other.cells[m];
  }
};

StatTable pointed_table(const StepSetSpec& spec, int n_max, PointedStat stat, Execution exec) {
  StatTable table(n_max);
  table.at(0, 0) = 1;
  for (int n = 1; n <= n_max; ++n) {
    const PathWalker walker(spec, 1, n + 1);
    auto row = walker.reduce<RowBuckets>(exec, [&] {
      return RowBuckets{stat, std::vector<Rational>(static_cast<std::size_t>(n) + 1, Rational(0))};
    });
    for (int m = 0; m <= n; ++m) table.at(n, m) = row.cells[m];
  }
  return table;
}

}  // namespace

std::vector<Path> enumerate_paths(const StepSetSpec& spec, int k, int total_length, Execution exec) {
  const PathWalker walker(spec, k, total_length);
  return walker.reduce<PathCollector>(exec, [&] { return PathCollector{&walker, {}}; }).paths;
}

std::vector<Path> enumerate_nonnegative(const StepSetSpec& spec, int total_length, Execution exec) {
  const PathWalker walker(spec, 0, total_length, 0);
  return walker.reduce<PathCollector>(exec, [&] { return PathCollector{&walker, {}}; }).paths;
}

std::vector<Path> enumerate_above_floor(const StepSetSpec& spec, int depth, int total_length, Execution exec) {
  if (depth < 0) throw std::invalid_argument("floor depth must be >= 0");
  const PathWalker walker(spec, -depth, total_length, -depth);
  return walker.reduce<PathCollector>(exec, [&] { return PathCollector{&walker, {}}; }).paths;
}

std::vector<PointedPath> enumerate_pointed(const StepSetSpec& spec, int k, int total_length, Execution exec) {
  if (total_length < 1) throw std::invalid_argument("a pointed path has total length >= 1");
  const PathWalker walker(spec, k, total_length);
  return walker.reduce<PointedCollector>(exec, [&] { return PointedCollector{&walker, {}}; }).paths;
}

StatTable dyck_table(const StepSetSpec& spec, int n_max, Execution exec) {
  return pointed_table(spec, n_max, PointedStat::nonpositive, exec);
}

StatTable motzkin_table(const StepSetSpec& spec, int n_max, Execution exec) {
  return pointed_table(spec, n_max, PointedStat::abs_min, exec);
}

std::vector<Rational> floor_weight_sums(const StepSetSpec& spec, int depth, int n_max, Execution exec) {
  if (n_max < 0) throw std::invalid_argument("n_max must be >= 0");
  if (depth < 0) throw std::invalid_argument("floor depth must be >= 0");
  std::vector<Rational> sums;
  sums.reserve(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) {
    const PathWalker walker(spec, -depth, n, -depth);
    sums.push_back(walker.reduce<WeightSum>(exec, [] { return WeightSum{}; }).total);
  }
  return sums;
}

std::vector<Rational> nonneg_weight_sums(const StepSetSpec& spec, int n_max, Execution exec) {
  auto sums = floor_weight_sums(spec, 0, n_max, exec);
  sums.at(0) = 1;
  return sums;
}

StatTable statistic_table(const StepSetSpec& spec, int k, int n_max, const PointedStatistic& stat, Execution exec) {
  StatTable table(n_max);
  table.at(0, 0) = 1;
  for (int n = 1; n <= n_max; ++n) {
    const PathWalker walker(spec, k, n + 1);
    auto row = walker.reduce<StatisticBuckets>(exec, [&] {
      return StatisticBuckets{&walker, &stat, n, std::vector<Rational>(static_cast<std::size_t>(n) + 1, Rational(0))};
    });
    for (int m = 0; m <= n; ++m) table.at(n, m) = row.cells[m];
  }
  return table;
}

}  // namespace cf
