#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "chungfeller/rational.hpp"

namespace cf {

// Finite map from positive index i to weight. Holds the sets A and B together
// with the weights a_i, b_i.
class WeightedIndexSet {
 public:
  using Entry = std::pair<int, Rational>;

  WeightedIndexSet() = default;
  // Throws std::invalid_argument on an index < 1 or a repeated index.
  WeightedIndexSet(std::initializer_list<Entry> entries);
  explicit WeightedIndexSet(std::span<const Entry> entries);

  // Entries sorted by ascending index.
  std::span<const Entry> entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }
  bool contains(int index) const;
  // Zero when the index is absent.
  Rational weight(int index) const;
  int max_index() const { return entries_.empty() ? 0 : entries_.back().first; }

  friend bool operator==(const WeightedIndexSet&, const WeightedIndexSet&) = default;

 private:
  std::vector<Entry> entries_;
};

enum class StepKind { up, down, flat };

struct Step {
  StepKind kind = StepKind::up;
  int index = 0;  // i for down/flat steps, 0 for the up step
  int dx = 1;
  int dy = 1;
  int length = 1;
  Rational weight = 1;

  friend bool operator==(const Step&, const Step&) = default;
};

// One of the three weighted step classes. Immutable once built.
class StepSetSpec {
 public:
  int class_id() const { return class_id_; }
  const WeightedIndexSet& down_set() const { return down_; }
  const WeightedIndexSet& flat_set() const { return flat_; }

  // Up step, then down steps by ascending i, then flat steps by ascending i.
  std::span<const Step> steps() const { return steps_; }
  bool has_zero_length_steps() const;

  friend bool operator==(const StepSetSpec& a, const StepSetSpec& b) {
    return a.class_id_ == b.class_id_ && a.down_ == b.down_ && a.flat_ == b.flat_;
  }

 private:
  friend StepSetSpec make_spec(int, WeightedIndexSet, WeightedIndexSet);
  StepSetSpec(int class_id, WeightedIndexSet down, WeightedIndexSet flat);

  int class_id_;
  WeightedIndexSet down_;
  WeightedIndexSet flat_;
  std::vector<Step> steps_;
};

// Class table:
//   class 1: up (1,1) len 1; down (2i-1,-1) len i-1; flat (2i,0) len i
//   class 2: up (1,1) len 1; down (i,-1)    len i;   flat (i,0)  len i
//   class 3: up (1,1) len 1; down (1,-i)    len 0;   flat (2i,0) len i
// Throws std::invalid_argument for a class id outside {1, 2, 3}.
StepSetSpec make_spec(int class_id, WeightedIndexSet down, WeightedIndexSet flat);

// The deterministic step alphabet of a spec (same as spec.steps()).
std::vector<Step> steps_of(const StepSetSpec& spec);

// Displacement, length and weight of a single step of the given class.
Step class_step(int class_id, StepKind kind, int index, const Rational& weight);

// Unit-weight specs for the classical cases.
StepSetSpec dyck_spec();     // class 1, A = {1}
StepSetSpec motzkin_spec();  // class 2, A = {1}, B = {1}

}  // namespace cf
