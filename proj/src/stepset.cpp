#include "chungfeller/stepset.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace cf {

WeightedIndexSet::WeightedIndexSet(std::initializer_list<Entry> entries)
    : WeightedIndexSet(std::span<const Entry>(entries.begin(), entries.size())) {}

WeightedIndexSet::WeightedIndexSet(std::span<const Entry> entries)
    : entries_(entries.begin(), entries.end()) {
  for (const auto& [index, weight] : entries_) {
    if (index < 1) {
      throw std::invalid_argument("index must be a positive integer, got " + std::to_string(index));
    }
  }
  std::sort(entries_.begin(), entries_.end(),
            [](const Entry& a, const Entry& b) { return a.first < b.first; });
  const auto dup = std::adjacent_find(entries_.begin(), entries_.end(),
                                      [](const Entry& a, const Entry& b) { return a.first == b.first; });
  if (dup != entries_.end()) {
    throw std::invalid_argument("duplicate index " + std::to_string(dup->first));
  }
}

bool WeightedIndexSet::contains(int index) const {
  return std::any_of(entries_.begin(), entries_.end(), [&](const Entry& e) { return e.first == index; });
}

Rational WeightedIndexSet::weight(int index) const {
  for (const auto& [i, w] : entries_) {
    if (i == index) return w;
  }
  return 0;
}

Step class_step(int class_id, StepKind kind, int index, const Rational& weight) {
  if (class_id < 1 || class_id > 3) {
    throw std::invalid_argument("class id must be 1, 2 or 3, got " + std::to_string(class_id));
  }
  Step s;
  s.kind = kind;
  s.index = index;
  s.weight = weight;
  switch (kind) {
    case StepKind::up:
      s.index = 0;
      s.dx = 1;
      s.dy = 1;
      s.length = 1;
      s.weight = 1;
      break;
    case StepKind::down:
      if (class_id == 1) {
        s.dx = 2 * index - 1;
        s.dy = -1;
        s.length = index - 1;
      } else if (class_id == 2) {
        s.dx = index;
        s.dy = -1;
        s.length = index;
      } else {
        s.dx = 1;
        s.dy = -index;
        s.length = 0;
      }
      break;
    case StepKind::flat:
      s.dx = class_id == 2 ? index : 2 * index;
      s.dy = 0;
      s.length = index;
      break;
  }
  return s;
}

StepSetSpec::StepSetSpec(int class_id, WeightedIndexSet down, WeightedIndexSet flat)
    : class_id_(class_id), down_(std::move(down)), flat_(std::move(flat)) {
  steps_.push_back(class_step(class_id_, StepKind::up, 0, 1));
  for (const auto& [i, w] : down_.entries()) steps_.push_back(class_step(class_id_, StepKind::down, i, w));
  for (const auto& [i, w] : flat_.entries()) steps_.push_back(class_step(class_id_, StepKind::flat, i, w));
}

bool StepSetSpec::has_zero_length_steps() const {
  return std::any_of(steps_.begin(), steps_.end(), [](const Step& s) { return s.length == 0; });
}

StepSetSpec make_spec(int class_id, WeightedIndexSet down, WeightedIndexSet flat) {
  if (class_id < 1 || class_id > 3) {
    throw std::invalid_argument("class id must be 1, 2 or 3, got " + std::to_string(class_id));
  }
  return StepSetSpec(class_id, std::move(down), std::move(flat));
}

std::vector<Step> steps_of(const StepSetSpec& spec) {
  return {spec.steps().begin(), spec.steps().end()};
}

StepSetSpec dyck_spec() { return make_spec(1, {{1, 1}}, {}); }

StepSetSpec motzkin_spec() { return make_spec(2, {{1, 1}}, {{1, 1}}); }

}  // namespace cf
