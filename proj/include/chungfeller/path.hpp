#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "chungfeller/rational.hpp"
#include "chungfeller/stepset.hpp"

namespace cf {

struct Point {
  int x = 0;
  int y = 0;
  friend bool operator==(const Point&, const Point&) = default;
};

// A word s_1 ... s_m over a step alphabet, starting at (0,0).
class Path {
 public:
  Path() = default;
  // Throws std::invalid_argument if a step is not in the spec's alphabet.
  Path(const StepSetSpec& spec, std::vector<Step> steps);

  std::span<const Step> steps() const { return steps_; }
  std::size_t order() const { return steps_.size(); }
  bool empty() const { return steps_.empty(); }

  friend bool operator==(const Path&, const Path&) = default;

 private:
  friend Path concatenate(const Path&, const Path&);
  std::vector<Step> steps_;
};

// Builds a path from a space separated word: "U" is the up step, "D<i>" the
// down step of index i, "F<i>" the flat step of index i. Example: "U U F1 D5".
Path path_from_word(const StepSetSpec& spec, std::string_view word);

Path concatenate(const Path& a, const Path& b);

Rational total_weight(const Path& path);
int total_length(const Path& path);
// h(s_j): y-coordinate of the end point of step j.
std::vector<int> heights(const Path& path);
// Sum of l(s_j) over steps whose end point has y <= 0.
int nonpositive_length(const Path& path);
// Minimum of y_0 = 0, y_1, ..., y_m.
int min_value(const Path& path);
// Largest point index j in [0, m] with y_j equal to the minimum.
std::size_t abs_min_position(const Path& path);
// Sum of l(s_j) for 1 <= j <= abs_min_position.
int abs_min_length(const Path& path);
Point end_point(const Path& path);

// A path whose final step has length >= 1, marked by 0 <= p <= l(s_m) - 1.
class PointedPath {
 public:
  // Throws std::invalid_argument if the invariants fail.
  PointedPath(Path path, int pointed_length);

  const Path& path() const { return path_; }
  int pointed_length() const { return pointed_length_; }

  friend bool operator==(const PointedPath&, const PointedPath&) = default;

 private:
  Path path_;
  int pointed_length_;
};

// l̄(L) + p
int nonpositive_pointed_length(const PointedPath& pointed);
// ml(L) + p
int abs_min_pointed_length(const PointedPath& pointed);

}  // namespace cf
