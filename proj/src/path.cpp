#include "chungfeller/path.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>
#include <string>

namespace cf {

Path::Path(const StepSetSpec& spec, std::vector<Step> steps) : steps_(std::move(steps)) {
  const auto alphabet = spec.steps();
  for (const Step& s : steps_) {
    if (std::find(alphabet.begin(), alphabet.end(), s) == alphabet.end()) {
      throw std::invalid_argument("step (" + std::to_string(s.dx) + "," + std::to_string(s.dy) +
                                  ") is not in the step set");
    }
  }
}

Path path_from_word(const StepSetSpec& spec, std::string_view word) {
  std::vector<Step> steps;
  std::size_t pos = 0;
  while (pos < word.size()) {
    if (word[pos] == ' ') {
      ++pos;
      continue;
    }
    const std::size_t end = std::min(word.find(' ', pos), word.size());
    const std::string_view token = word.substr(pos, end - pos);
    pos = end;

    if (token == "U") {
      steps.push_back(spec.steps().front());
      continue;
    }
    int index = 0;
    const auto [ptr, ec] = std::from_chars(token.data() + 1, token.data() + token.size(), index);
    if ((token[0] != 'D' && token[0] != 'F') || ec != std::errc{} || ptr != token.data() + token.size()) {
      throw std::invalid_argument("bad step token '" + std::string(token) + "'");
    }
    const auto& set = token[0] == 'D' ? spec.down_set() : spec.flat_set();
    if (!set.contains(index)) {
      throw std::invalid_argument("step '" + std::string(token) + "' is not in the step set");
    }
    const auto kind = token[0] == 'D' ? StepKind::down : StepKind::flat;
    steps.push_back(class_step(spec.class_id(), kind, index, set.weight(index)));
  }
  return Path(spec, std::move(steps));
}

Path concatenate(const Path& a, const Path& b) {
  Path out = a;
  out.steps_.insert(out.steps_.end(), b.steps_.begin(), b.steps_.end());
  return out;
}

Rational total_weight(const Path& path) {
  Rational w = 1;
  for (const Step& s : path.steps()) w *= s.weight;
  return w;
}

int total_length(const Path& path) {
  int l = 0;
  for (const Step& s : path.steps()) l += s.length;
  return l;
}

std::vector<int> heights(const Path& path) {
  std::vector<int> h;
  h.reserve(path.order());
  int y = 0;
  for (const Step& s : path.steps()) {
    y += s.dy;
    h.push_back(y);
  }
  return h;
}

int nonpositive_length(const Path& path) {
  int y = 0;
  int l = 0;
  for (const Step& s : path.steps()) {
    y += s.dy;
    if (y <= 0) l += s.length;
  }
  return l;
}

int min_value(const Path& path) {
  const auto h = heights(path);
  return std::min(0, h.empty() ? 0 : *std::min_element(h.begin(), h.end()));
}

std::size_t abs_min_position(const Path& path) {
  const auto h = heights(path);
  const int lowest = min_value(path);
  for (std::size_t j = h.size(); j > 0; --j) {
    if (h[j - 1] == lowest) return j;
  }
  return 0;  // only the start point attains the minimum
}

int abs_min_length(const Path& path) {
  const std::size_t mp = abs_min_position(path);
  int l = 0;
  for (std::size_t j = 0; j < mp; ++j) l += path.steps()[j].length;
  return l;
}

Point end_point(const Path& path) {
  Point p;
  for (const Step& s : path.steps()) {
    p.x += s.dx;
    p.y += s.dy;
  }
  return p;
}

PointedPath::PointedPath(Path path, int pointed_length)
    : path_(std::move(path)), pointed_length_(pointed_length) {
  if (path_.empty()) throw std::invalid_argument("a pointed path needs at least one step");
  const int last = path_.steps().back().length;
  if (last < 1) throw std::invalid_argument("the final step of a pointed path must have length >= 1");
  if (pointed_length_ < 0 || pointed_length_ > last - 1) {
    throw std::invalid_argument("pointed length " + std::to_string(pointed_length_) + " outside [0, " +
                                std::to_string(last - 1) + "]");
  }
}

int nonpositive_pointed_length(const PointedPath& pointed) {
  return nonpositive_length(pointed.path()) + pointed.pointed_length();
}

int abs_min_pointed_length(const PointedPath& pointed) {
  return abs_min_length(pointed.path()) + pointed.pointed_length();
}

}  // namespace cf
