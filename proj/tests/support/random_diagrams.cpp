#include "support/random_diagrams.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace tangleinv::testing {

LayeredBuilder::LayeredBuilder(int m) {
  for (int i = 0; i < m; ++i) d_.bottom.push_back(fresh());
  cur_ = d_.bottom;
}

void LayeredBuilder::rename(Label from, Label to) {
  for (auto& x : d_.crossings) std::replace(x.ends.begin(), x.ends.end(), from, to);
  for (auto& v : d_.trivalent) std::replace(v.ends.begin(), v.ends.end(), from, to);
  for (auto& f : d_.fourvalent) std::replace(f.ends.begin(), f.ends.end(), from, to);
  std::replace(d_.bottom.begin(), d_.bottom.end(), from, to);
  std::replace(cur_.begin(), cur_.end(), from, to);
}

void LayeredBuilder::cross(int i, bool positive) {
  const Label x = cur_.at(i), y = cur_.at(i + 1), z = fresh(), w = fresh();
  d_.crossings.push_back(positive ? Crossing{{y, w, z, x}} : Crossing{{x, y, w, z}});
  cur_[i] = z;
  cur_[i + 1] = w;
}

void LayeredBuilder::cap(int i) {
  const Label x = cur_.at(i), y = cur_.at(i + 1);
  cur_.erase(cur_.begin() + i, cur_.begin() + i + 2);
  if (x == y)
    d_.circles.push_back(x);
  else
    rename(y, x);
}

void LayeredBuilder::cup(int i) {
  const Label l = fresh();
  cur_.insert(cur_.begin() + i, {l, l});
}

void LayeredBuilder::split(int i) {
  const Label x = cur_.at(i), left = fresh(), right = fresh();
  d_.trivalent.push_back({{x, right, left}});
  cur_[i] = left;
  cur_.insert(cur_.begin() + i + 1, right);
}

void LayeredBuilder::merge(int i) {
  const Label x = cur_.at(i), y = cur_.at(i + 1), o = fresh();
  d_.trivalent.push_back({{x, y, o}});
  cur_.erase(cur_.begin() + i + 1);
  cur_[i] = o;
}

void LayeredBuilder::four(int i) {
  const Label x = cur_.at(i), y = cur_.at(i + 1), z = fresh(), w = fresh();
  d_.fourvalent.push_back({{x, y, w, z}});
  cur_[i] = z;
  cur_[i + 1] = w;
}

TangleDiagram LayeredBuilder::finish() const {
  TangleDiagram out = d_;
  out.top = cur_;
  return out;
}

TangleDiagram build_word(int m, const std::string& word) {
  LayeredBuilder b(m);
  std::istringstream in(word);
  std::string op;
  int i = 0;
  while (in >> op >> i) {
    if (op == "s+")
      b.cross(i, true);
    else if (op == "s-")
      b.cross(i, false);
    else if (op == "cap")
      b.cap(i);
    else if (op == "cup")
      b.cup(i);
    else if (op == "y")
      b.split(i);
    else if (op == "l")
      b.merge(i);
    else if (op == "f")
      b.four(i);
    else
      throw std::invalid_argument("unknown op " + op);
  }
  return b.finish();
}

TangleDiagram random_tangle(std::mt19937& rng, const RandomShape& shape) {
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  const int limit = 2 * shape.max_half_boundary;
  int m = pick(0, limit);
  if (shape.even_only && m % 2) --m;
  LayeredBuilder b(m);
  const int target = pick(0, shape.max_crossings);
  int steps = 0;
  while (b.crossings() < target && steps++ < 200) {
    const int w = b.width();
    const int roll = pick(0, 9);
    if (w >= 2 && roll < 6) {
      b.cross(pick(0, w - 2), pick(0, 1) == 1);
    } else if (roll < 8 || w < 2) {
      if (m + w + 2 <= limit + 2) b.cup(pick(0, w));
    } else {
      b.cap(pick(0, w - 2));
    }
  }
  // Occasionally close a few strands so closed components and caps appear.
  while (b.width() >= 2 && pick(0, 3) == 0) b.cap(pick(0, b.width() - 2));
  while (m + b.width() > limit) b.cap(pick(0, b.width() - 2));
  if (shape.even_only && b.width() % 2) throw std::logic_error("parity");
  return b.finish();
}

}  // namespace tangleinv::testing
