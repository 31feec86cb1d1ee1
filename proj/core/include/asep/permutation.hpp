#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace asep {

// Permutation of the integer interval [lo; hi], stored by images:
// images[i] = w(lo + i). Composition is the usual one on functions,
// (f g)(i) = f(g(i)).
struct Permutation {
  std::int64_t lo = 1;
  std::vector<std::int64_t> images;

  std::int64_t hi() const { return lo + static_cast<std::int64_t>(images.size()) - 1; }
  int n() const { return static_cast<int>(images.size()); }
  std::int64_t operator()(std::int64_t i) const { return images[i - lo]; }

  static Permutation identity(std::int64_t lo, std::int64_t hi) {
    if (hi < lo) throw std::invalid_argument("empty interval");
    Permutation w;
    w.lo = lo;
    w.images.resize(hi - lo + 1);
    for (std::size_t i = 0; i < w.images.size(); ++i)
      w.images[i] = lo + static_cast<std::int64_t>(i);
    return w;
  }

  static Permutation reversal(std::int64_t lo, std::int64_t hi) {
    Permutation w = identity(lo, hi);
    for (std::size_t i = 0; i < w.images.size(); ++i)
      w.images[i] = hi - static_cast<std::int64_t>(i);
    return w;
  }

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.lo == b.lo && a.images == b.images;
  }
};

inline std::int64_t inversions(const Permutation& w) {
  std::int64_t inv = 0;
  for (std::size_t i = 0; i < w.images.size(); ++i)
    for (std::size_t j = i + 1; j < w.images.size(); ++j)
      inv += w.images[i] > w.images[j];
  return inv;
}

inline Permutation inverse(const Permutation& w) {
  Permutation out;
  out.lo = w.lo;
  out.images.resize(w.images.size());
  for (std::size_t i = 0; i < w.images.size(); ++i)
    out.images[w.images[i] - w.lo] = w.lo + static_cast<std::int64_t>(i);
  return out;
}

inline Permutation compose(const Permutation& f, const Permutation& g) {
  if (f.lo != g.lo || f.images.size() != g.images.size())
    throw std::invalid_argument("composition needs a common interval");
  Permutation out;
  out.lo = f.lo;
  out.images.resize(f.images.size());
  for (std::size_t i = 0; i < g.images.size(); ++i)
    out.images[i] = f(g.images[i]);
  return out;
}

}  // namespace asep
