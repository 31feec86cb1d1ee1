#include "asep/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace asep {

std::string ExtendedSite::to_string() const {
  switch (kind) {
    case Kind::neg_inf:
      return "-inf";
    case Kind::pos_inf:
      return "+inf";
    default:
      return std::to_string(site);
  }
}

std::int64_t SegmentConfig::particles() const {
  return std::accumulate(occ.begin(), occ.end(), std::int64_t{0});
}

static void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

SegmentConfig make_segment_config(NamedConfig name, std::int64_t N,
                                  std::int64_t k) {
  require(N >= 1 && k >= 0 && k <= N, "need 0 <= k <= N");
  SegmentConfig c;
  c.lo = 1;
  c.occ.assign(N, 0);
  switch (name) {
    case NamedConfig::xi0:
      std::fill(c.occ.begin(), c.occ.begin() + k, 1);
      break;
    case NamedConfig::xi1:
      std::fill(c.occ.end() - k, c.occ.end(), 1);
      break;
    default:
      throw std::invalid_argument("not a segment configuration name");
  }
  return c;
}

LineConfig make_line_config(NamedConfig name, std::int64_t N, std::int64_t k) {
  LineConfig c;
  switch (name) {
    case NamedConfig::zeta0:
      require(N >= 1 && k >= 0 && k <= N, "need 0 <= k <= N");
      c.window_lo = 1;
      c.occ.assign(N, 0);
      std::fill(c.occ.begin(), c.occ.begin() + k, 1);
      c.left_tail = Tail::holes;
      c.right_tail = Tail::particles;
      break;
    case NamedConfig::zeta1:
      require(N >= 1 && k >= 0 && k <= N, "need 0 <= k <= N");
      c.window_lo = 1;
      c.occ.assign(N, 0);
      std::fill(c.occ.begin() + (N - k), c.occ.end(), 1);
      c.left_tail = Tail::holes;
      c.right_tail = Tail::particles;
      break;
    case NamedConfig::step:
      c.window_lo = -1;
      c.occ = {1, 0};
      c.left_tail = Tail::particles;
      c.right_tail = Tail::holes;
      break;
    case NamedConfig::step_shifted:
      c.window_lo = k;
      c.occ = {1, 0};
      c.left_tail = Tail::particles;
      c.right_tail = Tail::holes;
      break;
    default:
      throw std::invalid_argument("not a line configuration name");
  }
  return c;
}

ColoredConfig identity_colored(std::int64_t lo, std::int64_t hi) {
  require(hi >= lo, "empty interval");
  ColoredConfig c;
  c.lo = lo;
  c.colors.resize(hi - lo + 1);
  std::iota(c.colors.begin(), c.colors.end(), lo);
  return c;
}

ColoredConfig reversal_colored(std::int64_t lo, std::int64_t hi) {
  ColoredConfig c = identity_colored(lo, hi);
  std::reverse(c.colors.begin(), c.colors.end());
  return c;
}

void validate(const SegmentConfig& c) {
  require(!c.occ.empty(), "segment configuration has no sites");
  for (auto v : c.occ) require(v <= 1, "segment occupancy must be 0/1");
}

void validate(const LineConfig& c) {
  require(!c.occ.empty(), "line configuration has an empty window");
  for (auto v : c.occ) require(v <= 1, "line occupancy must be 0/1");
}

void validate(const ColoredConfig& c) {
  require(!c.colors.empty(), "colored configuration has no sites");
  std::vector<std::int64_t> sorted = c.colors;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    require(sorted[i] == c.lo + static_cast<std::int64_t>(i),
            "colors must form a permutation of the interval");
}

void validate(const TwoSpeciesConfig& c) {
  require(!c.occ.empty(), "two-species configuration has an empty window");
  require(c.left_tail != Species::second && c.right_tail != Species::second,
          "tails must be first-class particles or holes");
}

ExtendedSite leftmost_particle(const SegmentConfig& c) {
  for (std::int64_t s = c.lo; s <= c.hi(); ++s)
    if (c.occupied(s)) return ExtendedSite::finite(s);
  return ExtendedSite::pos_infinity();
}

ExtendedSite leftmost_particle(const LineConfig& c) {
  if (c.left_tail == Tail::particles) return ExtendedSite::neg_infinity();
  for (std::int64_t s = c.window_lo; s <= c.window_hi(); ++s)
    if (c.occ[s - c.window_lo]) return ExtendedSite::finite(s);
  if (c.right_tail == Tail::particles)
    return ExtendedSite::finite(c.window_hi() + 1);
  return ExtendedSite::pos_infinity();
}

ExtendedSite rightmost_hole(const SegmentConfig& c) {
  for (std::int64_t s = c.hi(); s >= c.lo; --s)
    if (!c.occupied(s)) return ExtendedSite::finite(s);
  return ExtendedSite::neg_infinity();
}

ExtendedSite rightmost_hole(const LineConfig& c) {
  if (c.right_tail == Tail::holes) return ExtendedSite::pos_infinity();
  for (std::int64_t s = c.window_hi(); s >= c.window_lo; --s)
    if (!c.occ[s - c.window_lo]) return ExtendedSite::finite(s);
  if (c.left_tail == Tail::holes)
    return ExtendedSite::finite(c.window_lo - 1);
  return ExtendedSite::neg_infinity();
}

bool partial_order_leq(const SegmentConfig& a, const SegmentConfig& b) {
  require(a.lo == b.lo && a.occ.size() == b.occ.size(),
          "order comparison needs a common segment");
  require(a.particles() == b.particles(),
          "order comparison needs equal particle numbers");
  std::int64_t holes_a = 0, holes_b = 0;
  for (std::int64_t i = static_cast<std::int64_t>(a.occ.size()) - 1; i >= 0; --i) {
    holes_a += a.occ[i] == 0;
    holes_b += b.occ[i] == 0;
    if (holes_b > holes_a) return false;
  }
  return true;
}

std::int64_t z_index(const LineConfig& c) {
  require(c.left_tail == Tail::holes && c.right_tail == Tail::particles,
          "balance point needs holes far left and particles far right");
  // Balance at r: particles strictly below r minus holes at or above r.
  // It increases by one per unit of r, so start at the window's left
  // edge and solve for zero.
  std::int64_t r = c.window_lo;
  std::int64_t balance = 0;  // no particles below window_lo
  for (std::int64_t s = c.window_lo; s <= c.window_hi(); ++s)
    balance -= c.occ[s - c.window_lo] == 0;
  return r - balance;
}

bool partial_order_leq(const LineConfig& a, const LineConfig& b) {
  require(a.right_tail == Tail::particles && b.right_tail == Tail::particles,
          "order comparison needs particle tails on the right");
  require(z_index(a) == z_index(b),
          "order comparison needs a common balance point");
  const std::int64_t lo = std::min(a.window_lo, b.window_lo);
  const std::int64_t hi = std::max(a.window_hi(), b.window_hi());
  std::int64_t holes_a = 0, holes_b = 0;
  for (std::int64_t s = hi; s >= lo; --s) {
    holes_a += !a.occupied(s);
    holes_b += !b.occupied(s);
    if (holes_b > holes_a) return false;
  }
  // Below both windows the suffix counts grow at the tail rates.
  return !(b.left_tail == Tail::holes && a.left_tail == Tail::particles);
}

SegmentConfig project_to_segment(const ColoredConfig& c, std::int64_t threshold) {
  SegmentConfig out;
  out.lo = c.lo;
  out.occ.resize(c.colors.size());
  for (std::size_t i = 0; i < c.colors.size(); ++i)
    out.occ[i] = c.colors[i] <= threshold ? 1 : 0;
  return out;
}

TwoSpeciesConfig project_to_two_species(const ColoredConfig& c, std::int64_t x,
                                        std::int64_t y) {
  require(x <= y, "need x <= y");
  TwoSpeciesConfig out;
  out.window_lo = c.lo;
  out.occ.resize(c.colors.size());
  for (std::size_t i = 0; i < c.colors.size(); ++i) {
    if (c.colors[i] <= x)
      out.occ[i] = Species::first;
    else if (c.colors[i] <= y)
      out.occ[i] = Species::second;
    else
      out.occ[i] = Species::hole;
  }
  return out;
}

SegmentConfig merge_species(const TwoSpeciesConfig& c) {
  SegmentConfig out;
  out.lo = c.window_lo;
  out.occ.resize(c.occ.size());
  for (std::size_t i = 0; i < c.occ.size(); ++i)
    out.occ[i] = c.occ[i] == Species::hole ? 0 : 1;
  return out;
}

std::int64_t inversions01(const SegmentConfig& c) {
  std::int64_t particles_seen = 0, inv = 0;
  for (auto v : c.occ) {
    if (v)
      ++particles_seen;
    else
      inv += particles_seen;
  }
  return inv;
}

}  // namespace asep
