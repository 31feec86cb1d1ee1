#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace asep {

// Occupancy encoding used throughout: 1 = particle, 0 = hole.
// At a bond event the pair (1,0) always swaps, (0,1) swaps when the
// coin falls below Q, equal values never swap. For colored and
// two-species states the same rule applies with "smaller value wins":
// the left value moves right unconditionally when it is smaller.

enum class Tail : std::uint8_t { holes = 0, particles = 1 };

// Site index extended with the two infinities. Statistics such as the
// leftmost particle of a line configuration are genuinely infinite for
// some tails, and the sentinels keep that explicit instead of abusing
// numeric extremes.
struct ExtendedSite {
  enum class Kind : std::int8_t { neg_inf = -1, finite = 0, pos_inf = 1 };

  Kind kind = Kind::finite;
  std::int64_t site = 0;

  static ExtendedSite finite(std::int64_t s) {
    return ExtendedSite{Kind::finite, s};
  }
  static ExtendedSite neg_infinity() { return ExtendedSite{Kind::neg_inf, 0}; }
  static ExtendedSite pos_infinity() { return ExtendedSite{Kind::pos_inf, 0}; }

  bool is_finite() const { return kind == Kind::finite; }

  friend bool operator==(const ExtendedSite& a, const ExtendedSite& b) {
    return a.kind == b.kind && (a.kind != Kind::finite || a.site == b.site);
  }
  friend bool operator<(const ExtendedSite& a, const ExtendedSite& b) {
    if (a.kind != b.kind) return static_cast<int>(a.kind) < static_cast<int>(b.kind);
    return a.kind == Kind::finite && a.site < b.site;
  }
  friend bool operator<=(const ExtendedSite& a, const ExtendedSite& b) {
    return a < b || a == b;
  }
  friend bool operator>(const ExtendedSite& a, const ExtendedSite& b) {
    return b < a;
  }
  friend bool operator>=(const ExtendedSite& a, const ExtendedSite& b) {
    return b <= a;
  }

  std::string to_string() const;
};

// Particle configuration on the segment [lo; hi].
struct SegmentConfig {
  std::int64_t lo = 1;
  std::vector<std::uint8_t> occ;

  std::int64_t hi() const { return lo + static_cast<std::int64_t>(occ.size()) - 1; }
  std::int64_t sites() const { return static_cast<std::int64_t>(occ.size()); }
  std::int64_t particles() const;
  bool occupied(std::int64_t site) const { return occ[site - lo] != 0; }
};

// Configuration on Z stored as an explicit window plus constant tails.
struct LineConfig {
  std::int64_t window_lo = 1;
  std::vector<std::uint8_t> occ;
  Tail left_tail = Tail::holes;
  Tail right_tail = Tail::particles;

  std::int64_t window_hi() const {
    return window_lo + static_cast<std::int64_t>(occ.size()) - 1;
  }
  bool occupied(std::int64_t site) const {
    if (site < window_lo) return left_tail == Tail::particles;
    if (site > window_hi()) return right_tail == Tail::particles;
    return occ[site - window_lo] != 0;
  }
};

// Fully colored state on [lo; hi]: position i carries color colors[i-lo],
// the colors being a permutation of the interval itself.
struct ColoredConfig {
  std::int64_t lo = 1;
  std::vector<std::int64_t> colors;

  std::int64_t hi() const { return lo + static_cast<std::int64_t>(colors.size()) - 1; }
};

enum class Species : std::uint8_t { first = 0, second = 1, hole = 2 };

// Two-species state: first-class particles dominate second-class ones,
// both dominate holes. Tails may be first-class particles or holes.
struct TwoSpeciesConfig {
  std::int64_t window_lo = 1;
  std::vector<Species> occ;
  Species left_tail = Species::hole;
  Species right_tail = Species::hole;

  std::int64_t window_hi() const {
    return window_lo + static_cast<std::int64_t>(occ.size()) - 1;
  }
  Species at(std::int64_t site) const {
    if (site < window_lo) return left_tail;
    if (site > window_hi()) return right_tail;
    return occ[site - window_lo];
  }
};

// The distinguished initial conditions. xi0/xi1 are the extremal
// segment states (all particles packed left / right), zeta0/zeta1 the
// corresponding line states with a particle reservoir on the right,
// step has particles exactly on the negative axis and step_shifted(k)
// on the sites <= k.
enum class NamedConfig { xi0, xi1, zeta0, zeta1, step, step_shifted };

SegmentConfig make_segment_config(NamedConfig name, std::int64_t N, std::int64_t k);
LineConfig make_line_config(NamedConfig name, std::int64_t N, std::int64_t k);

ColoredConfig identity_colored(std::int64_t lo, std::int64_t hi);
ColoredConfig reversal_colored(std::int64_t lo, std::int64_t hi);

void validate(const SegmentConfig& c);
void validate(const LineConfig& c);
void validate(const ColoredConfig& c);
void validate(const TwoSpeciesConfig& c);

ExtendedSite leftmost_particle(const SegmentConfig& c);
ExtendedSite leftmost_particle(const LineConfig& c);
ExtendedSite rightmost_hole(const SegmentConfig& c);
ExtendedSite rightmost_hole(const LineConfig& c);

// Height-function partial order: a <= b iff every suffix of b contains
// at most as many holes as the same suffix of a. Both arguments must
// describe states of the same particle system (same segment and count,
// or line states with a common balance point).
bool partial_order_leq(const SegmentConfig& a, const SegmentConfig& b);
bool partial_order_leq(const LineConfig& a, const LineConfig& b);

// The balance point of a line state with holes far left and particles
// far right: the unique z with as many particles below z as holes at
// or above z. zeta0/zeta1 built for (N, k) both balance at N + 1 - k.
std::int64_t z_index(const LineConfig& c);

// Color projections. Colors <= threshold become particles; the
// three-way split sends colors <= x to first class, colors in (x, y]
// to second class and the rest to holes.
SegmentConfig project_to_segment(const ColoredConfig& c, std::int64_t threshold);
TwoSpeciesConfig project_to_two_species(const ColoredConfig& c, std::int64_t x,
                                        std::int64_t y);
SegmentConfig merge_species(const TwoSpeciesConfig& c);

// Number of (particle, hole) pairs in that order, the exponent of the
// stationary weight of a segment state.
std::int64_t inversions01(const SegmentConfig& c);

}  // namespace asep
