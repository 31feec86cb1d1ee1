#pragma once

#include <cstdint>
#include <iosfwd>
#include <variant>
#include <vector>

#include "asep/environment.hpp"
#include "asep/lattice.hpp"
#include "asep/params.hpp"

namespace asep {

// Single bond update. Occupancy rule: a particle left of a hole always
// moves right, a hole left of a particle trades places when the coin
// falls below Q. Colored and two-species updates use the same rule
// with "smaller value has priority".
bool apply_bond_event(SegmentConfig& c, std::int64_t bond, double coin, double Q);
bool apply_bond_event(ColoredConfig& c, std::int64_t bond, double coin, double Q);
bool apply_bond_event(TwoSpeciesConfig& c, std::int64_t bond, double coin, double Q);

// Raw-window primitives shared by the simulators and the experiment
// drivers. z is the left site's index into the array.
inline bool apply_event_01(std::uint8_t* occ, std::size_t z, double coin,
                           double Q) {
  const std::uint8_t a = occ[z], b = occ[z + 1];
  if (a > b || (a < b && coin < Q)) {
    occ[z] = b;
    occ[z + 1] = a;
    return true;
  }
  return false;
}

template <class T>
inline bool apply_event_ordered(T* v, std::size_t z, double coin, double Q) {
  const T a = v[z], b = v[z + 1];
  if (a < b || (b < a && coin < Q)) {
    v[z] = b;
    v[z + 1] = a;
    return true;
  }
  return false;
}

using AnyConfig = std::variant<SegmentConfig, ColoredConfig, TwoSpeciesConfig>;

// Evolution through a fixed environment. The environment must cover
// every bond of the configuration; events on bonds outside it are
// ignored, so one environment can drive coupled copies of different
// extents.
SegmentConfig evolve(SegmentConfig c, const CouplingEnvironment& env, double t);
ColoredConfig evolve(ColoredConfig c, const CouplingEnvironment& env, double t);
TwoSpeciesConfig evolve(TwoSpeciesConfig c, const CouplingEnvironment& env,
                        double t);
void coupled_evolve(std::vector<AnyConfig>& cs, const CouplingEnvironment& env,
                    double t);

template <class Fn>
void for_each_event(const CouplingEnvironment& env, double t, Fn&& fn) {
  for (const auto& ev : env.events()) {
    if (ev.time > t) break;
    fn(ev);
  }
}

// Writes "time bond coin swapped" per event while evolving a copy of
// the configuration, for replaying a run elsewhere.
void dump_trajectory(const AnyConfig& c, const CouplingEnvironment& env,
                     double t, std::ostream& os);

// Smallest margin d with (p t)^d / d! <= eps: influence from outside a
// window needs d clock rings in increasing time order to cross it, so
// truncating the lattice d sites beyond the region of interest changes
// the restricted law by at most eps.
std::int64_t window_margin(double p, double t, double eps = 1e-12);

// Merged rate-p*B Poisson stream with uniform bond marks, equal in law
// to the per-bond construction. This is the cheap driver for the large
// windowed Monte Carlo runs; a replica is reproducible from its seed.
class GlobalEventStream {
 public:
  GlobalEventStream(double rate_p, std::int64_t bond_lo, std::int64_t bond_hi,
                    std::uint64_t seed);

  BondEvent next();
  double time() const { return t_; }

 private:
  Rng rng_;
  std::int64_t bond_lo_;
  std::uint64_t nbonds_;
  double rate_;
  double t_;
};

// Exact-in-law finite-window sample of the infinite-lattice evolution:
// the simulation runs on the region and the input window, padded by
// the margin for (p, t, eps), and the result keeps the padded window
// so the balance point survives. The tails carry over unchanged.
LineConfig evolve_line(const LineConfig& c, const SimulationParams& params,
                       double t, std::uint64_t seed, std::int64_t region_lo,
                       std::int64_t region_hi, double eps = 1e-12);

struct HittingSample {
  double time = 0;
  bool censored = false;
  int horizon_doublings = 0;
};

// First time the line state started from zeta0(N, k) reaches zeta1,
// detected through its leftmost particle passing N - k. The horizon
// doubles (with the window re-widened and the trajectory replayed)
// until the hit is seen or t_cap is exceeded.
HittingSample hitting_time(const SimulationParams& params, std::int64_t N,
                           std::int64_t k, std::uint64_t seed,
                           double t_horizon, double t_cap,
                           double eps = 1e-12);

struct CoalescenceSample {
  double time = 0;
  bool censored = false;
};

// First time two coupled segment states agree everywhere.
CoalescenceSample coalescence_time(const SimulationParams& params,
                                   SegmentConfig a, SegmentConfig b,
                                   std::uint64_t seed, double t_horizon,
                                   double t_cap);

}  // namespace asep
