#include "asep/dynamics.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace asep {

bool apply_bond_event(SegmentConfig& c, std::int64_t bond, double coin,
                      double Q) {
  if (bond < c.lo || bond >= c.hi()) return false;
  return apply_event_01(c.occ.data(), bond - c.lo, coin, Q);
}

bool apply_bond_event(ColoredConfig& c, std::int64_t bond, double coin,
                      double Q) {
  if (bond < c.lo || bond >= c.hi()) return false;
  return apply_event_ordered(c.colors.data(), bond - c.lo, coin, Q);
}

bool apply_bond_event(TwoSpeciesConfig& c, std::int64_t bond, double coin,
                      double Q) {
  if (bond < c.window_lo || bond >= c.window_hi()) return false;
  return apply_event_ordered(c.occ.data(), bond - c.window_lo, coin, Q);
}

namespace {

void check_cover(const CouplingEnvironment& env, std::int64_t lo,
                 std::int64_t hi) {
  if (env.bond_lo() > lo || env.bond_hi() < hi - 1)
    throw std::invalid_argument("environment does not cover the configuration");
}

template <class Config>
Config evolve_impl(Config c, const CouplingEnvironment& env, double t) {
  if (t > env.t_max())
    throw std::invalid_argument("evolution beyond the environment horizon");
  const double Q = env.params().Q();
  for_each_event(env, t, [&](const BondEvent& ev) {
    apply_bond_event(c, ev.bond, ev.coin, Q);
  });
  return c;
}

}  // namespace

SegmentConfig evolve(SegmentConfig c, const CouplingEnvironment& env,
                     double t) {
  check_cover(env, c.lo, c.hi());
  return evolve_impl(std::move(c), env, t);
}

ColoredConfig evolve(ColoredConfig c, const CouplingEnvironment& env,
                     double t) {
  check_cover(env, c.lo, c.hi());
  return evolve_impl(std::move(c), env, t);
}

TwoSpeciesConfig evolve(TwoSpeciesConfig c, const CouplingEnvironment& env,
                        double t) {
  check_cover(env, c.window_lo, c.window_hi());
  return evolve_impl(std::move(c), env, t);
}

void coupled_evolve(std::vector<AnyConfig>& cs, const CouplingEnvironment& env,
                    double t) {
  if (t > env.t_max())
    throw std::invalid_argument("evolution beyond the environment horizon");
  for (const auto& any : cs)
    std::visit(
        [&](const auto& c) {
          if constexpr (requires { c.lo; })
            check_cover(env, c.lo, c.hi());
          else
            check_cover(env, c.window_lo, c.window_hi());
        },
        any);
  const double Q = env.params().Q();
  for_each_event(env, t, [&](const BondEvent& ev) {
    for (auto& any : cs)
      std::visit(
          [&](auto& c) { apply_bond_event(c, ev.bond, ev.coin, Q); }, any);
  });
}

void dump_trajectory(const AnyConfig& c, const CouplingEnvironment& env,
                     double t, std::ostream& os) {
  AnyConfig state = c;
  const double Q = env.params().Q();
  os << "# time bond coin swapped\n";
  for_each_event(env, t, [&](const BondEvent& ev) {
    bool swapped = std::visit(
        [&](auto& cc) { return apply_bond_event(cc, ev.bond, ev.coin, Q); },
        state);
    char buf[96];
    std::snprintf(buf, sizeof buf, "%.17g %lld %.17g %d\n", ev.time,
                  static_cast<long long>(ev.bond), ev.coin, swapped ? 1 : 0);
    os << buf;
  });
}

std::int64_t window_margin(double p, double t, double eps) {
  if (!(p >= 0) || !(t >= 0) || !(eps > 0))
    throw std::invalid_argument("window margin needs p, t >= 0 and eps > 0");
  const double pt = p * t;
  if (pt == 0 || eps >= 1) return 0;
  const double log_eps = std::log(eps);
  const double log_pt = std::log(pt);
  std::int64_t d = pt > 1 ? static_cast<std::int64_t>(std::ceil(pt)) : 1;
  while (static_cast<double>(d) * log_pt - std::lgamma(static_cast<double>(d) + 1) > log_eps)
    ++d;
  return d;
}

GlobalEventStream::GlobalEventStream(double rate_p, std::int64_t bond_lo,
                                     std::int64_t bond_hi, std::uint64_t seed)
    : rng_(seed),
      bond_lo_(bond_lo),
      nbonds_(static_cast<std::uint64_t>(bond_hi - bond_lo + 1)),
      rate_(rate_p * static_cast<double>(nbonds_)),
      t_(0) {
  if (bond_hi < bond_lo) throw std::invalid_argument("empty bond range");
  if (!(rate_ > 0)) throw std::invalid_argument("nonpositive event rate");
}

BondEvent GlobalEventStream::next() {
  t_ += exponential(rng_, rate_);
  return BondEvent{
      t_, bond_lo_ + static_cast<std::int64_t>(uniform_below(rng_, nbonds_)),
      uniform01(rng_)};
}

LineConfig evolve_line(const LineConfig& c, const SimulationParams& params,
                       double t, std::uint64_t seed, std::int64_t region_lo,
                       std::int64_t region_hi, double eps) {
  if (region_hi < region_lo) throw std::invalid_argument("empty region");
  if (!(t >= 0)) throw std::invalid_argument("negative time");
  const std::int64_t d = window_margin(params.p, t, eps);
  const std::int64_t win_lo = std::min(region_lo, c.window_lo) - d;
  const std::int64_t win_hi = std::max(region_hi, c.window_hi()) + d;
  std::vector<std::uint8_t> occ(win_hi - win_lo + 1);
  for (std::int64_t s = win_lo; s <= win_hi; ++s)
    occ[s - win_lo] = c.occupied(s) ? 1 : 0;
  if (t > 0 && win_hi > win_lo) {
    const double Q = params.Q();
    GlobalEventStream stream(params.p, win_lo, win_hi - 1, seed);
    for (;;) {
      BondEvent ev = stream.next();
      if (ev.time > t) break;
      apply_event_01(occ.data(), ev.bond - win_lo, ev.coin, Q);
    }
  }
  LineConfig out;
  out.window_lo = win_lo;
  out.occ = std::move(occ);
  out.left_tail = c.left_tail;
  out.right_tail = c.right_tail;
  return out;
}

HittingSample hitting_time(const SimulationParams& params, std::int64_t N,
                           std::int64_t k, std::uint64_t seed,
                           double t_horizon, double t_cap, double eps) {
  if (N < 1 || k < 0 || k > N) throw std::invalid_argument("need 0 <= k <= N");
  if (k == 0 || k == N) return HittingSample{0.0, false, 0};
  if (!(t_horizon > 0) || !(t_cap >= t_horizon))
    throw std::invalid_argument("need 0 < t_horizon <= t_cap");

  const double Q = params.Q();
  const LineConfig zeta0 = make_line_config(NamedConfig::zeta0, N, k);
  double horizon = t_horizon;
  int doublings = 0;
  CouplingEnvironment env = [&] {
    const std::int64_t d = window_margin(params.p, horizon, eps);
    return CouplingEnvironment::sample(params, 1 - 2 * d, N + 2 * d - 1,
                                       horizon, seed);
  }();

  for (;;) {
    const std::int64_t win_lo = env.bond_lo();
    const std::int64_t win_hi = env.bond_hi() + 1;
    std::vector<std::uint8_t> occ(win_hi - win_lo + 1);
    for (std::int64_t s = win_lo; s <= win_hi; ++s)
      occ[s - win_lo] = zeta0.occupied(s) ? 1 : 0;
    // Hit as soon as no particle remains at or below N - k; only the
    // bond (N - k, N - k + 1) moves particles across that boundary.
    std::int64_t below = 0;
    for (std::int64_t s = win_lo; s <= N - k; ++s) below += occ[s - win_lo];
    const std::int64_t boundary_bond = N - k;
    for (const auto& ev : env.events()) {
      const std::size_t z = ev.bond - win_lo;
      if (apply_event_01(occ.data(), z, ev.coin, Q) &&
          ev.bond == boundary_bond) {
        below += occ[z] ? 1 : -1;
        if (below == 0) return HittingSample{ev.time, false, doublings};
      }
    }
    if (horizon >= t_cap) return HittingSample{horizon, true, doublings};
    horizon = std::min(2 * horizon, t_cap);
    ++doublings;
    const std::int64_t d = window_margin(params.p, horizon, eps);
    env.extend_bonds(1 - 2 * d, N + 2 * d - 1);
    env.extend_time(horizon);
  }
}

CoalescenceSample coalescence_time(const SimulationParams& params,
                                   SegmentConfig a, SegmentConfig b,
                                   std::uint64_t seed, double t_horizon,
                                   double t_cap) {
  if (a.lo != b.lo || a.occ.size() != b.occ.size())
    throw std::invalid_argument("coalescence needs a common segment");
  if (!(t_horizon > 0) || !(t_cap >= t_horizon))
    throw std::invalid_argument("need 0 < t_horizon <= t_cap");
  std::int64_t diff = 0;
  for (std::size_t i = 0; i < a.occ.size(); ++i) diff += a.occ[i] != b.occ[i];
  if (diff == 0) return CoalescenceSample{0.0, false};

  const double Q = params.Q();
  CouplingEnvironment env =
      CouplingEnvironment::sample(params, a.lo, a.hi() - 1, t_horizon, seed);
  std::size_t next_event = 0;
  for (;;) {
    const auto& ev = env.events();
    for (; next_event < ev.size(); ++next_event) {
      const auto& e = ev[next_event];
      const std::size_t z = e.bond - a.lo;
      const bool before_z = a.occ[z] != b.occ[z];
      const bool before_z1 = a.occ[z + 1] != b.occ[z + 1];
      apply_event_01(a.occ.data(), z, e.coin, Q);
      apply_event_01(b.occ.data(), z, e.coin, Q);
      diff += (a.occ[z] != b.occ[z]) - before_z;
      diff += (a.occ[z + 1] != b.occ[z + 1]) - before_z1;
      if (diff == 0) return CoalescenceSample{e.time, false};
    }
    if (env.t_max() >= t_cap) return CoalescenceSample{env.t_max(), true};
    env.extend_time(std::min(2 * env.t_max(), t_cap));
  }
}

}  // namespace asep
