#include "asep/experiments.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "asep/dynamics.hpp"
#include "asep/environment.hpp"
#include "asep/mallows.hpp"
#include "asep/rng.hpp"
#include "asep/scaling.hpp"
#include "asep/uniformization.hpp"

namespace asep {

namespace {

double binom_se(double phat, std::uint64_t reps) {
  return reps ? std::sqrt(phat * (1.0 - phat) / static_cast<double>(reps)) : 0.0;
}

double binomial_count(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  double r = 1;
  for (std::int64_t i = 1; i <= k; ++i)
    r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
  return r;
}

double predicted_tv(std::int64_t N, std::int64_t k, double c) {
  return 1.0 - f_gue(c * f_alpha(static_cast<double>(k) / static_cast<double>(N)));
}

// Advances a merged event stream up to time t, applying each event to
// the callback, and keeps the first event past t for the next call.
struct PacedStream {
  GlobalEventStream stream;
  BondEvent pending{};
  bool has_pending = false;

  PacedStream(double rate_p, std::int64_t bond_lo, std::int64_t bond_hi,
              std::uint64_t seed)
      : stream(rate_p, bond_lo, bond_hi, seed) {}

  template <class Fn>
  void advance_to(double t, Fn&& fn) {
    while (true) {
      if (!has_pending) {
        pending = stream.next();
        has_pending = true;
      }
      if (pending.time > t) return;
      fn(pending);
      has_pending = false;
    }
  }
};

std::vector<double> grid_times(std::int64_t N, std::int64_t k,
                               const SimulationParams& params,
                               const std::vector<double>& c_grid) {
  std::vector<double> t;
  t.reserve(c_grid.size());
  for (double c : c_grid) t.push_back(g_time(N, k, c, params));
  if (!std::is_sorted(t.begin(), t.end()))
    throw std::invalid_argument("c grid must be nondecreasing");
  return t;
}

}  // namespace

std::vector<TvEstimate> exact_mixing_curve(std::int64_t N, std::int64_t k,
                                           const SimulationParams& params,
                                           const std::vector<double>& times,
                                           MixingStart from,
                                           std::uint64_t state_cap) {
  if (N < 1 || k < 0 || k > N)
    throw std::invalid_argument("exact_mixing_curve: need 0 <= k <= N");
  if (N > 30 || binomial_count(N, k) > static_cast<double>(state_cap))
    throw std::invalid_argument("exact_mixing_curve: state space beyond cap");
  if (from == MixingStart::worst && N > 8)
    throw std::invalid_argument("exact_mixing_curve: worst mode needs N <= 8");
  const double Q = params.Q();
  const int n = static_cast<int>(N);
  const int bonds = n - 1;

  std::vector<std::uint32_t> masks;
  if (k == 0 || k == N) {
    masks.push_back(k == 0 ? 0u : (N >= 32 ? ~0u : ((1u << n) - 1u)));
  } else {
    std::uint32_t v = (1u << k) - 1u;
    const std::uint32_t limit = 1u << n;
    while (v < limit) {
      masks.push_back(v);
      const std::uint32_t t = v | (v - 1u);
      v = (t + 1u) | (((~t & (t + 1u)) - 1u) >> (std::countr_zero(v) + 1));
    }
  }
  const std::size_t states = masks.size();
  auto rank_of = [&](std::uint32_t m) {
    return static_cast<std::size_t>(
        std::lower_bound(masks.begin(), masks.end(), m) - masks.begin());
  };

  std::vector<double> pi(states);
  for (std::size_t r = 0; r < states; ++r) {
    SegmentConfig c;
    c.lo = 1;
    c.occ.resize(n);
    for (int i = 0; i < n; ++i) c.occ[i] = (masks[r] >> i) & 1u;
    pi[r] = stationary_pmf_segment(c, Q);
  }

  const double inv_b = bonds > 0 ? 1.0 / bonds : 0.0;
  auto apply_k = [&](const std::vector<double>& in, std::vector<double>& out) {
    if (bonds == 0) {
      out = in;
      return;
    }
    for (std::size_t r = 0; r < states; ++r) {
      const double w = in[r];
      if (w == 0.0) continue;
      const std::uint32_t m = masks[r];
      for (int z = 0; z < bonds; ++z) {
        const std::uint32_t pair = (m >> z) & 3u;
        if (pair == 1u) {
          out[rank_of(m ^ (3u << z))] += w * inv_b;
        } else if (pair == 2u) {
          out[r] += w * (1.0 - Q) * inv_b;
          out[rank_of(m ^ (3u << z))] += w * Q * inv_b;
        } else {
          out[r] += w * inv_b;
        }
      }
    }
  };

  auto tv_at = [&](std::size_t start_rank, double t) {
    std::vector<double> v(states, 0.0);
    v[start_rank] = 1.0;
    if (bonds > 0 && t > 0) {
      const PoissonWindow win = poisson_weights(params.p * bonds * t, 1e-14);
      v = uniformized_mixture(std::move(v), apply_k, win);
    }
    double tv = 0;
    for (std::size_t r = 0; r < states; ++r) tv += std::abs(v[r] - pi[r]);
    return 0.5 * tv;
  };

  std::size_t start = 0;
  if (from == MixingStart::xi0)
    start = rank_of(k == 0 ? 0u : (1u << k) - 1u);
  else if (from == MixingStart::xi1)
    start = rank_of(k == 0 ? 0u : ((1u << k) - 1u) << (n - static_cast<int>(k)));

  std::vector<TvEstimate> out;
  out.reserve(times.size());
  for (double t : times) {
    if (t < 0) throw std::invalid_argument("exact_mixing_curve: negative time");
    TvEstimate e;
    e.c = std::numeric_limits<double>::quiet_NaN();
    e.t = t;
    double tv = 0;
    if (from == MixingStart::worst) {
      for (std::size_t r = 0; r < states; ++r) tv = std::max(tv, tv_at(r, t));
    } else {
      tv = tv_at(start, t);
    }
    e.exact = tv;
    out.push_back(e);
  }
  return out;
}

std::vector<TvEstimate> tv_upper_bound_mc(std::int64_t N, std::int64_t k,
                                          const SimulationParams& params,
                                          const std::vector<double>& c_grid,
                                          std::uint64_t reps,
                                          std::uint64_t seed) {
  if (reps < 1) throw std::invalid_argument("tv_upper_bound_mc: reps < 1");
  const std::vector<double> t_grid = grid_times(N, k, params, c_grid);
  std::vector<TvEstimate> out(c_grid.size());
  if (c_grid.empty()) return out;
  const double t_max = t_grid.back();
  const double horizon = 1.25 * std::max(1.0, t_max);
  const double cap = 64.0 * std::max(1.0, t_max);
  std::vector<std::uint64_t> hits(c_grid.size(), 0);
  for (std::uint64_t rep = 0; rep < reps; ++rep) {
    const HittingSample h =
        hitting_time(params, N, k, mix_seed(seed, rep), horizon, cap);
    for (std::size_t i = 0; i < t_grid.size(); ++i)
      if (h.censored || h.time > t_grid[i]) ++hits[i];
  }
  for (std::size_t i = 0; i < c_grid.size(); ++i) {
    TvEstimate& e = out[i];
    e.c = c_grid[i];
    e.t = t_grid[i];
    e.upper = static_cast<double>(hits[i]) / static_cast<double>(reps);
    e.upper_se = binom_se(e.upper, reps);
    e.predicted = predicted_tv(N, k, c_grid[i]);
    e.reps = reps;
    e.seed = seed;
  }
  return out;
}

std::int64_t default_tail_l(std::int64_t N) {
  return static_cast<std::int64_t>(
      std::ceil(std::pow(static_cast<double>(N), 0.25)));
}

std::vector<TvEstimate> tv_lower_bound_mc(std::int64_t N, std::int64_t k,
                                          const SimulationParams& params,
                                          const std::vector<double>& c_grid,
                                          std::int64_t l, std::uint64_t reps,
                                          std::uint64_t seed) {
  if (reps < 1) throw std::invalid_argument("tv_lower_bound_mc: reps < 1");
  if (l <= 0) l = default_tail_l(N);
  const std::vector<double> t_grid = grid_times(N, k, params, c_grid);
  std::vector<TvEstimate> out(c_grid.size());
  if (c_grid.empty()) return out;
  const TailEstimate pi_a = stationary_tail_a(
      N, k, params.Q(), l, std::max<std::uint64_t>(200000, 20 * reps),
      mix_seed(seed, 0x5a170a1ebeefULL));
  const std::int64_t threshold = N - k - l;
  std::vector<std::uint64_t> hits(c_grid.size(), 0);
  for (std::uint64_t rep = 0; rep < reps; ++rep) {
    SegmentConfig c = make_segment_config(NamedConfig::xi0, N, k);
    PacedStream ps(params.p, 1, N - 1, mix_seed(seed, rep + 1));
    for (std::size_t i = 0; i < t_grid.size(); ++i) {
      ps.advance_to(t_grid[i], [&](const BondEvent& ev) {
        apply_bond_event(c, ev.bond, ev.coin, params.Q());
      });
      const ExtendedSite lp = leftmost_particle(c);
      if (lp < ExtendedSite::finite(threshold)) ++hits[i];
    }
  }
  for (std::size_t i = 0; i < c_grid.size(); ++i) {
    TvEstimate& e = out[i];
    e.c = c_grid[i];
    e.t = t_grid[i];
    const double phat = static_cast<double>(hits[i]) / static_cast<double>(reps);
    e.lower = std::max(0.0, phat - pi_a.value);
    e.lower_se = std::sqrt(binom_se(phat, reps) * binom_se(phat, reps) +
                           pi_a.se * pi_a.se);
    e.predicted = predicted_tv(N, k, c_grid[i]);
    e.reps = reps;
    e.seed = seed;
  }
  return out;
}

std::vector<EventBEstimate> event_b_mc(std::int64_t N, std::int64_t k,
                                       const SimulationParams& params,
                                       const std::vector<double>& c_grid,
                                       double w, std::uint64_t reps,
                                       std::uint64_t seed) {
  if (reps < 1) throw std::invalid_argument("event_b_mc: reps < 1");
  if (k < 1 || k >= N) throw std::invalid_argument("event_b_mc: k range");
  const std::vector<double> t_grid = grid_times(N, k, params, c_grid);
  std::vector<EventBEstimate> out(c_grid.size());
  if (c_grid.empty()) return out;
  const double shift = std::pow(static_cast<double>(N), w);
  const double lo_thr = static_cast<double>(N - k) - shift;
  const double hi_thr = static_cast<double>(N - k) + shift;
  const std::int64_t d = window_margin(params.p, t_grid.back());
  const std::int64_t wlo = 1 - 2 * d, whi = N + 2 * d;
  const std::size_t sites = static_cast<std::size_t>(whi - wlo + 1);
  std::vector<std::uint64_t> hits(c_grid.size(), 0);
  std::vector<std::uint8_t> occ(sites);
  const double Q = params.Q();
  for (std::uint64_t rep = 0; rep < reps; ++rep) {
    for (std::size_t i = 0; i < sites; ++i) {
      const std::int64_t site = wlo + static_cast<std::int64_t>(i);
      occ[i] = (site >= 1 && site <= k) || site > N;
    }
    PacedStream ps(params.p, wlo, whi - 1, mix_seed(seed, rep));
    for (std::size_t i = 0; i < t_grid.size(); ++i) {
      ps.advance_to(t_grid[i], [&](const BondEvent& ev) {
        apply_event_01(occ.data(), static_cast<std::size_t>(ev.bond - wlo),
                       ev.coin, Q);
      });
      std::size_t a = 0;
      while (a < sites && !occ[a]) ++a;
      const std::int64_t leftmost = wlo + static_cast<std::int64_t>(a);
      std::size_t b = sites;
      while (b > 0 && occ[b - 1]) --b;
      const std::int64_t rightmost_h = wlo + static_cast<std::int64_t>(b) - 1;
      if (static_cast<double>(leftmost) > lo_thr &&
          static_cast<double>(rightmost_h) <= hi_thr)
        ++hits[i];
    }
  }
  const double alpha = static_cast<double>(k) / static_cast<double>(N);
  for (std::size_t i = 0; i < c_grid.size(); ++i) {
    EventBEstimate& e = out[i];
    e.c = c_grid[i];
    e.t = t_grid[i];
    e.estimate = static_cast<double>(hits[i]) / static_cast<double>(reps);
    e.se = binom_se(e.estimate, reps);
    e.predicted = f_gue(c_grid[i] * f_alpha(alpha));
  }
  return out;
}

std::vector<ProfilePoint> step_fluct_mc(std::int64_t N, std::int64_t k,
                                        const SimulationParams& params,
                                        const std::vector<double>& c_grid,
                                        double kappa, double cp, double kappap,
                                        double cpp, std::uint64_t reps,
                                        std::uint64_t seed) {
  if (reps < 1) throw std::invalid_argument("step_fluct_mc: reps < 1");
  if (k < 1 || k >= N) throw std::invalid_argument("step_fluct_mc: k range");
  if (!(kappa >= 0 && kappa < 1.0 / 3.0) || !(kappap >= 0 && kappap < 1.0 / 3.0))
    throw std::invalid_argument("step_fluct_mc: exponents in [0, 1/3)");
  const std::vector<double> t_grid = grid_times(N, k, params, c_grid);
  std::vector<ProfilePoint> out(c_grid.size());
  if (c_grid.empty()) return out;
  const std::int64_t m_index = std::llround(
      static_cast<double>(k) + cp * std::pow(static_cast<double>(N), kappa));
  if (m_index < 1) throw std::invalid_argument("step_fluct_mc: particle index");
  const double thr = static_cast<double>(N - 2 * k) +
                     cpp * std::pow(static_cast<double>(N), kappap);
  const std::int64_t first_above =
      static_cast<std::int64_t>(std::floor(thr)) + 1;
  const std::int64_t d = window_margin(params.p, t_grid.back());
  // Step state occupies the sites below 0; the tagged particle sits at
  // x_m <= thr iff fewer than m particles occupy (thr, infinity), and
  // up to the tail bound no particle escapes past d.
  const std::int64_t wlo = std::min<std::int64_t>(first_above, 0) - d;
  const std::int64_t whi = 2 * d;
  const std::size_t sites = static_cast<std::size_t>(whi - wlo + 1);
  std::vector<std::uint64_t> hits(c_grid.size(), 0);
  std::vector<std::uint8_t> occ(sites);
  const double Q = params.Q();
  for (std::uint64_t rep = 0; rep < reps; ++rep) {
    for (std::size_t i = 0; i < sites; ++i)
      occ[i] = (wlo + static_cast<std::int64_t>(i)) <= -1;
    PacedStream ps(params.p, wlo, whi - 1, mix_seed(seed, rep));
    for (std::size_t i = 0; i < t_grid.size(); ++i) {
      ps.advance_to(t_grid[i], [&](const BondEvent& ev) {
        apply_event_01(occ.data(), static_cast<std::size_t>(ev.bond - wlo),
                       ev.coin, Q);
      });
      std::int64_t above = 0;
      for (std::int64_t s = first_above; s <= whi; ++s)
        above += occ[static_cast<std::size_t>(s - wlo)];
      if (above <= m_index - 1) ++hits[i];
    }
  }
  const double alpha = static_cast<double>(k) / static_cast<double>(N);
  for (std::size_t i = 0; i < c_grid.size(); ++i) {
    ProfilePoint& e = out[i];
    e.c = c_grid[i];
    e.empirical = static_cast<double>(hits[i]) / static_cast<double>(reps);
    e.se = binom_se(e.empirical, reps);
    e.predicted = 1.0 - f_gue(c_grid[i] * f_alpha(alpha));
    e.gap = e.empirical - e.predicted;
  }
  return out;
}

IdentityMcEstimate auxiliary_identity_mc(std::int64_t S, std::int64_t R,
                                         std::int64_t M, double t,
                                         const SimulationParams& params,
                                         std::int64_t x, std::int64_t y,
                                         std::uint64_t reps,
                                         std::uint64_t seed) {
  if (S < 1 || R < 1 || M < 1)
    throw std::invalid_argument("auxiliary_identity_mc: need S, R, M >= 1");
  if (reps < 1) throw std::invalid_argument("auxiliary_identity_mc: reps < 1");
  if (!(t >= 0)) throw std::invalid_argument("auxiliary_identity_mc: time");
  const std::int64_t lo = -S - R, hi = S + M;
  const double Q = params.Q();
  const std::int64_t n = hi - lo + 1;
  std::uint64_t lhs_hits = 0, rhs_hits = 0;
  for (std::uint64_t rep = 0; rep < reps; ++rep) {
    {
      Rng rng(mix_seed(seed, 4 * rep));
      SegmentConfig c;
      c.lo = lo;
      c.occ.resize(n);
      for (std::int64_t i = 0; i < n; ++i) c.occ[i] = (lo + i) <= 0;
      c = q_equilibrate(std::move(c), -S, S + M, Q, rng);
      c = q_equilibrate(std::move(c), -S - R, 0, Q, rng);
      PacedStream ps(params.p, lo, hi - 1, mix_seed(seed, 4 * rep + 1));
      ps.advance_to(t, [&](const BondEvent& ev) {
        apply_bond_event(c, ev.bond, ev.coin, Q);
      });
      if (leftmost_particle(c) > ExtendedSite::finite(x) &&
          rightmost_hole(c) <= ExtendedSite::finite(y))
        ++lhs_hits;
    }
    {
      Rng rng(mix_seed(seed, 4 * rep + 2));
      TwoSpeciesConfig dconf;
      dconf.window_lo = lo;
      dconf.occ.resize(n);
      for (std::int64_t i = 0; i < n; ++i) {
        const std::int64_t site = lo + i;
        dconf.occ[i] = site <= x   ? Species::first
                       : site <= y ? Species::second
                                   : Species::hole;
      }
      PacedStream ps(params.p, lo, hi - 1, mix_seed(seed, 4 * rep + 3));
      ps.advance_to(t, [&](const BondEvent& ev) {
        apply_bond_event(dconf, ev.bond, ev.coin, Q);
      });
      dconf = q_equilibrate(std::move(dconf), -S - R, 0, Q, rng);
      dconf = q_equilibrate(std::move(dconf), -S, S + M, Q, rng);
      bool ok = true;
      for (std::int64_t site = lo; site <= 0 && ok; ++site)
        if (dconf.at(site) == Species::first) ok = false;
      for (std::int64_t site = 1; site <= hi && ok; ++site)
        if (dconf.at(site) == Species::hole) ok = false;
      if (ok) ++rhs_hits;
    }
  }
  IdentityMcEstimate est;
  est.lhs = static_cast<double>(lhs_hits) / static_cast<double>(reps);
  est.rhs = static_cast<double>(rhs_hits) / static_cast<double>(reps);
  est.lhs_se = binom_se(est.lhs, reps);
  est.rhs_se = binom_se(est.rhs, reps);
  return est;
}

PathwiseReport pathwise_suite(std::int64_t N, std::int64_t k,
                              const SimulationParams& params, double t,
                              std::uint64_t trajectories, std::uint64_t seed) {
  if (k < 1 || k >= N) throw std::invalid_argument("pathwise_suite: k range");
  PathwiseReport report;
  report.trajectories = trajectories;
  const double Q = params.Q();
  const std::int64_t d = window_margin(params.p, t);
  const std::int64_t wlo = std::min<std::int64_t>(1, 1 - k) - 2 * d;
  const std::int64_t whi = N + 2 * d;
  const std::size_t sites = static_cast<std::size_t>(whi - wlo + 1);

  std::vector<std::uint8_t> x0(N + 1), x1(N + 1);  // indexed by site, 1..N
  std::vector<std::uint8_t> z0(sites), z1(sites), st(sites);
  std::vector<std::int64_t> suff_seg(N + 2), suff_line(sites + 1);

  for (std::uint64_t traj = 0; traj < trajectories; ++traj) {
    for (std::int64_t s = 1; s <= N; ++s) {
      x0[s] = s <= k;
      x1[s] = s > N - k;
    }
    for (std::size_t i = 0; i < sites; ++i) {
      const std::int64_t s = wlo + static_cast<std::int64_t>(i);
      z0[i] = (s >= 1 && s <= k) || s > N;
      z1[i] = s > N - k;
      st[i] = s <= k;
    }
    // suff_seg[r] = holes of xi0 minus holes of xi1 on [r, N], which
    // stays nonnegative iff the coupled pair stays ordered.
    suff_seg[N + 1] = 0;
    for (std::int64_t r = N; r >= 1; --r)
      suff_seg[r] = suff_seg[r + 1] + (x1[r] - x0[r]);
    suff_line[sites] = 0;
    for (std::size_t i = sites; i > 0; --i)
      suff_line[i - 1] = suff_line[i] + (z1[i - 1] - z0[i - 1]);

    std::int64_t diff01 = 0;
    for (std::int64_t s = 1; s <= N; ++s) diff01 += x0[s] != x1[s];
    std::int64_t below = k;  // zeta0 particles at sites <= N - k
    std::int64_t L0 = 1, L1 = N - k + 1, Lz1 = N - k + 1, xk = 1;
    bool seg_hit = diff01 == 0, line_hit = false;
    bool viol_order = false, viol_hh = false, viol_dom = false,
         viol_line_dom = false;

    // The order statements need the basic coupling with disjoint
    // direction marks: clocks at rate p + q, each ring a right move
    // with probability p / (p + q) and a left move otherwise. Sharing
    // the single-clock environment instead lets a (1,0) pair and a
    // (0,1) pair swap at the same ring and cross.
    auto directed = [](std::uint8_t* o, bool right) {
      if (right ? (o[0] == 1 && o[1] == 0) : (o[0] == 0 && o[1] == 1)) {
        std::swap(o[0], o[1]);
        return true;
      }
      return false;
    };
    GlobalEventStream stream(params.p * (1.0 + Q), wlo, whi - 1,
                             mix_seed(seed, traj));
    while (true) {
      const BondEvent ev = stream.next();
      if (ev.time > t) break;
      const std::int64_t z = ev.bond;
      const std::size_t zi = static_cast<std::size_t>(z - wlo);
      const bool right = ev.coin * (1.0 + Q) < 1.0;

      if (z >= 1 && z <= N - 1) {
        const int odiff = (x0[z] != x1[z]) + (x0[z + 1] != x1[z + 1]);
        const std::uint8_t ox0 = x0[z + 1], ox1 = x1[z + 1];
        const bool s0 = directed(&x0[z], right);
        const bool s1 = directed(&x1[z], right);
        suff_seg[z + 1] += (x1[z + 1] - ox1) - (x0[z + 1] - ox0);
        if (suff_seg[z + 1] < 0) viol_order = true;
        diff01 += (x0[z] != x1[z]) + (x0[z + 1] != x1[z + 1]) - odiff;
        if (s0) {
          if (z == L0)
            L0 = z + 1;
          else if (z + 1 == L0)
            L0 = z;
        }
        if (s1) {
          if (z == L1)
            L1 = z + 1;
          else if (z + 1 == L1)
            L1 = z;
        }
      }

      const std::uint8_t oz0 = z0[zi + 1], oz1 = z1[zi + 1];
      const bool sz0 = directed(z0.data() + zi, right);
      const bool sz1 = directed(z1.data() + zi, right);
      const bool sst = directed(st.data() + zi, right);
      suff_line[zi + 1] += (z1[zi + 1] - oz1) - (z0[zi + 1] - oz0);
      if (suff_line[zi + 1] < 0) viol_order = true;
      if (sz0 && z == N - k) below += z0[zi] ? 1 : -1;
      if (sz1) {
        const std::int64_t s_left = z;
        if (s_left == Lz1)
          Lz1 = s_left + 1;
        else if (s_left + 1 == Lz1)
          Lz1 = s_left;
      }
      if (sst) {
        if (z == xk)
          xk = z + 1;
        else if (z + 1 == xk)
          xk = z;
      }

      if (!seg_hit && diff01 == 0) seg_hit = true;
      if (!line_hit && below == 0) {
        line_hit = true;
        if (!seg_hit) viol_hh = true;
      }
      if (L0 > xk) viol_dom = true;
      if (L1 < Lz1) viol_line_dom = true;
    }
    report.order_violations += viol_order;
    report.hitting_order_violations += viol_hh;
    report.domination_violations += viol_dom;
    report.line_domination_violations += viol_line_dom;
  }
  return report;
}

JointHitBEstimate joint_hit_b_mc(std::int64_t N, std::int64_t k,
                                 const SimulationParams& params, double c,
                                 double w, double extra_exponent,
                                 std::uint64_t reps, std::uint64_t seed) {
  if (reps < 1) throw std::invalid_argument("joint_hit_b_mc: reps < 1");
  if (k < 1 || k >= N) throw std::invalid_argument("joint_hit_b_mc: k range");
  const double t_b = g_time(N, k, c, params);
  const double t_end =
      t_b + std::pow(static_cast<double>(N), extra_exponent);
  const double shift = std::pow(static_cast<double>(N), w);
  const double lo_thr = static_cast<double>(N - k) - shift;
  const double hi_thr = static_cast<double>(N - k) + shift;
  const std::int64_t d = window_margin(params.p, t_end);
  const std::int64_t wlo = 1 - 2 * d, whi = N + 2 * d;
  const std::size_t sites = static_cast<std::size_t>(whi - wlo + 1);
  std::vector<std::uint8_t> occ(sites);
  const double Q = params.Q();
  std::uint64_t hits = 0;
  for (std::uint64_t rep = 0; rep < reps; ++rep) {
    for (std::size_t i = 0; i < sites; ++i) {
      const std::int64_t site = wlo + static_cast<std::int64_t>(i);
      occ[i] = (site >= 1 && site <= k) || site > N;
    }
    std::int64_t below = k;
    bool hit_before_end = false;
    bool b_event = false;
    PacedStream ps(params.p, wlo, whi - 1, mix_seed(seed, rep));
    auto apply = [&](const BondEvent& ev) {
      const bool swapped = apply_event_01(
          occ.data(), static_cast<std::size_t>(ev.bond - wlo), ev.coin, Q);
      if (swapped && ev.bond == N - k)
        below += occ[static_cast<std::size_t>(ev.bond - wlo)] ? 1 : -1;
      if (below == 0) hit_before_end = true;
    };
    ps.advance_to(t_b, apply);
    {
      std::size_t a = 0;
      while (a < sites && !occ[a]) ++a;
      const std::int64_t leftmost = wlo + static_cast<std::int64_t>(a);
      std::size_t b = sites;
      while (b > 0 && occ[b - 1]) --b;
      const std::int64_t rightmost_h = wlo + static_cast<std::int64_t>(b) - 1;
      b_event = static_cast<double>(leftmost) > lo_thr &&
                static_cast<double>(rightmost_h) <= hi_thr;
    }
    ps.advance_to(t_end, apply);
    if (!hit_before_end && b_event) ++hits;
  }
  JointHitBEstimate est;
  est.reps = reps;
  est.estimate = static_cast<double>(hits) / static_cast<double>(reps);
  est.se = binom_se(est.estimate, reps);
  return est;
}

ProfileReport profile_report(const ProfileReportConfig& config) {
  ProfileReport report;
  if (config.c_grid.empty()) return report;
  const std::int64_t N = config.N, k = config.k;
  report.tv.resize(config.c_grid.size());
  for (std::size_t i = 0; i < config.c_grid.size(); ++i) {
    report.tv[i].c = config.c_grid[i];
    report.tv[i].t = g_time(N, k, config.c_grid[i], config.params);
    report.tv[i].predicted = predicted_tv(N, k, config.c_grid[i]);
    report.tv[i].reps = config.reps;
    report.tv[i].seed = config.seed;
  }
  if (config.with_upper) {
    auto rows = tv_upper_bound_mc(N, k, config.params, config.c_grid,
                                  config.reps, mix_seed(config.seed, 1));
    for (std::size_t i = 0; i < rows.size(); ++i) {
      report.tv[i].upper = rows[i].upper;
      report.tv[i].upper_se = rows[i].upper_se;
    }
  }
  if (config.with_lower) {
    auto rows = tv_lower_bound_mc(N, k, config.params, config.c_grid, config.l,
                                  config.reps, mix_seed(config.seed, 2));
    for (std::size_t i = 0; i < rows.size(); ++i) {
      report.tv[i].lower = rows[i].lower;
      report.tv[i].lower_se = rows[i].lower_se;
    }
  }
  if (config.with_exact) {
    std::vector<double> times;
    times.reserve(config.c_grid.size());
    for (double c : config.c_grid) times.push_back(g_time(N, k, c, config.params));
    auto rows = exact_mixing_curve(N, k, config.params, times, MixingStart::xi0);
    for (std::size_t i = 0; i < rows.size(); ++i)
      report.tv[i].exact = rows[i].exact;
  }
  if (config.with_event_b)
    report.event_b = event_b_mc(N, k, config.params, config.c_grid, config.w,
                                config.reps, mix_seed(config.seed, 3));
  if (config.with_profile)
    report.profile = step_fluct_mc(N, k, config.params, config.c_grid,
                                   config.kappa, config.cp, config.kappap,
                                   config.cpp, config.reps,
                                   mix_seed(config.seed, 4));
  return report;
}

}  // namespace asep
