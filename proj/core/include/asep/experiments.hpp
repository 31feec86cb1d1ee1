#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "asep/lattice.hpp"
#include "asep/params.hpp"

namespace asep {

// One grid point of the total-variation sandwich. Monte-Carlo ops fill
// the bound they estimate, the exact op fills `exact`; profile_report
// merges rows of the same grid point.
struct TvEstimate {
  double c = 0;
  double t = 0;
  double lower = 0;
  double lower_se = 0;
  double upper = 1;
  double upper_se = 0;
  std::optional<double> exact;
  double predicted = 0;  // 1 - F_GUE(c f(k/N))
  std::uint64_t reps = 0;
  std::uint64_t seed = 0;
};

struct ProfilePoint {
  double c = 0;
  double empirical = 0;
  double se = 0;
  double predicted = 0;  // 1 - F_GUE(c f(k/N))
  double gap = 0;        // empirical - predicted
};

struct EventBEstimate {
  double c = 0;
  double t = 0;
  double estimate = 0;
  double se = 0;
  double predicted = 0;  // F_GUE(c f(k/N))
};

enum class MixingStart { xi0, xi1, worst };

// Exact TV distance to stationarity at the given times, by
// uniformization of the chain on all C(N, k) states. `worst` maximizes
// over every initial state and needs N <= 8.
std::vector<TvEstimate> exact_mixing_curve(std::int64_t N, std::int64_t k,
                                           const SimulationParams& params,
                                           const std::vector<double>& times,
                                           MixingStart from,
                                           std::uint64_t state_cap = 12870);

// P(H > g(k, c)) from iid hitting-time samples; an upper bound on the
// TV distance at g(k, c).
std::vector<TvEstimate> tv_upper_bound_mc(std::int64_t N, std::int64_t k,
                                          const SimulationParams& params,
                                          const std::vector<double>& c_grid,
                                          std::uint64_t reps,
                                          std::uint64_t seed);

std::int64_t default_tail_l(std::int64_t N);

// P(leftmost particle of the segment chain below N - k - l at g(k, c))
// minus the stationary mass of that event, clamped at zero; a lower
// bound on the TV distance.
std::vector<TvEstimate> tv_lower_bound_mc(std::int64_t N, std::int64_t k,
                                          const SimulationParams& params,
                                          const std::vector<double>& c_grid,
                                          std::int64_t l, std::uint64_t reps,
                                          std::uint64_t seed);

// P(leftmost particle above N - k - N^w and rightmost hole at or below
// N - k + N^w) for the line state zeta0 at g(k, c).
std::vector<EventBEstimate> event_b_mc(std::int64_t N, std::int64_t k,
                                       const SimulationParams& params,
                                       const std::vector<double>& c_grid,
                                       double w, std::uint64_t reps,
                                       std::uint64_t seed);

// Empirical law of the tagged step particle k + cp N^kappa being at or
// below N - 2k + cpp N^kappap at g(k, c), against the predicted
// profile.
std::vector<ProfilePoint> step_fluct_mc(std::int64_t N, std::int64_t k,
                                        const SimulationParams& params,
                                        const std::vector<double>& c_grid,
                                        double kappa, double cp, double kappap,
                                        double cpp, std::uint64_t reps,
                                        std::uint64_t seed);

struct IdentityMcEstimate {
  double lhs = 0;
  double lhs_se = 0;
  double rhs = 0;
  double rhs_se = 0;
};

// Monte-Carlo version of the two-block equilibration identity on the
// interval [-S-R; S+M]. The left side equilibrates [-S; S+M] then
// [-S-R; 0] and evolves for t; the right side evolves first and
// equilibrates in the mirrored order; both estimate the two-threshold
// event at (x, y).
IdentityMcEstimate auxiliary_identity_mc(std::int64_t S, std::int64_t R,
                                         std::int64_t M, double t,
                                         const SimulationParams& params,
                                         std::int64_t x, std::int64_t y,
                                         std::uint64_t reps,
                                         std::uint64_t seed);

struct PathwiseReport {
  std::uint64_t trajectories = 0;
  std::uint64_t order_violations = 0;
  std::uint64_t hitting_order_violations = 0;
  std::uint64_t domination_violations = 0;
  std::uint64_t line_domination_violations = 0;

  bool clean() const {
    return order_violations == 0 && hitting_order_violations == 0 &&
           domination_violations == 0 && line_domination_violations == 0;
  }
};

// Coupled trajectories of xi0, xi1, zeta0, zeta1 and the shifted step
// under the basic coupling (shared rate p + q clocks whose rings are
// right moves with probability p / (p + q) and left moves otherwise),
// checking per event: the partial order between the coupled pairs,
// segment hitting before line hitting, the tagged step particle
// dominating the leftmost xi0 particle, and the xi1 leftmost particle
// dominating the zeta1 one.
PathwiseReport pathwise_suite(std::int64_t N, std::int64_t k,
                              const SimulationParams& params, double t,
                              std::uint64_t trajectories, std::uint64_t seed);

struct JointHitBEstimate {
  double estimate = 0;
  double se = 0;
  std::uint64_t reps = 0;
};

// P(line hitting time >= g(k, c) + N^extra_exponent and the event of
// event_b_mc holds at g(k, c)), from one trajectory per replica.
JointHitBEstimate joint_hit_b_mc(std::int64_t N, std::int64_t k,
                                 const SimulationParams& params, double c,
                                 double w, double extra_exponent,
                                 std::uint64_t reps, std::uint64_t seed);

struct ProfileReportConfig {
  std::int64_t N = 256;
  std::int64_t k = 128;
  SimulationParams params{};
  std::vector<double> c_grid;
  std::uint64_t reps = 2000;
  std::int64_t l = 0;  // 0 selects ceil(N^{1/4})
  double w = 0.1;
  double kappa = 0;
  double cp = 0;
  double kappap = 0;
  double cpp = 0;
  std::uint64_t seed = 1;
  bool with_exact = false;
  bool with_upper = true;
  bool with_lower = true;
  bool with_event_b = true;
  bool with_profile = true;
};

struct ProfileReport {
  std::vector<TvEstimate> tv;
  std::vector<ProfilePoint> profile;
  std::vector<EventBEstimate> event_b;
};

ProfileReport profile_report(const ProfileReportConfig& config);

}  // namespace asep
