#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "asep/experiments.hpp"
#include "asep/fredholm.hpp"
#include "asep/hecke.hpp"
#include "asep/params.hpp"
#include "asep/scaling.hpp"
#include "doctest.h"

using namespace asep;

TEST_CASE("exact mixing on two sites") {
  const auto params = SimulationParams::from_p(2.0 / 3.0);
  const std::vector<double> times = {0.0, 0.7};
  const auto curve = exact_mixing_curve(2, 1, params, times, MixingStart::xi0);
  REQUIRE(curve.size() == 2);
  REQUIRE(curve[0].exact.has_value());
  CHECK(*curve[0].exact == doctest::Approx(2.0 / 3).epsilon(1e-12));
  // Two-state chain relaxes at rate p + q = 1.
  CHECK(*curve[1].exact ==
        doctest::Approx((2.0 / 3) * std::exp(-0.7)).epsilon(1e-9));

  const auto worst = exact_mixing_curve(2, 1, params, times, MixingStart::worst);
  CHECK(*worst[0].exact == doctest::Approx(2.0 / 3).epsilon(1e-12));
}

TEST_CASE("exact mixing decreases and the packed start is worst") {
  const auto params = SimulationParams::from_p(2.0 / 3.0);
  const std::vector<double> times = {0.0, 0.5, 1.0, 2.0, 4.0};
  const auto from0 = exact_mixing_curve(4, 2, params, times, MixingStart::xi0);
  const auto from1 = exact_mixing_curve(4, 2, params, times, MixingStart::xi1);
  const auto worst = exact_mixing_curve(4, 2, params, times, MixingStart::worst);
  for (std::size_t i = 0; i < times.size(); ++i) {
    CHECK(*worst[i].exact >= *from0[i].exact - 1e-12);
    CHECK(*worst[i].exact >= *from1[i].exact - 1e-12);
    CHECK(*from0[i].exact >= *from1[i].exact - 1e-12);
    if (i) {
      CHECK(*from0[i].exact <= *from0[i - 1].exact + 1e-12);
      CHECK(*worst[i].exact <= *worst[i - 1].exact + 1e-12);
    }
  }
  CHECK(*worst[0].exact ==
        doctest::Approx(*from0[0].exact).epsilon(1e-10));
  // Reference digits from an independent uniformization of the
  // six-state generator.
  CHECK(*from0[2].exact == doctest::Approx(0.711549909337).epsilon(1e-9));
  CHECK(*from0[4].exact == doctest::Approx(0.314079115744).epsilon(1e-9));
  CHECK(*from1[2].exact == doctest::Approx(0.320814635469).epsilon(1e-9));
  CHECK(*from1[4].exact == doctest::Approx(0.097215857284).epsilon(1e-9));
}

TEST_CASE("exact mixing guards") {
  const auto params = SimulationParams::from_p(0.75);
  const std::vector<double> times = {0.0, 1.0};
  CHECK_THROWS_AS(
      exact_mixing_curve(32, 16, params, times, MixingStart::xi0),
      std::invalid_argument);
  CHECK_THROWS_AS(
      exact_mixing_curve(10, 5, params, times, MixingStart::worst),
      std::invalid_argument);
  const std::vector<double> bad = {1.0, -0.5};
  CHECK_THROWS_AS(exact_mixing_curve(4, 2, params, bad, MixingStart::xi0),
                  std::invalid_argument);
}

TEST_CASE("upper bound matches the two-site hitting law") {
  const auto params = SimulationParams::from_p(1.0);
  const std::vector<double> c_grid = {0.0};
  const auto rows = tv_upper_bound_mc(2, 1, params, c_grid, 20000, 31);
  REQUIRE(rows.size() == 1);
  const double t = g_time(2, 1, 0.0, params);
  CHECK(rows[0].t == doctest::Approx(t).epsilon(1e-12));
  const double want = std::exp(-t);
  CHECK(std::abs(rows[0].upper - want) < 4 * rows[0].upper_se + 1e-6);
  CHECK(rows[0].predicted ==
        doctest::Approx(1.0 - f_gue(0.0)).epsilon(1e-10));
  CHECK(rows[0].reps == 20000);
}

TEST_CASE("bounds bracket the exact curve on a small segment") {
  const auto params = SimulationParams::from_p(2.0 / 3.0);
  const std::vector<double> c_grid = {-2.0};
  const double t = g_time(4, 2, -2.0, params);
  REQUIRE(t > 0);
  const auto exact =
      exact_mixing_curve(4, 2, params, {t}, MixingStart::xi0);
  const auto upper = tv_upper_bound_mc(4, 2, params, c_grid, 5000, 11);
  const auto lower = tv_lower_bound_mc(4, 2, params, c_grid, 1, 5000, 12);
  const double ex = *exact[0].exact;
  CHECK(upper[0].upper >= ex - 4 * upper[0].upper_se - 1e-9);
  CHECK(lower[0].lower <= ex + 4 * lower[0].lower_se + 1e-9);
}

TEST_CASE("default tail width") {
  CHECK(default_tail_l(16) == 2);
  CHECK(default_tail_l(256) == 4);
  CHECK(default_tail_l(255) == 4);
}

TEST_CASE("interface event estimate basics") {
  const auto params = SimulationParams::from_p(1.0);
  const std::vector<double> c_grid = {0.0};
  const auto a = event_b_mc(16, 8, params, c_grid, 0.1, 400, 5);
  const auto b = event_b_mc(16, 8, params, c_grid, 0.1, 400, 5);
  REQUIRE(a.size() == 1);
  CHECK(a[0].estimate >= 0.0);
  CHECK(a[0].estimate <= 1.0);
  CHECK(a[0].estimate == b[0].estimate);
  CHECK(a[0].t == doctest::Approx(g_time(16, 8, 0.0, params)));
  CHECK(a[0].predicted == doctest::Approx(f_gue(0.0)).epsilon(1e-10));
}

TEST_CASE("step fluctuation endpoints") {
  const auto params = SimulationParams::from_p(1.0);
  const std::vector<double> c_grid = {-4.0, 4.0};
  const auto rows = step_fluct_mc(64, 32, params, c_grid, 0, 0, 0, 0, 300, 21);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].empirical > 0.4);
  CHECK(rows[1].empirical < 0.05);
  for (const auto& r : rows) {
    CHECK(r.predicted ==
          doctest::Approx(1.0 - f_gue(r.c * 0.5)).epsilon(1e-10));
    CHECK(r.gap == doctest::Approx(r.empirical - r.predicted).epsilon(1e-12));
  }
}

TEST_CASE("two block identity estimates agree with the algebra") {
  const auto params = SimulationParams::from_p(2.0 / 3.0);
  const double t = 0.7;
  const auto exact = corollary_event_check(1, 1, 1, params, t, 0, 2);
  const auto mc = auxiliary_identity_mc(1, 1, 1, t, params, 0, 2, 20000, 77);
  CHECK(std::abs(mc.lhs - exact.lhs) < 4 * mc.lhs_se + 1e-9);
  CHECK(std::abs(mc.rhs - exact.rhs) < 4 * mc.rhs_se + 1e-9);
  CHECK(std::abs(mc.lhs - mc.rhs) <
        4 * std::sqrt(mc.lhs_se * mc.lhs_se + mc.rhs_se * mc.rhs_se) + 1e-9);

  const auto frozen = auxiliary_identity_mc(1, 1, 1, 0.0, params, 0, 2, 5000, 3);
  const auto fr_exact = corollary_event_check(1, 1, 1, params, 0.0, 0, 2);
  CHECK(std::abs(frozen.lhs - fr_exact.lhs) < 4 * frozen.lhs_se + 1e-9);
}

TEST_CASE("coupled trajectories respect the orderings") {
  const auto params = SimulationParams::from_p(0.75);
  const double t = g_time(10, 5, 0.0, params);
  const auto report = pathwise_suite(10, 5, params, t, 100, 8);
  CHECK(report.trajectories == 100);
  CHECK(report.order_violations == 0);
  CHECK(report.hitting_order_violations == 0);
  CHECK(report.domination_violations == 0);
  CHECK(report.line_domination_violations == 0);
}

TEST_CASE("joint tail event sanity") {
  const auto params = SimulationParams::from_p(1.0);
  const auto est = joint_hit_b_mc(16, 8, params, 0.0, 0.1, 0.2, 300, 40);
  CHECK(est.reps == 300);
  CHECK(est.estimate >= 0.0);
  CHECK(est.estimate <= 1.0);
  const auto again = joint_hit_b_mc(16, 8, params, 0.0, 0.1, 0.2, 300, 40);
  CHECK(est.estimate == again.estimate);

  const auto marginal = event_b_mc(16, 8, params, {0.0}, 0.1, 300, 41);
  CHECK(est.estimate <=
        marginal[0].estimate +
            4 * std::sqrt(est.se * est.se +
                          marginal[0].se * marginal[0].se) + 1e-9);
}

TEST_CASE("profile report merges rows deterministically") {
  ProfileReportConfig cfg;
  cfg.N = 8;
  cfg.k = 4;
  cfg.params = SimulationParams::from_p(1.0);
  cfg.c_grid = {-1.0, 1.0};
  cfg.reps = 200;
  cfg.seed = 9;
  cfg.with_exact = true;
  const auto a = profile_report(cfg);
  const auto b = profile_report(cfg);
  REQUIRE(a.tv.size() == 2);
  REQUIRE(a.profile.size() == 2);
  REQUIRE(a.event_b.size() == 2);
  for (std::size_t i = 0; i < 2; ++i) {
    REQUIRE(a.tv[i].exact.has_value());
    CHECK(a.tv[i].lower == b.tv[i].lower);
    CHECK(a.tv[i].upper == b.tv[i].upper);
    CHECK(*a.tv[i].exact == *b.tv[i].exact);
    CHECK(a.tv[i].upper >= a.tv[i].lower - 1e-12);
    CHECK(a.profile[i].empirical == b.profile[i].empirical);
    CHECK(a.event_b[i].estimate == b.event_b[i].estimate);
  }

  ProfileReportConfig off = cfg;
  off.with_upper = false;
  off.with_exact = false;
  const auto c = profile_report(off);
  CHECK(c.tv[0].upper == 1.0);
  CHECK(!c.tv[0].exact.has_value());

  ProfileReportConfig empty = cfg;
  empty.c_grid = {};
  const auto d = profile_report(empty);
  CHECK(d.tv.empty());
  CHECK(d.profile.empty());
  CHECK(d.event_b.empty());
}

TEST_SUITE("slow") {

TEST_CASE("joint tail event vanishes with the system size") {
  const auto params = SimulationParams::from_p(1.0);
  const auto small = joint_hit_b_mc(64, 32, params, 0.0, 0.1, 0.2, 400, 501);
  const auto large = joint_hit_b_mc(128, 64, params, 0.0, 0.1, 0.2, 400, 502);
  const double se =
      std::sqrt(small.se * small.se + large.se * large.se);
  CHECK(large.estimate <= small.estimate + 3 * se);
  CHECK(large.estimate <= 0.6);
}

TEST_CASE("profile shift under a particle index offset") {
  const auto params = SimulationParams::from_p(1.0);
  const std::int64_t N = 128, k = 64;
  const std::vector<double> c_grid = {0.0};
  const double kappa = 0.2, cp = 3.0;
  const std::uint64_t reps = 1200, seed = 606;

  const auto base = step_fluct_mc(N, k, params, c_grid, 0, 0, 0, 0, reps, seed);
  const auto moved =
      step_fluct_mc(N, k, params, c_grid, kappa, cp, 0, 0, reps, seed);
  REQUIRE(base.size() == 1);
  REQUIRE(moved.size() == 1);

  // Same seed couples the replicas, and a larger index weakens the
  // event, so the difference is a paired nonnegative estimate.
  const double diff = moved[0].empirical - base[0].empirical;
  CHECK(diff >= 0.0);

  const double dn = static_cast<double>(N);
  const double n_tilde = 2.0 * dn;
  const double thr = 0.0;
  const auto s_of = [&](double m) {
    const auto sc = step_scaling(m, n_tilde, 1.0);
    return (thr - sc.c1 * n_tilde) / (-sc.c2 * std::cbrt(n_tilde));
  };
  const double m0 = static_cast<double>(k);
  const double m1 = m0 + cp * std::pow(dn, kappa);
  const double predicted_diff = f_gue(s_of(m0)) - f_gue(s_of(m1));
  CHECK(predicted_diff > 0.0);

  const double se = std::sqrt(moved[0].se * moved[0].se +
                              base[0].se * base[0].se);
  CHECK(std::abs(diff - predicted_diff) <= 3 * se + 0.08);
}

}  // TEST_SUITE
