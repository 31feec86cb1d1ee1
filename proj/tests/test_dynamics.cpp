#include <array>
#include <cmath>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "asep/dynamics.hpp"
#include "asep/environment.hpp"
#include "asep/lattice.hpp"
#include "asep/params.hpp"
#include "asep/rng.hpp"
#include "doctest.h"

using namespace asep;

TEST_CASE("bond update rules") {
  const double Q = 0.4;
  SegmentConfig c{1, {1, 0}};
  CHECK(apply_bond_event(c, 1, 0.99, Q));
  CHECK(!c.occupied(1));
  CHECK(c.occupied(2));

  CHECK(apply_bond_event(c, 1, 0.39, Q));
  CHECK(c.occupied(1));

  SegmentConfig d{1, {0, 1}};
  CHECK(!apply_bond_event(d, 1, 0.41, Q));
  CHECK(d.occupied(2));

  SegmentConfig e{1, {1, 1}};
  CHECK(!apply_bond_event(e, 1, 0.0, Q));

  ColoredConfig asc{1, {1, 2}};
  CHECK(apply_bond_event(asc, 1, 0.99, Q));
  CHECK(asc.colors[0] == 2);

  ColoredConfig desc{1, {2, 1}};
  CHECK(!apply_bond_event(desc, 1, 0.41, Q));
  CHECK(apply_bond_event(desc, 1, 0.39, Q));
  CHECK(desc.colors[0] == 1);

  TwoSpeciesConfig two;
  two.occ = {Species::second, Species::first};
  CHECK(!apply_bond_event(two, 1, 0.5, Q));
  CHECK(apply_bond_event(two, 1, 0.1, Q));
  CHECK(two.occ[0] == Species::first);
}

TEST_CASE("evolution follows the event list") {
  const auto params = SimulationParams::from_p(0.7);
  const auto env = CouplingEnvironment::sample(params, 1, 7, 4.0, 11);
  REQUIRE(env.event_count() >= 2);
  const auto& ev = env.events()[0];

  SegmentConfig c{1, std::vector<std::uint8_t>(8, 0)};
  c.occ[ev.bond - 1] = 1;
  const auto before = evolve(c, env, ev.time / 2);
  CHECK(before.occ == c.occ);

  const double mid = (ev.time + env.events()[1].time) / 2;
  const auto after = evolve(c, env, mid);
  CHECK(!after.occupied(ev.bond));
  CHECK(after.occupied(ev.bond + 1));
}

TEST_CASE("particle number and color content are conserved") {
  const auto params = SimulationParams::from_p(0.6);
  const auto env = CouplingEnvironment::sample(params, 1, 9, 20.0, 31);
  const auto x0 = make_segment_config(NamedConfig::xi0, 10, 4);
  const auto moved = evolve(x0, env, 20.0);
  CHECK(moved.particles() == 4);
  validate(moved);

  const auto id = identity_colored(1, 10);
  const auto cmoved = evolve(id, env, 20.0);
  validate(cmoved);
}

TEST_CASE("projections commute with the dynamics") {
  const auto params = SimulationParams::from_p(0.7);
  const auto env = CouplingEnvironment::sample(params, 1, 7, 6.0, 77);
  const auto id = identity_colored(1, 8);
  const auto colored_end = evolve(id, env, 6.0);

  for (std::int64_t thr : {1, 3, 5, 7}) {
    const auto seg_end = evolve(project_to_segment(id, thr), env, 6.0);
    const auto projected = project_to_segment(colored_end, thr);
    CHECK(seg_end.occ == projected.occ);
  }

  const auto two_end = evolve(project_to_two_species(id, 3, 6), env, 6.0);
  const auto two_projected = project_to_two_species(colored_end, 3, 6);
  CHECK(two_end.occ == two_projected.occ);

  const auto merged_end = evolve(merge_species(project_to_two_species(id, 3, 6)),
                                 env, 6.0);
  CHECK(merge_species(two_end).occ == merged_end.occ);
}

TEST_CASE("coupled evolve matches individual runs") {
  const auto params = SimulationParams::from_p(0.8);
  const auto env = CouplingEnvironment::sample(params, 1, 5, 3.0, 5);
  std::vector<AnyConfig> cs = {make_segment_config(NamedConfig::xi0, 6, 2),
                               identity_colored(1, 6)};
  coupled_evolve(cs, env, 3.0);
  const auto seg = evolve(make_segment_config(NamedConfig::xi0, 6, 2), env, 3.0);
  const auto col = evolve(identity_colored(1, 6), env, 3.0);
  CHECK(std::get<SegmentConfig>(cs[0]).occ == seg.occ);
  CHECK(std::get<ColoredConfig>(cs[1]).colors == col.colors);
}

TEST_CASE("window margin values") {
  CHECK(window_margin(1.0, 10.0) == 47);
  CHECK(window_margin(1.0, 2.0) == 20);
  CHECK(window_margin(0.5, 10.0) < window_margin(1.0, 10.0));
  CHECK(window_margin(1.0, 5.0) < window_margin(1.0, 50.0));
  CHECK(window_margin(1.0, 10.0, 1e-6) < window_margin(1.0, 10.0, 1e-12));
}

TEST_CASE("global event stream statistics") {
  GlobalEventStream stream(1.0, 1, 10, 123);
  const double t = 100.0;
  std::vector<std::int64_t> counts(10, 0);
  double prev = 0;
  std::uint64_t total = 0;
  for (;;) {
    const auto ev = stream.next();
    if (ev.time > t) break;
    CHECK(ev.time > prev);
    CHECK(ev.coin >= 0.0);
    CHECK(ev.coin < 1.0);
    REQUIRE(ev.bond >= 1);
    REQUIRE(ev.bond <= 10);
    prev = ev.time;
    ++counts[ev.bond - 1];
    ++total;
  }
  const double mean = 10 * t;
  CHECK(std::abs(static_cast<double>(total) - mean) < 4 * std::sqrt(mean));
  for (auto n : counts)
    CHECK(std::abs(static_cast<double>(n) - t) < 5 * std::sqrt(t));
}

// Three-state chain on N = 3, k = 1, integrated by uniformization of
// the handwritten generator.
static std::array<double, 3> exact_law_n3(double p, double Q, double t) {
  const double lam = p * (1 + Q);
  std::array<double, 3> v = {1, 0, 0};
  std::array<double, 3> out = {0, 0, 0};
  double logw = -lam * t;
  double w = std::exp(logw);
  for (int k = 0; k < 400; ++k) {
    for (int i = 0; i < 3; ++i) out[i] += w * v[i];
    std::array<double, 3> next{};
    next[0] = v[0] * (1 - p / lam) + v[1] * (p * Q / lam);
    next[1] = v[0] * (p / lam) + v[1] * (1 - p * (1 + Q) / lam) +
              v[2] * (p * Q / lam);
    next[2] = v[1] * (p / lam) + v[2] * (1 - p * Q / lam);
    v = next;
    w *= lam * t / (k + 1);
  }
  return out;
}

TEST_CASE("segment law matches the generator") {
  const double p = 0.75, t = 0.7;
  const auto params = SimulationParams::from_p(p);
  const auto want = exact_law_n3(p, params.Q(), t);
  const std::uint64_t reps = 20000;
  std::array<std::uint64_t, 3> hits = {0, 0, 0};
  const auto x0 = make_segment_config(NamedConfig::xi0, 3, 1);
  for (std::uint64_t rep = 0; rep < reps; ++rep) {
    const auto env =
        CouplingEnvironment::sample(params, 1, 2, t, mix_seed(909, rep));
    const auto end = evolve(x0, env, t);
    for (int i = 0; i < 3; ++i)
      if (end.occupied(i + 1)) ++hits[i];
  }
  for (int i = 0; i < 3; ++i) {
    const double phat = static_cast<double>(hits[i]) / reps;
    const double se = std::sqrt(want[i] * (1 - want[i]) / reps);
    CHECK(std::abs(phat - want[i]) < 4 * se + 1e-9);
  }
}

TEST_CASE("hitting time on the smallest segment is exponential") {
  const auto params = SimulationParams::from_p(1.0);
  const std::uint64_t reps = 10000;
  double sum = 0;
  std::uint64_t above_one = 0;
  for (std::uint64_t rep = 0; rep < reps; ++rep) {
    const auto s = hitting_time(params, 2, 1, mix_seed(17, rep), 8.0, 512.0);
    REQUIRE(!s.censored);
    sum += s.time;
    if (s.time > 1.0) ++above_one;
  }
  const double mean = sum / reps;
  CHECK(std::abs(mean - 1.0) < 4.0 / std::sqrt(static_cast<double>(reps)));
  const double phat = static_cast<double>(above_one) / reps;
  const double want = std::exp(-1.0);
  const double se = std::sqrt(want * (1 - want) / reps);
  CHECK(std::abs(phat - want) < 4 * se);

  const auto a = hitting_time(params, 2, 1, 99, 8.0, 512.0);
  const auto b = hitting_time(params, 2, 1, 99, 8.0, 512.0);
  CHECK(a.time == b.time);
}

TEST_CASE("coalescence of the two-site chain is exponential") {
  const auto params = SimulationParams::from_p(0.6);
  const std::uint64_t reps = 5000;
  const SegmentConfig a{1, {1, 0}};
  const SegmentConfig b{1, {0, 1}};
  double sum = 0;
  for (std::uint64_t rep = 0; rep < reps; ++rep) {
    const auto s = coalescence_time(params, a, b, mix_seed(23, rep), 64.0, 4096.0);
    REQUIRE(!s.censored);
    sum += s.time;
  }
  const double want = 1.0 / (0.6 - 0.4);
  const double mean = sum / reps;
  CHECK(std::abs(mean - want) < 4 * want / std::sqrt(static_cast<double>(reps)));
}

TEST_CASE("evolve line basics") {
  const auto params = SimulationParams::from_p(0.75);
  const auto z0 = make_line_config(NamedConfig::zeta0, 6, 2);

  const auto frozen = evolve_line(z0, params, 0.0, 4, 1, 6);
  for (std::int64_t s = -3; s <= 10; ++s)
    CHECK(frozen.occupied(s) == z0.occupied(s));

  const auto a = evolve_line(z0, params, 3.0, 4, 1, 6);
  const auto b = evolve_line(z0, params, 3.0, 4, 1, 6);
  CHECK(a.window_lo == b.window_lo);
  CHECK(a.occ == b.occ);
  CHECK(a.left_tail == Tail::holes);
  CHECK(a.right_tail == Tail::particles);
  CHECK(a.window_lo <= 1);
  CHECK(a.window_hi() >= 6);
  CHECK(z_index(a) == z_index(z0));

  const auto c = evolve_line(z0, params, 3.0, 5, 1, 6);
  bool same = a.window_lo == c.window_lo && a.occ == c.occ;
  CHECK(!same);
}

TEST_CASE("trajectory dump lists events up to the horizon") {
  const auto params = SimulationParams::from_p(0.8);
  const auto env = CouplingEnvironment::sample(params, 1, 4, 2.0, 3);
  std::size_t upto = 0;
  for (const auto& ev : env.events())
    if (ev.time <= 1.0) ++upto;
  std::ostringstream os;
  dump_trajectory(make_segment_config(NamedConfig::xi0, 5, 2), env, 1.0, os);
  std::istringstream is(os.str());
  std::string line;
  std::size_t lines = 0;
  double tprev = 0;
  while (std::getline(is, line)) {
    if (!line.empty() && line[0] == '#') continue;
    std::istringstream ls(line);
    double time, coin;
    std::int64_t bond;
    int swapped;
    const bool parsed = static_cast<bool>(ls >> time >> bond >> coin >> swapped);
    REQUIRE(parsed);
    CHECK(time > tprev);
    CHECK((swapped == 0 || swapped == 1));
    tprev = time;
    ++lines;
  }
  CHECK(lines == upto);
}
