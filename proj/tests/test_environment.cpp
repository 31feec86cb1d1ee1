#include <cmath>
#include <cstdint>

#include "asep/environment.hpp"
#include "asep/params.hpp"
#include "doctest.h"

using namespace asep;

TEST_CASE("environment is deterministic in its seed") {
  const auto params = SimulationParams::from_p(0.8);
  const auto a = CouplingEnvironment::sample(params, 1, 10, 5.0, 42);
  const auto b = CouplingEnvironment::sample(params, 1, 10, 5.0, 42);
  REQUIRE(a.event_count() == b.event_count());
  for (std::size_t i = 0; i < a.events().size(); ++i) {
    CHECK(a.events()[i].time == b.events()[i].time);
    CHECK(a.events()[i].bond == b.events()[i].bond);
    CHECK(a.events()[i].coin == b.events()[i].coin);
  }
  const auto c = CouplingEnvironment::sample(params, 1, 10, 5.0, 43);
  REQUIRE(c.event_count() > 0);
  CHECK(a.events()[0].time != c.events()[0].time);
}

TEST_CASE("events are sorted, distinct, coins in range") {
  const auto params = SimulationParams::from_p(1.0);
  const auto env = CouplingEnvironment::sample(params, -5, 20, 10.0, 7);
  CHECK(env.all_times_distinct());
  double prev = 0;
  for (const auto& ev : env.events()) {
    CHECK(ev.time > prev);
    CHECK(ev.time <= 10.0);
    CHECK(ev.bond >= -5);
    CHECK(ev.bond <= 20);
    CHECK(ev.coin >= 0.0);
    CHECK(ev.coin < 1.0);
    prev = ev.time;
  }
}

TEST_CASE("extending the horizon keeps the prefix") {
  const auto params = SimulationParams::from_p(0.75);
  auto env = CouplingEnvironment::sample(params, 1, 8, 2.0, 99);
  const auto before = env.events();
  env.extend_time(6.0);
  const auto& after = env.events();
  REQUIRE(after.size() >= before.size());
  for (std::size_t i = 0; i < before.size(); ++i) {
    CHECK(after[i].time == before[i].time);
    CHECK(after[i].bond == before[i].bond);
    CHECK(after[i].coin == before[i].coin);
  }
  const auto fresh = CouplingEnvironment::sample(params, 1, 8, 6.0, 99);
  REQUIRE(fresh.event_count() == env.event_count());
  for (std::size_t i = 0; i < fresh.events().size(); ++i)
    CHECK(fresh.events()[i].time == env.events()[i].time);
}

TEST_CASE("widening the bond range keeps old streams") {
  const auto params = SimulationParams::from_p(0.6);
  auto env = CouplingEnvironment::sample(params, 3, 6, 4.0, 123);
  std::vector<BondEvent> old_events;
  for (const auto& ev : env.events()) old_events.push_back(ev);
  env.extend_bonds(0, 9);
  std::size_t j = 0;
  for (const auto& ev : env.events()) {
    if (ev.bond < 3 || ev.bond > 6) continue;
    REQUIRE(j < old_events.size());
    CHECK(ev.time == old_events[j].time);
    CHECK(ev.coin == old_events[j].coin);
    ++j;
  }
  CHECK(j == old_events.size());
}

TEST_CASE("event counts match the poisson rate") {
  const auto params = SimulationParams::from_p(0.8);
  const double t = 50.0;
  const auto env = CouplingEnvironment::sample(params, 1, 40, t, 2024);
  const double mean = 0.8 * 40 * t;
  const double sd = std::sqrt(mean);
  const auto n = static_cast<double>(env.event_count());
  CHECK(std::abs(n - mean) < 4 * sd);
}

TEST_CASE("serialization round trip") {
  const auto params = SimulationParams::from_p(0.9);
  const auto env = CouplingEnvironment::sample(params, -2, 12, 3.5, 555);
  const auto text = env.serialize();
  const auto back = CouplingEnvironment::deserialize(text);
  CHECK(back.params().p == env.params().p);
  CHECK(back.bond_lo() == env.bond_lo());
  CHECK(back.bond_hi() == env.bond_hi());
  CHECK(back.t_max() == env.t_max());
  CHECK(back.seed() == env.seed());
  REQUIRE(back.event_count() == env.event_count());
  for (std::size_t i = 0; i < env.events().size(); ++i) {
    CHECK(back.events()[i].time == env.events()[i].time);
    CHECK(back.events()[i].bond == env.events()[i].bond);
    CHECK(back.events()[i].coin == env.events()[i].coin);
  }
}
