#include <benchmark/benchmark.h>

#include <cstdint>

#include "asep/dynamics.hpp"
#include "asep/environment.hpp"
#include "asep/fredholm.hpp"
#include "asep/hecke.hpp"
#include "asep/lattice.hpp"
#include "asep/mallows.hpp"
#include "asep/params.hpp"
#include "asep/rng.hpp"
#include "asep/scaling.hpp"

namespace {

void BM_environment_sample(benchmark::State& state) {
  const auto params = asep::SimulationParams::from_p(1.0);
  const auto bonds = state.range(0);
  std::uint64_t seed = 1;
  for (auto _ : state) {
    auto env = asep::CouplingEnvironment::sample(params, 1, bonds, 50.0, seed++);
    benchmark::DoNotOptimize(env.event_count());
  }
}
BENCHMARK(BM_environment_sample)->Arg(64)->Arg(512);

void BM_evolve_segment(benchmark::State& state) {
  const std::int64_t N = state.range(0);
  const auto params = asep::SimulationParams::from_p(1.0);
  const double t = asep::g_time(N, N / 2, 0.0, params);
  std::uint64_t seed = 1;
  for (auto _ : state) {
    auto env = asep::CouplingEnvironment::sample(params, 1, N - 1, t, seed++);
    auto cfg = asep::make_segment_config(asep::NamedConfig::xi0, N, N / 2);
    cfg = asep::evolve(std::move(cfg), env, t);
    benchmark::DoNotOptimize(cfg.occ.data());
  }
}
BENCHMARK(BM_evolve_segment)->Arg(64)->Arg(256);

void BM_mallows_sample(benchmark::State& state) {
  const std::int64_t n = state.range(0);
  asep::Rng rng(7);
  for (auto _ : state) {
    auto w = asep::mallows_sample(1, n, 0.5, rng);
    benchmark::DoNotOptimize(w.images.data());
  }
}
BENCHMARK(BM_mallows_sample)->Arg(16)->Arg(256);

void BM_walk_law(benchmark::State& state) {
  const auto params = asep::SimulationParams::from_p(0.75);
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto law = asep::walk_law(1, n, params, 1.0);
    benchmark::DoNotOptimize(law.support_size());
  }
}
BENCHMARK(BM_walk_law)->Arg(4)->Arg(6);

void BM_hecke_multiply(benchmark::State& state) {
  const double Q = 0.4;
  const auto m = asep::mallows_element(1, static_cast<int>(state.range(0)), Q);
  for (auto _ : state) {
    auto prod = asep::multiply(m, m, Q);
    benchmark::DoNotOptimize(prod.support_size());
  }
}
BENCHMARK(BM_hecke_multiply)->Arg(4)->Arg(5);

void BM_f_gue(benchmark::State& state) {
  const double s = -2.0;
  asep::QuadratureSpec quad;
  quad.m = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(asep::f_gue(s, quad));
  }
}
BENCHMARK(BM_f_gue)->Arg(60)->Arg(120);

}  // namespace

BENCHMARK_MAIN();
