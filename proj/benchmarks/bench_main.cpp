#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>

#include "fstef/profile.hpp"
#include "fstef/prufer.hpp"
#include "fstef/stefan.hpp"

namespace {

using namespace fstef;

void BM_ShootProfile(benchmark::State& state) {
  const double c = static_cast<double>(state.range(0)) / 10.0;
  for (auto _ : state) {
    auto p = shoot_profile(c);
    benchmark::DoNotOptimize(p.slope_at_origin());
  }
}
BENCHMARK(BM_ShootProfile)->Arg(0)->Arg(10)->Arg(19);

void BM_ManifoldSeries(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto s = manifold_series(1.0, order);
    benchmark::DoNotOptimize(evaluate_manifold(s, -1.0).value);
  }
}
BENCHMARK(BM_ManifoldSeries)->Arg(20)->Arg(40);

void BM_MuFromC(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(mu_from_c(1.0));
}
BENCHMARK(BM_MuFromC);

void BM_CFromMu(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(c_from_mu(1.0));
}
BENCHMARK(BM_CFromMu);

void BM_IntegratePrufer(benchmark::State& state) {
  const auto profile = shoot_profile(1.0);
  for (auto _ : state) {
    auto traj = integrate_prufer(1.0, 1.0, profile);
    benchmark::DoNotOptimize(traj.theta_at_origin());
  }
}
BENCHMARK(BM_IntegratePrufer);

void BM_StefanStep(benchmark::State& state) {
  StefanParams p;
  p.h0 = 4.0;
  p.nx = static_cast<int>(state.range(0));
  p.dt = 1e-3;
  p.T = 0.1;  // 100 IMEX steps per iteration
  p.keep_snapshots = false;
  const double h0 = p.h0;
  auto u0 = [h0](double x) {
    return 0.5 * std::cos(std::numbers::pi * x / (2.0 * h0));
  };
  for (auto _ : state) {
    auto run = simulate(u0, p);
    benchmark::DoNotOptimize(run.trace.back().h);
  }
}
BENCHMARK(BM_StefanStep)->Arg(401)->Arg(801);

}  // namespace

BENCHMARK_MAIN();
