// Serial reference vs OpenMP kernels. Arg 0 selects Exec::serial, 1 Exec::parallel.
#include <benchmark/benchmark.h>

#include <random>

#include "ifshull/analytic.hpp"
#include "ifshull/kernels.hpp"
#include "ifshull/width.hpp"

using namespace ifshull;

namespace {

Exec exec_of(const benchmark::State& state) { return state.range(0) == 0 ? Exec::serial : Exec::parallel; }

std::vector<Vec2> cloud(std::size_t n) {
  return as_planar(chaos_game_sample(complex_base_ifs({1.0, 1.0}, 2), n, 3));
}

void BM_SelfsimApply(benchmark::State& state) {
  const auto maps = planar_maps(complex_base_ifs(std::polar(1.6, 0.7), 3));
  const DirectionGrid grid(4096);
  std::vector<double> in(grid.size(), 1.0), out(grid.size());
  for (auto _ : state) {
    kernels::selfsim_apply(maps, grid, in, out, exec_of(state));
    benchmark::DoNotOptimize(out.data());
  }
}

void BM_SolveWidth(benchmark::State& state) {
  const IFS ifs = complex_base_ifs({1.0, 1.0}, 2);
  for (auto _ : state) benchmark::DoNotOptimize(solve_width(ifs, kDefaultGrid, kDefaultTol, exec_of(state)));
}

void BM_SupportExcess(benchmark::State& state) {
  const auto pts = cloud(100000);
  const DirectionGrid grid(1024);
  const auto values = kernels::max_projection(grid, {}, pts, Exec::serial);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::support_excess(grid, {}, values, pts, exec_of(state)));
}

void BM_NearestDistance(benchmark::State& state) {
  const auto pts = cloud(100000);
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  std::vector<Vec2> probes(100);
  for (auto& p : probes) p = {u(rng), u(rng)};
  for (auto _ : state) benchmark::DoNotOptimize(kernels::nearest_distance(probes, pts, exec_of(state)));
}

void BM_Audit(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(isodiametric_audit(1.05, 4.0, 60, 720, exec_of(state)));
}

}  // namespace

BENCHMARK(BM_SelfsimApply)->Arg(0)->Arg(1);
BENCHMARK(BM_SolveWidth)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SupportExcess)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_NearestDistance)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Audit)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
