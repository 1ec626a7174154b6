#include <benchmark/benchmark.h>

#include "nijcheck/acs_catalog.hpp"
#include "nijcheck/claims.hpp"
#include "nijcheck/nijenhuis.hpp"
#include "nijcheck/round_geometry.hpp"
#include "nijcheck/sampling.hpp"

namespace {

using namespace nijcheck;

std::vector<ChartPoint> bench_points(std::size_t dim, std::size_t count) {
  SamplePlan plan;
  plan.dim = dim;
  plan.count = count;
  plan.seed = 42;
  return sample_points(plan);
}

void BM_Christoffel(benchmark::State& state) {
  const auto pts = bench_points(std::size_t(state.range(0)), 64);
  std::size_t k = 0;
  for (auto _ : state) benchmark::DoNotOptimize(christoffel_at(pts[k++ % pts.size()]));
}
BENCHMARK(BM_Christoffel)->Arg(2)->Arg(6);

void BM_NijenhuisOctonion(benchmark::State& state) {
  const Tensor11Field j = octonionic_acs_s6();
  const auto method = static_cast<NijenhuisMethod>(state.range(0));
  const auto pts = bench_points(6, 64);
  std::size_t k = 0;
  for (auto _ : state) benchmark::DoNotOptimize(nijenhuis(j, pts[k++ % pts.size()], method));
  state.SetLabel(std::string(to_string(method)));
}
BENCHMARK(BM_NijenhuisOctonion)
    ->Arg(static_cast<int>(NijenhuisMethod::Coordinate))
    ->Arg(static_cast<int>(NijenhuisMethod::Bracket));

void BM_ChainReport(benchmark::State& state) {
  const Tensor11Field j = octonionic_acs_s6();
  SamplePlan plan;
  plan.dim = 6;
  plan.count = std::size_t(state.range(0));
  plan.seed = 42;
  for (auto _ : state) benchmark::DoNotOptimize(chain_report(j, plan));
}
BENCHMARK(BM_ChainReport)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
