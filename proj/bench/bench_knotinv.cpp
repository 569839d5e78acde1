// Serial reference vs OpenMP path for the heavy kernels.

#include <benchmark/benchmark.h>

#include "knotinv/delta_rho.hpp"
#include "knotinv/generators.hpp"
#include "knotinv/mc_engine.hpp"
#include "knotinv/oracle.hpp"

using namespace knotinv;

namespace {

const SmoothedKnot& trefoil() {
  static const SmoothedKnot sk = SmoothedKnot::smooth(shipped_lattice_knot("3_1"));
  return sk;
}

Execution mode(const benchmark::State& st) {
  return st.range(0) == 0 ? Execution::kSerial : Execution::kParallel;
}

void BM_Rho(benchmark::State& st) {
  SamplerConfig cfg;
  cfg.n = static_cast<std::uint64_t>(st.range(1));
  cfg.execution = mode(st);
  for (auto _ : st) benchmark::DoNotOptimize(rho(trefoil(), cfg).total.mean);
  st.SetItemsProcessed(st.iterations() * static_cast<std::int64_t>(cfg.n));
  st.SetLabel(st.range(0) == 0 ? "serial" : "parallel");
}
BENCHMARK(BM_Rho)
    ->ArgsProduct({{0, 1}, {200'000, 1'000'000}})
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();

void BM_Oracle(benchmark::State& st) {
  QuadratureSpec spec;
  spec.q = 2;
  spec.execution = mode(st);
  for (auto _ : st) benchmark::DoNotOptimize(oracle_rho(trefoil(), spec).rho);
  st.SetLabel(st.range(0) == 0 ? "serial" : "parallel");
}
BENCHMARK(BM_Oracle)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_Delta(benchmark::State& st) {
  const DiscreteKnot k = shipped_lattice_knot("3_1");
  std::vector<Vec3> v(k.vertices().begin(), k.vertices().end());
  v[4] = v[4] + Vec3{0, 0, -2};
  const Deformation def = make_deformation(k, DiscreteKnot(v));
  SamplerConfig cfg;
  cfg.n = 200'000;
  cfg.execution = mode(st);
  for (auto _ : st) benchmark::DoNotOptimize(delta_rho(def, cfg).delta.mean);
  st.SetItemsProcessed(st.iterations() * static_cast<std::int64_t>(cfg.n));
  st.SetLabel(st.range(0) == 0 ? "serial" : "parallel");
}
BENCHMARK(BM_Delta)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_SampleSmoothed(benchmark::State& st) {
  RandomStream rng(1, StreamPurpose::kTest, 0);
  const double n = static_cast<double>(trefoil().size());
  for (auto _ : st) benchmark::DoNotOptimize(trefoil().sample(rng.uniform() * n));
}
BENCHMARK(BM_SampleSmoothed);

}  // namespace

BENCHMARK_MAIN();
