#include <benchmark/benchmark.h>

#include "casimir/condensate.hpp"
#include "casimir/ellipj.hpp"
#include "casimir/meanfield.hpp"
#include "casimir/spectrum.hpp"

namespace {

using namespace casimir;

const PhysicalParams kUnit{1.0, 1.0};

void BM_JacobiTriple(benchmark::State& state) {
  const auto k = EllipticModulus::from_k(0.7);
  double z = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(jacobi_triple(z, k));
    z += 1e-3;
  }
}
BENCHMARK(BM_JacobiTriple);

void BM_CompleteK(benchmark::State& state) {
  const auto k = EllipticModulus::from_k(0.9);
  for (auto _ : state) benchmark::DoNotOptimize(complete_K(k));
}
BENCHMARK(BM_CompleteK);

void BM_BoundStateRobin(benchmark::State& state) {
  const ModelConfig cfg = RobinDirichletModel{2.0, 2.2};
  for (auto _ : state) benchmark::DoNotOptimize(bound_state(cfg, kUnit));
}
BENCHMARK(BM_BoundStateRobin);

void BM_SolveRobin(benchmark::State& state) {
  const ModelConfig cfg = RobinDirichletModel{2.0, static_cast<double>(state.range(0)) / 100.0};
  for (auto _ : state) benchmark::DoNotOptimize(solve_robin(cfg, kUnit));
}
BENCHMARK(BM_SolveRobin)->Arg(55)->Arg(100)->Arg(220)->Unit(benchmark::kMillisecond);

void BM_SolveHole(benchmark::State& state) {
  const ModelConfig cfg = PotentialHoleModel{6.0, 1.0};
  for (auto _ : state) benchmark::DoNotOptimize(solve_hole(cfg, kUnit));
}
BENCHMARK(BM_SolveHole)->Unit(benchmark::kMillisecond);

void BM_CondensateEnergy(benchmark::State& state) {
  const auto sol = solve_condensate(RobinDirichletModel{2.0, 2.2}, kUnit);
  for (auto _ : state) benchmark::DoNotOptimize(condensate_energy(sol));
}
BENCHMARK(BM_CondensateEnergy)->Unit(benchmark::kMicrosecond);

void BM_ModeFunction(benchmark::State& state) {
  const auto V = FluctuationPotential::from_condensate(
      solve_condensate(RobinDirichletModel{1.3, 3.0}, kUnit));
  const double xi = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(mode_fn_numeric(xi, V, 1.3, 1e-12));
}
BENCHMARK(BM_ModeFunction)->Arg(1)->Arg(10)->Arg(100)->Unit(benchmark::kMicrosecond);

void BM_VacuumEnergyExact(benchmark::State& state) {
  const auto V = FluctuationPotential::from_condensate(
      solve_condensate(RobinDirichletModel{1.3, 3.0}, kUnit));
  VacuumEnergyOptions opts;
  opts.check_stability = false;
  for (auto _ : state) benchmark::DoNotOptimize(vacuum_energy_renormalized(V, kUnit, 1.3, opts));
}
BENCHMARK(BM_VacuumEnergyExact)->Unit(benchmark::kMillisecond)->Iterations(3);

void BM_VacuumEnergySubcritical(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(vacuum_energy_subcritical(kUnit, 0.5, 2.2));
}
BENCHMARK(BM_VacuumEnergySubcritical)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
