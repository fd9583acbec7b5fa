// Serial reference vs OpenMP explicit-flux kernels, and a full IMEX step.

#include <benchmark/benchmark.h>

#include <cmath>

#include "exner/boundary.hpp"
#include "exner/kernels.hpp"
#include "exner/stepper.hpp"

namespace {

exner::State wavy_state(std::size_t n) {
  exner::State s = exner::State::uniform(n, {1.0, 0.2, 0.1, 0.0});
  for (std::size_t i = 0; i < n; ++i) {
    const double x = static_cast<double>(i) / static_cast<double>(n);
    s.eta[i] += 0.01 * std::sin(40.0 * x);
    s.q[i] += 0.005 * std::cos(40.0 * x);
  }
  return s;
}

template <exner::Exec E>
void BM_EdgeFluxes(benchmark::State& st) {
  const auto n = static_cast<std::size_t>(st.range(0));
  const exner::State s = wavy_state(n);
  const exner::GhostedState gs(s, exner::GhostCell{s.eta[0], s.q[0], s.zb[0], s.b[0]},
                               exner::GhostCell{s.eta[n - 1], s.q[n - 1], s.zb[n - 1], s.b[n - 1]});
  const exner::PhysicalParams p;
  for (auto _ : st) benchmark::DoNotOptimize(exner::explicit_edge_fluxes(gs, p, E));
  st.SetItemsProcessed(st.iterations() * static_cast<long>(n));
}
BENCHMARK(BM_EdgeFluxes<exner::Exec::serial>)->RangeMultiplier(4)->Range(1 << 10, 1 << 18);
BENCHMARK(BM_EdgeFluxes<exner::Exec::parallel>)->RangeMultiplier(4)->Range(1 << 10, 1 << 18);

template <exner::Exec E>
void BM_SecondOrderStep(benchmark::State& st) {
  const auto n = static_cast<std::size_t>(st.range(0));
  const exner::Grid grid = exner::Grid::uniform(-2.0, 4.0, 4.0, n);
  const exner::PhysicalParams p;
  const exner::State s = exner::State::uniform(n, {1.0, 0.2, 0.1, 0.0});
  exner::BoundaryController bc(grid, exner::BoundaryStrategy::neumann(), {}, p.g, s);
  exner::StepContext ctx{p, grid, bc, nullptr, E};
  const double dt = 7.7 * grid.dx / exner::max_wave_speed(s, p, E);
  for (auto _ : st) benchmark::DoNotOptimize(exner::second_order_step(s, 0.0, dt, ctx));
  st.SetItemsProcessed(st.iterations() * static_cast<long>(n));
}
BENCHMARK(BM_SecondOrderStep<exner::Exec::serial>)->RangeMultiplier(4)->Range(1 << 10, 1 << 16);
BENCHMARK(BM_SecondOrderStep<exner::Exec::parallel>)->RangeMultiplier(4)->Range(1 << 10, 1 << 16);

}  // namespace

BENCHMARK_MAIN();
