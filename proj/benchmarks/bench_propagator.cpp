#include <benchmark/benchmark.h>

#include <loschmidt/loschmidt.hpp>

using namespace loschmidt;

namespace {

void BM_SplitStep(benchmark::State& st) {
  const auto sc = load("morse_like");
  const auto grid = GridSpec::uniform(1, sc.grid.q_min[0], sc.grid.q_max[0], static_cast<std::size_t>(st.range(0)));
  auto psi = GridWavefunction::from_component(sc.state.components()[0], grid);
  KickedPropagator u(grid, sc.pair.h_prime, sc.tau, sc.hbar, LeakMonitor{0.5, 1.0, false});
  for (auto _ : st) {
    u.step(psi);
    benchmark::ClobberMemory();
  }
  st.SetComplexityN(st.range(0));
}
BENCHMARK(BM_SplitStep)->RangeMultiplier(4)->Range(256, 16384)->Complexity(benchmark::oNLogN);

void BM_FidelityExact(benchmark::State& st) {
  const auto sc = load("displaced_ho");
  for (auto _ : st) benchmark::DoNotOptimize(fidelity_exact(sc.state, sc.pair, 252, sc.tau, sc.grid));
}
BENCHMARK(BM_FidelityExact);

void BM_ClassicalMap(benchmark::State& st) {
  const auto sc = load("kicked_rotor");
  PhaseSpacePoint x(0.3, 0.7);
  for (auto _ : st) {
    x = map_step(x, sc.pair.average, sc.tau);
    benchmark::DoNotOptimize(x);
  }
}
BENCHMARK(BM_ClassicalMap);

}  // namespace
