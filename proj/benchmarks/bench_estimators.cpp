#include <benchmark/benchmark.h>

#include <loschmidt/loschmidt.hpp>

using namespace loschmidt;

namespace {

EstimatorConfig small_config(const Scenario& sc, std::size_t n_traj) {
  EstimatorConfig c;
  c.n_traj = n_traj;
  c.tau = sc.tau;
  c.n_steps = 100;
  c.hbar = sc.hbar;
  c.threads = 1;
  return c;
}

void BM_F0(benchmark::State& st) {
  const auto sc = load("morse_like");
  const auto c = small_config(sc, static_cast<std::size_t>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(f0(sc.state, sc.pair, c));
  st.SetItemsProcessed(st.iterations() * st.range(0) * 100);
}
BENCHMARK(BM_F0)->Arg(1000)->Arg(10000);

void BM_F1(benchmark::State& st) {
  const auto sc = load("morse_like");
  const auto c = small_config(sc, static_cast<std::size_t>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(f1_dr(sc.state, sc.pair, c));
  st.SetItemsProcessed(st.iterations() * st.range(0) * 100);
}
BENCHMARK(BM_F1)->Arg(1000)->Arg(10000);

void BM_F2Mc(benchmark::State& st) {
  const auto sc = load("cubic_perturbation");
  const auto c = small_config(sc, static_cast<std::size_t>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(f2_mc(sc.state, sc.pair, c));
  st.SetItemsProcessed(st.iterations() * st.range(0) * 100);
}
BENCHMARK(BM_F2Mc)->Arg(1000)->Arg(10000);

void BM_F2Chain(benchmark::State& st) {
  const auto sc = load("ho_diff_k");
  auto c = small_config(sc, 1);
  c.n_steps = static_cast<std::size_t>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(f2_gaussian_chain(sc.state, sc.pair, c));
}
BENCHMARK(BM_F2Chain)->Arg(100)->Arg(1000);

void BM_DimensionSweep(benchmark::State& st) {
  const auto sc = displaced_ho_product(static_cast<std::size_t>(st.range(0)));
  const auto c = small_config(sc, 5000);
  for (auto _ : st) benchmark::DoNotOptimize(f1_dr(sc.state, sc.pair, c));
}
BENCHMARK(BM_DimensionSweep)->Arg(1)->Arg(2)->Arg(4)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
