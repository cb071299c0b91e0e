#include <benchmark/benchmark.h>

#include <cmath>

#include "gossip_age/gossip_age.hpp"

using namespace gossip_age;

static void BM_SolveExact(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Graph g = gen_random_regular(n, 3, 1);
  for (auto _ : state) benchmark::DoNotOptimize(solve_exact(g, {}).age(1u));
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << n));
}
BENCHMARK(BM_SolveExact)->Arg(10)->Arg(14)->Arg(18);

static void BM_BipartiteCorner(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(bipartite_corner(n / 2, n - n / 2).u01);
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BipartiteCorner)->RangeMultiplier(4)->Range(64, 4096)->Complexity();

static void BM_BipartiteGrid(benchmark::State& state) {
  const auto side = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(bipartite_grid(side, side).at(0, 1));
}
BENCHMARK(BM_BipartiteGrid)->Arg(64)->Arg(512);

static void BM_Simulate(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Graph g = gen_random_regular(n, 3, 2);
  SimConfig cfg;
  cfg.t_end = 200;
  cfg.track_network_average = true;
  std::uint64_t events = 0;
  for (auto _ : state) {
    cfg.seed++;
    events += simulate(g, cfg).events;
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(events));
}
BENCHMARK(BM_Simulate)->Arg(256)->Arg(4096)->Unit(benchmark::kMillisecond);

static void BM_GenGnp(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const double p = 4 * std::log(static_cast<double>(n)) / static_cast<double>(n);
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(gen_gnp(n, p, ++seed).size());
}
BENCHMARK(BM_GenGnp)->Arg(2000)->Arg(20000);

static void BM_CheegerBruteforce(benchmark::State& state) {
  const Graph g = gen_random_regular(static_cast<std::size_t>(state.range(0)), 3, 3);
  for (auto _ : state) benchmark::DoNotOptimize(cheeger_bruteforce(g).boundary);
}
BENCHMARK(BM_CheegerBruteforce)->Arg(16)->Arg(20);
BENCHMARK_MAIN();
