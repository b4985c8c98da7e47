#include <benchmark/benchmark.h>

#include "oddtrail/oddtrail.hpp"

using namespace oddtrail;

namespace {

MultiGraph regular(int degree, int n, std::uint64_t seed, int floor = 0, std::optional<int> exact = std::nullopt) {
  return generate(InstanceSpec{degree, n, seed, floor, exact}).graph;
}

void BM_EdgeConnectivity(benchmark::State& state) {
  MultiGraph g = regular(6, static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(edge_connectivity(g));
}
BENCHMARK(BM_EdgeConnectivity)->Arg(15)->Arg(51)->Arg(201);

void BM_Rooted2Odd(benchmark::State& state) {
  MultiGraph g = regular(4, static_cast<int>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(rooted_2_odd(g));
}
BENCHMARK(BM_Rooted2Odd)->Arg(15)->Arg(51)->Arg(201);

// Unsigned rooted 3-odd at each connectivity level.
void BM_Rooted3Odd(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int lambda = static_cast<int>(state.range(1));
  MultiGraph g = lambda == 6 ? regular(6, n, 3, 6) : regular(6, n, 3, 0, lambda);
  for (auto _ : state) benchmark::DoNotOptimize(rooted_3_odd(g));
}
BENCHMARK(BM_Rooted3Odd)->ArgsProduct({{13, 31, 61}, {2, 4, 6}});

void BM_KOdd(benchmark::State& state) {
  MultiGraph g = regular(8, static_cast<int>(state.range(0)), 4);
  std::vector<Trail> w = odd_circuit_witnesses(g);
  for (auto _ : state) benchmark::DoNotOptimize(k_odd(g, 4, &w));
}
BENCHMARK(BM_KOdd)->Arg(11)->Arg(41)->Arg(101);

void BM_BruteForce(benchmark::State& state) {
  MultiGraph g = regular(6, 5, 5);
  const int threads = static_cast<int>(state.range(0));
  for (auto _ : state) {
    for (VertexId v = 0; v < g.order(); ++v) {
      benchmark::DoNotOptimize(brute_force_exists(g, OracleQuery{3, true, v, false, 18}, {}, threads));
    }
  }
}
BENCHMARK(BM_BruteForce)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
