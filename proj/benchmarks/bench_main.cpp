#include <benchmark/benchmark.h>

#include <random>

#include "copwin/eta_solver.hpp"
#include "copwin/graph_gen.hpp"
#include "copwin/ordinal.hpp"
#include "copwin/sampling.hpp"
#include "copwin/symbolic.hpp"

namespace {

using namespace copwin;

void BM_EtaAllTruncation(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  FiniteGraph g = generate_truncation({n, 2, true});
  for (auto _ : state) {
    EtaTable t = eta_all(g);
    benchmark::DoNotOptimize(t.rho_g);
  }
  state.SetComplexityN(static_cast<benchmark::IterationCount>(g.size()));
}
BENCHMARK(BM_EtaAllTruncation)->Arg(4)->Arg(8)->Arg(12)->Arg(16)->Complexity();

void BM_EtaAllRandom(benchmark::State& state) {
  FiniteGraph g =
      generate_random(static_cast<std::size_t>(state.range(0)), 0.3, 17);
  for (auto _ : state) {
    EtaTable t = eta_all(g);
    benchmark::DoNotOptimize(t.eta_g);
  }
}
BENCHMARK(BM_EtaAllRandom)->Arg(16)->Arg(32)->Arg(64);

void BM_OrdinalAdd(benchmark::State& state) {
  std::mt19937_64 rng(3);
  Ordinal bound = Ordinal::parse("w^w^2");
  std::vector<Ordinal> pool;
  for (int i = 0; i < 256; ++i) pool.push_back(random_ordinal_below(bound, rng));
  std::size_t i = 0;
  for (auto _ : state) {
    Ordinal sum = pool[i % 256] + pool[(i + 1) % 256];
    benchmark::DoNotOptimize(sum);
    ++i;
  }
}
BENCHMARK(BM_OrdinalAdd);

void BM_OrdinalCompare(benchmark::State& state) {
  std::mt19937_64 rng(4);
  Ordinal bound = Ordinal::parse("w^w^2");
  std::vector<Ordinal> pool;
  for (int i = 0; i < 256; ++i) pool.push_back(random_ordinal_below(bound, rng));
  std::size_t i = 0;
  for (auto _ : state) {
    bool less = pool[i % 256] < pool[(i + 3) % 256];
    benchmark::DoNotOptimize(less);
    ++i;
  }
}
BENCHMARK(BM_OrdinalCompare);

void BM_EtaBounds(benchmark::State& state) {
  SymbolicGraph g(Ordinal::parse("w^w"), 3, true);
  std::mt19937_64 rng(5);
  std::vector<SymbolicVertex> pool;
  for (int i = 0; i < 128; ++i)
    pool.push_back(SymbolicVertex::grid(random_ordinal_below(g.gamma(), rng),
                                        random_ordinal_below(g.gamma(), rng)));
  std::size_t i = 0;
  for (auto _ : state) {
    OrdinalBound b = eta_bounds(g, pool[i % 128], pool[(i + 7) % 128]);
    benchmark::DoNotOptimize(b.exact);
    ++i;
  }
}
BENCHMARK(BM_EtaBounds);

}  // namespace

BENCHMARK_MAIN();
