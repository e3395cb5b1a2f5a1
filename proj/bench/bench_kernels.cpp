// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <random>

#include "sigmaf/enumerate.hpp"
#include "sigmaf/kernels.hpp"

using namespace sigmaf;

namespace {

std::vector<SetMask> random_sets(const UniversePtr& u, std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<SetMask> sets;
  for (std::size_t i = 0; i < n; ++i) {
    SetMask m = u->empty_set();
    for (std::size_t p = 0; p < u->size(); ++p) {
      if (rng() & 1U) m.set(p);
    }
    sets.push_back(m);
  }
  return sets;
}

void BM_CellsReference(benchmark::State& state) {
  auto u = Universe::numbered(static_cast<std::size_t>(state.range(1)));
  const auto sets = random_sets(u, static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::cells_reference(sets, u->full_set()));
}

void BM_CellsParallel(benchmark::State& state) {
  auto u = Universe::numbered(static_cast<std::size_t>(state.range(1)));
  const auto sets = random_sets(u, static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::cells_parallel(sets, u->full_set()));
}

void BM_EnumerateSerial(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_families_serial(3, static_cast<std::size_t>(state.range(0))));
  }
}

void BM_EnumerateParallel(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_families(3, static_cast<std::size_t>(state.range(0))));
  }
}

}  // namespace

BENCHMARK(BM_CellsReference)->Args({8, 64})->Args({12, 256})->Args({16, 1024})->Args({20, 4096});
BENCHMARK(BM_CellsParallel)->Args({8, 64})->Args({12, 256})->Args({16, 1024})->Args({20, 4096});
BENCHMARK(BM_EnumerateSerial)->Arg(6)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumerateParallel)->Arg(6)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
