#include "hypermap/kz.hpp"
#include "hypermap/orbifold.hpp"
#include "hypermap/sequenced.hpp"
#include "hypermap/series.hpp"

#include <benchmark/benchmark.h>

using namespace hypermap;

static void BM_KzFill(benchmark::State& state)
{
    const int genus = static_cast<int>(state.range(0));
    const int darts = static_cast<int>(state.range(1));
    for (auto _ : state) {
        KzTable t = KzTable::fill(genus, darts);
        benchmark::DoNotOptimize(t);
    }
}
BENCHMARK(BM_KzFill)->Args({6, 14})->Args({10, 30})->Args({24, 50})->Unit(benchmark::kMillisecond);

static void BM_SensedTable(benchmark::State& state)
{
    const int genus = static_cast<int>(state.range(0));
    const int darts = static_cast<int>(state.range(1));
    const KzTable kz = KzTable::fill(genus, darts);
    for (auto _ : state) {
        CountTable t = sensedTable(genus, darts, kz);
        benchmark::DoNotOptimize(t);
    }
}
BENCHMARK(BM_SensedTable)->Args({0, 14})->Args({6, 14})->Args({2, 30})->Args({10, 30})->Unit(benchmark::kMillisecond);

// Fresh memo per iteration: measures the whole oracle, not lookups.
static void BM_SeqRooted(benchmark::State& state)
{
    const int darts = static_cast<int>(state.range(0));
    for (auto _ : state) {
        SequencedHypermapCounter seq;
        BigInt sum = 0;
        for (int g = 0; g <= 2; ++g) {
            for (int f = 1; f <= darts; ++f) {
                for (int e = 1; e <= darts; ++e) {
                    sum += seq.rootedFromSequenced(g, darts, f, e);
                }
            }
        }
        benchmark::DoNotOptimize(sum);
    }
}
BENCHMARK(BM_SeqRooted)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);

static void BM_Univariate(benchmark::State& state)
{
    const int genus = static_cast<int>(state.range(0));
    for (auto _ : state) {
        USeries s = hgUnivariate(genus, 30);
        benchmark::DoNotOptimize(s);
    }
}
BENCHMARK(BM_Univariate)->DenseRange(0, 6, 2)->Unit(benchmark::kMillisecond);

static void BM_Trivariate(benchmark::State& state)
{
    const int genus = static_cast<int>(state.range(0));
    for (auto _ : state) {
        TSeries s = hgTrivariate(genus, 12);
        benchmark::DoNotOptimize(s);
    }
}
BENCHMARK(BM_Trivariate)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
