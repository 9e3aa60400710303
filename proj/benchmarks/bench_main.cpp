// Micro benchmarks for the exact-arithmetic hot paths: Bareiss Sylvester
// determinants, discriminants of the sparse quartic family, and a full
// per-instance scan step.

#include <benchmark/benchmark.h>

#include "ratmle/families.hpp"
#include "ratmle/resultant.hpp"

using namespace ratmle;

static void BM_discriminant_dense_cubic(benchmark::State& state) {
    UniPolyOverRing f = UniPolyOverRing::sparse_support(4, {0, 1, 2, 3}, {0, 1, 2, 3});
    for (auto _ : state) benchmark::DoNotOptimize(discriminant_t(f));
}
BENCHMARK(BM_discriminant_dense_cubic);

// The largest instance of the bound-17 univariate family.
static void BM_discriminant_15_16_17(benchmark::State& state) {
    UniPolyOverRing f = UniPolyOverRing::sparse_support(4, {0, 15, 16, 17}, {0, 1, 2, 3});
    for (auto _ : state) benchmark::DoNotOptimize(discriminant_t(f));
}
BENCHMARK(BM_discriminant_15_16_17);

static void BM_trinomial_resultant_16_17_15_17(benchmark::State& state) {
    UniPolyOverRing f = UniPolyOverRing::sparse_support(6, {0, 16, 17}, {0, 1, 2});
    UniPolyOverRing g = UniPolyOverRing::sparse_support(6, {0, 15, 17}, {3, 4, 5});
    for (auto _ : state) benchmark::DoNotOptimize(sylvester_resultant(f, g));
}
BENCHMARK(BM_trinomial_resultant_16_17_15_17);

static void BM_univariate_instance_scan(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(univariate_instance(1, 4, 7));
}
BENCHMARK(BM_univariate_instance_scan);

static void BM_linear_multiple_scan_binomial(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(
            linear_multiple_scan(MultiplierShape::binomial, MultiplierSign::minus, 3));
}
BENCHMARK(BM_linear_multiple_scan_binomial);

BENCHMARK_MAIN();
