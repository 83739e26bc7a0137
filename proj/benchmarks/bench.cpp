#include <benchmark/benchmark.h>

#include "h90/certificates.hpp"
#include "h90/descent.hpp"
#include "h90/ramification.hpp"

using namespace h90;

static void BM_ReduceQuotient(benchmark::State& state) {
    std::uint64_t p = static_cast<std::uint64_t>(state.range(0));
    unsigned d = static_cast<unsigned>(state.range(1));
    for (auto _ : state) {
        QuotientRecord rec = reduce_quotient(p, d);
        benchmark::DoNotOptimize(rec.degree);
    }
}
BENCHMARK(BM_ReduceQuotient)->Args({11, 5})->Args({2, 127})->Args({7, 199})->Args({0, 60});

static void BM_TorsionDefect(benchmark::State& state) {
    std::uint64_t p = static_cast<std::uint64_t>(state.range(0));
    unsigned d = static_cast<unsigned>(state.range(1));
    for (auto _ : state) {
        unsigned defect = torsion_defect(p, d);
        benchmark::DoNotOptimize(defect);
    }
}
BENCHMARK(BM_TorsionDefect)->Args({2, 59})->Args({7, 36})->Args({31, 30});

static void BM_TwistedSet(benchmark::State& state) {
    std::uint64_t p = static_cast<std::uint64_t>(state.range(0));
    unsigned k = static_cast<unsigned>(state.range(1));
    for (auto _ : state) {
        TwistedSet lam = build_twisted_set(p, k);
        benchmark::DoNotOptimize(lam.elements.size());
    }
}
BENCHMARK(BM_TwistedSet)->Args({19, 1})->Args({19, 2})->Args({5, 4});

static void BM_CollisionCount(benchmark::State& state) {
    std::uint64_t p = static_cast<std::uint64_t>(state.range(0));
    unsigned k = static_cast<unsigned>(state.range(1));
    QuotientRecord rec = reduce_quotient(p, 2);
    for (auto _ : state) {
        CollisionCount cc = collision_count(rec.reduced, p, k);
        benchmark::DoNotOptimize(cc.collisions);
    }
}
BENCHMARK(BM_CollisionCount)->Args({5, 3})->Args({7, 3});

static void BM_BranchPolynomial(benchmark::State& state) {
    std::uint64_t p = static_cast<std::uint64_t>(state.range(0));
    unsigned d = static_cast<unsigned>(state.range(1));
    for (auto _ : state) {
        BranchData bd = branch_polynomial(p, d);
        benchmark::DoNotOptimize(bd.morse);
    }
}
BENCHMARK(BM_BranchPolynomial)->Args({7, 5})->Args({0, 12})->Args({2, 13});

BENCHMARK_MAIN();
