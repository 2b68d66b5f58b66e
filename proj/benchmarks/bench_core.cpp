#include <benchmark/benchmark.h>

#include "plumb/decompose.hpp"
#include "plumb/forms.hpp"
#include "plumb/linalg.hpp"
#include "plumb/omega.hpp"
#include "plumb/roots.hpp"
#include "plumb/tree.hpp"

using namespace plumb;

static void BM_SpiralInertia(benchmark::State& state) {
    const SymmetricForm s = spiral_form(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(inertia(s));
}
BENCHMARK(BM_SpiralInertia)->Arg(10)->Arg(25)->Arg(50);

static void BM_EnumerateTrees(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_free_trees(n));
}
BENCHMARK(BM_EnumerateTrees)->Arg(10)->Arg(12)->Arg(14);

static void BM_AlexanderPolynomial(benchmark::State& state) {
    const Tree t = spider({2, 3, static_cast<int>(state.range(0))});
    const SeifertMatrix a = seifert_matrix(t);
    for (auto _ : state) benchmark::DoNotOptimize(alexander_poly(a.entries));
}
BENCHMARK(BM_AlexanderPolynomial)->Arg(6)->Arg(10)->Arg(14);

static void BM_Certificate(benchmark::State& state) {
    Tree chain = spider({1, 1, 1, 2});
    for (int m = 1; m < state.range(0); ++m) chain = glue(chain, 0, spider({1, 1, 1, 2}), 5);
    for (auto _ : state) benchmark::DoNotOptimize(lemma1_decompose(chain));
}
BENCHMARK(BM_Certificate)->Arg(2)->Arg(4)->Arg(8);

static void BM_SignatureProfile(benchmark::State& state) {
    const Tree t = spider({1, 2, static_cast<int>(state.range(0))});
    const SeifertMatrix a = seifert_matrix(t);
    for (auto _ : state) benchmark::DoNotOptimize(signature_profile(a));
}
BENCHMARK(BM_SignatureProfile)->Arg(4)->Arg(6)->Arg(8);

static void BM_CircleRootCount(benchmark::State& state) {
    const Tree t = spider({1, 2, static_cast<int>(state.range(0))});
    const IntPoly delta = alexander_poly(seifert_matrix(t).entries);
    for (auto _ : state) benchmark::DoNotOptimize(circle_root_count(delta));
}
BENCHMARK(BM_CircleRootCount)->Arg(6)->Arg(10)->Arg(14);

BENCHMARK_MAIN();
