#include <benchmark/benchmark.h>

#include "itg/classify.hpp"
#include "itg/families.hpp"
#include "itg/galois.hpp"
#include "itg/gl2.hpp"
#include "itg/isogeny.hpp"

using namespace itg;

static void BM_FactorInteger(benchmark::State& state) {
    Integer n("614889782588491410");  // primorial(47)
    for (auto _ : state) benchmark::DoNotOptimize(factor_integer(n));
}
BENCHMARK(BM_FactorInteger);

static void BM_DivisionPolynomial(benchmark::State& state) {
    Curve E = curve(1, -1, 1, -1, -14);
    for (auto _ : state) benchmark::DoNotOptimize(division_polynomial(E, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_DivisionPolynomial)->Arg(5)->Arg(7)->Arg(13);

static void BM_FactorDivisionPolynomial(benchmark::State& state) {
    PolyQ psi = division_polynomial(curve(1, -1, 1, -1, -14), static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(factor_over_Q(psi));
}
BENCHMARK(BM_FactorDivisionPolynomial)->Arg(5)->Arg(7);

static void BM_Torsion(benchmark::State& state) {
    Curve E = family_curve(family_by_name("Z12"), Rational(1, 3));
    for (auto _ : state) benchmark::DoNotOptimize(torsion_subgroup(E));
}
BENCHMARK(BM_Torsion);

static void BM_IsogenyClass17a(benchmark::State& state) {
    Curve E = curve(1, -1, 1, -1, -14);
    for (auto _ : state) benchmark::DoNotOptimize(isogeny_class(E));
}
BENCHMARK(BM_IsogenyClass17a)->Unit(benchmark::kMillisecond);

static void BM_IsogenyClassZ12(benchmark::State& state) {
    Curve E = family_curve(family_by_name("Z12"), Rational(1, 3));
    for (auto _ : state) benchmark::DoNotOptimize(itg_label(isogeny_class(E)));
}
BENCHMARK(BM_IsogenyClassZ12)->Unit(benchmark::kMillisecond);

static void BM_PredictedGraph(benchmark::State& state) {
    auto images = lift_to_adequate({{2, named_group("H215c")}});
    for (auto _ : state) benchmark::DoNotOptimize(predicted_graph(images));
}
BENCHMARK(BM_PredictedGraph)->Unit(benchmark::kMillisecond);

static void BM_GroupClosure(benchmark::State& state) {
    const int p = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(twist_closure(borel(p)));
}
BENCHMARK(BM_GroupClosure)->Arg(7)->Arg(13);

static void BM_Index2Subgroups(benchmark::State& state) {
    GroupModN G = twist_closure(borel(static_cast<int>(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(subgroups_of_index(G, 2));
}
BENCHMARK(BM_Index2Subgroups)->Arg(7)->Arg(13);

BENCHMARK_MAIN();
