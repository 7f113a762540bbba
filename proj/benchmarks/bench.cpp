#include "codepth/classtable.hpp"
#include "codepth/galg.hpp"
#include "codepth/koszul.hpp"
#include "codepth/resolve.hpp"
#include "codepth/verify.hpp"

#include <benchmark/benchmark.h>

using namespace codepth;

static void BM_Taylor(benchmark::State& state) {
    auto inv = class_invariants(ClassId::t(), 3, 0, 0, 5, 5);
    auto s = bass_series(ClassId::t(), inv);
    for (auto _ : state) benchmark::DoNotOptimize(taylor(s, 0, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_Taylor)->Arg(16)->Arg(64)->Arg(256);

static void BM_PoincareOracle(benchmark::State& state) {
    auto inv = class_invariants(ClassId::h(2, 1), 3, 0, 0, 5, 5);
    auto A = table_algebra(ClassId::h(2, 1), inv, FieldSpec::prime(10007));
    for (auto _ : state) benchmark::DoNotOptimize(poincare_oracle(A, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_PoincareOracle)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);

static void BM_BassOracle(benchmark::State& state) {
    auto inv = class_invariants(ClassId::t(), 3, 0, 0, 5, 5);
    auto A = table_algebra(ClassId::t(), inv, FieldSpec::prime(10007));
    for (auto _ : state) benchmark::DoNotOptimize(bass_oracle(A, 10));
}
BENCHMARK(BM_BassOracle)->Unit(benchmark::kMillisecond);

static RingPresentation xy_power_plus_z2(int k, FieldSpec f) {
    RingPresentation R{f, 3, {}};
    for (int a = k; a >= 0; --a) R.gens.push_back({Term{1, {a, k - a, 0}}});
    R.gens.push_back({Term{1, {0, 0, 2}}});
    return R;
}

static void BM_KoszulHomology(benchmark::State& state) {
    auto R = xy_power_plus_z2(static_cast<int>(state.range(0)), FieldSpec::rationals());
    for (auto _ : state) benchmark::DoNotOptimize(koszul_homology(R));
}
BENCHMARK(BM_KoszulHomology)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_ClassifyRing(benchmark::State& state) {
    auto R = xy_power_plus_z2(3, FieldSpec::prime(10007));
    for (auto _ : state) benchmark::DoNotOptimize(classify(R));
}
BENCHMARK(BM_ClassifyRing)->Unit(benchmark::kMillisecond);

static void BM_VerifyFormula(benchmark::State& state) {
    const auto f = all_formulas[static_cast<std::size_t>(state.range(0))];
    state.SetLabel(to_string(f));
    for (auto _ : state) benchmark::DoNotOptimize(verify_formula(f, FieldSpec::prime(10007), 8));
}
BENCHMARK(BM_VerifyFormula)->DenseRange(0, static_cast<int>(all_formulas.size()) - 1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
