#include "wrat/frobenius.hpp"
#include "wrat/ratcheck.hpp"

#include <benchmark/benchmark.h>

using namespace wrat;

static void BM_E8Table(benchmark::State &state) {
    auto rs = RootSystem::build(SimpleType::parse("E8"));
    for (auto _ : state)
        benchmark::DoNotOptimize(ChevalleyTable::build(rs));
}
BENCHMARK(BM_E8Table)->Unit(benchmark::kMillisecond);

namespace {

struct E8Case {
    ChevalleyTable table;
    DynkinGrading grading;
    LieElement f;
    CartanElement v;
};

const E8Case &a4_a3() {
    static const E8Case c = [] {
        auto rec = *lookup_exceptional_label(SimpleType::parse("E8"), "A4+A3");
        auto table = ChevalleyTable::build(RootSystem::build(rec.algebra));
        auto grading = grade(table, rec.h);
        auto f = table.sum_of_negative_root_vectors(rec.f_roots);
        return E8Case{std::move(table), std::move(grading), std::move(f), *rec.v};
    }();
    return c;
}

} // namespace

static void BM_ExactE8A4A3(benchmark::State &state) {
    const auto &c = a4_a3();
    for (auto _ : state)
        benchmark::DoNotOptimize(exact_condition(c.table, c.grading, c.f, c.v));
}
BENCHMARK(BM_ExactE8A4A3)->Unit(benchmark::kMillisecond);

static void BM_FastE8A4A3(benchmark::State &state) {
    const auto &c = a4_a3();
    for (auto _ : state)
        benchmark::DoNotOptimize(fast_condition(c.table, c.grading, c.f, c.v));
}
BENCHMARK(BM_FastE8A4A3)->Unit(benchmark::kMillisecond);

static void BM_RecursionScalar(benchmark::State &state) {
    frob::AnalyticMatrixSeries a;
    a.ell = 1;
    a.coeffs = {{{frob::Poly::constant(frob::QI(make_rational(1, 2)))}},
                {{frob::Poly({frob::QI(0), frob::QI(1), frob::QI(1)})}}};
    frob::VectorSeries f;
    f.ell = 1;
    f.coeffs = {{frob::Poly()}, {frob::Poly::constant(1)}};
    const int order = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(frob::recursion_solve(a, f, {}, order));
}
BENCHMARK(BM_RecursionScalar)->Arg(10)->Arg(25)->Arg(50)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
