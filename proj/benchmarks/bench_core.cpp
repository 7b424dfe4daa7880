#include <benchmark/benchmark.h>

#include "algdeg/bounds.hpp"
#include "algdeg/certify.hpp"
#include "algdeg/factor.hpp"
#include "algdeg/rootbox.hpp"
#include "algdeg/sequences.hpp"

using namespace algdeg;

namespace {

AlgebraicNumber real_root(const IntPolynomial& p, const Dyadic& lo, const Dyadic& hi) {
    return AlgebraicNumber::make(p, {{lo, hi}, DyadicInterval::point(Dyadic())});
}

void BM_IsolateRoots(benchmark::State& state) {
    // x^d - 3x + 1
    std::vector<mpz_class> c(static_cast<std::size_t>(state.range(0)) + 1, 0);
    c[0] = 1;
    c[1] = -3;
    c.back() = 1;
    IntPolynomial p(c);
    for (auto _ : state) benchmark::DoNotOptimize(isolate_all_roots(p, Dyadic::pow2(-64)));
}
BENCHMARK(BM_IsolateRoots)->Arg(4)->Arg(8)->Arg(16);

void BM_Factorize(benchmark::State& state) {
    // (x^4 - 10x^2 + 1)(x^3 - 2)(x^2 + x + 1)
    IntPolynomial p = IntPolynomial({1, 0, -10, 0, 1}) * IntPolynomial({-2, 0, 0, 1}) * IntPolynomial({1, 1, 1});
    for (auto _ : state) benchmark::DoNotOptimize(factorize(p));
}
BENCHMARK(BM_Factorize);

void BM_FieldSum(benchmark::State& state) {
    auto a = real_root(IntPolynomial({-2, 0, 0, 1}), Dyadic(1), Dyadic(2));
    auto b = real_root(IntPolynomial({-3, 0, 1}), Dyadic(1), Dyadic(2));
    for (auto _ : state) benchmark::DoNotOptimize(a + b);
}
BENCHMARK(BM_FieldSum);

void BM_MahlerMeasure(benchmark::State& state) {
    auto a = real_root(IntPolynomial({-1, 0, 0, -1, 1}), Dyadic(1), Dyadic(2));
    const Dyadic tol = Dyadic::pow2(-state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(mahler_measure(a, tol));
}
BENCHMARK(BM_MahlerMeasure)->Arg(32)->Arg(70)->Arg(200);

void BM_Separation(benchmark::State& state) {
    auto a = real_root(IntPolynomial({-3, 0, 1}), Dyadic(1), Dyadic(2));
    auto b = real_root(IntPolynomial({-2, 0, 1}), Dyadic(1), Dyadic(2));
    for (auto _ : state) benchmark::DoNotOptimize(check_separation(a, b, Dyadic::pow2(-20)));
}
BENCHMARK(BM_Separation);

void BM_ExponentSweep(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(exponent_sweep(3, 3, 3, 5));
}
BENCHMARK(BM_ExponentSweep);

void BM_PhiTrace(benchmark::State& state) {
    const std::size_t N = 9;
    std::vector<TowerBase> pattern;
    for (std::size_t k = 0; k < N; ++k) pattern.push_back(k % 2 == 0 ? TowerBase::hi : TowerBase::lo);
    auto table = SequenceTable::from_integers(oscillating_tower(Dyadic(2), Dyadic(3), pattern, 1, 1, DegreeList(N, 1)));
    HypothesisConfig cfg;
    cfg.c = mpq_class(9, 10);
    cfg.ds = DegreeList(N, 1);
    cfg.betas = {1};
    auto lc = LinearCombination::make(table, std::vector<mpz_class>{1});
    for (auto _ : state) benchmark::DoNotOptimize(phi_trace(lc, cfg, 1, 6));
}
BENCHMARK(BM_PhiTrace);

}  // namespace

BENCHMARK_MAIN();
