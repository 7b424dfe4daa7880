#include <gtest/gtest.h>

#include "algdeg/error.hpp"
#include "algdeg/factor.hpp"
#include "algdeg/hypotheses.hpp"
#include "algdeg/sequences.hpp"
#include "oracles.hpp"

using namespace algdeg;

namespace {

std::vector<mpz_class> Z(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

DyadicInterval log2_of(const mpz_class& z, long prec = 128) {
    return {log2(z, prec, Round::down), log2(z, prec, Round::up)};
}

}  // namespace

TEST(Sequences, SylvesterExamples) {
    EXPECT_EQ(sylvester(2, 5), Z({2, 3, 7, 43, 1807}));
    EXPECT_EQ(sylvester(3, 3), Z({3, 7, 43}));
    EXPECT_EQ(sylvester_sum(2), 1);
    EXPECT_THROW(sylvester(1, 3), PreconditionError);
    EXPECT_THROW(sylvester(2, 0), PreconditionError);
}

TEST(SequencesProperty, SylvesterTelescopes) {
    for (long a1 = 2; a1 <= 10; ++a1) {
        auto a = sylvester(a1, 19);
        mpq_class sum = 0;
        for (std::size_t N = 1; N + 1 <= a.size(); ++N) {
            sum += mpq_class(1, a[N - 1]);
            EXPECT_EQ(sum, sylvester_sum(a1) - mpq_class(1, a[N] - 1)) << "a1 = " << a1 << ", N = " << N;
        }
    }
}

TEST(SequencesProperty, SylvesterRootsDecreaseAboveBracket) {
    // a_{n+1} < a_n^2, so a_n^{1/2^n} decreases; its limit stays above (a1^2 - a1)^{1/4}
    for (long a1 = 2; a1 <= 10; ++a1) {
        auto a = sylvester(a1, 25);
        for (std::size_t n = 1; n < a.size(); ++n) EXPECT_LT(a[n], a[n - 1] * a[n - 1]);
        Dyadic e = Dyadic::pow2(25);
        DyadicInterval l25 = log2_of(a[24]);
        DyadicInterval rhs = log2_of(mpz_class(a1 * a1 - a1));
        EXPECT_GT(div(l25.lo, e, 128, Round::down), rhs.hi.mul_2exp(-2));
    }
}

TEST(Sequences, TowerExamples) {
    auto p = alternating_pattern(4);
    auto a = oscillating_tower(Dyadic(2), Dyadic(3), p, 1, 1, {1, 1, 1});
    EXPECT_EQ(a, Z({2, 9, 16, 6561}));
    std::vector<TowerBase> flat(4, TowerBase::lo);
    EXPECT_EQ(oscillating_tower(Dyadic(2), Dyadic(3), flat, 1, 1, {1, 1, 1}), Z({2, 4, 16, 256}));
    // ceil of a non-integer power: (3/2)^2 = 2.25
    EXPECT_EQ(oscillating_tower(Dyadic(3).mul_2exp(-1), Dyadic(2), {TowerBase::lo, TowerBase::lo}, 1, 1, {1}, mpq_class(1, 10)),
              Z({2, 3}));
    EXPECT_THROW(oscillating_tower(Dyadic(2), Dyadic(1000), {TowerBase::hi, TowerBase::lo}, 1, 1, {1}),
                 PreconditionError);
    EXPECT_THROW(oscillating_tower(Dyadic(2), Dyadic(3), flat, 1, 1, {1}), PreconditionError);
}

TEST(SequencesProperty, TowersMeetGrowthConditions) {
    oracle::Gen g(17);
    for (int t = 0; t < 40; ++t) {
        unsigned long D = g.range(1, 2), K = g.range(1, 2);
        std::size_t N = g.range(2, 5);
        DegreeList ds(N, 0);
        for (auto& d : ds) d = g.range(1, 2);
        Dyadic lo(mpz_class(g.range(9, 16)), -3), hi = lo + Dyadic(mpz_class(g.range(1, 8)), -2);
        std::vector<TowerBase> pat;
        for (std::size_t k = 0; k < N; ++k) pat.push_back(g.range(0, 1) ? TowerBase::hi : TowerBase::lo);
        std::vector<mpz_class> a;
        try {
            a = oscillating_tower(lo, hi, pat, D, K, ds, 1);
        } catch (const PreconditionError&) {
            continue;
        }
        for (std::size_t n = 1; n <= a.size(); ++n) {
            if (n > 1) EXPECT_LT(a[n - 2], a[n - 1]);
            mpz_class sq = mpz_class(n) * n;
            EXPECT_GE(a[n - 1], sq);
            // ceil(base^E) - 1 < base^E <= ceil(base^E)
            const Dyadic& base = pat[n - 1] == TowerBase::lo ? lo : hi;
            mpz_class E = tower_exponent(D, K, ds, n);
            mpq_class bq = base.to_mpq(), pw = 1;
            for (mpz_class k = 0; k < E; ++k) pw *= bq;
            EXPECT_GE(mpq_class(a[n - 1]), pw);
            EXPECT_LT(mpq_class(a[n - 1] - 1), pw);
        }
    }
}

TEST(Sequences, SurdFamily) {
    auto f = quadratic_surd_family(Z({2, 9, 16}), 2);
    ASSERT_EQ(f.size(), 3u);
    EXPECT_EQ(f[0].minpoly(), IntPolynomial({2, -4, 1}));
    EXPECT_EQ(f[1].minpoly(), IntPolynomial({79, -18, 1}));
    EXPECT_EQ(f[2].minpoly(), IntPolynomial({254, -32, 1}));
    auto h = house(f[0], Dyadic::pow2(-40));
    EXPECT_NEAR(h.mid().to_double(), 3.41421356237, 1e-9);
    EXPECT_THROW(quadratic_surd_family(Z({1}), 2), PreconditionError);
    EXPECT_THROW(quadratic_surd_family(Z({5}), 4), PreconditionError);
}

TEST(SequencesProperty, SurdHouseIsModulus) {
    for (long r : {2L, 3L, 5L, 6L, 7L, 10L}) {
        std::vector<mpz_class> as;
        for (long a = 4; a < 60; a += 7) as.push_back(a);
        for (const auto& x : quadratic_surd_family(as, r)) {
            EXPECT_TRUE(x.is_algebraic_integer());
            EXPECT_TRUE(is_irreducible(x.minpoly()));
            EXPECT_EQ(house_equals_modulus(x), Verdict::pass);
            EXPECT_TRUE(house(x, Dyadic::pow2(-60)).intersects(abs_value(x, Dyadic::pow2(-60))));
        }
    }
}
