#include <gtest/gtest.h>

#include "algdeg/certify.hpp"
#include "algdeg/error.hpp"
#include "algdeg/sequences.hpp"
#include "oracles.hpp"

using namespace algdeg;

namespace {

DyadicInterval exact(const mpq_class& q) { return from_mpq(q, 256); }

bool contains_log2_of(const LogMagnitude& m, const mpq_class& q) {
    return m.value(256).intersects(exact(q));
}

AlgebraicNumber surd(long a, long r) { return quadratic_surd_family({mpz_class(a)}, r).front(); }

AlgebraicNumber one_plus_sqrt2() {
    return AlgebraicNumber::make(IntPolynomial({-1, -2, 1}), {{Dyadic(2), Dyadic(3)}, DyadicInterval::point(Dyadic())});
}

std::vector<TowerBase> hi_first(std::size_t N) {
    std::vector<TowerBase> p;
    for (std::size_t k = 0; k < N; ++k) p.push_back(k % 2 == 0 ? TowerBase::hi : TowerBase::lo);
    return p;
}

SequenceTable tower_table(std::size_t N) {
    return SequenceTable::from_integers(oscillating_tower(Dyadic(2), Dyadic(3), hi_first(N), 1, 1, DegreeList(N, 1)));
}

HypothesisConfig tower_cfg(std::size_t N) {
    HypothesisConfig c;
    c.c = mpq_class(9, 10);
    c.ds = DegreeList(N, 1);
    c.betas = {1};
    return c;
}

}  // namespace

TEST(Certify, PartialSums) {
    auto ints = LinearCombination::make(SequenceTable::from_integers({2, 3}), std::vector<mpz_class>{1});
    auto g = partial_sum_exact(ints, {1, 1}, 2);
    EXPECT_EQ(g.minpoly(), IntPolynomial({-5, 6}));
    EXPECT_EQ(*g.rational_value(), mpq_class(5, 6));

    auto one = LinearCombination::make(SequenceTable::from_numbers({one_plus_sqrt2()}), std::vector<mpz_class>{1});
    auto s = partial_sum_exact(one, {2}, 1);
    EXPECT_EQ(s.minpoly(), IntPolynomial({-1, 2, 1}));
    EXPECT_NEAR(abs_value(s, Dyadic::pow2(-40)).mid().to_double(), std::sqrt(2.0) - 1, 1e-10);

    SequenceTable two;
    two.K = 2;
    for (long a : {2L, 5L}) two.rows.push_back({{surd(a, 3), 1}, {surd(a, 3), 1}});
    auto zero = partial_sum_exact(LinearCombination::make(two, std::vector<mpz_class>{1, -1}), {2, 2}, 2);
    EXPECT_TRUE(zero.is_zero());

    auto three = LinearCombination::make(SequenceTable::from_numbers({surd(2, 2), surd(5, 3), surd(9, 5)}),
                                         std::vector<mpz_class>{1});
    EXPECT_THROW(partial_sum_exact(three, {4, 4, 4}, 3), CeilingExceeded);
    EXPECT_THROW(partial_sum_exact(three, {2, 1, 2}, 2), PreconditionError);
    EXPECT_NO_THROW(partial_sum_exact(three, {2, 2, 2}, 3));
}

TEST(Certify, RationalBetasAreCleared) {
    auto t = SequenceTable::from_integers({2, 3});
    t.K = 1;
    auto lc = LinearCombination::make(t, std::vector<mpq_class>{mpq_class(-2, 3)});
    EXPECT_EQ(lc.betas, std::vector<mpz_class>{-2});
    SequenceTable two;
    two.K = 2;
    two.rows.push_back({{AlgebraicNumber::from_integer(2), 1}, {AlgebraicNumber::from_integer(3), 1}});
    lc = LinearCombination::make(two, std::vector<mpq_class>{mpq_class(1, 2), mpq_class(1, 3)});
    EXPECT_EQ(lc.betas, (std::vector<mpz_class>{3, 2}));
    EXPECT_THROW(LinearCombination::make(two, std::vector<mpz_class>{0, 0}), PreconditionError);
    EXPECT_THROW(LinearCombination::make(two, std::vector<mpz_class>{1}), PreconditionError);
}

TEST(Certify, MahlerChainExamples) {
    const Dyadic tol = Dyadic::pow2(-30);
    auto one = LinearCombination::make(SequenceTable::from_numbers({one_plus_sqrt2()}), std::vector<mpz_class>{1});
    auto m = mahler_chain_check(one, {2}, 1, tol);
    const double l = std::log2(1 + std::sqrt(2.0));
    EXPECT_NEAR(m.lhs.hi.to_double(), l, 1e-6);
    EXPECT_NEAR(m.rhs.lo.to_double(), 2 * (1 + l), 1e-6);
    EXPECT_TRUE(m.ok);

    SequenceTable two;
    two.K = 2;
    two.rows.push_back({{AlgebraicNumber::from_integer(2), 1}, {AlgebraicNumber::from_integer(3), 1}});
    auto r = mahler_chain_check(LinearCombination::make(two, std::vector<mpz_class>{1, 1}), {1}, 1, tol);
    EXPECT_TRUE(contains_log2_of(LogMagnitude::from_log2({r.lhs.lo, r.lhs.hi}), 6)) << r.lhs.lo << " " << r.lhs.hi;
    EXPECT_NEAR(r.rhs.lo.to_double(), std::log2(24.0), 1e-9);
    EXPECT_TRUE(r.ok);

    SequenceTable same;
    same.K = 2;
    same.rows.push_back({{surd(3, 2), 1}, {surd(3, 2), 1}});
    auto z = mahler_chain_check(LinearCombination::make(same, std::vector<mpz_class>{2, -2}), {2}, 1, tol);
    EXPECT_EQ(z.lhs.hi, Dyadic());
    EXPECT_TRUE(z.ok);
}

TEST(Certify, SylvesterTailExamples) {
    auto lc = LinearCombination::make(SequenceTable::from_integers(sylvester(2, 8)), std::vector<mpz_class>{1});
    HypothesisConfig cfg;
    auto t2 = tail_enclosure(lc, cfg, 2, 128);
    EXPECT_TRUE(contains_log2_of(t2, mpq_class(1, 6)));
    EXPECT_NEAR(t2.value(64).mid().to_double(), 1.0 / 6, 1e-8);
    EXPECT_TRUE(contains_log2_of(tail_enclosure(lc, cfg, 3, 128), mpq_class(1, 42)));
    EXPECT_THROW(tail_enclosure(lc, cfg, 8, 128), PreconditionError);
    EXPECT_THROW(tail_enclosure(lc, cfg, 0, 128), PreconditionError);

    auto shortlc = LinearCombination::make(SequenceTable::from_integers({2, 3}), std::vector<mpz_class>{1});
    EXPECT_THROW(tail_enclosure(shortlc, cfg, 1, 128), PreconditionError);
}

TEST(Certify, CancellingTailIsUndetermined) {
    SequenceTable two;
    two.K = 2;
    for (const auto& a : sylvester(2, 7)) two.rows.push_back({{AlgebraicNumber::from_integer(a), 1}, {AlgebraicNumber::from_integer(a), 1}});
    HypothesisConfig cfg;
    cfg.K = 2;
    cfg.max_bits = 256;
    auto lc = LinearCombination::make(two, std::vector<mpz_class>{1, -1});
    EXPECT_THROW(tail_enclosure(lc, cfg, 2, 128), Undetermined);
    cfg.ds = DegreeList(7, 1);
    auto tr = phi_trace(lc, cfg, 1, 3);
    for (const auto& e : tr.entries) {
        EXPECT_TRUE(e.log2_gamma_tail.unbounded_below);
        EXPECT_NE(e.verdict, PhiVerdict::phi_at_least_one);
    }
}

TEST(CertifyProperty, SylvesterTailOracle) {
    for (long a1 = 2; a1 <= 4; ++a1) {
        auto a = sylvester(a1, 11);
        auto lc = LinearCombination::make(SequenceTable::from_integers(a), std::vector<mpz_class>{1});
        HypothesisConfig cfg;
        for (std::size_t N = 1; N <= 10; ++N) {
            auto t = tail_enclosure(lc, cfg, N, 256);
            EXPECT_TRUE(contains_log2_of(t, mpq_class(1, a[N] - 1))) << "a1 = " << a1 << ", N = " << N;
        }
    }
}

TEST(Certify, TowerTraceExample) {
    const std::size_t N_data = 9;
    auto lc = LinearCombination::make(tower_table(N_data), std::vector<mpz_class>{1});
    auto tr = phi_trace(lc, tower_cfg(N_data), 1, 6);
    ASSERT_EQ(tr.entries.size(), 6u);
    // a_{N+1} on the high base makes the tail small enough
    for (std::size_t N : {2, 4, 6}) EXPECT_EQ(tr.entries[N - 1].verdict, PhiVerdict::phi_below_one) << N;
    for (std::size_t N : {1, 3, 5}) EXPECT_EQ(tr.entries[N - 1].verdict, PhiVerdict::phi_at_least_one) << N;
    // N = 1: bracket is 2^{1} |alpha_1| with an empty product
    EXPECT_TRUE(tr.entries[0].log2_bracket.log2_interval().contains(Dyadic(1) + log2(Dyadic(3), 128, Round::down)) ||
                tr.entries[0].log2_bracket.log2_interval().contains(Dyadic(1) + log2(Dyadic(3), 128, Round::up)));
    auto rep = verdict(tr);
    EXPECT_TRUE(rep.evidence);
    EXPECT_EQ(rep.at, (std::vector<std::size_t>{2, 4, 6}));
    EXPECT_NE(rep.message.find("EVIDENCE"), std::string::npos);
    EXPECT_NE(rep.message.find("N = 2, 4, 6"), std::string::npos);

    auto big = tower_cfg(N_data);
    big.D = 50;
    auto trb = phi_trace(lc, big, 1, 6);
    for (const auto& e : trb.entries) EXPECT_EQ(e.verdict, PhiVerdict::phi_at_least_one);
    EXPECT_EQ(verdict(trb).message, "no evidence in range");

    auto late = phi_trace(lc, tower_cfg(N_data), 1, 6, 128, BracketForm::late);
    EXPECT_EQ(late.entries.size(), 6u);
}

TEST(Certify, VerdictDispatch) {
    CertifyTrace t;
    t.D = 3;
    auto entry = [](std::size_t N, PhiVerdict v) {
        TraceEntry e;
        e.N = N;
        e.verdict = v;
        return e;
    };
    t.entries = {entry(1, PhiVerdict::undetermined), entry(5, PhiVerdict::phi_below_one),
                 entry(6, PhiVerdict::phi_at_least_one)};
    auto r = verdict(t);
    EXPECT_EQ(r.at, std::vector<std::size_t>{5});
    EXPECT_EQ(r.message, "EVIDENCE (not proof): consistent with deg gamma > 3 at N = 5");
    t.entries = {entry(1, PhiVerdict::phi_at_least_one), entry(2, PhiVerdict::undetermined)};
    EXPECT_FALSE(verdict(t).evidence);
    EXPECT_THROW(verdict(CertifyTrace{}), PreconditionError);

    EXPECT_EQ(phi_verdict({Dyadic(-3), Dyadic(-1), false}), PhiVerdict::phi_below_one);
    EXPECT_EQ(phi_verdict({Dyadic(-1), Dyadic(-1), true}), PhiVerdict::phi_below_one);
    EXPECT_EQ(phi_verdict({Dyadic(0), Dyadic(2), false}), PhiVerdict::phi_at_least_one);
    EXPECT_EQ(phi_verdict({Dyadic(1), Dyadic(1), true}), PhiVerdict::undetermined);
    EXPECT_EQ(phi_verdict({Dyadic(-1), Dyadic(1), false}), PhiVerdict::undetermined);
}

TEST(Certify, CsvLayout) {
    auto lc = LinearCombination::make(tower_table(7), std::vector<mpz_class>{1});
    auto csv = phi_trace(lc, tower_cfg(7), 1, 2).to_csv();
    EXPECT_EQ(csv.substr(0, csv.find('\n')),
              "N,log2_gamma_lo,log2_gamma_hi,log2_bracket_lo,log2_bracket_hi,log2_phi_lo,log2_phi_hi,verdict");
    EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 3);
    EXPECT_NE(csv.find("\n2,"), std::string::npos);
}

TEST(CertifyProperty, TraceSoundAndBracketIncreasing) {
    oracle::Gen g(29);
    for (int t = 0; t < 12; ++t) {
        const std::size_t N = 8;
        HypothesisConfig cfg = tower_cfg(N);
        cfg.c = mpq_class(g.range(6, 9), 10);
        cfg.D = g.range(1, 3);
        auto lc = LinearCombination::make(tower_table(N), std::vector<mpz_class>{g.range(1, 5)});
        auto tr = phi_trace(lc, cfg, 1, 7);
        for (std::size_t k = 0; k < tr.entries.size(); ++k) {
            const auto& e = tr.entries[k];
            // exp2 of the sum encloses the products of the addends' value endpoints
            DyadicInterval phi = e.log2_phi.value(256);
            DyadicInterval gv = e.log2_gamma_tail.value(256), bv = e.log2_bracket.value(256);
            // the log sums are exact, so only the exp2 roundings separate the two sides
            const Dyadic slack = Dyadic::pow2(-200);
            EXPECT_LE(phi.lo * (Dyadic(1) - slack), gv.lo * bv.lo);
            EXPECT_GE(phi.hi * (Dyadic(1) + slack), gv.hi * bv.hi);
            if (!e.log2_phi.unbounded_below) EXPECT_EQ(e.log2_phi.lo, e.log2_gamma_tail.lo + e.log2_bracket.lo);
            EXPECT_EQ(e.log2_phi.hi, e.log2_gamma_tail.hi + e.log2_bracket.hi);
            if (k > 0) EXPECT_LT(tr.entries[k - 1].log2_bracket.hi, e.log2_bracket.lo);
        }
    }
}

TEST(CertifyProperty, SurdPartialSums) {
    oracle::Gen g(31);
    for (int t = 0; t < 10; ++t) {
        std::vector<mpz_class> a;
        long x = g.range(3, 6);
        for (int n = 0; n < 3; ++n) {
            a.push_back(x);
            x = x * x + g.range(1, 9);
        }
        long r = std::vector<long>{2, 3, 5, 6, 7}[g.range(0, 4)];
        auto lc = LinearCombination::make(SequenceTable::from_numbers(quadratic_surd_family(a, r)),
                                          std::vector<mpz_class>{g.range(1, 4)});
        for (std::size_t N = 1; N <= 3; ++N) {
            auto gam = partial_sum_exact(lc, {2, 2, 2}, N);
            EXPECT_LE(gam.degree(), 1 << N);
            EXPECT_TRUE(mahler_chain_check(lc, {2, 2, 2}, N, Dyadic::pow2(-20)).ok);
        }
    }
}
