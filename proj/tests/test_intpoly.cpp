#include <gtest/gtest.h>

#include "algdeg/error.hpp"
#include "algdeg/intpoly.hpp"
#include "oracles.hpp"

using namespace algdeg;

namespace {

IntPolynomial from(const oracle::Poly& p) { return IntPolynomial(p); }

/// Sign changes of p on the grid lo + 1/7 + k/3; roots must be integers in range.
int grid_count(const IntPolynomial& p, long lo, long hi) {
    int count = 0;
    mpq_class x = mpq_class(lo) + mpq_class(1, 7);
    int prev = sgn(p.eval(x));
    while (x < hi) {
        x += mpq_class(1, 3);
        int s = sgn(p.eval(x));
        if (s != prev) ++count;
        prev = s;
    }
    return count;
}

}  // namespace

TEST(IntPolynomial, TrimAndDegree) {
    IntPolynomial p({1, 2, 0, 0});
    EXPECT_EQ(p.degree(), 1);
    EXPECT_EQ(IntPolynomial().degree(), -1);
    EXPECT_THROW(IntPolynomial().lead(), PreconditionError);
    EXPECT_EQ(IntPolynomial({2, -4, 1}).to_string(), "x^2 - 4*x + 2");
}

TEST(IntPolynomial, Arithmetic) {
    IntPolynomial a({-2, 0, 1}), b({1, 1});
    EXPECT_EQ(a * b, IntPolynomial({-2, -2, 1, 1}));
    EXPECT_EQ(a + b, IntPolynomial({-1, 1, 1}));
    EXPECT_EQ(a - a, IntPolynomial());
    EXPECT_EQ(a.taylor_shift(1), IntPolynomial({-1, 2, 1}));
    EXPECT_EQ(a.reversed(), IntPolynomial({1, 0, -2}));
    EXPECT_EQ(IntPolynomial({6, 4, 2}).primitive_part(), IntPolynomial({3, 2, 1}));
    EXPECT_EQ(IntPolynomial({-6, -4, -2}).primitive_part(), IntPolynomial({3, 2, 1}));
}

TEST(IntPolynomial, EvaluationAgreesAcrossTypes) {
    oracle::Gen g(21);
    for (int it = 0; it < 100; ++it) {
        IntPolynomial p = from(g.poly(g.range(0, 8), 50));
        Dyadic x(mpz_class(g.range(-100, 100)), g.range(-5, 0));
        EXPECT_EQ(p.eval(x).to_mpq(), p.eval(x.to_mpq()));
        EXPECT_EQ(p.sign_at(x), sgn(p.eval(x.to_mpq())));
    }
}

TEST(IntPolynomial, ResultantMatchesSylvesterDeterminant) {
    oracle::Gen g(22);
    for (int it = 0; it < 200; ++it) {
        oracle::Poly p = g.poly(g.range(0, 7), 20), q = g.poly(g.range(0, 7), 20);
        EXPECT_EQ(resultant(from(p), from(q)), oracle::sylvester_resultant(p, q))
            << from(p) << " | " << from(q);
    }
}

TEST(IntPolynomial, ResultantOfSharedFactorVanishes) {
    oracle::Gen g(23);
    for (int it = 0; it < 50; ++it) {
        oracle::Poly c = g.poly(g.range(1, 3), 9);
        oracle::Poly p = oracle::mul(c, g.poly(g.range(0, 4), 9));
        oracle::Poly q = oracle::mul(c, g.poly(g.range(0, 4), 9));
        EXPECT_EQ(resultant(from(p), from(q)), 0);
        IntPolynomial d = gcd(from(p), from(q));
        EXPECT_TRUE(divide_exact(d, from(c).primitive_part()).has_value());
    }
}

TEST(IntPolynomial, ResultantIdentities) {
    // Res(x^2 - 2, x^2 - 3) = 1, Res(x - a, q) = q(a)
    EXPECT_EQ(resultant(IntPolynomial({-2, 0, 1}), IntPolynomial({-3, 0, 1})), 1);
    IntPolynomial q({5, -3, 0, 2});
    EXPECT_EQ(resultant(IntPolynomial({-7, 1}), q), q.eval(mpz_class(7)));
}

TEST(IntPolynomial, ExactDivision) {
    IntPolynomial a({-2, 0, 1}), b({3, 1, 4});
    auto q = divide_exact(a * b, b);
    ASSERT_TRUE(q.has_value());
    EXPECT_EQ(*q, a);
    EXPECT_FALSE(divide_exact(a * b + IntPolynomial({1}), b).has_value());
}

TEST(IntPolynomial, SquarefreeDecompositionReconstructs) {
    oracle::Gen g(24);
    for (int it = 0; it < 60; ++it) {
        IntPolynomial f1 = from(g.poly(g.range(1, 3), 6)), f2 = from(g.poly(g.range(1, 2), 6));
        IntPolynomial p = f1 * f2 * f2 * from(g.poly(0, 5));
        auto parts = squarefree_decomposition(p);
        IntPolynomial prod({1});
        for (auto& [f, m] : parts) {
            EXPECT_EQ(gcd(f, f.derivative()).degree(), 0);
            for (int k = 0; k < m; ++k) prod = prod * f;
        }
        EXPECT_EQ(prod.primitive_part(), p.primitive_part());
    }
}

TEST(IntPolynomial, SturmCountMatchesKnownRoots) {
    IntPolynomial p({-6, 11, -6, 1});  // roots 1, 2, 3
    EXPECT_EQ(count_real_roots(p, Dyadic(0), Dyadic(4)), 3);
    EXPECT_EQ(count_real_roots(p, Dyadic(1), Dyadic(2)), 1);  // (1, 2]
    EXPECT_EQ(count_real_roots(p, Dyadic(0), Dyadic(1)), 1);
    IntPolynomial w({1, 0, 1});
    EXPECT_EQ(count_real_roots(w, Dyadic(-100), Dyadic(100)), 0);
    // squared factors count once
    EXPECT_EQ(count_real_roots(p * p, Dyadic(0), Dyadic(4)), 3);
}

TEST(IntPolynomial, SturmCountAgreesWithGrid) {
    oracle::Gen g(25);
    for (int it = 0; it < 40; ++it) {
        // product of linear factors with distinct integer roots, times x^2 + 1
        std::vector<long> roots;
        IntPolynomial p({1, 0, 1});
        int k = static_cast<int>(g.range(1, 5));
        while (static_cast<int>(roots.size()) < k) {
            long r = g.range(-20, 20);
            if (std::find(roots.begin(), roots.end(), r) == roots.end()) {
                roots.push_back(r);
                p = p * IntPolynomial({-r, 1});
            }
        }
        EXPECT_EQ(count_real_roots(p, Dyadic(-30), Dyadic(30)), k);
        EXPECT_EQ(grid_count(p, -30, 30), k);
    }
}

TEST(IntPolynomial, BoxEvaluationEncloses) {
    oracle::Gen g(26);
    for (int it = 0; it < 60; ++it) {
        IntPolynomial p = from(g.poly(g.range(1, 6), 30));
        Dyadic r(mpz_class(g.range(-64, 64)), -4), i(mpz_class(g.range(-64, 64)), -4);
        ComplexBox z = ComplexBox::around(r, i, Dyadic(mpz_class(1), -10));
        ComplexBox v = eval_on_box(p, z, 64);
        // exact value at the centre via real/imag Horner in Dyadic
        Dyadic vr, vi;
        for (int k = p.degree(); k >= 0; --k) {
            Dyadic nr = vr * r - vi * i + Dyadic(p.coeffs()[k]);
            Dyadic ni = vr * i + vi * r;
            vr = nr;
            vi = ni;
        }
        EXPECT_TRUE(v.contains_point(vr, vi));
    }
}
