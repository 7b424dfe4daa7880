#include <cmath>
#include <complex>

#include <gtest/gtest.h>

#include "algdeg/error.hpp"
#include "algdeg/rootbox.hpp"
#include "oracles.hpp"

using namespace algdeg;

namespace {

/// Real root of p in (lo, hi) by exact rational bisection, to 2^-bits.
mpq_class bisect(const IntPolynomial& p, mpq_class lo, mpq_class hi, int bits) {
    int slo = sgn(p.eval(lo));
    for (int k = 0; k < bits; ++k) {
        mpq_class m = (lo + hi) / 2;
        int s = sgn(p.eval(m));
        if (s == 0) return m;
        if (s == slo)
            lo = m;
        else
            hi = m;
    }
    return (lo + hi) / 2;
}

bool mirrored(const std::vector<ComplexBox>& boxes) {
    for (const auto& b : boxes) {
        bool found = false;
        for (const auto& c : boxes) found = found || c == b.conj();
        if (!found) return false;
    }
    return true;
}

int real_count(const std::vector<ComplexBox>& boxes) {
    int r = 0;
    for (const auto& b : boxes) r += b.im.is_point() && b.im.lo.is_zero();
    return r;
}

}  // namespace

TEST(RootBox, ImaginaryUnit) {
    auto boxes = isolate_all_roots(IntPolynomial({1, 0, 1}), Dyadic::pow2(-20));
    ASSERT_EQ(boxes.size(), 2u);
    EXPECT_TRUE(boxes[0].contains_point(0, -1));
    EXPECT_TRUE(boxes[1].contains_point(0, 1));
    for (const auto& b : boxes) EXPECT_LE(b.width(), Dyadic::pow2(-20));
}

TEST(RootBox, CubeRootOfTwo) {
    IntPolynomial p({-2, 0, 0, 1});
    auto boxes = isolate_all_roots(p, Dyadic::pow2(-30));
    ASSERT_EQ(boxes.size(), 3u);
    EXPECT_EQ(real_count(boxes), 1);
    EXPECT_TRUE(mirrored(boxes));
    mpq_class r = bisect(p, 1, 2, 40);
    bool hit = false;
    for (const auto& b : boxes)
        if (b.im.is_point()) hit = b.re.lo.to_mpq() <= r && r <= b.re.hi.to_mpq() + mpq_class(1, 1L << 40);
    EXPECT_TRUE(hit);
    // polar form: -0.629960... +- 1.091123...i
    for (const auto& b : boxes) {
        if (b.im.is_point()) continue;
        EXPECT_NEAR(b.re.mid().to_double(), -0.6299605249, 1e-8);
        EXPECT_NEAR(std::fabs(b.im.mid().to_double()), 1.0911236360, 1e-8);
    }
}

TEST(RootBox, QuadraticFormulaRoots) {
    IntPolynomial p({2, -4, 1});
    auto boxes = isolate_all_roots(p, Dyadic::pow2(-30));
    ASSERT_EQ(boxes.size(), 2u);
    EXPECT_NEAR(boxes[0].re.mid().to_double(), 2 - std::sqrt(2.0), 1e-9);
    EXPECT_NEAR(boxes[1].re.mid().to_double(), 2 + std::sqrt(2.0), 1e-9);
}

TEST(RootBox, RejectsBadInput) {
    EXPECT_THROW(isolate_all_roots(IntPolynomial({1, -2, 1}), Dyadic(1)), PreconditionError);
    EXPECT_THROW(isolate_all_roots(IntPolynomial({3}), Dyadic(1)), PreconditionError);
}

TEST(RootBox, RefineSqrtTwoTo64Bits) {
    IntPolynomial p({-2, 0, 1});
    ComplexBox b = refine_root(p, {{Dyadic(1), Dyadic(2)}, DyadicInterval::point(0)}, Dyadic::pow2(-64));
    EXPECT_LE(b.width(), Dyadic::pow2(-64));
    // lo^2 <= 2 <= hi^2
    EXPECT_LE(b.re.lo * b.re.lo, Dyadic(2));
    EXPECT_GE(b.re.hi * b.re.hi, Dyadic(2));
}

TEST(RootBox, ExactRationalRootGivesPointBox) {
    ComplexBox b = refine_root(IntPolynomial({-5, 1}), {{Dyadic(0), Dyadic(10)}, DyadicInterval::point(0)}, Dyadic::pow2(-10));
    EXPECT_TRUE(b.is_point());
    EXPECT_EQ(b.re.lo, Dyadic(5));
    // a dyadic root inside a higher-degree polynomial
    IntPolynomial q = IntPolynomial({-3, 4}) * IntPolynomial({1, 0, 1});
    ComplexBox c = refine_root(q, {{Dyadic(0), Dyadic(1)}, DyadicInterval::point(0)}, Dyadic::pow2(-30));
    EXPECT_TRUE(c.contains_point(Dyadic(mpz_class(3), -2), 0));
}

TEST(RootBox, RefineTo100Bits) {
    IntPolynomial p({2, -4, 1});
    ComplexBox start = ComplexBox::around(Dyadic::parse("3.41"), Dyadic(), Dyadic::parse("0.25"));
    start.im = DyadicInterval::point(0);
    ComplexBox b = refine_root(p, start, Dyadic::pow2(-100));
    EXPECT_LE(b.width(), Dyadic::pow2(-100));
    // (x - 2)^2 = 2 with x > 2
    Dyadic lo = b.re.lo - Dyadic(2), hi = b.re.hi - Dyadic(2);
    EXPECT_LE(lo * lo, Dyadic(2));
    EXPECT_GE(hi * hi, Dyadic(2));
    EXPECT_TRUE(start.contains(b));
}

TEST(RootBox, RefineComplexRoot) {
    IntPolynomial p({1, 0, 1});
    ComplexBox start{{Dyadic(-1), Dyadic(1)}, {Dyadic::parse("0.5"), Dyadic(2)}};
    ComplexBox b = refine_root(p, start, Dyadic::pow2(-80));
    EXPECT_TRUE(b.contains_point(0, 1));
    EXPECT_LE(b.width(), Dyadic::pow2(-80));
    EXPECT_TRUE(start.contains(b));
}

TEST(RootBox, RefineRejectsBoxWithTwoRoots) {
    IntPolynomial p({-2, 0, 1});
    EXPECT_THROW(refine_root(p, {{Dyadic(-10), Dyadic(10)}, {Dyadic(-1), Dyadic(1)}}, Dyadic::pow2(-10)), PreconditionError);
    EXPECT_THROW(refine_root(p, {{Dyadic(-10), Dyadic(10)}, DyadicInterval::point(0)}, Dyadic::pow2(-10)), PreconditionError);
    EXPECT_THROW(refine_root(p, {{Dyadic(3), Dyadic(4)}, DyadicInterval::point(0)}, Dyadic::pow2(-10)), PreconditionError);
    EXPECT_EQ(count_roots_in_box(p, {{Dyadic(-10), Dyadic(10)}, {Dyadic(-1), Dyadic(1)}}), 2);
}

TEST(RootBox, RandomSquarefreePolynomials) {
    oracle::Gen g(41);
    int tested = 0;
    while (tested < 60) {
        IntPolynomial p(g.poly(static_cast<int>(g.range(1, 8)), 50));
        if (gcd(p, p.derivative()).degree() > 0) continue;
        ++tested;
        const Dyadic w = Dyadic::pow2(-40);
        auto boxes = isolate_all_roots(p, w);
        ASSERT_EQ(static_cast<int>(boxes.size()), p.degree()) << p;
        EXPECT_TRUE(mirrored(boxes)) << p;
        for (std::size_t i = 0; i < boxes.size(); ++i) {
            EXPECT_LE(boxes[i].width(), w);
            for (std::size_t j = i + 1; j < boxes.size(); ++j) EXPECT_FALSE(boxes[i].intersects(boxes[j]));
        }
        // Vieta: lead * prod (x - mid) reproduces the coefficients
        std::vector<std::complex<double>> c{1.0};
        for (const auto& b : boxes) {
            std::complex<double> r(b.re.mid().to_double(), b.im.mid().to_double());
            std::vector<std::complex<double>> next(c.size() + 1, 0.0);
            for (std::size_t k = 0; k < c.size(); ++k) {
                next[k + 1] += c[k];
                next[k] -= r * c[k];
            }
            c = next;
        }
        double lead = p.lead().get_d();
        double scale = 0;
        for (auto& v : p.coeffs()) scale = std::max(scale, std::fabs(v.get_d()));
        for (int k = 0; k <= p.degree(); ++k)
            EXPECT_NEAR(lead * c[k].real(), p.coeff(k).get_d(), 1e-6 * scale * std::pow(4.0, p.degree())) << p;
        // Sturm count agrees with the number of real boxes
        EXPECT_EQ(count_real_roots(p, Dyadic(-1000), Dyadic(1000)), real_count(boxes)) << p;
    }
}

TEST(RootBox, RefinementStaysInsideInput) {
    oracle::Gen g(42);
    for (int it = 0; it < 20; ++it) {
        IntPolynomial p(g.poly(static_cast<int>(g.range(2, 6)), 30));
        if (gcd(p, p.derivative()).degree() > 0) continue;
        for (const auto& b : isolate_all_roots(p, Dyadic::pow2(-8))) {
            ComplexBox r = refine_isolated(p, b, Dyadic::pow2(-60));
            EXPECT_TRUE(b.contains(r));
            EXPECT_LE(r.width(), Dyadic::pow2(-60));
        }
    }
}

TEST(RootBox, HugeCloseRoots) {
    // a +- sqrt(2) with a = 3^200
    mpz_class a;
    mpz_ui_pow_ui(a.get_mpz_t(), 3, 200);
    IntPolynomial p(std::vector<mpz_class>{a * a - 2, -2 * a, 1});
    auto boxes = isolate_all_roots(p, Dyadic::pow2(-20));
    ASSERT_EQ(boxes.size(), 2u);
    Dyadic gap = boxes[1].re.lo - boxes[0].re.hi;
    EXPECT_GT(gap, Dyadic(2));
    EXPECT_LT(gap, Dyadic(3));
}
