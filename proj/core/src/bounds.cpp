#include "algdeg/bounds.hpp"

#include <algorithm>
#include <functional>

#include "algdeg/error.hpp"
#include "algdeg/rootbox.hpp"

namespace algdeg {

namespace {

long box_scale(const ComplexBox& b) {
    long s = 0;
    for (const Dyadic& m : {b.re.mag(), b.im.mag()})
        if (!m.is_zero()) s = std::max(s, m.msb());
    return s;
}

Dyadic to_dyadic(const mpz_class& z) { return Dyadic(z); }

}  // namespace

std::vector<mpz_class> degree_products(const DegreeList& ds) {
    std::vector<mpz_class> out{1};
    for (auto d : ds) {
        if (d == 0) throw PreconditionError("degrees d_n must be positive");
        out.push_back(out.back() * d);
    }
    return out;
}

mpz_class tower_exponent(unsigned long D, unsigned long K, const DegreeList& ds, unsigned long n) {
    if (n < 1 || n - 1 > ds.size()) throw PreconditionError("tower exponent index out of range");
    if (D == 0 || K == 0) throw PreconditionError("D and K must be positive");
    auto Dn = degree_products(DegreeList(ds.begin(), ds.begin() + static_cast<long>(n - 1)));
    mpz_class e;
    mpz_ui_pow_ui(e.get_mpz_t(), D, n);
    for (unsigned long i = 1; i < n; ++i) e *= K * Dn[i] + ds[i - 1];
    return e;
}

LogMagnitude liouville_lower_bound(const AlgebraicNumber& a, const AlgebraicNumber& b, const Dyadic& rel_tol) {
    if (is_conjugate(a, b)) throw PreconditionError("separation bound needs non-conjugate numbers");
    const Dyadic da(a.degree()), db(b.degree());
    LogMagnitude ma = mahler_measure(a, rel_tol), mb = mahler_measure(b, rel_tol);
    // -(da db + db log M(a) + da log M(b))
    Dyadic lo = -(da * db + db * ma.hi + da * mb.hi);
    Dyadic hi = -(da * db + db * ma.lo + da * mb.lo);
    return {lo, hi, false};
}

SeparationCheck check_separation(const AlgebraicNumber& a, const AlgebraicNumber& b, const Dyadic& rel_tol) {
    Dyadic tol = rel_tol;
    SeparationCheck out;
    out.bound = liouville_lower_bound(a, b, tol);
    ComplexBox x = a.box(), y = b.box();
    const long scale = std::max(box_scale(x), box_scale(y));
    for (long bits = 32; bits <= (1L << 14); bits *= 2) {
        const Dyadic w = Dyadic::pow2(scale - bits);
        x = refine_isolated(a.minpoly(), x, w);
        y = refine_isolated(b.minpoly(), y, w);
        const long prec = bits + scale + 32;
        DyadicInterval dist = modulus(sub(x, y, prec), prec);
        if (dist.lo.sign() <= 0) continue;
        out.distance = LogMagnitude::of_value(dist, prec);
        out.margin = out.distance - out.bound;
        if (out.margin.lo.sign() >= 0) {
            out.ok = true;
            return out;
        }
        if (out.margin.hi.sign() < 0) return out;
        if (out.bound.log_width() > out.distance.log_width()) {
            tol = tol.mul_2exp(-bits);
            out.bound = liouville_lower_bound(a, b, tol);
        }
    }
    throw Undetermined("separation margin sign unresolved at the precision cap");
}

ExponentSides exponent_inequality_sides(unsigned long D, unsigned long K, const DegreeList& ds) {
    if (ds.empty()) throw PreconditionError("need at least one degree d_1");
    const unsigned long N = ds.size();
    auto Dn = degree_products(ds);
    mpz_class lhs;
    mpz_ui_pow_ui(lhs.get_mpz_t(), D, N + 1);
    for (unsigned long i = 1; i <= N; ++i) lhs *= K * Dn[i] + ds[i - 1];
    mpz_class sum = 0, prod = 1, Dpow = 1;
    for (unsigned long n = 1; n <= N; ++n) {
        Dpow *= D;
        if (n > 1) prod *= K * Dn[n - 1] + ds[n - 2];
        sum += Dpow * prod;
    }
    mpz_class rhs = mpz_class(K) * D * Dn[N] * sum;
    return {lhs, rhs};
}

SweepResult exponent_sweep(unsigned long max_D, unsigned long max_K, unsigned long max_d, unsigned long max_N) {
    SweepResult res;
    DegreeList ds;
    std::function<void(unsigned long, unsigned long)> walk = [&](unsigned long D, unsigned long K) {
        if (!ds.empty()) {
            ++res.cases;
            auto s = exponent_inequality_sides(D, K, ds);
            if (s.lhs < s.rhs) res.violations.push_back({D, K, ds});
        }
        if (ds.size() == max_N) return;
        for (unsigned long d = 1; d <= max_d; ++d) {
            ds.push_back(d);
            walk(D, K);
            ds.pop_back();
        }
    };
    for (unsigned long D = 1; D <= max_D; ++D)
        for (unsigned long K = 1; K <= max_K; ++K) walk(D, K);
    return res;
}

DyadicInterval erdos_tail_bound(const Dyadic& a_N, const mpq_class& eps, long prec) {
    if (a_N.sign() <= 0) throw PreconditionError("a_N must be positive");
    if (eps <= 0) throw PreconditionError("epsilon must be positive");
    const long p = prec + 32;
    DyadicInterval num = from_mpq(mpq_class(2 + 1 / eps), p);
    DyadicInterval ex = from_mpq(mpq_class(eps / (1 + eps)), p);
    DyadicInterval la = {log2(a_N, p, Round::down), log2(a_N, p, Round::up)};
    LogMagnitude den = LogMagnitude::from_log2(mul(ex, la, p));
    LogMagnitude r = LogMagnitude::of_value(num, p) - den;
    return round_out(r.value(p), prec);
}

LogMagnitude growth_cap(const Dyadic& A2, unsigned long D, unsigned long K, const DegreeList& ds, unsigned long n,
                        long prec) {
    if (A2 <= Dyadic(1)) throw PreconditionError("A2 must exceed 1");
    const Dyadic e = to_dyadic(tower_exponent(D, K, ds, n));
    const Dyadic two_a = A2.mul_2exp(1);
    DyadicInterval l{log2(two_a, prec, Round::down), log2(two_a, prec, Round::up)};
    return {l.lo * e, l.hi * e, false};
}

}  // namespace algdeg
