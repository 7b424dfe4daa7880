#include "algdeg/sequences.hpp"

#include "algdeg/error.hpp"
#include "algdeg/rootbox.hpp"

namespace algdeg {

namespace {

/// ceil(x^e) for a positive dyadic x and integer e >= 0.
mpz_class ceil_power(const Dyadic& x, const mpz_class& e) {
    if (!e.fits_ulong_p()) throw PreconditionError("tower exponent too large to expand");
    const unsigned long k = e.get_ui();
    mpz_class m;
    mpz_pow_ui(m.get_mpz_t(), x.mantissa().get_mpz_t(), k);
    mpz_class shift = mpz_class(x.exponent()) * e;
    if (shift >= 0) {
        mpz_mul_2exp(m.get_mpz_t(), m.get_mpz_t(), shift.get_ui());
        return m;
    }
    mpz_class q;
    mpz_cdiv_q_2exp(q.get_mpz_t(), m.get_mpz_t(), mpz_class(-shift).get_ui());
    return q;
}

bool is_squarefree(const mpz_class& r) {
    for (mpz_class p = 2; p * p <= r; ++p)
        if (r % (p * p) == 0) return false;
    return true;
}

}  // namespace

std::vector<mpz_class> sylvester(const mpz_class& a1, std::size_t N) {
    if (a1 < 2) throw PreconditionError("Sylvester-type sequences need a1 >= 2");
    if (N < 1) throw PreconditionError("need at least one term");
    std::vector<mpz_class> a{a1};
    while (a.size() < N) a.push_back(a.back() * a.back() - a.back() + 1);
    return a;
}

mpq_class sylvester_sum(const mpz_class& a1) {
    if (a1 < 2) throw PreconditionError("Sylvester-type sequences need a1 >= 2");
    return mpq_class(1, a1 - 1);
}

bool exceeds_power(const mpz_class& value, unsigned long n, const mpq_class& eps) {
    // value^q >= n^{p+q} where eps = p/q
    const unsigned long p = mpz_class(eps.get_num()).get_ui(), q = mpz_class(eps.get_den()).get_ui();
    mpz_class l, r;
    mpz_pow_ui(l.get_mpz_t(), value.get_mpz_t(), q);
    mpz_ui_pow_ui(r.get_mpz_t(), n, p + q);
    return l >= r;
}

std::vector<TowerBase> alternating_pattern(std::size_t N) {
    std::vector<TowerBase> p;
    for (std::size_t i = 0; i < N; ++i) p.push_back(i % 2 == 0 ? TowerBase::lo : TowerBase::hi);
    return p;
}

std::vector<mpz_class> oscillating_tower(const Dyadic& base_lo, const Dyadic& base_hi,
                                         const std::vector<TowerBase>& pattern, unsigned long D, unsigned long K,
                                         const DegreeList& ds, const mpq_class& eps) {
    if (!(base_lo > Dyadic(1)) || !(base_hi > base_lo)) throw PreconditionError("need 1 < base_lo < base_hi");
    if (pattern.empty()) throw PreconditionError("empty pattern");
    if (ds.size() + 1 < pattern.size()) throw PreconditionError("need d_n for n < pattern length");
    if (eps <= 0) throw PreconditionError("epsilon must be positive");
    std::vector<mpz_class> a;
    for (unsigned long n = 1; n <= pattern.size(); ++n) {
        const Dyadic& base = pattern[n - 1] == TowerBase::lo ? base_lo : base_hi;
        a.push_back(ceil_power(base, tower_exponent(D, K, ds, n)));
        if (a.size() > 1 && !(a[a.size() - 2] < a.back()))
            throw PreconditionError("tower is not strictly increasing at n = " + std::to_string(n));
        if (!exceeds_power(a.back(), n, eps))
            throw PreconditionError("tower violates a_n >= n^(1+eps) at n = " + std::to_string(n));
    }
    return a;
}

IntPolynomial surd_minpoly(const mpz_class& a, const mpz_class& r) {
    return IntPolynomial(std::vector<mpz_class>{a * a - r, -2 * a, 1});
}

std::vector<AlgebraicNumber> quadratic_surd_family(const std::vector<mpz_class>& a_seq, const mpz_class& r) {
    if (r < 2 || !is_squarefree(r)) throw PreconditionError("r must be a squarefree integer >= 2");
    std::vector<AlgebraicNumber> out;
    for (const auto& a : a_seq) {
        if (a <= 0 || a * a <= r) throw PreconditionError("need a_n > sqrt(r), got a_n = " + a.get_str());
        IntPolynomial p = surd_minpoly(a, r);
        // larger real root is a + sqrt r
        ComplexBox box = isolate_all_roots(p, Dyadic(1)).back();
        out.push_back(AlgebraicNumber::trusted(p, box));
    }
    return out;
}

}  // namespace algdeg
