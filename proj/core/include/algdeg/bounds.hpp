#ifndef ALGDEG_BOUNDS_HPP
#define ALGDEG_BOUNDS_HPP

#include <vector>

#include "algdeg/algnum.hpp"

namespace algdeg {

using DegreeList = std::vector<unsigned long>;

/// Prefix products D_0 = 1, D_n = d_1 ... d_n for n = 0..ds.size().
std::vector<mpz_class> degree_products(const DegreeList& ds);

/// D^n * prod_{i=1}^{n-1} (K D_i + d_i). Needs n >= 1 and n - 1 <= ds.size().
mpz_class tower_exponent(unsigned long D, unsigned long K, const DegreeList& ds, unsigned long n);

/// log2 of 1 / (2^{deg a deg b} M(a)^{deg b} M(b)^{deg a}). a, b must not be conjugate.
LogMagnitude liouville_lower_bound(const AlgebraicNumber& a, const AlgebraicNumber& b, const Dyadic& rel_tol);

struct SeparationCheck {
    LogMagnitude distance;  ///< log2 |a - b|
    LogMagnitude bound;     ///< log2 of the separation bound
    LogMagnitude margin;    ///< distance - bound
    bool ok = false;        ///< margin certified >= 0
};

/// Refines |a - b| until the sign of the margin is decided. Undetermined
/// past the precision cap.
SeparationCheck check_separation(const AlgebraicNumber& a, const AlgebraicNumber& b, const Dyadic& rel_tol);

struct ExponentSides {
    mpz_class lhs;
    mpz_class rhs;
};

/// D^{N+1} prod_{i<=N}(K D_i + d_i) and K D D_N sum_{n<=N} D^n prod_{i<n}(K D_i + d_i), N = ds.size().
ExponentSides exponent_inequality_sides(unsigned long D, unsigned long K, const DegreeList& ds);

struct SweepViolation {
    unsigned long D, K;
    DegreeList ds;
};

struct SweepResult {
    unsigned long cases = 0;
    std::vector<SweepViolation> violations;
};

/// Every (D, K) <= (max_D, max_K), every ds with entries in 1..max_d and length 1..max_N.
SweepResult exponent_sweep(unsigned long max_D, unsigned long max_K, unsigned long max_d, unsigned long max_N);

/// Upper bound (2 + 1/eps) / a_N^{eps / (1 + eps)} for the tail sum_{n >= N} 1/a_n.
DyadicInterval erdos_tail_bound(const Dyadic& a_N, const mpq_class& eps, long prec = 128);

/// log2 of (2 A2)^{tower_exponent(D, K, ds, n)}.
LogMagnitude growth_cap(const Dyadic& A2, unsigned long D, unsigned long K, const DegreeList& ds, unsigned long n,
                        long prec = 128);

}  // namespace algdeg

#endif
