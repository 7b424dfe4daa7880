#ifndef ALGDEG_SEQUENCES_HPP
#define ALGDEG_SEQUENCES_HPP

#include <vector>

#include "algdeg/algnum.hpp"
#include "algdeg/bounds.hpp"

namespace algdeg {

/// a_1, a_{n+1} = a_n^2 - a_n + 1; N terms.
std::vector<mpz_class> sylvester(const mpz_class& a1, std::size_t N);
/// sum_{n>=1} 1/a_n = 1/(a1 - 1).
mpq_class sylvester_sum(const mpz_class& a1);

enum class TowerBase { lo, hi };

/// a_n = ceil(base(n)^{tower_exponent(D, K, ds, n)}) for n = 1..pattern.size(),
/// base(n) = base_lo or base_hi per the pattern. Fails unless the result is
/// strictly increasing with a_n >= n^{1+eps}.
std::vector<mpz_class> oscillating_tower(const Dyadic& base_lo, const Dyadic& base_hi,
                                         const std::vector<TowerBase>& pattern, unsigned long D, unsigned long K,
                                         const DegreeList& ds, const mpq_class& eps = 1);

/// Alternating lo, hi, lo, ... of length N.
std::vector<TowerBase> alternating_pattern(std::size_t N);

/// x^2 - 2a x + a^2 - r.
IntPolynomial surd_minpoly(const mpz_class& a, const mpz_class& r);
/// a_n + sqrt r for each a_n; r squarefree >= 2 and a_n > sqrt r.
std::vector<AlgebraicNumber> quadratic_surd_family(const std::vector<mpz_class>& a_seq, const mpz_class& r);

/// |alpha| >= n^{1+eps} decided exactly for a positive integer value.
bool exceeds_power(const mpz_class& value, unsigned long n, const mpq_class& eps);

}  // namespace algdeg

#endif
