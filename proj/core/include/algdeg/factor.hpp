#ifndef ALGDEG_FACTOR_HPP
#define ALGDEG_FACTOR_HPP

#include <cstdint>
#include <vector>

#include "algdeg/intpoly.hpp"

namespace algdeg {

/// Largest squarefree component that factorize() will attack with the full
/// modular algorithm. Components proven irreducible by a fast path are exempt.
inline constexpr int kFactorCeiling = 16;

struct Factor {
    IntPolynomial poly;  ///< irreducible, primitive, positive leading coefficient
    int multiplicity = 1;

    friend bool operator==(const Factor&, const Factor&) = default;
};

/// Irreducible factorization over Q of a nonzero integer polynomial.
///
/// Factors are sorted by (degree, coefficients); the content and sign of p
/// are dropped. Constants yield an empty list. Throws CeilingExceeded when
/// a squarefree component above kFactorCeiling is not settled by a fast path.
std::vector<Factor> factorize(const IntPolynomial& p, std::uint64_t seed = 0x5eed);

/// True when p (nonconstant) is irreducible over Q.
bool is_irreducible(const IntPolynomial& p, std::uint64_t seed = 0x5eed);

/// Rational roots of p, ascending, each once.
std::vector<mpq_class> rational_roots(const IntPolynomial& p);

/// Eisenstein's criterion at some prime <= bound.
bool eisenstein_applies(const IntPolynomial& p, unsigned long bound = 100);

}  // namespace algdeg

#endif
