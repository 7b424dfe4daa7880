#ifndef ALGDEG_INTPOLY_HPP
#define ALGDEG_INTPOLY_HPP

#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "algdeg/dyadic.hpp"
#include "algdeg/interval.hpp"

namespace algdeg {

/// Univariate polynomial over Z, coefficients ascending by degree.
/// The zero polynomial has no coefficients; otherwise the last one is nonzero.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<mpz_class> coeffs);
    IntPolynomial(std::initializer_list<long> coeffs);

    static IntPolynomial constant(const mpz_class& c);
    static IntPolynomial x() { return IntPolynomial({0, 1}); }
    /// c * x^k
    static IntPolynomial monomial(const mpz_class& c, int k);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    const std::vector<mpz_class>& coeffs() const { return c_; }
    /// Coefficient of x^i, zero beyond the degree.
    mpz_class coeff(int i) const;
    /// Leading coefficient; precondition: nonzero.
    const mpz_class& lead() const;

    IntPolynomial operator-() const;
    friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator*(const mpz_class& s, const IntPolynomial& p);
    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.c_ == b.c_; }

    IntPolynomial derivative() const;
    /// gcd of the coefficients (nonnegative); 0 for the zero polynomial.
    mpz_class content() const;
    /// p / content(p) with positive leading coefficient.
    IntPolynomial primitive_part() const;
    /// Exact division of every coefficient by d.
    IntPolynomial divide_coeffs(const mpz_class& d) const;
    /// x^deg * p(1/x).
    IntPolynomial reversed() const;
    /// p(-x).
    IntPolynomial negate_variable() const;
    /// p(x + s).
    IntPolynomial taylor_shift(const mpz_class& s) const;

    mpz_class eval(const mpz_class& x) const;
    mpq_class eval(const mpq_class& x) const;
    /// Exact value at a dyadic point.
    Dyadic eval(const Dyadic& x) const;
    /// Sign of p(x), computed exactly.
    int sign_at(const Dyadic& x) const;

    /// Human-readable form such as "x^2 - 4*x + 2".
    std::string to_string() const;

private:
    void trim();
    std::vector<mpz_class> c_;
};

std::ostream& operator<<(std::ostream& os, const IntPolynomial& p);

enum class RingOp { add, sub, mul };
IntPolynomial ring_op(const IntPolynomial& p, const IntPolynomial& q, RingOp op);

/// lc(b)^(deg a - deg b + 1) * a mod b.
IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b);
/// a / b when b divides a exactly over Z; nullopt otherwise.
std::optional<IntPolynomial> divide_exact(const IntPolynomial& a, const IntPolynomial& b);
/// Primitive gcd with positive leading coefficient (content gcd folded in).
IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b);

/// Exact resultant via the subresultant remainder sequence.
mpz_class resultant(const IntPolynomial& p, const IntPolynomial& q);

/// p / gcd(p, p'), primitive with positive leading coefficient.
IntPolynomial squarefree_part(const IntPolynomial& p);
/// Yun's algorithm: p = c * prod f_i^i with f_i primitive, squarefree, coprime.
std::vector<std::pair<IntPolynomial, int>> squarefree_decomposition(const IntPolynomial& p);

/// Interval Horner evaluation; the result contains p(z0) for every z0 in z.
ComplexBox eval_on_box(const IntPolynomial& p, const ComplexBox& z, long prec = 256);

/// Number of distinct real roots in the half-open interval (lo, hi].
int count_real_roots(const IntPolynomial& p, const Dyadic& lo, const Dyadic& hi);

}  // namespace algdeg

#endif
