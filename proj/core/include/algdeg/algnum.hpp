#ifndef ALGDEG_ALGNUM_HPP
#define ALGDEG_ALGNUM_HPP

#include <optional>
#include <vector>

#include "algdeg/interval.hpp"
#include "algdeg/intpoly.hpp"

namespace algdeg {

/// Enclosure of log2 of a positive real: the value lies in [2^lo, 2^hi].
/// With unbounded_below set the lower end is 0 (lo is then meaningless).
struct LogMagnitude {
    Dyadic lo;
    Dyadic hi;
    bool unbounded_below = false;

    static LogMagnitude from_log2(const DyadicInterval& l) { return {l.lo, l.hi, false}; }
    /// log2 of a value interval; a lower end <= 0 makes it unbounded below.
    static LogMagnitude of_value(const DyadicInterval& v, long prec);

    DyadicInterval log2_interval() const;
    /// Value enclosure [2^lo, 2^hi] (lower end 0 when unbounded below).
    DyadicInterval value(long prec) const;
    /// hi - lo, i.e. log2 of the ratio between the bounds.
    Dyadic log_width() const { return hi - lo; }

    friend bool operator==(const LogMagnitude&, const LogMagnitude&) = default;
};

/// log of a product.
LogMagnitude operator+(const LogMagnitude& a, const LogMagnitude& b);
/// log of a quotient; b must be bounded below.
LogMagnitude operator-(const LogMagnitude& a, const LogMagnitude& b);
/// log of x^k for a nonnegative exponent interval k.
LogMagnitude power(const LogMagnitude& x, const DyadicInterval& k, long prec);
/// Certainly x < y: upper end of x below lower end of y.
bool certainly_less(const LogMagnitude& x, const LogMagnitude& y);
/// log2(1 + rel_tol) rounded down; the log-width budget for a relative tolerance.
Dyadic log_tolerance(const Dyadic& rel_tol);

/// Algebraic number: irreducible primitive minimal polynomial with positive
/// leading coefficient, and a box isolating one of its roots. Real numbers
/// always carry a box with im = [0, 0].
class AlgebraicNumber {
public:
    /// Validated constructor: the polynomial is normalized to its primitive
    /// part, must be irreducible, and the box must hold exactly one root.
    static AlgebraicNumber make(const IntPolynomial& minpoly, const ComplexBox& box);
    /// Unchecked constructor for values whose invariants are already known.
    static AlgebraicNumber trusted(IntPolynomial minpoly, ComplexBox box);
    static AlgebraicNumber from_rational(const mpq_class& q);
    static AlgebraicNumber from_integer(const mpz_class& z) { return from_rational(mpq_class(z)); }

    const IntPolynomial& minpoly() const { return minpoly_; }
    const ComplexBox& box() const { return box_; }
    int degree() const { return minpoly_.degree(); }
    bool is_algebraic_integer() const { return minpoly_.lead() == 1; }
    bool is_rational() const { return degree() == 1; }
    bool is_zero() const { return degree() == 1 && minpoly_.coeff(0) == 0; }
    bool is_real() const { return box_.im.is_point() && box_.im.lo.is_zero(); }
    std::optional<mpq_class> rational_value() const;

    /// Same number with its box refined to sides <= width.
    AlgebraicNumber refined(const Dyadic& width) const;

    friend bool operator==(const AlgebraicNumber& a, const AlgebraicNumber& b);

private:
    AlgebraicNumber(IntPolynomial p, ComplexBox b) : minpoly_(std::move(p)), box_(std::move(b)) {}
    IntPolynomial minpoly_;
    ComplexBox box_;
};

/// Isolating boxes of all conjugates at sides <= width, sorted as in
/// isolate_all_roots. `self` (optional) receives the index of a itself.
std::vector<ComplexBox> conjugates(const AlgebraicNumber& a, const Dyadic& width, std::size_t* self = nullptr);

/// |a| to relative width <= rel_tol.
DyadicInterval abs_value(const AlgebraicNumber& a, const Dyadic& rel_tol);
/// Max modulus over the conjugates, relative width <= rel_tol.
DyadicInterval house(const AlgebraicNumber& a, const Dyadic& rel_tol);
/// log2 M(a), M = |lead| * prod max(1, |a_i|); log-width <= log2(1 + rel_tol).
LogMagnitude mahler_measure(const AlgebraicNumber& a, const Dyadic& rel_tol);
/// log2 H(a) = log2 M(a) / deg a.
LogMagnitude weil_height(const AlgebraicNumber& a, const Dyadic& rel_tol);

enum class FieldOp { add, mul };
/// Exact sum or product; the minimal polynomial comes from a resultant,
/// factorized, with the right factor picked by certified root boxes.
AlgebraicNumber field_op(const AlgebraicNumber& a, const AlgebraicNumber& b, FieldOp op);
AlgebraicNumber recip(const AlgebraicNumber& a);
AlgebraicNumber neg(const AlgebraicNumber& a);
AlgebraicNumber operator+(const AlgebraicNumber& a, const AlgebraicNumber& b);
AlgebraicNumber operator-(const AlgebraicNumber& a, const AlgebraicNumber& b);
AlgebraicNumber operator*(const AlgebraicNumber& a, const AlgebraicNumber& b);
AlgebraicNumber operator/(const AlgebraicNumber& a, const AlgebraicNumber& b);

/// Re(conj(zeta) * z) over the boxes. zeta's modulus enclosure must contain 1.
DyadicInterval re_zeta(const ComplexBox& zeta, const ComplexBox& z, long prec = 256);

/// Same minimal polynomial.
bool is_conjugate(const AlgebraicNumber& a, const AlgebraicNumber& b);

/// Minimal polynomial of the sum / product of all root pairs:
/// Res_y(p(y), q(x - y)) or Res_y(p(y), y^deg q * q(x / y)).
IntPolynomial composed_sum(const IntPolynomial& p, const IntPolynomial& q);
IntPolynomial composed_product(const IntPolynomial& p, const IntPolynomial& q);

}  // namespace algdeg

#endif
