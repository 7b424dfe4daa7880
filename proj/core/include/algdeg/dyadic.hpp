#ifndef ALGDEG_DYADIC_HPP
#define ALGDEG_DYADIC_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace algdeg {

enum class Round { down, up, nearest };

/// Precision sentinel meaning "never round".
inline constexpr long kExact = 1L << 40;

/// Exact dyadic rational m * 2^e.
///
/// The representation is canonical: the mantissa is odd, or zero with a
/// zero exponent, so structural equality is numeric equality. Ring
/// operations are exact; anything that leaves the dyadics (division, roots,
/// logarithms) takes an explicit precision and rounding direction.
class Dyadic {
public:
    Dyadic() = default;
    Dyadic(long value) : mant_(value) { normalize(); }  // NOLINT(implicit)
    Dyadic(mpz_class mantissa, long exponent = 0) : mant_(std::move(mantissa)), exp_(exponent) { normalize(); }

    static Dyadic from_double(double value);
    static Dyadic pow2(long k) { return Dyadic(mpz_class(1), k); }

    /// Accepts "m", "m*2^e" and finite decimal strings such as "1.25" or
    /// "-3e-2". A decimal that is not dyadic is rounded in direction `dir`
    /// to `prec` significant bits; with Round::nearest and no rounding
    /// needed the result is exact.
    static Dyadic parse(std::string_view text, Round dir = Round::nearest, long prec = 256);

    const mpz_class& mantissa() const { return mant_; }
    long exponent() const { return exp_; }

    int sign() const { return sgn(mant_); }
    bool is_zero() const { return sgn(mant_) == 0; }
    bool is_integer() const { return exp_ >= 0; }

    /// floor(log2|x|) for x != 0.
    long msb() const;
    /// Number of significant bits of the mantissa.
    long bits() const;

    Dyadic operator-() const;
    Dyadic abs() const { return sign() < 0 ? -*this : *this; }
    Dyadic mul_2exp(long k) const;

    friend Dyadic operator+(const Dyadic& a, const Dyadic& b);
    friend Dyadic operator-(const Dyadic& a, const Dyadic& b);
    friend Dyadic operator*(const Dyadic& a, const Dyadic& b);
    Dyadic& operator+=(const Dyadic& b) { return *this = *this + b; }
    Dyadic& operator-=(const Dyadic& b) { return *this = *this - b; }
    Dyadic& operator*=(const Dyadic& b) { return *this = *this * b; }

    friend bool operator==(const Dyadic& a, const Dyadic& b) { return a.exp_ == b.exp_ && a.mant_ == b.mant_; }
    friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b);

    mpq_class to_mpq() const;
    double to_double() const;
    mpz_class floor() const;
    mpz_class ceil() const;

    /// Canonical exact text: "m" for integers, "m*2^e" otherwise.
    std::string to_string() const;
    /// Decimal approximation with `digits` significant digits, rounded in `dir`.
    std::string to_decimal(int digits = 20, Round dir = Round::nearest) const;

private:
    void normalize();

    mpz_class mant_;
    long exp_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Dyadic& d);

inline Dyadic min(const Dyadic& a, const Dyadic& b) { return b < a ? b : a; }
inline Dyadic max(const Dyadic& a, const Dyadic& b) { return a < b ? b : a; }

/// Round to `prec` significant bits.
Dyadic round(const Dyadic& x, long prec, Round dir);
/// Round to a multiple of 2^-frac_bits.
Dyadic round_fixed(const Dyadic& x, long frac_bits, Round dir);
/// Nearest-or-directed dyadic approximation of a rational.
Dyadic from_mpq(const mpq_class& q, long prec, Round dir);
Dyadic div(const Dyadic& a, const Dyadic& b, long prec, Round dir);
/// Square root of x >= 0.
Dyadic sqrt(const Dyadic& x, long prec, Round dir);
/// log2(x) for x > 0, directed rounding via MPFR.
Dyadic log2(const Dyadic& x, long prec, Round dir);
Dyadic log2(const mpz_class& x, long prec, Round dir);
Dyadic exp2(const Dyadic& x, long prec, Round dir);
/// x^y for x > 0.
Dyadic pow(const Dyadic& x, const Dyadic& y, long prec, Round dir);

inline Round opposite(Round dir) {
    return dir == Round::down ? Round::up : dir == Round::up ? Round::down : Round::nearest;
}

}  // namespace algdeg

#endif
