#ifndef ALGDEG_INTERVAL_HPP
#define ALGDEG_INTERVAL_HPP

#include <iosfwd>
#include <string>

#include "algdeg/dyadic.hpp"

namespace algdeg {

/// Closed interval [lo, hi] with dyadic endpoints.
///
/// Arithmetic takes a working precision (significant bits) and rounds
/// outward, so every result encloses the exact image of its inputs.
struct DyadicInterval {
    Dyadic lo;
    Dyadic hi;

    DyadicInterval() = default;
    DyadicInterval(Dyadic l, Dyadic h);
    static DyadicInterval point(const Dyadic& x) { return {x, x}; }

    bool is_point() const { return lo == hi; }
    bool contains(const Dyadic& x) const { return lo <= x && x <= hi; }
    bool contains(const DyadicInterval& o) const { return lo <= o.lo && o.hi <= hi; }
    bool contains_zero() const { return lo.sign() <= 0 && hi.sign() >= 0; }
    bool intersects(const DyadicInterval& o) const { return !(hi < o.lo || o.hi < lo); }
    bool positive() const { return lo.sign() > 0; }
    bool negative() const { return hi.sign() < 0; }

    Dyadic width() const { return hi - lo; }
    Dyadic mid() const { return (lo + hi).mul_2exp(-1); }
    /// max(|lo|, |hi|)
    Dyadic mag() const { return max(lo.abs(), hi.abs()); }
    /// min |x| over the interval
    Dyadic mig() const;

    friend bool operator==(const DyadicInterval&, const DyadicInterval&) = default;
};

std::ostream& operator<<(std::ostream& os, const DyadicInterval& x);

DyadicInterval hull(const DyadicInterval& a, const DyadicInterval& b);
/// Intersection; precondition a.intersects(b).
DyadicInterval intersect(const DyadicInterval& a, const DyadicInterval& b);

DyadicInterval round_out(const DyadicInterval& x, long prec);
DyadicInterval operator-(const DyadicInterval& x);
DyadicInterval add(const DyadicInterval& a, const DyadicInterval& b, long prec);
DyadicInterval sub(const DyadicInterval& a, const DyadicInterval& b, long prec);
DyadicInterval mul(const DyadicInterval& a, const DyadicInterval& b, long prec);
DyadicInterval sqr(const DyadicInterval& a, long prec);
/// Precondition: 0 not in b.
DyadicInterval div(const DyadicInterval& a, const DyadicInterval& b, long prec);
DyadicInterval scale(const DyadicInterval& a, const Dyadic& s, long prec);
DyadicInterval abs(const DyadicInterval& a);
DyadicInterval max(const DyadicInterval& a, const DyadicInterval& b);
DyadicInterval min(const DyadicInterval& a, const DyadicInterval& b);
DyadicInterval sqrt(const DyadicInterval& a, long prec);
/// Precondition: a.positive().
DyadicInterval log2(const DyadicInterval& a, long prec);
DyadicInterval exp2(const DyadicInterval& a, long prec);
/// a^e for a >= 0 and e > 0 (0^e = 0).
DyadicInterval pow(const DyadicInterval& a, const Dyadic& e, long prec);
DyadicInterval from_mpq(const mpq_class& q, long prec);

/// (hi - lo) / lo for a positive interval; 0 for a point.
Dyadic relative_width(const DyadicInterval& x, long prec = 64);

/// Rectangle re x im in the complex plane.
struct ComplexBox {
    DyadicInterval re;
    DyadicInterval im;

    static ComplexBox point(const Dyadic& r, const Dyadic& i = Dyadic()) {
        return {DyadicInterval::point(r), DyadicInterval::point(i)};
    }
    /// Square of half-side `radius` centred at (cr, ci).
    static ComplexBox around(const Dyadic& cr, const Dyadic& ci, const Dyadic& radius);

    bool contains(const ComplexBox& o) const { return re.contains(o.re) && im.contains(o.im); }
    bool contains_point(const Dyadic& r, const Dyadic& i) const { return re.contains(r) && im.contains(i); }
    /// Strict containment in the interior of this box (used by Krawczyk).
    bool interior_contains(const ComplexBox& o) const;
    bool intersects(const ComplexBox& o) const { return re.intersects(o.re) && im.intersects(o.im); }
    bool contains_zero() const { return re.contains_zero() && im.contains_zero(); }
    bool is_point() const { return re.is_point() && im.is_point(); }
    /// Largest side length.
    Dyadic width() const { return max(re.width(), im.width()); }

    ComplexBox conj() const { return {re, -im}; }

    friend bool operator==(const ComplexBox&, const ComplexBox&) = default;
};

std::ostream& operator<<(std::ostream& os, const ComplexBox& z);

ComplexBox intersect(const ComplexBox& a, const ComplexBox& b);
ComplexBox hull(const ComplexBox& a, const ComplexBox& b);
ComplexBox add(const ComplexBox& a, const ComplexBox& b, long prec);
ComplexBox sub(const ComplexBox& a, const ComplexBox& b, long prec);
ComplexBox mul(const ComplexBox& a, const ComplexBox& b, long prec);
ComplexBox scale(const ComplexBox& a, const DyadicInterval& s, long prec);
ComplexBox neg(const ComplexBox& a);
/// 1/z; precondition: box excludes the origin.
ComplexBox recip(const ComplexBox& a, long prec);
ComplexBox div(const ComplexBox& a, const ComplexBox& b, long prec);
/// |z|^2 over the box.
DyadicInterval norm_sqr(const ComplexBox& a, long prec);
/// |z| over the box.
DyadicInterval modulus(const ComplexBox& a, long prec);

}  // namespace algdeg

#endif
