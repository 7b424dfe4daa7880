#include "algdeg/interval.hpp"

#include <ostream>

#include "algdeg/error.hpp"

namespace algdeg {

DyadicInterval::DyadicInterval(Dyadic l, Dyadic h) : lo(std::move(l)), hi(std::move(h)) {
    if (hi < lo) throw PreconditionError("interval with lo > hi");
}

Dyadic DyadicInterval::mig() const {
    if (contains_zero()) return Dyadic();
    return min(lo.abs(), hi.abs());
}

std::ostream& operator<<(std::ostream& os, const DyadicInterval& x) {
    return os << '[' << x.lo << ", " << x.hi << ']';
}

DyadicInterval hull(const DyadicInterval& a, const DyadicInterval& b) {
    return {min(a.lo, b.lo), max(a.hi, b.hi)};
}

DyadicInterval intersect(const DyadicInterval& a, const DyadicInterval& b) {
    if (!a.intersects(b)) throw PreconditionError("empty interval intersection");
    return {max(a.lo, b.lo), min(a.hi, b.hi)};
}

DyadicInterval round_out(const DyadicInterval& x, long prec) {
    return {round(x.lo, prec, Round::down), round(x.hi, prec, Round::up)};
}

DyadicInterval operator-(const DyadicInterval& x) {
    return {-x.hi, -x.lo};
}

DyadicInterval add(const DyadicInterval& a, const DyadicInterval& b, long prec) {
    return {round(a.lo + b.lo, prec, Round::down), round(a.hi + b.hi, prec, Round::up)};
}

DyadicInterval sub(const DyadicInterval& a, const DyadicInterval& b, long prec) {
    return {round(a.lo - b.hi, prec, Round::down), round(a.hi - b.lo, prec, Round::up)};
}

DyadicInterval mul(const DyadicInterval& a, const DyadicInterval& b, long prec) {
    if (a.is_point() && b.is_point()) {
        Dyadic p = a.lo * b.lo;
        return {round(p, prec, Round::down), round(p, prec, Round::up)};
    }
    Dyadic c[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
    Dyadic lo = c[0], hi = c[0];
    for (int k = 1; k < 4; ++k) {
        lo = min(lo, c[k]);
        hi = max(hi, c[k]);
    }
    return {round(lo, prec, Round::down), round(hi, prec, Round::up)};
}

DyadicInterval sqr(const DyadicInterval& a, long prec) {
    Dyadic l2 = a.lo * a.lo, h2 = a.hi * a.hi;
    Dyadic hi = max(l2, h2);
    Dyadic lo = a.contains_zero() ? Dyadic() : min(l2, h2);
    return {round(lo, prec, Round::down), round(hi, prec, Round::up)};
}

DyadicInterval div(const DyadicInterval& a, const DyadicInterval& b, long prec) {
    if (b.contains_zero()) throw PreconditionError("interval division by an interval containing zero");
    Dyadic lo, hi;
    bool first = true;
    for (const Dyadic* x : {&a.lo, &a.hi}) {
        for (const Dyadic* y : {&b.lo, &b.hi}) {
            Dyadic l = algdeg::div(*x, *y, prec, Round::down);
            Dyadic h = algdeg::div(*x, *y, prec, Round::up);
            if (first) {
                lo = l;
                hi = h;
                first = false;
            } else {
                lo = min(lo, l);
                hi = max(hi, h);
            }
        }
    }
    return {lo, hi};
}

DyadicInterval scale(const DyadicInterval& a, const Dyadic& s, long prec) {
    return mul(a, DyadicInterval::point(s), prec);
}

DyadicInterval abs(const DyadicInterval& a) {
    if (a.lo.sign() >= 0) return a;
    if (a.hi.sign() <= 0) return -a;
    return {Dyadic(), max(-a.lo, a.hi)};
}

DyadicInterval max(const DyadicInterval& a, const DyadicInterval& b) {
    return {max(a.lo, b.lo), max(a.hi, b.hi)};
}

DyadicInterval min(const DyadicInterval& a, const DyadicInterval& b) {
    return {min(a.lo, b.lo), min(a.hi, b.hi)};
}

DyadicInterval sqrt(const DyadicInterval& a, long prec) {
    if (a.hi.sign() < 0) throw PreconditionError("sqrt of negative interval");
    Dyadic lo = a.lo.sign() <= 0 ? Dyadic() : algdeg::sqrt(a.lo, prec, Round::down);
    return {lo, algdeg::sqrt(a.hi, prec, Round::up)};
}

DyadicInterval log2(const DyadicInterval& a, long prec) {
    if (!a.positive()) throw PreconditionError("log2 of an interval that is not positive");
    return {algdeg::log2(a.lo, prec, Round::down), algdeg::log2(a.hi, prec, Round::up)};
}

DyadicInterval exp2(const DyadicInterval& a, long prec) {
    return {algdeg::exp2(a.lo, prec, Round::down), algdeg::exp2(a.hi, prec, Round::up)};
}

DyadicInterval pow(const DyadicInterval& a, const Dyadic& e, long prec) {
    if (a.lo.sign() < 0) throw PreconditionError("pow of an interval with negative part");
    if (e.sign() <= 0) throw PreconditionError("pow exponent must be positive");
    Dyadic lo = a.lo.is_zero() ? Dyadic() : algdeg::pow(a.lo, e, prec, Round::down);
    Dyadic hi = a.hi.is_zero() ? Dyadic() : algdeg::pow(a.hi, e, prec, Round::up);
    return {lo, hi};
}

DyadicInterval from_mpq(const mpq_class& q, long prec) {
    return {algdeg::from_mpq(q, prec, Round::down), algdeg::from_mpq(q, prec, Round::up)};
}

Dyadic relative_width(const DyadicInterval& x, long prec) {
    if (x.is_point()) return Dyadic();
    Dyadic m = x.mig();
    if (m.is_zero()) return Dyadic::pow2(1L << 20);
    return algdeg::div(x.width(), m, prec, Round::up);
}

ComplexBox ComplexBox::around(const Dyadic& cr, const Dyadic& ci, const Dyadic& radius) {
    return {{cr - radius, cr + radius}, {ci - radius, ci + radius}};
}

bool ComplexBox::interior_contains(const ComplexBox& o) const {
    auto strict = [](const DyadicInterval& outer, const DyadicInterval& inner) {
        return outer.lo < inner.lo && inner.hi < outer.hi;
    };
    return strict(re, o.re) && strict(im, o.im);
}

std::ostream& operator<<(std::ostream& os, const ComplexBox& z) {
    return os << z.re << " + i" << z.im;
}

ComplexBox intersect(const ComplexBox& a, const ComplexBox& b) {
    return {intersect(a.re, b.re), intersect(a.im, b.im)};
}

ComplexBox hull(const ComplexBox& a, const ComplexBox& b) {
    return {hull(a.re, b.re), hull(a.im, b.im)};
}

ComplexBox add(const ComplexBox& a, const ComplexBox& b, long prec) {
    return {add(a.re, b.re, prec), add(a.im, b.im, prec)};
}

ComplexBox sub(const ComplexBox& a, const ComplexBox& b, long prec) {
    return {sub(a.re, b.re, prec), sub(a.im, b.im, prec)};
}

ComplexBox mul(const ComplexBox& a, const ComplexBox& b, long prec) {
    if (a.im.is_point() && a.im.lo.is_zero() && b.im.is_point() && b.im.lo.is_zero())
        return {mul(a.re, b.re, prec), DyadicInterval::point(Dyadic())};
    // Products are formed exactly; only the final sums are rounded.
    DyadicInterval rr = mul(a.re, b.re, kExact), ii = mul(a.im, b.im, kExact);
    DyadicInterval ri = mul(a.re, b.im, kExact), ir = mul(a.im, b.re, kExact);
    return {sub(rr, ii, prec), add(ri, ir, prec)};
}

ComplexBox scale(const ComplexBox& a, const DyadicInterval& s, long prec) {
    return {mul(a.re, s, prec), mul(a.im, s, prec)};
}

ComplexBox neg(const ComplexBox& a) {
    return {-a.re, -a.im};
}

DyadicInterval norm_sqr(const ComplexBox& a, long prec) {
    return add(sqr(a.re, kExact), sqr(a.im, kExact), prec);
}

ComplexBox recip(const ComplexBox& a, long prec) {
    if (a.contains_zero()) throw PreconditionError("reciprocal of a box containing zero");
    if (a.im.is_point() && a.im.lo.is_zero())
        return {div(DyadicInterval::point(Dyadic(1)), a.re, prec), DyadicInterval::point(Dyadic())};
    DyadicInterval n = norm_sqr(a, prec + 8);
    return {div(a.re, n, prec), div(-a.im, n, prec)};
}

ComplexBox div(const ComplexBox& a, const ComplexBox& b, long prec) {
    return mul(a, recip(b, prec + 8), prec);
}

DyadicInterval modulus(const ComplexBox& a, long prec) {
    if (a.im.is_point() && a.im.lo.is_zero()) return abs(a.re);
    if (a.re.is_point() && a.re.lo.is_zero()) return abs(a.im);
    return sqrt(norm_sqr(a, prec + 8), prec);
}

}  // namespace algdeg
