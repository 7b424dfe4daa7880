#include "algdeg/algnum.hpp"

#include <algorithm>
#include <climits>
#include <functional>

#include "algdeg/error.hpp"
#include "algdeg/factor.hpp"
#include "algdeg/rootbox.hpp"

namespace algdeg {

namespace {

constexpr long kNegInf = LONG_MIN / 4;
constexpr long kMaxBits = 1L << 14;

long lg(const Dyadic& x) { return x.is_zero() ? kNegInf : x.msb(); }

long box_scale(const ComplexBox& b) {
    long s = std::max({lg(b.re.mag()), lg(b.im.mag()), 0L});
    return s;
}

/// Index of the box in `boxes` (isolating boxes of all roots of p) that
/// holds the root isolated by `mine`.
std::size_t locate(const IntPolynomial& p, ComplexBox mine, std::vector<ComplexBox> boxes) {
    for (int it = 0; it < 400; ++it) {
        std::vector<std::size_t> hits;
        for (std::size_t i = 0; i < boxes.size(); ++i)
            if (boxes[i].intersects(mine)) hits.push_back(i);
        if (hits.size() == 1) return hits.front();
        if (hits.empty()) throw Undetermined("isolating box matches no conjugate");
        Dyadic w = mine.width();
        for (auto i : hits) w = max(w, boxes[i].width());
        w = w.mul_2exp(-8);
        if (w.is_zero()) throw Undetermined("conjugate boxes do not separate");
        mine = refine_isolated(p, mine, w);
        for (auto i : hits) boxes[i] = refine_isolated(p, boxes[i], w);
    }
    throw Undetermined("could not match a box to a conjugate");
}

/// Newton forward differences at 0..N back to integer coefficients.
IntPolynomial interpolate(std::vector<mpz_class> v) {
    const std::size_t n = v.size();
    std::vector<mpz_class> d(n);
    mpz_class fact = 1;
    for (std::size_t k = 0; k < n; ++k) {
        if (k > 0) fact *= static_cast<unsigned long>(k);
        mpz_divexact(d[k].get_mpz_t(), v[0].get_mpz_t(), fact.get_mpz_t());
        for (std::size_t i = 0; i + 1 < v.size(); ++i) v[i] = v[i + 1] - v[i];
        v.pop_back();
    }
    // d_0 + x (d_1 + (x - 1) (d_2 + ...))
    IntPolynomial f = IntPolynomial::constant(d[n - 1]);
    for (std::size_t k = n - 1; k-- > 0;) {
        f = f * IntPolynomial(std::vector<mpz_class>{-mpz_class(static_cast<unsigned long>(k)), 1});
        f = f + IntPolynomial::constant(d[k]);
    }
    return f;
}

/// Picks the unique root among the candidate polynomials whose isolating
/// box meets `image(width)`, an enclosure of the target value.
AlgebraicNumber select_root(const std::vector<IntPolynomial>& candidates,
                            const std::function<ComplexBox(const Dyadic&)>& image) {
    struct Cand {
        const IntPolynomial* p;
        ComplexBox box;
    };
    ComplexBox e = image(Dyadic(1));
    const long scale = box_scale(e);
    std::vector<Cand> live;
    for (const auto& p : candidates)
        for (const auto& b : isolate_all_roots(p, Dyadic::pow2(scale + 1))) live.push_back({&p, b});
    for (long bits = 16; bits <= kMaxBits; bits *= 2) {
        const Dyadic w = Dyadic::pow2(scale - bits);
        e = image(w);
        std::vector<Cand> next;
        for (auto& c : live) {
            if (!c.box.intersects(e)) continue;
            c.box = refine_isolated(*c.p, c.box, w);
            if (c.box.intersects(e)) next.push_back(c);
        }
        live = std::move(next);
        if (live.size() == 1) return AlgebraicNumber::trusted(*live[0].p, live[0].box);
        if (live.empty()) throw Undetermined("no candidate root matches the value enclosure");
    }
    throw Undetermined("factor selection unresolved at the precision cap");
}

/// Substitution x -> (v x - u) / v scaled to integers: roots shift by u/v.
IntPolynomial shift_by_rational(const IntPolynomial& p, const mpq_class& r) {
    // sum c_k v^(d-k) (v x - u)^k
    const int d = p.degree();
    const mpz_class& u = r.get_num();
    const mpz_class& v = r.get_den();
    IntPolynomial lin(std::vector<mpz_class>{-u, v});
    IntPolynomial acc;
    IntPolynomial pw({1});
    mpz_class vp;
    for (int k = 0; k <= d; ++k) {
        mpz_pow_ui(vp.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(d - k));
        acc = acc + mpz_class(p.coeff(k) * vp) * pw;
        pw = pw * lin;
    }
    return acc.primitive_part();
}

/// Roots scaled by u/v (u != 0): sum c_k v^k u^(d-k) x^k.
IntPolynomial scale_by_rational(const IntPolynomial& p, const mpq_class& r) {
    const int d = p.degree();
    std::vector<mpz_class> c(static_cast<std::size_t>(d + 1));
    mpz_class a, b;
    for (int k = 0; k <= d; ++k) {
        mpz_pow_ui(a.get_mpz_t(), r.get_den().get_mpz_t(), static_cast<unsigned long>(k));
        mpz_pow_ui(b.get_mpz_t(), r.get_num().get_mpz_t(), static_cast<unsigned long>(d - k));
        c[k] = p.coeff(k) * a * b;
    }
    return IntPolynomial(std::move(c)).primitive_part();
}

long prec_for(const Dyadic& w, long scale) { return std::max<long>(64, scale - lg(w) + 32); }

}  // namespace

// ---------------------------------------------------------------------------
// LogMagnitude

LogMagnitude LogMagnitude::of_value(const DyadicInterval& v, long prec) {
    if (v.hi.sign() <= 0) throw PreconditionError("log of a nonpositive quantity");
    Dyadic hi = algdeg::log2(v.hi, prec, Round::up);
    if (v.lo.sign() <= 0) return {hi, hi, true};
    return {algdeg::log2(v.lo, prec, Round::down), hi, false};
}

DyadicInterval LogMagnitude::log2_interval() const {
    if (unbounded_below) throw PreconditionError("log enclosure is unbounded below");
    return {lo, hi};
}

DyadicInterval LogMagnitude::value(long prec) const {
    Dyadic l = unbounded_below ? Dyadic() : algdeg::exp2(lo, prec, Round::down);
    return {l, algdeg::exp2(hi, prec, Round::up)};
}

LogMagnitude operator+(const LogMagnitude& a, const LogMagnitude& b) {
    return {a.lo + b.lo, a.hi + b.hi, a.unbounded_below || b.unbounded_below};
}

LogMagnitude operator-(const LogMagnitude& a, const LogMagnitude& b) {
    if (b.unbounded_below) throw PreconditionError("division by a quantity that may vanish");
    return {a.lo - b.hi, a.hi - b.lo, a.unbounded_below};
}

LogMagnitude power(const LogMagnitude& x, const DyadicInterval& k, long prec) {
    if (k.lo.sign() < 0) throw PreconditionError("negative exponent");
    Dyadic hi = max(round(x.hi * k.lo, prec, Round::up), round(x.hi * k.hi, prec, Round::up));
    if (x.unbounded_below) return {hi, hi, true};
    Dyadic lo = min(round(x.lo * k.lo, prec, Round::down), round(x.lo * k.hi, prec, Round::down));
    return {lo, hi, false};
}

bool certainly_less(const LogMagnitude& x, const LogMagnitude& y) {
    return !y.unbounded_below && x.hi < y.lo;
}

Dyadic log_tolerance(const Dyadic& rel_tol) {
    if (rel_tol.sign() <= 0) throw PreconditionError("relative tolerance must be positive");
    return algdeg::log2(Dyadic(1) + rel_tol, 128, Round::down);
}

// ---------------------------------------------------------------------------
// AlgebraicNumber

AlgebraicNumber AlgebraicNumber::make(const IntPolynomial& minpoly, const ComplexBox& box) {
    if (minpoly.degree() < 1) throw PreconditionError("minimal polynomial must have degree >= 1");
    IntPolynomial p = minpoly.primitive_part();
    if (!is_irreducible(p)) throw PreconditionError("minimal polynomial is reducible: " + p.to_string());
    if (box.is_point()) {
        if (!eval_on_box(p, box, kExact).contains_zero())
            throw PreconditionError("point box is not a root of " + p.to_string());
        return {p, box};
    }
    if (p.degree() == 1) {
        mpq_class r(-p.coeff(0), p.coeff(1));
        r.canonicalize();
        if (!(box.im.contains(Dyadic()) && box.re.lo.to_mpq() <= r && r <= box.re.hi.to_mpq()))
            throw PreconditionError("box does not contain the root of " + p.to_string());
        return from_rational(r);
    }
    return {p, refine_root(p, box, box.width())};
}

AlgebraicNumber AlgebraicNumber::trusted(IntPolynomial minpoly, ComplexBox box) {
    return {std::move(minpoly), std::move(box)};
}

AlgebraicNumber AlgebraicNumber::from_rational(const mpq_class& q) {
    IntPolynomial p(std::vector<mpz_class>{-q.get_num(), q.get_den()});
    Dyadic lo = from_mpq(q, 128, Round::down), hi = from_mpq(q, 128, Round::up);
    return {p.primitive_part(), {{lo, hi}, DyadicInterval::point(Dyadic())}};
}

std::optional<mpq_class> AlgebraicNumber::rational_value() const {
    if (degree() != 1) return std::nullopt;
    mpq_class r(-minpoly_.coeff(0), minpoly_.coeff(1));
    r.canonicalize();
    return r;
}

AlgebraicNumber AlgebraicNumber::refined(const Dyadic& width) const {
    return {minpoly_, refine_isolated(minpoly_, box_, width)};
}

bool operator==(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    if (!(a.minpoly_ == b.minpoly_)) return false;
    if (a.degree() == 1) return true;
    if (!a.box_.intersects(b.box_)) return false;
    auto boxes = isolate_all_roots(a.minpoly_, max(a.box_.width(), b.box_.width()) + Dyadic(1));
    return locate(a.minpoly_, a.box_, boxes) == locate(a.minpoly_, b.box_, boxes);
}

// ---------------------------------------------------------------------------
// Measures

std::vector<ComplexBox> conjugates(const AlgebraicNumber& a, const Dyadic& width, std::size_t* self) {
    if (a.degree() == 1) {
        if (self) *self = 0;
        return {a.box().width() <= width ? a.box() : a.refined(width).box()};
    }
    auto boxes = isolate_all_roots(a.minpoly(), width);
    if (self) *self = locate(a.minpoly(), a.box(), boxes);
    return boxes;
}

DyadicInterval abs_value(const AlgebraicNumber& a, const Dyadic& rel_tol) {
    if (rel_tol.sign() <= 0) throw PreconditionError("relative tolerance must be positive");
    if (a.is_zero()) return DyadicInterval::point(Dyadic());
    ComplexBox b = a.box();
    for (long bits = 24; bits <= (1L << 20); bits *= 2) {
        const long scale = box_scale(b);
        const Dyadic w = Dyadic::pow2(scale - bits);
        b = refine_isolated(a.minpoly(), b, w);
        DyadicInterval m = modulus(b, prec_for(w, scale));
        if (m.lo.sign() > 0 && m.hi - m.lo <= rel_tol * m.lo) return m;
    }
    throw Undetermined("modulus did not reach the requested tolerance");
}

DyadicInterval house(const AlgebraicNumber& a, const Dyadic& rel_tol) {
    if (rel_tol.sign() <= 0) throw PreconditionError("relative tolerance must be positive");
    if (a.is_zero()) return DyadicInterval::point(Dyadic());
    const IntPolynomial& p = a.minpoly();
    std::vector<ComplexBox> boxes = conjugates(a, Dyadic(1));
    long scale = 0;
    for (const auto& b : boxes) scale = std::max(scale, box_scale(b));
    for (long bits = 24; bits <= (1L << 20); bits *= 2) {
        const Dyadic w = Dyadic::pow2(scale - bits);
        const long prec = prec_for(w, scale);
        std::vector<DyadicInterval> mods;
        for (auto& b : boxes) {
            b = refine_isolated(p, b, w);
            mods.push_back(modulus(b, prec));
        }
        DyadicInterval h = mods.front();
        for (const auto& m : mods) h = max(h, m);
        if (h.lo.sign() > 0 && h.hi - h.lo <= rel_tol * h.lo) return h;
        // conjugates that can no longer reach the max need no refinement
        std::vector<ComplexBox> keep;
        for (std::size_t i = 0; i < boxes.size(); ++i)
            if (mods[i].hi >= h.lo) keep.push_back(boxes[i]);
        boxes = std::move(keep);
    }
    throw Undetermined("house did not reach the requested tolerance");
}

LogMagnitude mahler_measure(const AlgebraicNumber& a, const Dyadic& rel_tol) {
    const Dyadic budget = log_tolerance(rel_tol);
    const IntPolynomial& p = a.minpoly();
    const mpz_class lead = abs(p.lead());
    std::vector<ComplexBox> boxes = conjugates(a, Dyadic(1));
    long scale = 0;
    for (const auto& b : boxes) scale = std::max(scale, box_scale(b));
    for (long bits = 24; bits <= (1L << 20); bits *= 2) {
        const Dyadic w = Dyadic::pow2(scale - bits);
        const long prec = prec_for(w, scale) + 32;
        LogMagnitude m{log2(lead, prec, Round::down), log2(lead, prec, Round::up), false};
        for (auto& b : boxes) {
            DyadicInterval mod = modulus(b, prec);
            if (mod.hi <= Dyadic(1)) continue;
            if (mod.lo >= Dyadic(1)) {
                m.lo += log2(mod.lo, prec, Round::down);
                m.hi += log2(mod.hi, prec, Round::up);
            } else {
                m.hi += log2(mod.hi, prec, Round::up);
            }
        }
        if (m.log_width() <= budget) return m;
        for (auto& b : boxes) b = refine_isolated(p, b, w.mul_2exp(-bits));
    }
    throw Undetermined("Mahler measure did not reach the requested tolerance");
}

LogMagnitude weil_height(const AlgebraicNumber& a, const Dyadic& rel_tol) {
    LogMagnitude m = mahler_measure(a, rel_tol);
    const Dyadic d(a.degree());
    const long prec = std::max<long>({128, m.lo.bits() + 64, m.hi.bits() + 64});
    return {div(m.lo, d, prec, Round::down), div(m.hi, d, prec, Round::up), false};
}

// ---------------------------------------------------------------------------
// Arithmetic

IntPolynomial composed_sum(const IntPolynomial& p, const IntPolynomial& q) {
    const int n = p.degree() * q.degree();
    const IntPolynomial qn = q.negate_variable();
    std::vector<mpz_class> v;
    for (int t = 0; t <= n; ++t) v.push_back(resultant(p, qn.taylor_shift(mpz_class(-t))));
    return interpolate(std::move(v));
}

IntPolynomial composed_product(const IntPolynomial& p, const IntPolynomial& q) {
    const int m = q.degree();
    const int n = p.degree() * m;
    std::vector<mpz_class> v;
    for (int t = 0; t <= n; ++t) {
        std::vector<mpz_class> h(static_cast<std::size_t>(m + 1));
        mpz_class tk = 1;
        for (int k = 0; k <= m; ++k) {
            h[static_cast<std::size_t>(m - k)] = q.coeff(k) * tk;
            tk *= t;
        }
        IntPolynomial hp(std::move(h));
        v.push_back(hp.is_zero() ? mpz_class(0) : resultant(p, hp));
    }
    return interpolate(std::move(v));
}

AlgebraicNumber field_op(const AlgebraicNumber& a, const AlgebraicNumber& b, FieldOp op) {
    auto ra = a.rational_value(), rb = b.rational_value();
    if (ra && rb) return AlgebraicNumber::from_rational(op == FieldOp::add ? mpq_class(*ra + *rb) : mpq_class(*ra * *rb));
    if (op == FieldOp::add) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
    } else {
        if (a.is_zero() || b.is_zero()) return AlgebraicNumber::from_integer(0);
        if (ra && *ra == 1) return b;
        if (rb && *rb == 1) return a;
    }
    auto image = [&](const Dyadic& w) {
        AlgebraicNumber x = a.refined(w), y = b.refined(w);
        const long prec = prec_for(w, box_scale(x.box()) + box_scale(y.box()));
        return op == FieldOp::add ? add(x.box(), y.box(), prec) : mul(x.box(), y.box(), prec);
    };
    std::vector<IntPolynomial> cands;
    if (ra || rb) {
        const AlgebraicNumber& irr = ra ? b : a;
        const mpq_class& r = ra ? *ra : *rb;
        cands.push_back(op == FieldOp::add ? shift_by_rational(irr.minpoly(), r) : scale_by_rational(irr.minpoly(), r));
    } else {
        IntPolynomial res = op == FieldOp::add ? composed_sum(a.minpoly(), b.minpoly())
                                               : composed_product(a.minpoly(), b.minpoly());
        for (auto& f : factorize(res)) cands.push_back(std::move(f.poly));
    }
    return select_root(cands, image);
}

AlgebraicNumber recip(const AlgebraicNumber& a) {
    if (a.is_zero()) throw PreconditionError("reciprocal of zero");
    if (auto r = a.rational_value()) return AlgebraicNumber::from_rational(1 / *r);
    IntPolynomial p = a.minpoly().reversed().primitive_part();
    AlgebraicNumber x = a;
    while (x.box().contains_zero()) x = x.refined(x.box().width().mul_2exp(-4));
    auto image = [&](const Dyadic& w) {
        AlgebraicNumber y = x.refined(w);
        const long scale = box_scale(y.box());
        Dyadic m = max(y.box().re.mig(), y.box().im.mig());
        return recip(y.box(), prec_for(w, scale) + std::max<long>(0, -lg(m)));
    };
    return select_root({p}, image);
}

AlgebraicNumber neg(const AlgebraicNumber& a) {
    return AlgebraicNumber::trusted(a.minpoly().negate_variable().primitive_part(), algdeg::neg(a.box()));
}

AlgebraicNumber operator+(const AlgebraicNumber& a, const AlgebraicNumber& b) { return field_op(a, b, FieldOp::add); }
AlgebraicNumber operator-(const AlgebraicNumber& a, const AlgebraicNumber& b) { return field_op(a, neg(b), FieldOp::add); }
AlgebraicNumber operator*(const AlgebraicNumber& a, const AlgebraicNumber& b) { return field_op(a, b, FieldOp::mul); }
AlgebraicNumber operator/(const AlgebraicNumber& a, const AlgebraicNumber& b) { return field_op(a, recip(b), FieldOp::mul); }

DyadicInterval re_zeta(const ComplexBox& zeta, const ComplexBox& z, long prec) {
    if (!modulus(zeta, std::min<long>(prec, 256)).contains(Dyadic(1))) throw PreconditionError("zeta enclosure misses the unit circle");
    return add(mul(zeta.re, z.re, kExact), mul(zeta.im, z.im, kExact), prec);
}

bool is_conjugate(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    return a.minpoly() == b.minpoly();
}

}  // namespace algdeg
