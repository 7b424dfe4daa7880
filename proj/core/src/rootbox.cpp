#include "algdeg/rootbox.hpp"

#include <algorithm>
#include <climits>
#include <cmath>

#include "algdeg/error.hpp"

namespace algdeg {

namespace {

constexpr long kNegInf = LONG_MIN / 4;

/// Complex floating-point value with dyadic parts rounded to `prec` bits.
struct Cf {
    Dyadic re, im;
};

long lg(const Dyadic& x) { return x.is_zero() ? kNegInf : x.msb(); }
long lg(const Cf& z) { return std::max(lg(z.re), lg(z.im)); }

Dyadic rn(const Dyadic& x, long prec) { return round(x, prec, Round::nearest); }

Cf cadd(const Cf& a, const Cf& b, long prec) { return {rn(a.re + b.re, prec), rn(a.im + b.im, prec)}; }
Cf csub(const Cf& a, const Cf& b, long prec) { return {rn(a.re - b.re, prec), rn(a.im - b.im, prec)}; }
Cf cmul(const Cf& a, const Cf& b, long prec) {
    return {rn(a.re * b.re - a.im * b.im, prec), rn(a.re * b.im + a.im * b.re, prec)};
}
bool czero(const Cf& a) { return a.re.is_zero() && a.im.is_zero(); }
Cf cdiv(const Cf& a, const Cf& b, long prec) {
    Dyadic den = rn(b.re * b.re + b.im * b.im, prec + 4);
    return {div(a.re * b.re + a.im * b.im, den, prec, Round::nearest),
            div(a.im * b.re - a.re * b.im, den, prec, Round::nearest)};
}

/// p(z) and p'(z) together by Horner.
void horner(const IntPolynomial& p, const Cf& z, long prec, Cf& v, Cf& dv) {
    v = {Dyadic(p.lead()), Dyadic()};
    dv = {Dyadic(), Dyadic()};
    for (int i = p.degree() - 1; i >= 0; --i) {
        dv = cadd(cmul(dv, z, prec), v, prec);
        v = cadd(cmul(v, z, prec), {Dyadic(p.coeffs()[static_cast<std::size_t>(i)]), Dyadic()}, prec);
    }
}

/// Center and radius (as a log2) of a disk holding all roots: the dyadic
/// approximation of the root mean and a Fujiwara bound for the shifted p.
void root_disk(const IntPolynomial& p, long prec, Dyadic& center, long& lg_radius) {
    const int n = p.degree();
    mpq_class mean(-p.coeffs()[static_cast<std::size_t>(n - 1)], p.lead() * n);
    mean.canonicalize();
    center = from_mpq(mean, prec, Round::nearest);
    std::vector<Dyadic> q(p.coeffs().begin(), p.coeffs().end());
    for (int i = 0; i < n; ++i)
        for (int j = n - 1; j >= i; --j) q[j] += center * q[j + 1];
    long e = kNegInf;
    const long top = q[n].msb();
    for (int k = 1; k <= n; ++k) {
        const Dyadic& c = q[n - k];
        if (c.is_zero()) continue;
        long num = c.msb() + 1 - top;
        long v = num >= 0 ? (num + k - 1) / k : -((-num) / k);
        e = std::max(e, v);
    }
    if (e == kNegInf) e = 0;  // p = lead * (x - center)^n
    lg_radius = e + 1;
}

std::vector<Cf> aberth(const IntPolynomial& p, long prec, long& lg_radius) {
    const int n = p.degree();
    Dyadic c;
    root_disk(p, prec, c, lg_radius);
    std::vector<Cf> z(static_cast<std::size_t>(n));
    const double two_pi = 6.283185307179586;
    for (int k = 0; k < n; ++k) {
        double t = two_pi * k / n + 0.7;
        z[k] = {rn(c + Dyadic::from_double(std::cos(t)).mul_2exp(lg_radius), prec),
                rn(Dyadic::from_double(std::sin(t)).mul_2exp(lg_radius), prec)};
    }
    const int cap = 200 + 8 * n;
    for (int it = 0; it < cap; ++it) {
        bool done = true;
        for (int k = 0; k < n; ++k) {
            Cf v, dv;
            horner(p, z[k], prec, v, dv);
            if (czero(v)) continue;
            if (czero(dv)) {
                z[k].re = rn(z[k].re + Dyadic::pow2(lg(z[k]) - prec / 2), prec);
                done = false;
                continue;
            }
            Cf N = cdiv(v, dv, prec);
            Cf s{Dyadic(), Dyadic()};
            for (int j = 0; j < n; ++j) {
                if (j == k) continue;
                Cf d = csub(z[k], z[j], prec);
                if (czero(d)) continue;
                s = cadd(s, cdiv({Dyadic(1), Dyadic()}, d, prec), prec);
            }
            Cf den = csub({Dyadic(1), Dyadic()}, cmul(N, s, prec), prec);
            Cf w = czero(den) ? N : cdiv(N, den, prec);
            z[k] = csub(z[k], w, prec);
            if (lg(w) >= std::max(lg(z[k]) - prec + 8, lg_radius - 2 * prec)) done = false;
        }
        if (done) break;
    }
    return z;
}

Dyadic im_abs(const Cf& z) { return z.im.abs(); }

ComplexBox linear_root_box(const IntPolynomial& p, const Dyadic& target) {
    mpq_class r(-p.coeff(0), p.coeff(1));
    r.canonicalize();
    long prec = 64;
    for (;;) {
        Dyadic lo = from_mpq(r, prec, Round::down), hi = from_mpq(r, prec, Round::up);
        if (hi - lo <= target) return {{lo, hi}, DyadicInterval::point(Dyadic())};
        prec *= 2;
    }
}

bool is_real_box(const ComplexBox& b) { return b.im.is_point() && b.im.lo.is_zero(); }

/// log2 of the largest coordinate magnitude in the box, at least lg(width).
long box_scale(const ComplexBox& b) {
    long s = std::max({lg(b.re.mag()), lg(b.im.mag()), lg(b.width())});
    return s == kNegInf ? 0 : s;
}

std::optional<std::vector<ComplexBox>> try_isolate(const IntPolynomial& p, long prec) {
    const int n = p.degree();
    const IntPolynomial dp = p.derivative();
    long lg_radius = 0;
    std::vector<Cf> zs = aberth(p, prec, lg_radius);
    std::vector<ComplexBox> real, upper;
    for (const Cf& z : zs) {
        // a real dyadic root shows up as an exact zero after mild rounding
        if (lg(z.im) < lg(z.re) - prec / 2 || z.im.is_zero()) {
            Dyadic c = round(z.re, std::max<long>(prec / 2, 8), Round::nearest);
            if (p.sign_at(c) == 0) {
                real.push_back(ComplexBox::point(c));
                continue;
            }
        }
        // Newton step size, inflated by the rounding error of the evaluation
        ComplexBox zb = ComplexBox::point(z.re, z.im);
        ComplexBox fz = eval_on_box(p, zb, prec), dz = eval_on_box(dp, zb, prec);
        long lg_f = std::max(lg(fz.re.mag()), lg(fz.im.mag()));
        long lg_d = std::max(lg(dz.re.mig()), lg(dz.im.mig()));
        if (lg_d == kNegInf) continue;
        long lr = std::max({lg_f - lg_d + 2, lg(z) - prec + 6, lg_radius - 2 * prec});
        for (int attempt = 0; attempt < 6; ++attempt, lr += 2) {
            Dyadic r = Dyadic::pow2(lr);
            if (im_abs(z) <= r.mul_2exp(1)) {
                ComplexBox x = ComplexBox::around(z.re, Dyadic(), r);
                auto k = krawczyk(p, dp, x, prec);
                if (k && x.interior_contains(*k)) {
                    real.push_back({k->re, DyadicInterval::point(Dyadic())});
                    break;
                }
            }
            if (z.im.sign() > 0 && z.im > r) {
                ComplexBox x = ComplexBox::around(z.re, z.im, r);
                auto k = krawczyk(p, dp, x, prec);
                if (k && x.interior_contains(*k) && k->im.lo.sign() > 0) {
                    upper.push_back(*k);
                    break;
                }
            }
        }
    }
    if (static_cast<int>(real.size() + 2 * upper.size()) != n) return std::nullopt;
    std::vector<ComplexBox> all = real;
    all.insert(all.end(), upper.begin(), upper.end());
    for (const auto& u : upper) all.push_back(u.conj());
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = i + 1; j < all.size(); ++j)
            if (all[i].intersects(all[j])) return std::nullopt;
    return all;
}

void sort_boxes(std::vector<ComplexBox>& v) {
    std::sort(v.begin(), v.end(), [](const ComplexBox& a, const ComplexBox& b) {
        if (a.re.lo != b.re.lo) return a.re.lo < b.re.lo;
        return a.im.lo < b.im.lo;
    });
}

void check_squarefree(const IntPolynomial& p) {
    if (p.degree() < 1) throw PreconditionError("root isolation needs degree >= 1");
    if (gcd(p, p.derivative()).degree() > 0) throw PreconditionError("root isolation needs a squarefree polynomial");
}

/// Roots of p in the closed box x: certified via isolation at shrinking
/// widths until every root box is either inside x or disjoint from it.
std::vector<ComplexBox> roots_in_box(const IntPolynomial& sq, const ComplexBox& x, const Dyadic& target) {
    if (x.is_point()) {
        ComplexBox v = eval_on_box(sq, x, kExact);
        if (v.contains_zero()) return {x};
        return {};
    }
    Dyadic w = min(target, x.width().mul_2exp(-2));
    if (w.is_zero()) w = target;
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::vector<ComplexBox> inside;
        bool ambiguous = false;
        for (const auto& b : isolate_all_roots(sq, w)) {
            if (x.contains(b))
                inside.push_back(b);
            else if (x.intersects(b))
                ambiguous = true;
        }
        if (!ambiguous) return inside;
        w = w.mul_2exp(-8);
    }
    throw Undetermined("could not decide which roots lie in the given box");
}

}  // namespace

std::optional<ComplexBox> krawczyk(const IntPolynomial& p, const IntPolynomial& dp, const ComplexBox& x, long prec) {
    const bool real = is_real_box(x);
    ComplexBox m = ComplexBox::point(x.re.mid(), real ? Dyadic() : x.im.mid());
    ComplexBox fm = eval_on_box(p, m, prec);
    ComplexBox dm = eval_on_box(dp, m, prec);
    ComplexBox c = ComplexBox::point(dm.re.mid(), dm.im.mid());
    if (c.contains_zero()) return std::nullopt;
    ComplexBox yb = recip(c, prec);
    ComplexBox y = ComplexBox::point(round(yb.re.mid(), prec, Round::nearest), round(yb.im.mid(), prec, Round::nearest));
    ComplexBox fx = eval_on_box(dp, x, prec);
    ComplexBox a = sub(ComplexBox::point(Dyadic(1)), mul(y, fx, prec), prec);
    ComplexBox k = add(sub(m, mul(y, fm, prec), prec), mul(a, sub(x, m, prec), prec), prec);
    if (real) k.im = DyadicInterval::point(Dyadic());
    return k;
}

std::vector<ComplexBox> isolate_all_roots(const IntPolynomial& p, const Dyadic& target_width) {
    if (target_width.sign() <= 0) throw PreconditionError("target width must be positive");
    check_squarefree(p);
    if (p.degree() == 1) return {linear_root_box(p, target_width)};
    for (long prec = 64;; prec *= 2) {
        if (prec > (1L << 24)) throw Undetermined("root isolation did not converge");
        auto boxes = try_isolate(p, prec);
        if (!boxes) continue;
        std::vector<ComplexBox> out;
        std::vector<ComplexBox> upper;
        for (const auto& b : *boxes) {
            if (b.im.lo.sign() < 0) continue;  // mirrors of upper boxes
            ComplexBox r = refine_isolated(p, b, target_width);
            out.push_back(r);
            if (!is_real_box(r)) out.push_back(r.conj());
        }
        sort_boxes(out);
        return out;
    }
}

ComplexBox refine_isolated(const IntPolynomial& p, const ComplexBox& box, const Dyadic& target_width) {
    if (target_width.sign() <= 0) throw PreconditionError("target width must be positive");
    if (box.is_point() || box.width() <= target_width) return box;
    if (p.degree() == 1) {
        ComplexBox b = linear_root_box(p, target_width);
        if (b.re.is_point()) return b;
        return {intersect(b.re, box.re), b.im};
    }
    const IntPolynomial dp = p.derivative();
    const bool real = is_real_box(box);
    ComplexBox x = box;
    int sign_lo = 0;
    if (real) {
        sign_lo = p.sign_at(x.re.lo);
        if (sign_lo == 0) return ComplexBox::point(x.re.lo);
        if (p.sign_at(x.re.hi) == 0) return ComplexBox::point(x.re.hi);
    }
    const long scale = box_scale(box);
    const long need = scale - lg(target_width) + 64;
    long boost = 0;
    int stalls = 0;
    while (x.width() > target_width) {
        const long w = lg(x.width());
        long prec = std::max<long>(64, std::min(2 * (scale - w) + 64, need) + boost);
        if (real) {
            Dyadic m = x.re.mid();
            int s = p.sign_at(m);
            if (s == 0) return ComplexBox::point(m);
            ComplexBox next = x;
            auto k = krawczyk(p, dp, x, prec);
            if (k && k->re.intersects(x.re)) next.re = intersect(k->re, x.re);
            if (next.width() > x.width().mul_2exp(-1)) {
                // poor contraction: bisect on the exact sign
                next.re = (s == sign_lo) ? DyadicInterval(m, x.re.hi) : DyadicInterval(x.re.lo, m);
            }
            x = next;
            continue;
        }
        auto k = krawczyk(p, dp, x, prec);
        if (k && k->intersects(x)) {
            ComplexBox next = intersect(*k, x);
            if (next.width() <= x.width().mul_2exp(-1)) {
                x = next;
                stalls = 0;
                continue;
            }
            x = next;
        }
        boost = boost == 0 ? 64 : 2 * boost;
        if (++stalls > 6) {
            auto found = roots_in_box(p, x, target_width);
            if (found.size() != 1) throw Undetermined("lost track of an isolated root during refinement");
            return found.front();
        }
    }
    return x;
}

int count_roots_in_box(const IntPolynomial& p, const ComplexBox& box) {
    if (p.is_zero()) throw PreconditionError("root count of the zero polynomial");
    if (p.degree() < 1) return 0;
    IntPolynomial sq = squarefree_part(p);
    if (is_real_box(box)) {
        int c = count_real_roots(sq, box.re.lo, box.re.hi);
        return c + (sq.sign_at(box.re.lo) == 0 ? 1 : 0);
    }
    Dyadic w = box.width().is_zero() ? Dyadic(1) : box.width();
    return static_cast<int>(roots_in_box(sq, box, w).size());
}

ComplexBox refine_root(const IntPolynomial& p, const ComplexBox& box, const Dyadic& target_width) {
    if (target_width.sign() <= 0) throw PreconditionError("target width must be positive");
    if (p.degree() < 1) throw PreconditionError("refine_root needs degree >= 1");
    IntPolynomial sq = squarefree_part(p);
    if (is_real_box(box)) {
        int c = count_real_roots(sq, box.re.lo, box.re.hi) + (sq.sign_at(box.re.lo) == 0 ? 1 : 0);
        if (c != 1) throw PreconditionError("box does not isolate exactly one root (found " + std::to_string(c) + ")");
        return refine_isolated(sq, box, target_width);
    }
    auto found = roots_in_box(sq, box, target_width);
    if (found.size() != 1)
        throw PreconditionError("box does not isolate exactly one root (found " + std::to_string(found.size()) + ")");
    return found.front();
}

}  // namespace algdeg
