#include "algdeg/intpoly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "algdeg/error.hpp"

namespace algdeg {

IntPolynomial::IntPolynomial(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) {
    trim();
}

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
    c_.reserve(coeffs.size());
    for (long c : coeffs) c_.emplace_back(c);
    trim();
}

IntPolynomial IntPolynomial::constant(const mpz_class& c) {
    return IntPolynomial(std::vector<mpz_class>{c});
}

IntPolynomial IntPolynomial::monomial(const mpz_class& c, int k) {
    std::vector<mpz_class> v(static_cast<std::size_t>(k) + 1);
    v.back() = c;
    return IntPolynomial(std::move(v));
}

void IntPolynomial::trim() {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

mpz_class IntPolynomial::coeff(int i) const {
    if (i < 0 || i > degree()) return 0;
    return c_[static_cast<std::size_t>(i)];
}

const mpz_class& IntPolynomial::lead() const {
    if (c_.empty()) throw PreconditionError("leading coefficient of the zero polynomial");
    return c_.back();
}

IntPolynomial IntPolynomial::operator-() const {
    IntPolynomial r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<mpz_class> r(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
    return IntPolynomial(std::move(r));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
    return a + (-b);
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<mpz_class> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (sgn(a.c_[i]) == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return IntPolynomial(std::move(r));
}

IntPolynomial operator*(const mpz_class& s, const IntPolynomial& p) {
    IntPolynomial r = p;
    for (auto& c : r.c_) c *= s;
    r.trim();
    return r;
}

IntPolynomial IntPolynomial::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<mpz_class> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<unsigned long>(i);
    return IntPolynomial(std::move(r));
}

mpz_class IntPolynomial::content() const {
    mpz_class g = 0;
    for (const auto& c : c_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPolynomial IntPolynomial::divide_coeffs(const mpz_class& d) const {
    IntPolynomial r = *this;
    for (auto& c : r.c_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
    return r;
}

IntPolynomial IntPolynomial::primitive_part() const {
    if (is_zero()) return {};
    mpz_class g = content();
    if (sgn(lead()) < 0) g = -g;
    return divide_coeffs(g);
}

IntPolynomial IntPolynomial::reversed() const {
    std::vector<mpz_class> r(c_.rbegin(), c_.rend());
    return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::negate_variable() const {
    IntPolynomial r = *this;
    for (std::size_t i = 1; i < r.c_.size(); i += 2) r.c_[i] = -r.c_[i];
    return r;
}

IntPolynomial IntPolynomial::taylor_shift(const mpz_class& s) const {
    std::vector<mpz_class> a = c_;
    const std::size_t n = a.size();
    if (n == 0 || s == 0) return *this;
    for (std::size_t i = 0; i + 1 < n; ++i)
        for (std::size_t j = n - 1; j > i; --j) a[j - 1] += s * a[j];
    return IntPolynomial(std::move(a));
}

mpz_class IntPolynomial::eval(const mpz_class& x) const {
    mpz_class v = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * x + *it;
    return v;
}

mpq_class IntPolynomial::eval(const mpq_class& x) const {
    // Homogenised Horner over the integers: den^deg * p(num/den).
    if (c_.empty()) return 0;
    const mpz_class& num = x.get_num();
    const mpz_class& den = x.get_den();
    mpz_class v = c_.back(), dpow = 1;
    for (int i = degree() - 1; i >= 0; --i) {
        dpow *= den;
        v = v * num + c_[static_cast<std::size_t>(i)] * dpow;
    }
    mpq_class r(v, dpow);
    r.canonicalize();
    return r;
}

Dyadic IntPolynomial::eval(const Dyadic& x) const {
    if (c_.empty()) return {};
    if (x.exponent() >= 0) return Dyadic(eval(x.floor()));
    // x = m / 2^s; 2^(s*deg) p(x) = sum c_i m^i 2^(s(deg-i))
    const long s = -x.exponent();
    const mpz_class& m = x.mantissa();
    mpz_class v = c_.back();
    for (int i = degree() - 1; i >= 0; --i) {
        mpz_class t;
        mpz_mul_2exp(t.get_mpz_t(), c_[static_cast<std::size_t>(i)].get_mpz_t(),
                     static_cast<mp_bitcnt_t>(s) * static_cast<mp_bitcnt_t>(degree() - i));
        v = v * m + t;
    }
    return Dyadic(v, -s * degree());
}

int IntPolynomial::sign_at(const Dyadic& x) const {
    return eval(x).sign();
}

std::string IntPolynomial::to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const mpz_class& c = c_[static_cast<std::size_t>(i)];
        if (sgn(c) == 0) continue;
        mpz_class a = abs(c);
        if (first) {
            if (sgn(c) < 0) os << "-";
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0 || a != 1) {
            os << a.get_str();
            if (i > 0) os << "*";
        }
        if (i >= 1) os << "x";
        if (i >= 2) os << "^" << i;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntPolynomial& p) {
    return os << p.to_string();
}

IntPolynomial ring_op(const IntPolynomial& p, const IntPolynomial& q, RingOp op) {
    switch (op) {
        case RingOp::add: return p + q;
        case RingOp::sub: return p - q;
        case RingOp::mul: return p * q;
    }
    return {};
}

IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
    if (b.is_zero()) throw PreconditionError("pseudo-remainder by zero");
    if (a.degree() < b.degree()) return a;
    std::vector<mpz_class> r = a.coeffs();
    const int db = b.degree();
    const mpz_class& lb = b.lead();
    int e = a.degree() - db + 1;
    for (int k = a.degree(); k >= db; --k) {
        mpz_class t = r[static_cast<std::size_t>(k)];
        for (auto& c : r) c *= lb;
        --e;
        if (sgn(t) != 0)
            for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(k - db + j)] -= t * b.coeffs()[static_cast<std::size_t>(j)];
        r.pop_back();
    }
    mpz_class f;
    mpz_pow_ui(f.get_mpz_t(), lb.get_mpz_t(), static_cast<unsigned long>(e));
    for (auto& c : r) c *= f;
    return IntPolynomial(std::move(r));
}

std::optional<IntPolynomial> divide_exact(const IntPolynomial& a, const IntPolynomial& b) {
    if (b.is_zero()) throw PreconditionError("division by the zero polynomial");
    if (a.is_zero()) return IntPolynomial();
    if (a.degree() < b.degree()) return std::nullopt;
    std::vector<mpz_class> r = a.coeffs();
    std::vector<mpz_class> q(static_cast<std::size_t>(a.degree() - b.degree() + 1));
    const int db = b.degree();
    const mpz_class& lb = b.lead();
    for (int k = a.degree(); k >= db; --k) {
        mpz_class& top = r[static_cast<std::size_t>(k)];
        if (sgn(top) == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t())) return std::nullopt;
        mpz_class t;
        mpz_divexact(t.get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
        q[static_cast<std::size_t>(k - db)] = t;
        for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(k - db + j)] -= t * b.coeffs()[static_cast<std::size_t>(j)];
    }
    for (const auto& c : r)
        if (sgn(c) != 0) return std::nullopt;
    return IntPolynomial(std::move(q));
}

IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero()) return b.primitive_part();
    if (b.is_zero()) return a.primitive_part();
    mpz_class cg;
    mpz_gcd(cg.get_mpz_t(), a.content().get_mpz_t(), b.content().get_mpz_t());
    IntPolynomial u = a.primitive_part(), v = b.primitive_part();
    if (u.degree() < v.degree()) std::swap(u, v);
    while (!v.is_zero()) {
        IntPolynomial r = pseudo_remainder(u, v);
        u = std::move(v);
        v = r.primitive_part();
    }
    return cg * u.primitive_part();
}

mpz_class resultant(const IntPolynomial& p, const IntPolynomial& q) {
    if (p.is_zero() || q.is_zero()) throw PreconditionError("resultant with the zero polynomial");
    IntPolynomial A = p, B = q;
    mpz_class s = 1;
    if (A.degree() < B.degree()) {
        std::swap(A, B);
        if ((A.degree() % 2 == 1) && (B.degree() % 2 == 1)) s = -1;
    }
    mpz_class a = A.content(), b = B.content();
    A = A.divide_coeffs(a);
    B = B.divide_coeffs(b);
    mpz_class t, tb;
    mpz_pow_ui(t.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(B.degree()));
    mpz_pow_ui(tb.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(A.degree()));
    t *= tb;
    if (B.degree() == 0) return (B.lead() < 0 && A.degree() % 2 == 1) ? mpz_class(-s * t) : mpz_class(s * t);

    mpz_class g = 1, h = 1;
    for (;;) {
        const int delta = A.degree() - B.degree();
        if ((A.degree() % 2 == 1) && (B.degree() % 2 == 1)) s = -s;
        IntPolynomial R = pseudo_remainder(A, B);
        A = B;
        mpz_class hd;
        mpz_pow_ui(hd.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta));
        if (R.is_zero()) return 0;
        B = R.divide_coeffs(g * hd);
        g = A.lead();
        // h <- h^(1-delta) * g^delta
        if (delta == 0) {
            // unchanged
        } else {
            mpz_class gd, hd1;
            mpz_pow_ui(gd.get_mpz_t(), g.get_mpz_t(), static_cast<unsigned long>(delta));
            mpz_pow_ui(hd1.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta - 1));
            mpz_divexact(h.get_mpz_t(), gd.get_mpz_t(), hd1.get_mpz_t());
        }
        if (B.degree() <= 0) break;
    }
    // h <- h^(1-deg A) * lc(B)^deg A
    const int da = A.degree();
    mpz_class lbp, hp;
    mpz_pow_ui(lbp.get_mpz_t(), B.lead().get_mpz_t(), static_cast<unsigned long>(da));
    mpz_pow_ui(hp.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(da - 1));
    mpz_divexact(h.get_mpz_t(), lbp.get_mpz_t(), hp.get_mpz_t());
    return s * t * h;
}

IntPolynomial squarefree_part(const IntPolynomial& p) {
    if (p.is_zero()) throw PreconditionError("squarefree part of the zero polynomial");
    IntPolynomial pp = p.primitive_part();
    if (pp.degree() <= 0) return pp;
    IntPolynomial g = gcd(pp, pp.derivative());
    auto q = divide_exact(pp, g);
    return q->primitive_part();
}

std::vector<std::pair<IntPolynomial, int>> squarefree_decomposition(const IntPolynomial& p) {
    if (p.is_zero()) throw PreconditionError("squarefree decomposition of the zero polynomial");
    std::vector<std::pair<IntPolynomial, int>> out;
    IntPolynomial f = p.primitive_part();
    if (f.degree() <= 0) return out;
    IntPolynomial a = gcd(f, f.derivative());
    IntPolynomial b = *divide_exact(f, a);
    IntPolynomial c = *divide_exact(f.derivative(), a);
    IntPolynomial d = c - b.derivative();
    int i = 1;
    while (b.degree() > 0) {
        IntPolynomial g = gcd(b, d);
        if (g.degree() > 0) out.emplace_back(g, i);
        IntPolynomial nb = *divide_exact(b, g);
        c = *divide_exact(d, g);
        b = nb;
        d = c - b.derivative();
        ++i;
    }
    return out;
}

ComplexBox eval_on_box(const IntPolynomial& p, const ComplexBox& z, long prec) {
    if (p.is_zero()) return ComplexBox::point(Dyadic());
    ComplexBox v = ComplexBox::point(Dyadic(p.lead()));
    for (int i = p.degree() - 1; i >= 0; --i) {
        v = mul(v, z, prec);
        v = add(v, ComplexBox::point(Dyadic(p.coeffs()[static_cast<std::size_t>(i)])), prec);
    }
    return v;
}

namespace {

std::vector<IntPolynomial> sturm_chain(const IntPolynomial& p) {
    std::vector<IntPolynomial> seq{p, p.derivative()};
    while (!seq.back().is_zero() && seq.back().degree() > 0) {
        const IntPolynomial& a = seq[seq.size() - 2];
        const IntPolynomial& b = seq.back();
        // prem multiplies by lc(b)^k; keep the sign of the true remainder.
        IntPolynomial r = pseudo_remainder(a, b);
        int k = a.degree() - b.degree() + 1;
        bool flip = sgn(b.lead()) < 0 && (k % 2 == 1);
        r = flip ? r : -r;
        if (r.is_zero()) break;
        mpz_class c = r.content();
        seq.push_back(r.divide_coeffs(c));
    }
    return seq;
}

int sign_variations(const std::vector<IntPolynomial>& seq, const Dyadic& x) {
    int v = 0, last = 0;
    for (const auto& q : seq) {
        int s = q.sign_at(x);
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

}  // namespace

int count_real_roots(const IntPolynomial& p, const Dyadic& lo, const Dyadic& hi) {
    if (p.degree() <= 0) return 0;
    IntPolynomial sf = squarefree_part(p);
    auto seq = sturm_chain(sf);
    return sign_variations(seq, lo) - sign_variations(seq, hi);
}

}  // namespace algdeg
