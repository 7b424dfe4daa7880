#include "algdeg/dyadic.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <ostream>

#include <mpfr.h>

#include "algdeg/error.hpp"

namespace algdeg {

namespace {

mpfr_rnd_t to_mpfr_rnd(Round dir) {
    switch (dir) {
        case Round::down: return MPFR_RNDD;
        case Round::up: return MPFR_RNDU;
        case Round::nearest: break;
    }
    return MPFR_RNDN;
}

/// RAII holder for an mpfr_t.
class Mpfr {
public:
    explicit Mpfr(long prec) { mpfr_init2(v_, std::max<long>(prec, MPFR_PREC_MIN)); }
    ~Mpfr() { mpfr_clear(v_); }
    Mpfr(const Mpfr&) = delete;
    Mpfr& operator=(const Mpfr&) = delete;

    mpfr_ptr get() { return v_; }

    /// Exact load: the precision is widened to hold the mantissa.
    static void load_exact(Mpfr& dst, const Dyadic& x) {
        long need = std::max<long>(x.bits(), 2);
        if (mpfr_get_prec(dst.v_) < need) mpfr_set_prec(dst.v_, need);
        mpfr_set_z_2exp(dst.v_, x.mantissa().get_mpz_t(), x.exponent(), MPFR_RNDN);
    }

    Dyadic to_dyadic() const {
        if (mpfr_zero_p(v_)) return Dyadic();
        if (!mpfr_number_p(v_)) throw std::overflow_error("non-finite MPFR result");
        mpz_class m;
        mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), v_);
        return Dyadic(m, static_cast<long>(e));
    }

private:
    mpfr_t v_;
};

mpz_class shifted(const mpz_class& m, long k) {
    mpz_class r;
    if (k >= 0) mpz_mul_2exp(r.get_mpz_t(), m.get_mpz_t(), static_cast<mp_bitcnt_t>(k));
    else mpz_fdiv_q_2exp(r.get_mpz_t(), m.get_mpz_t(), static_cast<mp_bitcnt_t>(-k));
    return r;
}

}  // namespace

void Dyadic::normalize() {
    if (sgn(mant_) == 0) {
        exp_ = 0;
        return;
    }
    mp_bitcnt_t tz = mpz_scan1(mant_.get_mpz_t(), 0);
    if (tz > 0) {
        mpz_tdiv_q_2exp(mant_.get_mpz_t(), mant_.get_mpz_t(), tz);
        exp_ += static_cast<long>(tz);
    }
}

Dyadic Dyadic::from_double(double value) {
    if (!std::isfinite(value)) throw PreconditionError("non-finite double");
    if (value == 0.0) return Dyadic();
    int e = 0;
    double frac = std::frexp(value, &e);
    // frac * 2^53 is an exact integer for IEEE doubles.
    auto m = static_cast<long long>(std::ldexp(frac, 53));
    return Dyadic(mpz_class(static_cast<long>(m)), e - 53);
}

long Dyadic::bits() const {
    if (is_zero()) return 0;
    return static_cast<long>(mpz_sizeinbase(mant_.get_mpz_t(), 2));
}

long Dyadic::msb() const {
    return bits() - 1 + exp_;
}

Dyadic Dyadic::operator-() const {
    Dyadic r = *this;
    r.mant_ = -r.mant_;
    return r;
}

Dyadic Dyadic::mul_2exp(long k) const {
    if (is_zero()) return *this;
    Dyadic r = *this;
    r.exp_ += k;
    return r;
}

Dyadic operator+(const Dyadic& a, const Dyadic& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.exp_ <= b.exp_) return Dyadic(a.mant_ + shifted(b.mant_, b.exp_ - a.exp_), a.exp_);
    return Dyadic(shifted(a.mant_, a.exp_ - b.exp_) + b.mant_, b.exp_);
}

Dyadic operator-(const Dyadic& a, const Dyadic& b) {
    return a + (-b);
}

Dyadic operator*(const Dyadic& a, const Dyadic& b) {
    if (a.is_zero() || b.is_zero()) return Dyadic();
    return Dyadic(a.mant_ * b.mant_, a.exp_ + b.exp_);
}

std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
    int sa = a.sign(), sb = b.sign();
    if (sa != sb) return sa <=> sb;
    if (sa == 0) return std::strong_ordering::equal;
    // Same sign: compare magnitudes by bit length first.
    long ma = a.msb(), mb = b.msb();
    if (ma != mb) return sa > 0 ? (ma <=> mb) : (mb <=> ma);
    Dyadic d = a - b;
    return d.sign() <=> 0;
}

mpq_class Dyadic::to_mpq() const {
    mpq_class q;
    if (exp_ >= 0) {
        q = mpq_class(shifted(mant_, exp_));
    } else {
        mpz_class den;
        mpz_ui_pow_ui(den.get_mpz_t(), 2, static_cast<unsigned long>(-exp_));
        q = mpq_class(mant_, den);
        q.canonicalize();
    }
    return q;
}

double Dyadic::to_double() const {
    if (is_zero()) return 0.0;
    long sh = bits() - 60;
    mpz_class m = sh > 0 ? shifted(mant_, -sh) : mant_;
    return std::ldexp(m.get_d(), static_cast<int>(std::clamp<long>(exp_ + std::max<long>(sh, 0), -100000, 100000)));
}

mpz_class Dyadic::floor() const {
    return shifted(mant_, exp_);
}

mpz_class Dyadic::ceil() const {
    if (exp_ >= 0) return shifted(mant_, exp_);
    mpz_class r;
    mpz_cdiv_q_2exp(r.get_mpz_t(), mant_.get_mpz_t(), static_cast<mp_bitcnt_t>(-exp_));
    return r;
}

std::string Dyadic::to_string() const {
    if (exp_ == 0) return mant_.get_str();
    if (exp_ > 0 && exp_ <= 64) return shifted(mant_, exp_).get_str();
    return mant_.get_str() + "*2^" + std::to_string(exp_);
}

std::string Dyadic::to_decimal(int digits, Round dir) const {
    if (is_zero()) return "0";
    Mpfr v(2);
    Mpfr::load_exact(v, *this);
    mpfr_exp_t e10 = 0;
    char* raw = mpfr_get_str(nullptr, &e10, 10, static_cast<size_t>(digits), v.get(), to_mpfr_rnd(dir));
    std::string s(raw);
    mpfr_free_str(raw);
    bool neg = !s.empty() && s[0] == '-';
    std::string d = neg ? s.substr(1) : s;
    // d holds `digits` digits with value 0.d * 10^e10
    std::string out;
    if (e10 > 0 && e10 <= 30) {
        if (static_cast<size_t>(e10) >= d.size()) {
            out = d + std::string(static_cast<size_t>(e10) - d.size(), '0');
        } else {
            out = d.substr(0, static_cast<size_t>(e10)) + "." + d.substr(static_cast<size_t>(e10));
        }
    } else if (e10 <= 0 && e10 > -6) {
        out = "0." + std::string(static_cast<size_t>(-e10), '0') + d;
    } else {
        out = d.substr(0, 1) + "." + d.substr(1) + "e" + (e10 - 1 >= 0 ? "+" : "") + std::to_string(e10 - 1);
    }
    if (out.find('.') != std::string::npos && out.find('e') == std::string::npos) {
        while (out.back() == '0') out.pop_back();
        if (out.back() == '.') out.pop_back();
    }
    return neg ? "-" + out : out;
}

std::ostream& operator<<(std::ostream& os, const Dyadic& d) {
    return os << d.to_string();
}

Dyadic Dyadic::parse(std::string_view text, Round dir, long prec) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw PreconditionError("empty number");
    auto star = s.find("*2^");
    try {
        if (star != std::string::npos) {
            mpz_class m(s.substr(0, star), 10);
            long e = std::stol(s.substr(star + 3));
            return Dyadic(m, e);
        }
        // decimal: [-]digits[.digits][e[+-]digits]
        std::size_t pos = 0;
        bool neg = false;
        if (s[pos] == '-' || s[pos] == '+') neg = s[pos++] == '-';
        std::string digits;
        long scale10 = 0;
        bool seen_dot = false, any = false;
        for (; pos < s.size(); ++pos) {
            char c = s[pos];
            if (std::isdigit(static_cast<unsigned char>(c))) {
                digits.push_back(c);
                any = true;
                if (seen_dot) --scale10;
            } else if (c == '.' && !seen_dot) {
                seen_dot = true;
            } else {
                break;
            }
        }
        if (!any) throw PreconditionError("malformed number: " + std::string(text));
        if (pos < s.size()) {
            if (s[pos] != 'e' && s[pos] != 'E') throw PreconditionError("malformed number: " + std::string(text));
            std::size_t used = 0;
            long ex = std::stol(s.substr(pos + 1), &used);
            if (pos + 1 + used != s.size()) throw PreconditionError("malformed number: " + std::string(text));
            scale10 += ex;
        }
        mpz_class m(digits, 10);
        if (neg) m = -m;
        mpz_class p10;
        mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(scale10)));
        if (scale10 >= 0) return Dyadic(m * p10);
        mpq_class q(m, p10);
        q.canonicalize();
        mpz_class den = q.get_den();
        if (mpz_popcount(den.get_mpz_t()) == 1) {
            long k = static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 2)) - 1;
            return Dyadic(q.get_num(), -k);
        }
        return from_mpq(q, prec, dir);
    } catch (const std::invalid_argument&) {
        throw PreconditionError("malformed number: " + std::string(text));
    } catch (const std::out_of_range&) {
        throw PreconditionError("number out of range: " + std::string(text));
    }
}

Dyadic round(const Dyadic& x, long prec, Round dir) {
    long b = x.bits();
    if (b <= prec) return x;
    long sh = b - prec;
    mpz_class q;
    const mpz_srcptr m = x.mantissa().get_mpz_t();
    switch (dir) {
        case Round::down: mpz_fdiv_q_2exp(q.get_mpz_t(), m, static_cast<mp_bitcnt_t>(sh)); break;
        case Round::up: mpz_cdiv_q_2exp(q.get_mpz_t(), m, static_cast<mp_bitcnt_t>(sh)); break;
        case Round::nearest: {
            mpz_fdiv_q_2exp(q.get_mpz_t(), m, static_cast<mp_bitcnt_t>(sh - 1));
            q += 1;
            mpz_fdiv_q_2exp(q.get_mpz_t(), q.get_mpz_t(), 1);
            break;
        }
    }
    return Dyadic(q, x.exponent() + sh);
}

Dyadic round_fixed(const Dyadic& x, long frac_bits, Round dir) {
    if (x.exponent() >= -frac_bits) return x;
    long keep = x.bits() - (-frac_bits - x.exponent());
    if (keep <= 0) {
        // |x| < 2^-frac_bits
        const Dyadic ulp = Dyadic::pow2(-frac_bits);
        switch (dir) {
            case Round::down: return x.sign() < 0 ? -ulp : Dyadic();
            case Round::up: return x.sign() > 0 ? ulp : Dyadic();
            case Round::nearest: return Dyadic();
        }
    }
    return round(x, keep, dir);
}

Dyadic from_mpq(const mpq_class& q, long prec, Round dir) {
    return div(Dyadic(q.get_num()), Dyadic(q.get_den()), prec, dir);
}

Dyadic div(const Dyadic& a, const Dyadic& b, long prec, Round dir) {
    if (b.is_zero()) throw PreconditionError("division by zero");
    if (a.is_zero()) return Dyadic();
    long s = std::max<long>(0, prec + 2 + b.bits() - a.bits());
    mpz_class num = shifted(a.mantissa(), s);
    mpz_class den = b.mantissa();
    if (den < 0) {
        den = -den;
        num = -num;
    }
    mpz_class q;
    switch (dir) {
        case Round::down: mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t()); break;
        case Round::up: mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t()); break;
        case Round::nearest: mpz_tdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t()); break;
    }
    // q carries at least prec+1 bits, so a second directed rounding is safe.
    return round(Dyadic(q, a.exponent() - b.exponent() - s), prec, dir);
}

Dyadic sqrt(const Dyadic& x, long prec, Round dir) {
    if (x.sign() < 0) throw PreconditionError("sqrt of negative number");
    if (x.is_zero()) return x;
    long e = x.exponent();
    long want = 2 * prec + 4;
    long s = std::max<long>(0, want - x.bits());
    if ((e - s) % 2 != 0) ++s;
    mpz_class m = shifted(x.mantissa(), s);
    mpz_class r, rem;
    mpz_sqrtrem(r.get_mpz_t(), rem.get_mpz_t(), m.get_mpz_t());
    if (dir == Round::up && sgn(rem) != 0) r += 1;
    return round(Dyadic(r, (e - s) / 2), prec, dir);
}

Dyadic log2(const Dyadic& x, long prec, Round dir) {
    if (x.sign() <= 0) throw PreconditionError("log2 of non-positive number");
    Mpfr in(2), out(prec);
    Mpfr::load_exact(in, x);
    mpfr_log2(out.get(), in.get(), to_mpfr_rnd(dir));
    return out.to_dyadic();
}

Dyadic log2(const mpz_class& x, long prec, Round dir) {
    return log2(Dyadic(x), prec, dir);
}

Dyadic exp2(const Dyadic& x, long prec, Round dir) {
    Mpfr in(2), out(prec);
    Mpfr::load_exact(in, x);
    mpfr_exp2(out.get(), in.get(), to_mpfr_rnd(dir));
    return out.to_dyadic();
}

Dyadic pow(const Dyadic& x, const Dyadic& y, long prec, Round dir) {
    if (x.sign() <= 0) throw PreconditionError("pow of non-positive base");
    Mpfr bx(2), by(2), out(prec);
    Mpfr::load_exact(bx, x);
    Mpfr::load_exact(by, y);
    mpfr_pow(out.get(), bx.get(), by.get(), to_mpfr_rnd(dir));
    return out.to_dyadic();
}

}  // namespace algdeg
