#include "algdeg/factor.hpp"

#include <algorithm>
#include <random>

#include "algdeg/error.hpp"

namespace algdeg {

namespace {

// ---------------------------------------------------------------------------
// Polynomials over F_p, p an odd prime below 2^31.

using u64 = std::uint64_t;
using Fp = std::vector<u64>;

struct Field {
    u64 p;

    u64 add(u64 a, u64 b) const {
        u64 s = a + b;
        return s >= p ? s - p : s;
    }
    u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + p - b; }
    u64 mul(u64 a, u64 b) const { return a * b % p; }
    u64 pow(u64 a, u64 e) const {
        u64 r = 1;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    u64 inv(u64 a) const { return pow(a, p - 2); }

    Fp reduce(const IntPolynomial& f) const {
        Fp r(f.coeffs().size());
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = mpz_fdiv_ui(f.coeffs()[i].get_mpz_t(), p);
        trim(r);
        return r;
    }

    static void trim(Fp& a) {
        while (!a.empty() && a.back() == 0) a.pop_back();
    }
    static int deg(const Fp& a) { return static_cast<int>(a.size()) - 1; }

    Fp add(const Fp& a, const Fp& b) const {
        Fp r(std::max(a.size(), b.size()), 0);
        for (std::size_t i = 0; i < r.size(); ++i)
            r[i] = add(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
        trim(r);
        return r;
    }
    Fp sub(const Fp& a, const Fp& b) const {
        Fp r(std::max(a.size(), b.size()), 0);
        for (std::size_t i = 0; i < r.size(); ++i)
            r[i] = sub(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
        trim(r);
        return r;
    }
    Fp mul(const Fp& a, const Fp& b) const {
        if (a.empty() || b.empty()) return {};
        Fp r(a.size() + b.size() - 1, 0);
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] == 0) continue;
            for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = add(r[i + j], mul(a[i], b[j]));
        }
        trim(r);
        return r;
    }
    Fp scale(const Fp& a, u64 s) const {
        Fp r(a);
        for (auto& c : r) c = mul(c, s);
        trim(r);
        return r;
    }
    void divrem(const Fp& a, const Fp& b, Fp& q, Fp& r) const {
        r = a;
        int db = deg(b);
        if (deg(a) < db) {
            q.clear();
            return;
        }
        q.assign(a.size() - b.size() + 1, 0);
        u64 li = inv(b.back());
        for (int k = deg(r); k >= db; --k) {
            u64 c = mul(r[k], li);
            q[k - db] = c;
            if (c == 0) continue;
            for (int j = 0; j <= db; ++j) r[k - db + j] = sub(r[k - db + j], mul(c, b[j]));
        }
        r.resize(db);
        trim(r);
        trim(q);
    }
    Fp mod(const Fp& a, const Fp& b) const {
        Fp q, r;
        divrem(a, b, q, r);
        return r;
    }
    Fp quo(const Fp& a, const Fp& b) const {
        Fp q, r;
        divrem(a, b, q, r);
        return q;
    }
    Fp monic(const Fp& a) const { return a.empty() ? a : scale(a, inv(a.back())); }
    Fp gcd(Fp a, Fp b) const {
        while (!b.empty()) {
            Fp r = mod(a, b);
            a = std::move(b);
            b = std::move(r);
        }
        return monic(a);
    }
    /// s*a + t*b = gcd(a, b), gcd monic.
    Fp xgcd(Fp a, Fp b, Fp& s, Fp& t) const {
        Fp s0{1}, s1, t0, t1{1};
        while (!b.empty()) {
            Fp q, r;
            divrem(a, b, q, r);
            a = std::move(b);
            b = std::move(r);
            Fp s2 = sub(s0, mul(q, s1)), t2 = sub(t0, mul(q, t1));
            s0 = std::move(s1);
            s1 = std::move(s2);
            t0 = std::move(t1);
            t1 = std::move(t2);
        }
        u64 li = inv(a.back());
        s = scale(s0, li);
        t = scale(t0, li);
        return scale(a, li);
    }
    Fp deriv(const Fp& a) const {
        if (a.size() <= 1) return {};
        Fp r(a.size() - 1);
        for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = mul(a[i], i % p);
        trim(r);
        return r;
    }
    Fp powmod(Fp base, const mpz_class& e, const Fp& m) const {
        Fp r{1};
        base = mod(base, m);
        std::size_t nb = mpz_sizeinbase(e.get_mpz_t(), 2);
        for (std::size_t i = nb; i-- > 0;) {
            r = mod(mul(r, r), m);
            if (mpz_tstbit(e.get_mpz_t(), i)) r = mod(mul(r, base), m);
        }
        return r;
    }
};

struct DdfPart {
    Fp poly;  // product of all irreducible factors of degree d
    int d;
};

std::vector<DdfPart> distinct_degree(const Field& F, Fp f) {
    std::vector<DdfPart> out;
    Fp x{0, 1};
    Fp h = F.mod(x, f);
    mpz_class p(static_cast<unsigned long>(F.p));
    for (int i = 1; Field::deg(f) >= 2 * i; ++i) {
        h = F.powmod(h, p, f);
        Fp g = F.gcd(F.sub(h, x), f);
        if (Field::deg(g) > 0) {
            out.push_back({g, i});
            f = F.quo(f, g);
            h = F.mod(h, f);
        }
    }
    if (Field::deg(f) > 0) out.push_back({F.monic(f), Field::deg(f)});
    return out;
}

void equal_degree(const Field& F, const Fp& f, int d, std::mt19937_64& rng, std::vector<Fp>& out) {
    int n = Field::deg(f);
    if (n == d) {
        out.push_back(F.monic(f));
        return;
    }
    mpz_class e;
    mpz_ui_pow_ui(e.get_mpz_t(), F.p, d);
    e = (e - 1) / 2;
    std::uniform_int_distribution<u64> coin(0, F.p - 1);
    for (;;) {
        Fp a(n);
        for (auto& c : a) c = coin(rng);
        Field::trim(a);
        if (Field::deg(a) < 1) continue;
        Fp g = F.gcd(a, f);
        if (Field::deg(g) == 0) {
            Fp b = F.sub(F.powmod(a, e, f), Fp{1});
            g = F.gcd(b, f);
        }
        int dg = Field::deg(g);
        if (dg > 0 && dg < n) {
            equal_degree(F, g, d, rng, out);
            equal_degree(F, F.quo(f, g), d, rng, out);
            return;
        }
    }
}

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 q = 2; q * q <= n; ++q)
        if (n % q == 0) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Polynomials over Z / M with coefficients in [0, M).

using Zm = std::vector<mpz_class>;

void ztrim(Zm& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Zm zreduce(const Zm& a, const mpz_class& M) {
    Zm r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) mpz_fdiv_r(r[i].get_mpz_t(), a[i].get_mpz_t(), M.get_mpz_t());
    ztrim(r);
    return r;
}

Zm zadd(const Zm& a, const Zm& b, const mpz_class& M) {
    Zm r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (i < a.size()) r[i] += a[i];
        if (i < b.size()) r[i] += b[i];
    }
    return zreduce(r, M);
}

Zm zsub(const Zm& a, const Zm& b, const mpz_class& M) {
    Zm r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (i < a.size()) r[i] += a[i];
        if (i < b.size()) r[i] -= b[i];
    }
    return zreduce(r, M);
}

Zm zmul(const Zm& a, const Zm& b, const mpz_class& M) {
    if (a.empty() || b.empty()) return {};
    Zm r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    return zreduce(r, M);
}

/// Division by a monic b modulo M.
void zdivrem(const Zm& a, const Zm& b, const mpz_class& M, Zm& q, Zm& r) {
    r = a;
    int db = static_cast<int>(b.size()) - 1;
    int da = static_cast<int>(a.size()) - 1;
    if (da < db) {
        q.clear();
        return;
    }
    q.assign(da - db + 1, 0);
    for (int k = da; k >= db; --k) {
        mpz_class c = r[k];
        mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), M.get_mpz_t());
        q[k - db] = c;
        if (c == 0) continue;
        for (int j = 0; j <= db; ++j) r[k - db + j] -= c * b[j];
    }
    r.resize(db);
    r = zreduce(r, M);
    ztrim(q);
}

Zm lift_fp(const Fp& a) {
    Zm r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = static_cast<unsigned long>(a[i]);
    return r;
}

/// One quadratic Hensel step: f = g*h and s*g + t*h = 1 modulo m become
/// valid modulo m^2 (h stays monic).
void hensel_step(const Zm& f, Zm& g, Zm& h, Zm& s, Zm& t, const mpz_class& m2) {
    Zm e = zsub(f, zmul(g, h, m2), m2);
    Zm q, r;
    zdivrem(zmul(s, e, m2), h, m2, q, r);
    Zm g2 = zadd(g, zadd(zmul(t, e, m2), zmul(q, g, m2), m2), m2);
    Zm h2 = zadd(h, r, m2);
    Zm b = zsub(zadd(zmul(s, g2, m2), zmul(t, h2, m2), m2), Zm{1}, m2);
    Zm c, d;
    zdivrem(zmul(s, b, m2), h2, m2, c, d);
    s = zsub(s, d, m2);
    t = zsub(t, zadd(zmul(t, b, m2), zmul(c, g2, m2), m2), m2);
    g = std::move(g2);
    h = std::move(h2);
}

/// Lift monic factors u of f mod p to monic factors mod p^(2^steps).
std::vector<Zm> hensel_lift(const Field& F, const IntPolynomial& f, const std::vector<Fp>& u, int steps) {
    std::vector<Zm> out;
    mpz_class M = 1;
    mpz_class p(static_cast<unsigned long>(F.p));
    mpz_pow_ui(M.get_mpz_t(), p.get_mpz_t(), 1UL << steps);
    Zm cur = zreduce(f.coeffs(), M);
    for (std::size_t k = 0; k + 1 < u.size(); ++k) {
        Fp hbar = u[k];
        Fp gbar = Fp{F.reduce(IntPolynomial(cur)).back()};  // lead of cur mod p
        for (std::size_t j = k + 1; j < u.size(); ++j) gbar = F.mul(gbar, u[j]);
        Fp sbar, tbar;
        F.xgcd(gbar, hbar, sbar, tbar);
        sbar = F.mod(sbar, hbar);
        tbar = F.quo(F.sub(Fp{1}, F.mul(sbar, gbar)), hbar);
        Zm g = lift_fp(gbar), h = lift_fp(hbar), s = lift_fp(sbar), t = lift_fp(tbar);
        mpz_class m = p;
        for (int j = 0; j < steps; ++j) {
            mpz_class m2 = m * m;
            hensel_step(zreduce(cur, m2), g, h, s, t, m2);
            m = m2;
        }
        out.push_back(std::move(h));
        cur = std::move(g);
    }
    mpz_class li;
    mpz_invert(li.get_mpz_t(), cur.back().get_mpz_t(), M.get_mpz_t());
    for (auto& c : cur) c *= li;
    out.push_back(zreduce(cur, M));
    return out;
}

IntPolynomial symmetric(const Zm& a, const mpz_class& M) {
    mpz_class half = M / 2;
    std::vector<mpz_class> c(a);
    for (auto& x : c)
        if (x > half) x -= M;
    return IntPolynomial(std::move(c));
}

mpz_class norm1(const IntPolynomial& p) {
    mpz_class s = 0;
    for (const auto& c : p.coeffs()) s += abs(c);
    return s;
}

mpz_class norm_inf(const IntPolynomial& p) {
    mpz_class s = 0;
    for (const auto& c : p.coeffs()) s = std::max<mpz_class>(s, abs(c));
    return s;
}

struct PrimeChoice {
    Field F{0};
    std::vector<DdfPart> ddf;
    int count = 0;
    bool irreducible = false;
};

/// Scan small primes for which f stays squarefree; keep the one with the
/// fewest modular factors. Intersecting the attainable factor degrees across
/// primes can prove irreducibility outright.
PrimeChoice choose_prime(const IntPolynomial& f) {
    const int n = f.degree();
    PrimeChoice best;
    std::vector<bool> possible(n + 1, true);
    int good = 0;
    for (u64 p = 3; good < 5; p += 2) {
        if (!is_prime(p)) continue;
        Field F{p};
        Fp fb = F.reduce(f);
        if (Field::deg(fb) != n) continue;
        if (Field::deg(F.gcd(fb, F.deriv(fb))) != 0) continue;
        ++good;
        auto ddf = distinct_degree(F, F.monic(fb));
        std::vector<bool> reach(n + 1, false);
        reach[0] = true;
        int count = 0;
        for (const auto& part : ddf) {
            int k = Field::deg(part.poly) / part.d;
            count += k;
            for (int r = 0; r < k; ++r)
                for (int s = n; s >= part.d; --s)
                    if (reach[s - part.d]) reach[s] = true;
        }
        for (int s = 0; s <= n; ++s) possible[s] = possible[s] && reach[s];
        if (best.count == 0 || count < best.count) {
            best.F = F;
            best.ddf = std::move(ddf);
            best.count = count;
        }
        bool any = false;
        for (int s = 1; s < n; ++s) any = any || possible[s];
        if (!any) {
            best.irreducible = true;
            return best;
        }
    }
    return best;
}

std::vector<IntPolynomial> zassenhaus(const IntPolynomial& f, const PrimeChoice& pc, std::uint64_t seed) {
    const Field& F = pc.F;
    std::mt19937_64 rng(seed);
    std::vector<Fp> u;
    for (const auto& part : pc.ddf) equal_degree(F, part.poly, part.d, rng, u);

    const int n = f.degree();
    const mpz_class b = f.lead();
    mpz_class rt;
    mpz_sqrt(rt.get_mpz_t(), mpz_class(n + 1).get_mpz_t());
    rt += 1;
    mpz_class B = rt * norm_inf(f) * b;
    mpz_mul_2exp(B.get_mpz_t(), B.get_mpz_t(), n);

    mpz_class p(static_cast<unsigned long>(F.p));
    int steps = 0;
    mpz_class M = p;
    while (M <= 2 * B) {
        M *= M;
        ++steps;
    }
    std::vector<Zm> T = hensel_lift(F, f, u, steps);

    std::vector<IntPolynomial> found;
    IntPolynomial fstar = f;
    mpz_class lc = b;
    std::size_t s = 1;
    while (2 * s <= T.size()) {
        bool hit = false;
        std::vector<std::size_t> idx(s);
        for (std::size_t i = 0; i < s; ++i) idx[i] = i;
        for (;;) {
            Zm g{lc}, h{lc};
            std::vector<bool> in(T.size(), false);
            for (auto i : idx) in[i] = true;
            for (std::size_t i = 0; i < T.size(); ++i) {
                if (in[i])
                    g = zmul(g, T[i], M);
                else
                    h = zmul(h, T[i], M);
            }
            IntPolynomial gs = symmetric(g, M), hs = symmetric(h, M);
            if (norm1(gs) * norm1(hs) <= B) {
                std::vector<Zm> rest;
                for (std::size_t i = 0; i < T.size(); ++i)
                    if (!in[i]) rest.push_back(std::move(T[i]));
                T = std::move(rest);
                found.push_back(gs.primitive_part());
                fstar = hs.primitive_part();
                lc = fstar.lead();
                hit = true;
                break;
            }
            // next combination
            std::size_t k = s;
            while (k > 0 && idx[k - 1] == T.size() - s + k - 1) --k;
            if (k == 0) break;
            ++idx[k - 1];
            for (std::size_t j = k; j < s; ++j) idx[j] = idx[j - 1] + 1;
        }
        if (!hit) ++s;
    }
    found.push_back(fstar);
    return found;
}

bool poly_less(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i)
        if (a.coeffs()[i] != b.coeffs()[i]) return a.coeffs()[i] < b.coeffs()[i];
    return false;
}

IntPolynomial linear_from_root(const mpq_class& r) {
    return IntPolynomial(std::vector<mpz_class>{-r.get_num(), r.get_den()}).primitive_part();
}

/// f squarefree, primitive, positive lead.
std::vector<IntPolynomial> factor_squarefree(const IntPolynomial& f, std::uint64_t seed) {
    const int n = f.degree();
    if (n <= 0) return {};
    if (n == 1) return {f};
    if (f.coeff(0) == 0) {
        auto rest = factor_squarefree(*divide_exact(f, IntPolynomial::x()), seed);
        rest.push_back(IntPolynomial::x());
        return rest;
    }
    if (n == 2) {
        mpz_class disc = f.coeff(1) * f.coeff(1) - 4 * f.coeff(2) * f.coeff(0);
        if (disc < 0 || !mpz_perfect_square_p(disc.get_mpz_t())) return {f};
        mpz_class s = sqrt(disc);
        mpq_class r1(-f.coeff(1) + s, 2 * f.coeff(2)), r2(-f.coeff(1) - s, 2 * f.coeff(2));
        r1.canonicalize();
        r2.canonicalize();
        return {linear_from_root(r1), linear_from_root(r2)};
    }
    if (n == 3) {
        auto roots = rational_roots(f);
        if (roots.empty()) return {f};
        IntPolynomial lin = linear_from_root(roots.front());
        auto out = factor_squarefree(divide_exact(f, lin)->primitive_part(), seed);
        out.push_back(lin);
        return out;
    }
    if (eisenstein_applies(f)) return {f};
    PrimeChoice pc = choose_prime(f);
    if (pc.irreducible || pc.count == 1) return {f};
    if (n > kFactorCeiling)
        throw CeilingExceeded("factorization of a degree-" + std::to_string(n) +
                              " component exceeds the supported ceiling of " + std::to_string(kFactorCeiling));
    return zassenhaus(f, pc, seed);
}

}  // namespace

bool eisenstein_applies(const IntPolynomial& p, unsigned long bound) {
    const int n = p.degree();
    if (n < 1) return false;
    for (unsigned long q = 2; q <= bound; ++q) {
        if (!is_prime(q)) continue;
        if (mpz_divisible_ui_p(p.lead().get_mpz_t(), q)) continue;
        bool ok = true;
        for (int i = 0; i < n && ok; ++i) ok = mpz_divisible_ui_p(p.coeffs()[i].get_mpz_t(), q) != 0;
        if (!ok) continue;
        if (mpz_divisible_ui_p(p.coeffs()[0].get_mpz_t(), q * q)) continue;
        return true;
    }
    return false;
}

std::vector<mpq_class> rational_roots(const IntPolynomial& p) {
    if (p.degree() < 1) return {};
    IntPolynomial f = squarefree_part(p);
    std::vector<mpq_class> out;
    if (f.coeff(0) == 0) {
        out.push_back(0);
        f = *divide_exact(f, IntPolynomial::x());
    }
    if (f.degree() >= 1) {
        // Cauchy bound 1 + max|a_i / a_n| < 2^k
        mpz_class mx = 0;
        for (int i = 0; i < f.degree(); ++i) mx = std::max<mpz_class>(mx, abs(f.coeffs()[i]));
        long k = static_cast<long>(mpz_sizeinbase(mx.get_mpz_t(), 2)) + 1;
        const mpz_class lead = abs(f.lead());
        const long need = static_cast<long>(mpz_sizeinbase(lead.get_mpz_t(), 2)) + 1;  // width < 1/|lead|
        struct Piece {
            Dyadic lo, hi;
            long lg;  // width = 2^lg
        };
        std::vector<Piece> stack{{-Dyadic::pow2(k), Dyadic::pow2(k), k + 1}};
        while (!stack.empty()) {
            Piece c = stack.back();
            stack.pop_back();
            int cnt = count_real_roots(f, c.lo, c.hi);
            if (cnt == 0) continue;
            if (cnt == 1 && c.lg <= -need) {
                // every rational root is an integer over |lead|
                mpz_class a = (c.lo * Dyadic(lead)).floor(), b = (c.hi * Dyadic(lead)).ceil();
                for (mpz_class m = a; m <= b; ++m) {
                    mpq_class r(m, lead);
                    r.canonicalize();
                    if (r <= c.lo.to_mpq() || r > c.hi.to_mpq()) continue;
                    if (f.eval(r) == 0) out.push_back(r);
                }
                continue;
            }
            Dyadic mid = c.lo + Dyadic::pow2(c.lg - 1);
            stack.push_back({c.lo, mid, c.lg - 1});
            stack.push_back({mid, c.hi, c.lg - 1});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Factor> factorize(const IntPolynomial& p, std::uint64_t seed) {
    if (p.is_zero()) throw PreconditionError("cannot factor the zero polynomial");
    std::vector<Factor> out;
    for (const auto& [f, mult] : squarefree_decomposition(p))
        for (auto& g : factor_squarefree(f.primitive_part(), seed)) out.push_back({std::move(g), mult});
    std::sort(out.begin(), out.end(), [](const Factor& a, const Factor& b) {
        if (a.poly == b.poly) return a.multiplicity < b.multiplicity;
        return poly_less(a.poly, b.poly);
    });
    return out;
}

bool is_irreducible(const IntPolynomial& p, std::uint64_t seed) {
    if (p.degree() < 1) throw PreconditionError("irreducibility of a constant");
    auto fs = factorize(p, seed);
    return fs.size() == 1 && fs[0].multiplicity == 1;
}

}  // namespace algdeg
