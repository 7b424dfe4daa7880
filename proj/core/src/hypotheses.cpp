#include "algdeg/hypotheses.hpp"

#include <algorithm>
#include <functional>

#include "algdeg/error.hpp"
#include "algdeg/factor.hpp"
#include "algdeg/rootbox.hpp"
#include "algdeg/sequences.hpp"

namespace algdeg {

namespace {

long box_scale(const ComplexBox& b) {
    long s = 0;
    for (const Dyadic& m : {b.re.mag(), b.im.mag()})
        if (!m.is_zero()) s = std::max(s, m.msb());
    return s;
}

DyadicInterval ival(const mpq_class& q, long prec) { return from_mpq(q, prec); }

DyadicInterval log2_abs(const AlgebraicNumber& a, long bits) {
    DyadicInterval m = abs_value(a, Dyadic::pow2(-bits));
    return log2(m, bits + 32);
}

DyadicInterval log2_int(const mpz_class& z, long prec) {
    return {log2(z, prec, Round::down), log2(z, prec, Round::up)};
}

/// L^a for L = log2 |alpha_1|, clipped at 0 where L may be <= 0.
DyadicInterval pow_a(const DyadicInterval& L, const mpq_class& a, long prec) {
    DyadicInterval ea = ival(a, prec);
    auto one = [&](const Dyadic& x, Round dir) {
        if (x.sign() <= 0) return Dyadic();
        DyadicInterval lx{log2(x, prec, Round::down), log2(x, prec, Round::up)};
        DyadicInterval e = mul(ea, lx, prec);
        return exp2(dir == Round::down ? e.lo : e.hi, prec, dir);
    };
    return {one(L.lo, Round::down), one(L.hi, Round::up)};
}

/// Re_zeta(b / alpha) at roughly `bits` bits.
DyadicInterval re_zeta_ratio(const ComplexBox& zeta, const mpz_class& b, const AlgebraicNumber& alpha, long bits) {
    AlgebraicNumber x = alpha;
    const long sc = box_scale(x.box());
    x = x.refined(Dyadic::pow2(sc - bits));
    while (x.box().contains_zero()) x = x.refined(x.box().width().mul_2exp(-8));
    long mig = 0;
    for (const Dyadic& m : {x.box().re.mig(), x.box().im.mig()})
        if (!m.is_zero()) mig = std::max(mig, -m.msb());
    const long prec = bits + 32 + mig + sc;
    ComplexBox r = scale(recip(x.box(), prec), DyadicInterval::point(Dyadic(b)), prec);
    return re_zeta(zeta, r, prec);
}

enum class Cmp { positive, nonnegative };

/// Escalates precision until X > 0 (or >= 0) is decided.
Verdict decide(const std::function<DyadicInterval(long)>& X, Cmp cmp, long max_bits) {
    for (long bits = 64; bits <= max_bits; bits *= 2) {
        DyadicInterval v = X(bits);
        if (cmp == Cmp::positive ? v.lo.sign() > 0 : v.lo.sign() >= 0) return Verdict::pass;
        if (cmp == Cmp::positive ? v.hi.sign() <= 0 : v.hi.sign() < 0) return Verdict::fail;
    }
    return Verdict::undetermined;
}

std::size_t window(std::size_t N, const mpq_class& fraction, std::size_t at_least) {
    mpz_class w;
    mpz_cdiv_q(w.get_mpz_t(), mpz_class(fraction.get_num() * N).get_mpz_t(), fraction.get_den().get_mpz_t());
    return std::min<std::size_t>(N, std::max<std::size_t>(at_least, w.get_ui()));
}

/// Value of |alpha| when alpha is rational (a table entry of integers).
std::optional<mpz_class> integer_modulus(const AlgebraicNumber& a) {
    auto r = a.rational_value();
    if (!r || r->get_den() != 1) return std::nullopt;
    return abs(r->get_num());
}

// --- shared finite conditions ---------------------------------------------

class Checker {
public:
    Checker(const SequenceTable& t, const HypothesisConfig& c, std::size_t N, HypothesisReport& r)
        : table(t), cfg(c), N_max(N), report(r) {}

    const SequenceTable& table;
    const HypothesisConfig& cfg;
    std::size_t N_max;
    HypothesisReport& report;

    void add(std::string cond, std::size_t n, std::size_t i, Verdict v, std::string detail = {}) {
        report.checks.push_back({std::move(cond), n, i, v, std::move(detail)});
    }

    const AlgebraicNumber& alpha(std::size_t n, std::size_t i = 1) const { return table.at(n, i).alpha; }

    DyadicInterval L(std::size_t n, long bits) const { return log2_abs(alpha(n), bits); }

    Verdict increase(std::size_t n) const {
        const AlgebraicNumber &x = alpha(n), &y = alpha(n + 1);
        auto ix = integer_modulus(x), iy = integer_modulus(y);
        if (ix && iy) return *ix < *iy ? Verdict::pass : Verdict::fail;
        if (x == y) return Verdict::fail;
        return decide([&](long bits) { return sub(log2_abs(y, bits), log2_abs(x, bits), bits + 32); },
                      Cmp::positive, cfg.max_bits);
    }

    Verdict large(std::size_t n) const {
        if (auto v = integer_modulus(alpha(n))) return exceeds_power(*v, n, cfg.eps) ? Verdict::pass : Verdict::fail;
        return decide(
            [&](long bits) {
                const long p = bits + 32;
                DyadicInterval rhs = mul(ival(1 + cfg.eps, p), log2_int(mpz_class(n), p), p);
                return sub(L(n, bits), rhs, p);
            },
            Cmp::nonnegative, cfg.max_bits);
    }

    /// 2^{-L^a} < |alpha_1| / |alpha_i| < 2^{L^a}
    Verdict ratio_bound(std::size_t n, std::size_t i) const {
        return decide(
            [&](long bits) {
                const long p = bits + 32;
                DyadicInterval l1 = L(n, bits);
                DyadicInterval d = sub(l1, log2_abs(alpha(n, i), bits), p);
                return sub(pow_a(l1, cfg.a, p), abs(d), p);
            },
            Cmp::positive, cfg.max_bits);
    }

    /// b house(alpha_i) <= 2^{L^a} |alpha_i|
    Verdict house_bound(std::size_t n, std::size_t i) const {
        const auto& e = table.at(n, i);
        const bool equal = house_equals_modulus(e.alpha, cfg.max_bits) == Verdict::pass;
        return decide(
            [&](long bits) {
                const long p = bits + 32;
                DyadicInterval x = sub(pow_a(L(n, bits), cfg.a, p), log2_int(e.b, p), p);
                if (equal) return x;
                DyadicInterval h = log2(house(e.alpha, Dyadic::pow2(-bits)), p);
                return algdeg::add(x, sub(log2_abs(e.alpha, bits), h, p), p);
            },
            Cmp::nonnegative, cfg.max_bits);
    }

    /// b_{i,n} < 2^{L^a}
    Verdict b_small(std::size_t n, std::size_t i) const {
        const auto& e = table.at(n, i);
        return decide(
            [&](long bits) {
                const long p = bits + 32;
                return sub(pow_a(L(n, bits), cfg.a, p), log2_int(e.b, p), p);
            },
            Cmp::positive, cfg.max_bits);
    }

    Verdict rezeta(std::size_t n, std::size_t i, const ComplexBox& zeta) const {
        const auto& e = table.at(n, i);
        return decide([&](long bits) { return re_zeta_ratio(zeta, e.b, e.alpha, bits); }, Cmp::positive,
                      cfg.max_bits);
    }

    Verdict rezeta_alpha(std::size_t n) const {
        const AlgebraicNumber& x = alpha(n);
        return decide(
            [&](long bits) {
                const long scale = box_scale(x.box());
                ComplexBox b = x.refined(Dyadic::pow2(scale - bits)).box();
                return re_zeta(cfg.zeta, b, bits + 32 + scale);
            },
            Cmp::positive, cfg.max_bits);
    }

    Verdict re_positive(std::size_t n) const {
        const AlgebraicNumber& x = alpha(n);
        return decide(
            [&](long bits) {
                const long scale = box_scale(x.box());
                return x.refined(Dyadic::pow2(scale - bits)).box().re;
            },
            Cmp::positive, cfg.max_bits);
    }

    // --- evidence ---------------------------------------------------------

    std::vector<DyadicInterval> trajectory(const std::vector<mpz_class>& exponents) const {
        std::vector<DyadicInterval> s;
        const long prec = 128;
        for (std::size_t n = 1; n <= N_max; ++n) {
            DyadicInterval l = L(n, prec);
            Dyadic e(exponents[n - 1]);
            const long p = prec + std::max(e.bits(), 0L) + 32;
            s.push_back({exp2(div(l.lo, e, p, Round::down), prec, Round::down),
                         exp2(div(l.hi, e, p, Round::up), prec, Round::up)});
        }
        return s;
    }

    void bracket_evidence(const std::vector<DyadicInterval>& s, const mpq_class& A1, const mpq_class& A2) {
        const std::size_t w = window(N_max, cfg.tail_fraction, 1);
        Dyadic lo = s[N_max - w].mid(), hi = lo;
        for (std::size_t k = N_max - w; k < N_max; ++k) {
            lo = min(lo, s[k].mid());
            hi = max(hi, s[k].mid());
        }
        report.tail_min = DyadicInterval::point(lo);
        report.tail_max = DyadicInterval::point(hi);
        const mpq_class ql = lo.to_mpq(), qh = hi.to_mpq(), tol = cfg.evidence_tol;
        auto near = [&](const mpq_class& x, const mpq_class& target) { return abs(x - target) <= tol * target; };
        const std::string win = "tail window n = " + std::to_string(N_max - w + 1) + ".." + std::to_string(N_max);
        report.evidence.push_back({"A1", near(ql, A1) ? Evidence::consistent : Evidence::inconsistent,
                                   win + ": min S_n = " + lo.to_decimal(10) + ", claimed " + A1.get_str()});
        report.evidence.push_back({"A2", near(qh, A2) ? Evidence::consistent : Evidence::inconsistent,
                                   win + ": max S_n = " + hi.to_decimal(10) + ", claimed " + A2.get_str()});
        bool ok = A1 >= 1 && A1 < A2 && qh > ql * (1 + tol);
        report.evidence.push_back({"A1<A2", ok ? Evidence::consistent : Evidence::inconsistent,
                                   win + ": max/min spread " + (qh > ql * (1 + tol) ? "exceeds" : "within") +
                                       " tolerance " + tol.get_str()});
    }

    void divergence_evidence(const std::vector<DyadicInterval>& s, const std::string& name) {
        if (N_max < 2) {
            report.evidence.push_back({name, Evidence::undetermined, "prefix too short"});
            return;
        }
        const std::size_t w = std::min(window(N_max, cfg.tail_fraction, 1), N_max - 1);
        Dyadic head, tail;
        for (std::size_t k = 0; k < N_max; ++k) {
            Dyadic l = log2(s[k].mid(), 64, Round::nearest);
            if (k < N_max - w)
                head = k == 0 ? l : max(head, l);
            else
                tail = k == N_max - w ? l : max(tail, l);
        }
        bool grows = head.sign() > 0 && tail >= head.mul_2exp(1);
        report.evidence.push_back({name, grows ? Evidence::consistent : Evidence::inconsistent,
                                   "max log2 S_n: head " + head.to_decimal(8) + ", tail " + tail.to_decimal(8)});
    }

    /// ratio Re_zeta(b_i/alpha_i) / Re_zeta(b_j/alpha_j) decreasing over the dominance window.
    void dominance_evidence(const ComplexBox& zeta, const std::string& name) {
        if (table.K < 2) return;
        const std::size_t w = window(N_max, cfg.dominance_fraction, 2);
        for (std::size_t i = 1; i <= table.K; ++i)
            for (std::size_t j = i + 1; j <= table.K; ++j) {
                std::vector<DyadicInterval> r;
                for (std::size_t n = N_max - w + 1; n <= N_max; ++n) {
                    const long bits = 256;
                    DyadicInterval x = re_zeta_ratio(zeta, table.at(n, i).b, table.at(n, i).alpha, bits);
                    DyadicInterval y = re_zeta_ratio(zeta, table.at(n, j).b, table.at(n, j).alpha, bits);
                    r.push_back(y.positive() ? div(x, y, bits) : DyadicInterval{Dyadic(-1), Dyadic(1)});
                }
                Evidence ev = w < 2 ? Evidence::undetermined : Evidence::consistent;
                for (std::size_t k = 1; k < r.size() && ev != Evidence::inconsistent; ++k) {
                    if (r[k].lo > r[k - 1].hi)
                        ev = Evidence::inconsistent;
                    else if (!(r[k].hi < r[k - 1].lo))
                        ev = Evidence::undetermined;
                }
                report.evidence.push_back({name + "(" + std::to_string(i) + "," + std::to_string(j) + ")", ev,
                                           "window of last " + std::to_string(w) + " indices"});
            }
    }
};

void check_shape(const SequenceTable& t, std::size_t N_max, unsigned long K) {
    t.validate();
    if (N_max < 1 || N_max > t.N_max()) throw PreconditionError("N_max outside the table");
    if (K != 0 && t.K != K) throw PreconditionError("table has K = " + std::to_string(t.K) + ", expected " + std::to_string(K));
}

}  // namespace

// ---------------------------------------------------------------------------

void HypothesisConfig::validate() const {
    if (D < 1 || K < 1) throw PreconditionError("D and K must be positive");
    if (!(a > 0 && a < 1)) throw PreconditionError("need 0 < a < 1");
    if (!(c > a && c < 1)) throw PreconditionError("need a < c < 1");
    if (eps <= 0) throw PreconditionError("epsilon must be positive");
    if (!modulus(zeta, 256).contains(Dyadic(1))) throw PreconditionError("zeta must have modulus 1");
    if (!betas.empty()) {
        if (betas.size() != K) throw PreconditionError("need exactly K betas");
        if (std::all_of(betas.begin(), betas.end(), [](const mpz_class& b) { return b == 0; }))
            throw PreconditionError("betas must not all be zero");
    }
    for (const auto* f : {&tail_fraction, &dominance_fraction})
        if (!(*f > 0 && *f <= 1)) throw PreconditionError("evidence window fractions must lie in (0, 1]");
    if (evidence_tol < 0) throw PreconditionError("evidence tolerance must be nonnegative");
    if (max_bits < 64) throw PreconditionError("precision cap below 64 bits");
}

void SequenceTable::validate() const {
    if (K < 1) throw PreconditionError("K must be positive");
    if (rows.empty()) throw PreconditionError("empty sequence table");
    for (std::size_t n = 0; n < rows.size(); ++n) {
        if (rows[n].size() != K)
            throw PreconditionError("row n = " + std::to_string(n + 1) + " does not have K entries");
        for (const auto& e : rows[n]) {
            if (!e.alpha.is_algebraic_integer())
                throw PreconditionError("alpha at n = " + std::to_string(n + 1) + " is not an algebraic integer");
            if (e.alpha.is_zero()) throw PreconditionError("alpha at n = " + std::to_string(n + 1) + " is zero");
            if (e.b < 1) throw PreconditionError("b at n = " + std::to_string(n + 1) + " is not positive");
        }
    }
}

SequenceTable SequenceTable::from_integers(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b) {
    std::vector<AlgebraicNumber> v;
    for (const auto& x : a) v.push_back(AlgebraicNumber::from_integer(x));
    return from_numbers(v, b);
}

SequenceTable SequenceTable::from_numbers(const std::vector<AlgebraicNumber>& alpha, const std::vector<mpz_class>& b) {
    if (!b.empty() && b.size() != alpha.size()) throw PreconditionError("b and alpha lengths differ");
    SequenceTable t;
    for (std::size_t n = 0; n < alpha.size(); ++n) t.rows.push_back({{alpha[n], b.empty() ? mpz_class(1) : b[n]}});
    return t;
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::pass: return "pass";
        case Verdict::fail: return "fail";
        default: return "undetermined-at-precision";
    }
}

std::string to_string(Evidence e) {
    switch (e) {
        case Evidence::consistent: return "consistent";
        case Evidence::inconsistent: return "inconsistent";
        default: return "undetermined";
    }
}

std::vector<ConditionResult> HypothesisReport::failures() const {
    std::vector<ConditionResult> out;
    for (const auto& c : checks)
        if (c.verdict == Verdict::fail) out.push_back(c);
    return out;
}

bool HypothesisReport::all_finite_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.verdict == Verdict::pass; });
}

const EvidenceResult* HypothesisReport::find_evidence(const std::string& name) const {
    for (const auto& e : evidence)
        if (e.condition == name) return &e;
    return nullptr;
}

std::vector<DyadicInterval> s_trajectory(const SequenceTable& table, const HypothesisConfig& cfg, std::size_t N_max) {
    check_shape(table, N_max, 0);
    HypothesisReport scratch;
    Checker ck(table, cfg, N_max, scratch);
    std::vector<mpz_class> e;
    for (std::size_t n = 1; n <= N_max; ++n) e.push_back(tower_exponent(cfg.D, cfg.K, cfg.ds, n));
    return ck.trajectory(e);
}

Verdict house_equals_modulus(const AlgebraicNumber& alpha, long max_bits) {
    if (alpha.is_rational()) return Verdict::pass;
    const IntPolynomial& p = alpha.minpoly();
    std::size_t self = 0;
    std::vector<ComplexBox> boxes = conjugates(alpha, Dyadic(1), &self);
    const IntPolynomial pn = p.negate_variable().primitive_part();
    const bool odd_or_even = pn == p;
    enum class St { open, smaller, equal };
    std::vector<St> st(boxes.size(), St::open);
    st[self] = St::equal;
    long scale = 0;
    for (const auto& b : boxes) scale = std::max(scale, box_scale(b));
    for (long bits = 32; bits <= max_bits; bits *= 2) {
        const Dyadic w = Dyadic::pow2(scale - bits);
        const long prec = bits + scale + 32;
        for (std::size_t j = 0; j < boxes.size(); ++j)
            if (st[j] == St::open || j == self) boxes[j] = refine_isolated(p, boxes[j], w);
        const ComplexBox& s = boxes[self];
        std::vector<ComplexBox> images{s.conj()};
        if (odd_or_even) {
            images.push_back(neg(s));
            images.push_back(neg(s.conj()));
        }
        const DyadicInterval ms = modulus(s, prec);
        bool open = false;
        for (std::size_t j = 0; j < boxes.size(); ++j) {
            if (st[j] != St::open) continue;
            const DyadicInterval mj = modulus(boxes[j], prec);
            if (mj.hi < ms.lo) {
                st[j] = St::smaller;
                continue;
            }
            if (mj.lo > ms.hi) return Verdict::fail;
            for (const auto& im : images) {
                if (!boxes[j].intersects(im)) continue;
                bool unique = true;
                for (std::size_t k = 0; k < boxes.size() && unique; ++k)
                    if (k != j && boxes[k].intersects(im)) unique = false;
                if (unique) st[j] = St::equal;
            }
            open = open || st[j] == St::open;
        }
        if (!open) return Verdict::pass;
    }
    return Verdict::undetermined;
}

Verdict compositum_degree_at_most(const std::vector<AlgebraicNumber>& alphas, unsigned long d) {
    if (alphas.empty()) throw PreconditionError("no numbers given");
    mpz_class prod = 1;
    unsigned long top = 0;
    for (const auto& a : alphas) {
        prod *= a.degree();
        top = std::max<unsigned long>(top, static_cast<unsigned long>(a.degree()));
    }
    if (prod <= d) return Verdict::pass;
    if (top > d) return Verdict::fail;
    if (alphas.size() == 1) return Verdict::pass;
    if (alphas.size() > 2 || prod > kFactorCeiling) return Verdict::undetermined;
    // primitive elements a + t b; one of the first deg a * deg b + 1 values of t generates the field
    const unsigned long tries = prod.get_ui() + 1;
    for (unsigned long t = 1; t <= tries; ++t) {
        AlgebraicNumber g = alphas[0] + alphas[1] * AlgebraicNumber::from_integer(t);
        if (static_cast<unsigned long>(g.degree()) > d) return Verdict::fail;
        if (mpz_class(g.degree()) == prod) break;
    }
    return Verdict::pass;
}

HypothesisReport check_theorem4(const SequenceTable& table, const HypothesisConfig& cfg, std::size_t N_max,
                                const mpq_class& claimed_A1, const mpq_class& claimed_A2) {
    cfg.validate();
    check_shape(table, N_max, cfg.K);
    if (cfg.ds.size() < N_max) throw PreconditionError("need d_n for every n <= N_max");
    HypothesisReport rep;
    rep.preset = "theorem4";
    rep.N_max = N_max;
    Checker ck(table, cfg, N_max, rep);
    for (std::size_t n = 1; n <= N_max; ++n) {
        if (n < N_max) ck.add("increase", n, 0, ck.increase(n));
        ck.add("a1n_large", n, 0, ck.large(n));
        std::vector<AlgebraicNumber> row;
        for (const auto& e : table.rows[n - 1]) row.push_back(e.alpha);
        ck.add("deg_bound", n, 0, compositum_degree_at_most(row, cfg.ds[n - 1]));
        for (std::size_t i = 2; i <= cfg.K; ++i) ck.add("house_ain_bound", n, i, ck.ratio_bound(n, i));
        for (std::size_t i = 1; i <= cfg.K; ++i) ck.add("house", n, i, ck.house_bound(n, i));
        for (std::size_t i = 1; i <= cfg.K; ++i) ck.add("rezeta", n, i, ck.rezeta(n, i, cfg.zeta));
    }
    std::vector<mpz_class> e;
    for (std::size_t n = 1; n <= N_max; ++n) e.push_back(tower_exponent(cfg.D, cfg.K, cfg.ds, n));
    rep.s_trajectory = ck.trajectory(e);
    ck.bracket_evidence(rep.s_trajectory, claimed_A1, claimed_A2);
    ck.dominance_evidence(cfg.zeta, "increasing_fractions");
    return rep;
}

std::string to_string(Preset p) {
    switch (p) {
        case Preset::erdos_thm1: return "erdos_thm1";
        case Preset::hancl_thm2: return "hancl_thm2";
        case Preset::ak_thm3: return "ak_thm3";
        default: return "k1_thm5";
    }
}

Preset parse_preset(const std::string& name) {
    for (Preset p : {Preset::erdos_thm1, Preset::hancl_thm2, Preset::ak_thm3, Preset::k1_thm5})
        if (to_string(p) == name) return p;
    throw PreconditionError("unknown preset: " + name);
}

HypothesisReport check_presets(const SequenceTable& table, Preset preset, const HypothesisConfig& cfg,
                               const PresetParams& params) {
    cfg.validate();
    const std::size_t N_max = table.N_max();
    check_shape(table, N_max, preset == Preset::hancl_thm2 ? 0 : 1);
    HypothesisReport rep;
    rep.preset = to_string(preset);
    rep.N_max = N_max;
    Checker ck(table, cfg, N_max, rep);
    std::vector<mpz_class> e;
    auto require_integers = [&] {
        for (const auto& row : table.rows)
            for (const auto& x : row)
                if (!integer_modulus(x.alpha) || x.alpha.rational_value()->get_num() < 1)
                    throw PreconditionError(rep.preset + " needs natural-number entries");
    };

    switch (preset) {
        case Preset::erdos_thm1: {
            require_integers();
            for (std::size_t n = 1; n <= N_max; ++n) {
                if (n < N_max) ck.add("increase", n, 0, ck.increase(n));
                ck.add("a1n_large", n, 0, ck.large(n));
                mpz_class x;
                mpz_ui_pow_ui(x.get_mpz_t(), 2, n);
                e.push_back(x);
            }
            rep.s_trajectory = ck.trajectory(e);
            ck.divergence_evidence(rep.s_trajectory, "limsup_infinite");
            break;
        }
        case Preset::hancl_thm2: {
            require_integers();
            for (std::size_t n = 1; n <= N_max; ++n) {
                if (n < N_max) ck.add("increase", n, 0, ck.increase(n));
                ck.add("a1n_large", n, 0, ck.large(n));
                for (std::size_t i = 1; i <= table.K; ++i) ck.add("b_small", n, i, ck.b_small(n, i));
                for (std::size_t i = 2; i <= table.K; ++i) ck.add("ratio_bound", n, i, ck.ratio_bound(n, i));
                mpz_class x;
                mpz_ui_pow_ui(x.get_mpz_t(), table.K + 1, n);
                e.push_back(x);
            }
            rep.s_trajectory = ck.trajectory(e);
            ck.bracket_evidence(rep.s_trajectory, params.claimed_A1, params.claimed_A2);
            ck.dominance_evidence(ComplexBox::point(Dyadic(1)), "fractions_limit");
            break;
        }
        case Preset::ak_thm3: {
            DegreeList dd(N_max, params.d);
            for (std::size_t n = 1; n <= N_max; ++n) {
                if (n < N_max) ck.add("increase", n, 0, ck.increase(n));
                ck.add("a1n_large", n, 0, ck.large(n));
                ck.add("degree_bound", n, 0,
                       static_cast<unsigned long>(ck.alpha(n).degree()) <= params.d ? Verdict::pass : Verdict::fail);
                ck.add("house_equals_modulus", n, 0, house_equals_modulus(ck.alpha(n), cfg.max_bits));
                ck.add("re_positive", n, 0, ck.re_positive(n));
                e.push_back(tower_exponent(cfg.D, 1, dd, n));
            }
            rep.s_trajectory = ck.trajectory(e);
            ck.divergence_evidence(rep.s_trajectory, "limsup_infinite");
            break;
        }
        case Preset::k1_thm5: {
            DegreeList dd;
            for (std::size_t n = 1; n <= N_max; ++n) {
                if (n < N_max) ck.add("increase", n, 0, ck.increase(n));
                ck.add("a1n_large", n, 0, ck.large(n));
                ck.add("house", n, 0, ck.house_bound(n, 1));
                ck.add("rezeta_alpha", n, 0, ck.rezeta_alpha(n));
                e.push_back(tower_exponent(cfg.D, 1, dd, n));
                dd.push_back(static_cast<unsigned long>(ck.alpha(n).degree()));
            }
            rep.s_trajectory = ck.trajectory(e);
            ck.bracket_evidence(rep.s_trajectory, params.claimed_A1, params.claimed_A2);
            break;
        }
    }
    return rep;
}

}  // namespace algdeg
