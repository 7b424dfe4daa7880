#include "algdeg/certify.hpp"

#include <algorithm>
#include <sstream>

#include "algdeg/error.hpp"
#include "algdeg/factor.hpp"

namespace algdeg {

namespace {

long box_scale(const ComplexBox& b) {
    long s = 0;
    for (const Dyadic& m : {b.re.mag(), b.im.mag()})
        if (!m.is_zero()) s = std::max(s, m.msb());
    return s;
}

DyadicInterval log2_int(const mpz_class& z, long prec) {
    return {log2(z, prec, Round::down), log2(z, prec, Round::up)};
}

DyadicInterval log2_abs(const AlgebraicNumber& a, long prec) {
    if (auto q = a.rational_value(); q && q->get_den() == 1) return log2_int(abs(q->get_num()), prec);
    return log2(abs_value(a, Dyadic::pow2(-prec)), prec + 32);
}

/// x^e for x > 0 through the log domain.
DyadicInterval rpow(const DyadicInterval& x, const DyadicInterval& e, long prec) {
    return exp2(mul(e, log2(x, prec), prec), prec);
}

/// b / alpha as a box at roughly `bits` significant bits.
ComplexBox ratio_box(const mpz_class& b, const AlgebraicNumber& alpha, long bits) {
    const long prec = bits + 32;
    if (auto q = alpha.rational_value()) return {from_mpq(mpq_class(b) / *q, prec), DyadicInterval::point(Dyadic())};
    AlgebraicNumber x = alpha;
    const long sc = box_scale(x.box());
    x = x.refined(Dyadic::pow2(sc - bits));
    while (x.box().contains_zero()) x = x.refined(x.box().width().mul_2exp(-8));
    long mig = 0;
    for (const Dyadic& m : {x.box().re.mig(), x.box().im.mig()})
        if (!m.is_zero()) mig = std::max(mig, -m.msb());
    const long p = prec + mig + sc;
    return scale(recip(x.box(), p), DyadicInterval::point(Dyadic(b)), p);
}

void check_index(const LinearCombination& lc, std::size_t N) {
    if (N < 1) throw PreconditionError("N must be at least 1");
    if (N >= lc.table.N_max())
        throw PreconditionError("the table must extend past N = " + std::to_string(N) + " (has " +
                                std::to_string(lc.table.N_max()) + " rows)");
}

struct TailValue {
    DyadicInterval modulus;  ///< enclosure of |gamma(N)|, lower end clipped at 0
    bool straddles = false;  ///< partial tail box still meets 0
    bool swamped = false;    ///< the remainder cap exceeds the partial tail
};

TailValue tail_value(const LinearCombination& lc, const HypothesisConfig& cfg, std::size_t N, long bits) {
    check_index(lc, N);
    const long top = std::max(bits, cfg.max_bits);
    DyadicInterval part;
    bool straddles = true;
    long prec = bits + 32;
    for (long b = bits; b <= top; b *= 2) {
        prec = b + 32;
        ComplexBox sum = ComplexBox::point(Dyadic());
        for (std::size_t n = N + 1; n <= lc.table.N_max(); ++n)
            for (std::size_t i = 1; i <= lc.table.K; ++i) {
                const mpz_class& beta = lc.betas[i - 1];
                if (beta == 0) continue;
                const SequenceEntry& e = lc.table.at(n, i);
                sum = add(sum, scale(ratio_box(e.b, e.alpha, b), DyadicInterval::point(Dyadic(beta)), prec), prec);
            }
        part = modulus(sum, prec);
        if (!sum.contains_zero()) {
            straddles = false;
            break;
        }
    }
    const Dyadic r = exp2(remainder_log2_cap(lc, cfg, prec).hi, prec, Round::up);
    Dyadic lo = round(part.lo - r, prec, Round::down);
    const bool swamped = !straddles && lo.sign() <= 0;
    if (lo.sign() < 0 || straddles) lo = Dyadic();
    return {{lo, round(part.hi + r, prec, Round::up)}, straddles, swamped};
}

}  // namespace

LinearCombination LinearCombination::make(const SequenceTable& table, const std::vector<mpq_class>& betas) {
    mpz_class l = 1;
    for (const auto& b : betas) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), b.get_den().get_mpz_t());
    std::vector<mpz_class> z;
    for (const auto& b : betas) {
        mpq_class s = b * l;
        z.push_back(s.get_num());
    }
    return make(table, z);
}

LinearCombination LinearCombination::make(const SequenceTable& table, const std::vector<mpz_class>& betas) {
    table.validate();
    if (betas.size() != table.K) throw PreconditionError("need exactly K betas");
    if (std::all_of(betas.begin(), betas.end(), [](const mpz_class& b) { return b == 0; }))
        throw PreconditionError("betas must not all be zero");
    return {betas, table};
}

AlgebraicNumber partial_sum_exact(const LinearCombination& lc, const DegreeList& ds, std::size_t N) {
    if (N < 1 || N > lc.table.N_max()) throw PreconditionError("N out of range");
    if (ds.size() < N) throw PreconditionError("need d_1 .. d_N");
    const mpz_class DN = degree_products(ds)[N];
    if (DN > kFactorCeiling)
        throw CeilingExceeded("D_N = " + DN.get_str() + " exceeds the factorization ceiling " +
                              std::to_string(kFactorCeiling) + "; use the tail-only mode (phi_trace)");
    AlgebraicNumber gamma = AlgebraicNumber::from_integer(0);
    for (std::size_t i = 1; i <= lc.table.K; ++i) {
        if (lc.betas[i - 1] == 0) continue;
        AlgebraicNumber s = AlgebraicNumber::from_integer(0);
        for (std::size_t n = 1; n <= N; ++n) {
            const SequenceEntry& e = lc.table.at(n, i);
            s = s + AlgebraicNumber::from_integer(e.b) / e.alpha;
        }
        gamma = gamma + AlgebraicNumber::from_integer(lc.betas[i - 1]) * s;
    }
    if (gamma.degree() > DN)
        throw PreconditionError("deg gamma_N = " + std::to_string(gamma.degree()) + " exceeds D_N = " + DN.get_str() +
                                "; the degree list does not bound the fields");
    return gamma;
}

MahlerChain mahler_chain_check(const LinearCombination& lc, const DegreeList& ds, std::size_t N,
                               const Dyadic& rel_tol) {
    AlgebraicNumber gamma = partial_sum_exact(lc, ds, N);
    const long prec = 128;
    MahlerChain out;
    out.lhs = gamma.is_zero() ? LogMagnitude{} : mahler_measure(gamma, rel_tol);

    const unsigned long K = lc.table.K;
    DyadicInterval r = DyadicInterval::point(Dyadic(static_cast<long>(K * N)));
    for (const auto& beta : lc.betas)
        if (beta != 0) r = add(r, log2_int(abs(beta), prec), prec);
    for (std::size_t n = 1; n <= N; ++n)
        for (std::size_t i = 1; i <= K; ++i) {
            const SequenceEntry& e = lc.table.at(n, i);
            r = add(r, log2(house(e.alpha, rel_tol), prec), prec);
            r = add(r, log2_int(e.b, prec), prec);
        }
    const Dyadic DN(degree_products(ds)[N]);
    out.rhs = LogMagnitude::from_log2(scale(r, DN, prec));
    out.ok = out.lhs.hi <= out.rhs.lo;
    return out;
}

DyadicInterval remainder_log2_cap(const LinearCombination& lc, const HypothesisConfig& cfg, long prec) {
    const long p = prec + 32;
    const DyadicInterval L = log2_abs(lc.table.at(lc.table.N_max(), 1).alpha, p);
    if (L.lo.sign() <= 0) throw PreconditionError("last |alpha_1| must exceed 1 for a remainder cap");
    const DyadicInterval Llo = DyadicInterval::point(L.lo);
    // L - 2 L^a must be positive and increasing from L on: L^{1-a} > 2
    const DyadicInterval growth = rpow(Llo, from_mpq(1 - cfg.a, p), p);
    if (growth.lo <= Dyadic(2))
        throw PreconditionError("last row too small for a remainder cap: need (log2 |alpha_1|)^(1-a) > 2");
    const DyadicInterval g = sub(Llo, scale(rpow(Llo, from_mpq(cfg.a, p), p), Dyadic(2), p), p);
    mpz_class beta_sum = 0;
    for (const auto& b : lc.betas) beta_sum += abs(b);
    DyadicInterval out = log2_int(beta_sum, p);
    out = add(out, log2(from_mpq(2 + 1 / cfg.eps, p), p), p);
    out = sub(out, mul(from_mpq(cfg.eps / (1 + cfg.eps), p), g, p), p);
    return round_out(out, prec);
}

LogMagnitude tail_enclosure(const LinearCombination& lc, const HypothesisConfig& cfg, std::size_t N, long bits) {
    TailValue t = tail_value(lc, cfg, N, bits);
    if (t.straddles) throw Undetermined("the tail gamma(N) straddles 0 at the precision cap");
    return LogMagnitude::of_value(t.modulus, bits + 32);
}

LogMagnitude bracket_log2(const SequenceTable& table, const HypothesisConfig& cfg, std::size_t N, long prec,
                          BracketForm form) {
    if (N < 1 || N > table.N_max()) throw PreconditionError("N out of range");
    if (cfg.ds.size() < N) throw PreconditionError("need d_1 .. d_N");
    const long p = prec + 32;
    const auto Ds = degree_products(cfg.ds);
    const DyadicInterval c = from_mpq(cfg.c, p);
    DyadicInterval x;
    if (form == BracketForm::canonical) {
        x = rpow(DyadicInterval::point(Dyadic(tower_exponent(cfg.D, cfg.K, cfg.ds, N))), c, p);
    } else {
        const mpz_class base = mpz_class(cfg.K + 1) * cfg.D * Ds[N / 2];
        x = rpow(DyadicInterval::point(Dyadic(base)), scale(c, Dyadic(static_cast<long>(N)), p), p);
    }
    DyadicInterval s = DyadicInterval::point(Dyadic());
    for (std::size_t n = 1; n <= N; ++n) s = add(s, log2_abs(table.at(n, 1).alpha, p), p);
    s = scale(s, Dyadic(static_cast<long>(cfg.K)), p);
    const DyadicInterval total = scale(add(x, s, p), Dyadic(mpz_class(cfg.D) * Ds[N]), p);
    return LogMagnitude::from_log2(round_out(total, prec));
}

std::string to_string(PhiVerdict v) {
    switch (v) {
        case PhiVerdict::phi_below_one: return "phi_below_one";
        case PhiVerdict::phi_at_least_one: return "phi_at_least_one";
        default: return "undetermined";
    }
}

PhiVerdict phi_verdict(const LogMagnitude& log2_phi) {
    if (log2_phi.hi.sign() < 0) return PhiVerdict::phi_below_one;
    if (!log2_phi.unbounded_below && log2_phi.lo.sign() >= 0) return PhiVerdict::phi_at_least_one;
    return PhiVerdict::undetermined;
}

CertifyTrace phi_trace(const LinearCombination& lc, const HypothesisConfig& cfg, std::size_t N_lo, std::size_t N_hi,
                       long bits, BracketForm form) {
    cfg.validate();
    if (lc.table.K != cfg.K) throw PreconditionError("config K differs from the table");
    if (N_lo < 1 || N_hi < N_lo) throw PreconditionError("empty N range");
    check_index(lc, N_hi);
    CertifyTrace trace;
    trace.D = cfg.D;
    for (std::size_t N = N_lo; N <= N_hi; ++N) {
        TraceEntry e;
        e.N = N;
        for (long b = bits;; b *= 2) {
            TailValue t = tail_value(lc, cfg, N, b);
            e.log2_gamma_tail = LogMagnitude::of_value(t.modulus, b + 32);
            e.log2_bracket = bracket_log2(lc.table, cfg, N, b, form);
            e.log2_phi = e.log2_gamma_tail + e.log2_bracket;
            e.verdict = phi_verdict(e.log2_phi);
            e.bits = b;
            // more precision cannot shrink the remainder cap
            if (e.verdict != PhiVerdict::undetermined || t.swamped || b >= cfg.max_bits) break;
        }
        trace.entries.push_back(std::move(e));
    }
    return trace;
}

std::string CertifyTrace::to_csv() const {
    std::ostringstream os;
    os << "N,log2_gamma_lo,log2_gamma_hi,log2_bracket_lo,log2_bracket_hi,log2_phi_lo,log2_phi_hi,verdict\n";
    auto lo = [](const LogMagnitude& m) { return m.unbounded_below ? std::string("-inf") : m.lo.to_decimal(17, Round::down); };
    auto hi = [](const LogMagnitude& m) { return m.hi.to_decimal(17, Round::up); };
    for (const auto& e : entries)
        os << e.N << ',' << lo(e.log2_gamma_tail) << ',' << hi(e.log2_gamma_tail) << ',' << lo(e.log2_bracket) << ','
           << hi(e.log2_bracket) << ',' << lo(e.log2_phi) << ',' << hi(e.log2_phi) << ',' << to_string(e.verdict)
           << '\n';
    return os.str();
}

CertifyReport verdict(const CertifyTrace& trace) {
    if (trace.entries.empty()) throw PreconditionError("empty trace");
    CertifyReport r;
    for (const auto& e : trace.entries)
        if (e.verdict == PhiVerdict::phi_below_one) r.at.push_back(e.N);
    r.evidence = !r.at.empty();
    if (!r.evidence) {
        r.message = "no evidence in range";
        return r;
    }
    std::ostringstream os;
    os << "EVIDENCE (not proof): consistent with deg gamma > " << trace.D << " at N = ";
    for (std::size_t k = 0; k < r.at.size(); ++k) os << (k ? ", " : "") << r.at[k];
    r.message = os.str();
    return r;
}

}  // namespace algdeg
