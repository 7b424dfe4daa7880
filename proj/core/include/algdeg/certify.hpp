#ifndef ALGDEG_CERTIFY_HPP
#define ALGDEG_CERTIFY_HPP

#include <string>
#include <vector>

#include "algdeg/algnum.hpp"
#include "algdeg/hypotheses.hpp"

namespace algdeg {

/// gamma = sum_j beta_j sum_n b_{j,n} / alpha_{j,n} with integer betas.
struct LinearCombination {
    std::vector<mpz_class> betas;
    SequenceTable table;

    /// Rational betas are cleared by the lcm of their denominators.
    static LinearCombination make(const SequenceTable& table, const std::vector<mpq_class>& betas);
    static LinearCombination make(const SequenceTable& table, const std::vector<mpz_class>& betas);
};

/// gamma_N, exact. D_N = d_1 ... d_N must not exceed the factorization
/// ceiling; CeilingExceeded otherwise.
AlgebraicNumber partial_sum_exact(const LinearCombination& lc, const DegreeList& ds, std::size_t N);

struct MahlerChain {
    LogMagnitude lhs;  ///< log2 M(gamma_N)
    LogMagnitude rhs;  ///< D_N (K N + sum log2 H(beta_i) + sum log2 (house(alpha_{i,n}) b_{i,n}))
    bool ok = false;   ///< lhs.hi <= rhs.lo
};

MahlerChain mahler_chain_check(const LinearCombination& lc, const DegreeList& ds, std::size_t N, const Dyadic& rel_tol);

/// Enclosure of log2 |gamma(N)|. Terms N < n <= N_data are summed in interval
/// arithmetic; the rest is capped by the tail bound on 2^{L_n - 2 L_n^a},
/// L_n = log2 |alpha_{1,n}|, which assumes the hypotheses persist past the
/// data. Unbounded below when the cap swamps the partial tail. Throws
/// Undetermined if the partial tail still straddles 0 at cfg.max_bits.
LogMagnitude tail_enclosure(const LinearCombination& lc, const HypothesisConfig& cfg, std::size_t N, long bits);

/// log2 of the remainder cap beyond the last row.
DyadicInterval remainder_log2_cap(const LinearCombination& lc, const HypothesisConfig& cfg, long prec);

enum class BracketForm {
    canonical,  ///< 2^{(D^N prod_{i<N}(K D_i + d_i))^c}
    late,       ///< 2^{((K+1) D D_{floor(N/2)})^{cN}}
};

/// log2 of (2^{X} prod_{n<=N} |alpha_{1,n}|^K)^{D D_N}, X from `form`.
LogMagnitude bracket_log2(const SequenceTable& table, const HypothesisConfig& cfg, std::size_t N, long prec,
                          BracketForm form = BracketForm::canonical);

enum class PhiVerdict { phi_below_one, phi_at_least_one, undetermined };
std::string to_string(PhiVerdict v);

struct TraceEntry {
    std::size_t N = 0;
    LogMagnitude log2_gamma_tail;
    LogMagnitude log2_bracket;
    LogMagnitude log2_phi;
    PhiVerdict verdict = PhiVerdict::undetermined;
    long bits = 0;  ///< precision at which the verdict was settled
};

struct CertifyTrace {
    unsigned long D = 1;
    std::vector<TraceEntry> entries;

    std::string to_csv() const;
};

PhiVerdict phi_verdict(const LogMagnitude& log2_phi);

/// Entries for N = N_lo..N_hi; N_hi must be below the table length.
/// Precision starts at `bits` and doubles up to cfg.max_bits per entry.
CertifyTrace phi_trace(const LinearCombination& lc, const HypothesisConfig& cfg, std::size_t N_lo, std::size_t N_hi,
                       long bits = 128, BracketForm form = BracketForm::canonical);

struct CertifyReport {
    bool evidence = false;
    std::vector<std::size_t> at;  ///< N with a certified phi_below_one
    std::string message;
};

CertifyReport verdict(const CertifyTrace& trace);

}  // namespace algdeg

#endif
