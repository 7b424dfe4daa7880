#ifndef ALGDEG_HYPOTHESES_HPP
#define ALGDEG_HYPOTHESES_HPP

#include <optional>
#include <string>
#include <vector>

#include "algdeg/algnum.hpp"
#include "algdeg/bounds.hpp"

namespace algdeg {

struct HypothesisConfig {
    unsigned long D = 1;
    unsigned long K = 1;
    mpq_class a{1, 2};
    mpq_class c{3, 4};
    mpq_class eps{1};
    ComplexBox zeta = ComplexBox::point(Dyadic(1));
    DegreeList ds;
    std::vector<mpz_class> betas;
    /// Evidence windows: the last ceil(N * fraction) indices of the prefix.
    mpq_class tail_fraction{1, 2};
    mpq_class dominance_fraction{1, 4};
    /// Relative slack when matching S_n extremes to claimed A1, A2.
    mpq_class evidence_tol{1, 10};
    /// Precision cap, in bits, for strict comparisons.
    long max_bits = 1L << 14;

    void validate() const;
};

struct SequenceEntry {
    AlgebraicNumber alpha;
    mpz_class b;
};

/// rows[n - 1][i - 1] holds alpha_{i,n} and b_{i,n}.
struct SequenceTable {
    unsigned long K = 1;
    std::vector<std::vector<SequenceEntry>> rows;

    std::size_t N_max() const { return rows.size(); }
    const SequenceEntry& at(std::size_t n, std::size_t i) const { return rows.at(n - 1).at(i - 1); }
    /// Shape, monic minimal polynomials, positive b.
    void validate() const;

    /// K = 1 tables.
    static SequenceTable from_integers(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b = {});
    static SequenceTable from_numbers(const std::vector<AlgebraicNumber>& alpha, const std::vector<mpz_class>& b = {});
};

enum class Verdict { pass, fail, undetermined };
enum class Evidence { consistent, inconsistent, undetermined };

std::string to_string(Verdict v);
std::string to_string(Evidence e);

struct ConditionResult {
    std::string condition;
    std::size_t n = 0;
    std::size_t i = 0;  ///< 0 when the condition is not per-row
    Verdict verdict = Verdict::undetermined;
    std::string detail;
};

struct EvidenceResult {
    std::string condition;
    Evidence verdict = Evidence::undetermined;
    std::string detail;
};

struct HypothesisReport {
    std::string preset;
    std::size_t N_max = 0;
    std::vector<ConditionResult> checks;
    std::vector<EvidenceResult> evidence;
    std::vector<DyadicInterval> s_trajectory;
    /// min / max of S_n midpoints over the tail window.
    std::optional<DyadicInterval> tail_min, tail_max;

    std::vector<ConditionResult> failures() const;
    bool all_finite_pass() const;
    const EvidenceResult* find_evidence(const std::string& name) const;
};

/// S_n = |alpha_{1,n}|^{1 / tower_exponent(D, K, ds, n)} for n = 1..N_max.
std::vector<DyadicInterval> s_trajectory(const SequenceTable& table, const HypothesisConfig& cfg, std::size_t N_max);

/// house(alpha) == |alpha|: pass when every other conjugate is certified
/// smaller or is a symmetric image of alpha with the same modulus.
Verdict house_equals_modulus(const AlgebraicNumber& alpha, long max_bits = 1L << 14);

/// Upper bound check of [Q(alpha_1, ..., alpha_K) : Q] <= d.
Verdict compositum_degree_at_most(const std::vector<AlgebraicNumber>& alphas, unsigned long d);

HypothesisReport check_theorem4(const SequenceTable& table, const HypothesisConfig& cfg, std::size_t N_max,
                                const mpq_class& claimed_A1, const mpq_class& claimed_A2);

enum class Preset { erdos_thm1, hancl_thm2, ak_thm3, k1_thm5 };
std::string to_string(Preset p);
Preset parse_preset(const std::string& name);

struct PresetParams {
    mpq_class claimed_A1{1};
    mpq_class claimed_A2{2};
    /// Degree cap d for the bounded-degree preset.
    unsigned long d = 2;
};

HypothesisReport check_presets(const SequenceTable& table, Preset preset, const HypothesisConfig& cfg,
                               const PresetParams& params);

}  // namespace algdeg

#endif
