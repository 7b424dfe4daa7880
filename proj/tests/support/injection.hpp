#ifndef ALGDEG_TEST_INJECTION_HPP
#define ALGDEG_TEST_INJECTION_HPP

// A K = 2 table that meets every finite Theorem 4 condition, and variants
// that break exactly one condition at exactly one index.

#include <string>
#include <vector>

#include "algdeg/hypotheses.hpp"
#include "algdeg/rootbox.hpp"
#include "algdeg/sequences.hpp"

namespace injection {

using namespace algdeg;

struct Case {
    std::string condition;
    std::size_t n;
    std::size_t i;  // 0 for whole-row conditions
    SequenceTable table;
    HypothesisConfig cfg;
};

inline AlgebraicNumber surd(long a, long r) { return quadratic_surd_family({mpz_class(a)}, r).front(); }

inline HypothesisConfig base_config() {
    HypothesisConfig c;
    c.D = 1;
    c.K = 2;
    c.ds = DegreeList(5, 4);
    return c;
}

inline SequenceTable base_table() {
    SequenceTable t;
    t.K = 2;
    for (long a : {2L, 5L, 20L, 100L, 500L}) t.rows.push_back({{surd(a, 2), 1}, {surd(a, 3), 1}});
    return t;
}

inline std::vector<Case> cases() {
    std::vector<Case> out;
    auto add = [&](std::string cond, std::size_t n, std::size_t i, auto&& edit) {
        Case c{std::move(cond), n, i, base_table(), base_config()};
        edit(c);
        out.push_back(std::move(c));
    };
    // |alpha_{1,4}| drops below |alpha_{1,3}|; row 2 follows to keep the ratio bound
    add("increase", 3, 0, [](Case& c) {
        c.table.rows[3] = {{surd(15, 2), 1}, {surd(15, 3), 1}};
    });
    // |alpha_{1,3}| = 7 + sqrt 2 < 3^2
    add("a1n_large", 3, 0, [](Case& c) {
        c.table.rows[2] = {{surd(7, 2), 1}, {surd(7, 3), 1}};
    });
    // Q(sqrt 2, sqrt 3) has degree 4 > 3
    add("deg_bound", 2, 0, [](Case& c) { c.cfg.ds[1] = 3; });
    // alpha_{2,4} ten times larger than alpha_{1,4}
    add("house_ain_bound", 4, 2, [](Case& c) { c.table.rows[3][1].alpha = surd(1000, 3); });
    // b_{1,2} far above 2^{L^a}
    add("house", 2, 1, [](Case& c) { c.table.rows[1][0].b = 100; });
    // alpha_{2,5} negated: same modulus, Re(1/alpha) < 0
    add("rezeta", 5, 2, [](Case& c) { c.table.rows[4][1].alpha = neg(c.table.rows[4][1].alpha); });
    return out;
}

}  // namespace injection

#endif
