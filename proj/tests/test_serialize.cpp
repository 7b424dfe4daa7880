#include <gtest/gtest.h>

#include "algdeg/error.hpp"
#include "algdeg/factor.hpp"
#include "algdeg/rootbox.hpp"
#include "algdeg/sequences.hpp"
#include "algdeg/serialize.hpp"
#include "oracles.hpp"

using namespace algdeg;

TEST(Serialize, BigIntegersSurviveParsing) {
    mpz_class big;
    mpz_ui_pow_ui(big.get_mpz_t(), 3, 256);
    Json j = parse_json("[2, -7, " + big.get_str() + ", \"" + big.get_str() + "\"]");
    EXPECT_EQ(mpz_from_json(j[0]), 2);
    EXPECT_EQ(mpz_from_json(j[1]), -7);
    EXPECT_EQ(mpz_from_json(j[2]), big);
    EXPECT_EQ(mpz_from_json(j[3]), big);
    EXPECT_EQ(mpz_from_json(parse_json("18446744073709551615")), mpz_class("18446744073709551615"));
    EXPECT_THROW(mpz_from_json(parse_json("1.5")), PreconditionError);
    EXPECT_THROW(parse_json("[1, 2"), PreconditionError);
    EXPECT_THROW(parse_json("{\"a\": }"), PreconditionError);
}

TEST(Serialize, Rationals) {
    EXPECT_EQ(parse_rational("0.9"), mpq_class(9, 10));
    EXPECT_EQ(parse_rational("-3/6"), mpq_class(-1, 2));
    EXPECT_EQ(parse_rational("1e-3"), mpq_class(1, 1000));
    EXPECT_EQ(parse_rational("2.5E2"), mpq_class(250));
    EXPECT_EQ(parse_rational("7"), mpq_class(7));
    EXPECT_EQ(mpq_from_json(parse_json("0.1")), mpq_class(1, 10));
    for (const char* bad : {"", "x", "1/0", "1.2.3", "3e", "--1", "1/2/3"})
        EXPECT_THROW(parse_rational(bad), PreconditionError) << bad;
}

TEST(Serialize, PolynomialAndNumber) {
    IntPolynomial p({2, -4, 1});
    EXPECT_EQ(to_json(p).dump(), R"(["2","-4","1"])");
    EXPECT_EQ(poly_from_json(parse_json("[2, \"-4\", 1]")), p);
    auto a = quadratic_surd_family({mpz_class(2)}, 2).front();
    auto b = number_from_json(parse_json(to_json(a).dump()));
    EXPECT_EQ(b.minpoly(), a.minpoly());
    EXPECT_EQ(b.box(), a.box());
    // decimal box ends are rounded outward
    auto c = number_from_json(parse_json(R"({"minpoly": [2, -4, 1], "box": {"re": ["3.4", "3.5"]}})"));
    EXPECT_TRUE(c == a);
    EXPECT_THROW(number_from_json(parse_json(R"({"minpoly": [2, -4, 1], "box": {"re": ["0", "5"]}})")),
                 PreconditionError);
    EXPECT_THROW(number_from_json(parse_json(R"({"minpoly": [2, -4, 1]})")), PreconditionError);
    EXPECT_THROW(number_from_json(parse_json(R"({"minpoly": [-4, 0, 1], "box": {"re": ["1", "3"]}})")),
                 PreconditionError);
}

TEST(Serialize, TableRoundTrip) {
    auto surd = SequenceTable::from_numbers(quadratic_surd_family({2, 9, 16}, 3), {1, 2, 3});
    Json j = to_json(surd);
    EXPECT_EQ(j["K"], 1);
    EXPECT_EQ(j["N_max"], 3);
    auto back = table_from_json(parse_json(j.dump()));
    ASSERT_EQ(back.N_max(), 3u);
    for (std::size_t n = 1; n <= 3; ++n) {
        EXPECT_TRUE(back.at(n, 1).alpha == surd.at(n, 1).alpha);
        EXPECT_EQ(back.at(n, 1).b, surd.at(n, 1).b);
    }
    EXPECT_EQ(to_json(back).dump(), j.dump());

    auto ints = table_from_json(parse_json("[2, 3, 7, 43, 1807]"));
    EXPECT_EQ(ints.N_max(), 5u);
    EXPECT_EQ(*ints.at(5, 1).alpha.rational_value(), 1807);

    SequenceTable two;
    two.K = 2;
    two.rows.push_back({{AlgebraicNumber::from_integer(4), 1}, {AlgebraicNumber::from_integer(5), 7}});
    two.rows.push_back({{AlgebraicNumber::from_integer(9), 1}, {AlgebraicNumber::from_integer(11), 1}});
    Json tj = to_json(two);
    std::swap(tj["entries"][0], tj["entries"][3]);
    auto tb = table_from_json(parse_json(tj.dump()));
    EXPECT_EQ(tb.K, 2u);
    EXPECT_EQ(tb.at(1, 2).b, 7);
    EXPECT_EQ(*tb.at(2, 2).alpha.rational_value(), 11);

    Json missing = to_json(two);
    missing["entries"].erase(1);
    EXPECT_THROW(table_from_json(missing), PreconditionError);
    Json dup = to_json(two);
    dup["entries"][1]["i"] = 1;
    EXPECT_THROW(table_from_json(dup), PreconditionError);
    EXPECT_THROW(table_from_json(parse_json("[2, 0]")), PreconditionError);
    EXPECT_THROW(table_from_json(parse_json(R"({"entries": []})")), PreconditionError);
}

TEST(SerializeProperty, RandomNumbersRoundTrip) {
    oracle::Gen g(41);
    for (int t = 0; t < 60; ++t) {
        auto fs = factorize(IntPolynomial(g.poly(static_cast<int>(g.range(1, 4)), 20, true)));
        const IntPolynomial& f = fs[static_cast<std::size_t>(g.range(0, long(fs.size()) - 1))].poly;
        if (f.degree() < 1) continue;
        auto boxes = isolate_all_roots(f, Dyadic::pow2(-8));
        auto num = AlgebraicNumber::trusted(f, boxes[static_cast<std::size_t>(g.range(0, long(boxes.size()) - 1))]);
        auto back = number_from_json(parse_json(to_json(num).dump()));
        EXPECT_TRUE(back == num);
        EXPECT_TRUE(num.box().contains(back.box()));
    }
}

TEST(Serialize, ReportsAndTraces) {
    HypothesisConfig cfg;
    cfg.ds = DegreeList(4, 1);
    auto rep = check_theorem4(SequenceTable::from_integers({4, 9, 100, 5000}), cfg, 4, 1, 2);
    Json j = to_json(rep);
    EXPECT_EQ(j["N_max"], 4);
    EXPECT_EQ(j["checks"].size(), rep.checks.size());
    EXPECT_EQ(j["s_trajectory"].size(), 4u);
    EXPECT_EQ(j["all_finite_pass"], rep.all_finite_pass());
    auto txt = format_report(rep);
    EXPECT_NE(txt.find("a1n_large"), std::string::npos);
    EXPECT_NE(txt.find("S_n:"), std::string::npos);

    HypothesisConfig c;
    c.c = mpq_class(9, 10);
    c.ds = DegreeList(8, 1);
    c.betas = {1};
    auto lc = LinearCombination::make(SequenceTable::from_integers(sylvester(2, 8)), std::vector<mpz_class>{1});
    Json t = to_json(phi_trace(lc, c, 1, 3));
    EXPECT_EQ(t["entries"].size(), 3u);
    EXPECT_TRUE(t["entries"][0]["log2_phi"].contains("hi_decimal"));
    EXPECT_TRUE(t["report"].contains("message"));
    EXPECT_EQ(parse_json(t.dump()), parse_json(t.dump()));
}
