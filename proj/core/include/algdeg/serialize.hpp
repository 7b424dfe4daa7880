#ifndef ALGDEG_SERIALIZE_HPP
#define ALGDEG_SERIALIZE_HPP

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "algdeg/certify.hpp"
#include "algdeg/hypotheses.hpp"

namespace algdeg {

using Json = nlohmann::json;

/// Parses JSON text. Numbers that do not fit a 64-bit integer, and all
/// non-integer numbers, are kept as their source text (a JSON string), so
/// big integers and decimals survive exactly.
Json parse_json(std::string_view text);

/// Integers as decimal strings; any integral JSON number or string is read.
Json to_json(const mpz_class& z);
mpz_class mpz_from_json(const Json& j);
/// "p/q", integers and finite decimals ("0.9", "1e-3") are exact.
mpq_class parse_rational(std::string_view text);
mpq_class mpq_from_json(const Json& j);

/// Dyadics as their canonical exact strings ("m" or "m*2^e").
Json to_json(const Dyadic& d);
Dyadic dyadic_from_json(const Json& j);

/// [lo, hi]
Json to_json(const DyadicInterval& x);
DyadicInterval interval_from_json(const Json& j);
/// {re: [lo, hi], im: [lo, hi]}
Json to_json(const ComplexBox& b);
ComplexBox box_from_json(const Json& j);

/// Coefficient strings in ascending degree.
Json to_json(const IntPolynomial& p);
IntPolynomial poly_from_json(const Json& j);

/// {minpoly, box}; reading validates through AlgebraicNumber::make.
Json to_json(const AlgebraicNumber& a);
AlgebraicNumber number_from_json(const Json& j);

/// {K, N_max, entries: [{n, i, minpoly, box, b}]}.
Json to_json(const SequenceTable& t);
/// Accepts the object form or a bare array of integers (K = 1, b = 1).
SequenceTable table_from_json(const Json& j);

/// {lo, hi, unbounded_below, lo_decimal, hi_decimal}
Json to_json(const LogMagnitude& m);
Json to_json(const HypothesisReport& r);
Json to_json(const CertifyTrace& t);

/// Plain-text table of a report.
std::string format_report(const HypothesisReport& r);

}  // namespace algdeg

#endif
