#include "algdeg/serialize.hpp"

#include <cctype>
#include <sstream>

#include "algdeg/error.hpp"

namespace algdeg {

namespace {

/// DOM builder that keeps big and fractional numbers as their source text.
class ExactSax : public nlohmann::json_sax<Json> {
public:
    Json root;

    bool null() override { return put(nullptr); }
    bool boolean(bool v) override { return put(v); }
    bool number_integer(number_integer_t v) override { return put(v); }
    bool number_unsigned(number_unsigned_t v) override { return put(v); }
    bool number_float(number_float_t, const string_t& s) override { return put(s); }
    bool string(string_t& s) override { return put(s); }
    bool binary(binary_t&) override { throw PreconditionError("malformed JSON: binary values are not supported"); }
    bool start_object(std::size_t) override { return open(Json::object()); }
    bool key(string_t& k) override {
        key_ = k;
        return true;
    }
    bool end_object() override { return close(); }
    bool start_array(std::size_t) override { return open(Json::array()); }
    bool end_array() override { return close(); }
    bool parse_error(std::size_t, const std::string&, const nlohmann::detail::exception& ex) override {
        throw PreconditionError(std::string("malformed JSON: ") + ex.what());
    }

private:
    Json* slot(Json v) {
        if (stack_.empty()) {
            root = std::move(v);
            return &root;
        }
        Json& top = *stack_.back();
        if (top.is_array()) {
            top.push_back(std::move(v));
            return &top.back();
        }
        top[key_] = std::move(v);
        return &top[key_];
    }
    template <class V>
    bool put(V&& v) {
        slot(Json(std::forward<V>(v)));
        return true;
    }
    bool open(Json v) {
        stack_.push_back(slot(std::move(v)));
        return true;
    }
    bool close() {
        stack_.pop_back();
        return true;
    }

    std::vector<Json*> stack_;
    std::string key_;
};

std::string text_of(const Json& j, const char* what) {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_number_integer()) return j.dump();
    throw PreconditionError(std::string("expected ") + what + ", got " + j.dump());
}

const Json& field(const Json& j, const char* name) {
    if (!j.is_object() || !j.contains(name)) throw PreconditionError(std::string("missing field \"") + name + "\"");
    return j.at(name);
}

std::size_t index_from_json(const Json& j, const char* name) {
    mpz_class z = mpz_from_json(field(j, name));
    if (z < 1 || !z.fits_ulong_p()) throw PreconditionError(std::string("bad index ") + name);
    return z.get_ui();
}

}  // namespace

Json parse_json(std::string_view text) {
    ExactSax sax;
    Json::sax_parse(text.begin(), text.end(), &sax);
    return sax.root;
}

Json to_json(const mpz_class& z) { return z.get_str(); }

mpz_class mpz_from_json(const Json& j) {
    std::string s = text_of(j, "an integer");
    mpz_class z;
    std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (s.size() == start || s.find_first_not_of("0123456789", start) != std::string::npos)
        throw PreconditionError("not an integer: \"" + s + "\"");
    z.set_str(s[0] == '+' ? s.substr(1) : s, 10);
    return z;
}

mpq_class parse_rational(std::string_view text) {
    std::string s(text);
    auto bad = [&]() { return PreconditionError("not a rational number: \"" + s + "\""); };
    if (s.empty()) throw bad();
    if (auto slash = s.find('/'); slash != std::string::npos) {
        mpz_class p = mpz_from_json(s.substr(0, slash)), q = mpz_from_json(s.substr(slash + 1));
        if (q == 0) throw bad();
        mpq_class r(p, q);
        r.canonicalize();
        return r;
    }
    std::size_t k = 0;
    bool negative = false;
    if (s[k] == '-' || s[k] == '+') negative = s[k++] == '-';
    std::string digits;
    long exp10 = 0;
    bool seen = false, dot = false;
    for (; k < s.size(); ++k) {
        char c = s[k];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            digits += c;
            seen = true;
            if (dot) --exp10;
        } else if (c == '.' && !dot) {
            dot = true;
        } else {
            break;
        }
    }
    if (!seen) throw bad();
    if (k < s.size()) {
        if (s[k] != 'e' && s[k] != 'E') throw bad();
        try {
            std::size_t used = 0;
            exp10 += std::stol(s.substr(k + 1), &used);
            if (k + 1 + used != s.size()) throw bad();
        } catch (const std::logic_error&) {
            throw bad();
        }
    }
    mpq_class r(mpz_class(digits, 10));
    mpz_class p10;
    mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(exp10 < 0 ? -exp10 : exp10));
    if (exp10 < 0)
        r /= p10;
    else
        r *= p10;
    r.canonicalize();
    return negative ? mpq_class(-r) : r;
}

mpq_class mpq_from_json(const Json& j) { return parse_rational(text_of(j, "a rational number")); }

Json to_json(const Dyadic& d) { return d.to_string(); }

Dyadic dyadic_from_json(const Json& j) { return Dyadic::parse(text_of(j, "a dyadic number")); }

Json to_json(const DyadicInterval& x) { return Json::array({to_json(x.lo), to_json(x.hi)}); }

DyadicInterval interval_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2) throw PreconditionError("expected an interval [lo, hi], got " + j.dump());
    Dyadic lo = Dyadic::parse(text_of(j[0], "a number"), Round::down);
    Dyadic hi = Dyadic::parse(text_of(j[1], "a number"), Round::up);
    if (hi < lo) throw PreconditionError("interval with lo > hi");
    return {lo, hi};
}

Json to_json(const ComplexBox& b) { return {{"re", to_json(b.re)}, {"im", to_json(b.im)}}; }

ComplexBox box_from_json(const Json& j) {
    ComplexBox b{interval_from_json(field(j, "re")), DyadicInterval::point(Dyadic())};
    if (j.contains("im")) b.im = interval_from_json(j.at("im"));
    return b;
}

Json to_json(const IntPolynomial& p) {
    Json a = Json::array();
    for (const auto& c : p.coeffs()) a.push_back(to_json(c));
    return a;
}

IntPolynomial poly_from_json(const Json& j) {
    if (!j.is_array()) throw PreconditionError("a polynomial is an array of coefficients, got " + j.dump());
    std::vector<mpz_class> c;
    for (const auto& x : j) c.push_back(mpz_from_json(x));
    return IntPolynomial(std::move(c));
}

Json to_json(const AlgebraicNumber& a) { return {{"minpoly", to_json(a.minpoly())}, {"box", to_json(a.box())}}; }

AlgebraicNumber number_from_json(const Json& j) {
    return AlgebraicNumber::make(poly_from_json(field(j, "minpoly")), box_from_json(field(j, "box")));
}

Json to_json(const SequenceTable& t) {
    Json entries = Json::array();
    for (std::size_t n = 1; n <= t.N_max(); ++n)
        for (std::size_t i = 1; i <= t.K; ++i) {
            const SequenceEntry& e = t.at(n, i);
            Json x = to_json(e.alpha);
            x["n"] = n;
            x["i"] = i;
            x["b"] = to_json(e.b);
            entries.push_back(std::move(x));
        }
    return {{"K", t.K}, {"N_max", t.N_max()}, {"entries", std::move(entries)}};
}

SequenceTable table_from_json(const Json& j) {
    if (j.is_array()) {
        std::vector<mpz_class> a;
        for (const auto& x : j) a.push_back(mpz_from_json(x));
        SequenceTable t = SequenceTable::from_integers(a);
        t.validate();
        return t;
    }
    SequenceTable t;
    t.K = index_from_json(j, "K");
    const Json& entries = field(j, "entries");
    if (!entries.is_array()) throw PreconditionError("\"entries\" must be an array");
    std::size_t N = j.contains("N_max") ? index_from_json(j, "N_max") : 0;
    for (const auto& e : entries) N = std::max(N, index_from_json(e, "n"));
    std::vector<std::vector<std::optional<SequenceEntry>>> cells(N, std::vector<std::optional<SequenceEntry>>(t.K));
    for (const auto& e : entries) {
        const std::size_t n = index_from_json(e, "n"), i = index_from_json(e, "i");
        if (i > t.K) throw PreconditionError("entry index i exceeds K");
        if (j.contains("N_max") && n > index_from_json(j, "N_max")) throw PreconditionError("entry n exceeds N_max");
        auto& c = cells[n - 1][i - 1];
        if (c) throw PreconditionError("duplicate entry n = " + std::to_string(n) + ", i = " + std::to_string(i));
        c = SequenceEntry{number_from_json(e), e.contains("b") ? mpz_from_json(e.at("b")) : mpz_class(1)};
    }
    for (std::size_t n = 0; n < N; ++n) {
        std::vector<SequenceEntry> row;
        for (std::size_t i = 0; i < t.K; ++i) {
            if (!cells[n][i])
                throw PreconditionError("missing entry n = " + std::to_string(n + 1) + ", i = " + std::to_string(i + 1));
            row.push_back(*cells[n][i]);
        }
        t.rows.push_back(std::move(row));
    }
    t.validate();
    return t;
}

Json to_json(const LogMagnitude& m) {
    Json j = {{"hi", to_json(m.hi)}, {"hi_decimal", m.hi.to_decimal(17, Round::up)}, {"unbounded_below", m.unbounded_below}};
    if (m.unbounded_below) {
        j["lo"] = nullptr;
        j["lo_decimal"] = "-inf";
    } else {
        j["lo"] = to_json(m.lo);
        j["lo_decimal"] = m.lo.to_decimal(17, Round::down);
    }
    return j;
}

namespace {

Json interval_report(const DyadicInterval& x) {
    return {{"lo", to_json(x.lo)}, {"hi", to_json(x.hi)}, {"decimal", x.mid().to_decimal(17)}};
}

}  // namespace

Json to_json(const HypothesisReport& r) {
    Json checks = Json::array(), evidence = Json::array(), s = Json::array();
    for (const auto& c : r.checks)
        checks.push_back({{"condition", c.condition}, {"n", c.n}, {"i", c.i}, {"verdict", to_string(c.verdict)},
                          {"detail", c.detail}});
    for (const auto& e : r.evidence)
        evidence.push_back({{"condition", e.condition}, {"verdict", to_string(e.verdict)}, {"detail", e.detail}});
    for (const auto& x : r.s_trajectory) s.push_back(interval_report(x));
    Json j = {{"preset", r.preset}, {"N_max", r.N_max}, {"checks", std::move(checks)},
              {"evidence", std::move(evidence)}, {"s_trajectory", std::move(s)},
              {"failures", r.failures().size()}, {"all_finite_pass", r.all_finite_pass()}};
    j["tail_min"] = r.tail_min ? interval_report(*r.tail_min) : Json(nullptr);
    j["tail_max"] = r.tail_max ? interval_report(*r.tail_max) : Json(nullptr);
    return j;
}

Json to_json(const CertifyTrace& t) {
    Json entries = Json::array();
    for (const auto& e : t.entries)
        entries.push_back({{"N", e.N}, {"log2_gamma_tail", to_json(e.log2_gamma_tail)},
                           {"log2_bracket", to_json(e.log2_bracket)}, {"log2_phi", to_json(e.log2_phi)},
                           {"verdict", to_string(e.verdict)}, {"bits", e.bits}});
    CertifyReport rep = verdict(t);
    Json at = Json::array();
    for (auto n : rep.at) at.push_back(n);
    return {{"D", t.D}, {"entries", std::move(entries)},
            {"report", {{"evidence", rep.evidence}, {"at", std::move(at)}, {"message", rep.message}}}};
}

std::string format_report(const HypothesisReport& r) {
    std::ostringstream os;
    os << "preset: " << (r.preset.empty() ? "theorem4" : r.preset) << ", N_max = " << r.N_max << '\n';
    os << "condition                  n    i  verdict\n";
    for (const auto& c : r.checks) {
        std::string name = c.condition;
        name.resize(std::max<std::size_t>(name.size(), 24), ' ');
        os << name << ' ' << std::string(c.n < 10 ? 3 : c.n < 100 ? 2 : 1, ' ') << c.n << "  "
           << (c.i ? std::to_string(c.i) : std::string("-")) << "  " << to_string(c.verdict);
        if (!c.detail.empty()) os << "  (" << c.detail << ')';
        os << '\n';
    }
    os << "evidence:\n";
    for (const auto& e : r.evidence) {
        os << "  " << e.condition << ": " << to_string(e.verdict);
        if (!e.detail.empty()) os << "  (" << e.detail << ')';
        os << '\n';
    }
    os << "S_n:";
    for (const auto& x : r.s_trajectory) os << ' ' << x.mid().to_decimal(8);
    os << '\n';
    return os.str();
}

}  // namespace algdeg
