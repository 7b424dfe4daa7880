#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "algdeg/bounds.hpp"
#include "algdeg/certify.hpp"
#include "algdeg/error.hpp"
#include "algdeg/hypotheses.hpp"
#include "algdeg/sequences.hpp"
#include "algdeg/serialize.hpp"

namespace algdeg::cli {

namespace {

struct Globals {
    long bits = 128;
    std::string rel_tol = "1e-20";
    std::uint64_t seed = 1;
};

std::string slurp(const std::string& where, std::istream& in) {
    if (!where.empty() && (where.front() == '[' || where.front() == '{')) return where;
    std::ostringstream os;
    if (where == "-") {
        os << in.rdbuf();
        return os.str();
    }
    std::ifstream f(where);
    if (!f) throw PreconditionError("cannot read " + where);
    os << f.rdbuf();
    return os.str();
}

/// JSON array or comma-separated list.
std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    if (!text.empty() && text.front() == '[') {
        Json j = parse_json(text);
        for (const auto& x : j) out.push_back(x.is_string() ? x.get<std::string>() : x.dump());
        return out;
    }
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) {
        item.erase(0, item.find_first_not_of(" \t"));
        item.erase(item.find_last_not_of(" \t") + 1);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

std::vector<mpz_class> integer_list(const std::string& text) {
    std::vector<mpz_class> out;
    for (const auto& s : split_list(text)) out.push_back(mpz_from_json(Json(s)));
    return out;
}

std::vector<mpq_class> rational_list(const std::string& text) {
    std::vector<mpq_class> out;
    for (const auto& s : split_list(text)) out.push_back(parse_rational(s));
    return out;
}

/// A single value is repeated to length n.
DegreeList degree_list(const std::string& text, std::size_t n) {
    DegreeList ds;
    for (const auto& z : integer_list(text)) {
        if (z < 1 || !z.fits_ulong_p()) throw PreconditionError("degrees must be positive");
        ds.push_back(z.get_ui());
    }
    if (ds.size() == 1 && n > 1) ds.assign(n, ds.front());
    return ds;
}

Dyadic rel_tol_of(const Globals& g) {
    mpq_class q = parse_rational(g.rel_tol);
    if (q <= 0) throw PreconditionError("--rel-tol must be positive");
    return from_mpq(q, 64, Round::down);
}

int digits_for(const Dyadic& rel_tol) {
    const double d = -std::log10(rel_tol.to_double());
    return std::max(6, std::min(60, static_cast<int>(d) + 2));
}

ComplexBox parse_box(const std::string& text) {
    if (!text.empty() && text.front() == '{') return box_from_json(parse_json(text));
    auto parts = split_list(text);
    if (parts.size() != 2 && parts.size() != 4)
        throw PreconditionError("--box takes JSON {re, im} or re_lo,re_hi[,im_lo,im_hi]");
    Json j = {{"re", {parts[0], parts[1]}}};
    if (parts.size() == 4) j["im"] = {parts[2], parts[3]};
    return box_from_json(j);
}

AlgebraicNumber parse_number(const std::string& minpoly, const std::string& box) {
    return AlgebraicNumber::make(poly_from_json(parse_json(minpoly)), parse_box(box));
}

ComplexBox parse_zeta(const std::string& text) {
    auto parts = split_list(text);
    if (parts.empty() || parts.size() > 2) throw PreconditionError("--zeta takes re or re,im");
    ComplexBox z{from_mpq(parse_rational(parts[0]), 256), DyadicInterval::point(Dyadic())};
    if (parts.size() == 2) z.im = from_mpq(parse_rational(parts[1]), 256);
    return z;
}

void print_interval(std::ostream& out, const std::string& name, const DyadicInterval& x, int digits) {
    out << name << " = [" << x.lo.to_string() << ", " << x.hi.to_string() << "]\n";
    out << name << " ~ " << x.mid().to_decimal(digits) << "  (in [" << x.lo.to_decimal(digits, Round::down) << ", "
        << x.hi.to_decimal(digits, Round::up) << "], " << digits << " digits)\n";
}

void print_log(std::ostream& out, const std::string& name, const LogMagnitude& m, int digits) {
    out << "log2 " << name << " = [" << (m.unbounded_below ? "-inf" : m.lo.to_string()) << ", " << m.hi.to_string()
        << "]\n";
    out << "log2 " << name << " ~ [" << (m.unbounded_below ? "-inf" : m.lo.to_decimal(digits, Round::down)) << ", "
        << m.hi.to_decimal(digits, Round::up) << "]\n";
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

struct NumberArgs {
    std::string minpoly, box;
};

void add_number_options(CLI::App* sc, NumberArgs& a) {
    sc->add_option("--minpoly", a.minpoly, "coefficients, ascending degree, JSON array")->required();
    sc->add_option("--box", a.box, "isolating box: JSON {re, im} or re_lo,re_hi[,im_lo,im_hi]")->required();
}

struct ConfigArgs {
    unsigned long D = 1;
    std::string a = "1/2", c = "3/4", eps = "1", zeta = "1", ds = "1";
    long max_bits = 1L << 14;
};

void add_config_options(CLI::App* sc, ConfigArgs& a) {
    sc->add_option("--D", a.D, "degree bound D")->check(CLI::PositiveNumber);
    sc->add_option("--a", a.a, "exponent a in (0, 1)");
    sc->add_option("--c", a.c, "exponent c in (a, 1)");
    sc->add_option("--eps", a.eps, "epsilon > 0");
    sc->add_option("--zeta", a.zeta, "unit complex number: re or re,im");
    sc->add_option("--ds", a.ds, "degrees d_n, one value or a list");
    sc->add_option("--max-bits", a.max_bits, "precision cap");
}

HypothesisConfig make_config(const ConfigArgs& a, const SequenceTable& t) {
    HypothesisConfig cfg;
    cfg.D = a.D;
    cfg.K = t.K;
    cfg.a = parse_rational(a.a);
    cfg.c = parse_rational(a.c);
    cfg.eps = parse_rational(a.eps);
    cfg.zeta = parse_zeta(a.zeta);
    cfg.ds = degree_list(a.ds, t.N_max());
    cfg.max_bits = a.max_bits;
    return cfg;
}

std::vector<TowerBase> make_pattern(const std::string& kind, std::size_t n, std::uint64_t seed) {
    if (kind == "alternating") return alternating_pattern(n);
    std::vector<TowerBase> p;
    if (kind == "hi-first") {
        for (std::size_t k = 0; k < n; ++k) p.push_back(k % 2 == 0 ? TowerBase::hi : TowerBase::lo);
        return p;
    }
    if (kind == "random") {
        std::mt19937_64 rng(seed);
        for (std::size_t k = 0; k < n; ++k) p.push_back(rng() & 1 ? TowerBase::hi : TowerBase::lo);
        return p;
    }
    // explicit string of l / h
    for (char ch : kind) {
        if (ch == 'l' || ch == 'L') p.push_back(TowerBase::lo);
        else if (ch == 'h' || ch == 'H') p.push_back(TowerBase::hi);
        else throw PreconditionError("--pattern is alternating, hi-first, random or a string of l/h");
    }
    if (p.size() != n) throw PreconditionError("--pattern length differs from --n");
    return p;
}

struct TowerArgs {
    std::string lo = "2", hi = "3", ds = "1", eps = "1", pattern = "alternating";
    std::size_t n = 5;
    unsigned long D = 1, K = 1;
};

void add_tower_options(CLI::App* sc, TowerArgs& a) {
    sc->add_option("--lo", a.lo, "lower base (dyadic)");
    sc->add_option("--hi", a.hi, "upper base (dyadic)");
    sc->add_option("--n", a.n, "length")->check(CLI::PositiveNumber);
    sc->add_option("--D", a.D, "D")->check(CLI::PositiveNumber);
    sc->add_option("--K", a.K, "K")->check(CLI::PositiveNumber);
    sc->add_option("--ds", a.ds, "degrees d_n, one value or a list");
    sc->add_option("--eps", a.eps, "growth epsilon to validate");
    sc->add_option("--pattern", a.pattern, "alternating, hi-first, random (uses --seed) or l/h string");
}

std::vector<mpz_class> build_tower(const TowerArgs& a, std::uint64_t seed) {
    return oscillating_tower(Dyadic::parse(a.lo), Dyadic::parse(a.hi), make_pattern(a.pattern, a.n, seed), a.D, a.K,
                             degree_list(a.ds, a.n), parse_rational(a.eps));
}

/// Plain JSON numbers; the loader keeps big ones exact.
void dump_integers(std::ostream& out, const std::vector<mpz_class>& v) {
    out << '[';
    for (std::size_t k = 0; k < v.size(); ++k) out << (k ? "," : "") << v[k].get_str();
    out << "]\n";
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Certified algebraic-number toolkit for degree bounds of series of algebraic numbers"};
    app.name("algdeg");
    app.require_subcommand(1);
    Globals g;
    app.add_option("--bits", g.bits, "starting working precision in bits")->check(CLI::Range(16L, 1L << 20));
    app.add_option("--rel-tol", g.rel_tol, "relative tolerance for measure enclosures");
    app.add_option("--seed", g.seed, "seed for randomized generators");
    std::string format = "text";

    NumberArgs num;
    auto* house_c = app.add_subcommand("house", "house (max conjugate modulus) of an algebraic number");
    auto* mahler_c = app.add_subcommand("mahler", "Mahler measure of an algebraic number");
    auto* height_c = app.add_subcommand("height", "absolute Weil height of an algebraic number");
    for (auto* sc : {house_c, mahler_c, height_c}) {
        add_number_options(sc, num);
        sc->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
    }

    NumberArgs na, nb;
    auto* sep_c = app.add_subcommand("sep", "Liouville-type separation check for two algebraic numbers");
    sep_c->add_option("--a-minpoly", na.minpoly, "first number's minimal polynomial")->required();
    sep_c->add_option("--a-box", na.box, "first number's box")->required();
    sep_c->add_option("--b-minpoly", nb.minpoly, "second number's minimal polynomial")->required();
    sep_c->add_option("--b-box", nb.box, "second number's box")->required();

    std::string aN, eps = "1";
    auto* tail_c = app.add_subcommand("tail-bound", "bound (2 + 1/eps) / a_N^{eps/(1+eps)} on sum_{n>=N} 1/a_n");
    tail_c->add_option("--aN", aN, "a_N (dyadic or decimal)")->required();
    tail_c->add_option("--eps", eps, "epsilon");

    unsigned long maxD = 3, maxK = 3, maxd = 3, maxN = 5;
    auto* sweep_c = app.add_subcommand("exponent-sweep", "exhaustive check of the tower exponent inequality");
    sweep_c->add_option("--max-D", maxD)->check(CLI::PositiveNumber);
    sweep_c->add_option("--max-K", maxK)->check(CLI::PositiveNumber);
    sweep_c->add_option("--max-d", maxd)->check(CLI::PositiveNumber);
    sweep_c->add_option("--max-N", maxN)->check(CLI::PositiveNumber);

    auto* gen_c = app.add_subcommand("gen", "generate example sequences");
    gen_c->require_subcommand(1);
    long a1 = 2;
    std::size_t syl_n = 5;
    auto* syl_c = gen_c->add_subcommand("sylvester", "a_{n+1} = a_n^2 - a_n + 1");
    syl_c->add_option("--a1", a1)->check(CLI::Range(2L, 1L << 30));
    syl_c->add_option("--n", syl_n)->check(CLI::PositiveNumber);
    TowerArgs tw;
    auto* tower_c = gen_c->add_subcommand("tower", "oscillating tower ceil(base^{D^n prod(K D_i + d_i)})");
    add_tower_options(tower_c, tw);
    TowerArgs stw;
    std::string surd_a, surd_r = "2", surd_b;
    auto* surd_c = gen_c->add_subcommand("surd", "alpha_n = a_n + sqrt r as a sequence table");
    surd_c->add_option("--r", surd_r, "squarefree r >= 2");
    surd_c->add_option("--a", surd_a, "a_n list; omitted: an oscillating tower from the tower options");
    surd_c->add_option("--b", surd_b, "b_n, one value or a list");
    add_tower_options(surd_c, stw);

    std::string table_src = "-", preset = "theorem4", A1 = "1", A2 = "2";
    unsigned long preset_d = 2;
    ConfigArgs cc;
    auto* check_c = app.add_subcommand("check", "check hypotheses on a sequence table");
    check_c->add_option("--table", table_src, "table JSON: file, '-' for stdin, or inline");
    check_c->add_option("--preset", preset, "theorem4, erdos_thm1, hancl_thm2, ak_thm3 or k1_thm5");
    check_c->add_option("--A1", A1, "claimed liminf of S_n");
    check_c->add_option("--A2", A2, "claimed limsup of S_n");
    check_c->add_option("--d", preset_d, "degree cap for ak_thm3")->check(CLI::PositiveNumber);
    check_c->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
    add_config_options(check_c, cc);

    std::string betas = "1", bracket = "canonical";
    std::size_t N_lo = 1, N_hi = 0;
    ConfigArgs ce;
    ce.c = "9/10";
    auto* cert_c = app.add_subcommand("certify", "log-domain trace of |gamma(N)| times the degree bracket");
    cert_c->add_option("--table", table_src, "table JSON: file, '-' for stdin, or inline");
    cert_c->add_option("--betas", betas, "K rational coefficients");
    cert_c->add_option("--N-lo", N_lo)->check(CLI::PositiveNumber);
    cert_c->add_option("--N-hi", N_hi, "default: one below the table length");
    cert_c->add_option("--bracket", bracket)->check(CLI::IsMember({"canonical", "late"}));
    cert_c->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json", "text"}));
    add_config_options(cert_c, ce);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 1;
    }

    try {
        const Dyadic tol = rel_tol_of(g);
        const int digits = digits_for(tol);
        if (*house_c || *mahler_c || *height_c) {
            AlgebraicNumber x = parse_number(num.minpoly, num.box);
            Json j = {{"number", to_json(x)}};
            if (*house_c) {
                DyadicInterval h = house(x, tol);
                if (format == "json") {
                    j["house"] = to_json(h);
                    j["decimal"] = h.mid().to_decimal(digits);
                    emit(out, j);
                } else {
                    print_interval(out, "house", h, digits);
                }
            } else {
                LogMagnitude m = *mahler_c ? mahler_measure(x, tol) : weil_height(x, tol);
                const std::string name = *mahler_c ? "M" : "H";
                DyadicInterval v = m.value(std::max<long>(64, g.bits));
                if (format == "json") {
                    j["log2_" + name] = to_json(m);
                    j[name] = to_json(v);
                    j["decimal"] = v.mid().to_decimal(digits);
                    emit(out, j);
                } else {
                    print_log(out, name, m, digits);
                    print_interval(out, name, v, digits);
                }
            }
        } else if (*sep_c) {
            AlgebraicNumber a = parse_number(na.minpoly, na.box), b = parse_number(nb.minpoly, nb.box);
            SeparationCheck s = check_separation(a, b, tol);
            print_log(out, "|a - b|", s.distance, digits);
            print_log(out, "bound", s.bound, digits);
            print_log(out, "margin", s.margin, digits);
            out << "separation " << (s.ok ? "ok" : "VIOLATED") << '\n';
            return s.ok ? 0 : 1;
        } else if (*tail_c) {
            Dyadic a = Dyadic::parse(aN, Round::down, std::max<long>(64, g.bits));
            print_interval(out, "tail_bound", erdos_tail_bound(a, parse_rational(eps), g.bits), digits);
        } else if (*sweep_c) {
            SweepResult r = exponent_sweep(maxD, maxK, maxd, maxN);
            out << r.cases << " cases, " << r.violations.size() << " violations\n";
        } else if (*syl_c) {
            dump_integers(out, sylvester(a1, syl_n));
        } else if (*tower_c) {
            dump_integers(out, build_tower(tw, g.seed));
        } else if (*surd_c) {
            std::vector<mpz_class> a = surd_a.empty() ? build_tower(stw, g.seed) : integer_list(surd_a);
            std::vector<mpz_class> b;
            if (!surd_b.empty()) {
                b = integer_list(surd_b);
                if (b.size() == 1) b.assign(a.size(), b.front());
            }
            emit(out, to_json(SequenceTable::from_numbers(quadratic_surd_family(a, mpz_class(surd_r)), b)));
        } else if (*check_c) {
            SequenceTable t = table_from_json(parse_json(slurp(table_src, in)));
            HypothesisConfig cfg = make_config(cc, t);
            HypothesisReport r;
            if (preset == "theorem4") {
                r = check_theorem4(t, cfg, t.N_max(), parse_rational(A1), parse_rational(A2));
            } else {
                r = check_presets(t, parse_preset(preset), cfg, {parse_rational(A1), parse_rational(A2), preset_d});
            }
            if (format == "json")
                emit(out, to_json(r));
            else
                out << format_report(r);
            for (const auto& c : r.checks)
                if (c.verdict == Verdict::undetermined) return 2;
        } else if (*cert_c) {
            SequenceTable t = table_from_json(parse_json(slurp(table_src, in)));
            HypothesisConfig cfg = make_config(ce, t);
            LinearCombination lc = LinearCombination::make(t, rational_list(betas));
            cfg.betas = lc.betas;
            if (N_hi == 0) N_hi = t.N_max() - 1;
            CertifyTrace tr = phi_trace(lc, cfg, N_lo, N_hi, g.bits,
                                        bracket == "late" ? BracketForm::late : BracketForm::canonical);
            if (format == "json") {
                emit(out, to_json(tr));
            } else {
                out << tr.to_csv();
                err << verdict(tr).message << '\n';
            }
            for (const auto& e : tr.entries)
                if (e.verdict == PhiVerdict::undetermined) return 2;
        }
    } catch (const Undetermined& e) {
        err << "undetermined: " << e.what() << '\n';
        return 2;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const nlohmann::json::exception& e) {
        err << "error: malformed JSON: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

}  // namespace algdeg::cli
