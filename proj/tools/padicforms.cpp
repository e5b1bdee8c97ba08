// padicforms: command-line front end to the library
#include "padicforms/certificate.hpp"
#include "padicforms/parse.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

using namespace padicforms;

namespace {

struct Globals {
    long prime = 3;
    long precision = 64;
    std::string uniformizer;
    std::uint64_t seed = 1;
    bool json = false;

    PadicContext ctx() const
    {
        std::optional<Rational> pi;
        if (!uniformizer.empty()) pi = parse_constant(uniformizer);
        return PadicContext(prime, precision, pi);
    }
};

std::string sym(int v) { return v > 0 ? "+1" : "-1"; }
std::string yes(bool b) { return b ? "yes" : "no"; }
std::string r(const Rational& x) { return to_short_string(x); }
std::string plain(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

std::optional<QPoly> field_of(const std::string& s)
{
    if (s.empty()) return std::nullopt;
    return parse_poly(s);
}

void print_milnor(const char* name, const Json& m)
{
    std::cout << name << ": " << (m["isotropic"].get<bool>() ? "zero in W(K(t))" : "not certified");
    if (!m["blocking"].is_null()) std::cout << " (second residue nonzero at place " << m["blocking"] << ")";
    std::cout << "\n";
}

void print_construction(const Json& j)
{
    const Json& P = j["params"];
    std::cout << "g = " << P["g"].get<std::string>() << "  (epsilon " << r(parse_rational(P["epsilon"])) << ", N "
              << P["N"] << ")\n";
    std::cout << "s = " << j["s"].get<std::string>() << "\n";
    for (const auto& f : j["factors"]) {
        std::cout << "  s[" << f["block"] << "," << f["index"] << "] = " << f["poly"].get<std::string>() << "  ["
                  << f["evidence"].get<std::string>() << "]";
        if (f.contains("odd")) std::cout << " odd case, e' = " << f["odd"]["e_prime"];
        if (f.contains("even")) std::cout << " even case, A = " << f["even"]["A"];
        std::cout << "\n";
    }
    for (const char* group : {"direct", "derived", "gamma_checks"})
        for (const auto& c : j[group])
            std::cout << "  " << c["name"].get<std::string>() << " " << c["where"].get<std::string>() << ": "
                      << sym(c["lhs"]) << " vs " << sym(c["rhs"]) << (c["lhs"] == c["rhs"] ? "" : "  FAILS") << "\n";
    for (const auto& m : j["structural"]) std::cout << "  structural: " << m.get<std::string>() << "\n";
    print_milnor("<1,pi><1,-gamma><1,-s>", j["corollary"]["form1"]);
    print_milnor("<1,pi><1,tg><1,-ts>", j["corollary"]["form2"]);
    std::cout << "<1,pi><1,-gamma,-t,-g> isotropic: " << yes(j["corollary"]["isotropic"]) << "\n";
}

bool construction_ok(const Json& j)
{
    if (!j["structural"].empty()) return false;
    for (const char* group : {"direct", "derived", "gamma_checks"})
        for (const auto& c : j[group])
            if (c["lhs"] != c["rhs"]) return false;
    return j["corollary"]["isotropic"].get<bool>();
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Quadratic forms and polynomial symbols over p-adic fields"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals G;
    if (const char* env = std::getenv("PADICFORMS_PRECISION")) G.precision = std::atol(env);
    app.add_option("--prime", G.prime, "residue characteristic p")->check(CLI::Range(2L, 1000003L));
    app.add_option("--precision", G.precision, "working p-adic digits")->check(CLI::PositiveNumber);
    app.add_option("--uniformizer", G.uniformizer, "fixed uniformizer of Q_p (default p)");
    app.add_option("--seed", G.seed, "random seed");
    app.add_flag("--json", G.json, "print a certificate");

    std::string a1, a2, a3, field, gamma_text;
    std::vector<std::string> entries;
    long digits = 40;
    int cases = 100, max_degree = 4, construct_degree = 6;

    auto* newton = app.add_subcommand("newton", "Newton polygon of f");
    newton->add_option("f", a1)->required();

    auto* slopes = app.add_subcommand("slopes", "slope factorization of f");
    slopes->add_option("f", a1)->required();
    slopes->add_option("--digits", digits, "p-adic digits of the factors");

    auto* squareclass = app.add_subcommand("squareclass", "square class of x, or of x(alpha) with --field");
    squareclass->add_option("x", a1)->required();
    squareclass->add_option("--field", field, "irreducible q; work in Q_p[t]/(q)");

    auto* hilbert = app.add_subcommand("hilbert", "Hilbert symbol (a, b)");
    hilbert->add_option("a", a1)->required();
    hilbert->add_option("b", a2)->required();
    hilbert->add_option("--field", field, "irreducible q; work in Q_p[t]/(q)");

    auto* symbol = app.add_subcommand("symbol", "polynomial symbol <p/q>");
    symbol->add_option("p", a1)->required();
    symbol->add_option("q", a2)->required();

    auto* mult = app.add_subcommand("check-mult", "<pr/q> = <p/q><r/q>");
    mult->add_option("p", a1)->required();
    mult->add_option("r", a2)->required();
    mult->add_option("q", a3)->required();

    auto* recip = app.add_subcommand("check-recip", "reciprocity for <p/q> and <q/p>");
    recip->add_option("p", a1)->required();
    recip->add_option("q", a2)->required();

    auto* isotropy = app.add_subcommand("isotropy", "isotropy of a diagonal form");
    isotropy->add_option("entries", entries)->required();
    isotropy->add_option("--field", field, "irreducible q; work in Q_p[t]/(q)");

    auto* construct = app.add_subcommand("construct-s", "build s for g and certify both Pfister forms");
    construct->add_option("g", a1)->required();
    construct->add_option("--gamma", gamma_text, "nonzero constant (default: the predicate's gamma)");
    construct->add_option("--digits", digits, "p-adic digits of the slope factors");

    auto* predicate = app.add_subcommand("predicate", "decide v_t(x) >= 0 through the form criterion");
    predicate->add_option("x", a1)->required();
    predicate->add_option("--gamma", gamma_text, "constant with (gamma, -pi) = -1");
    predicate->add_option("--construct-degree", construct_degree, "largest deg g given the full construction");

    auto* elliptic = app.add_subcommand("elliptic-point", "x with x^3 - x = y^2 for v(y) > 0");
    elliptic->add_option("y", a1)->required();
    elliptic->add_option("--digits", digits, "p-adic digits of x");

    auto* corpus = app.add_subcommand("corpus", "seeded corpus for one symbol law");
    corpus->add_option("law", a1, "check-mult, check-const, check-pi, check-recip or check-square")->required();
    corpus->add_option("--cases", cases)->check(CLI::PositiveNumber);
    corpus->add_option("--max-degree", max_degree)->check(CLI::Range(1, 8));

    auto* verify = app.add_subcommand("verify", "re-check a JSON certificate");
    verify->add_option("file", a1)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (verify->parsed()) {
            std::ifstream in(a1);
            if (!in) throw Error("IOError", "cannot read " + a1);
            Json cert;
            try {
                cert = Json::parse(in);
            } catch (const Json::exception& e) {
                throw Error("ParseError", e.what());
            }
            VerifyReport rep = verify_certificate(cert);
            if (G.json) {
                Json j = {{"schema", kSchema}, {"kind", "verify"}, {"certificate", rep.kind}, {"valid", rep.valid},
                          {"problems", rep.problems}};
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << rep.kind << " certificate: " << (rep.valid ? "valid" : "INVALID") << "\n";
                for (const auto& m : rep.problems) std::cout << "  " << m << "\n";
            }
            return rep.valid ? 0 : 1;
        }

        const PadicContext ctx = G.ctx();
        Json j;
        int code = 0;

        if (newton->parsed()) {
            j = certify_newton(parse_poly(a1), ctx);
            if (!G.json) {
                std::cout << j["edges"].size() << (j["edges"].size() == 1 ? " edge" : " edges") << "\n";
                for (const auto& e : j["edges"])
                    std::cout << "  slope " << r(parse_rational(e["slope"])) << "  from degree " << e["start"][0]
                              << " to " << e["end"][0] << "  (length " << e["length"] << ", denominator "
                              << e["denominator"] << ")\n";
                std::cout << "vertices:";
                for (const auto& v : j["vertices"]) std::cout << " (" << v[0] << "," << v[1] << ")";
                std::cout << "\n";
            }
        } else if (slopes->parsed()) {
            j = certify_slopes(parse_poly(a1), digits, ctx);
            if (!G.json) {
                std::cout << "unit " << r(parse_rational(j["unit"])) << "\n";
                for (const auto& f : j["factors"])
                    std::cout << "  slope " << r(parse_rational(f["slope"])) << ", degree " << f["degree"]
                              << (f["exact"].get<bool>() ? " (exact)" : "") << ": " << f["poly"].get<std::string>()
                              << "\n";
                std::cout << "residual valuation " << plain(j["residual_valuation"]) << "\n";
            }
        } else if (squareclass->parsed()) {
            j = certify_squareclass(parse_poly(a1), field_of(field), ctx);
            if (!G.json) {
                if (j.contains("representative"))
                    std::cout << "class of " << r(parse_rational(j["representative"])) << "\n";
                else {
                    std::cout << "valuation " << r(parse_rational(j["valuation"])) << ", parity " << j["parity"]
                              << ", unit class " << j["unit_bits"].dump() << "\n";
                }
                std::cout << "square: " << yes(j["is_square"]) << "\n";
            }
        } else if (hilbert->parsed()) {
            j = certify_hilbert(parse_poly(a1), parse_poly(a2), field_of(field), ctx);
            if (!G.json) std::cout << "(a, b) = " << sym(j["value"]) << "\n";
        } else if (symbol->parsed()) {
            j = certify_symbol(evaluate_symbol(parse_poly(a1), parse_poly(a2), ctx), ctx);
            if (!G.json) {
                std::cout << "<p/q> = " << sym(j["value"]) << "\n";
                std::cout << "  norm route " << sym(j["norm_route"]) << " (N = " << j["norm"].get<std::string>()
                          << ")";
                if (!j["native"].is_null()) std::cout << ", in K(alpha) " << sym(j["native"]);
                std::cout << "\n  q irreducible: " << j["evidence"].get<std::string>() << "\n";
            }
        } else if (mult->parsed()) {
            j = certify_multiplicativity(parse_poly(a1), parse_poly(a2), parse_poly(a3), ctx);
            if (!G.json)
                std::cout << "<pr/q> = " << sym(j["pr_q"]) << ", <p/q><r/q> = " << sym(j["p_q"]) << " * "
                          << sym(j["r_q"]) << ": " << (j["holds"].get<bool>() ? "holds" : "FAILS") << "\n";
            code = j["holds"].get<bool>() ? 0 : 1;
        } else if (recip->parsed()) {
            j = certify_reciprocity(parse_poly(a1), parse_poly(a2), ctx);
            if (!G.json)
                std::cout << "<p/q> = " << sym(j["p_q"]) << ", <q/p> = " << sym(j["q_p"]) << ", <-1/t> = "
                          << sym(j["minus_one_t"]) << ", degrees " << j["deg_p"] << "," << j["deg_q"] << ": "
                          << (j["holds"].get<bool>() ? "holds" : "FAILS") << "\n";
            code = j["holds"].get<bool>() ? 0 : 1;
        } else if (isotropy->parsed()) {
            std::vector<QPoly> es;
            for (const auto& e : entries) es.push_back(parse_poly(e));
            j = certify_isotropy(es, field_of(field), ctx);
            if (!G.json)
                std::cout << "dimension " << j["dimension"] << ", Hasse invariant " << sym(j["hasse"])
                          << (j["isotropic"].get<bool>() ? ": isotropic" : ": anisotropic") << "\n";
            code = j["isotropic"].get<bool>() ? 0 : 1;
        } else if (construct->parsed()) {
            // any nonzero gamma is allowed here; the predicate needs the anisotropic kind
            Rational gamma = gamma_text.empty() ? default_gamma(ctx) : parse_constant(gamma_text);
            ConstructionParams P = prepare(gamma, parse_poly(a1), ctx, digits);
            CorollaryResult res = corollary_from(construct_s(P, G.seed));
            j = certify_construction(res);
            if (!G.json) print_construction(j);
            code = construction_ok(j) ? 0 : 1;
        } else if (predicate->parsed()) {
            RatFunc x = parse_ratfunc(a1);
            Rational gamma = gamma_text.empty() ? default_gamma(ctx) : parse_constant(gamma_text);
            PredicateOptions opt;
            opt.seed = G.seed;
            opt.construct_degree = construct_degree;
            PredicateResult res = predicate_vt_nonneg(x, gamma, ctx, opt);
            j = certify_predicate(x, gamma, res, ctx);
            if (!G.json) {
                std::cout << "v_t(x) >= 0: " << (res.value ? "true" : "false") << "\n";
                std::cout << "h = " << res.h.str() << "  (v_t " << res.vt_h << ", v_inf " << res.vinf_h << ")\n";
                if (res.witness) {
                    std::cout << "c = " << r(res.witness->c) << ", g = " << to_string(res.witness->g) << "\n";
                    std::cout << "vertices:";
                    for (const auto& v : res.witness->polygon.vertices) std::cout << " (" << v.i << "," << v.v << ")";
                    std::cout << "\nconstruction: " << res.construction_note << "\n";
                }
                if (res.anisotropy)
                    std::cout << "form " << res.anisotropy->anisotropic_form
                              << " is anisotropic at t for every c (leading coefficient "
                              << r(res.anisotropy->leading) << ")\n";
            }
            code = res.value ? 0 : 1;
        } else if (elliptic->parsed()) {
            Rational y = parse_constant(a1);
            j = certify_elliptic(y, elliptic_constant_point(y, ctx, digits), ctx);
            if (!G.json)
                std::cout << "x = " << r(parse_rational(j["x"])) << "\nv(x^3 - x - y^2) = " << plain(j["residual_valuation"])
                          << "\n";
        } else if (corpus->parsed()) {
            auto law = parse_law(a1);
            if (!law) throw Error("UsageError", "unknown law '" + a1 + "'");
            CorpusReport rep = run_law_corpus(*law, ctx, cases, G.seed, max_degree);
            j = certify_corpus(rep, max_degree, ctx);
            if (!G.json) {
                std::cout << law_name(rep.law) << " over Q_" << rep.p << ", seed " << rep.seed << ": " << rep.passes
                          << "/" << rep.cases << " passed\n";
                for (size_t k = 0; k < rep.results.size(); ++k)
                    if (!rep.results[k].pass) {
                        std::cout << "  case " << k << " fails:";
                        for (const auto& s : rep.results[k].inputs) std::cout << " [" << s << "]";
                        if (!rep.results[k].note.empty()) std::cout << " " << rep.results[k].note;
                        std::cout << "\n";
                    }
            }
            code = rep.passes == rep.cases ? 0 : 1;
        }
        if (G.json) std::cout << j.dump(2) << "\n";
        return code;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
