// Python bindings: every operation takes polynomial text and returns the JSON certificate as a string.
#include "padicforms/certificate.hpp"
#include "padicforms/parse.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace padicforms;

namespace {

PadicContext context(long prime, long precision, const std::optional<std::string>& uniformizer)
{
    std::optional<Rational> pi;
    if (uniformizer) pi = parse_constant(*uniformizer);
    return PadicContext(prime, precision, pi);
}

std::optional<QPoly> field_of(const std::optional<std::string>& s)
{
    if (!s) return std::nullopt;
    return parse_poly(*s);
}

Rational gamma_of(const std::optional<std::string>& s, const PadicContext& ctx)
{
    return s ? parse_constant(*s) : default_gamma(ctx);
}

}  // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Quadratic forms and polynomial symbols over p-adic fields";

    py::object base = py::module_::import("builtins").attr("ValueError");
    auto& error = py::register_exception<Error>(m, "Error", base);
    // translators run newest first, so the subclass is registered last
    py::register_exception<ParseError>(m, "ParseError", error);

    m.attr("SCHEMA") = kSchema;

    m.def("parse_poly", [](const std::string& text) {
        std::vector<std::string> out;
        QPoly f = parse_poly(text);
        for (int i = 0; i <= f.degree(); ++i) out.push_back(to_string(f[i]));
        return out;
    }, py::arg("text"), "coefficients in ascending degree as \"num/den\" strings");
    m.def("format_poly", [](const std::string& text) { return to_string(parse_poly(text)); }, py::arg("text"));

#define CTX_ARGS py::kw_only(), py::arg("prime"), py::arg("precision") = 64, py::arg("uniformizer") = py::none()

    m.def("newton", [](const std::string& f, long p, long prec, std::optional<std::string> u) {
        return certify_newton(parse_poly(f), context(p, prec, u)).dump();
    }, py::arg("f"), CTX_ARGS);

    m.def("slopes", [](const std::string& f, long digits, long p, long prec, std::optional<std::string> u) {
        return certify_slopes(parse_poly(f), digits, context(p, prec, u)).dump();
    }, py::arg("f"), py::arg("digits") = 40, CTX_ARGS);

    m.def("squareclass", [](const std::string& x, std::optional<std::string> field, long p, long prec,
                            std::optional<std::string> u) {
        return certify_squareclass(parse_poly(x), field_of(field), context(p, prec, u)).dump();
    }, py::arg("x"), py::arg("field") = py::none(), CTX_ARGS);

    m.def("hilbert", [](const std::string& a, const std::string& b, std::optional<std::string> field, long p,
                        long prec, std::optional<std::string> u) {
        return certify_hilbert(parse_poly(a), parse_poly(b), field_of(field), context(p, prec, u)).dump();
    }, py::arg("a"), py::arg("b"), py::arg("field") = py::none(), CTX_ARGS);

    m.def("symbol", [](const std::string& a, const std::string& q, long p, long prec, std::optional<std::string> u) {
        PadicContext ctx = context(p, prec, u);
        return certify_symbol(evaluate_symbol(parse_poly(a), parse_poly(q), ctx), ctx).dump();
    }, py::arg("p"), py::arg("q"), CTX_ARGS);

    m.def("check_mult", [](const std::string& a, const std::string& r, const std::string& q, long p, long prec,
                           std::optional<std::string> u) {
        return certify_multiplicativity(parse_poly(a), parse_poly(r), parse_poly(q), context(p, prec, u)).dump();
    }, py::arg("p"), py::arg("r"), py::arg("q"), CTX_ARGS);

    m.def("check_recip", [](const std::string& a, const std::string& q, long p, long prec,
                            std::optional<std::string> u) {
        return certify_reciprocity(parse_poly(a), parse_poly(q), context(p, prec, u)).dump();
    }, py::arg("p"), py::arg("q"), CTX_ARGS);

    m.def("isotropy", [](const std::vector<std::string>& entries, std::optional<std::string> field, long p, long prec,
                         std::optional<std::string> u) {
        std::vector<QPoly> es;
        for (const auto& e : entries) es.push_back(parse_poly(e));
        return certify_isotropy(es, field_of(field), context(p, prec, u)).dump();
    }, py::arg("entries"), py::arg("field") = py::none(), CTX_ARGS);

    m.def("construct_s", [](const std::string& g, std::optional<std::string> gamma, std::uint64_t seed, long digits,
                            long p, long prec, std::optional<std::string> u) {
        PadicContext ctx = context(p, prec, u);
        ConstructionParams P = prepare(gamma_of(gamma, ctx), parse_poly(g), ctx, digits);
        py::gil_scoped_release release;
        return certify_construction(corollary_from(construct_s(P, seed))).dump();
    }, py::arg("g"), py::arg("gamma") = py::none(), py::arg("seed") = 1, py::arg("digits") = 40, CTX_ARGS);

    m.def("predicate", [](const std::string& x, std::optional<std::string> gamma, std::uint64_t seed,
                          int construct_degree, long p, long prec, std::optional<std::string> u) {
        PadicContext ctx = context(p, prec, u);
        RatFunc rx = parse_ratfunc(x);
        Rational g = gamma_of(gamma, ctx);
        PredicateOptions opt;
        opt.seed = seed;
        opt.construct_degree = construct_degree;
        py::gil_scoped_release release;
        return certify_predicate(rx, g, predicate_vt_nonneg(rx, g, ctx, opt), ctx).dump();
    }, py::arg("x"), py::arg("gamma") = py::none(), py::arg("seed") = 1, py::arg("construct_degree") = 6, CTX_ARGS);

    m.def("elliptic_point", [](const std::string& y, long digits, long p, long prec, std::optional<std::string> u) {
        PadicContext ctx = context(p, prec, u);
        Rational yy = parse_constant(y);
        return certify_elliptic(yy, elliptic_constant_point(yy, ctx, digits), ctx).dump();
    }, py::arg("y"), py::arg("digits") = 40, CTX_ARGS);

    m.def("corpus", [](const std::string& law, int cases, std::uint64_t seed, int max_degree, long p, long prec,
                       std::optional<std::string> u) {
        auto l = parse_law(law);
        if (!l) throw Error("UsageError", "unknown law '" + law + "'");
        PadicContext ctx = context(p, prec, u);
        py::gil_scoped_release release;
        return certify_corpus(run_law_corpus(*l, ctx, cases, seed, max_degree), max_degree, ctx).dump();
    }, py::arg("law"), py::arg("cases") = 100, py::arg("seed") = 1, py::arg("max_degree") = 4, CTX_ARGS);

    m.def("verify", [](const std::string& cert) {
        Json j;
        try {
            j = Json::parse(cert);
        } catch (const Json::exception& e) {
            throw Error("ParseError", e.what());
        }
        VerifyReport r = verify_certificate(j);
        return Json{{"valid", r.valid}, {"kind", r.kind}, {"problems", r.problems}}.dump();
    }, py::arg("certificate"));

#undef CTX_ARGS
}
