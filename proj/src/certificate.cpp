#include "padicforms/certificate.hpp"

#include "padicforms/parse.hpp"
#include "padicforms/quadform.hpp"

#include <climits>

namespace padicforms {

namespace {

std::string rat(const Rational& x) { return to_string(x); }
std::string txt(const QPoly& f) { return to_string(f); }

Rational get_rat(const Json& j, const char* key) { return parse_rational(j.at(key).get<std::string>()); }
QPoly get_poly(const Json& j, const char* key) { return parse_poly(j.at(key).get<std::string>()); }

std::optional<QPoly> get_field(const Json& j)
{
    if (!j.contains("field") || j.at("field").is_null()) return std::nullopt;
    return get_poly(j, "field");
}

Json fp_json(const FpPoly& f) { return Json(f.coeffs()); }
FpPoly fp_of(const Json& j, u64 p) { return FpPoly(p, j.get<std::vector<u64>>()); }

Json point(const PolygonPoint& q) { return Json::array({q.i, q.v}); }

Json valuation_json(long v) { return v == LONG_MAX ? Json("inf") : Json(v); }

// paths where two documents differ
void diff(const Json& a, const Json& b, const std::string& path, std::vector<std::string>& out)
{
    if (a.is_object() && b.is_object()) {
        for (auto it = a.begin(); it != a.end(); ++it) {
            if (!b.contains(it.key()))
                out.push_back(path + "/" + it.key() + " unexpected");
            else
                diff(it.value(), b.at(it.key()), path + "/" + it.key(), out);
        }
        for (auto it = b.begin(); it != b.end(); ++it)
            if (!a.contains(it.key())) out.push_back(path + "/" + it.key() + " missing");
        return;
    }
    if (a.is_array() && b.is_array() && a.size() == b.size()) {
        for (size_t k = 0; k < a.size(); ++k) diff(a[k], b[k], path + "/" + std::to_string(k), out);
        return;
    }
    if (a != b) out.push_back(path + " differs");
}

LocalField field_or_base(const std::optional<QPoly>& field, const PadicContext& ctx)
{
    return field ? LocalField::adjoin_root(ctx, field->monic()) : LocalField::base(ctx);
}

Json milnor_json(const MilnorVerdict& v)
{
    Json tests = Json::array();
    for (const auto& t : v.tests)
        tests.push_back({{"place", t.place}, {"q", t.q}, {"first_dim", t.first_dim}, {"second_dim", t.second_dim},
                         {"second_zero", t.second_zero}});
    return {{"isotropic", v.isotropic}, {"blocking", v.blocking ? Json(*v.blocking) : Json(nullptr)}, {"tests", tests}};
}

Json checks_json(const std::vector<SymbolCheck>& v)
{
    Json out = Json::array();
    for (const auto& c : v) out.push_back({{"name", c.name}, {"where", c.where}, {"lhs", c.lhs}, {"rhs", c.rhs}});
    return out;
}

Json factor_json(const SFactor& f)
{
    Json j = {{"block", f.block}, {"index", f.index}, {"poly", txt(f.poly)}, {"evidence", f.evidence}};
    if (f.odd) {
        const auto& w = *f.odd;
        j["odd"] = {{"A", w.A},       {"B", w.B},       {"G", w.G},         {"e_prime", w.e_prime},
                    {"samples", w.samples}, {"h", txt(w.h)}, {"a", txt(w.a)}, {"b", txt(w.b)},
                    {"q", txt(w.q)},  {"r", txt(w.r)},  {"c", txt(w.c)},    {"abar", fp_json(w.abar)},
                    {"bbar", fp_json(w.bbar)}, {"cbar", fp_json(w.cbar)}, {"q1bar", fp_json(w.q1bar)}};
    }
    if (f.even) {
        const auto& w = *f.even;
        Json margins = Json::array();
        for (const auto& [a, b] : w.margins) margins.push_back(Json::array({rat(a), rat(b)}));
        j["even"] = {{"A", w.A}, {"escalations", w.escalations}, {"p", txt(w.p)}, {"margins", margins}};
    }
    return j;
}

SFactor factor_of(const Json& j, u64 p)
{
    SFactor f{j.at("block").get<int>(), j.at("index").get<int>(), get_poly(j, "poly"), j.at("evidence").get<std::string>(),
              {}, {}};
    if (j.contains("odd")) {
        const Json& w = j.at("odd");
        f.odd = OddCaseWitness{w.at("A").get<long>(),       w.at("B").get<long>(),       w.at("G").get<long>(),
                               w.at("e_prime").get<int>(),  w.at("samples").get<long>(), get_poly(w, "h"),
                               get_poly(w, "a"),            get_poly(w, "b"),            get_poly(w, "q"),
                               get_poly(w, "r"),            get_poly(w, "c"),            fp_of(w.at("abar"), p),
                               fp_of(w.at("bbar"), p),      fp_of(w.at("cbar"), p),      fp_of(w.at("q1bar"), p)};
    }
    if (j.contains("even")) {
        const Json& w = j.at("even");
        EvenCaseWitness e{w.at("A").get<long>(), w.at("escalations").get<int>(), get_poly(w, "p"), {}};
        for (const auto& m : w.at("margins"))
            e.margins.emplace_back(parse_rational(m[0].get<std::string>()), parse_rational(m[1].get<std::string>()));
        f.even = e;
    }
    return f;
}

Json params_json(const ConstructionParams& P)
{
    Json blocks = Json::array();
    for (const auto& b : P.blocks) {
        Json fs = Json::array();
        for (const auto& f : b.factors) fs.push_back({{"poly", txt(f.poly)}, {"evidence", f.evidence}});
        blocks.push_back({{"slope", rat(b.slope)},
                          {"denominator", b.denominator},
                          {"degree", b.degree},
                          {"g", txt(b.g)},
                          {"exact", b.exact},
                          {"factors", fs}});
    }
    return {{"gamma", rat(P.gamma)}, {"input", txt(P.input)}, {"g", txt(P.g)},       {"epsilon", rat(P.epsilon)},
            {"pi_shift", P.pi_shift}, {"N", P.N},             {"digits", P.digits}, {"blocks", blocks}};
}

Json anisotropy_json(const AnisotropyCertificate& a)
{
    return {{"vt_f", a.vt_f},
            {"leading", rat(a.leading)},
            {"first_anisotropic", a.first_anisotropic},
            {"phi1_isotropic", a.phi1_isotropic},
            {"phi2_isotropic", a.phi2_isotropic},
            {"difference_nonzero", a.difference_nonzero},
            {"anisotropic_form", a.anisotropic_form}};
}

}  // namespace

Json certificate_header(const std::string& kind, const PadicContext& ctx)
{
    return {{"schema", kSchema},
            {"kind", kind},
            {"prime", ctx.p().get_si()},
            {"precision", ctx.precision()},
            {"uniformizer", rat(ctx.pi())}};
}

PadicContext context_of(const Json& cert)
{
    if (cert.value("schema", "") != kSchema) throw Error("SchemaError", "unknown certificate schema");
    return PadicContext(cert.at("prime").get<long>(), cert.at("precision").get<long>(), get_rat(cert, "uniformizer"));
}

Json certify_newton(const QPoly& f, const PadicContext& ctx)
{
    NewtonPolygon np = newton_polygon(f, ctx);
    Json j = certificate_header("newton", ctx);
    j["f"] = txt(f);
    Json pts = Json::array(), vs = Json::array(), es = Json::array();
    for (const auto& q : np.points) pts.push_back(point(q));
    for (const auto& q : np.vertices) vs.push_back(point(q));
    for (const auto& e : np.edges)
        es.push_back({{"start", point(e.start)},
                      {"end", point(e.end)},
                      {"slope", rat(e.slope)},
                      {"length", e.length()},
                      {"denominator", e.denominator()}});
    j["points"] = pts;
    j["vertices"] = vs;
    j["edges"] = es;
    j["all_vertices_even"] = np.all_vertices_even();
    return j;
}

Json certify_slopes(const QPoly& f, long digits, const PadicContext& ctx)
{
    SlopeFactorization sf = slope_factorization(f, digits, ctx);
    Json j = certificate_header("slopes", ctx);
    j["f"] = txt(f);
    j["digits"] = digits;
    j["unit"] = rat(sf.unit);
    Json fs = Json::array();
    for (const auto& s : sf.factors)
        fs.push_back({{"poly", txt(s.poly)},
                      {"slope", rat(s.slope)},
                      {"degree", s.degree},
                      {"denominator", s.denominator},
                      {"exact", s.exact}});
    j["factors"] = fs;
    j["residual_valuation"] = valuation_json(sf.residual_valuation);
    return j;
}

Json certify_squareclass(const QPoly& x, const std::optional<QPoly>& field, const PadicContext& ctx)
{
    Json j = certificate_header("squareclass", ctx);
    j["x"] = txt(x);
    j["field"] = field ? Json(txt(*field)) : Json(nullptr);
    if (!field) {
        if (x.degree() > 0) throw Error("DomainError", "a polynomial needs --field");
        j["representative"] = rat(qp::square_class(x[0], ctx));
        j["is_square"] = qp::is_square(x[0], ctx);
        return j;
    }
    LocalField L = field_or_base(field, ctx);
    LocalFieldElement e = L.element(x);
    SquareClassTag tag = square_class(e);
    j["valuation"] = rat(*valuation(e));
    j["parity"] = tag.parity;
    j["unit_bits"] = tag.unit_bits;
    j["is_square"] = is_square(e);
    return j;
}

Json certify_hilbert(const QPoly& a, const QPoly& b, const std::optional<QPoly>& field, const PadicContext& ctx)
{
    Json j = certificate_header("hilbert", ctx);
    j["a"] = txt(a);
    j["b"] = txt(b);
    j["field"] = field ? Json(txt(*field)) : Json(nullptr);
    LocalField L = field_or_base(field, ctx);
    j["value"] = hilbert_symbol(L.element(a), L.element(b));
    return j;
}

Json certify_isotropy(const std::vector<QPoly>& entries, const std::optional<QPoly>& field, const PadicContext& ctx)
{
    Json j = certificate_header("isotropy", ctx);
    Json es = Json::array();
    for (const auto& e : entries) es.push_back(txt(e));
    j["entries"] = es;
    j["field"] = field ? Json(txt(*field)) : Json(nullptr);
    LocalField L = field_or_base(field, ctx);
    std::vector<LocalFieldElement> xs;
    for (const auto& e : entries) xs.push_back(L.element(e));
    j["dimension"] = entries.size();
    j["hasse"] = hasse_invariant(xs);
    j["isotropic"] = isotropic_over_local(xs);
    return j;
}

Json certify_symbol(const SymbolRecord& rec, const PadicContext& ctx)
{
    Json j = certificate_header("symbol", ctx);
    j["p"] = txt(rec.p);
    j["q"] = txt(rec.q);
    j["evidence"] = rec.evidence;
    j["norm"] = rat(rec.norm);
    j["norm_route"] = rec.norm_route;
    j["native"] = rec.native ? Json(*rec.native) : Json(nullptr);
    j["value"] = rec.value;
    return j;
}

Json certify_multiplicativity(const QPoly& p, const QPoly& r, const QPoly& q, const PadicContext& ctx)
{
    auto m = check_multiplicativity(p, r, q, ctx);
    Json j = certificate_header("check-mult", ctx);
    j["p"] = txt(p);
    j["r"] = txt(r);
    j["q"] = txt(q);
    j["pr_q"] = m.pr;
    j["p_q"] = m.p;
    j["r_q"] = m.r;
    j["holds"] = m.holds();
    return j;
}

Json certify_reciprocity(const QPoly& p, const QPoly& q, const PadicContext& ctx)
{
    auto r = check_reciprocity(p, q, ctx);
    Json j = certificate_header("check-recip", ctx);
    j["p"] = txt(p);
    j["q"] = txt(q);
    j["p_q"] = r.pq;
    j["minus_one_t"] = r.minus_one_t;
    j["q_p"] = r.qp;
    j["deg_p"] = r.deg_p;
    j["deg_q"] = r.deg_q;
    j["holds"] = r.holds();
    return j;
}

Json certify_construction(const CorollaryResult& res)
{
    const ConstructionParams& P = res.construction.params;
    const ConstructionCertificate& c = res.construction.cert;
    Json j = certificate_header("construction", P.ctx);
    j["params"] = params_json(P);
    j["s"] = txt(c.s);
    Json fs = Json::array();
    for (const auto& f : c.factors) fs.push_back(factor_json(f));
    j["factors"] = fs;
    j["structural"] = c.structural;
    j["direct"] = checks_json(c.direct);
    j["derived"] = checks_json(c.derived);
    j["gamma_checks"] = checks_json(c.gamma);
    j["corollary"] = {{"form1", milnor_json(res.form1)}, {"form2", milnor_json(res.form2)}, {"isotropic", res.isotropic}};
    return j;
}

Json certify_predicate(const RatFunc& x, const Rational& gamma, const PredicateResult& res, const PadicContext& ctx)
{
    Json j = certificate_header("predicate", ctx);
    j["x"] = x.str();
    j["gamma"] = rat(gamma);
    j["value"] = res.value;
    j["h"] = {{"num", txt(res.h.num)}, {"den", txt(res.h.den)}};
    j["vt_h"] = res.vt_h;
    j["vinf_h"] = res.vinf_h;
    if (res.witness) {
        Json vs = Json::array();
        for (const auto& q : res.witness->polygon.vertices) vs.push_back(point(q));
        j["witness"] = {{"c", rat(res.witness->c)}, {"j", res.witness->j}, {"g", txt(res.witness->g)}, {"vertices", vs}};
    } else {
        j["witness"] = nullptr;
    }
    j["construction"] = {{"note", res.construction_note},
                         {"form1", res.form1 ? certify_construction(*res.form1) : Json(nullptr)},
                         {"form2", res.form2 ? certify_construction(*res.form2) : Json(nullptr)}};
    j["anisotropy"] = res.anisotropy ? anisotropy_json(*res.anisotropy) : Json(nullptr);
    return j;
}

Json certify_elliptic(const Rational& y, const HenselWitness& w, const PadicContext& ctx)
{
    Json j = certificate_header("elliptic-point", ctx);
    j["y"] = rat(y);
    j["x"] = rat(w.root);
    j["start"] = rat(w.start);
    j["slack"] = rat(w.slack);
    j["digits"] = w.digits;
    j["residual_valuation"] = valuation_json(w.residual_valuation);
    return j;
}

Json certify_corpus(const CorpusReport& rep, int max_degree, const PadicContext& ctx)
{
    Json j = certificate_header("corpus", ctx);
    j["law"] = law_name(rep.law);
    j["seed"] = rep.seed;
    j["max_degree"] = max_degree;
    j["cases"] = rep.cases;
    j["passes"] = rep.passes;
    Json rs = Json::array();
    for (const auto& c : rep.results)
        rs.push_back({{"inputs", c.inputs}, {"values", c.values}, {"pass", c.pass}, {"note", c.note}});
    j["results"] = rs;
    return j;
}

// ---- verification ----

namespace {

void verify_construction(const Json& cert, const PadicContext& ctx, VerifyReport& rep)
{
    const Json& pj = cert.at("params");
    const Rational gamma = get_rat(pj, "gamma");
    ConstructionParams P = prepare(gamma, get_poly(pj, "input"), ctx, pj.at("digits").get<long>());
    diff(pj, params_json(P), "/params", rep.problems);

    std::vector<SFactor> factors;
    for (const auto& f : cert.at("factors")) factors.push_back(factor_of(f, ctx.p_ui()));
    for (const auto& f : factors)
        for (auto& s : check_witness(P, f)) rep.problems.push_back(s);
    QPoly s(P.epsilon);
    for (const auto& f : factors) s = s * f.poly;
    if (s != get_poly(cert, "s")) rep.problems.push_back("s is not epsilon times the product of its factors");

    ConstructionCertificate c = evaluate_conditions(P, factors);
    if (!c.structural.empty())
        for (const auto& m : c.structural) rep.problems.push_back(m);
    diff(cert.at("direct"), checks_json(c.direct), "/direct", rep.problems);
    diff(cert.at("derived"), checks_json(c.derived), "/derived", rep.problems);
    diff(cert.at("gamma_checks"), checks_json(c.gamma), "/gamma_checks", rep.problems);
    if (!c.ok()) rep.problems.push_back("a recomputed condition fails");
    for (const auto& f : factors) {
        auto ev = irreducibility_evidence(f.poly, ctx);
        if (!ev || *ev != f.evidence) rep.problems.push_back("irreducibility evidence does not match");
    }
    CorollaryResult cor = corollary_from(ConstructionResult{P, c});
    Json cj = {{"form1", milnor_json(cor.form1)}, {"form2", milnor_json(cor.form2)}, {"isotropic", cor.isotropic}};
    diff(cert.at("corollary"), cj, "/corollary", rep.problems);
}

void verify_predicate(const Json& cert, const PadicContext& ctx, VerifyReport& rep)
{
    RatFunc x = parse_ratfunc(cert.at("x").get<std::string>());
    const Rational gamma = get_rat(cert, "gamma");
    validate_gamma(gamma, ctx);
    RatFunc h = h_of(x);
    if (txt(h.num) != cert.at("h").at("num") || txt(h.den) != cert.at("h").at("den"))
        rep.problems.push_back("h does not match x");
    if (h.vt() != cert.at("vt_h").get<int>() || h.vinf() != cert.at("vinf_h").get<int>())
        rep.problems.push_back("valuations of h do not match");
    const bool value = cert.at("value").get<bool>();
    if (value) {
        const Json& w = cert.at("witness");
        if (w.is_null()) {
            rep.problems.push_back("true verdict without a witness");
            return;
        }
        if (h.vt() != 0 || h.vinf() < -2) rep.problems.push_back("witness preconditions fail");
        const Rational c = get_rat(w, "c");
        if (c != ctx.pi_pow(-w.at("j").get<long>())) rep.problems.push_back("c is not pi^(-j)");
        QPoly g = h.num * h.den + QPoly::monomial(c, 2) * h.den * h.den;
        if (g != get_poly(w, "g")) rep.problems.push_back("g is not HN HD + c t^2 HD^2");
        NewtonPolygon np = newton_polygon(g, ctx);
        Json vs = Json::array();
        for (const auto& q : np.vertices) vs.push_back(point(q));
        diff(w.at("vertices"), vs, "/witness/vertices", rep.problems);
        if (!np.all_vertices_even()) rep.problems.push_back("a vertex of g has odd degree");
        const Json& cons = cert.at("construction");
        const QPoly targets[2] = {g, g * gamma};
        int k = 0;
        for (const char* key : {"form1", "form2"}) {
            const Json& sub = cons.at(key);
            const QPoly target = targets[k++];
            if (sub.is_null()) continue;
            VerifyReport r = verify_certificate(sub);
            for (const auto& m : r.problems) rep.problems.push_back(std::string(key) + ": " + m);
            const Json& sp = sub.at("params");
            if (get_rat(sp, "gamma") != gamma || get_poly(sp, "input") != target)
                rep.problems.push_back(std::string(key) + ": construction is for another form");
            if (!sub.at("corollary").at("isotropic").get<bool>())
                rep.problems.push_back(std::string(key) + ": construction does not certify isotropy");
        }
    } else {
        const Json& a = cert.at("anisotropy");
        if (a.is_null()) {
            rep.problems.push_back("false verdict without an anisotropy certificate");
            return;
        }
        // v_t(h) = 1 makes v_t(h + c t^2) = 1 for every c
        if (h.vt() != 1) rep.problems.push_back("v_t(h) is not 1");
        else diff(a, anisotropy_json(anisotropy_at_t(h, gamma, ctx)), "/anisotropy", rep.problems);
    }
}

}  // namespace

VerifyReport verify_certificate(const Json& cert)
{
    VerifyReport rep;
    try {
        rep.kind = cert.at("kind").get<std::string>();
        const PadicContext ctx = context_of(cert);
        const std::string& k = rep.kind;
        Json again;
        if (k == "newton") {
            again = certify_newton(get_poly(cert, "f"), ctx);
        } else if (k == "slopes") {
            again = certify_slopes(get_poly(cert, "f"), cert.at("digits").get<long>(), ctx);
            // the factorization itself, independently of the recorded residual
            QPoly prod(get_rat(cert, "unit"));
            for (const auto& f : cert.at("factors")) prod = prod * get_poly(f, "poly");
            QPoly err = prod - get_poly(cert, "f");
            long digits = cert.at("digits").get<long>();
            if (!err.is_zero() && min_coeff_valuation(err, ctx.p()) <= digits)
                rep.problems.push_back("factors do not reproduce f to the stated precision");
        } else if (k == "squareclass") {
            again = certify_squareclass(get_poly(cert, "x"), get_field(cert), ctx);
        } else if (k == "hilbert") {
            again = certify_hilbert(get_poly(cert, "a"), get_poly(cert, "b"), get_field(cert), ctx);
        } else if (k == "isotropy") {
            std::vector<QPoly> es;
            for (const auto& e : cert.at("entries")) es.push_back(parse_poly(e.get<std::string>()));
            again = certify_isotropy(es, get_field(cert), ctx);
        } else if (k == "symbol") {
            SymbolRecord rec = evaluate_symbol(get_poly(cert, "p"), get_poly(cert, "q"), ctx);
            again = certify_symbol(rec, ctx);
            if (rec.norm != get_rat(cert, "norm")) rep.problems.push_back("norm is not Res(q, p)");
        } else if (k == "check-mult") {
            again = certify_multiplicativity(get_poly(cert, "p"), get_poly(cert, "r"), get_poly(cert, "q"), ctx);
        } else if (k == "check-recip") {
            again = certify_reciprocity(get_poly(cert, "p"), get_poly(cert, "q"), ctx);
        } else if (k == "elliptic-point") {
            const Rational y = get_rat(cert, "y"), x = get_rat(cert, "x");
            const long digits = cert.at("digits").get<long>();
            if (y != 0 && ctx.v(y) <= 0) rep.problems.push_back("v(y) is not positive");
            if (x != 0 && ctx.v(x) < 0) rep.problems.push_back("x is not integral");
            Rational f = x * x * x - x - y * y;
            const long rv = f == 0 ? LONG_MAX : ctx.v(f);
            if (rv < digits) rep.problems.push_back("x^3 - x - y^2 is not small enough");
            if (valuation_json(rv) != cert.at("residual_valuation"))
                rep.problems.push_back("residual valuation does not match");
        } else if (k == "corpus") {
            auto law = parse_law(cert.at("law").get<std::string>());
            if (!law) throw Error("SchemaError", "unknown law");
            const int md = cert.at("max_degree").get<int>();
            again = certify_corpus(run_law_corpus(*law, ctx, cert.at("cases").get<int>(), cert.at("seed").get<std::uint64_t>(), md),
                                   md, ctx);
        } else if (k == "construction") {
            verify_construction(cert, ctx, rep);
        } else if (k == "predicate") {
            verify_predicate(cert, ctx, rep);
        } else {
            throw Error("SchemaError", "unknown certificate kind '" + k + "'");
        }
        if (!again.is_null()) diff(cert, again, "", rep.problems);
    } catch (const Error& e) {
        rep.problems.push_back(e.what());
    } catch (const Json::exception& e) {
        rep.problems.push_back(std::string("SchemaError: ") + e.what());
    }
    rep.valid = rep.problems.empty();
    return rep;
}

}  // namespace padicforms
