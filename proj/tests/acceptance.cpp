// Acceptance runner: one PASS/FAIL line per criterion.
//   acceptance [--known-red N]... [--report FILE] [criterion ids]
// Exit status is 0 when every selected criterion passes, or fails only where
// listed with --known-red.

#include "fixtures.hpp"
#include "oracles.hpp"
#include "padicforms/certificate.hpp"
#include "padicforms/parse.hpp"

#include <chrono>
#include <climits>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

using namespace padicforms;
using fixture::P;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
    bool pass = true;
    std::vector<std::string> lines;
    void note(const std::string& s) { lines.push_back(s); }
    void require(bool ok, const std::string& what)
    {
        if (!ok) {
            pass = false;
            note("failed: " + what);
        }
    }
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt_secs(double s)
{
    std::ostringstream os;
    os.precision(3);
    os << s << " s";
    return os.str();
}

Outcome hilbert_tables()
{
    Outcome out;
    auto t0 = Clock::now();
    for (long p : {2L, 3L, 5L}) {
        PadicContext ctx(p);
        auto reps = qp::square_class_reps(ctx);
        int mismatches = 0;
        for (const auto& a : reps)
            for (const auto& b : reps) {
                int ours = qp::hilbert_symbol(a, b, ctx);
                int native = hilbert_symbol(LocalField::base(ctx).element(a), LocalField::base(ctx).element(b));
                int ref = oracle::conic(a.get_num().get_si(), b.get_num().get_si(), p);
                if (ours != ref || native != ref) ++mismatches;
            }
        out.note("p = " + std::to_string(p) + ": " + std::to_string(reps.size()) + "x" + std::to_string(reps.size()) +
                 " table, " + std::to_string(mismatches) + " mismatches");
        out.require(mismatches == 0, "table for p = " + std::to_string(p));
    }
    double s = seconds_since(t0);
    out.note("runtime " + fmt_secs(s));
    out.require(s < 60, "runtime");
    return out;
}

Outcome symbol_laws()
{
    Outcome out;
    auto t0 = Clock::now();
    for (Law law : {Law::Multiplicativity, Law::Constant, Law::PiInvariance, Law::Reciprocity})
        for (long p : {2L, 3L, 5L}) {
            auto rep = run_law_corpus(law, PadicContext(p), 100, 2024, 4);
            out.note(law_name(law) + " p = " + std::to_string(p) + ": " + std::to_string(rep.passes) + "/100");
            out.require(rep.passes == 100 && rep.cases == 100, law_name(law) + " p = " + std::to_string(p));
        }
    for (long p : {3L, 5L}) {
        auto rep = run_law_corpus(Law::SquareCriterion, PadicContext(p), 100, 2024, 4);
        std::map<std::string, int> tally;
        for (const auto& c : rep.results) {
            const bool integral = c.note.find("not integral") == std::string::npos;
            const bool even_e = c.note.rfind("e=", 0) == 0 && std::stoi(c.note.substr(2)) % 2 == 0;
            std::string key = std::string(c.pass ? "agree" : "differ") + (even_e ? ", even e" : ", odd e") +
                              (integral ? "" : ", v not integral");
            ++tally[key];
        }
        out.note("check-square p = " + std::to_string(p) + ": " + std::to_string(rep.passes) + "/100");
        for (const auto& [k, n] : tally) out.note("  " + k + ": " + std::to_string(n));
        // every disagreement sits in an extension of even ramification or at a non-integral valuation
        bool explained = true;
        for (const auto& [k, n] : tally)
            if (k == "differ, odd e") explained = false;
        out.note(std::string("  all disagreements have even e or non-integral v: ") + (explained ? "yes" : "no"));
        out.require(rep.passes == 100, "square criterion p = " + std::to_string(p));
    }
    double s = seconds_since(t0);
    out.note("runtime " + fmt_secs(s));
    out.require(s < 300, "runtime");
    return out;
}

Outcome newton_machinery()
{
    Outcome out;
    std::mt19937_64 rng(31);
    int ok = 0;
    long worst = LONG_MAX;
    for (int k = 0; k < 100; ++k) {
        long p = std::vector<long>{2, 3, 5}[k % 3];
        PadicContext ctx(p);
        QPoly f = fixture::random_polynomial(rng, p, 6);
        auto sf = slope_factorization(f, 41, ctx);
        auto np = newton_polygon(f, ctx);
        bool good = sf.residual_valuation > 40 && sf.factors.size() == np.edges.size();
        for (size_t i = 0; good && i < sf.factors.size(); ++i)
            good = sf.factors[i].slope == np.edges[i].slope && newton_polygon(sf.factors[i].poly, ctx).one_edge();
        worst = std::min(worst, sf.residual_valuation);
        ok += good;
    }
    out.note("slope factorization round trip: " + std::to_string(ok) + "/100, smallest residual valuation " +
             (worst == LONG_MAX ? std::string("inf") : std::to_string(worst)));
    out.require(ok == 100, "round trip");
    int agree = 0;
    for (int k = 0; k < 100; ++k) {
        long p = std::vector<long>{2, 3, 5, 7}[k % 4];
        PadicContext ctx(p);
        auto inst = fixture::random_one_edge(rng, p);
        agree += square_class_at_root_one_edge(inst.f, inst.dec, inst.alpha, ctx) ==
                 qp::square_class(inst.f.eval(inst.alpha), ctx);
    }
    out.note("one-edge square class: " + std::to_string(agree) + "/100");
    out.require(agree == 100, "one-edge square class");
    return out;
}

Outcome constructions()
{
    Outcome out;
    int odd = 0, even = 0;
    for (const auto& in : fixture::hand_picked()) {
        PadicContext ctx(in.p);
        auto t0 = Clock::now();
        std::string label = to_string(in.g) + " over Q_" + std::to_string(in.p);
        try {
            ConstructionParams params = prepare(default_gamma(ctx), in.g, ctx);
            ConstructionResult r = construct_s(params, 1);
            verify_conditions(r.params, r.cert.factors);
            CorollaryResult cor = corollary_from(r);
            VerifyReport vr = verify_certificate(certify_construction(cor));
            double s = seconds_since(t0);
            bool good = cor.form1.isotropic && cor.form2.isotropic && cor.isotropic && vr.valid && s < 120;
            (in.odd_denominators ? odd : even) += good;
            out.note(label + ": s = " + to_string(r.cert.s) + ", " + (good ? "verified" : "NOT verified") + ", " +
                     fmt_secs(s));
            out.require(good, label);
        } catch (const Error& e) {
            out.note(label + ": " + e.what());
            out.require(false, label);
        }
    }
    out.note("odd-denominator instances " + std::to_string(odd) + ", even-denominator instances " +
             std::to_string(even));
    out.require(odd >= 5 && even >= 5, "five per parity");
    return out;
}

Outcome predicate_agreement()
{
    Outcome out;
    std::mt19937_64 rng(99);
    auto t0 = Clock::now();
    int agree = 0, certified = 0, constructed = 0, trues = 0;
    std::map<std::string, int> notes;
    int max_deg_g = 0;
    for (int k = 0; k < 200; ++k) {
        long p = std::vector<long>{2, 3, 5}[k % 3];
        PadicContext ctx(p);
        RatFunc x = fixture::random_ratfunc(rng, 4);
        Rational gamma = default_gamma(ctx);
        try {
            PredicateResult r = predicate_vt_nonneg(x, gamma, ctx);
            agree += r.value == (x.vt() >= 0);
            trues += r.value;
            constructed += r.form1.has_value();
            if (r.witness) {
                max_deg_g = std::max(max_deg_g, r.witness->g.degree());
                ++notes[r.construction_note.substr(0, r.construction_note.find(':'))];
            }
            VerifyReport vr = verify_certificate(certify_predicate(x, gamma, r, ctx));
            bool shape = r.value ? (r.witness && r.witness->polygon.all_vertices_even()) : r.anisotropy.has_value();
            certified += vr.valid && shape;
            if (!vr.valid)
                out.note(x.str() + " over Q_" + std::to_string(p) + ": " +
                         (vr.problems.empty() ? std::string("?") : vr.problems.front()));
        } catch (const Error& e) {
            out.note(x.str() + " over Q_" + std::to_string(p) + ": " + e.what());
        }
    }
    double secs = seconds_since(t0);
    out.note("agreement " + std::to_string(agree) + "/200 (" + std::to_string(trues) + " true), certificates valid " +
             std::to_string(certified) + "/200, full construction on " + std::to_string(constructed) +
             " true instances");
    std::string tally;
    for (const auto& [k, n] : notes) tally += (tally.empty() ? "" : ", ") + k + " " + std::to_string(n);
    out.note("construction on true instances: " + tally + "; largest deg g " + std::to_string(max_deg_g));
    out.note("runtime " + fmt_secs(secs));
    out.require(agree == 200 && certified == 200 && secs < 600, "predicate");
    return out;
}

Outcome elliptic_points()
{
    Outcome out;
    std::mt19937_64 rng(7);
    int ok = 0;
    for (int k = 0; k < 20; ++k) {
        long p = std::vector<long>{2, 3, 5}[k % 3];
        PadicContext ctx(p);
        Rational y = fixture::random_unit(rng, p) * qpow(Rational(p), fixture::uniform(rng, 1, 3));
        HenselWitness w = elliptic_constant_point(y, ctx, 41);
        Rational f = w.root * w.root * w.root - w.root - y * y;
        bool good = (f == 0 || ctx.v(f) > 40) && verify_certificate(certify_elliptic(y, w, ctx)).valid;
        ok += good;
    }
    out.note(std::to_string(ok) + "/20 points with v(x^3 - x - y^2) > 40");
    out.require(ok == 20, "elliptic points");
    return out;
}

Outcome negative_controls()
{
    Outcome out;
    PadicContext c3(3), c2(2), c5(5);
    struct Fault {
        std::string name;
        Json cert;
        std::function<void(Json&)> corrupt;
    };
    auto flip = [](Json& v) { v = -v.get<int>(); };
    auto bump_poly = [](Json& v, long k) {
        QPoly f = parse_poly(v.get<std::string>());
        f += QPoly::monomial(1, static_cast<int>(k));
        v = to_string(f);
    };
    Json con_even = certify_construction(corollary_isotropy(2, P({-3, 0, 1}), c3, 1));
    Json con_odd = certify_construction(corollary_isotropy(2, P({-9, 0, 1}), c3, 1));
    RatFunc xt = parse_ratfunc("(t + 1)/(t^2 - 3)"), xf = parse_ratfunc("1/t");
    Json pt = certify_predicate(xt, 2, predicate_vt_nonneg(xt, 2, c3), c3);
    Json pf = certify_predicate(xf, 2, predicate_vt_nonneg(xf, 2, c3), c3);

    std::vector<Fault> faults = {
        {"hilbert symbol flipped", certify_hilbert(P({3}), P({2}), std::nullopt, c3), [&](Json& j) { flip(j["value"]); }},
        {"polynomial symbol flipped", certify_symbol(evaluate_symbol(P({1, 1}), P({-5, 0, 1}), c5), c5),
         [&](Json& j) { flip(j["value"]); }},
        {"reciprocity value flipped", certify_reciprocity(P({1, 1}), P({-3, 0, 1}), c3),
         [&](Json& j) { flip(j["q_p"]); }},
        {"slope factor coefficient", certify_slopes(P({8, -6, 1}), 40, c2),
         [&](Json& j) { bump_poly(j["factors"][0]["poly"], 0); }},
        {"s coefficient (even case)", con_even, [&](Json& j) { bump_poly(j["factors"][0]["poly"], 0); }},
        {"s coefficient (odd case)", con_odd, [&](Json& j) { bump_poly(j["factors"][0]["poly"], 1); }},
        {"recorded condition flipped", con_odd, [&](Json& j) { flip(j["direct"][0]["lhs"]); }},
        {"witness c coefficient", pt, [&](Json& j) { bump_poly(j["witness"]["g"], 1); }},
        {"anisotropy leading coefficient", pf, [&](Json& j) { j["anisotropy"]["leading"] = "2/1"; }},
        {"elliptic x coefficient", certify_elliptic(9, elliptic_constant_point(9, c3, 41), c3),
         [&](Json& j) { j["x"] = to_string(parse_rational(j["x"].get<std::string>()) + 1); }},
    };
    int rejected = 0, clean = 0;
    for (auto& f : faults) {
        clean += verify_certificate(f.cert).valid;
        Json bad = f.cert;
        f.corrupt(bad);
        VerifyReport vr = verify_certificate(bad);
        rejected += !vr.valid;
        out.note(f.name + ": " + (vr.valid ? "ACCEPTED" : "rejected (" + vr.problems.front() + ")"));
    }
    out.note("untouched certificates valid " + std::to_string(clean) + "/10, corrupted rejected " +
             std::to_string(rejected) + "/10");
    out.require(clean == 10 && rejected == 10, "injected faults");
    return out;
}

}  // namespace

int main(int argc, char** argv)
{
    std::set<int> known_red, selected;
    std::string report_path;
    for (int i = 1; i < argc; ++i) {
        std::string a = argv[i];
        if (a == "--known-red" && i + 1 < argc)
            known_red.insert(std::stoi(argv[++i]));
        else if (a == "--report" && i + 1 < argc)
            report_path = argv[++i];
        else
            selected.insert(std::stoi(a));
    }
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"Hilbert symbol tables against the conic oracle", hilbert_tables},
        {"symbol laws on seeded corpora", symbol_laws},
        {"slope factorization and one-edge square classes", newton_machinery},
        {"hand-picked constructions of s", constructions},
        {"predicate against the t-adic valuation", predicate_agreement},
        {"elliptic constant points", elliptic_points},
        {"negative controls", negative_controls},
    };
    int unexpected = 0;
    std::ostringstream report;
    for (size_t k = 0; k < criteria.size(); ++k) {
        const int id = static_cast<int>(k + 1);
        if (!selected.empty() && !selected.count(id)) continue;
        Outcome o;
        try {
            o = criteria[k].second();
        } catch (const std::exception& e) {
            o.pass = false;
            o.note(std::string("exception: ") + e.what());
        }
        std::ostringstream os;
        os << "criterion " << id << ": " << (o.pass ? "PASS" : "FAIL") << "  " << criteria[k].first
           << (!o.pass && known_red.count(id) ? "  [known red]" : "") << "\n";
        for (const auto& l : o.lines) os << "    " << l << "\n";
        std::cout << os.str() << std::flush;
        report << os.str();
        if (o.pass == static_cast<bool>(known_red.count(id))) ++unexpected;
    }
    if (!report_path.empty()) std::ofstream(report_path) << report.str();
    return unexpected == 0 ? 0 : 1;
}
