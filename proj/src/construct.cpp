#include "padicforms/construct.hpp"

#include "padicforms/newton.hpp"

#include <algorithm>
#include <numeric>

namespace padicforms {

namespace {

long to_long(const Rational& x)
{
    if (x.get_den() != 1) throw Error("DomainError", "expected an integer, got " + to_short_string(x));
    return x.get_num().get_si();
}

// product of f_k over odd k in a squarefree decomposition, times lc(f)
QPoly odd_part(const QPoly& f)
{
    if (f.degree() <= 0) return f;
    QPoly out(f.lc());
    QPoly a = gcd(f, f.derivative());
    QPoly b = f / a, c = f.derivative() / a;
    QPoly d = c - b.derivative();
    for (int k = 1; b.degree() > 0; ++k) {
        QPoly y = gcd(b, d);
        if (k % 2) out = out * y;
        b = b / y;
        c = d / y;
        d = c - b.derivative();
    }
    return out;
}

long smallest_odd_multiple_above(long L, const Rational& bound)
{
    for (long N = L;; N += 2 * L)
        if (Rational(N) > bound) return N;
}

std::string factor_label(int i, int j) { return "g[" + std::to_string(i) + "," + std::to_string(j) + "]"; }

}  // namespace

// ---- slope ring ----

bool in_slope_ring(const QPoly& f, const Rational& m, const PadicContext& ctx)
{
    for (int b = 0; b <= f.degree(); ++b)
        if (f[b] != 0 && Rational(ctx.v(f[b])) < m * b) return false;
    return true;
}

bool in_slope_prime(const QPoly& f, const Rational& m, const PadicContext& ctx)
{
    for (int b = 0; b <= f.degree(); ++b)
        if (f[b] != 0 && Rational(ctx.v(f[b])) <= m * b) return false;
    return true;
}

FpPoly reduce_slope_ring(const QPoly& f, const Rational& m, const PadicContext& ctx)
{
    if (!in_slope_ring(f, m, ctx)) throw Error("DomainError", "polynomial is not in the slope ring");
    const long d = m.get_den().get_si();
    const long md = to_long(m * d);
    std::vector<u64> c;
    for (int k = 0; d * k <= f.degree(); ++k) {
        const Rational x = f[static_cast<int>(d * k)];
        u64 r = 0;
        if (x != 0 && ctx.v(x) == md * k) r = ctx.residue(x / ctx.pi_pow(md * k)).get_ui();
        c.push_back(r);
    }
    return FpPoly(ctx.p_ui(), c);
}

QPoly lift_slope_ring(const FpPoly& f, const Rational& m, const PadicContext& ctx)
{
    const long d = m.get_den().get_si();
    const long md = to_long(m * d);
    const long p = static_cast<long>(ctx.p_ui());
    QPoly out;
    for (int k = 0; k <= f.degree(); ++k) {
        long c = static_cast<long>(f[k]);
        if (c == 0) continue;
        if (2 * c > p) c -= p;
        out += QPoly::monomial(Rational(c) * ctx.pi_pow(md * k), static_cast<int>(d * k));
    }
    return out;
}

// ---- preparation ----

ConstructionParams prepare(const Rational& gamma, const QPoly& g0, const PadicContext& ctx, long digits)
{
    if (gamma == 0) throw Error("DomainError", "gamma must be nonzero");
    if (g0.is_zero() || g0[0] == 0) throw Error("ZeroEndpoint", "g(0) must be nonzero");
    ConstructionParams P{ctx, gamma, g0, {}, {}, 0, 1, digits, {}};
    if (!newton_polygon(g0, ctx).all_vertices_even())
        throw Error("OddVertex", "the Newton polygon of " + to_string(g0) + " has a vertex of odd degree");
    QPoly g = odd_part(g0);
    P.pi_shift = -ctx.v(g.lc());
    P.g = g * ctx.pi_pow(P.pi_shift);
    P.epsilon = P.g.lc();
    if (P.g.degree() == 0) return P;

    SlopeFactorization sf = slope_factorization(P.g, digits, ctx);
    for (const auto& f : sf.factors) {
        SlopeBlock blk{f.slope, f.denominator, f.degree, f.poly, f.exact, {}};
        if (auto ev = irreducibility_evidence(f.poly, ctx)) {
            blk.factors.push_back({f.poly, *ev});
        } else {
            for (const auto& piece : split_by_residual(f.poly, digits, ctx)) {
                auto pev = irreducibility_evidence(piece.poly, ctx);
                if (!pev)
                    throw Error("FactorizationUncertified",
                                "cannot certify an irreducible factor of slope " + to_short_string(f.slope));
                blk.factors.push_back({piece.poly.monic(), *pev});
            }
            // pieces cut from an approximate factor are approximate themselves
            if (blk.factors.size() > 1) blk.exact = false;
        }
        P.blocks.push_back(std::move(blk));
    }

    long L = 1;
    for (const auto& b : P.blocks)
        if (b.denominator % 2) L = std::lcm(L, b.denominator);
    Rational bound = P.g.degree();
    for (size_t i = 0; i < P.blocks.size(); ++i)
        for (size_t j = i + 1; j < P.blocks.size(); ++j) {
            Rational gap = abs(P.blocks[i].slope - P.blocks[j].slope);
            bound = std::max(bound, Rational(Rational(ctx.v4()) / gap));
        }
    P.N = static_cast<int>(smallest_odd_multiple_above(L, bound));
    return P;
}

// ---- certificate ----

bool ConstructionCertificate::direct_ok() const
{
    return std::all_of(direct.begin(), direct.end(), [](const SymbolCheck& c) { return c.holds(); });
}

bool ConstructionCertificate::derived_ok() const
{
    return std::all_of(derived.begin(), derived.end(), [](const SymbolCheck& c) { return c.holds(); });
}

bool ConstructionCertificate::ok() const
{
    return structural.empty() && direct_ok() && derived_ok() &&
           std::all_of(gamma.begin(), gamma.end(), [](const SymbolCheck& c) { return c.holds(); });
}

namespace {

// moduli up to this degree are also evaluated inside K(alpha)
constexpr int kNativeCheckDegree = 6;

int sym(const QPoly& p, const QPoly& q, const PadicContext& ctx)
{
    return evaluate_symbol(p, q, ctx, q.degree() <= kNativeCheckDegree).value;
}

// g / g_X where X is either a whole block (j < 0) or one factor
QPoly cofactor(const ConstructionParams& P, int i, int j)
{
    QPoly out(P.epsilon);
    for (size_t mu = 0; mu < P.blocks.size(); ++mu)
        for (size_t nu = 0; nu < P.blocks[mu].factors.size(); ++nu) {
            if (static_cast<int>(mu) == i && (j < 0 || static_cast<int>(nu) == j)) continue;
            out = out * P.blocks[mu].factors[nu].poly;
        }
    return out;
}

QPoly block_poly(const ConstructionParams& P, int i)
{
    QPoly out(1);
    for (const auto& f : P.blocks[static_cast<size_t>(i)].factors) out = out * f.poly;
    return out;
}

std::string s_label(const SFactor& f) { return "s[" + std::to_string(f.block) + "," + std::to_string(f.index) + "]"; }

}  // namespace

ConstructionCertificate evaluate_conditions(const ConstructionParams& P, const std::vector<SFactor>& factors)
{
    const PadicContext& ctx = P.ctx;
    const QPoly t = QPoly::x();
    ConstructionCertificate cert;
    cert.factors = factors;
    cert.s = QPoly(P.epsilon);
    for (const auto& f : factors) cert.s = cert.s * f.poly;
    if (P.blocks.empty()) return cert;

    // structural properties (i)-(iii)
    for (const auto& f : factors) {
        const std::string lab = s_label(f);
        const QPoly& s = f.poly;
        if (s.lc() != 1) cert.structural.push_back(lab + " is not monic");
        if (s.degree() % 2) cert.structural.push_back(lab + " has odd degree");
        if (s[0] == 0 || resultant(s, P.g) == 0) {
            cert.structural.push_back(lab + " is not coprime to t g");
            continue;
        }
        auto ev = irreducibility_evidence(s, ctx);
        if (!ev) {
            cert.structural.push_back(lab + " is not certified irreducible");
            continue;
        }
        NewtonPolygon np = newton_polygon(s, ctx);
        if (np.edges.front().slope != P.blocks[static_cast<size_t>(f.block)].slope)
            cert.structural.push_back(lab + " has the wrong slope");
    }
    if (!cert.structural.empty()) return cert;

    // s_i: product of the s-factors attached to block i
    std::vector<QPoly> s_block(P.blocks.size(), QPoly(1));
    for (const auto& f : factors) s_block[static_cast<size_t>(f.block)] = s_block[static_cast<size_t>(f.block)] * f.poly;

    cert.direct.push_back({"vw-sg", "t", sym(cert.s * P.g, t, ctx), 1});
    for (size_t i = 0; i < P.blocks.size(); ++i)
        for (size_t j = 0; j < P.blocks[i].factors.size(); ++j) {
            const QPoly& gij = P.blocks[i].factors[j].poly;
            const std::string lab = factor_label(static_cast<int>(i), static_cast<int>(j));
            cert.direct.push_back({"vw-ts", lab, sym(t * cert.s, gij, ctx), 1});
            cert.derived.push_back({"vw2", lab, sym(s_block[i], gij, ctx),
                                    sym(t * cofactor(P, static_cast<int>(i), -1), gij, ctx)});
            for (size_t k = 0; k < P.blocks.size(); ++k) {
                if (k == i) continue;
                cert.derived.push_back({"vw-product", "s_" + std::to_string(k) + " / " + lab,
                                        sym(s_block[k], gij, ctx), sym(block_poly(P, static_cast<int>(k)), gij, ctx)});
            }
        }
    for (const auto& f : factors) {
        const std::string lab = s_label(f);
        cert.direct.push_back({"vw-tg", lab, sym(-(t * P.g), f.poly, ctx), 1});
        int rhs = 1;
        for (const auto& blk : P.blocks)
            for (const auto& gf : blk.factors) rhs *= sym(f.poly, gf.poly, ctx);
        cert.derived.push_back({"vw1", lab, sym(f.poly, t, ctx), rhs});
        cert.gamma.push_back({"gamma", lab, sym(QPoly(P.gamma), f.poly, ctx), 1});
    }
    return cert;
}

ConstructionCertificate verify_conditions(const ConstructionParams& P, const std::vector<SFactor>& factors)
{
    ConstructionCertificate cert = evaluate_conditions(P, factors);
    if (!cert.structural.empty()) throw Error("ConditionFailed", cert.structural.front());
    for (const auto* fam : {&cert.direct, &cert.derived, &cert.gamma})
        for (const auto& c : *fam)
            if (!c.holds())
                throw Error("ConditionFailed", c.name + " fails at " + c.where + " (" + std::to_string(c.lhs) +
                                                   " vs " + std::to_string(c.rhs) + ")");
    return cert;
}

// ---- the construction ----

namespace {

SFactor odd_case(const ConstructionParams& P, int i, std::uint64_t seed)
{
    const PadicContext& ctx = P.ctx;
    const SlopeBlock& blk = P.blocks[static_cast<size_t>(i)];
    const Rational m = blk.slope;
    const long d = blk.denominator;
    const long n = blk.degree;
    const long N = P.N;
    auto pipow = [&](const Rational& k) { return ctx.pi_pow(to_long(k)); };

    QPoly gi = block_poly(P, i);
    QPoly h = gi * pipow(m * n);
    QPoly other = cofactor(P, i, -1);

    // the unique coefficient of g/g_i on the line of slope m
    int beta0 = -1;
    Rational best;
    bool tie = false;
    for (int b = 0; b <= other.degree(); ++b) {
        if (other[b] == 0) continue;
        Rational w = Rational(ctx.v(other[b])) - m * b;
        if (beta0 < 0 || w < best) {
            beta0 = b;
            best = w;
            tie = false;
        } else if (w == best) {
            tie = true;
        }
    }
    if (tie) throw Error("DomainError", "g/g_i has two terms on a line of the slope");
    long B = 0;
    while ((beta0 + B) % d) B += 2;
    const long A = to_long(m * (B + beta0)) - ctx.v(other[beta0]);
    const long G = (beta0 + B) / d;
    const long Np = N / d;

    QPoly a = h + QPoly::monomial(ctx.pi_pow(to_long(m * N) + A), static_cast<int>(N + B)) * other;
    QPoly b = QPoly::monomial(pipow(m * (N + d * G)), static_cast<int>(N + d * G)) * h;
    FpPoly hbar = reduce_slope_ring(h, m, ctx);
    FpPoly abar = reduce_slope_ring(a, m, ctx), bbar = reduce_slope_ring(b, m, ctx);
    const u64 p = ctx.p_ui();
    FpPoly uNG = FpPoly::monomial(p, 1, static_cast<int>(Np + G));
    // N' + G > deg hbar, so rho is read off directly
    FpPoly rho = FpPoly::constant(p, abar[static_cast<int>(Np + G)]);
    if (rho.is_zero() || abar != hbar + rho * uNG || bbar != hbar * uNG)
        throw Error("DomainError", "reduction of a or b does not have the expected shape");

    ShapeConstraints sc{abar, bbar, static_cast<int>(Np), static_cast<int>(G), static_cast<int>(2 * Np + G)};
    ShapeSearchResult sr = random_irreducible_search(sc, seed);
    const long e = d * sr.e_prime;

    FpPoly r1bar = sr.cbar - hbar * FpPoly::monomial(p, 1, sr.e_prime);
    QPoly r1 = lift_slope_ring(r1bar, m, ctx);
    QPoly head = QPoly::monomial(pipow(m * e), static_cast<int>(e)) * h;
    QPoly ctil = r1 + head;
    QPoly q1 = lift_slope_ring(sr.q1bar, m, ctx);
    QPoly f = a + q1 * b - ctil;
    if (!in_slope_prime(f, m, ctx)) throw Error("DomainError", "lift error is not in the prime ideal");
    auto [q2, r2] = divmod(f, b);
    QPoly c = ctil + r2, q = q1 - q2, r = r1 + r2;
    if (c != a + q * b || c != r + head || r.degree() > n + e - N)
        throw Error("DomainError", "lift identities fail");

    SFactor out{i, 0, c * pipow(-m * c.degree()), "", {}, {}};
    out.odd = OddCaseWitness{A, B, G, sr.e_prime, sr.samples, h, a, b, q, r, c, abar, bbar, sr.cbar, sr.q1bar};
    if (!reduction_irreducible(out.poly, ctx)) throw Error("DomainError", "lifted s_i fails the reduction criterion");
    out.evidence = *irreducibility_evidence(out.poly, ctx);
    return out;
}

SFactor even_case(const ConstructionParams& P, int i, int j)
{
    const PadicContext& ctx = P.ctx;
    const SlopeBlock& blk = P.blocks[static_cast<size_t>(i)];
    const QPoly& gij = blk.factors[static_cast<size_t>(j)].poly;
    const QPoly T = (QPoly::x() * cofactor(P, i, j)) % gij;

    struct Other {
        QPoly q;
        Rational vg;  // v(g_ij(alpha))
    };
    std::vector<Other> others;
    long extra = 0;
    for (size_t mu = 0; mu < P.blocks.size(); ++mu)
        for (size_t nu = 0; nu < P.blocks[mu].factors.size(); ++nu) {
            if (static_cast<int>(mu) == i && static_cast<int>(nu) == j) continue;
            const QPoly& q = P.blocks[mu].factors[nu].poly;
            Rational vg(ctx.v(resultant(q, gij)), q.degree());
            vg.canonicalize();
            others.push_back({q, vg});
            Rational rt = T.is_zero() ? Rational(0) : resultant(q, T);
            if (rt != 0) {
                Rational vt(ctx.v(rt), q.degree());
                vt.canonicalize();
                Rational gap = vg - vt;
                Integer ce = gap.get_num() / gap.get_den();
                if (ce * gap.get_den() < gap.get_num()) ce += 1;
                extra = std::max(extra, ce.get_si());
            }
        }
    const long A0 = ctx.v4() + 1 + extra;
    int esc = 0;
    for (long A = A0; A <= 1024 * A0; A *= 2, ++esc) {
        QPoly p = T * ctx.pi_pow(A);
        QPoly s = gij + p;
        if (s[0] == 0 || resultant(s, P.g) == 0) continue;
        auto ev = irreducibility_evidence(s, ctx);
        if (!ev) continue;
        if (newton_polygon(s, ctx).edges.front().slope != blk.slope) continue;
        EvenCaseWitness w{A, esc, p, {}};
        bool ok = true;
        for (const auto& o : others) {
            Rational rp = p.is_zero() ? Rational(0) : resultant(o.q, p);
            // p(alpha) = 0 counts as infinite valuation
            Rational vp_ = rp == 0 ? o.vg + ctx.v4() + 1 : Rational(ctx.v(rp), o.q.degree());
            vp_.canonicalize();
            w.margins.emplace_back(vp_, o.vg);
            if (!(vp_ > o.vg + ctx.v4())) ok = false;
        }
        if (!ok) continue;
        SFactor out{i, j, s, *ev, {}, w};
        return out;
    }
    throw Error("EscalationCapReached", "no admissible A for " + factor_label(i, j));
}

}  // namespace

ConstructionResult construct_s(const ConstructionParams& P, std::uint64_t seed)
{
    ConstructionResult res{P, {}};
    std::vector<SFactor> factors;
    for (size_t i = 0; i < P.blocks.size(); ++i) {
        const auto& blk = P.blocks[i];
        if (blk.denominator % 2) {
            factors.push_back(odd_case(P, static_cast<int>(i), seed + i));
        } else {
            for (size_t j = 0; j < blk.factors.size(); ++j)
                factors.push_back(even_case(P, static_cast<int>(i), static_cast<int>(j)));
        }
    }
    res.cert = verify_conditions(P, factors);
    return res;
}

std::vector<std::string> check_witness(const ConstructionParams& P, const SFactor& f)
{
    std::vector<std::string> bad;
    const PadicContext& ctx = P.ctx;
    if (f.block < 0 || f.block >= static_cast<int>(P.blocks.size())) return {"factor refers to an unknown slope"};
    const SlopeBlock& blk = P.blocks[static_cast<size_t>(f.block)];
    const std::string lab = s_label(f);
    if (blk.denominator % 2) {
        if (!f.odd) return {lab + " lacks its lift witness"};
        const OddCaseWitness& w = *f.odd;
        const Rational m = blk.slope;
        const long d = blk.denominator, n = blk.degree, N = P.N;
        const long e = d * w.e_prime;
        auto pipow = [&](const Rational& k) { return ctx.pi_pow(to_long(k)); };
        try {
            if (w.h != block_poly(P, f.block) * pipow(m * n)) bad.push_back(lab + ": h is not pi^(m n) g_i");
            QPoly a = w.h + QPoly::monomial(ctx.pi_pow(to_long(m * N) + w.A), static_cast<int>(N + w.B)) *
                                cofactor(P, f.block, -1);
            if (w.a != a) bad.push_back(lab + ": a does not match");
            QPoly b = QPoly::monomial(pipow(m * (N + d * w.G)), static_cast<int>(N + d * w.G)) * w.h;
            if (w.b != b) bad.push_back(lab + ": b does not match");
            if (w.c != w.a + w.q * w.b) bad.push_back(lab + ": c != a + q b");
            if (w.c != w.r + QPoly::monomial(pipow(m * e), static_cast<int>(e)) * w.h)
                bad.push_back(lab + ": c != r + pi^(m e) t^e h");
            if (w.r.degree() > n + e - N) bad.push_back(lab + ": deg r too large");
            if (w.e_prime % 2) bad.push_back(lab + ": e' is odd");
            if (f.poly != w.c * pipow(-m * w.c.degree())) bad.push_back(lab + ": s_i is not the normalized c");
            if (!in_slope_ring(w.c, m, ctx) || reduce_slope_ring(w.c, m, ctx) != w.cbar)
                bad.push_back(lab + ": c does not reduce to cbar");
            if (!is_irreducible(w.cbar.monic()) || d * w.cbar.degree() != w.c.degree())
                bad.push_back(lab + ": cbar does not certify irreducibility");
        } catch (const Error& e) {
            bad.push_back(lab + ": " + e.what());
        }
    } else {
        if (!f.even) return {lab + " lacks its escalation witness"};
        if (f.index < 0 || f.index >= static_cast<int>(blk.factors.size())) return {lab + " has an unknown index"};
        const EvenCaseWitness& w = *f.even;
        const QPoly& gij = blk.factors[static_cast<size_t>(f.index)].poly;
        if (f.poly != gij + w.p) bad.push_back(lab + ": s_ij != g_ij + p_ij");
        if (w.p != ((QPoly::x() * cofactor(P, f.block, f.index)) % gij) * ctx.pi_pow(w.A))
            bad.push_back(lab + ": p_ij is not pi^A t g/g_ij mod g_ij");
        size_t k = 0;
        for (size_t mu = 0; mu < P.blocks.size(); ++mu)
            for (size_t nu = 0; nu < P.blocks[mu].factors.size(); ++nu) {
                if (static_cast<int>(mu) == f.block && static_cast<int>(nu) == f.index) continue;
                const QPoly& q = P.blocks[mu].factors[nu].poly;
                if (k >= w.margins.size()) {
                    bad.push_back(lab + ": missing margin");
                    continue;
                }
                Rational vg(ctx.v(resultant(q, gij)), q.degree());
                vg.canonicalize();
                Rational rp = w.p.is_zero() ? Rational(0) : resultant(q, w.p);
                const auto& [vp_, vg_rec] = w.margins[k++];
                if (vg != vg_rec) bad.push_back(lab + ": margin v(g_ij(alpha)) does not match");
                if (rp != 0) {
                    Rational v(ctx.v(rp), q.degree());
                    v.canonicalize();
                    if (v != vp_) bad.push_back(lab + ": margin v(p_ij(alpha)) does not match");
                }
                if (!(vp_ > vg + ctx.v4())) bad.push_back(lab + ": margin too small");
            }
        if (k != w.margins.size()) bad.push_back(lab + ": extra margins");
    }
    return bad;
}

// ---- the corollary ----

CorollaryResult corollary_from(const ConstructionResult& cons)
{
    const ConstructionParams& P = cons.params;
    const PadicContext& ctx = P.ctx;
    CorollaryResult out{cons, {}, {}, false};
    FactorBase base(ctx);
    FactoredElement gel = FactoredElement::constant(P.epsilon), sel = FactoredElement::constant(P.epsilon);
    for (const auto& blk : P.blocks)
        for (const auto& f : blk.factors) gel = gel * FactoredElement::factor(base.add(f.poly));
    for (const auto& f : cons.cert.factors) sel = sel * FactoredElement::factor(base.add(f.poly));
    const FactoredElement one = FactoredElement::constant(1), tt = FactoredElement::factor(0);

    FunctionForm f1{pfister_entries<FactoredElement>({FactoredElement::constant(-P.gamma), -sel}, one), true};
    FunctionForm f2{pfister_entries<FactoredElement>({tt * gel, -(tt * sel)}, one), true};
    out.form1 = milnor_isotropy(f1, base);
    out.form2 = milnor_isotropy(f2, base);
    out.isotropic = out.form1.isotropic && out.form2.isotropic;
    return out;
}

CorollaryResult corollary_isotropy(const Rational& gamma, const QPoly& g, const PadicContext& ctx, std::uint64_t seed)
{
    return corollary_from(construct_s(prepare(gamma, g, ctx), seed));
}

}  // namespace padicforms
