#include "padicforms/newton.hpp"

#include <algorithm>
#include <climits>

namespace padicforms {

bool NewtonPolygon::all_vertices_even() const
{
    return std::all_of(vertices.begin(), vertices.end(), [](const PolygonPoint& q) { return q.i % 2 == 0; });
}

NewtonPolygon newton_polygon(const QPoly& f, const PadicContext& ctx)
{
    if (f.is_zero() || f[0] == 0) throw Error("ZeroEndpoint", "Newton polygon needs f(0) != 0");
    NewtonPolygon np;
    for (int i = 0; i <= f.degree(); ++i)
        if (f[i] != 0) np.points.push_back({i, ctx.v(f[i])});
    // monotone chain, lower hull; collinear points dropped
    std::vector<PolygonPoint> hull;
    for (const auto& q : np.points) {
        while (hull.size() >= 2) {
            const auto& a = hull[hull.size() - 2];
            const auto& b = hull.back();
            // keep b only if it is strictly below segment a-q
            Integer cross = Integer(b.i - a.i) * (q.v - a.v) - Integer(b.v - a.v) * (q.i - a.i);
            if (cross <= 0)
                hull.pop_back();
            else
                break;
        }
        hull.push_back(q);
    }
    np.vertices = hull;
    for (size_t k = 0; k + 1 < hull.size(); ++k) {
        PolygonEdge e{hull[k], hull[k + 1], Rational(hull[k + 1].v - hull[k].v, hull[k + 1].i - hull[k].i)};
        e.slope.canonicalize();
        np.edges.push_back(e);
    }
    return np;
}

FpPoly residual_polynomial(const QPoly& f, const PolygonEdge& edge, const PadicContext& ctx)
{
    const u64 p = ctx.p_ui();
    const long d = edge.denominator();
    const long num = edge.slope.get_num().get_si();
    std::vector<u64> c;
    for (int beta = 0; edge.start.i + beta <= edge.end.i; beta += static_cast<int>(d)) {
        Rational a = f[edge.start.i + beta];
        long shift = edge.start.v + num * (beta / d);
        if (a == 0 || ctx.v(a) > shift) {
            c.push_back(0);
            continue;
        }
        Rational u = a / ctx.pi_pow(shift);
        c.push_back(mod_int(u, ctx.p()).get_ui());
    }
    return FpPoly(p, std::move(c));
}

FpPoly residual_polynomial(const QPoly& f, const PadicContext& ctx)
{
    NewtonPolygon np = newton_polygon(f, ctx);
    if (!np.one_edge()) throw Error("NotOneEdge", "polynomial has " + std::to_string(np.edges.size()) + " edges");
    return residual_polynomial(f, np.edges[0], ctx);
}

long min_coeff_valuation(const QPoly& f, const Integer& p)
{
    long m = LONG_MAX;
    for (const auto& c : f.coeffs())
        if (c != 0) m = std::min(m, vp_nonzero(c, p));
    return m;
}

QPoly truncate_coeffs(const QPoly& f, const Integer& p, long M)
{
    std::vector<Rational> c = f.coeffs();
    for (auto& x : c) x = truncate_padic(x, p, M);
    return QPoly(std::move(c));
}

namespace {

QPoly cut_degree(const QPoly& f, int d)
{
    if (f.degree() <= d) return f;
    if (d < 0) return {};
    return QPoly(std::vector<Rational>(f.coeffs().begin(), f.coeffs().begin() + d + 1));
}

}  // namespace

bool hensel_split(const QPoly& f, QPoly& A, QPoly& B, long work_digits, const PadicContext& ctx)
{
    const Integer& p = ctx.p();
    XGcd x = xgcd(B, A);
    if (x.g.degree() != 0) return false;
    QPoly g = B, h = A, s = x.s, t = x.t;
    const int dh = A.degree(), dg = f.degree() - dh;
    auto neg = [&](const QPoly& q) {
        long m = min_coeff_valuation(q, p);
        return m == LONG_MAX ? 0L : std::max(0L, -m);
    };
    const long M = work_digits + 16 + 2 * (neg(s) + neg(t)) + neg(f);
    long best = LONG_MIN;
    int stale = 0;
    for (int iter = 0; iter < 200; ++iter) {
        QPoly e = f - g * h;
        long ve = min_coeff_valuation(e, p);
        if (ve >= work_digits) {
            A = h;
            B = g;
            return true;
        }
        if (ve <= best) {
            if (++stale >= 4) return false;
        } else {
            best = ve;
            stale = 0;
        }
        auto [q, r] = divmod(s * e, h);
        QPoly g2 = g + t * e + q * g;
        QPoly h2 = h + r;
        QPoly b = s * g2 + t * h2 - QPoly(1);
        auto [c, dd] = divmod(s * b, h2);
        QPoly s2 = s - dd;
        QPoly t2 = t - t * b - c * g2;
        // terms above the expected degrees are of higher order and are dropped
        g = truncate_coeffs(cut_degree(g2, dg), p, M);
        h = truncate_coeffs(h2, p, M);
        s = truncate_coeffs(cut_degree(s2, dh - 1), p, M);
        t = truncate_coeffs(cut_degree(t2, dg - 1), p, M);
    }
    return false;
}

namespace {

QPoly low_part_monic(const QPoly& f, int r)
{
    std::vector<Rational> c(f.coeffs().begin(), f.coeffs().begin() + r + 1);
    return QPoly(std::move(c)).monic();
}

QPoly high_part(const QPoly& f, int r)
{
    std::vector<Rational> c(f.coeffs().begin() + r, f.coeffs().end());
    return QPoly(std::move(c));
}

// Replace an approximate factor by an exact rational one when reconstruction succeeds.
bool try_exact(QPoly& factor, const QPoly& f, const Integer& p, long M)
{
    long shift = std::max(0L, -min_coeff_valuation(factor, p));
    Integer pM = ipow(p, static_cast<unsigned long>(M));
    Integer bound;
    mpz_sqrt(bound.get_mpz_t(), Integer(pM / 2).get_mpz_t());
    Rational scale = qpow(Rational(p), shift);
    std::vector<Rational> c;
    for (const auto& a : factor.coeffs()) {
        Rational sa = a * scale;
        if (sa.get_den() % p == 0) return false;
        auto rr = rational_reconstruct(mod_int(sa, pM), pM, bound);
        if (!rr) return false;
        c.push_back(*rr / scale);
    }
    QPoly cand(std::move(c));
    if (cand.degree() != factor.degree() || cand.lc() != 1) return false;
    if (!(f % cand).is_zero()) return false;
    factor = cand;
    return true;
}

}  // namespace

SlopeFactorization slope_factorization(const QPoly& f, long digits, const PadicContext& ctx)
{
    const Integer& p = ctx.p();
    NewtonPolygon np0 = newton_polygon(f, ctx);
    SlopeFactorization out;
    out.unit = f.lc();
    out.digits = digits;
    const QPoly F = f.monic();
    long work = digits + 8;
    for (int attempt = 0; attempt < 5; ++attempt, work *= 2) {
        std::vector<SlopeFactor> factors;
        QPoly rest = F;
        bool ok = true;
        while (true) {
            NewtonPolygon np = newton_polygon(rest, ctx);
            if (np.edges.size() <= 1) break;
            int r = np.vertices[1].i;
            QPoly A = low_part_monic(rest, r), B = high_part(rest, r);
            if (!hensel_split(rest, A, B, work, ctx)) {
                ok = false;
                break;
            }
            factors.push_back({A, np.edges[0].slope, A.degree(), np.edges[0].denominator()});
            rest = B.monic();
        }
        if (!ok) continue;
        NewtonPolygon npl = newton_polygon(rest, ctx);
        factors.push_back({rest, npl.edges[0].slope, rest.degree(), npl.edges[0].denominator()});
        // exact factors where they exist
        size_t exact_count = 0;
        for (auto& fc : factors) {
            fc.exact = try_exact(fc.poly, F, p, work);
            exact_count += fc.exact;
        }
        if (exact_count + 1 == factors.size()) {
            QPoly prod(1);
            size_t missing = 0;
            for (size_t k = 0; k < factors.size(); ++k) {
                if (factors[k].exact)
                    prod *= factors[k].poly;
                else
                    missing = k;
            }
            auto [q, rem] = divmod(F, prod);
            if (rem.is_zero() && q.degree() == factors[missing].degree) {
                factors[missing].poly = q;
                factors[missing].exact = true;
            }
        }
        QPoly prod(out.unit);
        for (const auto& fc : factors) prod *= fc.poly;
        QPoly res = prod - f;
        long rv = min_coeff_valuation(res, p);
        // every factor must still carry its own single edge
        bool shapes = true;
        for (const auto& fc : factors) {
            NewtonPolygon q = newton_polygon(fc.poly, ctx);
            if (!q.one_edge() || q.edges[0].slope != fc.slope) shapes = false;
        }
        if (rv > digits && shapes) {
            out.factors = std::move(factors);
            out.residual_valuation = rv;
            (void)np0;
            return out;
        }
    }
    throw Error("PrecisionExhausted", "slope factorization did not reach the digit target");
}

namespace {

QPoly lift_residual(const FpPoly& U, const Rational& slope, const PadicContext& ctx)
{
    const long d = slope.get_den().get_si();
    const long md = slope.get_num().get_si();
    const long p = static_cast<long>(ctx.p_ui());
    QPoly out;
    for (int k = 0; k <= U.degree(); ++k) {
        long c = static_cast<long>(U[k]);
        if (2 * c > p) c -= p;
        if (c == 0) continue;
        out += QPoly::monomial(Rational(c) * ctx.pi_pow(md * (k - U.degree())), static_cast<int>(d * k));
    }
    return out;
}

FpPoly fp_pow_poly(const FpPoly& a, int k)
{
    FpPoly r = FpPoly::constant(a.prime(), 1);
    for (int i = 0; i < k; ++i) r = r * a;
    return r;
}

}  // namespace

std::vector<ResidualPiece> split_by_residual(const QPoly& g, long digits, const PadicContext& ctx)
{
    NewtonPolygon np = newton_polygon(g, ctx);
    if (!np.one_edge()) throw Error("NotOneEdge", "split_by_residual needs a one-edge polynomial");
    const Rational slope = np.edges[0].slope;
    std::vector<FpFactor> fac = factor(residual_polynomial(g, np.edges[0], ctx));
    std::vector<ResidualPiece> out;
    QPoly rest = g.monic();
    for (size_t k = 0; k < fac.size(); ++k) {
        const auto& [phi, ex] = fac[k];
        if (k + 1 == fac.size()) {
            out.push_back({rest, phi, ex, ex == 1});
            break;
        }
        FpPoly U = fp_pow_poly(phi, ex);
        FpPoly V = FpPoly::constant(phi.prime(), 1);
        for (size_t j = k + 1; j < fac.size(); ++j) V = V * fp_pow_poly(fac[j].factor, fac[j].exponent);
        QPoly A = lift_residual(U, slope, ctx), B = lift_residual(V, slope, ctx);
        bool ok = false;
        for (long work = digits + 8, att = 0; att < 4 && !ok; ++att, work *= 2) {
            QPoly A1 = A, B1 = B;
            if (hensel_split(rest, A1, B1, work, ctx)) {
                A = A1;
                B = B1;
                ok = true;
            }
        }
        if (!ok) throw Error("PrecisionExhausted", "residual splitting stalled");
        out.push_back({A, phi, ex, ex == 1});
        rest = B.monic();
    }
    return out;
}

bool reduction_irreducible(const QPoly& c, const PadicContext& ctx)
{
    NewtonPolygon np = newton_polygon(c, ctx);
    if (!np.one_edge()) throw Error("NotOneEdge", "polynomial has " + std::to_string(np.edges.size()) + " edges");
    const auto& e = np.edges[0];
    if (e.start.i != 0) throw Error("NotOneEdge", "polynomial vanishes at zero");
    const long d = e.denominator();
    if (d == c.degree()) return true;
    FpPoly r = residual_polynomial(c, e, ctx);
    return d * r.degree() == c.degree() && is_irreducible(r);
}

std::optional<std::string> irreducibility_evidence(const QPoly& c, const PadicContext& ctx)
{
    if (c.degree() == 1) return std::string("linear");
    if (c.degree() < 1 || c[0] == 0) return std::nullopt;
    NewtonPolygon np = newton_polygon(c, ctx);
    if (!np.one_edge()) return std::nullopt;
    if (np.edges[0].denominator() == c.degree()) return std::string("ramified");
    if (reduction_irreducible(c, ctx)) return std::string("residual");
    return std::nullopt;
}

Rational square_class_at_root_one_edge(const QPoly& f, const OneEdgeDecomposition& dec, const Rational& alpha,
                                       const PadicContext& ctx)
{
    if (f.degree() % 2 != 0) throw Error("BadDecomposition", "f must have even degree");
    NewtonPolygon np = newton_polygon(f, ctx);
    if (!np.one_edge()) throw Error("BadDecomposition", "f must have a one-edge Newton polygon");
    if (alpha == 0) throw Error("BadDecomposition", "alpha must be nonzero");
    const Rational m = np.edges[0].slope;
    const Rational va = Rational(ctx.v(alpha));
    if (m == -va) throw Error("SlopeCollision", "slope equals -v(alpha)");
    Rational gap = abs(m + va);
    if (!(Rational(dec.N) > Rational(ctx.v4()) / gap)) throw Error("BadDecomposition", "N below the valuation bound");
    const int dg = dec.g.is_zero() ? 0 : dec.g.degree();
    if (dg % 2 || dec.z.is_zero() || dec.z.degree() % 2) throw Error("BadDecomposition", "deg g and deg z must be even");
    if (dec.a.degree() >= dec.N || dec.z.degree() >= dec.N) throw Error("BadDecomposition", "deg a, deg z must be < N");
    int ez = 2 * dec.N + dg - dec.z.degree();
    QPoly rebuilt = dec.a + dec.g.shift(dec.N) + dec.z.shift(ez);
    if (rebuilt != f) throw Error("BadDecomposition", "f != a + g t^N + z t^(2N + deg g - deg z)");
    Rational val = m < -va ? dec.z.eval(alpha) : dec.a.eval(alpha);
    if (val == 0) throw Error("BadDecomposition", "selected part vanishes at alpha");
    return qp::square_class(val, ctx);
}

ShapeSearchResult random_irreducible_search(const ShapeConstraints& sc, std::uint64_t seed)
{
    const u64 p = sc.abar.prime();
    std::mt19937_64 rng(seed);
    int ep = sc.e_start + (sc.e_start % 2 != 0);
    long total = 0;
    for (int esc = 0; esc <= sc.max_escalations; ++esc, ep += 2) {
        const int k_top = ep - sc.n_prime - sc.g_shift;
        const int k_free = ep - 2 * sc.n_prime - sc.g_shift;
        if (k_top < 0) continue;
        for (long s = 0; s < sc.budget; ++s) {
            ++total;
            FpPoly q1 = FpPoly::monomial(p, 1, k_top);
            if (k_free >= 0) q1 = q1 + random_poly(p, k_free, rng);
            FpPoly c = sc.abar + q1 * sc.bbar;
            if (is_irreducible(c.monic())) return {c, q1, ep, total};
            if (k_free < 0) break;
        }
    }
    throw Error("SearchBudgetExhausted", "no irreducible residual found within the sampling budget");
}

}  // namespace padicforms
