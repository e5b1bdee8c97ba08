#include "padicforms/h10.hpp"

#include "padicforms/quadform.hpp"

namespace padicforms {

RatFunc::RatFunc(QPoly n, QPoly d)
{
    if (d.is_zero()) throw Error("DomainError", "zero denominator");
    if (n.is_zero()) {
        num = QPoly(0);
        den = QPoly(1);
        return;
    }
    QPoly gg = gcd(n, d);
    n = n / gg;
    d = d / gg;
    const Rational lc = d.lc();
    num = n * Rational(1 / lc);
    den = d * Rational(1 / lc);
}

int RatFunc::vt() const
{
    if (is_zero()) throw Error("DomainError", "valuation of zero");
    return num.t_order() - den.t_order();
}

int RatFunc::vinf() const
{
    if (is_zero()) throw Error("DomainError", "valuation of zero");
    return den.degree() - num.degree();
}

Rational RatFunc::leading_at_t() const
{
    return num[num.t_order()] / den[den.t_order()];
}

std::string RatFunc::str() const
{
    if (den == QPoly(1)) return to_string(num);
    return "(" + to_string(num) + ")/(" + to_string(den) + ")";
}

Rational default_gamma(const PadicContext& ctx)
{
    for (long g = 2;; ++g)
        if (qp::hilbert_symbol(g, -ctx.pi(), ctx) == -1) return g;
}

void validate_gamma(const Rational& gamma, const PadicContext& ctx)
{
    if (gamma == 0 || qp::hilbert_symbol(gamma, -ctx.pi(), ctx) != -1)
        throw Error("DomainError", "<1,pi><1,-gamma> must be anisotropic over K");
}

RatFunc h_of(const RatFunc& x)
{
    const QPoly t = QPoly::x();
    const QPoly N3 = x.num.pow(3), D3 = x.den.pow(3);
    QPoly hn = D3 * (QPoly(1) + t) + t * t * N3;
    QPoly hd = D3 + t * N3;
    if (hd.is_zero()) throw Error("UnhandledInstance", "1 + t x^3 vanishes identically");
    return RatFunc(hn, hd);
}

FReport build_f(const RatFunc& x, const Rational& c)
{
    FReport r;
    r.x = x;
    r.c = c;
    r.h = h_of(x);
    r.f = RatFunc(r.h.num + QPoly::monomial(c, 2) * r.h.den, r.h.den);
    r.vt_h = r.h.vt();
    r.vinf_h = r.h.vinf();
    r.vt_f = r.f.vt();
    return r;
}

CWitness choose_c(const RatFunc& h, const PadicContext& ctx, long max_j)
{
    if (h.is_zero() || h.vt() != 0) throw Error("PreconditionFailed", "choose_c needs v_t(h) = 0");
    if (h.vinf() < -2) throw Error("PreconditionFailed", "choose_c needs v_inf(h) >= -2");
    const QPoly base = h.num * h.den;
    const QPoly tail = QPoly::monomial(1, 2) * h.den * h.den;
    for (long j = 1; j <= max_j; j = j < 8 ? j + 1 : 2 * j) {
        CWitness w;
        w.j = j;
        w.c = ctx.pi_pow(-j);
        w.g = base + tail * w.c;
        w.polygon = newton_polygon(w.g, ctx);
        if (w.polygon.all_vertices_even()) return w;
    }
    throw Error("EscalationCapReached", "no c found with even vertices");
}

AnisotropyCertificate anisotropy_at_t(const RatFunc& f, const Rational& gamma, const PadicContext& ctx)
{
    AnisotropyCertificate a;
    a.vt_f = f.vt();
    if (a.vt_f % 2 == 0) throw Error("EvenValuation", "v_t(f) = " + std::to_string(a.vt_f) + " is even");
    a.leading = f.leading_at_t();
    const Rational pi = ctx.pi();
    auto pf = [&](Rational x, Rational y) { return std::vector<Rational>{x, y, pi * x, pi * y}; };
    a.first_anisotropic = !isotropic_over_local(pf(1, -gamma), ctx);
    a.phi1_isotropic = isotropic_over_local(pf(-1, -a.leading), ctx);
    a.phi2_isotropic = isotropic_over_local(pf(-1, -gamma * a.leading), ctx);
    LocalField K = LocalField::base(ctx);
    a.difference_nonzero =
        !pi_multiple_is_zero({K.element(-1), K.element(-gamma * a.leading), K.element(1), K.element(a.leading)});
    if (!a.first_anisotropic) throw Error("DomainError", "<1,pi><1,-gamma> is isotropic");
    if (!a.phi1_isotropic)
        a.anisotropic_form = 1;
    else if (!a.phi2_isotropic)
        a.anisotropic_form = 2;
    else
        throw Error("DomainError", "both second residue forms are isotropic");
    return a;
}

PredicateResult predicate_vt_nonneg(const RatFunc& x, const Rational& gamma, const PadicContext& ctx,
                                    const PredicateOptions& opt)
{
    validate_gamma(gamma, ctx);
    PredicateResult r;
    r.h = h_of(x);
    if (r.h.is_zero()) throw Error("UnhandledInstance", "h vanishes");
    r.vt_h = r.h.vt();
    r.vinf_h = r.h.vinf();
    if (r.vt_h == 0) {
        r.value = true;
        r.witness = choose_c(r.h, ctx);
        const QPoly& g = r.witness->g;
        if (g.degree() <= opt.construct_degree) {
            try {
                r.form1 = corollary_isotropy(gamma, g, ctx, opt.seed);
                r.form2 = corollary_isotropy(gamma, g * gamma, ctx, opt.seed);
                r.construction_note = "constructed";
            } catch (const Error& e) {
                r.form1.reset();
                r.form2.reset();
                r.construction_note = e.what();
            }
        } else {
            r.construction_note = "skipped: deg g = " + std::to_string(g.degree());
        }
        return r;
    }
    if (r.vt_h == 1) {
        // f = h + c t^2 has v_t(f) = 1 whatever c is
        r.value = false;
        r.anisotropy = anisotropy_at_t(r.h, gamma, ctx);
        return r;
    }
    throw Error("UnhandledInstance", "v_t(h) = " + std::to_string(r.vt_h));
}

HenselWitness elliptic_constant_point(const Rational& y, const PadicContext& ctx, long digits)
{
    if (y != 0 && ctx.v(y) <= 0) throw Error("PreconditionFailed", "v(y) must be positive");
    QPoly f({-y * y, Rational(-1), Rational(0), Rational(1)});
    return hensel_lift(f, 0, digits, ctx);
}

}  // namespace padicforms
