#include "padicforms/padic.hpp"

#include "padicforms/finite_field.hpp"

#include <climits>

namespace padicforms {

PadicContext::PadicContext(long p, long precision, std::optional<Rational> uniformizer)
    : p_(p), precision_(precision), pi_(uniformizer ? *uniformizer : Rational(p))
{
    if (!is_prime(p_)) throw Error("UsageError", "not a prime: " + std::to_string(p));
    if (p_ >= (Integer(1) << 31)) throw Error("UsageError", "prime too large");
    pi_.canonicalize();
    if (pi_ == 0 || vp_nonzero(pi_, p_) != 1)
        throw Error("UsageError", "uniformizer must have valuation 1: " + to_short_string(pi_));
    if (precision_ < 2 * v4() + 4) throw Error("UsageError", "precision below 2*v(4)+4");
}

Valuation PadicContext::val(const Rational& x) const
{
    auto v = vp(x, p_);
    if (!v) return std::nullopt;
    return Rational(*v);
}

Rational PadicContext::unit_part(const Rational& x) const { return x / qpow(pi_, v(x)); }

PadicContext PadicContext::with_precision(long digits) const
{
    return PadicContext(p_.get_si(), digits, pi_);
}

namespace qp {

long least_nonresidue(long p)
{
    for (long u = 2; u < p; ++u)
        if (fp_pow(static_cast<u64>(u), static_cast<u64>((p - 1) / 2), static_cast<u64>(p)) != 1) return u;
    throw Error("DomainError", "no nonresidue modulo " + std::to_string(p));
}

bool is_square(const Rational& x, const PadicContext& ctx)
{
    if (x == 0) throw Error("DomainError", "is_square of zero");
    const Integer& p = ctx.p();
    long v = vp_nonzero(x, p);
    if (v % 2) return false;
    Rational u = strip_p(x, p);
    // a with v(a^2 - u) > v(4) among residues mod p^(v(4)+1); Hensel then lifts a
    Integer m = ipow(p, static_cast<unsigned long>(ctx.v4() + 1));
    Integer um = mod_int(u, m);
    if (p > 1000) return fp_pow(um.get_ui(), (p.get_ui() - 1) / 2, p.get_ui()) == 1;
    for (Integer a = 1; a < m; ++a) {
        if (a % p == 0) continue;
        if ((a * a - um) % m == 0) return true;
    }
    return false;
}

Rational square_class(const Rational& x, const PadicContext& ctx)
{
    if (x == 0) throw Error("DomainError", "square_class of zero");
    const Integer& p = ctx.p();
    long v = vp_nonzero(x, p);
    Rational u = strip_p(x, p);
    Rational rep;
    if (p == 2) {
        Integer r = mod_int(u, 8);
        rep = r == 1 ? 1 : r == 5 ? 5 : r == 7 ? -1 : -5;
    } else {
        rep = is_square(u, ctx) ? Rational(1) : Rational(least_nonresidue(p.get_si()));
    }
    if (v % 2) rep *= Rational(p);
    return rep;
}

std::vector<Rational> square_class_reps(const PadicContext& ctx)
{
    if (ctx.p() == 2) return {1, 5, -1, -5, 2, 10, -2, -10};
    long u = least_nonresidue(ctx.p().get_si());
    long p = ctx.p().get_si();
    return {1, u, p, u * p};
}

int hilbert_symbol(const Rational& a, const Rational& b, const PadicContext& ctx)
{
    if (a == 0 || b == 0) throw Error("DomainError", "Hilbert symbol of zero");
    const Integer& p = ctx.p();
    long al = vp_nonzero(a, p), be = vp_nonzero(b, p);
    Rational u = strip_p(a, p), w = strip_p(b, p);
    if (p == 2) {
        long u8 = mod_int(u, 8).get_si(), w8 = mod_int(w, 8).get_si();
        auto eps = [](long x) { return ((x - 1) / 2) & 1; };
        auto omega = [](long x) { return ((x * x - 1) / 8) & 1; };
        long e = eps(u8) * eps(w8) + al * omega(w8) + be * omega(u8);
        return (e & 1) ? -1 : 1;
    }
    long pl = p.get_si();
    int s = 1;
    if ((al & 1) && (be & 1) && (((pl - 1) / 2) & 1)) s = -s;
    auto legendre = [&](const Rational& unit) {
        Integer r = mod_int(unit, p);
        return fp_pow(r.get_ui(), static_cast<u64>((pl - 1) / 2), static_cast<u64>(pl)) == 1 ? 1 : -1;
    };
    if (be & 1) s *= legendre(u);
    if (al & 1) s *= legendre(w);
    return s;
}

}  // namespace qp

HenselWitness hensel_lift(const QPoly& f, const Rational& a, long digits, const PadicContext& ctx)
{
    const Integer& p = ctx.p();
    if (digits > ctx.precision())
        throw Error("PrecisionExhausted", "requested digits exceed the context precision");
    for (const auto& c : f.coeffs())
        if (c != 0 && vp_nonzero(c, p) < 0) throw Error("PreconditionFailed", "coefficients must be p-integral");
    if (a != 0 && vp_nonzero(a, p) < 0) throw Error("PreconditionFailed", "start point must be p-integral");
    QPoly df = f.derivative();
    Rational fa = f.eval(a), dfa = df.eval(a);
    HenselWitness w;
    w.start = a;
    if (fa == 0) {
        w.root = a;
        w.slack = Rational(LONG_MAX);
        w.digits = digits;
        w.residual_valuation = LONG_MAX;
        return w;
    }
    if (dfa == 0) throw Error("PreconditionFailed", "f'(a) = 0");
    long vd = vp_nonzero(dfa, p);
    w.slack = vp_nonzero(fa, p) - 2 * vd;
    if (w.slack <= 0) throw Error("PreconditionFailed", "v(f(a)) <= 2 v(f'(a))");
    const long D = digits + vd + 1;
    const long M = D + vd + 2;
    Integer pM = ipow(p, static_cast<unsigned long>(M));
    Rational b = a;
    for (int iter = 0; iter < 200; ++iter) {
        Rational fb = f.eval(b);
        if (fb == 0) break;
        if (vp_nonzero(fb, p) > D + vd) break;
        b -= fb / df.eval(b);
        Integer r = mod_int(b, pM);
        if (2 * r > pM) r -= pM;
        b = r;
    }
    Rational root = truncate_padic(b, p, D);
    Rational fr = f.eval(root);
    w.root = root;
    w.digits = D;
    w.residual_valuation = fr == 0 ? LONG_MAX : vp_nonzero(fr, p);
    if (w.residual_valuation <= digits)
        throw Error("PrecisionExhausted", "Newton iteration did not reach the digit target");
    Rational diff = root - a;
    if (diff != 0 && vp_nonzero(diff, p) <= vd)
        throw Error("InternalError", "lifted root left the Hensel disc");
    return w;
}

}  // namespace padicforms
