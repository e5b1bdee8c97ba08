#include "padicforms/rational.hpp"

namespace padicforms {

long vp(const Integer& x, const Integer& p)
{
    if (x == 0) throw Error("DomainError", "valuation of zero integer");
    mpz_class t = x;
    return static_cast<long>(mpz_remove(t.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t()));
}

std::optional<long> vp(const Rational& x, const Integer& p)
{
    if (x == 0) return std::nullopt;
    return vp(x.get_num(), p) - vp(x.get_den(), p);
}

long vp_nonzero(const Rational& x, const Integer& p)
{
    auto v = vp(x, p);
    if (!v) throw Error("DomainError", "valuation of zero");
    return *v;
}

Integer ipow(const Integer& b, unsigned long k)
{
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), k);
    return r;
}

Rational qpow(const Rational& b, long k)
{
    if (k >= 0) {
        Rational r(ipow(b.get_num(), k), ipow(b.get_den(), k));
        r.canonicalize();
        return r;
    }
    if (b == 0) throw Error("DomainError", "negative power of zero");
    Rational r(ipow(b.get_den(), -k), ipow(b.get_num(), -k));
    r.canonicalize();
    return r;
}

Rational strip_p(const Rational& x, const Integer& p)
{
    if (x == 0) return x;
    Integer n, d;
    mpz_remove(n.get_mpz_t(), x.get_num().get_mpz_t(), p.get_mpz_t());
    mpz_remove(d.get_mpz_t(), x.get_den().get_mpz_t(), p.get_mpz_t());
    Rational r(n, d);
    r.canonicalize();
    return r;
}

Integer mod_int(const Rational& x, const Integer& m)
{
    Integer inv;
    if (!mpz_invert(inv.get_mpz_t(), x.get_den().get_mpz_t(), m.get_mpz_t())) {
        if (m == 1) return 0;
        throw Error("DomainError", "denominator not invertible modulo " + m.get_str());
    }
    Integer r = (x.get_num() * inv) % m;
    if (r < 0) r += m;
    return r;
}

Rational truncate_padic(const Rational& x, const Integer& p, long M)
{
    auto v = vp(x, p);
    if (!v || *v >= M) return 0;
    Rational u = x / qpow(Rational(p), *v);
    Integer m = ipow(p, static_cast<unsigned long>(M - *v));
    Integer r = mod_int(u, m);
    if (2 * r > m) r -= m;
    return Rational(r) * qpow(Rational(p), *v);
}

std::optional<Rational> rational_reconstruct(const Integer& r, const Integer& m, const Integer& bound)
{
    // half-extended Euclid on (m, r)
    Integer r0 = m, r1 = ((r % m) + m) % m;
    Integer t0 = 0, t1 = 1;
    while (r1 > bound) {
        Integer q = r0 / r1;
        Integer tmp = r0 - q * r1;
        r0 = r1;
        r1 = tmp;
        tmp = t0 - q * t1;
        t0 = t1;
        t1 = tmp;
    }
    if (t1 == 0 || abs(t1) > bound) return std::nullopt;
    Integer g = gcd(r1, t1);
    if (g != 1) return std::nullopt;
    Rational out(r1, t1);
    out.canonicalize();
    return out;
}

std::string to_string(const Rational& x)
{
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

std::string to_short_string(const Rational& x)
{
    if (x.get_den() == 1) return x.get_num().get_str();
    return to_string(x);
}

Rational parse_rational(const std::string& s)
{
    Rational r;
    if (s.empty() || r.set_str(s, 10) != 0 || r.get_den() == 0)
        throw Error("ParseError", "not a rational: '" + s + "'");
    r.canonicalize();
    return r;
}

bool is_prime(const Integer& p)
{
    return p >= 2 && mpz_probab_prime_p(p.get_mpz_t(), 30) > 0;
}

}  // namespace padicforms
