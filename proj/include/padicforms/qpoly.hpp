#pragma once

#include "padicforms/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace padicforms {

// Dense univariate polynomial over Q, ascending coefficients, no trailing zeros.
class QPoly {
public:
    QPoly() = default;
    explicit QPoly(std::vector<Rational> coeffs);
    QPoly(const Rational& c);  // NOLINT: constants convert implicitly
    QPoly(long c) : QPoly(Rational(c)) {}  // NOLINT

    static QPoly monomial(const Rational& c, int k);
    static QPoly x() { return monomial(1, 1); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational operator[](int i) const;
    Rational lc() const { return c_.empty() ? Rational(0) : c_.back(); }

    QPoly& operator+=(const QPoly& o);
    QPoly& operator-=(const QPoly& o);
    QPoly& operator*=(const QPoly& o);
    QPoly& operator*=(const Rational& s);
    QPoly operator-() const;

    friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
    friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
    friend QPoly operator*(const QPoly& a, const QPoly& b);
    friend QPoly operator*(QPoly a, const Rational& s) { return a *= s; }
    friend QPoly operator*(const Rational& s, QPoly a) { return a *= s; }
    friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const QPoly& a, const QPoly& b) { return !(a == b); }

    Rational eval(const Rational& x) const;
    QPoly compose(const QPoly& inner) const;
    QPoly derivative() const;
    QPoly monic() const;
    // multiply by t^k (k may be negative when the low coefficients vanish)
    QPoly shift(int k) const;
    // f(s t)
    QPoly scale_var(const Rational& s) const;
    QPoly pow(unsigned k) const;
    // lowest index with nonzero coefficient (t-adic order); -1 for zero
    int t_order() const;

private:
    void trim();
    std::vector<Rational> c_;
};

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);
QPoly operator%(const QPoly& a, const QPoly& b);
QPoly operator/(const QPoly& a, const QPoly& b);  // exact; throws if remainder nonzero
QPoly gcd(QPoly a, QPoly b);                      // monic (or zero)

struct XGcd {
    QPoly g, s, t;  // s a + t b = g, g monic
};
XGcd xgcd(const QPoly& a, const QPoly& b);
// inverse of a modulo m; throws if not coprime
QPoly invmod(const QPoly& a, const QPoly& m);
QPoly mulmod(const QPoly& a, const QPoly& b, const QPoly& m);
QPoly powmod(const QPoly& a, unsigned long k, const QPoly& m);

Rational resultant(const QPoly& a, const QPoly& b);
QPoly squarefree_part(const QPoly& f);
// characteristic polynomial of multiplication by a in Q[t]/(m), m monic
QPoly charpoly_mod(const QPoly& a, const QPoly& m);

// canonical text: descending powers, reduced fractions, e.g. "t^2 - 12*t + 27"
std::string to_string(const QPoly& f);

}  // namespace padicforms
