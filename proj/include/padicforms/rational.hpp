#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace padicforms {

using Integer = mpz_class;
using Rational = mpq_class;

/* Base class for every error the library reports.  The kind string is the
 * stable identifier used in CLI diagnostics and JSON output. */
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

// Exponent of p in a nonzero integer.
long vp(const Integer& x, const Integer& p);
// Exponent of p in a rational; nullopt stands for +infinity (x = 0).
std::optional<long> vp(const Rational& x, const Integer& p);
// Same, but throws for zero.
long vp_nonzero(const Rational& x, const Integer& p);

Integer ipow(const Integer& b, unsigned long k);
Rational qpow(const Rational& b, long k);

// x with all factors of p removed.
Rational strip_p(const Rational& x, const Integer& p);

// x mod m for a p-integral x (denominator invertible mod m), result in [0, m).
Integer mod_int(const Rational& x, const Integer& m);

// Balanced representative of x modulo p^M, as a rational with the same
// p-adic valuation class: x = p^v u  ->  p^v (u mod p^(M-v)), |.| <= p^(M-v)/2.
// Zero if v(x) >= M.
Rational truncate_padic(const Rational& x, const Integer& p, long M);

// Rational reconstruction of r mod m with |num|, den <= bound.
std::optional<Rational> rational_reconstruct(const Integer& r, const Integer& m, const Integer& bound);

std::string to_string(const Rational& x);        // always "num/den"
std::string to_short_string(const Rational& x);  // "num" when den == 1
Rational parse_rational(const std::string& s);

bool is_prime(const Integer& p);

}  // namespace padicforms
