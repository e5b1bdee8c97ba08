#pragma once

#include "padicforms/qpoly.hpp"

#include <optional>
#include <string>

namespace padicforms {

// Valuation: nullopt encodes +infinity.
using Valuation = std::optional<Rational>;

/* The base field Q_p together with the working precision and the fixed
 * uniformizer.  Every symbol value depends on the uniformizer, so it is part
 * of the context and recorded in all certificates. */
class PadicContext {
public:
    explicit PadicContext(long p, long precision = 64, std::optional<Rational> uniformizer = std::nullopt);

    const Integer& p() const { return p_; }
    unsigned long p_ui() const { return p_.get_ui(); }
    long precision() const { return precision_; }
    const Rational& pi() const { return pi_; }
    // v(4) in the normalization v(pi) = 1
    long v4() const { return p_ == 2 ? 2 : 0; }

    long v(const Rational& x) const { return vp_nonzero(x, p_); }
    Valuation val(const Rational& x) const;
    Integer residue(const Rational& unit) const { return mod_int(unit, p_); }
    // x / pi^v(x)
    Rational unit_part(const Rational& x) const;
    Rational pi_pow(long k) const { return qpow(pi_, k); }

    PadicContext with_precision(long digits) const;

private:
    Integer p_;
    long precision_;
    Rational pi_;
};

// Q_p square-class and Hilbert-symbol routines on exact rationals.
namespace qp {

bool is_square(const Rational& x, const PadicContext& ctx);
// canonical representative (see README); x != 0
Rational square_class(const Rational& x, const PadicContext& ctx);
// the canonical representative set, in fixed order
std::vector<Rational> square_class_reps(const PadicContext& ctx);
int hilbert_symbol(const Rational& a, const Rational& b, const PadicContext& ctx);
// least positive quadratic nonresidue mod p (odd p)
long least_nonresidue(long p);

}  // namespace qp

struct HenselWitness {
    Rational start;           // a
    Rational root;            // b, truncated to `digits` p-adic digits
    Rational slack;           // v(f(a)) - 2 v(f'(a))
    long digits = 0;
    long residual_valuation;  // v(f(b)) (>= digits), exact; LONG_MAX if f(b) = 0
};

// Newton iteration from a with v(f(a)) > 2 v(f'(a)); coefficients p-integral.
HenselWitness hensel_lift(const QPoly& f, const Rational& a, long digits, const PadicContext& ctx);

}  // namespace padicforms
