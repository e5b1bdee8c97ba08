#pragma once

#include "padicforms/construct.hpp"
#include "padicforms/newton.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace padicforms {

// num / den in lowest terms with den monic
struct RatFunc {
    QPoly num, den;

    RatFunc() : num(0), den(1) {}
    RatFunc(QPoly n, QPoly d = QPoly(1));
    // t-adic valuation; throws for zero
    int vt() const;
    // valuation at infinity, deg den - deg num
    int vinf() const;
    // coefficient of t^vt in the Laurent expansion at t = 0
    Rational leading_at_t() const;
    bool is_zero() const { return num.is_zero(); }
    std::string str() const;
};

// gamma with <1,pi><1,-gamma> anisotropic over Q_p, i.e. (gamma, -pi) = -1
Rational default_gamma(const PadicContext& ctx);
// throws DomainError when <1,pi><1,-gamma> is isotropic
void validate_gamma(const Rational& gamma, const PadicContext& ctx);

// h = (1 + t + t^2 x^3) / (1 + t x^3) written as HN/HD, and f = h + c t^2
struct FReport {
    RatFunc x, h, f;
    Rational c;
    int vt_h, vinf_h, vt_f;
};
FReport build_f(const RatFunc& x, const Rational& c);
RatFunc h_of(const RatFunc& x);

struct CWitness {
    Rational c;
    long j = 0;        // c = pi^(-j)
    QPoly g;           // HN*HD + c t^2 HD^2
    NewtonPolygon polygon;
};
// Lowers v(c) until every vertex of the polygon of g has even degree.
CWitness choose_c(const RatFunc& h, const PadicContext& ctx, long max_j = 4096);

struct AnisotropyCertificate {
    int vt_f;
    Rational leading;          // f_n
    bool first_anisotropic;    // <1,pi><1,-gamma>, the common first residue form
    bool phi1_isotropic;       // <1,pi><-1,-f_n>
    bool phi2_isotropic;       // <1,pi><-1,-gamma f_n>
    bool difference_nonzero;   // <f_n><1,pi><1,-gamma> != 0 in W(K)
    int anisotropic_form;      // 1 or 2
};
AnisotropyCertificate anisotropy_at_t(const RatFunc& f, const Rational& gamma, const PadicContext& ctx);

struct PredicateResult {
    bool value = false;
    int vt_h = 0, vinf_h = 0;
    RatFunc h;
    std::optional<CWitness> witness;
    // full construction for <1,pi><1,-gamma,-t,-f> and <1,pi><1,-gamma,-t,-gamma f>; only when tractable
    std::optional<CorollaryResult> form1, form2;
    std::string construction_note;
    std::optional<AnisotropyCertificate> anisotropy;
};

struct PredicateOptions {
    int construct_degree = 6;  // run the full construction when deg g is at most this
    std::uint64_t seed = 1;
};

PredicateResult predicate_vt_nonneg(const RatFunc& x, const Rational& gamma, const PadicContext& ctx,
                                    const PredicateOptions& opt = {});

// x in O with x^3 - x = y^2 for v(y) > 0
HenselWitness elliptic_constant_point(const Rational& y, const PadicContext& ctx, long digits);

}  // namespace padicforms
