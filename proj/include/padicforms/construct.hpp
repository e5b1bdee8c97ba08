#pragma once

#include "padicforms/quadform.hpp"
#include "padicforms/reciprocity.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace padicforms {

struct CertifiedFactor {
    QPoly poly;  // monic
    std::string evidence;
};

struct SlopeBlock {
    Rational slope;  // edge slope m (roots have valuation -m)
    long denominator;
    int degree;
    QPoly g;  // monic slope factor
    bool exact;
    std::vector<CertifiedFactor> factors;
};

struct ConstructionParams {
    PadicContext ctx;
    Rational gamma;
    QPoly input;      // g as given
    QPoly g;          // odd part of the input scaled to a unit leading coefficient
    Rational epsilon;  // leading coefficient of g
    long pi_shift = 0;  // g = pi^pi_shift * input / square
    int N = 1;
    long digits = 40;
    std::vector<SlopeBlock> blocks;
};

ConstructionParams prepare(const Rational& gamma, const QPoly& g, const PadicContext& ctx, long digits = 40);

// Lift identities of an odd-denominator slope.
struct OddCaseWitness {
    long A, B, G;
    int e_prime;
    long samples;
    QPoly h, a, b, q, r, c;
    FpPoly abar, bbar, cbar, q1bar;
};

// Escalation record of an even-denominator factor.
struct EvenCaseWitness {
    long A;
    int escalations;
    QPoly p;  // s_ij - g_ij
    std::vector<std::pair<Rational, Rational>> margins;  // (v(p(alpha)), v(g_ij(alpha))) per other factor
};

struct SFactor {
    int block;
    int index;  // factor index inside the block (always 0 for odd denominators)
    QPoly poly;
    std::string evidence;
    std::optional<OddCaseWitness> odd;
    std::optional<EvenCaseWitness> even;
};

struct SymbolCheck {
    std::string name;   // e.g. "vw-ts", "vw2"
    std::string where;  // human label of the factor(s)
    int lhs = 0, rhs = 1;
    bool holds() const { return lhs == rhs; }
};

struct ConstructionCertificate {
    QPoly s;
    std::vector<SFactor> factors;
    std::vector<SymbolCheck> direct;   // (vw-sg), (vw-ts), (vw-tg)
    std::vector<SymbolCheck> derived;  // (vw-product), (vw2), (vw1)
    std::vector<SymbolCheck> gamma;    // <gamma / s_ij> = 1
    std::vector<std::string> structural;  // failed structural checks (empty when all pass)
    bool direct_ok() const;
    bool derived_ok() const;
    bool ok() const;
};

struct ConstructionResult {
    ConstructionParams params;
    ConstructionCertificate cert;
};

ConstructionResult construct_s(const ConstructionParams& params, std::uint64_t seed);
// Evaluates every condition without throwing.
ConstructionCertificate evaluate_conditions(const ConstructionParams& params, const std::vector<SFactor>& factors);
// Same, but throws ConditionFailed naming the first failing check.
ConstructionCertificate verify_conditions(const ConstructionParams& params, const std::vector<SFactor>& factors);

struct CorollaryResult {
    ConstructionResult construction;
    MilnorVerdict form1, form2;  // <1,pi><1,-gamma><1,-s> and <1,pi><1,tg><1,-ts>
    bool isotropic = false;      // of <1,pi><1,-gamma,-t,-g>
};

// Re-checks the lift identities or escalation margins recorded for one factor; empty when valid.
std::vector<std::string> check_witness(const ConstructionParams& params, const SFactor& factor);

// Milnor residue certification of both Pfister forms for an existing construction.
CorollaryResult corollary_from(const ConstructionResult& construction);
CorollaryResult corollary_isotropy(const Rational& gamma, const QPoly& g, const PadicContext& ctx, std::uint64_t seed);

// ---- the slope ring R = sum pi^a t^b O (a >= m b) and its reduction to F_p[u] ----

bool in_slope_ring(const QPoly& f, const Rational& m, const PadicContext& ctx);
bool in_slope_prime(const QPoly& f, const Rational& m, const PadicContext& ctx);
FpPoly reduce_slope_ring(const QPoly& f, const Rational& m, const PadicContext& ctx);
QPoly lift_slope_ring(const FpPoly& f, const Rational& m, const PadicContext& ctx);

}  // namespace padicforms
