#pragma once

#include "padicforms/localfield.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace padicforms {

// ---- forms over a local field ----

bool isotropic_over_local(const std::vector<LocalFieldElement>& entries);
bool isotropic_over_local(const std::vector<Rational>& entries, const PadicContext& ctx);

// Hasse invariant prod_{i<j} (a_i, a_j)
int hasse_invariant(const std::vector<LocalFieldElement>& entries);

// Whether <1,pi> (x) <x_1..x_m> is zero in W(L).  Uses only symbols of the
// form (x, -pi), so it also works above the native degree limit.
bool pi_multiple_is_zero(const std::vector<LocalFieldElement>& psi);

// Whether a general diagonal form is hyperbolic over L.
bool witt_zero(const std::vector<LocalFieldElement>& entries);

// <1,a_1> (x) ... (x) <1,a_n>, 2^n entries in binary order
template <class T>
std::vector<T> pfister_entries(const std::vector<T>& slots, const T& one)
{
    std::vector<T> out{one};
    for (const auto& a : slots) {
        const size_t n = out.size();
        for (size_t k = 0; k < n; ++k) out.push_back(out[k] * a);
    }
    return out;
}

// ---- forms over K(t) with entries given by certified factorizations ----

/* Monic polynomials known to be irreducible over Q_p.  Index 0 is always t. */
class FactorBase {
public:
    explicit FactorBase(PadicContext ctx);

    const PadicContext& ctx() const { return ctx_; }
    // index of q, adding it when new; throws NotIrreducible when q cannot be certified
    int add(const QPoly& q);
    std::optional<int> find(const QPoly& q) const;
    const QPoly& poly(int k) const { return polys_.at(static_cast<size_t>(k)); }
    const std::string& evidence(int k) const { return evidence_.at(static_cast<size_t>(k)); }
    int size() const { return static_cast<int>(polys_.size()); }
    LocalField field(int k) const;

private:
    PadicContext ctx_;
    std::vector<QPoly> polys_;
    std::vector<std::string> evidence_;
    mutable std::map<int, LocalField> fields_;
};

// unit * prod base[k]^e_k
struct FactoredElement {
    Rational unit = 1;
    std::map<int, int> powers;

    static FactoredElement constant(const Rational& c) { return {c, {}}; }
    static FactoredElement factor(int k, int e = 1) { return {1, {{k, e}}}; }
    int exponent(int k) const;
    FactoredElement operator*(const FactoredElement& o) const;
    FactoredElement operator-() const { return {-unit, powers}; }
    // the element as a quotient of polynomials (numerator, denominator)
    std::pair<QPoly, QPoly> expand(const FactorBase& base) const;
    std::string str(const FactorBase& base) const;
};

/* Diagonal form over K(t).  When pi_multiple is set the form is <1,pi> (x) entries. */
struct FunctionForm {
    std::vector<FactoredElement> entries;
    bool pi_multiple = false;

    int dimension() const { return static_cast<int>(entries.size()) * (pi_multiple ? 2 : 1); }
    std::vector<FactoredElement> expanded(const PadicContext& ctx) const;
};

struct ResidueSplit {
    int place;  // index into the factor base
    QPoly q;
    std::vector<LocalFieldElement> first, second;  // entries without the <1,pi> factor
    bool pi_multiple = false;
};

ResidueSplit second_residue(const FunctionForm& form, int place, const FactorBase& base);

struct ResidueTest {
    int place;
    std::string q;
    int first_dim, second_dim;
    bool second_zero;
};

struct MilnorVerdict {
    bool isotropic = false;     // certified by the residue rule
    std::optional<int> blocking;  // a place with a nonzero second residue
    std::vector<ResidueTest> tests;
};

MilnorVerdict milnor_isotropy(const FunctionForm& form, const FactorBase& base);

// True when both residue forms at `place` are anisotropic (certifies anisotropy).
bool springer_anisotropy(const FunctionForm& form, int place, const FactorBase& base);

}  // namespace padicforms
