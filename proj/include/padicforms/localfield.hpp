#pragma once

#include "padicforms/finite_field.hpp"
#include "padicforms/padic.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace padicforms {

class LocalFieldElement;

/* A finite extension L = Q_p[t]/(q) with q certified irreducible, either by
 * degree one or by the reduction criterion on its one-edge Newton polygon.
 * For degree up to `native_limit` an integral basis {w^i th^j} is built, where
 * w = alpha^x pi^y is a uniformizer and th = alpha^d pi^(-a) lifts a generator of
 * the residue field; square classes and Hilbert symbols are then computed
 * inside L.  Larger fields only support norm-based operations. */
class LocalField {
public:
    static constexpr int kDefaultNativeLimit = 12;

    static LocalField base(const PadicContext& ctx);
    static LocalField adjoin_root(const PadicContext& ctx, const QPoly& q, int native_limit = kDefaultNativeLimit);

    const PadicContext& ctx() const;
    const QPoly& modulus() const;
    int degree() const;
    int e() const;
    int f() const;
    bool native() const;
    // uniformizer exponents: w = alpha^x * pi^y
    long uniformizer_alpha_exp() const;
    long uniformizer_pi_exp() const;
    const FiniteField& residue_field() const;

    LocalFieldElement element(const QPoly& rep) const;
    LocalFieldElement element(const Rational& c) const;
    LocalFieldElement element(long c) const;
    LocalFieldElement generator() const;
    LocalFieldElement uniformizer() const;
    LocalFieldElement pi() const;

    struct Data;
    const Data& data() const { return *d_; }
    bool same_as(const LocalField& o) const { return d_ == o.d_; }

private:
    explicit LocalField(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
    std::shared_ptr<const Data> d_;
};

class LocalFieldElement {
public:
    LocalFieldElement(LocalField field, QPoly rep);

    const LocalField& field() const { return field_; }
    const QPoly& rep() const { return rep_; }
    bool is_zero() const { return rep_.is_zero(); }

    LocalFieldElement operator+(const LocalFieldElement& o) const;
    LocalFieldElement operator-(const LocalFieldElement& o) const;
    LocalFieldElement operator*(const LocalFieldElement& o) const;
    LocalFieldElement operator-() const;
    LocalFieldElement inverse() const;
    LocalFieldElement pow(long k) const;
    friend bool operator==(const LocalFieldElement& a, const LocalFieldElement& b) { return a.rep_ == b.rep_; }

private:
    LocalField field_;
    QPoly rep_;
};

// Square class in an extension: valuation parity and the F_2-coordinates of the unit part.
struct SquareClassTag {
    int parity = 0;
    std::vector<int> unit_bits;
    bool is_trivial() const;
    std::string str() const;
    friend bool operator==(const SquareClassTag& a, const SquareClassTag& b)
    {
        return a.parity == b.parity && a.unit_bits == b.unit_bits;
    }
};

Rational norm(const LocalFieldElement& x);
// v(x) with v(p) = 1, via the norm; nullopt for zero
Valuation valuation(const LocalFieldElement& x);
bool is_square(const LocalFieldElement& x);
SquareClassTag square_class(const LocalFieldElement& x);
int hilbert_symbol(const LocalFieldElement& a, const LocalFieldElement& b);
// Same as hilbert_symbol but never dispatches to the Q_p closed formulas.
int hilbert_symbol_native(const LocalFieldElement& a, const LocalFieldElement& b);
// (u, -pi)_L: the class of <1,pi><1,-u> in I^2(L)
int i2_class(const LocalFieldElement& u);

// Coordinates of x in the integral basis (exact rationals); needs native().
std::vector<Rational> basis_coords(const LocalFieldElement& x);

}  // namespace padicforms
