#pragma once

#include "padicforms/rational.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace padicforms {

using u64 = std::uint64_t;

// Polynomial over the prime field F_p (p < 2^31), ascending coefficients.
class FpPoly {
public:
    FpPoly() = default;
    FpPoly(u64 p, std::vector<u64> coeffs);
    static FpPoly constant(u64 p, u64 c) { return FpPoly(p, {c % p}); }
    static FpPoly monomial(u64 p, u64 c, int k);

    u64 prime() const { return p_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<u64>& coeffs() const { return c_; }
    u64 operator[](int i) const { return (i < 0 || i > degree()) ? 0 : c_[i]; }
    u64 lc() const { return c_.empty() ? 0 : c_.back(); }

    FpPoly operator+(const FpPoly& o) const;
    FpPoly operator-(const FpPoly& o) const;
    FpPoly operator*(const FpPoly& o) const;
    FpPoly scale(u64 s) const;
    FpPoly monic() const;
    FpPoly derivative() const;
    u64 eval(u64 x) const;
    friend bool operator==(const FpPoly& a, const FpPoly& b) { return a.p_ == b.p_ && a.c_ == b.c_; }
    friend bool operator!=(const FpPoly& a, const FpPoly& b) { return !(a == b); }

private:
    void trim();
    u64 p_ = 2;
    std::vector<u64> c_;
};

u64 fp_inv(u64 a, u64 p);
u64 fp_pow(u64 a, u64 e, u64 p);

std::pair<FpPoly, FpPoly> divmod(const FpPoly& a, const FpPoly& b);
FpPoly operator%(const FpPoly& a, const FpPoly& b);
FpPoly gcd(FpPoly a, FpPoly b);
FpPoly powmod(const FpPoly& a, const Integer& k, const FpPoly& m);

bool is_irreducible(const FpPoly& f);

struct FpFactor {
    FpPoly factor;  // monic irreducible
    int exponent;
};
// Complete factorization of a nonzero polynomial into monic irreducibles (sorted).
std::vector<FpFactor> factor(const FpPoly& f, std::mt19937_64& rng);
std::vector<FpFactor> factor(const FpPoly& f);

FpPoly random_poly(u64 p, int degree_bound, std::mt19937_64& rng);

// The finite field F_p[X]/(phi) with phi monic irreducible; elements are FpPoly of degree < deg phi.
class FiniteField {
public:
    explicit FiniteField(FpPoly modulus);
    static FiniteField prime_field(u64 p) { return FiniteField(FpPoly(p, {0, 1})); }

    u64 p() const { return modulus_.prime(); }
    int degree() const { return modulus_.degree(); }
    Integer order() const;
    const FpPoly& modulus() const { return modulus_; }

    FpPoly reduce(const FpPoly& a) const { return a % modulus_; }
    FpPoly add(const FpPoly& a, const FpPoly& b) const { return a + b; }
    FpPoly sub(const FpPoly& a, const FpPoly& b) const { return a - b; }
    FpPoly mul(const FpPoly& a, const FpPoly& b) const { return (a * b) % modulus_; }
    FpPoly pow(const FpPoly& a, const Integer& k) const { return powmod(a, k, modulus_); }
    FpPoly inv(const FpPoly& a) const;
    FpPoly one() const { return FpPoly::constant(p(), 1); }
    FpPoly gen() const { return reduce(FpPoly(p(), {0, 1})); }

    // Euler criterion: +1 square, -1 nonsquare, 0 for zero
    int quadratic_character(const FpPoly& a) const;
    // square root; for p = 2 always exists
    FpPoly sqrt(const FpPoly& a) const;
    // absolute trace to F_p
    u64 trace(const FpPoly& a) const;
    // p = 2 only: x with x^2 + x = c, requires trace(c) = 0
    FpPoly artin_schreier(const FpPoly& c) const;
    // coordinates in the basis X^j
    std::vector<u64> coords(const FpPoly& a) const;

private:
    FpPoly modulus_;
};

}  // namespace padicforms
