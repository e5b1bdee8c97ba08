#pragma once

#include "padicforms/finite_field.hpp"
#include "padicforms/padic.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace padicforms {

struct PolygonPoint {
    int i;
    long v;
};

struct PolygonEdge {
    PolygonPoint start, end;
    Rational slope;
    int length() const { return end.i - start.i; }
    // denominator of the slope in lowest terms
    long denominator() const { return slope.get_den().get_si(); }
};

struct NewtonPolygon {
    std::vector<PolygonPoint> points;  // only nonzero coefficients
    std::vector<PolygonPoint> vertices;
    std::vector<PolygonEdge> edges;

    bool one_edge() const { return edges.size() == 1; }
    bool all_vertices_even() const;
};

// Lower convex hull of (i, v(f_i)).  Throws ZeroEndpoint if f(0) = 0 or f = 0.
NewtonPolygon newton_polygon(const QPoly& f, const PadicContext& ctx);

// Reduction of a one-edge polynomial to k[u], u = pi^(m d) t^d: coefficient of
// t^(start+beta) maps to res(c / pi^(v_start + m beta)) when d | beta.
FpPoly residual_polynomial(const QPoly& f, const PolygonEdge& edge, const PadicContext& ctx);
FpPoly residual_polynomial(const QPoly& f, const PadicContext& ctx);  // f one-edge

struct SlopeFactor {
    QPoly poly;  // monic, one edge
    Rational slope;
    int degree;
    long denominator;
    bool exact = false;  // true when the factor is an exact rational factor of f
};

struct SlopeFactorization {
    Rational unit;
    std::vector<SlopeFactor> factors;
    long digits;
    long residual_valuation;  // min valuation of unit*prod - f (LONG_MAX if exact)
};

SlopeFactorization slope_factorization(const QPoly& f, long digits, const PadicContext& ctx);

// Minimum coefficient valuation of f (LONG_MAX for zero).
long min_coeff_valuation(const QPoly& f, const Integer& p);
QPoly truncate_coeffs(const QPoly& f, const Integer& p, long M);

/* A one-edge factor split along coprime factors of its residual polynomial.
 * `irreducible` is set when the residual factor appears with exponent one,
 * which certifies irreducibility over Q_p. */
struct ResidualPiece {
    QPoly poly;
    FpPoly residual_factor;  // monic irreducible over F_p
    int residual_exponent;
    bool irreducible;
};
std::vector<ResidualPiece> split_by_residual(const QPoly& g, long digits, const PadicContext& ctx);

// Irreducibility via the reduction criterion.  Throws NotOneEdge.
bool reduction_irreducible(const QPoly& c, const PadicContext& ctx);
// "linear", "ramified" (slope denominator = degree), "residual", or nullopt
std::optional<std::string> irreducibility_evidence(const QPoly& c, const PadicContext& ctx);

/* Evaluate the square class of f(alpha) for a one-edge f through the
 * decomposition f = a + g t^N + z t^(2N + deg g - deg z). */
struct OneEdgeDecomposition {
    QPoly a, g, z;
    int N;
};
Rational square_class_at_root_one_edge(const QPoly& f, const OneEdgeDecomposition& dec, const Rational& alpha,
                                       const PadicContext& ctx);

// Random search for an irreducible cbar = abar + q1 * bbar over F_p.
struct ShapeConstraints {
    FpPoly abar, bbar;
    int n_prime;      // N' = N / d
    int g_shift;      // G
    int e_start;      // first even e' tried
    long budget = 4000;   // samples per e'
    int max_escalations = 8;
};
struct ShapeSearchResult {
    FpPoly cbar, q1bar;
    int e_prime;
    long samples;
};
ShapeSearchResult random_irreducible_search(const ShapeConstraints& sc, std::uint64_t seed);

// Hensel lifting of an approximate factorization f ~ A * B (A monic) where A and
// B reduce to coprime factors for the weight lambda.  Returns false on stall.
bool hensel_split(const QPoly& f, QPoly& A, QPoly& B, long work_digits, const PadicContext& ctx);

}  // namespace padicforms
