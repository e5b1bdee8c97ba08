#pragma once

#include "padicforms/localfield.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace padicforms {

/* One evaluation of the polynomial symbol <p/q>: the class of <1,pi><1,-p(alpha)>
 * in I^2(K(alpha)).  Two routes are kept apart: the Hilbert symbol (p(alpha), -pi)
 * computed inside K(alpha), and (N p(alpha), -pi) over Q_p with N the resultant. */
struct SymbolRecord {
    QPoly p, q;
    int value = 0;
    std::optional<int> native;  // computed in K(alpha) when deg q is within the native limit
    int norm_route = 0;
    Rational norm;              // Res(q, p) = prod p(alpha_i)
    std::string evidence;       // irreducibility evidence for q
};

SymbolRecord evaluate_symbol(const QPoly& p, const QPoly& q, const PadicContext& ctx, bool native = true);
int legendre_symbol(const QPoly& p, const QPoly& q, const PadicContext& ctx);

// For odd p: whether pi^(-v(p(alpha))) p(alpha) is a square in K(alpha); nullopt when v is not an integer.
std::optional<bool> square_criterion(const QPoly& p, const QPoly& q, const PadicContext& ctx);

struct MultiplicativityCheck {
    int pr, p, r;
    bool holds() const { return pr == p * r; }
};
MultiplicativityCheck check_multiplicativity(const QPoly& p, const QPoly& r, const QPoly& q, const PadicContext& ctx);

struct ConstantCheck {
    int lhs;       // <c/q>
    int at_t;      // <c/t>
    int degree;
    bool holds() const { return lhs == ((degree % 2) ? at_t : 1); }
};
ConstantCheck constant_symbol_check(const Rational& c, const QPoly& q, const PadicContext& ctx);

struct ReciprocityCheck {
    int pq, minus_one_t, qp;
    int deg_p, deg_q;
    bool holds() const { return pq == (((deg_p * deg_q) % 2) ? minus_one_t : 1) * qp; }
};
ReciprocityCheck check_reciprocity(const QPoly& p, const QPoly& q, const PadicContext& ctx);

// ---- randomized corpora ----

// Monic polynomial of degree 1..max_degree certified irreducible over Q_p.
QPoly random_irreducible(const PadicContext& ctx, int max_degree, std::mt19937_64& rng);
// Polynomial of degree <= max_degree coprime to q, with small rational coefficients.
QPoly random_coprime(const QPoly& q, const PadicContext& ctx, int max_degree, std::mt19937_64& rng);

enum class Law { Multiplicativity, Constant, PiInvariance, Reciprocity, SquareCriterion };
std::string law_name(Law law);
std::optional<Law> parse_law(const std::string& s);

struct CorpusCase {
    std::vector<std::string> inputs;
    std::vector<int> values;
    bool pass = false;
    std::string note;
};

struct CorpusReport {
    Law law;
    long p;
    std::uint64_t seed;
    int cases = 0;
    int passes = 0;
    int skipped = 0;
    std::vector<CorpusCase> results;
};

CorpusReport run_law_corpus(Law law, const PadicContext& ctx, int cases, std::uint64_t seed, int max_degree = 4);

// Exploratory: how often <p/q> changes when pi = p is replaced by pi = u p.
struct UniformizerReport {
    int cases = 0;
    int differ = 0;
    Rational unit;
};
UniformizerReport compare_uniformizers(long p, int cases, std::uint64_t seed, int max_degree = 4);

}  // namespace padicforms
