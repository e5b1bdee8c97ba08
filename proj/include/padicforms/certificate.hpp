#pragma once

#include "padicforms/construct.hpp"
#include "padicforms/h10.hpp"
#include "padicforms/newton.hpp"
#include "padicforms/reciprocity.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace padicforms {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "padic-forms/1";

// "schema", "kind", "prime", "precision", "uniformizer"
Json certificate_header(const std::string& kind, const PadicContext& ctx);
PadicContext context_of(const Json& cert);

Json certify_newton(const QPoly& f, const PadicContext& ctx);
Json certify_slopes(const QPoly& f, long digits, const PadicContext& ctx);
// x over Q_p, or the class of x(alpha) in Q_p(alpha) when a modulus is given
Json certify_squareclass(const QPoly& x, const std::optional<QPoly>& field, const PadicContext& ctx);
Json certify_hilbert(const QPoly& a, const QPoly& b, const std::optional<QPoly>& field, const PadicContext& ctx);
Json certify_isotropy(const std::vector<QPoly>& entries, const std::optional<QPoly>& field, const PadicContext& ctx);
Json certify_symbol(const SymbolRecord& rec, const PadicContext& ctx);
Json certify_multiplicativity(const QPoly& p, const QPoly& r, const QPoly& q, const PadicContext& ctx);
Json certify_reciprocity(const QPoly& p, const QPoly& q, const PadicContext& ctx);
Json certify_construction(const CorollaryResult& res);
Json certify_predicate(const RatFunc& x, const Rational& gamma, const PredicateResult& res, const PadicContext& ctx);
Json certify_elliptic(const Rational& y, const HenselWitness& w, const PadicContext& ctx);
Json certify_corpus(const CorpusReport& rep, int max_degree, const PadicContext& ctx);

struct VerifyReport {
    bool valid = true;
    std::string kind;
    std::vector<std::string> problems;
};

// Recomputes every recorded value from the certificate's own inputs.
VerifyReport verify_certificate(const Json& cert);

}  // namespace padicforms
