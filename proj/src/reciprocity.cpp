#include "padicforms/reciprocity.hpp"

#include "padicforms/newton.hpp"

namespace padicforms {

SymbolRecord evaluate_symbol(const QPoly& p, const QPoly& q0, const PadicContext& ctx, bool native)
{
    if (q0.degree() < 1) throw Error("NotIrreducible", "modulus must have positive degree");
    SymbolRecord rec;
    rec.p = p;
    rec.q = q0.monic();
    auto ev = irreducibility_evidence(rec.q, ctx);
    if (!ev) throw Error("NotIrreducible", "cannot certify irreducibility of " + to_string(rec.q));
    rec.evidence = *ev;
    rec.norm = p.is_zero() ? Rational(0) : resultant(rec.q, p);
    if (rec.norm == 0) throw Error("NotCoprime", "numerator shares a root with the modulus");
    rec.norm_route = qp::hilbert_symbol(rec.norm, -ctx.pi(), ctx);
    rec.value = rec.norm_route;
    if (native && rec.q.degree() <= LocalField::kDefaultNativeLimit) {
        LocalField L = LocalField::adjoin_root(ctx, rec.q);
        rec.native = i2_class(L.element(p));
        if (*rec.native != rec.norm_route)
            throw Error("RouteMismatch", "symbol routes disagree for <" + to_string(p) + " / " + to_string(rec.q) + ">");
        rec.value = *rec.native;
    }
    return rec;
}

int legendre_symbol(const QPoly& p, const QPoly& q, const PadicContext& ctx) { return evaluate_symbol(p, q, ctx).value; }

std::optional<bool> square_criterion(const QPoly& p, const QPoly& q, const PadicContext& ctx)
{
    LocalField L = LocalField::adjoin_root(ctx, q.monic());
    LocalFieldElement x = L.element(p);
    if (x.is_zero()) throw Error("NotCoprime", "numerator shares a root with the modulus");
    Rational v = *valuation(x);
    if (v.get_den() != 1) return std::nullopt;
    return is_square(x * L.pi().pow(-v.get_num().get_si()));
}

MultiplicativityCheck check_multiplicativity(const QPoly& p, const QPoly& r, const QPoly& q, const PadicContext& ctx)
{
    return {legendre_symbol(p * r, q, ctx), legendre_symbol(p, q, ctx), legendre_symbol(r, q, ctx)};
}

ConstantCheck constant_symbol_check(const Rational& c, const QPoly& q, const PadicContext& ctx)
{
    if (c == 0) throw Error("DomainError", "constant must be nonzero");
    return {legendre_symbol(QPoly(c), q, ctx), legendre_symbol(QPoly(c), QPoly::x(), ctx), q.degree()};
}

ReciprocityCheck check_reciprocity(const QPoly& p, const QPoly& q, const PadicContext& ctx)
{
    if (p.monic() == q.monic()) throw Error("DomainError", "reciprocity needs distinct polynomials");
    return {legendre_symbol(p, q, ctx), legendre_symbol(QPoly(-1), QPoly::x(), ctx), legendre_symbol(q, p, ctx),
            p.degree(), q.degree()};
}

// ---- corpora ----

namespace {

long balanced(u64 c, u64 p)
{
    long x = static_cast<long>(c);
    if (2 * x > static_cast<long>(p)) x -= static_cast<long>(p);
    return x;
}

long uniform(std::mt19937_64& rng, long lo, long hi)
{
    return std::uniform_int_distribution<long>(lo, hi)(rng);
}

long gcd_long(long a, long b)
{
    while (b) {
        long t = a % b;
        a = b;
        b = t;
    }
    return a < 0 ? -a : a;
}

// integer x with floor(x) > line, as the smallest admissible noise valuation
long above(const Rational& line)
{
    Integer fl = line.get_num() / line.get_den();
    if (line < 0 && fl * line.get_den() != line.get_num()) fl -= 1;
    return fl.get_si() + 1;
}

QPoly shaped_candidate(const PadicContext& ctx, int n, std::mt19937_64& rng)
{
    const u64 p = ctx.p_ui();
    std::vector<long> divisors;
    for (long d = 1; d <= n; ++d)
        if (n % d == 0) divisors.push_back(d);
    const long d = divisors[static_cast<size_t>(uniform(rng, 0, static_cast<long>(divisors.size()) - 1))];
    const int f = n / static_cast<int>(d);
    long a = 0;
    if (d == 1) {
        a = uniform(rng, -1, 2);
    } else {
        do a = uniform(rng, -1, 3);
        while (gcd_long(a, d) != 1);
    }
    // residual polynomial: monic irreducible of degree f with nonzero constant term
    FpPoly r;
    for (;;) {
        std::vector<u64> c(static_cast<size_t>(f) + 1);
        for (int k = 0; k < f; ++k) c[k] = static_cast<u64>(uniform(rng, 0, static_cast<long>(p) - 1));
        c[f] = 1;
        r = FpPoly(p, c);
        if (r[0] != 0 && is_irreducible(r)) break;
    }
    std::vector<Rational> co(static_cast<size_t>(n) + 1);
    const Rational pr(ctx.p());
    for (int i = 0; i <= n; ++i) {
        Rational line = Rational(a * (n - i), d);
        line.canonicalize();
        Rational c = 0;
        if (i % d == 0) {
            long rk = balanced(r[i / static_cast<int>(d)], p);
            if (rk != 0) c = Rational(rk) * qpow(pr, a * (f - i / d));
        }
        if (i < n && uniform(rng, 0, 2) == 0) {
            long e = above(line) + uniform(rng, 0, 2);
            c += Rational(uniform(rng, -4, 4)) * qpow(pr, e);
        }
        co[static_cast<size_t>(i)] = c;
    }
    co[static_cast<size_t>(n)] = 1;
    return QPoly(co);
}

}  // namespace

QPoly random_irreducible(const PadicContext& ctx, int max_degree, std::mt19937_64& rng)
{
    for (int attempt = 0; attempt < 1000; ++attempt) {
        int n = static_cast<int>(uniform(rng, 1, max_degree));
        QPoly q = shaped_candidate(ctx, n, rng);
        if (q[0] == 0 && n > 1) continue;
        if (irreducibility_evidence(q, ctx)) return q;
    }
    throw Error("SearchBudgetExhausted", "no certified irreducible polynomial found");
}

QPoly random_coprime(const QPoly& q, const PadicContext& ctx, int max_degree, std::mt19937_64& rng)
{
    const Rational pr(ctx.p());
    for (;;) {
        int n = static_cast<int>(uniform(rng, 0, max_degree));
        std::vector<Rational> co;
        for (int i = 0; i <= n; ++i) {
            Rational c(uniform(rng, -9, 9), uniform(rng, 1, 4));
            c.canonicalize();
            co.push_back(c * qpow(pr, uniform(rng, -1, 2)));
        }
        if (co.back() == 0) co.back() = 1;
        QPoly f(co);
        if (f.is_zero()) continue;
        if (resultant(q.monic(), f) != 0) return f;
    }
}

std::string law_name(Law law)
{
    switch (law) {
    case Law::Multiplicativity: return "check-mult";
    case Law::Constant: return "check-const";
    case Law::PiInvariance: return "check-pi";
    case Law::Reciprocity: return "check-recip";
    case Law::SquareCriterion: return "check-square";
    }
    return "?";
}

std::optional<Law> parse_law(const std::string& s)
{
    for (Law l : {Law::Multiplicativity, Law::Constant, Law::PiInvariance, Law::Reciprocity, Law::SquareCriterion})
        if (law_name(l) == s) return l;
    return std::nullopt;
}

namespace {

CorpusCase run_case(Law law, const PadicContext& ctx, std::mt19937_64& rng, int max_degree)
{
    CorpusCase cc;
    QPoly q = random_irreducible(ctx, max_degree, rng);
    switch (law) {
    case Law::Multiplicativity: {
        QPoly p = random_coprime(q, ctx, max_degree, rng), r = random_coprime(q, ctx, max_degree, rng);
        auto m = check_multiplicativity(p, r, q, ctx);
        cc.inputs = {to_string(p), to_string(r), to_string(q)};
        cc.values = {m.pr, m.p, m.r};
        cc.pass = m.holds();
        break;
    }
    case Law::Constant: {
        Rational c(uniform(rng, -30, 30), uniform(rng, 1, 12));
        c.canonicalize();
        if (c == 0) c = 1;
        c *= qpow(Rational(ctx.p()), uniform(rng, -1, 2));
        auto k = constant_symbol_check(c, q, ctx);
        cc.inputs = {to_short_string(c), to_string(q)};
        cc.values = {k.lhs, k.at_t};
        cc.pass = k.holds();
        break;
    }
    case Law::PiInvariance: {
        QPoly p = random_coprime(q, ctx, max_degree, rng);
        long n = uniform(rng, 1, 3);
        int base = legendre_symbol(p, q, ctx);
        int shifted = legendre_symbol(p * ctx.pi_pow(n), q, ctx);
        cc.inputs = {to_string(p), to_string(q), std::to_string(n)};
        cc.values = {base, shifted};
        cc.pass = base == shifted;
        break;
    }
    case Law::Reciprocity: {
        QPoly p = random_irreducible(ctx, max_degree, rng);
        while (p == q) p = random_irreducible(ctx, max_degree, rng);
        auto r = check_reciprocity(p, q, ctx);
        cc.inputs = {to_string(p), to_string(q)};
        cc.values = {r.pq, r.minus_one_t, r.qp};
        cc.pass = r.holds();
        break;
    }
    case Law::SquareCriterion: {
        if (ctx.p() == 2) throw Error("DomainError", "the square criterion is stated for odd residue characteristic");
        QPoly p = random_coprime(q, ctx, max_degree, rng);
        int sym = legendre_symbol(p, q, ctx);
        auto crit = square_criterion(p, q, ctx);
        LocalField L = LocalField::adjoin_root(ctx, q);
        cc.inputs = {to_string(p), to_string(q)};
        cc.values = {sym, crit ? (*crit ? 1 : -1) : 0};
        cc.pass = crit && ((*crit ? 1 : -1) == sym);
        cc.note = "e=" + std::to_string(L.e()) + (crit ? "" : " v(p(alpha)) not integral");
        break;
    }
    }
    return cc;
}

}  // namespace

CorpusReport run_law_corpus(Law law, const PadicContext& ctx, int cases, std::uint64_t seed, int max_degree)
{
    CorpusReport rep;
    rep.law = law;
    rep.p = ctx.p().get_si();
    rep.seed = seed;
    std::mt19937_64 rng(seed);
    for (int k = 0; k < cases; ++k) {
        CorpusCase cc;
        try {
            cc = run_case(law, ctx, rng, max_degree);
        } catch (const Error& e) {
            cc.pass = false;
            cc.note = e.what();
        }
        ++rep.cases;
        if (cc.pass) ++rep.passes;
        rep.results.push_back(std::move(cc));
    }
    return rep;
}

UniformizerReport compare_uniformizers(long p, int cases, std::uint64_t seed, int max_degree)
{
    UniformizerReport rep;
    rep.unit = p == 2 ? Rational(3) : Rational(qp::least_nonresidue(p));
    PadicContext c1(p), c2(p, 64, rep.unit * p);
    std::mt19937_64 rng(seed);
    for (int k = 0; k < cases; ++k) {
        QPoly q = random_irreducible(c1, max_degree, rng);
        QPoly f = random_coprime(q, c1, max_degree, rng);
        ++rep.cases;
        if (legendre_symbol(f, q, c1) != legendre_symbol(f, q, c2)) ++rep.differ;
    }
    return rep;
}

}  // namespace padicforms
