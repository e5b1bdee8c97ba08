#pragma once

// Instances shared by the unit tests and the acceptance runner.

#include "padicforms/h10.hpp"
#include "padicforms/newton.hpp"

#include <random>
#include <vector>

namespace fixture {

using namespace padicforms;

inline QPoly P(std::vector<long> c)
{
    std::vector<Rational> r(c.begin(), c.end());
    return QPoly(r);
}

struct Instance {
    long p;
    QPoly g;
    bool odd_denominators;
};

inline std::vector<Instance> hand_picked()
{
    return {
        {3, P({-9, 0, 1}), true},
        {3, P({1, 0, 1}), true},
        {5, P({-2, 0, 1}), true},
        {2, P({1, 1, 1}) * P({16, 4, 1}), true},  // two slopes
        {3, P({2, -3, 1}), true},                  // reducible slope factor
        {2, P({1, 1, 0, 0, 1}), true},
        {3, P({-3, 0, 1}), false},
        {2, P({-2, 0, 1}), false},
        {3, P({-3, 0, 0, 0, 1}), false},
        {3, P({-3, 0, 1}) * P({-27, 0, 1}), false},  // two even slopes
        {5, P({-5, 0, 1}), false},
        {2, P({1, 1, 1}) * P({-2, 0, 1}), false},  // one slope of each parity
    };
}

inline long uniform(std::mt19937_64& rng, long a, long b) { return std::uniform_int_distribution<long>(a, b)(rng); }

inline Rational random_unit(std::mt19937_64& rng, long p)
{
    long u;
    do u = uniform(rng, -30, 30);
    while (u % p == 0);
    return Rational(u);
}

// degree 1..6, coefficient valuations 0..4, nonzero constant term
inline QPoly random_polynomial(std::mt19937_64& rng, long p, int max_degree = 6)
{
    int deg = static_cast<int>(uniform(rng, 1, max_degree));
    std::vector<Rational> co;
    for (int i = 0; i <= deg; ++i) co.push_back(Rational(uniform(rng, -20, 20)) * qpow(Rational(p), uniform(rng, 0, 4)));
    if (co[0] == 0) co[0] = p;
    if (co[deg] == 0) co[deg] = 1;
    return QPoly(co);
}

/* f = a + g t^N + z t^(2N + deg g - deg z) with a one-edge polygon of integral
 * slope m and a rational alpha with v(alpha) != -m and N > v(4) / |m + v(alpha)|. */
struct OneEdgeCase {
    QPoly f;
    OneEdgeDecomposition dec;
    Rational alpha;
};

inline OneEdgeCase random_one_edge(std::mt19937_64& rng, long p)
{
    const long v4 = p == 2 ? 2 : 0;
    const long m = uniform(rng, -2, 2);
    long k;
    do k = uniform(rng, -2, 2);
    while (k == -m);
    const long gap = std::labs(m + k);
    int N = static_cast<int>(uniform(rng, 1, 3));
    while (N * gap <= v4) ++N;
    const int dz = 2 * static_cast<int>(uniform(rng, 0, (N - 1) / 2));
    const int dg = uniform(rng, 0, 2) == 0 ? 0 : 2 * static_cast<int>(uniform(rng, 0, 1));
    const bool has_g = dg > 0 || uniform(rng, 0, 1) == 1;
    const int D = 2 * N + (has_g ? dg : 0);
    const long v0 = uniform(rng, 0, 2);
    auto coef = [&](int i, bool endpoint) {
        long line = v0 + m * i;
        long e = endpoint ? line : line + uniform(rng, 0, 2);
        Rational c = (endpoint ? random_unit(rng, p) : Rational(uniform(rng, -9, 9))) * qpow(Rational(p), e);
        return c;
    };
    std::vector<Rational> a(static_cast<size_t>(uniform(rng, 1, N))), g, z(static_cast<size_t>(dz + 1));
    for (size_t i = 0; i < a.size(); ++i) a[i] = coef(static_cast<int>(i), i == 0);
    if (has_g) {
        g.resize(static_cast<size_t>(dg + 1));
        for (size_t i = 0; i < g.size(); ++i) g[i] = coef(N + static_cast<int>(i), false);
        if (g.back() == 0) g.back() = qpow(Rational(p), v0 + m * (N + dg) + 1);
    }
    const int ez = D - dz;
    for (size_t i = 0; i < z.size(); ++i) z[i] = coef(ez + static_cast<int>(i), static_cast<int>(i) == dz);
    OneEdgeCase out;
    out.dec = {QPoly(a), QPoly(g), QPoly(z), N};
    out.f = out.dec.a + out.dec.g.shift(N) + out.dec.z.shift(ez);
    do out.alpha = random_unit(rng, p) * qpow(Rational(p), k);
    while (out.f.eval(out.alpha) == 0);
    return out;
}

/* numerator and denominator of degree <= max_degree with small integer
 * coefficients, one of them carrying a factor t^|s|, s in [-2, 2], so both
 * signs of v_t(x) are common */
inline RatFunc random_ratfunc(std::mt19937_64& rng, int max_degree = 4)
{
    auto poly = [&](int d) {
        std::vector<Rational> c;
        for (int i = 0; i <= d; ++i) c.push_back(Rational(uniform(rng, -6, 6)));
        if (c.back() == 0) c.back() = 1;
        if (c[0] == 0) c[0] = uniform(rng, 1, 3);
        return QPoly(c);
    };
    const int s = static_cast<int>(uniform(rng, -2, 2));
    QPoly n = poly(static_cast<int>(uniform(rng, 0, max_degree - std::max(s, 0))));
    QPoly d = poly(static_cast<int>(uniform(rng, 0, max_degree - std::max(-s, 0))));
    if (s > 0) n = n * QPoly::monomial(1, s);
    if (s < 0) d = d * QPoly::monomial(1, -s);
    return RatFunc(n, d);
}

}  // namespace fixture
