#include "doctest.h"
#include "padicforms/localfield.hpp"

#include <random>

using namespace padicforms;

namespace {
QPoly P(std::vector<long> c)
{
    std::vector<Rational> r(c.begin(), c.end());
    return QPoly(r);
}

LocalFieldElement random_element(const LocalField& L, std::mt19937_64& rng)
{
    for (;;) {
        std::vector<Rational> c;
        for (int i = 0; i < L.degree(); ++i) {
            Rational r(static_cast<long>(rng() % 19) - 9, static_cast<long>(rng() % 4) + 1);
            r.canonicalize();
            c.push_back(r * qpow(L.ctx().pi(), static_cast<long>(rng() % 3) - 1));
        }
        LocalFieldElement x = L.element(QPoly(c));
        if (!x.is_zero()) return x;
    }
}

std::vector<LocalField> sample_fields()
{
    std::vector<LocalField> out;
    for (long p : {2L, 3L, 5L}) {
        PadicContext c(p);
        out.push_back(LocalField::adjoin_root(c, P({-p, 0, 1})));      // ramified
        out.push_back(LocalField::adjoin_root(c, P({-p * (p == 3 ? 2 : 3), 0, 1})));  // ramified
    }
    out.push_back(LocalField::adjoin_root(PadicContext(2), P({1, 1, 1})));     // unramified
    out.push_back(LocalField::adjoin_root(PadicContext(3), P({1, 0, 1})));     // unramified
    out.push_back(LocalField::adjoin_root(PadicContext(2), P({-2, 0, 0, 1})));  // e = 3
    out.push_back(LocalField::adjoin_root(PadicContext(3), P({-3, 0, 0, 0, 1})));
    out.push_back(LocalField::adjoin_root(PadicContext(2), P({2, 0, 0, 0, 1})));
    return out;
}
}  // namespace

TEST_CASE("local field invariants")
{
    PadicContext c3(3);
    auto L = LocalField::adjoin_root(c3, P({-3, 0, 1}));
    CHECK(L.e() == 2);
    CHECK(L.f() == 1);
    CHECK(*valuation(L.generator()) == Rational(1, 2));
    CHECK(*valuation(L.uniformizer()) == Rational(1, 2));
    auto U = LocalField::adjoin_root(c3, P({1, 0, 1}));
    CHECK(U.e() == 1);
    CHECK(U.f() == 2);
    CHECK_THROWS_AS(LocalField::adjoin_root(c3, P({-1, 0, 1})), Error);
    CHECK_THROWS_AS(LocalField::adjoin_root(c3, P({-9, 0, 1})), Error);
}

TEST_CASE("integral basis is integral and unimodular")
{
    for (const auto& L : sample_fields()) {
        CHECK(L.e() * L.f() == L.degree());
        auto w = L.uniformizer();
        CHECK(*valuation(w) == Rational(1, L.e()));
        for (const auto& c : basis_coords(w.pow(L.e())))
            if (c != 0) CHECK(vp_nonzero(c, L.ctx().p()) >= 0);
    }
}

TEST_CASE("native Hilbert symbol over Q_p matches the closed formulas")
{
    for (long p : {2L, 3L, 5L, 7L}) {
        PadicContext c(p);
        for (long r : {0L, 1L, -3L}) {
            auto L = LocalField::adjoin_root(c, P({-r, 1}));
            for (const auto& a : qp::square_class_reps(c))
                for (const auto& b : qp::square_class_reps(c))
                    CHECK(hilbert_symbol_native(L.element(a), L.element(b)) == qp::hilbert_symbol(a, b, c));
        }
    }
}

TEST_CASE("square classes in extensions")
{
    std::mt19937_64 rng(7);
    for (const auto& L : sample_fields()) {
        for (int i = 0; i < 15; ++i) {
            auto x = random_element(L, rng);
            auto y = random_element(L, rng);
            CHECK(is_square(x * x));
            CHECK(square_class(x * y * y) == square_class(x));
            auto tx = square_class(x), ty = square_class(y), txy = square_class(x * y);
            CHECK(txy.parity == (tx.parity ^ ty.parity));
            for (size_t k = 0; k < tx.unit_bits.size(); ++k)
                CHECK(txy.unit_bits[k] == (tx.unit_bits[k] ^ ty.unit_bits[k]));
        }
    }
}

TEST_CASE("Hilbert symbol laws in extensions")
{
    std::mt19937_64 rng(23);
    for (const auto& L : sample_fields()) {
        for (int i = 0; i < 6; ++i) {
            auto a = random_element(L, rng), b = random_element(L, rng), d = random_element(L, rng);
            int ab = hilbert_symbol(a, b);
            CHECK(ab == hilbert_symbol(b, a));
            CHECK(hilbert_symbol(a, b * d) == ab * hilbert_symbol(a, d));
            CHECK(hilbert_symbol(a, -a) == 1);
            auto oma = L.element(1) - a;
            if (!oma.is_zero()) CHECK(hilbert_symbol(a, oma) == 1);
        }
    }
}

TEST_CASE("Hilbert symbol of a base element against a norm")
{
    // (a, b)_L = (a, N b)_{Q_p} for a in Q_p
    std::mt19937_64 rng(29);
    for (const auto& L : sample_fields()) {
        for (const auto& a : qp::square_class_reps(L.ctx())) {
            for (int i = 0; i < 4; ++i) {
                auto b = random_element(L, rng);
                CHECK(hilbert_symbol(L.element(a), b) == qp::hilbert_symbol(a, norm(b), L.ctx()));
            }
        }
    }
}

TEST_CASE("Hilbert symbol is nondegenerate in extensions")
{
    std::mt19937_64 rng(31);
    for (const auto& L : sample_fields()) {
        for (int i = 0; i < 4; ++i) {
            auto a = random_element(L, rng);
            if (is_square(a)) continue;
            bool found = false;
            for (int k = 0; k < 200 && !found; ++k) found = hilbert_symbol(a, random_element(L, rng)) == -1;
            CHECK(found);
        }
    }
}
