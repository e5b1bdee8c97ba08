#include "doctest.h"
#include "oracles.hpp"
#include "padicforms/h10.hpp"

using namespace padicforms;

namespace {
QPoly P(std::vector<long> c)
{
    std::vector<Rational> r(c.begin(), c.end());
    return QPoly(r);
}
const QPoly t = QPoly::x();
}  // namespace

TEST_CASE("rational functions")
{
    RatFunc x(P({0, 0, 2}), P({0, 4, 4}));  // 2t^2 / (4t + 4t^2) = t / (2 + 2t)
    CHECK(x.vt() == 1);
    CHECK(x.vinf() == 0);
    CHECK(x.leading_at_t() == Rational(1, 2));
    CHECK(x.den.lc() == 1);
    CHECK_THROWS_AS(RatFunc(P({1}), QPoly()), Error);
}

TEST_CASE("build_f case analysis")
{
    auto r0 = build_f(RatFunc(QPoly(0)), 5);
    CHECK(r0.f.num == P({1, 1, 5}));
    CHECK(r0.f.den == P({1}));
    CHECK(r0.vt_f == 0);

    auto r1 = build_f(RatFunc(P({1}), t), 1);
    CHECK(r1.h.num == P({0, 1, 1, 1}));
    CHECK(r1.h.den == P({1, 0, 1}));
    CHECK(r1.vt_h == 1);
    CHECK(r1.vt_f == 1);

    auto r2 = build_f(RatFunc(t), 1);
    CHECK(r2.vt_h == 0);
    CHECK(r2.vinf_h == -1);

    // v_t(x) >= 0 gives v_t(h) = 0, v_inf(h) = -1; v_t(x) <= -1 gives v_t(h) = 1
    for (int k = -3; k <= 3; ++k) {
        QPoly n = P({3, 1, 2}), d = P({1, -2});
        RatFunc x = k >= 0 ? RatFunc(n * QPoly::monomial(1, k), d) : RatFunc(n, d * QPoly::monomial(1, -k));
        auto r = build_f(x, Rational(1, 9));
        CAPTURE(k);
        if (k >= 0) {
            CHECK(r.vt_h == 0);
            CHECK(r.vinf_h == -1);
        } else {
            CHECK(r.vt_h == 1);
            CHECK(r.vt_f == 1);
        }
    }
}

TEST_CASE("choose_c examples")
{
    PadicContext c3(3);
    auto w = choose_c(RatFunc(P({1})), c3);
    CHECK(w.j == 1);
    REQUIRE(w.polygon.vertices.size() == 2);
    CHECK(w.polygon.vertices[1].i == 2);
    CHECK(w.polygon.vertices[1].v == -1);

    auto w2 = choose_c(RatFunc(P({1, 1})), c3);
    CHECK(w2.polygon.all_vertices_even());
    CHECK(w2.polygon.vertices.size() == 2);

    RatFunc h3(P({1, 1, 1}), P({1, 3}));
    auto w3 = choose_c(h3, c3);
    CHECK(w3.polygon.all_vertices_even());
    CHECK(w3.g == h3.num * h3.den + QPoly::monomial(w3.c, 2) * h3.den * h3.den);

    CHECK_THROWS_WITH_AS(choose_c(RatFunc(t), c3), doctest::Contains("PreconditionFailed"), Error);
    CHECK_THROWS_WITH_AS(choose_c(RatFunc(P({1, 0, 0, 1})), c3), doctest::Contains("PreconditionFailed"), Error);
}

TEST_CASE("anisotropy at t")
{
    PadicContext c3(3);
    auto a = anisotropy_at_t(RatFunc(t), 2, c3);
    CHECK(a.vt_f == 1);
    CHECK(a.first_anisotropic);
    CHECK(a.difference_nonzero);
    CHECK(a.anisotropic_form == 1);
    // phi_1 = <1,3><-1,-1> against the conic oracle
    CHECK(a.phi1_isotropic == oracle::form_isotropic({-1, -1, -3, -3}, 3));

    auto b = anisotropy_at_t(RatFunc(t * Rational(2)), 2, c3);
    CHECK(b.anisotropic_form == 2);
    CHECK_THROWS_WITH_AS(anisotropy_at_t(RatFunc(t * t), 2, c3), doctest::Contains("EvenValuation"), Error);
}

TEST_CASE("gamma validation")
{
    for (long p : {2L, 3L, 5L, 7L}) {
        PadicContext ctx(p);
        Rational g = default_gamma(ctx);
        CHECK_NOTHROW(validate_gamma(g, ctx));
        CHECK_FALSE(isotropic_over_local({1, -g, ctx.pi(), -ctx.pi() * g}, ctx));
    }
    PadicContext c3(3);
    CHECK_THROWS_AS(validate_gamma(1, c3), Error);
}

TEST_CASE("predicate examples")
{
    PadicContext c3(3);
    auto r = predicate_vt_nonneg(RatFunc(QPoly(0)), 2, c3);
    CHECK(r.value);
    REQUIRE(r.witness);
    REQUIRE(r.form1);
    REQUIRE(r.form2);
    CHECK(r.form1->isotropic);
    CHECK(r.form2->isotropic);

    auto rt = predicate_vt_nonneg(RatFunc(t), 2, c3);
    CHECK(rt.value);
    CHECK(rt.witness->polygon.all_vertices_even());

    auto rn = predicate_vt_nonneg(RatFunc(P({1}), t), 2, c3);
    CHECK_FALSE(rn.value);
    REQUIRE(rn.anisotropy);
    CHECK(rn.anisotropy->vt_f == 1);
}

TEST_CASE("predicate agrees with the t-adic valuation")
{
    std::mt19937_64 rng(17);
    auto U = [&](long a, long b) { return std::uniform_int_distribution<long>(a, b)(rng); };
    auto rp = [&](int d) {
        std::vector<Rational> c;
        for (int i = 0; i <= d; ++i) c.push_back(Rational(U(-6, 6)));
        if (c.back() == 0) c.back() = 1;
        if (c[0] == 0) c[0] = U(1, 3);
        return QPoly(c);
    };
    for (int k = 0; k < 60; ++k) {
        PadicContext ctx(std::vector<long>{2, 3, 5}[k % 3]);
        QPoly n = rp(static_cast<int>(U(0, 4))), d = rp(static_cast<int>(U(0, 4)));
        long s = U(-2, 2);
        if (s > 0) n = n * QPoly::monomial(1, static_cast<int>(s));
        if (s < 0) d = d * QPoly::monomial(1, static_cast<int>(-s));
        RatFunc x(n, d);
        auto r = predicate_vt_nonneg(x, default_gamma(ctx), ctx);
        CAPTURE(x.str());
        CHECK(r.value == (x.vt() >= 0));
        if (r.value) {
            REQUIRE(r.witness);
            CHECK(r.witness->polygon.all_vertices_even());
        } else {
            REQUIRE(r.anisotropy);
            CHECK(r.anisotropy->vt_f == 1);
        }
    }
}

TEST_CASE("elliptic constant points")
{
    PadicContext c3(3), c2(2);
    auto w = elliptic_constant_point(3, c3, 40);
    CHECK(mod_int(w.root, 27) == 18);
    auto w2 = elliptic_constant_point(2, c2, 40);
    CHECK(mod_int(w2.root, 8) == 4);
    auto w0 = elliptic_constant_point(0, c3, 40);
    CHECK(w0.root == 0);
    CHECK_THROWS_WITH_AS(elliptic_constant_point(Rational(1, 3), c3, 40), doctest::Contains("PreconditionFailed"), Error);
    for (long p : {2L, 3L, 5L})
        for (long k = 1; k <= 3; ++k) {
            PadicContext ctx(p);
            Rational y = Rational(7) * qpow(Rational(p), k);
            auto e = elliptic_constant_point(y, ctx, 40);
            Rational f = e.root * e.root * e.root - e.root - y * y;
            CHECK((f == 0 || ctx.v(f) > 40));
        }
}
