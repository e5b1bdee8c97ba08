#include "doctest.h"
#include "fixtures.hpp"
#include "padicforms/newton.hpp"

#include <random>

using namespace padicforms;

namespace {
QPoly P(std::vector<long> c)
{
    std::vector<Rational> r(c.begin(), c.end());
    return QPoly(r);
}
}  // namespace

TEST_CASE("Newton polygons")
{
    PadicContext c3(3), c5(5);
    auto np = newton_polygon(P({9, 3, 1}), c3);
    REQUIRE(np.edges.size() == 1);
    CHECK(np.edges[0].slope == -1);
    CHECK(np.vertices.size() == 2);
    CHECK(np.all_vertices_even());

    auto np2 = newton_polygon(P({5, 1, 1}), c5);
    REQUIRE(np2.edges.size() == 2);
    CHECK(np2.edges[0].slope == -1);
    CHECK(np2.edges[1].slope == 0);
    CHECK_FALSE(np2.all_vertices_even());

    auto np3 = newton_polygon(P({27, -12, 1}), c3);
    REQUIRE(np3.edges.size() == 2);
    CHECK(np3.edges[0].slope == -2);
    CHECK(np3.edges[1].slope == -1);
    CHECK_THROWS_AS(newton_polygon(P({0, 1}), c3), Error);
}

TEST_CASE("slope factorization examples")
{
    PadicContext c3(3);
    auto sf = slope_factorization(P({27, -12, 1}), 40, c3);
    REQUIRE(sf.factors.size() == 2);
    CHECK(sf.factors[0].poly == P({-9, 1}));
    CHECK(sf.factors[1].poly == P({-3, 1}));
    auto sf2 = slope_factorization(P({27, -3, -9, 1}), 40, c3);
    REQUIRE(sf2.factors.size() == 2);
    CHECK(sf2.factors[0].poly == P({-9, 1}));
    CHECK(sf2.factors[1].poly == P({-3, 0, 1}));
    CHECK(sf2.factors[1].slope == Rational(-1, 2));
    auto sf3 = slope_factorization(P({9, 3, 1}), 40, c3);
    CHECK(sf3.factors.size() == 1);
}

TEST_CASE("slope factorization round trip on random polynomials")
{
    std::mt19937_64 rng(17);
    for (long p : {2L, 3L, 5L}) {
        PadicContext c(p);
        for (int trial = 0; trial < 30; ++trial) {
            int deg = 1 + static_cast<int>(rng() % 6);
            std::vector<Rational> co;
            for (int i = 0; i <= deg; ++i) {
                long num = static_cast<long>(rng() % 41) - 20;
                long e = static_cast<long>(rng() % 5);
                co.push_back(Rational(num) * qpow(Rational(p), e));
            }
            if (co[0] == 0) co[0] = p;
            if (co[deg] == 0) co[deg] = 1;
            QPoly f(co);
            auto sf = slope_factorization(f, 40, c);
            CHECK(sf.residual_valuation > 40);
            auto np = newton_polygon(f, c);
            REQUIRE(sf.factors.size() == np.edges.size());
            for (size_t k = 0; k < sf.factors.size(); ++k) {
                CHECK(sf.factors[k].slope == np.edges[k].slope);
                CHECK(newton_polygon(sf.factors[k].poly, c).one_edge());
            }
        }
    }
}

TEST_CASE("reduction irreducibility")
{
    PadicContext c3(3);
    CHECK(reduction_irreducible(P({-3, 0, 1}), c3));
    CHECK_FALSE(reduction_irreducible(P({-1, 0, 1}), c3));
    for (long A = 1; A < 5; ++A) {
        QPoly f(std::vector<Rational>{-3, qpow(Rational(3), A), 1});
        CHECK(reduction_irreducible(f, c3));
    }
    CHECK(reduction_irreducible(P({1, 0, 1}), c3));  // t^2 + 1: residual u^2 + 1
    CHECK_THROWS_AS(reduction_irreducible(P({27, -12, 1}), c3), Error);
}

TEST_CASE("residual splitting")
{
    PadicContext c3(3);
    // t^2 - 9: residual u^2 - 1 = (u - 1)(u + 1)
    auto pieces = split_by_residual(P({-9, 0, 1}), 40, c3);
    REQUIRE(pieces.size() == 2);
    QPoly prod = pieces[0].poly * pieces[1].poly;
    CHECK(min_coeff_valuation(prod - P({-9, 0, 1}), c3.p()) > 40);
    for (const auto& pc : pieces) {
        CHECK(pc.irreducible);
        CHECK(pc.poly.degree() == 1);
    }
}

TEST_CASE("square class at a root of a one-edge polynomial")
{
    PadicContext c3(3);
    OneEdgeDecomposition dec{P({9}), QPoly(), P({1}), 1};
    CHECK(square_class_at_root_one_edge(P({9, 0, 1}), dec, 1, c3) == 1);
    CHECK(qp::square_class(P({9, 0, 1}).eval(1), c3) == 1);
    CHECK(square_class_at_root_one_edge(P({9, 0, 1}), dec, 9, c3) == 1);
    CHECK(qp::square_class(P({9, 0, 1}).eval(9), c3) == 1);
    CHECK_THROWS_AS(square_class_at_root_one_edge(P({9, 0, 1}), dec, 3, c3), Error);
}

TEST_CASE("one-edge square class matches direct evaluation")
{
    std::mt19937_64 rng(23);
    int checked = 0;
    for (long p : {2L, 3L, 5L, 7L})
        for (int k = 0; k < 50; ++k) {
            PadicContext c(p);
            auto inst = fixture::random_one_edge(rng, p);
            CAPTURE(to_string(inst.f));
            CAPTURE(to_string(inst.alpha));
            REQUIRE(newton_polygon(inst.f, c).one_edge());
            CHECK(square_class_at_root_one_edge(inst.f, inst.dec, inst.alpha, c) ==
                  qp::square_class(inst.f.eval(inst.alpha), c));
            ++checked;
        }
    CHECK(checked == 200);
}

TEST_CASE("irreducible search")
{
    ShapeConstraints sc{FpPoly(3, {2, 0, 1, 1}), FpPoly(3, {0, 0, 0, 2, 0, 1}), 3, 0, 6};
    auto r = random_irreducible_search(sc, 1);
    CHECK(is_irreducible(r.cbar.monic()));
    CHECK(r.cbar.degree() % 2 == 0);
}
