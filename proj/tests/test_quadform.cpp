#include "doctest.h"
#include "oracles.hpp"
#include "padicforms/quadform.hpp"

#include <random>

using namespace padicforms;

namespace {
QPoly P(std::vector<long> c)
{
    std::vector<Rational> r(c.begin(), c.end());
    return QPoly(r);
}
}  // namespace

TEST_CASE("local isotropy agrees with the brute-force oracle")
{
    for (long p : {2L, 3L, 5L}) {
        PadicContext c(p);
        auto reps = qp::square_class_reps(c);
        std::vector<long> r;
        for (const auto& x : reps) r.push_back(x.get_num().get_si());
        const size_t n = r.size();
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i; j < n; ++j) {
                CHECK(isotropic_over_local({reps[i], reps[j]}, c) == oracle::form_isotropic({r[i], r[j]}, p));
                for (size_t k = j; k < n; ++k) {
                    CHECK(isotropic_over_local({reps[i], reps[j], reps[k]}, c) ==
                          oracle::form_isotropic({r[i], r[j], r[k]}, p));
                }
            }
        // dimension four: all multisets for odd p, a seeded sample for p = 2
        std::mt19937_64 rng(static_cast<unsigned long>(p));
        int count = p == 2 ? 120 : 0;
        if (p != 2) {
            for (size_t i = 0; i < n; ++i)
                for (size_t j = i; j < n; ++j)
                    for (size_t k = j; k < n; ++k)
                        for (size_t l = k; l < n; ++l)
                            CHECK(isotropic_over_local({reps[i], reps[j], reps[k], reps[l]}, c) ==
                                  oracle::form_isotropic({r[i], r[j], r[k], r[l]}, p));
        }
        for (int s = 0; s < count; ++s) {
            size_t i = rng() % n, j = rng() % n, k = rng() % n, l = rng() % n;
            CHECK(isotropic_over_local({reps[i], reps[j], reps[k], reps[l]}, c) ==
                  oracle::form_isotropic({r[i], r[j], r[k], r[l]}, p));
        }
    }
}

TEST_CASE("local isotropy examples")
{
    PadicContext c3(3), c2(2);
    CHECK(isotropic_over_local({1, -1}, c3));
    CHECK_FALSE(isotropic_over_local({1}, c3));
    // <1,3,2,6> = <<-2,-3>> and (-2,-3)_3 = 1, so the form is isotropic
    CHECK(isotropic_over_local({1, 3, 2, 6}, c3));
    CHECK(oracle::form_isotropic({1, 3, 2, 6}, 3));
    // the anisotropic quaternion norm form over Q_3
    CHECK_FALSE(isotropic_over_local({1, 1, 3, 3}, c3));
    CHECK(isotropic_over_local({1, 1, 1, 1, 1}, c2));
    CHECK(isotropic_over_local({1, 2, 5, 10, 3}, c2));
}

TEST_CASE("Pfister forms over Q_p")
{
    for (long p : {2L, 3L, 5L}) {
        PadicContext c(p);
        LocalField K = LocalField::base(c);
        auto reps = qp::square_class_reps(c);
        for (const auto& a : reps)
            for (const auto& b : reps) {
                auto two = pfister_entries<LocalFieldElement>({K.element(a), K.element(b)}, K.element(1));
                bool iso = isotropic_over_local(two);
                CHECK(iso == (qp::hilbert_symbol(-a, -b, c) == 1));
                if (iso) CHECK(witt_zero(two));
                for (const auto& d : reps) {
                    auto three = pfister_entries<LocalFieldElement>({K.element(a), K.element(b), K.element(d)},
                                                                    K.element(1));
                    CHECK(isotropic_over_local(three));
                    CHECK(witt_zero(three));
                }
            }
    }
}

TEST_CASE("pi-multiple zero test matches the general Witt test")
{
    std::mt19937_64 rng(41);
    for (long p : {2L, 3L, 5L}) {
        PadicContext c(p);
        LocalField K = LocalField::base(c);
        auto reps = qp::square_class_reps(c);
        for (int s = 0; s < 60; ++s) {
            std::vector<LocalFieldElement> psi;
            int m = 1 + static_cast<int>(rng() % 4);
            for (int k = 0; k < m; ++k) psi.push_back(K.element(reps[rng() % reps.size()]));
            std::vector<LocalFieldElement> full = psi;
            for (const auto& x : psi) full.push_back(K.pi() * x);
            CHECK(pi_multiple_is_zero(psi) == witt_zero(full));
        }
    }
}

TEST_CASE("i2 class")
{
    PadicContext c3(3);
    LocalField K = LocalField::base(c3);
    CHECK(i2_class(K.element(2)) == -1);
    CHECK(i2_class(K.element(4)) == 1);
    for (long n = 0; n < 4; ++n) CHECK(i2_class(K.element(qpow(Rational(3), n) * 2)) == -1);
    // consistency with the isotropy of <1,pi,-u,-pi u>
    for (long p : {2L, 3L, 5L}) {
        PadicContext c(p);
        for (const auto& u : qp::square_class_reps(c))
            CHECK((i2_class(LocalField::base(c).element(u)) == 1) == isotropic_over_local({1, c.pi(), -u, -c.pi() * u}, c));
    }
}

TEST_CASE("second residues")
{
    PadicContext c3(3);
    FactorBase base(c3);
    int q = base.add(P({-3, 0, 1}));
    FunctionForm one{{FactoredElement::constant(1)}};
    auto r1 = second_residue(one, q, base);
    CHECK(r1.second.empty());
    FunctionForm justq{{FactoredElement::factor(q)}};
    auto r2 = second_residue(justq, q, base);
    REQUIRE(r2.second.size() == 1);
    CHECK(r2.second[0] == base.field(q).element(1));

    // delta_t(<1,pi><1,-gamma,-t,-f>) for f = 5t + t^2 (odd valuation): second form <1,pi><-1,-5>
    int f1 = base.add(P({5, 1}));
    FunctionForm form{{FactoredElement::constant(1), FactoredElement::constant(-2), -FactoredElement::factor(0),
                       -(FactoredElement::factor(0) * FactoredElement::factor(f1))},
                      true};
    auto r3 = second_residue(form, 0, base);
    REQUIRE(r3.second.size() == 2);
    CHECK(r3.second[0] == base.field(0).element(-1));
    CHECK(r3.second[1] == base.field(0).element(-5));

    // reconstruction: first entries times q^even, second entries times q^odd
    std::mt19937_64 rng(5);
    int f2 = base.add(P({1, 0, 1}));
    for (int s = 0; s < 20; ++s) {
        FactoredElement x = FactoredElement::constant(Rational(static_cast<long>(rng() % 7) + 1));
        for (int k : {0, q, f2}) x = x * FactoredElement::factor(k, static_cast<int>(rng() % 5) - 2);
        FunctionForm ff{{x}};
        for (int place : {0, q, f2}) {
            auto rs = second_residue(ff, place, base);
            LocalField L = base.field(place);
            LocalFieldElement expect = L.element(x.unit);
            for (const auto& [k, e] : x.powers)
                if (k != place) expect = expect * L.element(base.poly(k)).pow(e);
            const auto& side = x.exponent(place) % 2 ? rs.second : rs.first;
            REQUIRE(side.size() == 1);
            CHECK(side[0] == expect);
        }
    }
}

TEST_CASE("Milnor and Springer rules")
{
    PadicContext c3(3);
    FactorBase base(c3);
    // <1,-1,t> is isotropic, and residue rule does not apply below dimension five
    FunctionForm hyper{{FactoredElement::constant(1), FactoredElement::constant(-1), FactoredElement::factor(0)}};
    CHECK_FALSE(springer_anisotropy(hyper, 0, base));
    // <1,3><1,-2,-t,-t>: residue <1,3><-1,-1> at t is nonzero
    FunctionForm f51{{FactoredElement::constant(1), FactoredElement::constant(-2), -FactoredElement::factor(0),
                      -FactoredElement::factor(0)},
                     true};
    auto mv = milnor_isotropy(f51, base);
    CHECK_FALSE(mv.isotropic);
    REQUIRE(mv.blocking);
    CHECK(*mv.blocking == 0);
    CHECK(springer_anisotropy(f51, 0, base));
    // <1,pi><1,-1,-t,t>: every residue vanishes
    FunctionForm iso{{FactoredElement::constant(1), FactoredElement::constant(-1), -FactoredElement::factor(0),
                      FactoredElement::factor(0)},
                     true};
    auto mv2 = milnor_isotropy(iso, base);
    CHECK(mv2.isotropic);
}
