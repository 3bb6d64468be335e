#include "af/equations.hpp"

#include <doctest.h>

using namespace af;

TEST_CASE("euler flux of a simple state")
{
    const Equation eq = Equation::euler(1.4);
    // rho = 1, v = 1, E = 3 -> p = 0.4 * 2.5 = 1
    const ConservedVector f = eq.flux({1.0, 1.0, 3.0});
    CHECK(f[0] == doctest::Approx(1.0));
    CHECK(f[1] == doctest::Approx(2.0));
    CHECK(f[2] == doctest::Approx(4.0));
    CHECK(eq.pressure({1.0, 1.0, 3.0}) == doctest::Approx(1.0));
}

TEST_CASE("euler eigenvalues are v - a, v, v + a")
{
    const Equation eq = Equation::euler(1.4);
    const ConservedVector u = eq.from_primitive({1.0, 0.5, 1.0});
    const double a = std::sqrt(1.4);
    const ConservedVector l = eq.eigenvalues(u);
    CHECK(l[0] == doctest::Approx(0.5 - a));
    CHECK(l[1] == doctest::Approx(0.5));
    CHECK(l[2] == doctest::Approx(0.5 + a));
    CHECK(eq.spectral_radius(u) == doctest::Approx(0.5 + a));
}

TEST_CASE("primitive round trip")
{
    const Equation eq = Equation::euler(5.0 / 3.0);
    const EulerPrimitive w{0.3, -2.0, 7.0};
    const EulerPrimitive back = eq.to_primitive(eq.from_primitive(w));
    CHECK(back.rho == doctest::Approx(w.rho));
    CHECK(back.v == doctest::Approx(w.v));
    CHECK(back.p == doctest::Approx(w.p));
}

TEST_CASE("eigensystem left times right is the identity")
{
    const Equation eq = Equation::euler(1.4);
    const Eigensystem es = eq.eigensystem(eq.from_primitive({2.0, 0.7, 3.0}));
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            double s = 0.0;
            for (std::size_t k = 0; k < 3; ++k) s += es.left(i, k) * es.right(k, j);
            CHECK(s == doctest::Approx(i == j ? 1.0 : 0.0).epsilon(1e-12));
        }
}

TEST_CASE("admissibility")
{
    const Equation eq = Equation::euler(1.4);
    CHECK(eq.is_admissible({1.0, 0.0, 1.0}));
    CHECK_FALSE(eq.is_admissible({-1.0, 0.0, 1.0}));
    CHECK_FALSE(eq.is_admissible({1.0, 2.0, 1.0}));
    Equation b = Equation::burgers();
    b.set_bounds({-1.0, 2.0});
    CHECK(b.is_admissible({1.5}));
}

TEST_CASE("scalar fluxes")
{
    CHECK(Equation::burgers().flux({3.0})[0] == doctest::Approx(4.5));
    CHECK(Equation::linear_advection(2.0).flux({3.0})[0] == doctest::Approx(6.0));
    CHECK(Equation::burgers().spectral_radius({-3.0}) == doctest::Approx(3.0));
}
