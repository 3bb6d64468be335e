#include "af/riemann.hpp"

#include <doctest.h>

using namespace af;

TEST_CASE("Sod star state")
{
    const RiemannStar s = riemann_star({1.0, 0.0, 1.0}, {0.125, 0.0, 0.1}, 1.4);
    CHECK_FALSE(s.vacuum);
    CHECK(s.p == doctest::Approx(0.30313).epsilon(1e-4));
    CHECK(s.v == doctest::Approx(0.92745).epsilon(1e-4));
    const RiemannWaves w = riemann_waves({1.0, 0.0, 1.0}, {0.125, 0.0, 0.1}, 1.4);
    CHECK_FALSE(w.left_shock);
    CHECK(w.right_shock);
    CHECK(w.right_head == doctest::Approx(1.75216).epsilon(1e-4));
}

TEST_CASE("strong double rarefaction has a tiny star pressure")
{
    const RiemannStar s = riemann_star({7.0, -1.0, 0.2}, {7.0, 1.0, 0.2}, 1.4);
    CHECK((s.vacuum || s.p < 1e-9));
    CHECK(s.v == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("vacuum generation is detected")
{
    const RiemannStar s = riemann_star({1.0, -10.0, 0.4}, {1.0, 10.0, 0.4}, 1.4);
    CHECK(s.vacuum);
    const EulerPrimitive mid = sample_riemann({1.0, -10.0, 0.4}, {1.0, 10.0, 0.4}, 1.4, 0.0);
    CHECK(mid.rho == 0.0);
}

TEST_CASE("sampling reproduces the initial states outside the fan")
{
    const EulerPrimitive l{1.0, 0.0, 1.0}, r{0.125, 0.0, 0.1};
    const EulerPrimitive far_left = sample_riemann(l, r, 1.4, -10.0);
    const EulerPrimitive far_right = sample_riemann(l, r, 1.4, 10.0);
    CHECK(far_left.rho == doctest::Approx(1.0));
    CHECK(far_right.p == doctest::Approx(0.1));
    // pressure and velocity are continuous across the contact
    const RiemannWaves w = riemann_waves(l, r, 1.4);
    const EulerPrimitive a = sample_riemann(l, r, 1.4, w.contact - 1e-9);
    const EulerPrimitive b = sample_riemann(l, r, 1.4, w.contact + 1e-9);
    CHECK(a.p == doctest::Approx(b.p));
    CHECK(a.v == doctest::Approx(b.v));
    CHECK(a.rho > b.rho);
}

TEST_CASE("shock satisfies Rankine-Hugoniot")
{
    const double g = 1.4;
    const Equation eq = Equation::euler(g);
    const EulerPrimitive l{1.0, 0.0, 1.0}, r{0.125, 0.0, 0.1};
    const RiemannWaves w = riemann_waves(l, r, g);
    const double s = w.right_head;
    const ConservedVector ahead = eq.from_primitive(r);
    const ConservedVector behind = eq.from_primitive(sample_riemann(l, r, g, s - 1e-9));
    const ConservedVector fa = eq.flux(ahead), fb = eq.flux(behind);
    for (std::size_t k = 0; k < 3; ++k) CHECK(fb[k] - fa[k] == doctest::Approx(s * (behind[k] - ahead[k])).epsilon(1e-6));
}
