#include "af/problems.hpp"

#include <doctest.h>

#include <cmath>

using namespace af;

TEST_CASE("registry lookup")
{
    for (const auto& name : problem_names()) CHECK(find_problem(name).name == name);
    CHECK_THROWS_AS(find_problem("nope"), std::invalid_argument);
}

TEST_CASE("advection profile plateaus")
{
    const ProblemSpec p = find_problem("advection");
    CHECK(p.init(-0.3)[0] == doctest::Approx(1.0));
    CHECK(p.init(0.1)[0] == doctest::Approx(1.0));
    CHECK(p.init(-0.9)[0] == doctest::Approx(0.0));
    CHECK(jiang_shu_profile(0.9) == doctest::Approx(0.0));
}

TEST_CASE("advection exact solution is periodic")
{
    const ProblemSpec p = find_problem("advection");
    // one period on [-1, 1] at unit speed is t = 2
    for (double x : {-0.7, -0.3, 0.15, 0.5}) CHECK(p.exact(x, 2.0)[0] == doctest::Approx(p.init(x)[0]));
}

TEST_CASE("Euler accuracy solution at t = 0 matches the initial data")
{
    const ProblemSpec p = euler_accuracy();
    for (double x : {-0.9, -0.2, 0.0, 0.4, 0.8}) {
        const ConservedVector a = p.init(x);
        const ConservedVector b = accuracy_exact(x, 0.0);
        for (std::size_t k = 0; k < 3; ++k) CHECK(a[k] == doctest::Approx(b[k]));
        // p = rho^3 along the isentrope
        CHECK(p.equation.pressure(a) == doctest::Approx(std::pow(a[0], 3.0)));
    }
    const CharacteristicFeet f = accuracy_feet(0.3, 0.1);
    CHECK(std::abs(f.residual1) <= 1e-13);
    CHECK(std::abs(f.residual2) <= 1e-13);
}

TEST_CASE("Sedov energy sits in the center cell")
{
    const ProblemSpec p = sedov();
    const ProblemSetup s = setup_problem(p, 801);
    const double dx = s.grid.dx();
    CHECK(s.state.averages[400][2] == doctest::Approx(3.2e6 / dx));
    CHECK(s.state.averages[399][2] == doctest::Approx(1e-12));
    CHECK(s.state.points[400][2] == doctest::Approx(3.2e6 / dx));
    CHECK(s.state.points[401][2] == doctest::Approx(3.2e6 / dx));
}

TEST_CASE("Riemann problems carry their data")
{
    for (const ProblemSpec& p : riemann_problems()) {
        REQUIRE(p.riemann.has_value());
        const ConservedVector l = p.exact(p.x_min, 0.0);
        const ConservedVector expected = p.equation.from_primitive(p.riemann->left);
        for (std::size_t k = 0; k < 3; ++k) CHECK(l[k] == doctest::Approx(expected[k]));
    }
}

TEST_CASE("scalar bounds come from the initial data")
{
    const ProblemSetup s = setup_problem(burgers_square(), 200);
    REQUIRE(s.equation.bounds().has_value());
    CHECK(s.equation.bounds()->lo == doctest::Approx(-1.0));
    CHECK(s.equation.bounds()->hi == doctest::Approx(2.0));
}

TEST_CASE("CFL table")
{
    const ProblemSpec p = double_rarefaction();
    CHECK(p.default_cfl(SplittingKind::LLF_FVS) == doctest::Approx(0.4));
    CHECK(p.default_cfl(SplittingKind::VH_FVS) == doctest::Approx(0.1));
}
