#include "af/reconstruction.hpp"

#include <doctest.h>

#include <cmath>

using namespace af;

TEST_CASE("parabola interpolates the points and preserves the average")
{
    const double h = 0.3, l = 1.0, m = 2.5, r = 0.5;
    const Quadratic q = parabola_from_average({l, m, r, h});
    CHECK(q(-0.5 * h) == doctest::Approx(l));
    CHECK(q(0.5 * h) == doctest::Approx(r));
    // Simpson is exact for quadratics
    CHECK(simpson_average(q(-0.5 * h), q(0.0), q(0.5 * h)) == doctest::Approx(m));
    CHECK(cell_center_from_simpson(l, m, r) == doctest::Approx(q(0.0)));
}

TEST_CASE("interface derivatives of the parabola")
{
    const double h = 0.2;
    // u(s) = 1 + 3 s + 5 s^2 on [-h/2, h/2]
    auto u = [](double s) { return 1.0 + 3.0 * s + 5.0 * s * s; };
    const double avg = 1.0 + 5.0 * h * h / 12.0;
    const CellTriple<double> t{u(-0.5 * h), avg, u(0.5 * h), h};
    CHECK(deriv_plus_average(t) == doctest::Approx(3.0 + 10.0 * 0.5 * h));
    CHECK(deriv_minus_average(t) == doctest::Approx(3.0 - 10.0 * 0.5 * h));
}

TEST_CASE("one-sided point derivatives are exact for quadratics")
{
    const double h = 0.1;
    auto f = [](double x) { return 2.0 - x + 4.0 * x * x; };
    const CellTriple<double> t{f(-h), f(-0.5 * h), f(0.0), h};
    CHECK(flux_deriv_plus(t) == doctest::Approx(-1.0));
    const CellTriple<double> s{f(0.0), f(0.5 * h), f(h), h};
    CHECK(flux_deriv_minus(s) == doctest::Approx(-1.0));
}

TEST_CASE("power law branches")
{
    CHECK(classify_power_law(0.0, 0.1, 1.0).branch == PowerLawBranch::RightSteep);
    CHECK(classify_power_law(0.0, 0.9, 1.0).branch == PowerLawBranch::LeftSteep);
    CHECK(classify_power_law(0.0, 0.5, 1.0).branch == PowerLawBranch::Parabolic);
    // extremum inside the cell
    CHECK(classify_power_law(0.0, 1.5, 1.0).branch == PowerLawBranch::Parabolic);
    CHECK_FALSE(power_law_ratio(1.0, 1.0, 2.0).valid);
}

TEST_CASE("power law reproduces endpoints and average")
{
    const double h = 1.0, l = 0.0, m = 0.1, r = 1.0;
    CHECK(power_law_value(l, m, r, h, -0.5) == doctest::Approx(l));
    CHECK(power_law_value(l, m, r, h, 0.5) == doctest::Approx(r));
    double sum = 0.0;
    const int n = 20000;
    for (int k = 0; k < n; ++k) sum += power_law_value(l, m, r, h, -0.5 + (k + 0.5) / n);
    CHECK(sum / n == doctest::Approx(m).epsilon(1e-6));
    const InterfaceDerivatives d = power_law_derivs(l, m, r, h);
    CHECK(d.left == 0.0);
    CHECK(d.right == doctest::Approx(9.0)); // r = 9, slope 1
}
