#include "af/splitting.hpp"

#include <doctest.h>

#include <cmath>
#include <functional>

using namespace af;

TEST_CASE("splitting names")
{
    CHECK(splitting_from_string("sw") == SplittingKind::SW_FVS);
    CHECK(to_string(SplittingKind::VH_FVS) == "vh");
    CHECK_THROWS_AS(splitting_from_string("roe"), std::invalid_argument);
    CHECK_FALSE(splitting_supported(SplittingKind::VH_FVS, Equation::burgers()));
    CHECK(splitting_supported(SplittingKind::SW_FVS, Equation::burgers()));
}

TEST_CASE("LLF splitting of Burgers")
{
    const SplitFluxPair s = split_llf(Equation::burgers(), {-1.0}, 2.0);
    CHECK(s.f_plus[0] == doctest::Approx(-0.75));
    CHECK(s.f_minus[0] == doctest::Approx(1.25));
}

TEST_CASE("split fluxes add up to the flux")
{
    const Equation eq = Equation::euler(1.4);
    for (const EulerPrimitive& w : {EulerPrimitive{1.0, 0.3, 1.0}, EulerPrimitive{0.5, -2.0, 0.2},
                                    EulerPrimitive{2.0, 5.0, 1.0}}) {
        const ConservedVector u = eq.from_primitive(w);
        const ConservedVector f = eq.flux(u);
        for (SplittingKind k : {SplittingKind::LLF_FVS, SplittingKind::SW_FVS, SplittingKind::VH_FVS}) {
            const SplitFluxPair s = split(eq, k, u, eq.spectral_radius(u));
            for (std::size_t c = 0; c < 3; ++c) CHECK(s.f_plus[c] + s.f_minus[c] == doctest::Approx(f[c]));
        }
        const SplitFluxPair a = split_sw(eq, u);
        const SplitFluxPair b = split_sw_eigen(eq, u);
        for (std::size_t c = 0; c < 3; ++c) CHECK(a.f_plus[c] == doctest::Approx(b.f_plus[c]).epsilon(1e-12));
    }
}

TEST_CASE("SW and VH at rest")
{
    const double g = 1.4;
    const Equation eq = Equation::euler(g);
    // rho = 1 and a = 1
    const ConservedVector u = eq.from_primitive({1.0, 0.0, 1.0 / g});
    CHECK(split_sw(eq, u).f_plus[0] == doctest::Approx(1.0 / (2.0 * g)));
    CHECK(split_vh(eq, u).f_plus[0] == doctest::Approx(0.25));
    CHECK(split_vh(eq, u).f_minus[0] == doctest::Approx(-0.25));
}

TEST_CASE("supersonic states are fully upwinded")
{
    const Equation eq = Equation::euler(1.4);
    const ConservedVector u = eq.from_primitive({1.0, 3.0, 1.0});
    for (SplittingKind k : {SplittingKind::SW_FVS, SplittingKind::VH_FVS}) {
        const SplitFluxPair s = split(eq, k, u, 0.0);
        for (std::size_t c = 0; c < 3; ++c) CHECK(s.f_minus[c] == doctest::Approx(0.0));
    }
}

TEST_CASE("VH rejects Burgers")
{
    CHECK_THROWS_AS(split_vh(Equation::burgers(), {1.0}), std::invalid_argument);
}

namespace {

PointWindow window_from(const std::function<double(double)>& u, double h)
{
    // exact averages of a quadratic by Simpson
    auto avg = [&](double a, double b) { return (u(a) + 4.0 * u(0.5 * (a + b)) + u(b)) / 6.0; };
    PointWindow w;
    w.point_left = {u(-h)};
    w.avg_left = {avg(-h, 0.0)};
    w.point = {u(0.0)};
    w.avg_right = {avg(0.0, h)};
    w.point_right = {u(h)};
    w.dx_left = w.dx_right = h;
    return w;
}

} // namespace

TEST_CASE("point updates are exact for linear advection of a quadratic")
{
    const Equation eq = Equation::linear_advection(1.0);
    auto u = [](double x) { return 1.0 + 2.0 * x - 3.0 * x * x; };
    const PointWindow w = window_from(u, 0.1);
    // u_t = -u_x = -2 at x = 0
    CHECK(point_rhs(eq, SplittingKind::JS, w, simpson_centers(w))[0] == doctest::Approx(-2.0));
    CHECK(point_rhs_fvs(eq, SplittingKind::LLF_FVS, w)[0] == doctest::Approx(-2.0));
    CHECK(point_rhs_fvs(eq, SplittingKind::SW_FVS, w)[0] == doctest::Approx(-2.0));
    CHECK(point_rhs_fvs(eq, SplittingKind::VH_FVS, w)[0] == doctest::Approx(-2.0));
}

TEST_CASE("Simpson centers of a quadratic")
{
    auto u = [](double x) { return x * x; };
    const PointWindow w = window_from(u, 0.2);
    const CellCenters c = simpson_centers(w);
    CHECK(c.left[0] == doctest::Approx(0.01));
    CHECK(c.right[0] == doctest::Approx(0.01));
}
