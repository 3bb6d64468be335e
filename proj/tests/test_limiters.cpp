#include "af/bp_average.hpp"
#include "af/bp_point.hpp"

#include <doctest.h>

using namespace af;

TEST_CASE("Rusanov flux and intermediate state for advection")
{
    const Equation eq = Equation::linear_advection(1.0);
    CHECK(low_order_flux(eq, {0.2}, {0.8}, 1.0)[0] == doctest::Approx(0.2));
    CHECK(intermediate_state(eq, {0.2}, {0.8}, 1.0)[0] == doctest::Approx(0.2));
    CHECK(alpha_bound(Equation::burgers(), {-3.0}, {1.0}) == doctest::Approx(3.0));
}

TEST_CASE("scalar antidiffusive flux is clipped to the bounds")
{
    const ScalarBounds b{0.0, 1.0};
    // u_tilde = 0.5, alpha = 1: room of 0.5 on both sides
    CHECK(limit_scalar(0.0, 2.0, 0.5, 1.0, b) == doctest::Approx(0.5));
    CHECK(limit_scalar(0.0, -2.0, 0.5, 1.0, b) == doctest::Approx(-0.5));
    CHECK(limit_scalar(0.0, 0.1, 0.5, 1.0, b) == doctest::Approx(0.1));
    const ScalarFluxLimit out = limit_scalar_antidiffusive(0.3, 1.5, 1.0, b, b);
    CHECK_FALSE(out.tilde_in_bounds);
    CHECK(out.df_limited == 0.0);
}

TEST_CASE("density limiting keeps the two limited states positive")
{
    const ConservedVector u_tilde{0.1, 0.0, 1.0};
    const ConservedVector f_low{0.0, 0.0, 0.0};
    const ConservedVector f_high{5.0, 0.0, 0.0};
    const double alpha = 2.0;
    const ConservedVector df = limit_euler_density(f_low, f_high, u_tilde, alpha);
    CHECK(df[0] <= alpha * u_tilde[0]);
    CHECK(u_tilde[0] - df[0] / alpha >= 0.0);
}

TEST_CASE("pressure limiting gives theta in [0, 1] and positive pressure")
{
    const double g = 1.4;
    const Equation eq = Equation::euler(g);
    const ConservedVector u_tilde = eq.from_primitive({1.0, 0.0, 1e-3});
    const ConservedVector f_low{0.0, 0.0, 0.0};
    const ConservedVector df{0.0, 1.0, 0.0};
    const double alpha = 1.0;
    const EulerFluxLimit lim = limit_euler_pressure(f_low, df, u_tilde, alpha, g);
    CHECK(lim.theta >= 0.0);
    CHECK(lim.theta < 1.0);
    const ConservedVector s = (1.0 / alpha) * lim.f_limited;
    CHECK(eq.pressure(u_tilde + s) > 0.0);
    CHECK(eq.pressure(u_tilde - s) > 0.0);
}

TEST_CASE("scalar point blend lands on the violated bound")
{
    const PointBlend b = blend_scalar_point(1.2, 0.8, {0.0, 1.0});
    CHECK(b.theta == doctest::Approx(0.5));
    CHECK(b.u_limited[0] == doctest::Approx(1.0));
    CHECK(blend_scalar_point(0.5, 0.8, {0.0, 1.0}).theta == 1.0);
}

TEST_CASE("Euler point blend restores positivity")
{
    const double g = 1.4;
    const Equation eq = Equation::euler(g);
    const ConservedVector low = eq.from_primitive({1.0, 0.0, 1.0});
    const ConservedVector high{-0.5, 0.0, 1.0};
    const PointBlend b = blend_euler_point(high, low, g);
    CHECK(b.theta_star >= 0.0);
    CHECK(b.theta_star < 1.0);
    CHECK(eq.is_admissible(b.u_limited));
    const PointBlend keep = blend_euler_point(low, low, g);
    CHECK(keep.theta == 1.0);
    CHECK(keep.theta_star == 1.0);
}

TEST_CASE("LLF point update on constant data is stationary and admissible")
{
    const Equation eq = Equation::euler(1.4);
    const ConservedVector u = eq.from_primitive({1.0, 0.5, 1.0});
    const double dt = llf_point_dt_bound(eq, u, u, u, 0.1, 0.1);
    const ConservedVector next = llf_point_update(eq, u, u, u, 0.1, 0.1, dt);
    for (std::size_t k = 0; k < 3; ++k) CHECK(next[k] == doctest::Approx(u[k]));
    CHECK(dt == doctest::Approx(0.2 / (4.0 * eq.spectral_radius(u))));
}
