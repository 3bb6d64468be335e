#include "af/bp_point.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace af {

ConservedVector llf_point_update(const Equation& eq, const ConservedVector& u_left, const ConservedVector& u,
                                 const ConservedVector& u_right, double dx_left, double dx_right, double dt)
{
    const double a_left = std::max(eq.spectral_radius(u_left), eq.spectral_radius(u));
    const double a_right = std::max(eq.spectral_radius(u), eq.spectral_radius(u_right));
    const ConservedVector f_left = eq.flux(u_left);
    const ConservedVector f = eq.flux(u);
    const ConservedVector f_right = eq.flux(u_right);
    const ConservedVector flux_l = 0.5 * (f_left + f) - (0.5 * a_left) * (u - u_left);
    const ConservedVector flux_r = 0.5 * (f + f_right) - (0.5 * a_right) * (u_right - u);
    return u - (2.0 * dt / (dx_left + dx_right)) * (flux_r - flux_l);
}

double llf_point_dt_bound(const Equation& eq, const ConservedVector& u_left, const ConservedVector& u,
                          const ConservedVector& u_right, double dx_left, double dx_right)
{
    const double a = std::max({eq.spectral_radius(u_left), eq.spectral_radius(u), eq.spectral_radius(u_right)});
    if (a == 0.0) return std::numeric_limits<double>::infinity();
    return (dx_left + dx_right) / (4.0 * a);
}

PointBlend blend_scalar_point(double u_high, double u_low, ScalarBounds b)
{
    PointBlend out;
    if (u_high < b.lo) {
        out.theta = (u_low - b.lo) / (u_low - u_high);
    } else if (u_high > b.hi) {
        out.theta = (b.hi - u_low) / (u_high - u_low);
    } else {
        out.u_limited = ConservedVector::scalar(u_high);
        return out;
    }
    out.theta = std::clamp(out.theta, 0.0, 1.0);
    double v = out.theta * u_high + (1.0 - out.theta) * u_low;
    // The exact blend sits on the violated bound; remove rounding residue.
    v = std::clamp(v, b.lo, b.hi);
    out.u_limited = ConservedVector::scalar(v);
    return out;
}

PointBlend blend_euler_point(const ConservedVector& u_high, const ConservedVector& u_low, double gamma)
{
    PointBlend out;
    const double eps_rho = std::min(positivity_floor, u_low[0]);
    ConservedVector star = u_high;
    if (u_high[0] < eps_rho) {
        out.theta_star = std::clamp((u_low[0] - eps_rho) / (u_low[0] - u_high[0]), 0.0, 1.0);
        star[0] = out.theta_star * u_high[0] + (1.0 - out.theta_star) * u_low[0];
    }
    if (!(star[0] > 0.0)) {
        out.theta_star = 0.0;
        star[0] = u_low[0];
    }

    const double p_low = euler_pressure(gamma, u_low[0], u_low[1], u_low[2]);
    const double eps_p = std::min(positivity_floor, p_low);
    const double p_star = euler_pressure(gamma, star[0], star[1], star[2]);
    if (p_star < eps_p || !std::isfinite(p_star)) {
        out.theta = std::isfinite(p_star) ? std::clamp((p_low - eps_p) / (p_low - p_star), 0.0, 1.0) : 0.0;
    }
    out.u_limited = out.theta == 1.0 ? star : out.theta * star + (1.0 - out.theta) * u_low;

    const double rho = out.u_limited[0];
    if (!(rho > 0.0) || !(euler_pressure(gamma, rho, out.u_limited[1], out.u_limited[2]) > 0.0)) {
        // rounding at the floor
        out.theta = 0.0;
        out.u_limited = u_low;
    }
    return out;
}

ConservedVector repair_cell_center(const Equation& eq, const ConservedVector& center, const ConservedVector& average)
{
    if (eq.is_admissible(center)) return center;
    if (eq.is_scalar()) return blend_scalar_point(center[0], average[0], *eq.bounds()).u_limited;
    return blend_euler_point(center, average, eq.gamma()).u_limited;
}

} // namespace af
