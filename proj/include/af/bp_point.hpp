#pragma once

#include "af/equations.hpp"
#include "af/limiter_config.hpp"

namespace af {

// Rusanov scheme for the point value U_j on the staggered cell
// [x_{j-1}, x_{j+1}] whose neighbours are the points U_{j-1} and U_{j+1}.
ConservedVector llf_point_update(const Equation& eq, const ConservedVector& u_left, const ConservedVector& u,
                                 const ConservedVector& u_right, double dx_left, double dx_right, double dt);

// (dx_left + dx_right) / (4 max(alpha_left, alpha_right)); infinite if both
// wave speeds vanish.
double llf_point_dt_bound(const Equation& eq, const ConservedVector& u_left, const ConservedVector& u,
                          const ConservedVector& u_right, double dx_left, double dx_right);

struct PointBlend {
    ConservedVector u_limited;
    double theta = 1.0;      // scalar blend, or the pressure step for Euler
    double theta_star = 1.0; // Euler density step
};

// theta u_high + (1 - theta) u_low within [lo, hi]; u_low must be inside.
PointBlend blend_scalar_point(double u_high, double u_low, ScalarBounds bounds);

// Density step toward u_low (density component only), then a full-vector
// pressure step, floors min(1e-13, rho_low) and min(1e-13, p(u_low)).
PointBlend blend_euler_point(const ConservedVector& u_high, const ConservedVector& u_low, double gamma);

// Scales an inadmissible cell-center value toward the cell average.
// Scalar: uses the equation's global bounds (no-op if none are set).
ConservedVector repair_cell_center(const Equation& eq, const ConservedVector& center, const ConservedVector& average);

} // namespace af
