#pragma once

#include "af/equations.hpp"
#include "af/limiter_config.hpp"
#include "af/mesh.hpp"

#include <vector>

namespace af {

// Upper bound of the wave speeds in the Riemann problem (UL, UR).
// Scalar: max |f'| over the two states (exact for the convex/linear fluxes
// here). Euler: max(|vL| + aL, |vR| + aR).
double alpha_bound(const Equation& eq, const ConservedVector& ul, const ConservedVector& ur);

// Rusanov flux (F(UL) + F(UR))/2 - alpha (UR - UL)/2.
ConservedVector low_order_flux(const Equation& eq, const ConservedVector& ul, const ConservedVector& ur, double alpha);

// (UL + UR)/2 + (F(UL) - F(UR)) / (2 alpha)
ConservedVector intermediate_state(const Equation& eq, const ConservedVector& ul, const ConservedVector& ur,
                                   double alpha);

// Clipped anti-diffusive flux for a scalar law. The state to the left of the
// interface must stay within `left` and the one to the right within `right`.
struct ScalarFluxLimit {
    double df_limited = 0.0;
    bool clipped = false;       // df_limited != df
    bool tilde_in_bounds = true; // false: u_tilde violated the bounds and df was zeroed
};
ScalarFluxLimit limit_scalar_antidiffusive(double df, double u_tilde, double alpha, ScalarBounds left,
                                           ScalarBounds right);

// f_low + clipped (f_high - f_low) with one set of bounds on both sides.
double limit_scalar(double f_low, double f_high, double u_tilde, double alpha, ScalarBounds bounds);

// Anti-diffusive flux with only the density component clipped so that
// U~ ± dF/alpha keep density above min(1e-13, U~^rho).
ConservedVector limit_euler_density(const ConservedVector& f_low, const ConservedVector& f_high,
                                    const ConservedVector& u_tilde, double alpha);

struct PressureCoefficients {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
};
// Coefficients of the quadratic constraint A t^2 ± B t < C.
PressureCoefficients pressure_coefficients(const ConservedVector& df_star, const ConservedVector& u_tilde,
                                           double alpha, double gamma, double eps_p);

struct EulerFluxLimit {
    ConservedVector f_limited;
    double theta = 1.0;
};
EulerFluxLimit limit_euler_pressure(const ConservedVector& f_low, const ConservedVector& df_star,
                                    const ConservedVector& u_tilde, double alpha, double gamma);

struct InterfaceFluxSet {
    ConservedVector f_low;
    ConservedVector f_high;
    ConservedVector u_tilde;
    double alpha_bound = 0.0;
    ConservedVector f_limited;
    double theta = 1.0;          // pressure-step / scalar equivalent blending factor
    bool limited = false;        // any clipping applied
    bool tilde_admissible = true;
};

struct AverageLimitReport {
    std::vector<InterfaceFluxSet> interfaces; // N + 1 entries
    bool limiting_active = false;
    bool intermediate_ok = true;
    std::ptrdiff_t first_bad_interface = -1;
    std::size_t limited_count = 0;
    // min_i dx / (alpha_{i-1/2} + alpha_{i+1/2})
    double dt_bound = 0.0;
};

// Numerical fluxes for the cell-average update at every interface of the
// stage state `g` (halo >= 2). With mode Off the high-order flux F(U_{j})
// is returned unchanged.
AverageLimitReport limit_average_fluxes(const Equation& eq, const GhostedState& g, const Grid1D& grid,
                                        BoundMode mode);

// -(f_{i+1/2} - f_{i-1/2}) / dx for every cell.
std::vector<ConservedVector> average_rhs(const AverageLimitReport& fluxes, const Grid1D& grid);

} // namespace af
