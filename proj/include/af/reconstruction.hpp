#pragma once

#include "af/state_vector.hpp"

namespace af {

// Values on one cell: left/right interface values and a middle value that is
// the cell average (state reconstruction) or the cell-center value (flux
// reconstruction).
template <typename T>
struct CellTriple {
    T left;
    T mid;
    T right;
    double dx;
};

// q(s) = c0 + c1 s + c2 s^2 with s = x - x_i.
struct Quadratic {
    double c0 = 0.0;
    double c1 = 0.0;
    double c2 = 0.0;

    double operator()(double s) const { return c0 + s * (c1 + s * c2); }
    double derivative(double s) const { return c1 + 2.0 * c2 * s; }
};

// Parabola matching both interface values and the cell average.
Quadratic parabola_from_average(const CellTriple<double>& t);

// Derivative of that parabola at the right interface (D+ for the interface
// to the right of the cell) and at the left interface (D- for the interface
// to the left of the cell).
double deriv_plus_average(const CellTriple<double>& t);
double deriv_minus_average(const CellTriple<double>& t);
ConservedVector deriv_plus_average(const CellTriple<ConservedVector>& t);
ConservedVector deriv_minus_average(const CellTriple<ConservedVector>& t);

// Simpson relation between interface values, cell average and center value.
double cell_center_from_simpson(double left, double avg, double right);
ConservedVector cell_center_from_simpson(const ConservedVector& left, const ConservedVector& avg,
                                         const ConservedVector& right);
double simpson_average(double left, double center, double right);

// Flux derivative from the parabola through (left, center, right) values.
double flux_deriv_plus(const CellTriple<double>& t);
double flux_deriv_minus(const CellTriple<double>& t);

// Power law reconstruction.
enum class PowerLawBranch {
    Parabolic,    // monotone parabola, or fallback
    RightSteep,   // r > 2: u = uL + (uR - uL) xi^r
    LeftSteep,    // 0 < r < 1/2: u = uR - (uR - uL) (1 - xi)^(1/r)
};

struct PowerLawShape {
    PowerLawBranch branch = PowerLawBranch::Parabolic;
    double r = 1.0;
};

inline constexpr double power_law_r_min = 1.0 / 50.0;
inline constexpr double power_law_r_max = 50.0;

// r = (u_right - avg) / (avg - u_left); `valid` is false when the denominator
// vanishes.
struct PowerLawRatio {
    double r = 0.0;
    bool valid = false;
};
PowerLawRatio power_law_ratio(double left, double avg, double right);
PowerLawShape classify_power_law(double left, double avg, double right);

struct InterfaceDerivatives {
    double left = 0.0;
    double right = 0.0;
};

// Interface derivatives of the power law reconstruction where it applies,
// else of the parabola.
InterfaceDerivatives power_law_derivs(double left, double avg, double right, double dx);

// Evaluates the reconstruction chosen by classify_power_law at local offset
// s in [-dx/2, dx/2].
double power_law_value(double left, double avg, double right, double dx, double s);

// Flux triple (interface, center, interface) with its Simpson average as the
// middle entry, ready for the power law classifier.
CellTriple<double> flux_triple_for_power_law(double f_left, double f_center, double f_right, double dx);

} // namespace af
