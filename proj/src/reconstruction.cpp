#include "af/reconstruction.hpp"

#include <cmath>

namespace af {

Quadratic parabola_from_average(const CellTriple<double>& t)
{
    const double h = t.dx;
    Quadratic q;
    q.c2 = -3.0 * (2.0 * t.mid - t.left - t.right) / (h * h);
    q.c1 = (t.right - t.left) / h;
    q.c0 = 0.25 * (6.0 * t.mid - t.left - t.right);
    return q;
}

double deriv_plus_average(const CellTriple<double>& t)
{
    return (2.0 * t.left - 6.0 * t.mid + 4.0 * t.right) / t.dx;
}

double deriv_minus_average(const CellTriple<double>& t)
{
    return (-4.0 * t.left + 6.0 * t.mid - 2.0 * t.right) / t.dx;
}

ConservedVector deriv_plus_average(const CellTriple<ConservedVector>& t)
{
    return (2.0 * t.left - 6.0 * t.mid + 4.0 * t.right) * (1.0 / t.dx);
}

ConservedVector deriv_minus_average(const CellTriple<ConservedVector>& t)
{
    return (-4.0 * t.left + 6.0 * t.mid - 2.0 * t.right) * (1.0 / t.dx);
}

double cell_center_from_simpson(double left, double avg, double right)
{
    return 0.25 * (-left + 6.0 * avg - right);
}

ConservedVector cell_center_from_simpson(const ConservedVector& left, const ConservedVector& avg,
                                         const ConservedVector& right)
{
    return 0.25 * (6.0 * avg - left - right);
}

double simpson_average(double left, double center, double right)
{
    return (left + 4.0 * center + right) / 6.0;
}

double flux_deriv_plus(const CellTriple<double>& t)
{
    return (t.left - 4.0 * t.mid + 3.0 * t.right) / t.dx;
}

double flux_deriv_minus(const CellTriple<double>& t)
{
    return (-3.0 * t.left + 4.0 * t.mid - t.right) / t.dx;
}

PowerLawRatio power_law_ratio(double left, double avg, double right)
{
    const double den = avg - left;
    if (den == 0.0) return {0.0, false};
    return {(right - avg) / den, true};
}

PowerLawShape classify_power_law(double left, double avg, double right)
{
    const PowerLawRatio ratio = power_law_ratio(left, avg, right);
    if (!ratio.valid) return {};
    const double r = ratio.r;
    // r <= 0 means the average lies outside the point values: an extremum
    // cannot be avoided and the parabola is kept.
    if (r > 2.0 && r <= power_law_r_max) return {PowerLawBranch::RightSteep, r};
    if (r > 0.0 && r < 0.5 && r >= power_law_r_min) return {PowerLawBranch::LeftSteep, r};
    return {PowerLawBranch::Parabolic, r};
}

InterfaceDerivatives power_law_derivs(double left, double avg, double right, double dx)
{
    const PowerLawShape shape = classify_power_law(left, avg, right);
    const double slope = (right - left) / dx;
    switch (shape.branch) {
    case PowerLawBranch::RightSteep: return {0.0, slope * shape.r};
    case PowerLawBranch::LeftSteep: return {slope / shape.r, 0.0};
    case PowerLawBranch::Parabolic: break;
    }
    const CellTriple<double> t{left, avg, right, dx};
    return {deriv_minus_average(t), deriv_plus_average(t)};
}

double power_law_value(double left, double avg, double right, double dx, double s)
{
    const PowerLawShape shape = classify_power_law(left, avg, right);
    const double xi = s / dx + 0.5;
    switch (shape.branch) {
    case PowerLawBranch::RightSteep: return left + (right - left) * std::pow(xi, shape.r);
    case PowerLawBranch::LeftSteep: return right - (right - left) * std::pow(1.0 - xi, 1.0 / shape.r);
    case PowerLawBranch::Parabolic: break;
    }
    return parabola_from_average({left, avg, right, dx})(s);
}

CellTriple<double> flux_triple_for_power_law(double f_left, double f_center, double f_right, double dx)
{
    return {f_left, simpson_average(f_left, f_center, f_right), f_right, dx};
}

} // namespace af
