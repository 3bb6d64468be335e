#include "af/splitting.hpp"

#include "af/reconstruction.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace af {

std::string to_string(SplittingKind k)
{
    switch (k) {
    case SplittingKind::JS: return "js";
    case SplittingKind::LLF_FVS: return "llf";
    case SplittingKind::SW_FVS: return "sw";
    case SplittingKind::VH_FVS: return "vh";
    }
    return "unknown";
}

SplittingKind splitting_from_string(const std::string& s)
{
    if (s == "js") return SplittingKind::JS;
    if (s == "llf") return SplittingKind::LLF_FVS;
    if (s == "sw") return SplittingKind::SW_FVS;
    if (s == "vh") return SplittingKind::VH_FVS;
    throw std::invalid_argument("unknown splitting '" + s + "' (expected js, llf, sw or vh)");
}

bool splitting_supported(SplittingKind k, const Equation& eq)
{
    if (k == SplittingKind::VH_FVS) return eq.kind() != Equation::Kind::Burgers;
    return true;
}

CellCenters simpson_centers(const PointWindow& w)
{
    return {cell_center_from_simpson(w.point_left, w.avg_left, w.point),
            cell_center_from_simpson(w.point, w.avg_right, w.point_right)};
}

ConservedVector point_rhs_js(const Equation& eq, const PointWindow& w, bool use_power_law)
{
    const std::size_t m = eq.components();
    ConservedVector d_plus(m);
    ConservedVector d_minus(m);
    if (use_power_law) {
        for (std::size_t k = 0; k < m; ++k) {
            d_plus[k] = power_law_derivs(w.point_left[k], w.avg_left[k], w.point[k], w.dx_left).right;
            d_minus[k] = power_law_derivs(w.point[k], w.avg_right[k], w.point_right[k], w.dx_right).left;
        }
    } else {
        d_plus = deriv_plus_average({w.point_left, w.avg_left, w.point, w.dx_left});
        d_minus = deriv_minus_average({w.point, w.avg_right, w.point_right, w.dx_right});
    }

    const Eigensystem es = eq.eigensystem(w.point);
    // R Λ± R^-1 D± computed as R (Λ± (R^-1 D±)).
    ConservedVector cp = es.left.apply(d_plus);
    ConservedVector cm = es.left.apply(d_minus);
    ConservedVector c(m);
    for (std::size_t k = 0; k < m; ++k)
        c[k] = std::max(es.lambda[k], 0.0) * cp[k] + std::min(es.lambda[k], 0.0) * cm[k];
    return -es.right.apply(c);
}

double llf_alpha_stencil(const Equation& eq, const PointWindow& w, const CellCenters& c)
{
    return std::max({eq.spectral_radius(w.point_left), eq.spectral_radius(c.left), eq.spectral_radius(w.point),
                     eq.spectral_radius(c.right), eq.spectral_radius(w.point_right)});
}

SplitFluxPair split_llf(const Equation& eq, const ConservedVector& u, double alpha)
{
    const ConservedVector f = eq.flux(u);
    return {0.5 * (f + alpha * u), 0.5 * (f - alpha * u)};
}

SplitFluxPair split_sw(const Equation& eq, const ConservedVector& u)
{
    if (eq.is_scalar()) {
        const ConservedVector f = eq.flux(u);
        const double lam = std::abs(eq.eigenvalues(u)[0]);
        return {0.5 * (f + lam * u), 0.5 * (f - lam * u)};
    }
    const double g = eq.gamma();
    const double a = eq.sound_speed(u);
    const double rho = u[0];
    const double v = u[1] / rho;
    const double l1 = v;
    const double l2 = v + a;
    const double l3 = v - a;

    auto part = [&](double s1, double s2, double s3) {
        const double alpha = 2.0 * (g - 1.0) * s1 + s2 + s3;
        const double c = rho / (2.0 * g);
        return ConservedVector{c * alpha, c * (alpha * v + a * (s2 - s3)),
                               c * (0.5 * alpha * v * v + a * v * (s2 - s3) + a * a / (g - 1.0) * (s2 + s3))};
    };
    auto pos = [](double x) { return std::max(x, 0.0); };
    auto neg = [](double x) { return std::min(x, 0.0); };
    return {part(pos(l1), pos(l2), pos(l3)), part(neg(l1), neg(l2), neg(l3))};
}

SplitFluxPair split_sw_eigen(const Equation& eq, const ConservedVector& u)
{
    const Eigensystem es = eq.eigensystem(u);
    ConservedVector c = es.left.apply(u);
    for (std::size_t k = 0; k < c.size(); ++k) c[k] *= std::abs(es.lambda[k]);
    const ConservedVector abs_ju = es.right.apply(c);
    const ConservedVector f = eq.flux(u);
    return {0.5 * (f + abs_ju), 0.5 * (f - abs_ju)};
}

SplitFluxPair split_vh(const Equation& eq, const ConservedVector& u)
{
    if (eq.kind() == Equation::Kind::Burgers)
        throw std::invalid_argument("van Leer-Hänel splitting is not defined for Burgers' equation");
    if (eq.kind() == Equation::Kind::LinearAdvection) {
        const double c = eq.speed();
        return {ConservedVector::scalar(std::max(c, 0.0) * u[0]), ConservedVector::scalar(std::min(c, 0.0) * u[0])};
    }
    const ConservedVector f = eq.flux(u);
    const ConservedVector zero = ConservedVector::filled(3, 0.0);
    const double a = eq.sound_speed(u);
    const double rho = u[0];
    const double v = u[1] / rho;
    const double mach = v / a;
    if (mach >= 1.0) return {f, zero};
    if (mach <= -1.0) return {zero, f};

    const double g = eq.gamma();
    const double p = euler_pressure(g, u[0], u[1], u[2]);
    const double h = (u[2] + p) / rho;
    const double mp = 0.25 * rho * a * (mach + 1.0) * (mach + 1.0);
    const double mm = -0.25 * rho * a * (mach - 1.0) * (mach - 1.0);
    const double pp = 0.5 * (1.0 + g * mach) * p;
    const double pm = 0.5 * (1.0 - g * mach) * p;
    return {ConservedVector{mp, mp * v + pp, mp * h}, ConservedVector{mm, mm * v + pm, mm * h}};
}

SplitFluxPair split(const Equation& eq, SplittingKind kind, const ConservedVector& u, double alpha)
{
    switch (kind) {
    case SplittingKind::LLF_FVS: return split_llf(eq, u, alpha);
    case SplittingKind::SW_FVS: return split_sw(eq, u);
    case SplittingKind::VH_FVS: return split_vh(eq, u);
    case SplittingKind::JS: break;
    }
    throw std::invalid_argument("Jacobian splitting has no split flux");
}

ConservedVector point_rhs_fvs(const Equation& eq, SplittingKind kind, const PointWindow& w,
                              const CellCenters& centers, bool use_power_law)
{
    const double alpha = kind == SplittingKind::LLF_FVS ? llf_alpha_stencil(eq, w, centers) : 0.0;
    const SplitFluxPair at_left = split(eq, kind, w.point_left, alpha);
    const SplitFluxPair at_cl = split(eq, kind, centers.left, alpha);
    const SplitFluxPair at_mid = split(eq, kind, w.point, alpha);
    const SplitFluxPair at_cr = split(eq, kind, centers.right, alpha);
    const SplitFluxPair at_right = split(eq, kind, w.point_right, alpha);

    const std::size_t m = eq.components();
    ConservedVector rhs(m);
    for (std::size_t k = 0; k < m; ++k) {
        double dp = 0.0;
        double dm = 0.0;
        if (use_power_law) {
            const CellTriple<double> tp =
                flux_triple_for_power_law(at_left.f_plus[k], at_cl.f_plus[k], at_mid.f_plus[k], w.dx_left);
            const CellTriple<double> tm =
                flux_triple_for_power_law(at_mid.f_minus[k], at_cr.f_minus[k], at_right.f_minus[k], w.dx_right);
            dp = power_law_derivs(tp.left, tp.mid, tp.right, tp.dx).right;
            dm = power_law_derivs(tm.left, tm.mid, tm.right, tm.dx).left;
        } else {
            dp = flux_deriv_plus({at_left.f_plus[k], at_cl.f_plus[k], at_mid.f_plus[k], w.dx_left});
            dm = flux_deriv_minus({at_mid.f_minus[k], at_cr.f_minus[k], at_right.f_minus[k], w.dx_right});
        }
        rhs[k] = -(dp + dm);
    }
    return rhs;
}

ConservedVector point_rhs_fvs(const Equation& eq, SplittingKind kind, const PointWindow& w, bool use_power_law)
{
    return point_rhs_fvs(eq, kind, w, simpson_centers(w), use_power_law);
}

ConservedVector point_rhs(const Equation& eq, SplittingKind kind, const PointWindow& w, const CellCenters& centers,
                          bool use_power_law)
{
    if (kind == SplittingKind::JS) return point_rhs_js(eq, w, use_power_law);
    return point_rhs_fvs(eq, kind, w, centers, use_power_law);
}

} // namespace af
