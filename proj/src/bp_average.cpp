#include "af/bp_average.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace af {

double alpha_bound(const Equation& eq, const ConservedVector& ul, const ConservedVector& ur)
{
    switch (eq.kind()) {
    case Equation::Kind::LinearAdvection: return std::abs(eq.speed());
    case Equation::Kind::Burgers: return std::max(std::abs(ul[0]), std::abs(ur[0]));
    case Equation::Kind::Euler: break;
    }
    const double sl = std::abs(ul[1] / ul[0]) + eq.sound_speed(ul);
    const double sr = std::abs(ur[1] / ur[0]) + eq.sound_speed(ur);
    return std::max(sl, sr);
}

ConservedVector low_order_flux(const Equation& eq, const ConservedVector& ul, const ConservedVector& ur, double alpha)
{
    return 0.5 * (eq.flux(ul) + eq.flux(ur)) - (0.5 * alpha) * (ur - ul);
}

ConservedVector intermediate_state(const Equation& eq, const ConservedVector& ul, const ConservedVector& ur,
                                   double alpha)
{
    if (alpha == 0.0) return 0.5 * (ul + ur);
    return 0.5 * (ul + ur) + (0.5 / alpha) * (eq.flux(ul) - eq.flux(ur));
}

ScalarFluxLimit limit_scalar_antidiffusive(double df, double u_tilde, double alpha, ScalarBounds left,
                                           ScalarBounds right)
{
    ScalarFluxLimit out;
    if (u_tilde < left.lo || u_tilde > left.hi || u_tilde < right.lo || u_tilde > right.hi) {
        out.tilde_in_bounds = false;
        out.clipped = df != 0.0;
        return out;
    }
    if (df >= 0.0)
        out.df_limited = std::min({df, alpha * (u_tilde - left.lo), alpha * (right.hi - u_tilde)});
    else
        out.df_limited = std::max({df, alpha * (right.lo - u_tilde), alpha * (u_tilde - left.hi)});
    out.clipped = out.df_limited != df;
    return out;
}

double limit_scalar(double f_low, double f_high, double u_tilde, double alpha, ScalarBounds bounds)
{
    return f_low + limit_scalar_antidiffusive(f_high - f_low, u_tilde, alpha, bounds, bounds).df_limited;
}

ConservedVector limit_euler_density(const ConservedVector& f_low, const ConservedVector& f_high,
                                    const ConservedVector& u_tilde, double alpha)
{
    ConservedVector df = f_high - f_low;
    const double eps = std::min(positivity_floor, u_tilde[0]);
    if (df[0] >= 0.0)
        df[0] = std::min(df[0], alpha * (u_tilde[0] - eps));
    else
        df[0] = std::max(df[0], alpha * (eps - u_tilde[0]));
    return df;
}

PressureCoefficients pressure_coefficients(const ConservedVector& df, const ConservedVector& u, double alpha,
                                           double gamma, double eps_p)
{
    const double eps = eps_p / (gamma - 1.0);
    PressureCoefficients k;
    k.a = 0.5 * df[1] * df[1] - df[0] * df[2];
    k.b = alpha * (df[0] * u[2] + u[0] * df[2] - df[1] * u[1] - eps * df[0]);
    k.c = alpha * alpha * (u[0] * u[2] - 0.5 * u[1] * u[1] - eps * u[0]);
    return k;
}

EulerFluxLimit limit_euler_pressure(const ConservedVector& f_low, const ConservedVector& df_star,
                                    const ConservedVector& u_tilde, double alpha, double gamma)
{
    const double p_tilde = euler_pressure(gamma, u_tilde[0], u_tilde[1], u_tilde[2]);
    const double eps_p = std::min(positivity_floor, p_tilde);
    const PressureCoefficients k = pressure_coefficients(df_star, u_tilde, alpha, gamma, eps_p);
    double theta = 0.0;
    if (k.c > 0.0) {
        const double den = std::max(0.0, k.a) + std::abs(k.b);
        theta = den > k.c ? k.c / den : 1.0;
    }
    return {f_low + theta * df_star, theta};
}

namespace {

bool limited_states_admissible(const Equation& eq, const ConservedVector& u_tilde, const ConservedVector& df,
                               double alpha)
{
    const ConservedVector s = (1.0 / alpha) * df;
    return eq.is_admissible(u_tilde + s) && eq.is_admissible(u_tilde - s);
}

} // namespace

AverageLimitReport limit_average_fluxes(const Equation& eq, const GhostedState& g, const Grid1D& grid,
                                        BoundMode mode)
{
    const auto n = static_cast<std::ptrdiff_t>(grid.cells());
    AverageLimitReport rep;
    rep.interfaces.resize(static_cast<std::size_t>(n + 1));

    // Intermediate states on interfaces -1 .. n+1 (local scalar bounds need
    // the neighbours of every cell adjacent to an interface).
    std::vector<ConservedVector> tilde_ext;
    std::vector<double> alpha_ext;
    const bool need_tilde = mode != BoundMode::Off;
    if (need_tilde) {
        tilde_ext.reserve(static_cast<std::size_t>(n + 3));
        alpha_ext.reserve(static_cast<std::size_t>(n + 3));
        for (std::ptrdiff_t j = -1; j <= n + 1; ++j) {
            const ConservedVector& ul = g.average(j - 1);
            const ConservedVector& ur = g.average(j);
            const double a = alpha_bound(eq, ul, ur);
            alpha_ext.push_back(a);
            ConservedVector ut = intermediate_state(eq, ul, ur, a);
            if (eq.is_scalar() && eq.bounds()) {
                // an average of the two states up to rounding
                const ScalarBounds b = *eq.bounds();
                const double tol = 1e-14 * std::max({1.0, std::abs(b.lo), std::abs(b.hi)});
                if (ut[0] > b.hi && ut[0] <= b.hi + tol) ut[0] = b.hi;
                if (ut[0] < b.lo && ut[0] >= b.lo - tol) ut[0] = b.lo;
            }
            tilde_ext.push_back(ut);
        }
    }
    auto tilde = [&](std::ptrdiff_t j) -> const ConservedVector& { return tilde_ext[static_cast<std::size_t>(j + 1)]; };
    auto alpha_at = [&](std::ptrdiff_t j) { return alpha_ext[static_cast<std::size_t>(j + 1)]; };

    auto local_bounds = [&](std::ptrdiff_t cell) {
        const double a = g.average(cell)[0];
        const double l = tilde(cell)[0];
        const double r = tilde(cell + 1)[0];
        return ScalarBounds{std::min({a, l, r}), std::max({a, l, r})};
    };

    for (std::ptrdiff_t j = 0; j <= n; ++j) {
        InterfaceFluxSet& fs = rep.interfaces[static_cast<std::size_t>(j)];
        fs.f_high = eq.flux(g.point(j));
        if (!need_tilde) {
            fs.f_limited = fs.f_high;
            continue;
        }
        const ConservedVector& ul = g.average(j - 1);
        const ConservedVector& ur = g.average(j);
        fs.alpha_bound = alpha_at(j);
        fs.u_tilde = tilde(j);
        fs.f_low = fs.alpha_bound > 0.0 ? low_order_flux(eq, ul, ur, fs.alpha_bound) : fs.f_high;
        fs.tilde_admissible = eq.is_admissible(fs.u_tilde);

        if (fs.alpha_bound == 0.0) {
            fs.f_limited = fs.f_high;
        } else if (eq.is_scalar()) {
            ScalarBounds left{-std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
            ScalarBounds right = left;
            if (mode == BoundMode::Local) {
                left = local_bounds(j - 1);
                right = local_bounds(j);
            } else if (eq.bounds()) {
                left = right = *eq.bounds();
            }
            const double df = fs.f_high[0] - fs.f_low[0];
            const ScalarFluxLimit lim = limit_scalar_antidiffusive(df, fs.u_tilde[0], fs.alpha_bound, left, right);
            fs.f_limited = ConservedVector::scalar(fs.f_low[0] + lim.df_limited);
            fs.theta = df != 0.0 ? lim.df_limited / df : 1.0;
            fs.limited = lim.clipped;
        } else if (!fs.tilde_admissible) {
            fs.f_limited = fs.f_low;
            fs.theta = 0.0;
            fs.limited = true;
        } else {
            const ConservedVector df = fs.f_high - fs.f_low;
            const ConservedVector df_star = limit_euler_density(fs.f_low, fs.f_high, fs.u_tilde, fs.alpha_bound);
            EulerFluxLimit lim = limit_euler_pressure(fs.f_low, df_star, fs.u_tilde, fs.alpha_bound, eq.gamma());
            if (lim.theta > 0.0 &&
                !limited_states_admissible(eq, fs.u_tilde, lim.theta * df_star, fs.alpha_bound)) {
                // rounding at the floor
                lim = {fs.f_low, 0.0};
            }
            fs.f_limited = lim.f_limited;
            fs.theta = lim.theta;
            fs.limited = lim.theta < 1.0 || df_star[0] != df[0];
        }

        if (fs.limited) {
            rep.limiting_active = true;
            ++rep.limited_count;
        }
        if (!fs.tilde_admissible && rep.intermediate_ok) {
            rep.intermediate_ok = false;
            rep.first_bad_interface = j;
        }
    }

    rep.dt_bound = std::numeric_limits<double>::infinity();
    if (need_tilde) {
        for (std::ptrdiff_t i = 0; i < n; ++i) {
            const double s = alpha_at(i) + alpha_at(i + 1);
            if (s > 0.0) rep.dt_bound = std::min(rep.dt_bound, grid.dx(i) / s);
        }
    }
    return rep;
}

std::vector<ConservedVector> average_rhs(const AverageLimitReport& fluxes, const Grid1D& grid)
{
    std::vector<ConservedVector> rhs;
    rhs.reserve(grid.cells());
    for (std::size_t i = 0; i < grid.cells(); ++i) {
        const double inv = 1.0 / grid.dx(static_cast<std::ptrdiff_t>(i));
        rhs.push_back(-inv * (fluxes.interfaces[i + 1].f_limited - fluxes.interfaces[i].f_limited));
    }
    return rhs;
}

} // namespace af
