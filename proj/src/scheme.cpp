#include "af/scheme.hpp"

#include "af/bp_point.hpp"
#include "af/reconstruction.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace af {

AFScheme::AFScheme(Equation eq, Grid1D grid, Boundary bc, SchemeConfig config)
    : eq_(std::move(eq)), grid_(grid), bc_(bc), config_(config)
{
    if (!splitting_supported(config_.splitting, eq_))
        throw std::invalid_argument("splitting " + to_string(config_.splitting) + " is not available for " +
                                    eq_.name());
    if (eq_.is_euler() && (config_.limiters.average == BoundMode::Local || config_.limiters.point == BoundMode::Local))
        throw std::invalid_argument("local maximum-principle bounds apply to scalar laws only");
}

std::vector<ConservedVector> AFScheme::point_rhs_all(const GhostedState& g, StageReport* report) const
{
    const auto n = static_cast<std::ptrdiff_t>(grid_.cells());
    const bool fvs = config_.splitting != SplittingKind::JS;
    const bool repair = config_.limiters.any_bp();

    // Cell-center values for cells -1 .. n.
    std::vector<ConservedVector> centers;
    if (fvs) {
        centers.reserve(static_cast<std::size_t>(n + 2));
        for (std::ptrdiff_t i = -1; i <= n; ++i) {
            ConservedVector c = cell_center_from_simpson(g.point(i), g.average(i), g.point(i + 1));
            if (repair && !eq_.is_admissible(c)) {
                c = repair_cell_center(eq_, c, g.average(i));
                if (report) ++report->centers_repaired;
            }
            centers.push_back(c);
        }
    }
    auto center = [&](std::ptrdiff_t i) -> const ConservedVector& { return centers[static_cast<std::size_t>(i + 1)]; };

    std::vector<ConservedVector> out(static_cast<std::size_t>(n + 1));
    const std::ptrdiff_t last = bc_ == Boundary::Periodic ? n - 1 : n;
    for (std::ptrdiff_t j = 0; j <= last; ++j) {
        PointWindow w{g.point(j - 1), g.average(j - 1), g.point(j), g.average(j), g.point(j + 1),
                      grid_.dx(j - 1), grid_.dx(j)};
        CellCenters c;
        if (fvs) c = {center(j - 1), center(j)};
        out[static_cast<std::size_t>(j)] = point_rhs(eq_, config_.splitting, w, c, config_.limiters.power_law);
    }
    if (bc_ == Boundary::Periodic) out[static_cast<std::size_t>(n)] = out[0];
    return out;
}

void AFScheme::rhs(const AFState& s, std::vector<ConservedVector>& d_avg, std::vector<ConservedVector>& d_pts) const
{
    const GhostedState g(s, bc_, 2);
    d_pts = point_rhs_all(g, nullptr);
    d_avg = average_rhs(limit_average_fluxes(eq_, g, grid_, BoundMode::Off), grid_);
}

AFState AFScheme::forward_euler(const AFState& s, double dt, StageReport& report) const
{
    report = StageReport{};
    report.dt_bound_average = std::numeric_limits<double>::infinity();
    report.dt_bound_point = std::numeric_limits<double>::infinity();
    AFState out;
    out.time = s.time + dt;
    try {
        const GhostedState g(s, bc_, 2);
        const std::vector<ConservedVector> d_pts = point_rhs_all(g, &report);
        const AverageLimitReport fluxes = limit_average_fluxes(eq_, g, grid_, config_.limiters.average);
        const std::vector<ConservedVector> d_avg = average_rhs(fluxes, grid_);

        out.averages.reserve(s.averages.size());
        for (std::size_t i = 0; i < s.averages.size(); ++i) out.averages.push_back(s.averages[i] + dt * d_avg[i]);
        out.points.reserve(s.points.size());
        for (std::size_t j = 0; j < s.points.size(); ++j) out.points.push_back(s.points[j] + dt * d_pts[j]);

        if (config_.limiters.average != BoundMode::Off) {
            if (eq_.is_scalar() && eq_.bounds()) {
                // the limited update is a convex combination; strip rounding residue
                const ScalarBounds b = *eq_.bounds();
                const double tol = 1e-14 * std::max({1.0, std::abs(b.lo), std::abs(b.hi)});
                for (auto& u : out.averages) {
                    if (u[0] > b.hi && u[0] <= b.hi + tol) u[0] = b.hi;
                    if (u[0] < b.lo && u[0] >= b.lo - tol) u[0] = b.lo;
                }
            }
            report.dt_bound_average = fluxes.dt_bound;
            report.intermediate_ok = fluxes.intermediate_ok;
            report.average_limited = fluxes.limited_count;
            if (!fluxes.intermediate_ok) {
                std::ostringstream msg;
                msg << "intermediate state at interface " << fluxes.first_bad_interface << " is inadmissible";
                report.diagnostic = msg.str();
            }
        }

        const BoundMode pmode = config_.limiters.point;
        if (pmode != BoundMode::Off) {
            const auto n = static_cast<std::ptrdiff_t>(grid_.cells());
            for (std::ptrdiff_t j = 0; j <= n; ++j) {
                const double dxl = grid_.dx(j - 1);
                const double dxr = grid_.dx(j);
                report.dt_bound_point = std::min(
                    report.dt_bound_point, llf_point_dt_bound(eq_, g.point(j - 1), g.point(j), g.point(j + 1), dxl, dxr));
                ConservedVector& u_high = out.points[static_cast<std::size_t>(j)];
                PointBlend blend;
                if (eq_.is_scalar()) {
                    ScalarBounds b;
                    if (pmode == BoundMode::Local) {
                        const double a = g.average(j - 1)[0];
                        const double c = g.average(j)[0];
                        const double p = g.point(j)[0];
                        b = {std::min({a, c, p}), std::max({a, c, p})};
                    } else if (eq_.bounds()) {
                        b = *eq_.bounds();
                    } else {
                        continue;
                    }
                    if (u_high[0] >= b.lo && u_high[0] <= b.hi) continue;
                    const ConservedVector u_low =
                        llf_point_update(eq_, g.point(j - 1), g.point(j), g.point(j + 1), dxl, dxr, dt);
                    blend = blend_scalar_point(u_high[0], u_low[0], b);
                } else {
                    if (eq_.is_admissible(u_high) &&
                        u_high[0] >= positivity_floor &&
                        eq_.pressure(u_high) >= positivity_floor)
                        continue;
                    const ConservedVector u_low =
                        llf_point_update(eq_, g.point(j - 1), g.point(j), g.point(j + 1), dxl, dxr, dt);
                    if (!eq_.is_admissible(u_low)) {
                        // the staggered scheme is only positive under its dt bound
                        report.limiting_active = true;
                        ++report.point_limited;
                        if (report.low_point_ok) {
                            std::ostringstream msg;
                            msg << "low-order point value at interface " << j << " is inadmissible";
                            report.diagnostic = msg.str();
                        }
                        report.low_point_ok = false;
                        continue;
                    }
                    blend = blend_euler_point(u_high, u_low, eq_.gamma());
                }
                if (blend.theta < 1.0 || blend.theta_star < 1.0) {
                    u_high = blend.u_limited;
                    ++report.point_limited;
                }
            }
        }
        report.limiting_active = report.limiting_active || report.average_limited > 0 || report.point_limited > 0;
        if (bc_ == Boundary::Periodic) out.points.back() = out.points.front();
    } catch (const DomainError& e) {
        report.failure = e.what();
    }
    return out;
}

} // namespace af
