#include "af/time_integrator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace af {

double compute_dt(const AFState& s, const Equation& eq, const Grid1D& grid, double cfl, double t_final)
{
    double rate = 0.0;
    for (std::size_t i = 0; i < s.averages.size(); ++i)
        rate = std::max(rate, eq.spectral_radius(s.averages[i]) / grid.dx(static_cast<std::ptrdiff_t>(i)));
    const double remaining = t_final - s.time;
    if (rate == 0.0) return remaining;
    return std::min(cfl / rate, remaining);
}

namespace {

void combine(std::vector<ConservedVector>& out, const std::vector<ConservedVector>& x, double a,
             const std::vector<ConservedVector>& y, double b)
{
    const double inv = 1.0 / (a + b);
    out.resize(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        ConservedVector v(x[i].size());
        for (std::size_t k = 0; k < v.size(); ++k) v[k] = (a * x[i][k] + b * y[i][k]) * inv;
        out[i] = v;
    }
}

} // namespace

AFState convex_combination(const AFState& x, double a, const AFState& y, double b)
{
    AFState out;
    combine(out.averages, x.averages, a, y.averages, b);
    combine(out.points, x.points, a, y.points, b);
    out.time = y.time;
    return out;
}

AFState step_ssprk3(const AFState& s, const ForwardEulerStage& stage, double dt)
{
    const AFState u1 = stage(s, dt);
    AFState u2 = convex_combination(s, 3.0, stage(u1, dt), 1.0);
    u2.time = s.time + 0.5 * dt;
    AFState u3 = convex_combination(s, 1.0, stage(u2, dt), 2.0);
    u3.time = s.time + dt;
    return u3;
}

namespace {

struct StageIssue {
    bool failed = false;
    std::string message;
};

std::string first_inadmissible(const Equation& eq, const AFState& s)
{
    std::ostringstream msg;
    auto describe = [&](const char* what, std::size_t idx, const ConservedVector& u) {
        msg << what << ' ' << idx << ": ";
        if (!(u[0] > 0.0))
            msg << "negative density " << u[0];
        else
            msg << "negative pressure " << euler_pressure(eq.gamma(), u[0], u[1], u[2]);
    };
    for (std::size_t i = 0; i < s.averages.size(); ++i)
        if (!eq.is_admissible(s.averages[i])) {
            describe("cell", i, s.averages[i]);
            return msg.str();
        }
    for (std::size_t j = 0; j < s.points.size(); ++j)
        if (!eq.is_admissible(s.points[j])) {
            describe("interface", j, s.points[j]);
            return msg.str();
        }
    return {};
}

void track_extremes(const Equation& eq, const AFState& s, RunDiagnostics& d)
{
    auto visit = [&](const ConservedVector& u) {
        for (std::size_t k = 0; k < u.size(); ++k) {
            d.min_component[k] = std::min(d.min_component[k], u[k]);
            d.max_component[k] = std::max(d.max_component[k], u[k]);
        }
        if (eq.is_euler()) {
            d.min_density = std::min(d.min_density, u[0]);
            d.min_pressure = std::min(d.min_pressure, euler_pressure(eq.gamma(), u[0], u[1], u[2]));
        }
    };
    for (const auto& u : s.averages) visit(u);
    for (const auto& u : s.points) visit(u);
}

} // namespace

RunResult advance_with_bp_protocol(const AFScheme& scheme, AFState state, const StepController& ctrl,
                                   const std::function<void(const AFState&)>& on_step)
{
    const Equation& eq = scheme.equation();
    const bool limited = scheme.config().limiters.any_bp();
    RunResult result;
    RunDiagnostics& diag = result.diagnostics;
    diag.min_component = state.averages.front();
    diag.max_component = state.averages.front();
    diag.min_density = std::numeric_limits<double>::infinity();
    diag.min_pressure = std::numeric_limits<double>::infinity();
    track_extremes(eq, state, diag);

    while (state.time < ctrl.t_final) {
        double dt = compute_dt(state, eq, scheme.grid(), ctrl.cfl, ctrl.t_final);
        if (!(dt > 0.0)) break;

        for (int attempt = 0;; ++attempt) {
            StageIssue issue;
            RunDiagnostics trial;
            trial.min_component = diag.min_component;
            trial.max_component = diag.max_component;
            trial.min_density = diag.min_density;
            trial.min_pressure = diag.min_pressure;
            std::size_t limiting_stages = 0;

            const ForwardEulerStage stage = [&](const AFState& in, double h) -> AFState {
                if (issue.failed) return in;
                StageReport rep;
                AFState out = scheme.forward_euler(in, h, rep);
                trial.average_limited += rep.average_limited;
                trial.point_limited += rep.point_limited;
                trial.centers_repaired += rep.centers_repaired;
                if (rep.limiting_active) ++limiting_stages;

                if (!rep.failure.empty()) {
                    issue = {true, rep.failure};
                    return in;
                }
                if (limited && rep.limiting_active) {
                    std::ostringstream msg;
                    if (!rep.intermediate_ok || !rep.low_point_ok)
                        msg << rep.diagnostic;
                    else if (h > rep.dt_bound_average)
                        msg << "dt " << h << " exceeds the average bound " << rep.dt_bound_average;
                    else if (h > rep.dt_bound_point)
                        msg << "dt " << h << " exceeds the point bound " << rep.dt_bound_point;
                    if (!msg.str().empty()) {
                        issue = {true, msg.str()};
                        return in;
                    }
                }
                if (eq.is_euler()) {
                    const std::string bad = first_inadmissible(eq, out);
                    if (!bad.empty()) {
                        issue = {true, bad};
                        return in;
                    }
                }
                track_extremes(eq, out, trial);
                return out;
            };

            AFState next = step_ssprk3(state, stage, dt);
            if (!issue.failed) {
                state = std::move(next);
                diag.dt_history.push_back(dt);
                ++diag.steps;
                diag.stages_with_limiting += limiting_stages;
                diag.average_limited += trial.average_limited;
                diag.point_limited += trial.point_limited;
                diag.centers_repaired += trial.centers_repaired;
                diag.min_component = trial.min_component;
                diag.max_component = trial.max_component;
                diag.min_density = trial.min_density;
                diag.min_pressure = trial.min_pressure;
                break;
            }

            std::ostringstream msg;
            msg << "t = " << state.time << ": " << issue.message;
            if (!limited) throw BPProtocolAbort("unlimited step failed at " + msg.str(), state.time);
            if (attempt >= ctrl.max_halvings)
                throw BPProtocolAbort("dt halved " + std::to_string(ctrl.max_halvings) + " times without an admissible step at " + msg.str(),
                                      state.time);
            if (diag.halving_reasons.size() < 20) diag.halving_reasons.push_back(msg.str());
            dt *= 0.5;
            ++diag.halvings;
        }
        if (on_step) on_step(state);
    }
    result.state = std::move(state);
    return result;
}

} // namespace af
