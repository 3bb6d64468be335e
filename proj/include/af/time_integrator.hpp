#pragma once

#include "af/scheme.hpp"

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace af {

// dt = cfl / max_{i,l} |lambda_l(avg_i)| / dx_i, clipped so that time never
// passes t_final. Vanishing wave speeds give dt = t_final - t.
double compute_dt(const AFState& s, const Equation& eq, const Grid1D& grid, double cfl, double t_final);

// One forward-Euler stage U -> U + dt L(U) (possibly limited).
using ForwardEulerStage = std::function<AFState(const AFState&, double)>;

// Three-stage SSP Runge-Kutta step written as convex combinations of
// forward-Euler stages.
AFState step_ssprk3(const AFState& s, const ForwardEulerStage& stage, double dt);

// Combination (a * x + b * y) / (a + b) with monotone rounding:
// the result stays inside any interval containing x and y.
AFState convex_combination(const AFState& x, double a, const AFState& y, double b);

struct StepController {
    double cfl = 0.4;
    double t_final = 0.0;
    int max_halvings = 20;
};

struct RunDiagnostics {
    std::vector<double> dt_history; // accepted step sizes
    std::size_t steps = 0;
    std::size_t halvings = 0;
    std::size_t stages_with_limiting = 0;
    std::size_t average_limited = 0;
    std::size_t point_limited = 0;
    std::size_t centers_repaired = 0;
    std::vector<std::string> halving_reasons; // first few only
    // Extremes over every stage output (averages and points).
    ConservedVector min_component;
    ConservedVector max_component;
    double min_density = 0.0;  // Euler
    double min_pressure = 0.0; // Euler
};

// Thrown when the dt-halving protocol cannot produce an admissible step, or
// an unlimited Euler run loses positivity.
class BPProtocolAbort : public std::runtime_error {
public:
    BPProtocolAbort(const std::string& what, double time) : std::runtime_error(what), time_(time) {}
    double time() const { return time_; }

private:
    double time_;
};

struct RunResult {
    AFState state;
    RunDiagnostics diagnostics;
};

// Marches to t_final. With limiting enabled, a step whose stages required
// limiting while an intermediate state was inadmissible or a dt bound was
// exceeded (or whose output is inadmissible) is rolled back and retried with
// dt / 2. Throws BPProtocolAbort after `max_halvings` failures, or when an
// unlimited Euler run produces non-positive density or pressure.
RunResult advance_with_bp_protocol(const AFScheme& scheme, AFState state, const StepController& ctrl,
                                   const std::function<void(const AFState&)>& on_step = {});

} // namespace af
