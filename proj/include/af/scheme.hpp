#pragma once

#include "af/bp_average.hpp"
#include "af/equations.hpp"
#include "af/limiter_config.hpp"
#include "af/mesh.hpp"
#include "af/splitting.hpp"

#include <string>

namespace af {

struct SchemeConfig {
    SplittingKind splitting = SplittingKind::LLF_FVS;
    LimiterConfig limiters;
};

// What happened during one forward-Euler stage U + dt L(U).
struct StageReport {
    bool limiting_active = false;
    bool intermediate_ok = true;
    bool low_point_ok = true; // staggered low-order point values admissible
    double dt_bound_average = 0.0; // infinite when average limiting is off
    double dt_bound_point = 0.0;   // infinite when point limiting is off
    std::size_t average_limited = 0;
    std::size_t point_limited = 0;
    std::size_t centers_repaired = 0;
    std::string failure;    // non-empty when the stage could not be evaluated
    std::string diagnostic; // first limiter problem (bad intermediate or low-order state)
};

// Semi-discrete active flux operator with optional bound-preserving limiting
// applied to its forward-Euler stages.
class AFScheme {
public:
    AFScheme(Equation eq, Grid1D grid, Boundary bc, SchemeConfig config);

    const Equation& equation() const { return eq_; }
    const Grid1D& grid() const { return grid_; }
    Boundary boundary() const { return bc_; }
    const SchemeConfig& config() const { return config_; }

    // Unlimited right-hand sides: d(avg)/dt and d(point)/dt.
    void rhs(const AFState& s, std::vector<ConservedVector>& d_avg, std::vector<ConservedVector>& d_pts) const;

    // U + dt L(U) with the configured limiters. Domain errors raised while
    // evaluating the operator are reported through `report.failure`.
    AFState forward_euler(const AFState& s, double dt, StageReport& report) const;

private:
    std::vector<ConservedVector> point_rhs_all(const GhostedState& g, StageReport* report) const;

    Equation eq_;
    Grid1D grid_;
    Boundary bc_;
    SchemeConfig config_;
};

} // namespace af
