#pragma once

#include "af/limiter_config.hpp"
#include "af/problems.hpp"
#include "af/splitting.hpp"
#include "af/time_integrator.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace af {

struct RunConfig {
    std::string problem = "advection";
    std::size_t n_cells = 0;      // 0: problem default
    std::optional<double> cfl;    // default from the problem table
    std::optional<double> t_final; // default from the problem
    SplittingKind splitting = SplittingKind::LLF_FVS;
    LimiterConfig limiters;
    bool compute_reference = false; // fine-mesh references are expensive
};

struct RunOutcome {
    ProblemSpec spec;
    ProblemSetup setup;
    double cfl = 0.0;
    AFState state;
    RunDiagnostics diagnostics;
    ComponentRange range;
    bool aborted = false;
    std::string message;
    double wall_seconds = 0.0;
    std::optional<ConservedVector> l1_error;
};

// Throws std::invalid_argument for configuration errors. Protocol aborts are
// reported in the outcome, not thrown.
RunOutcome run_problem(const RunConfig& cfg);

// averages.csv, points.csv and meta.json.
void write_run_outputs(const std::filesystem::path& dir, const RunConfig& cfg, const RunOutcome& out);

// Cell averages of the fine-mesh reference restricted to n cells
// (reference_cells must be a multiple of n).
std::vector<ConservedVector> fine_mesh_reference(const ProblemSpec& spec, std::size_t n);

struct ConvergenceRow {
    std::size_t n = 0;
    ConservedVector error;
    std::optional<ConservedVector> order;
    bool aborted = false;
};

// l1 errors against the exact reference on each mesh; meshes run
// concurrently.
std::vector<ConvergenceRow> convergence_study(const std::string& problem, SplittingKind splitting,
                                              const LimiterConfig& limiters, const std::vector<std::size_t>& meshes,
                                              std::optional<double> cfl = {});

struct SweepRow {
    std::string label;
    LimiterConfig limiters;
    double min = 0.0;
    double max = 0.0;
    bool within_bounds = false;
    bool aborted = false;
};

// Limiter combinations of the advection bounds table.
std::vector<std::pair<std::string, LimiterConfig>> advection_table_configs();
std::vector<SweepRow> advection_sweep(std::size_t n = 400, double cfl = 0.1);

} // namespace af
