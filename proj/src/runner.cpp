#include "af/runner.hpp"

#include "af/scheme.hpp"

#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <future>
#include <stdexcept>

namespace af {

namespace {

std::vector<std::string> component_names(const Equation& eq)
{
    if (eq.is_euler()) return {"rho", "mom", "E"};
    return {"u"};
}

nlohmann::json to_json(const ConservedVector& v)
{
    nlohmann::json a = nlohmann::json::array();
    for (std::size_t k = 0; k < v.size(); ++k) a.push_back(v[k]);
    return a;
}

void write_csv(const std::filesystem::path& file, const Equation& eq, const std::vector<double>& x,
               const std::vector<ConservedVector>& values)
{
    std::ofstream os(file);
    if (!os) throw std::runtime_error("cannot write " + file.string());
    os << "x";
    for (const auto& name : component_names(eq)) os << ',' << name;
    os << '\n';
    char buf[40];
    for (std::size_t i = 0; i < values.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.17g", x[i]);
        os << buf;
        for (std::size_t k = 0; k < values[i].size(); ++k) {
            std::snprintf(buf, sizeof buf, "%.17g", values[i][k]);
            os << ',' << buf;
        }
        os << '\n';
    }
}

std::vector<ConservedVector> restrict_averages(const std::vector<ConservedVector>& fine, std::size_t n)
{
    if (fine.size() % n != 0)
        throw std::invalid_argument("reference mesh of " + std::to_string(fine.size()) + " cells is not a multiple of " +
                                    std::to_string(n));
    const std::size_t r = fine.size() / n;
    std::vector<ConservedVector> out(n, ConservedVector(fine.front().size()));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < r; ++k) out[i] += fine[i * r + k];
        out[i] *= 1.0 / static_cast<double>(r);
    }
    return out;
}

} // namespace

RunOutcome run_problem(const RunConfig& cfg)
{
    ProblemSpec spec = find_problem(cfg.problem);
    if (cfg.t_final) {
        if (!(*cfg.t_final > 0.0)) throw std::invalid_argument("final time must be positive");
        spec.t_final = *cfg.t_final;
    }
    const std::size_t n = cfg.n_cells ? cfg.n_cells : spec.default_cells;
    if (n < 4) throw std::invalid_argument("at least 4 cells are required");
    const double cfl = cfg.cfl ? *cfg.cfl : spec.default_cfl(cfg.splitting);
    if (!(cfl > 0.0)) throw std::invalid_argument("CFL number must be positive");

    ProblemSetup setup = setup_problem(spec, n);
    const AFScheme scheme(setup.equation, setup.grid, spec.boundary, {cfg.splitting, cfg.limiters});

    RunOutcome out{spec, setup, cfl, setup.state, {}, {}, false, {}, 0.0, {}};
    const auto start = std::chrono::steady_clock::now();
    try {
        RunResult r = advance_with_bp_protocol(scheme, setup.state, {cfl, spec.t_final, 20});
        out.state = std::move(r.state);
        out.diagnostics = std::move(r.diagnostics);
    } catch (const BPProtocolAbort& e) {
        out.aborted = true;
        out.message = e.what();
        out.state.time = e.time();
    }
    out.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.range = solution_range(out.state);

    if (!out.aborted) {
        if (spec.exact) {
            const double t = out.state.time;
            out.l1_error = error_norms(out.state, setup.grid, [&](double x) { return spec.exact(x, t); });
        } else if (cfg.compute_reference && spec.reference == ReferenceKind::FineMeshSelf) {
            const auto ref = fine_mesh_reference(spec, n);
            ConservedVector e(setup.equation.components());
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t k = 0; k < e.size(); ++k) e[k] += std::abs(out.state.averages[i][k] - ref[i][k]);
            e *= 1.0 / static_cast<double>(n);
            out.l1_error = e;
        }
    }
    return out;
}

std::vector<ConservedVector> fine_mesh_reference(const ProblemSpec& spec, std::size_t n)
{
    if (spec.reference != ReferenceKind::FineMeshSelf) throw std::invalid_argument(spec.name + " has no fine-mesh reference");
    if (spec.equation.is_scalar()) return restrict_averages(first_order_reference(spec, spec.reference_cells), n);

    ProblemSetup fine = setup_problem(spec, spec.reference_cells);
    LimiterConfig lim;
    lim.average = BoundMode::Global;
    lim.point = BoundMode::Global;
    const AFScheme scheme(fine.equation, fine.grid, spec.boundary, {SplittingKind::LLF_FVS, lim});
    const RunResult r = advance_with_bp_protocol(scheme, fine.state, {spec.default_cfl.llf, spec.t_final, 20});
    return restrict_averages(r.state.averages, n);
}

void write_run_outputs(const std::filesystem::path& dir, const RunConfig& cfg, const RunOutcome& out)
{
    std::filesystem::create_directories(dir);
    const Grid1D& grid = out.setup.grid;
    std::vector<double> xc(grid.cells()), xi(grid.interfaces());
    for (std::size_t i = 0; i < xc.size(); ++i) xc[i] = grid.center(i);
    for (std::size_t j = 0; j < xi.size(); ++j) xi[j] = grid.interface(j);
    write_csv(dir / "averages.csv", out.setup.equation, xc, out.state.averages);
    write_csv(dir / "points.csv", out.setup.equation, xi, out.state.points);

    const RunDiagnostics& d = out.diagnostics;
    nlohmann::json meta;
    meta["problem"] = out.spec.name;
    meta["equation"] = out.setup.equation.name();
    meta["n_cells"] = grid.cells();
    meta["cfl"] = out.cfl;
    meta["splitting"] = to_string(cfg.splitting);
    meta["limiters"] = {{"bp_average", to_string(cfg.limiters.average)},
                        {"bp_point", to_string(cfg.limiters.point)},
                        {"power_law", cfg.limiters.power_law}};
    meta["boundary"] = to_string(out.spec.boundary);
    meta["t_final"] = out.spec.t_final;
    meta["time"] = out.state.time;
    meta["completed"] = !out.aborted;
    if (out.aborted) meta["abort_reason"] = out.message;
    meta["steps"] = d.steps;
    meta["halvings"] = d.halvings;
    meta["halving_reasons"] = d.halving_reasons;
    meta["dt_history"] = d.dt_history;
    meta["range"] = {{"components", component_names(out.setup.equation)},
                     {"min", to_json(out.range.min)},
                     {"max", to_json(out.range.max)}};
    if (d.min_component.size() > 0)
        meta["run_range"] = {{"min", to_json(d.min_component)}, {"max", to_json(d.max_component)}};
    if (out.setup.equation.is_euler() && d.steps > 0) {
        meta["min_density"] = d.min_density;
        meta["min_pressure"] = d.min_pressure;
    }
    meta["limiter_activity"] = {{"stages_with_limiting", d.stages_with_limiting},
                                {"average_fluxes_limited", d.average_limited},
                                {"points_limited", d.point_limited},
                                {"centers_repaired", d.centers_repaired}};
    if (out.l1_error) meta["l1_error"] = to_json(*out.l1_error);
    meta["wall_seconds"] = out.wall_seconds;

    std::ofstream os(dir / "meta.json");
    if (!os) throw std::runtime_error("cannot write " + (dir / "meta.json").string());
    os << meta.dump(2) << '\n';
}

std::vector<ConvergenceRow> convergence_study(const std::string& problem, SplittingKind splitting,
                                              const LimiterConfig& limiters, const std::vector<std::size_t>& meshes,
                                              std::optional<double> cfl)
{
    if (!find_problem(problem).exact) throw std::invalid_argument(problem + " has no exact reference");
    std::vector<std::future<RunOutcome>> jobs;
    for (std::size_t n : meshes) {
        RunConfig cfg;
        cfg.problem = problem;
        cfg.n_cells = n;
        cfg.cfl = cfl;
        cfg.splitting = splitting;
        cfg.limiters = limiters;
        jobs.push_back(std::async(std::launch::async, [cfg] { return run_problem(cfg); }));
    }
    std::vector<ConvergenceRow> rows;
    for (std::size_t m = 0; m < jobs.size(); ++m) {
        const RunOutcome o = jobs[m].get();
        ConvergenceRow row;
        row.n = meshes[m];
        row.aborted = o.aborted || !o.l1_error;
        if (!row.aborted) row.error = *o.l1_error;
        if (m > 0 && !row.aborted && !rows.back().aborted) {
            const ConservedVector& prev = rows.back().error;
            ConservedVector order(row.error.size());
            const double ratio = std::log(static_cast<double>(row.n) / static_cast<double>(rows.back().n));
            for (std::size_t k = 0; k < order.size(); ++k) order[k] = std::log(prev[k] / row.error[k]) / ratio;
            row.order = order;
        }
        rows.push_back(row);
    }
    return rows;
}

std::vector<std::pair<std::string, LimiterConfig>> advection_table_configs()
{
    using B = BoundMode;
    auto cfg = [](B avg, B pt, bool plr) {
        LimiterConfig c;
        c.average = avg;
        c.point = pt;
        c.power_law = plr;
        return c;
    };
    return {
        {"none", cfg(B::Off, B::Off, false)},
        {"PLR", cfg(B::Off, B::Off, true)},
        {"global MP for average", cfg(B::Global, B::Off, false)},
        {"local MP for average", cfg(B::Local, B::Off, false)},
        {"global MP for point", cfg(B::Off, B::Global, false)},
        {"local MP for point", cfg(B::Off, B::Local, false)},
        {"PLR + global MP for average", cfg(B::Global, B::Off, true)},
        {"PLR + local MP for average", cfg(B::Local, B::Off, true)},
        {"global MP for average + global MP for point", cfg(B::Global, B::Global, false)},
        {"local MP for average + global MP for point", cfg(B::Local, B::Global, false)},
        {"PLR + global MP for average + global MP for point", cfg(B::Global, B::Global, true)},
        {"PLR + local MP for average + global MP for point", cfg(B::Local, B::Global, true)},
        {"global MP for average + local MP for point", cfg(B::Global, B::Local, false)},
        {"local MP for average + local MP for point", cfg(B::Local, B::Local, false)},
        {"PLR + global MP for average + local MP for point", cfg(B::Global, B::Local, true)},
        {"PLR + local MP for average + local MP for point", cfg(B::Local, B::Local, true)},
    };
}

std::vector<SweepRow> advection_sweep(std::size_t n, double cfl)
{
    const auto configs = advection_table_configs();
    std::vector<std::future<RunOutcome>> jobs;
    for (const auto& [label, lim] : configs) {
        RunConfig cfg;
        cfg.problem = "advection";
        cfg.n_cells = n;
        cfg.cfl = cfl;
        cfg.splitting = SplittingKind::LLF_FVS;
        cfg.limiters = lim;
        jobs.push_back(std::async(std::launch::async, [cfg] { return run_problem(cfg); }));
    }
    std::vector<SweepRow> rows;
    for (std::size_t m = 0; m < jobs.size(); ++m) {
        const RunOutcome o = jobs[m].get();
        SweepRow row{configs[m].first, configs[m].second, o.range.min[0], o.range.max[0], false, o.aborted};
        row.within_bounds = !o.aborted && row.min >= 0.0 && row.max <= 1.0;
        rows.push_back(row);
    }
    return rows;
}

} // namespace af
