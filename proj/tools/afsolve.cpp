#include "af/property_suites.hpp"
#include "af/runner.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <iostream>

namespace {

struct LimiterFlags {
    std::string average = "global";
    std::string point = "global";
    bool power_law = false;
    bool none = false;

    af::LimiterConfig config() const
    {
        af::LimiterConfig c;
        if (none) return c;
        c.average = af::bound_mode_from_string(average);
        c.point = af::bound_mode_from_string(point);
        c.power_law = power_law;
        return c;
    }
};

void add_limiter_flags(CLI::App* app, LimiterFlags& f)
{
    app->add_option("--bp-average", f.average, "cell-average limiting: off, global or local")->capture_default_str();
    app->add_option("--bp-point", f.point, "point-value limiting: off, global or local")->capture_default_str();
    app->add_flag("--power-law", f.power_law, "power law reconstruction in the point update");
    app->add_flag("--no-limiters", f.none, "disable all limiting");
}

std::filesystem::path output_dir(const std::string& flag, const std::string& problem)
{
    if (!flag.empty()) return flag;
    if (const char* env = std::getenv("AF_OUTPUT_DIR")) return std::filesystem::path(env) / problem;
    return std::filesystem::path("af_output") / problem;
}

std::vector<std::size_t> parse_meshes(const std::string& s)
{
    std::vector<std::size_t> out;
    std::size_t pos = 0;
    while (pos < s.size()) {
        const std::size_t next = s.find(',', pos);
        out.push_back(std::stoul(s.substr(pos, next - pos)));
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    if (out.size() < 2) throw std::invalid_argument("need at least two meshes");
    return out;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Active flux solver for 1D conservation laws"};
    app.require_subcommand(1);

    // run
    auto* run = app.add_subcommand("run", "run one benchmark and write averages.csv, points.csv and meta.json");
    af::RunConfig rc;
    std::string splitting = "llf";
    std::string out_flag;
    double cfl = 0.0;
    double t_final = 0.0;
    LimiterFlags run_lim;
    run->add_option("--problem", rc.problem, "benchmark name")->capture_default_str();
    run->add_option("--n", rc.n_cells, "number of cells (default per problem)");
    run->add_option("--cfl", cfl, "CFL number (default per problem and splitting)");
    run->add_option("--t-final", t_final, "final time override");
    run->add_option("--splitting", splitting, "js, llf, sw or vh")->capture_default_str();
    run->add_option("--out", out_flag, "output directory (else $AF_OUTPUT_DIR/<problem> or af_output/<problem>)");
    run->add_flag("--reference", rc.compute_reference, "compute the fine-mesh reference error when available");
    add_limiter_flags(run, run_lim);

    // convergence
    auto* conv = app.add_subcommand("convergence", "l1 errors and observed orders on a mesh sequence");
    std::string conv_problem = "euler_accuracy";
    std::string conv_split = "llf";
    std::string meshes = "40,80,160,320";
    double conv_cfl = 0.0;
    bool conv_json = false;
    LimiterFlags conv_lim;
    conv->add_option("--problem", conv_problem)->capture_default_str();
    conv->add_option("--splitting", conv_split)->capture_default_str();
    conv->add_option("--meshes", meshes, "comma separated cell counts")->capture_default_str();
    conv->add_option("--cfl", conv_cfl);
    conv->add_flag("--json", conv_json, "print JSON instead of a table");
    add_limiter_flags(conv, conv_lim);

    // verify
    auto* verify = app.add_subcommand("verify", "randomized property suites");
    std::string suite = "all";
    std::uint64_t seed = 20240611;
    std::size_t cases = 10000;
    verify->add_option("--suite", suite, "suite name or all")->capture_default_str();
    verify->add_option("--seed", seed)->capture_default_str();
    verify->add_option("--cases", cases)->capture_default_str();

    // sweep
    auto* sweep = app.add_subcommand("sweep", "advection range table over limiter combinations");
    std::size_t sweep_n = 400;
    double sweep_cfl = 0.1;
    sweep->add_option("--n", sweep_n)->capture_default_str();
    sweep->add_option("--cfl", sweep_cfl)->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*run) {
            rc.splitting = af::splitting_from_string(splitting);
            rc.limiters = run_lim.config();
            if (cfl > 0.0) rc.cfl = cfl;
            if (t_final > 0.0) rc.t_final = t_final;
            const af::RunOutcome out = af::run_problem(rc);
            const auto dir = output_dir(out_flag, rc.problem);
            af::write_run_outputs(dir, rc, out);
            if (out.aborted) {
                std::cerr << "aborted: " << out.message << '\n';
                return 2;
            }
            std::cout << out.spec.name << ": " << out.diagnostics.steps << " steps to t = " << out.state.time << " in "
                      << out.wall_seconds << " s, output in " << dir.string() << '\n';
            return 0;
        }
        if (*conv) {
            const auto rows = af::convergence_study(conv_problem, af::splitting_from_string(conv_split),
                                                    conv_lim.config(), parse_meshes(meshes),
                                                    conv_cfl > 0.0 ? std::optional<double>(conv_cfl) : std::nullopt);
            if (conv_json) {
                nlohmann::json j = nlohmann::json::array();
                for (const auto& r : rows) {
                    nlohmann::json row{{"n", r.n}, {"aborted", r.aborted}};
                    row["error"] = std::vector<double>(r.error.values().begin(), r.error.values().end());
                    if (r.order) row["order"] = std::vector<double>(r.order->values().begin(), r.order->values().end());
                    j.push_back(row);
                }
                std::cout << j.dump(2) << '\n';
            } else {
                for (const auto& r : rows) {
                    std::printf("%8zu", r.n);
                    if (r.aborted) {
                        std::printf("  aborted\n");
                        continue;
                    }
                    for (std::size_t k = 0; k < r.error.size(); ++k) {
                        std::printf("  %.4e", r.error[k]);
                        if (r.order) std::printf(" (%.2f)", (*r.order)[k]);
                    }
                    std::printf("\n");
                }
            }
            for (const auto& r : rows)
                if (r.aborted) return 2;
            return 0;
        }
        if (*verify) {
            const std::vector<std::string> names = suite == "all" ? af::suite_names() : std::vector<std::string>{suite};
            bool ok = true;
            nlohmann::json report = nlohmann::json::array();
            for (const auto& name : names) {
                const af::SuiteReport r = af::run_suite(name, seed, cases);
                ok = ok && r.passed();
                report.push_back({{"suite", r.name},
                                  {"passed", r.passed()},
                                  {"cases", r.cases},
                                  {"failures", r.failures},
                                  {"worst", r.worst},
                                  {"seconds", r.seconds},
                                  {"failure_examples", r.failure_examples}});
            }
            std::cout << report.dump(2) << '\n';
            return ok ? 0 : 3;
        }
        if (*sweep) {
            for (const auto& r : af::advection_sweep(sweep_n, sweep_cfl))
                std::printf("%-52s [%.3e, 1%+.3e] %s\n", r.label.c_str(), r.min, r.max - 1.0,
                            r.within_bounds ? "ok" : "violated");
            return 0;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const af::InitializationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
