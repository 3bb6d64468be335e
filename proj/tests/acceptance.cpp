// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 on any FAIL.
#include "af/property_suites.hpp"
#include "af/riemann.hpp"
#include "af/runner.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>

using namespace af;

namespace {

int failures = 0;

void report(int id, const std::string& title, bool ok, const std::string& detail)
{
    std::printf("%s [%d] %s: %s\n", ok ? "PASS" : "FAIL", id, title.c_str(), detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

class Stopwatch {
public:
    double seconds() const { return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count(); }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

LimiterConfig limiters(BoundMode avg, BoundMode pt)
{
    LimiterConfig c;
    c.average = avg;
    c.point = pt;
    return c;
}

RunOutcome run(const std::string& problem, std::size_t n, std::optional<double> cfl, SplittingKind kind, LimiterConfig lim)
{
    RunConfig cfg;
    cfg.problem = problem;
    cfg.n_cells = n;
    cfg.cfl = cfl;
    cfg.splitting = kind;
    cfg.limiters = lim;
    return run_problem(cfg);
}

bool positive_run(const RunOutcome& o)
{
    return !o.aborted && o.diagnostics.min_density > 0.0 && o.diagnostics.min_pressure > 0.0;
}

std::string fmt(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4g", v);
    return buf;
}

void check_euler_accuracy()
{
    Stopwatch sw;
    const LimiterConfig bp = limiters(BoundMode::Global, BoundMode::Global);
    bool ok = true;
    std::ostringstream detail;
    for (SplittingKind kind : {SplittingKind::JS, SplittingKind::LLF_FVS, SplittingKind::SW_FVS, SplittingKind::VH_FVS}) {
        const auto rows = convergence_study("euler_accuracy", kind, bp, {40, 80, 160, 320}, 0.18);
        double lo = 1e9, hi = -1e9;
        if (rows.back().aborted || !rows.back().order) {
            ok = false;
            detail << to_string(kind) << " aborted; ";
            continue;
        }
        for (std::size_t k = 0; k < 3; ++k) {
            lo = std::min(lo, (*rows.back().order)[k]);
            hi = std::max(hi, (*rows.back().order)[k]);
        }
        const bool this_ok = kind == SplittingKind::SW_FVS ? lo >= 1.6 && hi <= 2.4 : lo >= 2.7;
        ok = ok && this_ok;
        detail << to_string(kind) << " order " << fmt(lo) << ".." << fmt(hi) << "; ";
    }
    const double t = sw.seconds();
    detail << "time " << fmt(t) << " s";
    report(1, "Euler accuracy orders (JS/LLF/VH >= 2.7, SW in [1.6, 2.4])", ok && t < 60.0, detail.str());
}

void check_advection_table()
{
    Stopwatch sw;
    const auto both = run("advection", 400, 0.1, SplittingKind::LLF_FVS, limiters(BoundMode::Global, BoundMode::Global));
    const auto avg = run("advection", 400, 0.1, SplittingKind::LLF_FVS, limiters(BoundMode::Global, BoundMode::Off));
    const auto pt = run("advection", 400, 0.1, SplittingKind::LLF_FVS, limiters(BoundMode::Off, BoundMode::Global));
    auto violation = [](const RunOutcome& o) { return std::max(-o.range.min[0], o.range.max[0] - 1.0); };
    const bool both_ok = !both.aborted && both.range.min[0] >= 0.0 && both.range.max[0] <= 1.0 &&
                         both.diagnostics.min_component[0] >= 0.0 && both.diagnostics.max_component[0] <= 1.0;
    const double t = sw.seconds();
    const bool ok = both_ok && violation(avg) >= 1e-5 && violation(pt) >= 1e-5 && t < 30.0;
    report(2, "advection bounds table", ok,
           "both limiters [" + fmt(both.range.min[0]) + ", 1" + fmt(both.range.max[0] - 1.0) + "], average only violation " +
               fmt(violation(avg)) + ", point only violation " + fmt(violation(pt)) + ", time " + fmt(t) + " s");
}

void check_burgers_spike()
{
    Stopwatch sw;
    const auto js = run("burgers_square", 200, std::nullopt, SplittingKind::JS, {});
    const auto llf = run("burgers_square", 200, std::nullopt, SplittingKind::LLF_FVS, limiters(BoundMode::Local, BoundMode::Local));
    const double llf_max = std::max(llf.range.max[0], llf.diagnostics.max_component[0]);
    const double llf_min = std::min(llf.range.min[0], llf.diagnostics.min_component[0]);
    const double t = sw.seconds();
    const bool ok = !js.aborted && js.range.max[0] >= 2.2 && !llf.aborted && llf_max <= 2.0 + 1e-12 &&
                    llf_min >= -1.0 - 1e-12 && t < 10.0;
    report(3, "Burgers transonic spike", ok,
           "JS max " + fmt(js.range.max[0]) + ", LLF local-MP range [" + fmt(llf_min) + ", " + fmt(llf_max) + "], time " +
               fmt(t) + " s");
}

void check_double_rarefaction()
{
    Stopwatch sw;
    const auto on = run("double_rarefaction", 400, 0.4, SplittingKind::LLF_FVS, limiters(BoundMode::Global, BoundMode::Global));
    const auto off = run("double_rarefaction", 400, 0.4, SplittingKind::LLF_FVS, {});
    const bool diag = off.aborted && (off.message.find("density") != std::string::npos ||
                                      off.message.find("pressure") != std::string::npos);
    const double t = sw.seconds();
    report(4, "double rarefaction positivity", positive_run(on) && diag && t < 20.0,
           "min density " + fmt(on.diagnostics.min_density) + ", min pressure " + fmt(on.diagnostics.min_pressure) +
               "; without limiting: " + (off.aborted ? off.message : std::string("no abort")) + "; time " + fmt(t) + " s");
}

// Rightmost position where the density crosses halfway between the
// pre-shock and post-shock values.
double shock_front(const RunOutcome& o, double level)
{
    const Grid1D& g = o.setup.grid;
    for (std::size_t i = g.cells() - 1; i > 0; --i) {
        const double a = o.state.averages[i - 1][0];
        const double b = o.state.averages[i][0];
        if (a >= level && b < level) return g.center(i - 1) + (a - level) / (a - b) * g.dx();
    }
    return g.x_min();
}

void check_leblanc()
{
    Stopwatch sw;
    const ProblemSpec spec = af::leblanc();
    const RiemannData& rd = *spec.riemann;
    const RiemannWaves waves = riemann_waves(rd.left, rd.right, spec.equation.gamma());
    const double x_shock = rd.x0 + waves.right_head * spec.t_final;
    const EulerPrimitive post = sample_riemann(rd.left, rd.right, spec.equation.gamma(), 0.5 * (waves.contact + waves.right_head));
    const double level = 0.5 * (post.rho + rd.right.rho);

    bool ok = true;
    std::ostringstream detail;
    double prev_err = 1e9;
    bool monotone = true;
    for (std::size_t n : {400u, 1600u, 6000u}) {
        const auto o = run("leblanc", n, 0.4, SplittingKind::LLF_FVS, limiters(BoundMode::Global, BoundMode::Global));
        if (!positive_run(o)) {
            ok = false;
            detail << "N=" << n << " lost positivity or aborted; ";
            continue;
        }
        if (n == 400) {
            // density at x = 0.9 (an interface for N = 400)
            const std::size_t j = static_cast<std::size_t>(std::lround(0.9 / o.setup.grid.dx()));
            const double rho = o.state.points[j][0];
            const double exact = spec.exact(0.9, o.state.time)[0];
            const bool close = rho <= 2.0 * exact && rho >= 0.5 * exact;
            ok = ok && close;
            detail << "rho(0.9) " << fmt(rho) << " vs exact " << fmt(exact) << "; ";
        }
        const double err = std::abs(shock_front(o, level) - x_shock);
        monotone = monotone && err < prev_err;
        prev_err = err;
        detail << "N=" << n << " front error " << fmt(err) << "; ";
    }
    const double t = sw.seconds();
    detail << "time " << fmt(t) << " s";
    report(5, "LeBlanc positivity and convergence", ok && monotone && t < 300.0, detail.str());
}

void check_sedov()
{
    Stopwatch sw;
    const auto o = run("sedov", 801, 0.4, SplittingKind::LLF_FVS, limiters(BoundMode::Global, BoundMode::Global));
    bool ok = positive_run(o);
    std::ostringstream detail;
    if (ok) {
        const std::size_t n = o.state.averages.size();
        const std::size_t c = n / 2;
        std::size_t il = 0, ir = c + 1;
        for (std::size_t i = 0; i < c; ++i)
            if (o.state.averages[i][0] > o.state.averages[il][0]) il = i;
        for (std::size_t i = c + 1; i < n; ++i)
            if (o.state.averages[i][0] > o.state.averages[ir][0]) ir = i;
        const long offset = static_cast<long>(il + ir) - static_cast<long>(n - 1);
        ok = std::abs(offset) <= 1;
        detail << "peaks at cells " << il << " and " << ir << " (asymmetry " << offset << " cells), ";
    }
    const double t = sw.seconds();
    detail << "min density " << fmt(o.diagnostics.min_density) << ", min pressure " << fmt(o.diagnostics.min_pressure)
           << ", time " << fmt(t) << " s";
    report(6, "Sedov positivity and symmetry", ok && t < 60.0, detail.str());
}

void check_blast_wave()
{
    Stopwatch sw;
    const auto o = run("blast_wave", 800, 0.4, SplittingKind::LLF_FVS, limiters(BoundMode::Global, BoundMode::Global));
    const double rho_max = o.range.max[0];
    const double t = sw.seconds();
    report(7, "blast wave positivity and density peak", positive_run(o) && rho_max >= 4.0 && rho_max <= 8.0 && t < 60.0,
           "max density " + fmt(rho_max) + ", min density " + fmt(o.diagnostics.min_density) + ", min pressure " +
               fmt(o.diagnostics.min_pressure) + ", halvings " + std::to_string(o.diagnostics.halvings) + ", time " +
               fmt(t) + " s");
}

void check_property_suites()
{
    Stopwatch sw;
    bool ok = true;
    std::ostringstream detail;
    for (const auto& name : suite_names()) {
        const SuiteReport r = run_suite(name, 20240611, 10000);
        ok = ok && r.passed() && r.cases >= 10000;
        detail << name << ' ' << r.cases << (r.passed() ? " ok" : " FAILED") << "; ";
        if (!r.passed() && !r.failure_examples.empty()) detail << '(' << r.failure_examples.front() << ") ";
    }
    const double t = sw.seconds();
    detail << "time " << fmt(t) << " s";
    report(8, "property suites", ok && t < 60.0, detail.str());
}

} // namespace

int main()
{
    check_euler_accuracy();
    check_advection_table();
    check_burgers_spike();
    check_double_rarefaction();
    check_leblanc();
    check_sedov();
    check_blast_wave();
    check_property_suites();
    return failures == 0 ? 0 : 1;
}
