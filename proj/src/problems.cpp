#include "af/problems.hpp"

#include "af/riemann.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace af {

std::string to_string(ReferenceKind k)
{
    switch (k) {
    case ReferenceKind::None: return "none";
    case ReferenceKind::Exact: return "exact";
    case ReferenceKind::RiemannExact: return "riemann_exact";
    case ReferenceKind::FineMeshSelf: return "fine_mesh_self";
    }
    return "none";
}

double CflTable::operator()(SplittingKind k) const
{
    switch (k) {
    case SplittingKind::JS: return js;
    case SplittingKind::LLF_FVS: return llf;
    case SplittingKind::SW_FVS: return sw;
    case SplittingKind::VH_FVS: return vh;
    }
    return llf;
}

ProblemSetup setup_problem(const ProblemSpec& spec, std::size_t n)
{
    ProblemSetup out{spec.equation, Grid1D(spec.x_min, spec.x_max, n), {}};
    out.state = init_state(out.equation, out.grid, spec.boundary, spec.init);
    if (spec.adjust_initial) spec.adjust_initial(out.state, out.grid);
    if (out.equation.is_scalar()) {
        const ComponentRange r = solution_range(out.state);
        out.equation.set_bounds({r.min[0], r.max[0]});
    }
    return out;
}

namespace {

double wrap_periodic(double x, double lo, double hi)
{
    const double len = hi - lo;
    double y = std::fmod(x - lo, len);
    if (y < 0.0) y += len;
    return lo + y;
}

ConservedVector euler_state(double gamma, double rho, double v, double p)
{
    return {rho, rho * v, p / (gamma - 1.0) + 0.5 * rho * v * v};
}

ProblemSpec riemann_spec(std::string name, RiemannData data, double t_final, CflTable cfl)
{
    ProblemSpec s;
    s.name = std::move(name);
    s.equation = Equation::euler(1.4);
    s.x_min = 0.0;
    s.x_max = 1.0;
    s.boundary = Boundary::Outflow;
    s.t_final = t_final;
    s.default_cells = 400;
    s.default_cfl = cfl;
    s.riemann = data;
    s.reference = ReferenceKind::RiemannExact;
    const double g = s.equation.gamma();
    s.init = [data, g](double x) {
        const EulerPrimitive& w = x < data.x0 ? data.left : data.right;
        return euler_state(g, w.rho, w.v, w.p);
    };
    const Equation eq = s.equation;
    s.exact = [data, eq, init = s.init](double x, double t) {
        if (t <= 0.0) return init(x);
        return exact_riemann(eq, data.left, data.right, (x - data.x0) / t);
    };
    return s;
}

} // namespace

double jiang_shu_profile(double x)
{
    constexpr double a = -0.5;
    constexpr double z = -0.7;
    constexpr double delta = 0.005;
    constexpr double alpha = 10.0;
    const double beta = std::log(2.0) / (36.0 * delta * delta);
    auto G1 = [&](double zz) { return std::exp(-beta * (x - zz) * (x - zz)); };
    auto G2 = [&](double aa) { return std::sqrt(std::max(1.0 - alpha * alpha * (x - aa) * (x - aa), 0.0)); };

    if (x >= -0.8 && x <= -0.6) return (G1(z - delta) + G1(z + delta) + 4.0 * G1(z)) / 6.0;
    if (x >= -0.4 && x <= -0.2) return 1.0;
    if (x >= 0.0 && x <= 0.2) return 1.0 - std::abs(10.0 * (x - 0.1));
    if (x >= 0.4 && x <= 0.6) return (G2(a - delta) + G2(a + delta) + 4.0 * G2(a)) / 6.0;
    return 0.0;
}

ProblemSpec advection_profile()
{
    ProblemSpec s;
    s.name = "advection";
    s.equation = Equation::linear_advection(1.0);
    s.x_min = -1.0;
    s.x_max = 1.0;
    s.boundary = Boundary::Periodic;
    s.t_final = 2.0;
    s.default_cells = 400;
    s.default_cfl = {0.1, 0.1, 0.1, 0.1};
    s.init = [](double x) { return ConservedVector::scalar(jiang_shu_profile(x)); };
    s.reference = ReferenceKind::Exact;
    s.exact = [](double x, double t) { return ConservedVector::scalar(jiang_shu_profile(wrap_periodic(x - t, -1.0, 1.0))); };
    return s;
}

ProblemSpec advection_sine()
{
    ProblemSpec s;
    s.name = "advection_sine";
    s.equation = Equation::linear_advection(1.0);
    s.x_min = -1.0;
    s.x_max = 1.0;
    s.boundary = Boundary::Periodic;
    s.t_final = 1.0;
    s.default_cells = 80;
    s.default_cfl = {0.3, 0.3, 0.3, 0.3};
    s.init = [](double x) { return ConservedVector::scalar(std::sin(std::numbers::pi * x)); };
    s.reference = ReferenceKind::Exact;
    s.exact = [](double x, double t) { return ConservedVector::scalar(std::sin(std::numbers::pi * (x - t))); };
    return s;
}

ProblemSpec burgers_square()
{
    ProblemSpec s;
    s.name = "burgers_square";
    s.equation = Equation::burgers();
    s.x_min = -1.0;
    s.x_max = 1.0;
    s.boundary = Boundary::Periodic;
    s.t_final = 0.5;
    s.default_cells = 200;
    s.default_cfl = {0.2, 0.2, 0.2, 0.2};
    s.init = [](double x) { return ConservedVector::scalar(std::abs(x) < 0.2 ? 2.0 : -1.0); };
    s.reference = ReferenceKind::FineMeshSelf;
    s.reference_cells = 20000;
    return s;
}

CharacteristicFeet accuracy_feet(double x, double t, double zeta)
{
    const double s3 = std::sqrt(3.0);
    auto rho0 = [zeta](double y) { return 1.0 + zeta * std::sin(std::numbers::pi * y); };
    auto drho0 = [zeta](double y) { return zeta * std::numbers::pi * std::cos(std::numbers::pi * y); };

    // g(y) = x + sign * sqrt(3) rho0(y) t - y is decreasing in y for t <= 0.1
    auto solve = [&](double sign, double lo, double hi, double& residual) {
        auto g = [&](double y) { return x + sign * s3 * rho0(y) * t - y; };
        double y = 0.5 * (lo + hi);
        for (int it = 0; it < 200; ++it) {
            const double gy = g(y);
            if (gy == 0.0) break;
            if (gy > 0.0) lo = y; else hi = y;
            const double dg = sign * s3 * drho0(y) * t - 1.0;
            double next = y - gy / dg;
            if (!(next >= lo && next <= hi)) next = 0.5 * (lo + hi);
            if (std::abs(next - y) <= 1e-16 * std::max(1.0, std::abs(y))) {
                y = next;
                break;
            }
            y = next;
        }
        residual = g(y);
        if (std::abs(residual) > 1e-13) throw std::runtime_error("characteristic root did not converge");
        return y;
    };

    CharacteristicFeet f;
    if (t == 0.0) {
        f.x1 = f.x2 = x;
        return f;
    }
    f.x1 = solve(1.0, x, x + 2.0 * s3 * t, f.residual1);
    f.x2 = solve(-1.0, x - 2.0 * s3 * t, x, f.residual2);
    return f;
}

ConservedVector accuracy_exact(double x, double t, double zeta)
{
    const CharacteristicFeet f = accuracy_feet(x, t, zeta);
    auto rho0 = [zeta](double y) { return 1.0 + zeta * std::sin(std::numbers::pi * y); };
    const double r1 = rho0(f.x1);
    const double rho = 0.5 * (r1 + rho0(f.x2));
    const double v = std::sqrt(3.0) * (rho - r1);
    return euler_state(3.0, rho, v, rho * rho * rho);
}

ProblemSpec euler_accuracy()
{
    ProblemSpec s;
    s.name = "euler_accuracy";
    s.equation = Equation::euler(3.0);
    s.x_min = -1.0;
    s.x_max = 1.0;
    s.boundary = Boundary::Periodic;
    s.t_final = 0.1;
    s.default_cells = 80;
    s.default_cfl = {0.18, 0.18, 0.18, 0.18};
    s.init = [](double x) { return accuracy_exact(x, 0.0); };
    s.reference = ReferenceKind::Exact;
    s.exact = [](double x, double t) { return accuracy_exact(x, t); };
    return s;
}

ProblemSpec double_rarefaction()
{
    return riemann_spec("double_rarefaction", {{7.0, -1.0, 0.2}, {7.0, 1.0, 0.2}, 0.5}, 0.3, {0.4, 0.4, 0.4, 0.1});
}

ProblemSpec leblanc()
{
    return riemann_spec("leblanc", {{2.0, 0.0, 1e9}, {1e-3, 0.0, 1.0}, 0.5}, 5e-6, {0.15, 0.4, 0.4, 0.15});
}

std::vector<ProblemSpec> riemann_problems() { return {double_rarefaction(), leblanc()}; }

ProblemSpec sedov()
{
    ProblemSpec s;
    s.name = "sedov";
    s.equation = Equation::euler(1.4);
    s.x_min = -2.0;
    s.x_max = 2.0;
    s.boundary = Boundary::Outflow;
    s.t_final = 1e-3;
    s.default_cells = 801;
    s.default_cfl = {0.1, 0.4, 0.3, 0.25};
    s.init = [](double) { return ConservedVector{1.0, 0.0, 1e-12}; };
    s.adjust_initial = [](AFState& st, const Grid1D& grid) {
        const std::size_t c = grid.cells() / 2;
        const double e = 3.2e6 / grid.dx();
        st.averages[c][2] = e;
        st.points[c][2] = e;
        st.points[c + 1][2] = e;
    };
    return s;
}

ProblemSpec blast_wave()
{
    ProblemSpec s;
    s.name = "blast_wave";
    s.equation = Equation::euler(1.4);
    s.x_min = 0.0;
    s.x_max = 1.0;
    s.boundary = Boundary::Reflective;
    s.t_final = 0.038;
    s.default_cells = 800;
    s.default_cfl = {0.4, 0.4, 0.4, 0.35};
    s.init = [](double x) {
        const double p = x < 0.1 ? 1000.0 : (x < 0.9 ? 0.01 : 100.0);
        return euler_state(1.4, 1.0, 0.0, p);
    };
    s.reference = ReferenceKind::FineMeshSelf;
    s.reference_cells = 8000;
    return s;
}

ProblemSpec shu_osher()
{
    ProblemSpec s;
    s.name = "shu_osher";
    s.equation = Equation::euler(1.4);
    s.x_min = -5.0;
    s.x_max = 5.0;
    s.boundary = Boundary::Outflow;
    s.t_final = 1.8;
    s.default_cells = 400;
    s.default_cfl = {0.3, 0.3, 0.3, 0.3};
    s.init = [](double x) {
        if (x < -4.0) return euler_state(1.4, 3.857143, 2.629369, 10.33333);
        return euler_state(1.4, 1.0 + 0.2 * std::sin(5.0 * x), 0.0, 1.0);
    };
    s.reference = ReferenceKind::FineMeshSelf;
    s.reference_cells = 4000;
    return s;
}

std::vector<std::string> problem_names()
{
    return {"advection", "advection_sine", "burgers_square", "euler_accuracy", "double_rarefaction",
            "leblanc", "sedov", "blast_wave", "shu_osher"};
}

ProblemSpec find_problem(const std::string& name)
{
    if (name == "advection") return advection_profile();
    if (name == "advection_sine") return advection_sine();
    if (name == "burgers_square" || name == "burgers") return burgers_square();
    if (name == "euler_accuracy") return euler_accuracy();
    if (name == "double_rarefaction") return double_rarefaction();
    if (name == "leblanc") return leblanc();
    if (name == "sedov") return sedov();
    if (name == "blast_wave") return blast_wave();
    if (name == "shu_osher") return shu_osher();
    throw std::invalid_argument("unknown problem '" + name + "'");
}

std::vector<ConservedVector> first_order_reference(const ProblemSpec& spec, std::size_t n, double cfl)
{
    const Equation& eq = spec.equation;
    const Grid1D grid(spec.x_min, spec.x_max, n);
    std::vector<ConservedVector> u = init_state(eq, grid, spec.boundary, spec.init).averages;
    const double dx = grid.dx();
    const auto last = static_cast<std::ptrdiff_t>(n) - 1;

    auto cell = [&](std::ptrdiff_t i) -> ConservedVector {
        if (i >= 0 && i <= last) return u[static_cast<std::size_t>(i)];
        switch (spec.boundary) {
        case Boundary::Periodic: return u[static_cast<std::size_t>((i + static_cast<std::ptrdiff_t>(n)) % static_cast<std::ptrdiff_t>(n))];
        case Boundary::Outflow: return u[i < 0 ? 0 : static_cast<std::size_t>(last)];
        case Boundary::Reflective: return mirror(u[i < 0 ? 0 : static_cast<std::size_t>(last)]);
        }
        return u.front();
    };

    std::vector<ConservedVector> flux(n + 1);
    double t = 0.0;
    while (t < spec.t_final) {
        double rate = 0.0;
        for (const auto& v : u) rate = std::max(rate, eq.spectral_radius(v));
        const double dt = std::min(cfl * dx / rate, spec.t_final - t);
        for (std::ptrdiff_t j = 0; j <= last + 1; ++j) {
            const ConservedVector l = cell(j - 1);
            const ConservedVector r = cell(j);
            const double a = std::max(eq.spectral_radius(l), eq.spectral_radius(r));
            flux[static_cast<std::size_t>(j)] = 0.5 * (eq.flux(l) + eq.flux(r)) - (0.5 * a) * (r - l);
        }
        for (std::size_t i = 0; i < n; ++i) u[i] -= (dt / dx) * (flux[i + 1] - flux[i]);
        t += dt;
    }
    return u;
}

} // namespace af
