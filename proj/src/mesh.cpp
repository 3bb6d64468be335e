#include "af/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace af {

std::string to_string(Boundary b)
{
    switch (b) {
    case Boundary::Periodic: return "periodic";
    case Boundary::Outflow: return "outflow";
    case Boundary::Reflective: return "reflective";
    }
    return "unknown";
}

Grid1D::Grid1D(double x_min, double x_max, std::size_t n_cells)
    : x_min_(x_min), x_max_(x_max), n_(n_cells), dx_((x_max - x_min) / static_cast<double>(n_cells))
{
    if (n_cells == 0) throw std::invalid_argument("grid needs at least one cell");
    if (!(dx_ > 0.0)) throw std::invalid_argument("grid requires x_max > x_min");
}

const GaussRule& gauss_legendre_5()
{
    static const GaussRule rule = [] {
        const double a = std::sqrt(5.0 - 2.0 * std::sqrt(10.0 / 7.0)) / 3.0;
        const double b = std::sqrt(5.0 + 2.0 * std::sqrt(10.0 / 7.0)) / 3.0;
        const double wa = (322.0 + 13.0 * std::sqrt(70.0)) / 900.0;
        const double wb = (322.0 - 13.0 * std::sqrt(70.0)) / 900.0;
        const double w0 = 128.0 / 225.0;
        GaussRule r;
        r.nodes = {-0.5 * b, -0.5 * a, 0.0, 0.5 * a, 0.5 * b};
        r.weights = {0.5 * wb, 0.5 * wa, 0.5 * w0, 0.5 * wa, 0.5 * wb};
        return r;
    }();
    return rule;
}

namespace {

ConservedVector cell_average(const InitFunction& f, double center, double dx)
{
    const GaussRule& g = gauss_legendre_5();
    ConservedVector sum = g.weights[0] * f(center + g.nodes[0] * dx);
    for (std::size_t q = 1; q < 5; ++q) sum += g.weights[q] * f(center + g.nodes[q] * dx);
    return sum;
}

} // namespace

AFState init_state(const Equation& eq, const Grid1D& grid, Boundary bc, const InitFunction& init)
{
    AFState s;
    s.averages.reserve(grid.cells());
    s.points.reserve(grid.interfaces());
    for (std::size_t j = 0; j < grid.interfaces(); ++j) s.points.push_back(init(grid.interface(j)));
    for (std::size_t i = 0; i < grid.cells(); ++i) s.averages.push_back(cell_average(init, grid.center(i), grid.dx()));
    if (bc == Boundary::Periodic) s.points.back() = s.points.front();

    for (std::size_t j = 0; j < s.points.size(); ++j) {
        if (!eq.is_admissible(s.points[j])) {
            std::ostringstream msg;
            msg << "inadmissible initial point value at interface " << j;
            throw InitializationError(msg.str());
        }
    }
    for (std::size_t i = 0; i < s.averages.size(); ++i) {
        if (!eq.is_admissible(s.averages[i])) {
            std::ostringstream msg;
            msg << "inadmissible initial cell average at cell " << i;
            throw InitializationError(msg.str());
        }
    }
    return s;
}

ConservedVector mirror(const ConservedVector& u)
{
    ConservedVector out = u;
    if (out.size() == 3) out[1] = -out[1];
    return out;
}

GhostedState::GhostedState(const AFState& s, Boundary bc, int halo) : halo_(halo)
{
    const auto n = static_cast<std::ptrdiff_t>(s.averages.size());
    const auto h = static_cast<std::ptrdiff_t>(halo);
    avg_.reserve(static_cast<std::size_t>(n + 2 * h));
    pts_.reserve(static_cast<std::size_t>(n + 1 + 2 * h));

    auto cell = [&](std::ptrdiff_t i) -> ConservedVector {
        if (i >= 0 && i < n) return s.averages[static_cast<std::size_t>(i)];
        switch (bc) {
        case Boundary::Periodic: return s.averages[static_cast<std::size_t>(((i % n) + n) % n)];
        case Boundary::Outflow: return s.averages[i < 0 ? 0 : static_cast<std::size_t>(n - 1)];
        case Boundary::Reflective:
            // cell -1-k mirrors cell k; cell n+k mirrors cell n-1-k
            return mirror(s.averages[static_cast<std::size_t>(i < 0 ? -1 - i : 2 * n - 1 - i)]);
        }
        return s.averages.front();
    };
    auto point = [&](std::ptrdiff_t j) -> ConservedVector {
        if (j >= 0 && j <= n) return s.points[static_cast<std::size_t>(j)];
        switch (bc) {
        case Boundary::Periodic: return s.points[static_cast<std::size_t>(((j % n) + n) % n)];
        case Boundary::Outflow: return s.points[j < 0 ? 0 : static_cast<std::size_t>(n)];
        case Boundary::Reflective:
            return mirror(s.points[static_cast<std::size_t>(j < 0 ? -j : 2 * n - j)]);
        }
        return s.points.front();
    };

    for (std::ptrdiff_t i = -h; i < n + h; ++i) avg_.push_back(cell(i));
    for (std::ptrdiff_t j = -h; j <= n + h; ++j) pts_.push_back(point(j));
}

ConservedVector total_mass(const AFState& s, const Grid1D& grid)
{
    ConservedVector sum = ConservedVector::filled(s.averages.front().size(), 0.0);
    for (const auto& u : s.averages) sum += u;
    return sum * grid.dx();
}

ConservedVector error_norms(const AFState& s, const Grid1D& grid, const InitFunction& reference)
{
    const std::size_t m = s.averages.front().size();
    ConservedVector err = ConservedVector::filled(m, 0.0);
    for (std::size_t i = 0; i < grid.cells(); ++i) {
        const ConservedVector ref = cell_average(reference, grid.center(i), grid.dx());
        for (std::size_t k = 0; k < m; ++k) err[k] += std::abs(s.averages[i][k] - ref[k]);
    }
    return err * (1.0 / static_cast<double>(grid.cells()));
}

ComponentRange solution_range(const AFState& s)
{
    ComponentRange r{s.averages.front(), s.averages.front()};
    auto visit = [&](const ConservedVector& u) {
        for (std::size_t k = 0; k < u.size(); ++k) {
            r.min[k] = std::min(r.min[k], u[k]);
            r.max[k] = std::max(r.max[k], u[k]);
        }
    };
    for (const auto& u : s.averages) visit(u);
    for (const auto& u : s.points) visit(u);
    return r;
}

} // namespace af
