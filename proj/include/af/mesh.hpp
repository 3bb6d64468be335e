#pragma once

#include "af/equations.hpp"

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace af {

enum class Boundary { Periodic, Outflow, Reflective };

std::string to_string(Boundary b);

// Uniform grid on [x_min, x_max]. Cell i spans interfaces i and i + 1.
class Grid1D {
public:
    Grid1D(double x_min, double x_max, std::size_t n_cells);

    std::size_t cells() const { return n_; }
    std::size_t interfaces() const { return n_ + 1; }
    double x_min() const { return x_min_; }
    double x_max() const { return x_max_; }
    double dx(std::ptrdiff_t /*cell*/ = 0) const { return dx_; }
    double center(std::size_t i) const { return x_min_ + (static_cast<double>(i) + 0.5) * dx_; }
    double interface(std::size_t j) const { return x_min_ + static_cast<double>(j) * dx_; }

private:
    double x_min_;
    double x_max_;
    std::size_t n_;
    double dx_;
};

// Active flux degrees of freedom: N cell averages and N + 1 interface values.
struct AFState {
    std::vector<ConservedVector> averages;
    std::vector<ConservedVector> points;
    double time = 0.0;
};

using InitFunction = std::function<ConservedVector(double)>;

class InitializationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// 5-point Gauss-Legendre nodes/weights on [-1/2, 1/2] (weights sum to 1).
struct GaussRule {
    std::array<double, 5> nodes;
    std::array<double, 5> weights;
};
const GaussRule& gauss_legendre_5();

// Point values sampled at interfaces, averages by 5-point Gauss-Legendre.
// Throws InitializationError naming the first inadmissible entry.
AFState init_state(const Equation& eq, const Grid1D& grid, Boundary bc, const InitFunction& init);

// Averages and points extended by `halo` ghost entries on each side.
// Indexing: average(i) for i in [-halo, N + halo), point(j) for
// j in [-halo, N + halo].
class GhostedState {
public:
    GhostedState(const AFState& s, Boundary bc, int halo);

    const ConservedVector& average(std::ptrdiff_t i) const { return avg_[static_cast<std::size_t>(i + halo_)]; }
    const ConservedVector& point(std::ptrdiff_t j) const { return pts_[static_cast<std::size_t>(j + halo_)]; }
    int halo() const { return halo_; }

private:
    int halo_;
    std::vector<ConservedVector> avg_;
    std::vector<ConservedVector> pts_;
};

// Mirror image of a state across a wall: momentum negated.
ConservedVector mirror(const ConservedVector& u);

// sum_i averages_i * dx
ConservedVector total_mass(const AFState& s, const Grid1D& grid);

// Per-component (1/N) sum_i |avg_i - ref_i| where ref_i is the 5-point
// Gauss average of `reference` over cell i.
ConservedVector error_norms(const AFState& s, const Grid1D& grid, const InitFunction& reference);

// Min/max per component over averages and points.
struct ComponentRange {
    ConservedVector min;
    ConservedVector max;
};
ComponentRange solution_range(const AFState& s);

} // namespace af
