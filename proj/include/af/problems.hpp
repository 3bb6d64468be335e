#pragma once

#include "af/equations.hpp"
#include "af/mesh.hpp"
#include "af/splitting.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace af {

enum class ReferenceKind { None, Exact, RiemannExact, FineMeshSelf };

std::string to_string(ReferenceKind k);

struct CflTable {
    double js = 0.4;
    double llf = 0.4;
    double sw = 0.4;
    double vh = 0.4;

    double operator()(SplittingKind k) const;
};

struct RiemannData {
    EulerPrimitive left;
    EulerPrimitive right;
    double x0 = 0.0;
};

using ExactFunction = std::function<ConservedVector(double x, double t)>;

struct ProblemSpec {
    std::string name;
    Equation equation = Equation::burgers();
    double x_min = 0.0;
    double x_max = 1.0;
    Boundary boundary = Boundary::Periodic;
    double t_final = 1.0;
    std::size_t default_cells = 100;
    CflTable default_cfl;
    InitFunction init;
    ReferenceKind reference = ReferenceKind::None;
    ExactFunction exact;               // Exact and RiemannExact
    std::optional<RiemannData> riemann; // RiemannExact
    std::size_t reference_cells = 0;   // FineMeshSelf
    // Extra modification of the discrete initial data (Sedov energy spike).
    std::function<void(AFState&, const Grid1D&)> adjust_initial;
};

// Equation (with scalar bounds taken from the discrete initial data), grid
// and initial state of a problem on n cells.
struct ProblemSetup {
    Equation equation;
    Grid1D grid;
    AFState state;
};

ProblemSetup setup_problem(const ProblemSpec& spec, std::size_t n);

ProblemSpec advection_profile();
ProblemSpec advection_sine();
ProblemSpec burgers_square();
ProblemSpec euler_accuracy();
std::vector<ProblemSpec> riemann_problems();
ProblemSpec double_rarefaction();
ProblemSpec leblanc();
ProblemSpec sedov();
ProblemSpec blast_wave();
ProblemSpec shu_osher();

std::vector<std::string> problem_names();
// Throws std::invalid_argument for unknown names.
ProblemSpec find_problem(const std::string& name);

// Jiang-Shu four-feature profile on [-1, 1].
double jiang_shu_profile(double x);

// Characteristic feet x1, x2 of the gamma = 3 accuracy test.
struct CharacteristicFeet {
    double x1 = 0.0;
    double x2 = 0.0;
    double residual1 = 0.0;
    double residual2 = 0.0;
};

inline constexpr double accuracy_zeta = 1.0 - 1e-7;

CharacteristicFeet accuracy_feet(double x, double t, double zeta = accuracy_zeta);
ConservedVector accuracy_exact(double x, double t, double zeta = accuracy_zeta);

// First-order Rusanov finite volumes with forward Euler steps, used as the
// Burgers reference. Returns cell averages.
std::vector<ConservedVector> first_order_reference(const ProblemSpec& spec, std::size_t n, double cfl = 0.4);

} // namespace af
