#pragma once

#include "af/equations.hpp"

#include <string>

namespace af {

enum class SplittingKind { JS, LLF_FVS, SW_FVS, VH_FVS };

std::string to_string(SplittingKind k);
SplittingKind splitting_from_string(const std::string& s);
// JS, LLF and SW work for every equation; VH needs Euler or linear advection.
bool splitting_supported(SplittingKind k, const Equation& eq);

struct SplitFluxPair {
    ConservedVector f_plus;
    ConservedVector f_minus;
};

// Data around interface j: the cells j-1 (left) and j (right) with their
// interface values.
struct PointWindow {
    ConservedVector point_left;  // U_{j-1}
    ConservedVector avg_left;    // average of cell j-1
    ConservedVector point;       // U_j
    ConservedVector avg_right;   // average of cell j
    ConservedVector point_right; // U_{j+1}
    double dx_left = 1.0;
    double dx_right = 1.0;
};

struct CellCenters {
    ConservedVector left;
    ConservedVector right;
};

// Simpson cell-center values of the two cells adjacent to the interface.
CellCenters simpson_centers(const PointWindow& w);

// J+ D+ + J- D- with J± = R Λ± R^-1 at the interface value, negated.
ConservedVector point_rhs_js(const Equation& eq, const PointWindow& w, bool use_power_law = false);

// Largest |lambda| over U_{j-1}, center_{j-1}, U_j, center_j, U_{j+1}.
double llf_alpha_stencil(const Equation& eq, const PointWindow& w, const CellCenters& c);

SplitFluxPair split_llf(const Equation& eq, const ConservedVector& u, double alpha);
// F± = (F ± |J| U) / 2. Explicit Steger-Warming form for Euler.
SplitFluxPair split_sw(const Equation& eq, const ConservedVector& u);
// Same splitting assembled from the eigensystem, R |Λ| R^-1 U.
SplitFluxPair split_sw_eigen(const Equation& eq, const ConservedVector& u);
// Van Leer-Hänel Mach-number splitting; full upwinding for |M| >= 1.
SplitFluxPair split_vh(const Equation& eq, const ConservedVector& u);

SplitFluxPair split(const Equation& eq, SplittingKind kind, const ConservedVector& u, double alpha);

// -(D~+ F+ + D~- F-) at the interface. `centers` must be admissible.
ConservedVector point_rhs_fvs(const Equation& eq, SplittingKind kind, const PointWindow& w,
                              const CellCenters& centers, bool use_power_law = false);
ConservedVector point_rhs_fvs(const Equation& eq, SplittingKind kind, const PointWindow& w,
                              bool use_power_law = false);

ConservedVector point_rhs(const Equation& eq, SplittingKind kind, const PointWindow& w,
                          const CellCenters& centers, bool use_power_law = false);

} // namespace af
