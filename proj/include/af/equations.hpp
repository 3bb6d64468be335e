#pragma once

#include "af/state_vector.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <string>

namespace af {

// Thrown when a state lies outside the domain of a physical quantity
// (non-positive density or pressure for Euler).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

struct EulerPrimitive {
    double rho = 1.0;
    double v = 0.0;
    double p = 1.0;
};

struct ScalarBounds {
    double lo = 0.0;
    double hi = 0.0;
};

struct Eigensystem {
    SmallMatrix right;     // columns are right eigenvectors
    ConservedVector lambda; // ascending
    SmallMatrix left;      // inverse of `right`
};

// Descriptor of the conservation law. Scalar kinds optionally carry the
// global bounds [m0, M0] of the initial data.
class Equation {
public:
    enum class Kind { LinearAdvection, Burgers, Euler };

    static Equation linear_advection(double speed);
    static Equation burgers();
    static Equation euler(double gamma);

    Kind kind() const { return kind_; }
    bool is_scalar() const { return kind_ != Kind::Euler; }
    bool is_euler() const { return kind_ == Kind::Euler; }
    std::size_t components() const { return is_euler() ? 3 : 1; }
    double speed() const { return speed_; }
    double gamma() const { return gamma_; }
    std::string name() const;

    const std::optional<ScalarBounds>& bounds() const { return bounds_; }
    void set_bounds(ScalarBounds b) { bounds_ = b; }

    ConservedVector flux(const ConservedVector& u) const;
    // Sorted ascending.
    ConservedVector eigenvalues(const ConservedVector& u) const;
    Eigensystem eigensystem(const ConservedVector& u) const;
    // Analytic flux Jacobian dF/dU.
    SmallMatrix jacobian(const ConservedVector& u) const;
    // max_l |lambda_l(U)|
    double spectral_radius(const ConservedVector& u) const;

    double pressure(const ConservedVector& u) const;
    double sound_speed(const ConservedVector& u) const;
    EulerPrimitive to_primitive(const ConservedVector& u) const;
    ConservedVector from_primitive(const EulerPrimitive& w) const;

    // Scalar: m0 <= u <= M0 (closed, tolerance 0; true when no bounds are
    // set). Euler: rho > 0 and p > 0 strictly.
    bool is_admissible(const ConservedVector& u) const;

private:
    Equation(Kind k, double speed, double gamma) : kind_(k), speed_(speed), gamma_(gamma) {}

    void require_density(const ConservedVector& u) const;

    Kind kind_;
    double speed_ = 0.0;
    double gamma_ = 1.4;
    std::optional<ScalarBounds> bounds_;
};

// Pressure from raw conserved components, no checks.
inline double euler_pressure(double gamma, double rho, double mom, double energy)
{
    return (gamma - 1.0) * (energy - 0.5 * mom * mom / rho);
}

} // namespace af
