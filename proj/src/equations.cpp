#include "af/equations.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace af {

Equation Equation::linear_advection(double speed)
{
    return Equation(Kind::LinearAdvection, speed, 0.0);
}

Equation Equation::burgers()
{
    return Equation(Kind::Burgers, 0.0, 0.0);
}

Equation Equation::euler(double gamma)
{
    if (!(gamma > 1.0)) throw std::invalid_argument("adiabatic index must exceed 1");
    return Equation(Kind::Euler, 0.0, gamma);
}

std::string Equation::name() const
{
    switch (kind_) {
    case Kind::LinearAdvection: return "linear_advection";
    case Kind::Burgers: return "burgers";
    case Kind::Euler: return "euler";
    }
    return "unknown";
}

void Equation::require_density(const ConservedVector& u) const
{
    if (!(u[0] > 0.0)) {
        std::ostringstream msg;
        msg << "non-positive density " << u[0];
        throw DomainError(msg.str());
    }
}

ConservedVector Equation::flux(const ConservedVector& u) const
{
    switch (kind_) {
    case Kind::LinearAdvection: return ConservedVector::scalar(speed_ * u[0]);
    case Kind::Burgers: return ConservedVector::scalar(0.5 * u[0] * u[0]);
    case Kind::Euler: break;
    }
    require_density(u);
    const double v = u[1] / u[0];
    const double p = euler_pressure(gamma_, u[0], u[1], u[2]);
    return {u[1], u[1] * v + p, (u[2] + p) * v};
}

double Equation::pressure(const ConservedVector& u) const
{
    require_density(u);
    return euler_pressure(gamma_, u[0], u[1], u[2]);
}

double Equation::sound_speed(const ConservedVector& u) const
{
    const double p = pressure(u);
    if (!(p > 0.0)) {
        std::ostringstream msg;
        msg << "non-positive pressure " << p;
        throw DomainError(msg.str());
    }
    return std::sqrt(gamma_ * p / u[0]);
}

EulerPrimitive Equation::to_primitive(const ConservedVector& u) const
{
    require_density(u);
    return {u[0], u[1] / u[0], euler_pressure(gamma_, u[0], u[1], u[2])};
}

ConservedVector Equation::from_primitive(const EulerPrimitive& w) const
{
    return {w.rho, w.rho * w.v, w.p / (gamma_ - 1.0) + 0.5 * w.rho * w.v * w.v};
}

ConservedVector Equation::eigenvalues(const ConservedVector& u) const
{
    switch (kind_) {
    case Kind::LinearAdvection: return ConservedVector::scalar(speed_);
    case Kind::Burgers: return ConservedVector::scalar(u[0]);
    case Kind::Euler: break;
    }
    const double a = sound_speed(u);
    const double v = u[1] / u[0];
    return {v - a, v, v + a};
}

double Equation::spectral_radius(const ConservedVector& u) const
{
    const ConservedVector lam = eigenvalues(u);
    double r = 0.0;
    for (std::size_t k = 0; k < lam.size(); ++k) r = std::max(r, std::abs(lam[k]));
    return r;
}

SmallMatrix Equation::jacobian(const ConservedVector& u) const
{
    SmallMatrix j;
    j.m = components();
    switch (kind_) {
    case Kind::LinearAdvection: j(0, 0) = speed_; return j;
    case Kind::Burgers: j(0, 0) = u[0]; return j;
    case Kind::Euler: break;
    }
    require_density(u);
    const double g = gamma_;
    const double v = u[1] / u[0];
    const double e = u[2] / u[0];
    j(0, 0) = 0.0;
    j(0, 1) = 1.0;
    j(0, 2) = 0.0;
    j(1, 0) = 0.5 * (g - 3.0) * v * v;
    j(1, 1) = (3.0 - g) * v;
    j(1, 2) = g - 1.0;
    j(2, 0) = (g - 1.0) * v * v * v - g * v * e;
    j(2, 1) = g * e - 1.5 * (g - 1.0) * v * v;
    j(2, 2) = g * v;
    return j;
}

Eigensystem Equation::eigensystem(const ConservedVector& u) const
{
    Eigensystem es;
    const std::size_t m = components();
    es.right.m = m;
    es.left.m = m;
    if (is_scalar()) {
        es.right(0, 0) = 1.0;
        es.left(0, 0) = 1.0;
        es.lambda = eigenvalues(u);
        return es;
    }

    const double a = sound_speed(u);
    const double v = u[1] / u[0];
    const double p = euler_pressure(gamma_, u[0], u[1], u[2]);
    const double h = (u[2] + p) / u[0];
    es.lambda = {v - a, v, v + a};

    // Columns: v-a, v, v+a; first row normalized to (1, 1, 1).
    es.right(0, 0) = 1.0;
    es.right(1, 0) = v - a;
    es.right(2, 0) = h - v * a;
    es.right(0, 1) = 1.0;
    es.right(1, 1) = v;
    es.right(2, 1) = 0.5 * v * v;
    es.right(0, 2) = 1.0;
    es.right(1, 2) = v + a;
    es.right(2, 2) = h + v * a;

    const double b1 = (gamma_ - 1.0) / (a * a);
    const double b2 = 0.5 * b1 * v * v;
    es.left(0, 0) = 0.5 * (b2 + v / a);
    es.left(0, 1) = -0.5 * (b1 * v + 1.0 / a);
    es.left(0, 2) = 0.5 * b1;
    es.left(1, 0) = 1.0 - b2;
    es.left(1, 1) = b1 * v;
    es.left(1, 2) = -b1;
    es.left(2, 0) = 0.5 * (b2 - v / a);
    es.left(2, 1) = -0.5 * (b1 * v - 1.0 / a);
    es.left(2, 2) = 0.5 * b1;
    return es;
}

bool Equation::is_admissible(const ConservedVector& u) const
{
    if (!u.all_finite()) return false;
    if (is_scalar()) {
        if (!bounds_) return true;
        return u[0] >= bounds_->lo && u[0] <= bounds_->hi;
    }
    if (!(u[0] > 0.0)) return false;
    return euler_pressure(gamma_, u[0], u[1], u[2]) > 0.0;
}

} // namespace af
