#pragma once

#include "af/equations.hpp"

namespace af {

// Star region of the Euler Riemann problem. `vacuum` is set when the data
// generate a vacuum between two rarefactions; p and v are then meaningless.
struct RiemannStar {
    double p = 0.0;
    double v = 0.0;
    bool vacuum = false;
    int iterations = 0;
};

// Characteristic speeds of the wave pattern; a shock has head == tail.
struct RiemannWaves {
    double left_head = 0.0;
    double left_tail = 0.0;
    double contact = 0.0;
    double right_tail = 0.0;
    double right_head = 0.0;
    bool left_shock = false;
    bool right_shock = false;
};

// Newton iteration on the pressure function, safeguarded by bisection.
RiemannStar riemann_star(const EulerPrimitive& left, const EulerPrimitive& right, double gamma);

RiemannWaves riemann_waves(const EulerPrimitive& left, const EulerPrimitive& right, double gamma);

// Similarity solution at xi = x / t. Vacuum samples return rho = p = v = 0.
EulerPrimitive sample_riemann(const EulerPrimitive& left, const EulerPrimitive& right, double gamma, double xi);

ConservedVector exact_riemann(const Equation& eq, const EulerPrimitive& left, const EulerPrimitive& right, double xi);

} // namespace af
