#include "af/riemann.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace af {

namespace {

struct Side {
    double rho, v, p, a;
};

Side side(const EulerPrimitive& w, double gamma)
{
    if (!(w.rho > 0.0) || !(w.p > 0.0)) throw std::invalid_argument("Riemann data must have positive density and pressure");
    return {w.rho, w.v, w.p, std::sqrt(gamma * w.p / w.rho)};
}

// f_K(p) and its derivative (shock branch for p > p_K, rarefaction otherwise).
void pressure_function(double p, const Side& k, double g, double& f, double& df)
{
    if (p > k.p) {
        const double A = 2.0 / ((g + 1.0) * k.rho);
        const double B = (g - 1.0) / (g + 1.0) * k.p;
        const double q = std::sqrt(A / (p + B));
        f = (p - k.p) * q;
        df = q * (1.0 - 0.5 * (p - k.p) / (p + B));
    } else {
        const double r = p / k.p;
        f = 2.0 * k.a / (g - 1.0) * (std::pow(r, (g - 1.0) / (2.0 * g)) - 1.0);
        df = r > 0.0 ? std::pow(r, -(g + 1.0) / (2.0 * g)) / (k.rho * k.a) : std::numeric_limits<double>::infinity();
    }
}

} // namespace

RiemannStar riemann_star(const EulerPrimitive& left, const EulerPrimitive& right, double gamma)
{
    const Side L = side(left, gamma);
    const Side R = side(right, gamma);
    const double dv = R.v - L.v;
    RiemannStar star;

    auto total = [&](double p, double& f, double& df) {
        double fl, dfl, fr, dfr;
        pressure_function(p, L, gamma, fl, dfl);
        pressure_function(p, R, gamma, fr, dfr);
        f = fl + fr + dv;
        df = dfl + dfr;
        return fr - fl;
    };

    // f(0) >= 0: the two rarefactions separate and leave a vacuum.
    const double f0 = -2.0 * (L.a + R.a) / (gamma - 1.0) + dv;
    if (f0 >= 0.0) {
        star.vacuum = true;
        return star;
    }

    double lo = 0.0;
    double hi = std::max(L.p, R.p);
    double f, df;
    total(hi, f, df);
    while (f < 0.0) {
        lo = hi;
        hi *= 2.0;
        total(hi, f, df);
    }
    // two-rarefaction guess, exact for a pair of rarefactions
    const double z = (gamma - 1.0) / (2.0 * gamma);
    double p = std::pow((L.a + R.a - 0.5 * (gamma - 1.0) * dv) / (L.a / std::pow(L.p, z) + R.a / std::pow(R.p, z)), 1.0 / z);
    if (!(p > lo && p < hi)) p = 0.5 * (lo + hi);

    for (int it = 1; it <= 200; ++it) {
        star.iterations = it;
        total(p, f, df);
        if (f == 0.0) break;
        if (f < 0.0) lo = p; else hi = p;
        double next = p - f / df;
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        const double change = std::abs(next - p) / (0.5 * (next + p));
        p = next;
        if (change < 1e-14 || hi - lo <= 4.0 * std::numeric_limits<double>::min()) break;
    }
    star.p = p;
    double fl, dfl, fr, dfr;
    pressure_function(p, L, gamma, fl, dfl);
    pressure_function(p, R, gamma, fr, dfr);
    star.v = 0.5 * (L.v + R.v) + 0.5 * (fr - fl);
    return star;
}

RiemannWaves riemann_waves(const EulerPrimitive& left, const EulerPrimitive& right, double gamma)
{
    const Side L = side(left, gamma);
    const Side R = side(right, gamma);
    const RiemannStar s = riemann_star(left, right, gamma);
    RiemannWaves w;
    const double g = gamma;
    if (s.vacuum) {
        w.left_head = L.v - L.a;
        w.left_tail = L.v + 2.0 * L.a / (g - 1.0);
        w.right_tail = R.v - 2.0 * R.a / (g - 1.0);
        w.right_head = R.v + R.a;
        w.contact = 0.5 * (w.left_tail + w.right_tail);
        return w;
    }
    w.contact = s.v;
    if (s.p > L.p) {
        w.left_shock = true;
        w.left_head = w.left_tail = L.v - L.a * std::sqrt((g + 1.0) / (2.0 * g) * s.p / L.p + (g - 1.0) / (2.0 * g));
    } else {
        w.left_head = L.v - L.a;
        w.left_tail = s.v - L.a * std::pow(s.p / L.p, (g - 1.0) / (2.0 * g));
    }
    if (s.p > R.p) {
        w.right_shock = true;
        w.right_head = w.right_tail = R.v + R.a * std::sqrt((g + 1.0) / (2.0 * g) * s.p / R.p + (g - 1.0) / (2.0 * g));
    } else {
        w.right_head = R.v + R.a;
        w.right_tail = s.v + R.a * std::pow(s.p / R.p, (g - 1.0) / (2.0 * g));
    }
    return w;
}

EulerPrimitive sample_riemann(const EulerPrimitive& left, const EulerPrimitive& right, double gamma, double xi)
{
    const Side L = side(left, gamma);
    const Side R = side(right, gamma);
    const RiemannStar s = riemann_star(left, right, gamma);
    const RiemannWaves w = riemann_waves(left, right, gamma);
    const double g = gamma;
    const double gm = (g - 1.0) / (g + 1.0);

    auto left_fan = [&](double x) {
        const double c = 2.0 / (g + 1.0) + gm / L.a * (L.v - x);
        const double rho = L.rho * std::pow(c, 2.0 / (g - 1.0));
        return EulerPrimitive{rho, 2.0 / (g + 1.0) * (L.a + 0.5 * (g - 1.0) * L.v + x), L.p * std::pow(c, 2.0 * g / (g - 1.0))};
    };
    auto right_fan = [&](double x) {
        const double c = 2.0 / (g + 1.0) - gm / R.a * (R.v - x);
        const double rho = R.rho * std::pow(c, 2.0 / (g - 1.0));
        return EulerPrimitive{rho, 2.0 / (g + 1.0) * (-R.a + 0.5 * (g - 1.0) * R.v + x), R.p * std::pow(c, 2.0 * g / (g - 1.0))};
    };

    if (xi <= w.left_head) return left;
    if (xi >= w.right_head) return right;
    if (s.vacuum) {
        if (xi < w.left_tail) return left_fan(xi);
        if (xi > w.right_tail) return right_fan(xi);
        return {0.0, 0.0, 0.0};
    }
    if (xi < w.contact) {
        if (w.left_shock) {
            const double r = s.p / L.p;
            return {L.rho * (r + gm) / (gm * r + 1.0), s.v, s.p};
        }
        if (xi < w.left_tail) return left_fan(xi);
        return {L.rho * std::pow(s.p / L.p, 1.0 / g), s.v, s.p};
    }
    if (w.right_shock) {
        const double r = s.p / R.p;
        return {R.rho * (r + gm) / (gm * r + 1.0), s.v, s.p};
    }
    if (xi > w.right_tail) return right_fan(xi);
    return {R.rho * std::pow(s.p / R.p, 1.0 / g), s.v, s.p};
}

ConservedVector exact_riemann(const Equation& eq, const EulerPrimitive& left, const EulerPrimitive& right, double xi)
{
    const EulerPrimitive w = sample_riemann(left, right, eq.gamma(), xi);
    if (w.rho == 0.0) return ConservedVector(3);
    return eq.from_primitive(w);
}

} // namespace af
