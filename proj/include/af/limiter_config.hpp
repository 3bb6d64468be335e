#pragma once

#include <string>

namespace af {

// Off, global bounds (scalar: initial-data range; Euler: positivity), or
// local bounds (scalar only).
enum class BoundMode { Off, Global, Local };

std::string to_string(BoundMode m);
BoundMode bound_mode_from_string(const std::string& s);

struct LimiterConfig {
    BoundMode average = BoundMode::Off;
    BoundMode point = BoundMode::Off;
    bool power_law = false;

    bool any_bp() const { return average != BoundMode::Off || point != BoundMode::Off; }
};

// Floor used by the positivity limiters: min(1e-13, reference value).
inline constexpr double positivity_floor = 1e-13;

} // namespace af
