#include "af/limiter_config.hpp"

#include <stdexcept>

namespace af {

std::string to_string(BoundMode m)
{
    switch (m) {
    case BoundMode::Off: return "off";
    case BoundMode::Global: return "global";
    case BoundMode::Local: return "local";
    }
    return "off";
}

BoundMode bound_mode_from_string(const std::string& s)
{
    if (s == "off" || s == "none") return BoundMode::Off;
    if (s == "global") return BoundMode::Global;
    if (s == "local") return BoundMode::Local;
    throw std::invalid_argument("unknown bound mode '" + s + "' (expected off, global or local)");
}

} // namespace af
