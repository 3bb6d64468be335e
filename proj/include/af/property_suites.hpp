#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace af {

struct SuiteReport {
    std::string name;
    std::size_t cases = 0;
    std::size_t failures = 0;
    double worst = 0.0; // largest normalized defect seen
    std::vector<std::string> failure_examples; // first few
    double seconds = 0.0;

    bool passed() const { return cases > 0 && failures == 0; }
};

// splitting-consistency, splitting-signs, limiter-convexity,
// intermediate-states, conservation, ssprk3, power-law
std::vector<std::string> suite_names();

// Randomized checks with a fixed seed. Throws std::invalid_argument for
// unknown names.
SuiteReport run_suite(const std::string& name, std::uint64_t seed, std::size_t cases = 10000);

} // namespace af
