#pragma once

#include <string>
#include <vector>

namespace wormhole {

struct CheckResult {
    std::string name;
    bool passed;
    double residual;  // worst observed discrepancy
    double tolerance;
};

// Identity and self-check suite: general potential vs curvature route,
// Gaussian closed form vs general route, depth -1/b0^2, ansatz reduction,
// constant-throat positivity, solver oracles (box / harmonic).
std::vector<CheckResult> run_verification();

bool all_passed(const std::vector<CheckResult>& results);

} // namespace wormhole
