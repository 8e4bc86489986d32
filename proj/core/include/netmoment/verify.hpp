#pragma once

#include <string>
#include <vector>

namespace netmoment {

// One identity check: a closed form against an independent reference.
struct CheckResult {
    std::string name;
    double value = 0.0;
    double reference = 0.0;
    double abs_error = 0.0;
    double rel_error = 0.0;
    double tolerance = 0.0;
    bool relative = true;  // tolerance applies to rel_error, else abs_error
    bool pass = false;
};

struct CheckOptions {
    // Keep checks whose name starts with any nonempty prefix here.
    std::vector<std::string> prefixes;
    bool filter = false;  // true: apply prefixes even when empty (selects nothing)
    // Testing hook: add perturb_delta to the closed-form value of every check
    // whose name starts with perturb.
    std::string perturb;
    double perturb_delta = 1e-6;
};

// Tail closed forms vs panel quadrature (rel 1e-8), the odd-power reduction
// (rel 1e-10), vanishing trigonometric integrals on a seeded random grid
// (abs 1e-12), and J0/J1 against the standard library (abs 1e-12).
std::vector<CheckResult> run_specfun_checks(const CheckOptions& options = {});

// Radii used by the tail checks.
std::vector<double> tail_check_radii();

}  // namespace netmoment
