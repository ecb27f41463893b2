#pragma once

#include <string>
#include <vector>

namespace liqsim {

enum class ValidateLevel { Fast, Full };

struct CheckResult {
    std::string name;
    bool pass = false;
    double measured = 0.0;  // the extremal measured quantity
    double bound = 0.0;     // the bound it is held against
    std::string detail;     // optional extra lines (tables, per-case numbers)
};

struct ValidateReport {
    std::vector<CheckResult> checks;
    bool all_passed() const;
    int n_failed() const;
};

// Runs every module invariant at fixed seeds. Fast caps Monte Carlo sizes at
// 1e4 paths and the variational lattice at 8 points; Full adds the
// vanishing-impact rate table and the full lattice.
ValidateReport run_validate(ValidateLevel level);

// One line per check: "[PASS|FAIL] name: measured=... bound=..." plus detail.
std::string format_report(const ValidateReport& report);

}  // namespace liqsim
