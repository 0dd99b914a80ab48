#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pyra::accept {

enum class Tier { r3, r4, r5 };

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    double seconds = 0.0;
    std::vector<std::string> details;  // evidence lines, also printed on failure
};

struct SuiteResult {
    std::vector<CriterionResult> criteria;
    bool all_passed() const {
        for (const auto& c : criteria)
            if (!c.passed) return false;
        return true;
    }
};

/// Runs the acceptance checks belonging to one rank tier.
SuiteResult run_tier(Tier tier, std::ostream& log);

/// Runs every acceptance criterion at full scope.
SuiteResult run_all(std::ostream& log);

}  // namespace pyra::accept
