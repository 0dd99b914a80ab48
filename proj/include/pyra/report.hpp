#pragma once

#include <string>
#include <vector>

namespace pyra {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;  // witness for failures, context for passes
};

struct Report {
    std::vector<CheckResult> checks;

    bool all_passed() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }

    void add(std::string name, bool passed, std::string detail = "") {
        checks.push_back({std::move(name), passed, std::move(detail)});
    }
};

}  // namespace pyra
