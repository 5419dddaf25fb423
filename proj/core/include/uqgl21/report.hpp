#pragma once

#include <string>
#include <vector>

namespace uqgl21 {

/// One relation check: identifier, verdict, and (on failure) where and how
/// the two sides differ.
struct CheckResult {
    std::string relation;
    bool passed = true;
    std::string counterexample;  // state or (row, col)
    std::string lhs, rhs;        // mismatching scalar pair, canonical form
};

struct Report {
    std::vector<CheckResult> checks;

    bool ok() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }
    void merge(const Report& o) { checks.insert(checks.end(), o.checks.begin(), o.checks.end()); }
    std::string to_text() const;
};

}  // namespace uqgl21
