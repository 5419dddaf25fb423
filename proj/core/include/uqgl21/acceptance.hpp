#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace uqgl21 {

struct CriterionResult {
    int number = 0;
    std::string title;
    bool passed = false;
    std::string detail;
};

/// Runs the full acceptance suite, printing one pass/fail line per
/// criterion.  cli_path names the command-line binary used by the
/// determinism/exit-code criterion (empty fails that criterion).
std::vector<CriterionResult> run_acceptance(std::ostream& out, const std::string& cli_path);

bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace uqgl21
