#include "uqgl21/report.hpp"

#include <sstream>

namespace uqgl21 {

std::string Report::to_text() const {
    std::ostringstream os;
    std::size_t failed = 0;
    for (const auto& c : checks) {
        os << (c.passed ? "PASS  " : "FAIL  ") << c.relation;
        if (!c.passed) {
            ++failed;
            if (!c.counterexample.empty()) os << "  at " << c.counterexample;
            if (!c.lhs.empty() || !c.rhs.empty()) os << "  lhs=" << c.lhs << " rhs=" << c.rhs;
        }
        os << "\n";
    }
    os << (failed == 0 ? "all " + std::to_string(checks.size()) + " checks passed"
                       : std::to_string(failed) + " of " + std::to_string(checks.size()) +
                             " checks failed")
       << "\n";
    return os.str();
}

}  // namespace uqgl21
