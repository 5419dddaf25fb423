// Acceptance suite: one pass/fail line per criterion; exit 0 iff all pass.
#include <cstdlib>
#include <iostream>

#include "uqgl21/acceptance.hpp"

int main() {
    const char* cli = std::getenv("UQGL21_CLI");
    auto results = uqgl21::run_acceptance(std::cout, cli ? cli : "");
    bool ok = uqgl21::all_passed(results);
    std::cout << (ok ? "ACCEPTANCE: all criteria passed" : "ACCEPTANCE: FAILURES PRESENT")
              << "\n";
    return ok ? 0 : 1;
}
