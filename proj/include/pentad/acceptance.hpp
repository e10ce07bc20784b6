#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pentad {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
};

// Runs the full acceptance suite. Deterministic: fixed seeds throughout.
std::vector<CriterionResult> run_acceptance();

// Prints one pass/fail line per criterion; returns a process exit status.
int run_acceptance_cli(std::ostream& out);

} // namespace pentad
