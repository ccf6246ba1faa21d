#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace isomeric {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

struct AcceptanceOptions {
    std::uint64_t seed = 12345;
};

/// Runs the full verification suite: every check is exact (tolerance zero).
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts = {});

bool all_passed(const std::vector<CriterionResult>& results);

/// One pass/fail line per criterion.
void print_results(std::ostream& os, const std::vector<CriterionResult>& results);

}  // namespace isomeric
