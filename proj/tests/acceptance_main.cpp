// Runs the full verification suite and prints one line per criterion.
#include <cstdio>
#include <iostream>

#include "isomeric/acceptance.hpp"

int main() {
    auto results = isomeric::run_acceptance({});
    isomeric::print_results(std::cout, results);
    bool ok = isomeric::all_passed(results);
    std::cout << (ok ? "acceptance: all criteria passed\n" : "acceptance: FAILURES present\n");
    return ok ? 0 : 1;
}
