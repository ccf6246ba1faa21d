#pragma once

#include <cstdint>
#include <string>

namespace isomeric {

/// One fully-specified run: subcommand plus every knob it may consult.
/// The seed is recorded in every emitted artifact, and identical configs
/// produce byte-identical output.
struct RunConfig {
    std::string command;  // cauchy, symfunc-q, isotypic, qdet-verify,
                          // lattice-leq, lattice-radical, lattice-prime,
                          // lattice-spec, selftest
    int n = 2;
    int r = 1;
    int max_degree = 6;
    int degree = 3;
    int kmax = 4;
    int rmax = 3;
    int vars = 2;
    std::string lambda;        // partition, e.g. "3,1"
    std::string gens;          // antichain, e.g. "3,1;4,2"
    std::string gens2;         // second antichain for leq
    std::string format = "text";  // text | json | csv
    std::uint64_t seed = 12345;
    long dim_cap = 5000;       // largest graded piece a run may touch
    std::string output_path;   // empty: stdout; relative paths resolve
                               // against $ISOMERIC_OUT_DIR when set
    std::string dump_basis;    // optional basis dump file (isotypic)
};

struct RunResult {
    int exit_code = 0;  // 0: all embedded checks hold; 1: a check failed; 2: bad config
    std::string output;
};

/// Executes the run and returns its report; does not touch stdout.
/// output_path handling (writing the report to a file) happens here too.
RunResult run(const RunConfig& config);

}  // namespace isomeric
