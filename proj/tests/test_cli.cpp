#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "isomeric/cli.hpp"

using namespace isomeric;

namespace {

RunConfig base(const std::string& command) {
    RunConfig cfg;
    cfg.command = command;
    return cfg;
}

}  // namespace

TEST_CASE("cauchy run exits zero with matching sides") {
    RunConfig cfg = base("cauchy");
    cfg.n = 2;
    cfg.max_degree = 6;
    cfg.format = "json";
    RunResult r = run(cfg);
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"equal\": true") != std::string::npos);
    CHECK(r.output.find("\"seed\": 12345") != std::string::npos);
}

TEST_CASE("cauchy csv has one row per degree and records the seed") {
    RunConfig cfg = base("cauchy");
    cfg.n = 1;
    cfg.max_degree = 3;
    cfg.format = "csv";
    RunResult r = run(cfg);
    CHECK(r.exit_code == 0);
    CHECK(r.output == "# seed=12345\ndegree,lhs,rhs,equal\n0,1,1,1\n1,2,2,1\n2,2,2,1\n3,2,2,1\n");
}

TEST_CASE("identical configs give byte-identical output") {
    for (const char* fmt : {"text", "json"}) {
        RunConfig cfg = base("isotypic");
        cfg.n = 2;
        cfg.degree = 3;
        cfg.seed = 777;
        cfg.format = fmt;
        RunResult a = run(cfg);
        RunResult b = run(cfg);
        CHECK(a.exit_code == 0);
        CHECK(a.output == b.output);
    }
}

TEST_CASE("qdet verify embedded assertions drive the exit code") {
    RunConfig cfg = base("qdet-verify");
    cfg.n = 2;
    cfg.r = 1;
    cfg.max_degree = 4;
    cfg.kmax = 4;
    cfg.format = "json";
    RunResult r = run(cfg);
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"inclusion_ok\": true") != std::string::npos);
    CHECK(r.output.find("\"equivariance_ok\": true") != std::string::npos);
    CHECK(r.output.find("\"k\": 2") != std::string::npos);
}

TEST_CASE("lattice queries") {
    RunConfig cfg = base("lattice-prime");
    cfg.gens = "3,1";
    RunResult r = run(cfg);
    CHECK(r.exit_code == 0);
    CHECK(r.output == "false\n");

    cfg.gens = "2,1";
    CHECK(run(cfg).output == "true\n");

    RunConfig rad = base("lattice-radical");
    rad.gens = "3,1;4,2";
    CHECK(run(rad).output == "2,1\n");

    RunConfig le = base("lattice-leq");
    le.gens = "3,1";
    le.gens2 = "2,1";
    CHECK(run(le).output == "true\n");
    le.gens = "3";
    CHECK(run(le).output == "false\n");

    RunConfig spec = base("lattice-spec");
    spec.rmax = 2;
    RunResult s = run(spec);
    CHECK(s.exit_code == 0);
    CHECK(s.output == "0: 1\n1: 2,1\n2: 3,2,1\ninf: 0\n");
}

TEST_CASE("invalid partition syntax exits with a usage error") {
    RunConfig cfg = base("lattice-prime");
    cfg.gens = "2,2";
    RunResult r = run(cfg);
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("error:") == 0);
}

TEST_CASE("dimension cap guard aborts oversized runs") {
    RunConfig cfg = base("qdet-verify");
    cfg.n = 3;
    cfg.r = 1;
    cfg.max_degree = 6;  // the degree-6 piece at rank 3 far exceeds the cap
    RunResult r = run(cfg);
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("above the cap") != std::string::npos);

    RunConfig iso = base("isotypic");
    iso.n = 3;
    iso.degree = 6;
    CHECK(run(iso).exit_code == 2);

    // pure counting runs are not capped
    RunConfig cauchy = base("cauchy");
    cauchy.n = 3;
    cauchy.max_degree = 8;
    CHECK(run(cauchy).exit_code == 0);
}

TEST_CASE("unknown command or format is a usage error") {
    RunConfig cfg = base("frobnicate");
    CHECK(run(cfg).exit_code == 2);
    RunConfig cfg2 = base("cauchy");
    cfg2.format = "xml";
    CHECK(run(cfg2).exit_code == 2);
}

TEST_CASE("symfunc q prints the expansion") {
    RunConfig cfg = base("symfunc-q");
    cfg.lambda = "2,1";
    cfg.vars = 2;
    RunResult r = run(cfg);
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("4*x1^2*x2 + 4*x1*x2^2") != std::string::npos);
}

TEST_CASE("basis dump writes line-per-vector text") {
    RunConfig cfg = base("isotypic");
    cfg.n = 1;
    cfg.degree = 2;
    cfg.dump_basis = "/tmp/isomeric_test_basis.txt";
    RunResult r = run(cfg);
    REQUIRE(r.exit_code == 0);
    std::ifstream in(cfg.dump_basis);
    REQUIRE(in.good());
    std::string line;
    std::getline(in, line);
    CHECK(line == "# component 2 degree 2");
    std::getline(in, line);
    CHECK(line == "x11^2");
    std::getline(in, line);
    CHECK(line == "x11*y11");
    std::remove(cfg.dump_basis.c_str());
}

TEST_CASE("output path writing") {
    RunConfig cfg = base("lattice-prime");
    cfg.gens = "2,1";
    cfg.output_path = "/tmp/isomeric_test_out.txt";
    RunResult r = run(cfg);
    CHECK(r.exit_code == 0);
    std::ifstream in(cfg.output_path);
    std::string line;
    std::getline(in, line);
    CHECK(line == "true");
    std::remove(cfg.output_path.c_str());
}
