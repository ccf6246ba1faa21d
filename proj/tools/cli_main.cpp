// Command-line front end: wires the subcommands onto the library runner.
#include <cstdio>
#include <iostream>

#include <CLI11.hpp>

#include "isomeric/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"equivariant commutative algebra of the isomeric coordinate ring at finite rank"};
    app.require_subcommand(1);

    isomeric::RunConfig cfg;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--format", cfg.format, "output format: text, json or csv")
            ->check(CLI::IsMember({"text", "json", "csv"}));
        cmd->add_option("--seed", cfg.seed, "random seed recorded in the output");
        cmd->add_option("--output", cfg.output_path,
                        "write the report here (relative paths resolve against $ISOMERIC_OUT_DIR)");
        cmd->add_option("--cap", cfg.dim_cap, "largest graded dimension a run may touch");
    };

    CLI::App* cauchy = app.add_subcommand("cauchy", "dimension check of the Cauchy decomposition");
    cauchy->add_option("--n", cfg.n, "rank")->required();
    cauchy->add_option("--max-degree", cfg.max_degree, "largest degree checked");
    add_common(cauchy);

    CLI::App* symfunc = app.add_subcommand("symfunc", "symmetric function queries");
    CLI::App* symfunc_q = symfunc->add_subcommand("q", "print a Schur Q-function");
    symfunc_q->add_option("--lambda", cfg.lambda, "strict partition, e.g. 3,1")->required();
    symfunc_q->add_option("--vars", cfg.vars, "number of variables")->required();
    add_common(symfunc_q);

    CLI::App* isotypic = app.add_subcommand("isotypic", "decompose a graded piece of the coordinate ring");
    isotypic->add_option("--n", cfg.n, "rank")->required();
    isotypic->add_option("--degree", cfg.degree, "degree to decompose")->required();
    isotypic->add_option("--dump-basis", cfg.dump_basis, "write basis vectors to this file");
    add_common(isotypic);

    CLI::App* qdet = app.add_subcommand("qdet", "determinantal ideal verification");
    CLI::App* qdet_verify = qdet->add_subcommand("verify", "kernel, rank locus and equivariance checks");
    qdet_verify->add_option("--n", cfg.n, "rank")->required();
    qdet_verify->add_option("--r", cfg.r, "rank bound of the ideal")->required();
    qdet_verify->add_option("--max-degree", cfg.max_degree, "largest degree checked");
    qdet_verify->add_option("--kmax", cfg.kmax, "largest minor power tried");
    add_common(qdet_verify);

    CLI::App* lattice = app.add_subcommand("lattice", "symbolic equivariant ideal calculus");
    CLI::App* lat_leq = lattice->add_subcommand("leq", "ideal containment");
    lat_leq->add_option("--gens", cfg.gens, "antichain, e.g. 3,1;4,2")->required();
    lat_leq->add_option("--gens2", cfg.gens2, "second antichain")->required();
    add_common(lat_leq);
    CLI::App* lat_rad = lattice->add_subcommand("radical", "smallest containing staircase ideal");
    lat_rad->add_option("--gens", cfg.gens, "antichain")->required();
    add_common(lat_rad);
    CLI::App* lat_prime = lattice->add_subcommand("prime", "test for the classified primes");
    lat_prime->add_option("--gens", cfg.gens, "antichain")->required();
    add_common(lat_prime);
    CLI::App* lat_spec = lattice->add_subcommand("spec", "the prime chain up to a rank bound");
    lat_spec->add_option("--rmax", cfg.rmax, "largest finite rank listed");
    add_common(lat_spec);

    CLI::App* selftest = app.add_subcommand("selftest", "run the full acceptance suite");
    add_common(selftest);

    CLI11_PARSE(app, argc, argv);

    if (cauchy->parsed()) {
        cfg.command = "cauchy";
    } else if (symfunc->parsed()) {
        if (!symfunc_q->parsed()) {
            std::cerr << "symfunc requires a subcommand (q)\n";
            return 2;
        }
        cfg.command = "symfunc-q";
    } else if (isotypic->parsed()) {
        cfg.command = "isotypic";
    } else if (qdet->parsed()) {
        if (!qdet_verify->parsed()) {
            std::cerr << "qdet requires a subcommand (verify)\n";
            return 2;
        }
        cfg.command = "qdet-verify";
    } else if (lattice->parsed()) {
        if (lat_leq->parsed())
            cfg.command = "lattice-leq";
        else if (lat_rad->parsed())
            cfg.command = "lattice-radical";
        else if (lat_prime->parsed())
            cfg.command = "lattice-prime";
        else if (lat_spec->parsed())
            cfg.command = "lattice-spec";
        else {
            std::cerr << "lattice requires a subcommand (leq, radical, prime, spec)\n";
            return 2;
        }
    } else if (selftest->parsed()) {
        cfg.command = "selftest";
    }

    isomeric::RunResult result = isomeric::run(cfg);
    std::fputs(result.output.c_str(), result.exit_code == 2 ? stderr : stdout);
    return result.exit_code;
}
