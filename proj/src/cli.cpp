#include "isomeric/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "isomeric/acceptance.hpp"
#include "isomeric/lattice.hpp"
#include "isomeric/qdet.hpp"
#include "isomeric/symfunc.hpp"

namespace isomeric {

namespace {

using Json = nlohmann::ordered_json;

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void guard_dimensions(const RunConfig& cfg, int n, int d) {
    Int dim = graded_dim_A(n, d);
    if (dim > cfg.dim_cap)
        throw ConfigError("graded piece at n=" + std::to_string(n) + ", degree " + std::to_string(d) +
                          " has dimension " + dim.get_str() + " above the cap " +
                          std::to_string(cfg.dim_cap) + "; raise --cap to proceed");
}

std::string render(const RunConfig& cfg, const Json& doc, const std::string& text_form,
                   const std::string& csv_form = "") {
    if (cfg.format == "json") return doc.dump(2) + "\n";
    if (cfg.format == "csv") {
        if (csv_form.empty()) throw ConfigError("this subcommand has no csv form");
        return csv_form;
    }
    return text_form;
}

Json cauchy_row(const CauchyReport& rep) {
    Json row;
    row["degree"] = rep.degree;
    row["lhs"] = rep.lhs.get_str();
    row["rhs"] = rep.rhs.get_str();
    row["equal"] = rep.equal;
    Json table = Json::array();
    for (const CauchyTerm& t : rep.per_lambda)
        table.push_back(Json{{"lambda", t.lambda.str()}, {"term", t.term.get_str()}});
    row["per_lambda"] = std::move(table);
    return row;
}

RunResult run_cauchy(const RunConfig& cfg) {
    if (cfg.n < 1 || cfg.max_degree < 0) throw ConfigError("cauchy: need n >= 1 and max-degree >= 0");
    // no dimension guard: this run only counts dimensions, nothing is materialized
    bool all_equal = true;
    Json rows = Json::array();
    std::ostringstream text, csv;
    text << "# cauchy n=" << cfg.n << " max-degree=" << cfg.max_degree << " seed=" << cfg.seed << "\n";
    csv << "# seed=" << cfg.seed << "\n";
    csv << "degree,lhs,rhs,equal\n";
    for (int d = 0; d <= cfg.max_degree; ++d) {
        CauchyReport rep = cauchy_check(cfg.n, d);
        all_equal = all_equal && rep.equal;
        rows.push_back(cauchy_row(rep));
        text << "degree " << d << ": lhs " << rep.lhs.get_str() << " rhs " << rep.rhs.get_str()
             << (rep.equal ? " ok" : " MISMATCH") << "\n";
        csv << d << "," << rep.lhs.get_str() << "," << rep.rhs.get_str() << "," << (rep.equal ? 1 : 0)
            << "\n";
    }
    Json doc;
    doc["command"] = "cauchy";
    doc["n"] = cfg.n;
    doc["max_degree"] = cfg.max_degree;
    doc["seed"] = cfg.seed;
    doc["equal"] = all_equal;
    doc["rows"] = std::move(rows);
    return {all_equal ? 0 : 1, render(cfg, doc, text.str(), csv.str())};
}

RunResult run_symfunc_q(const RunConfig& cfg) {
    StrictPartition lambda = StrictPartition::parse(cfg.lambda);
    if (cfg.vars < 1) throw ConfigError("symfunc q: need vars >= 1");
    SymPolynomial q = schur_q(lambda, cfg.vars);
    Json doc;
    doc["command"] = "symfunc q";
    doc["lambda"] = lambda.str();
    doc["vars"] = cfg.vars;
    doc["seed"] = cfg.seed;
    doc["polynomial"] = q.str();
    doc["specialization_at_ones"] = to_string(q.eval_ones());
    std::ostringstream text;
    text << "# symfunc q lambda=" << lambda.str() << " vars=" << cfg.vars << " seed=" << cfg.seed << "\n"
         << q.str() << "\n";
    return {0, render(cfg, doc, text.str())};
}

RunResult run_isotypic(const RunConfig& cfg) {
    if (cfg.n < 1 || cfg.degree < 0) throw ConfigError("isotypic: need n >= 1 and degree >= 0");
    guard_dimensions(cfg, cfg.n, cfg.degree);
    ARing A(cfg.n);
    auto gens = q_generators(A);
    IsotypicReport rep = isotypic_decomposition(A, gens, cfg.degree, cfg.seed);
    Json comps = Json::array();
    std::ostringstream text;
    text << "# isotypic n=" << cfg.n << " degree=" << cfg.degree << " seed=" << cfg.seed
         << " commutant_dim=" << rep.commutant_dim << "\n";
    bool ok = true;
    for (const IsotypicComponent& comp : rep.components) {
        Json c;
        c["lambda"] = comp.label.str();
        c["dimension"] = std::to_string(comp.basis.dimension());
        c["degree"] = comp.degree;
        if (comp.labeled_by_weight_fallback) c["labeled_by_weight_fallback"] = true;
        comps.push_back(std::move(c));
        ok = ok && Int(static_cast<long>(comp.basis.dimension())) == comp.expected_dim;
        text << comp.label.str() << ": dimension " << comp.basis.dimension()
             << (comp.labeled_by_weight_fallback ? " (weight-fallback label)" : "") << "\n";
    }
    if (!cfg.dump_basis.empty()) {
        std::ofstream out(cfg.dump_basis);
        if (!out) throw ConfigError("cannot open basis dump file " + cfg.dump_basis);
        for (const IsotypicComponent& comp : rep.components) {
            out << "# component " << comp.label.str() << " degree " << comp.degree << "\n";
            for (const SuperPolynomial& v : comp.basis.vectors) out << v.str() << "\n";
        }
    }
    Json doc;
    doc["command"] = "isotypic";
    doc["n"] = cfg.n;
    doc["degree"] = cfg.degree;
    doc["seed"] = cfg.seed;
    doc["commutant_dim"] = rep.commutant_dim;
    doc["components"] = std::move(comps);
    return {ok ? 0 : 1, render(cfg, doc, text.str())};
}

RunResult run_qdet_verify(const RunConfig& cfg) {
    if (cfg.n < 1 || cfg.r < 0 || cfg.max_degree < 0 || cfg.kmax < 1)
        throw ConfigError("qdet verify: bad bounds");
    guard_dimensions(cfg, cfg.n, cfg.max_degree);
    QdetContext ctx(cfg.n, cfg.r);
    EquivariantHom phi = build_phi(ctx);
    bool equivariant = equivariance_holds(ctx, phi);
    auto kernel = ideal_Ir(ctx, phi, cfg.max_degree);
    bool dims_ok = true;
    Json kernel_dims = Json::array();
    std::string dims_text;
    for (int d = 1; d <= cfg.max_degree; ++d) {
        kernel_dims.push_back(std::to_string(kernel[d].dimension()));
        dims_text += (d > 1 ? "," : "") + std::to_string(kernel[d].dimension());
        Rat expect = 0;
        for (const StrictPartition& mu : enumerate_strict(d)) {
            if (mu.length() <= cfg.r || mu.length() > cfg.n) continue;
            Int t = t_dim(mu, cfg.n);
            expect += Rat(t) * Rat(t) * pow2(-mu.delta());
        }
        dims_ok = dims_ok && Int(static_cast<long>(kernel[d].dimension())) == to_int(expect);
    }
    Json doc;
    doc["command"] = "qdet verify";
    doc["n"] = cfg.n;
    doc["r"] = cfg.r;
    doc["max_degree"] = cfg.max_degree;
    doc["kmax"] = cfg.kmax;
    doc["seed"] = cfg.seed;
    doc["solution_dim"] = phi.solution_dim;
    doc["kernel_dims"] = std::move(kernel_dims);
    doc["kernel_dims_match_prediction"] = dims_ok;
    doc["equivariance_ok"] = equivariant;
    std::ostringstream text;
    text << "# qdet verify n=" << cfg.n << " r=" << cfg.r << " max-degree=" << cfg.max_degree
         << " kmax=" << cfg.kmax << " seed=" << cfg.seed << "\n";
    text << "kernel dims (degrees 1.." << cfg.max_degree << "): [" << dims_text << "]"
         << (dims_ok ? " ok" : " MISMATCH") << "\n";
    text << "equivariance: " << (equivariant ? "exact" : "FAILED") << "\n";
    bool ok = equivariant && dims_ok;
    if (cfg.r < cfg.n) {
        RankLocusReport rl = verify_rank_locus(ctx, phi, cfg.max_degree, cfg.kmax);
        Json powers = Json::array();
        for (const MinorPowerWitness& w : rl.minor_powers) {
            Json p;
            p["minor"] = w.minor;
            p["k"] = w.found ? Json(w.least_k) : Json(nullptr);
            powers.push_back(std::move(p));
            text << "minor " << w.minor << ": ";
            if (w.found)
                text << "least power in the kernel k=" << w.least_k << "\n";
            else
                text << "no power <= kmax found (inconclusive)\n";
        }
        doc["minor_powers"] = std::move(powers);
        doc["inclusion_ok"] = rl.inclusion_ok;
        doc["kernel_vectors_checked"] = rl.vectors_checked;
        text << "kernel inside (minors + odd variables): " << (rl.inclusion_ok ? "yes" : "NO") << " ("
             << rl.vectors_checked << " vectors checked)\n";
        ok = ok && rl.ok();
    } else {
        text << "rank locus: skipped (r >= n leaves no minors; the kernel is the whole story)\n";
    }
    return {ok ? 0 : 1, render(cfg, doc, text.str())};
}

RunResult run_lattice(const RunConfig& cfg) {
    Json doc;
    doc["command"] = cfg.command;
    doc["seed"] = cfg.seed;
    std::ostringstream text;
    if (cfg.command == "lattice-leq") {
        EquivariantIdeal I = EquivariantIdeal::parse(cfg.gens);
        EquivariantIdeal J = EquivariantIdeal::parse(cfg.gens2);
        bool le = leq(I, J);
        doc["lhs"] = I.str();
        doc["rhs"] = J.str();
        doc["leq"] = le;
        text << (le ? "true" : "false") << "\n";
    } else if (cfg.command == "lattice-radical") {
        EquivariantIdeal I = EquivariantIdeal::parse(cfg.gens);
        EquivariantIdeal rad = g_radical(I);
        doc["ideal"] = I.str();
        doc["radical"] = rad.str();
        text << rad.str() << "\n";
    } else if (cfg.command == "lattice-prime") {
        EquivariantIdeal I = EquivariantIdeal::parse(cfg.gens);
        bool prime = is_g_prime(I);
        doc["ideal"] = I.str();
        doc["prime"] = prime;
        text << (prime ? "true" : "false") << "\n";
    } else {  // lattice-spec
        if (cfg.rmax < 0) throw ConfigError("lattice spec: rmax must be nonnegative");
        Json entries = Json::array();
        for (const SpectrumEntry& e : g_spectrum(cfg.rmax)) {
            Json row;
            row["rank"] = e.rank ? Json(*e.rank) : Json("inf");
            row["ideal"] = e.ideal.str();
            entries.push_back(std::move(row));
            text << (e.rank ? std::to_string(*e.rank) : std::string("inf")) << ": " << e.ideal.str()
                 << "\n";
        }
        doc["rmax"] = cfg.rmax;
        doc["spectrum"] = std::move(entries);
    }
    return {0, render(cfg, doc, text.str())};
}

RunResult run_selftest(const RunConfig& cfg) {
    auto results = run_acceptance({cfg.seed});
    bool ok = all_passed(results);
    std::ostringstream text;
    print_results(text, results);
    text << (ok ? "acceptance: all criteria passed\n" : "acceptance: FAILURES present\n");
    Json rows = Json::array();
    for (const CriterionResult& r : results) {
        Json row;
        row["id"] = r.id;
        row["name"] = r.name;
        row["pass"] = r.pass;
        row["detail"] = r.detail;
        rows.push_back(std::move(row));
    }
    Json doc;
    doc["command"] = "selftest";
    doc["seed"] = cfg.seed;
    doc["pass"] = ok;
    doc["criteria"] = std::move(rows);
    return {ok ? 0 : 1, render(cfg, doc, text.str())};
}

void write_output(const RunConfig& cfg, const std::string& payload) {
    if (cfg.output_path.empty()) return;
    std::filesystem::path path(cfg.output_path);
    if (path.is_relative()) {
        if (const char* dir = std::getenv("ISOMERIC_OUT_DIR")) path = std::filesystem::path(dir) / path;
    }
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot open output file " + path.string());
    out << payload;
}

}  // namespace

RunResult run(const RunConfig& cfg) {
    try {
        if (cfg.format != "text" && cfg.format != "json" && cfg.format != "csv")
            throw ConfigError("unknown format " + cfg.format);
        RunResult result;
        if (cfg.command == "cauchy")
            result = run_cauchy(cfg);
        else if (cfg.command == "symfunc-q")
            result = run_symfunc_q(cfg);
        else if (cfg.command == "isotypic")
            result = run_isotypic(cfg);
        else if (cfg.command == "qdet-verify")
            result = run_qdet_verify(cfg);
        else if (cfg.command.rfind("lattice-", 0) == 0)
            result = run_lattice(cfg);
        else if (cfg.command == "selftest")
            result = run_selftest(cfg);
        else
            throw ConfigError("unknown command " + cfg.command);
        write_output(cfg, result.output);
        return result;
    } catch (const ConfigError& e) {
        return {2, std::string("error: ") + e.what() + "\n"};
    } catch (const std::invalid_argument& e) {
        return {2, std::string("error: ") + e.what() + "\n"};
    } catch (const std::exception& e) {
        return {1, std::string("error: ") + e.what() + "\n"};
    }
}

}  // namespace isomeric
