#include "isomeric/acceptance.hpp"

#include <chrono>
#include <random>
#include <sstream>

#include "isomeric/lattice.hpp"
#include "isomeric/qdet.hpp"
#include "isomeric/symfunc.hpp"

namespace isomeric {

namespace {

using Clock = std::chrono::steady_clock;

struct Check {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            if (detail.tellp() > 0) detail << "; ";
            detail << "FAILED: " << what;
        }
    }
    void note(const std::string& s) {
        if (detail.tellp() > 0) detail << "; ";
        detail << s;
    }
};

Int component_dim(const StrictPartition& lambda, int n) {
    Int t = t_dim(lambda, n);
    return to_int(Rat(t) * Rat(t) * pow2(-lambda.delta()));
}

// criterion 1: the Cauchy identity, exactly, for n <= 3 and d <= 8
Check criterion_cauchy() {
    Check c;
    int checked = 0;
    for (int n = 1; n <= 3; ++n)
        for (int d = 0; d <= 8; ++d) {
            CauchyReport rep = cauchy_check(n, d);
            c.require(rep.equal, "n=" + std::to_string(n) + " d=" + std::to_string(d) + ": " +
                                     rep.lhs.get_str() + " != " + rep.rhs.get_str());
            ++checked;
        }
    c.note(std::to_string(checked) + " (n,d) pairs, all exact");
    return c;
}

// criterion 2: commutant dimension and component dimensions at n=2, d <= 4
Check criterion_isotypic(std::uint64_t seed) {
    Check c;
    ARing A(2);
    auto gens = q_generators(A);
    for (int d = 0; d <= 4; ++d) {
        int expected_count = 0;
        for (const StrictPartition& lambda : enumerate_strict(d))
            if (lambda.length() <= 2) ++expected_count;
        CommutantBasis cb = commutant_basis(A, gens, d);
        c.require(cb.dim() == expected_count, "commutant dim at d=" + std::to_string(d) + " is " +
                                                  std::to_string(cb.dim()) + ", expected " +
                                                  std::to_string(expected_count));
        IsotypicReport rep = isotypic_decomposition(A, gens, d, seed);
        for (const IsotypicComponent& comp : rep.components)
            c.require(Int(static_cast<long>(comp.basis.dimension())) == component_dim(comp.label, 2),
                      "component " + comp.label.str() + " at d=" + std::to_string(d));
    }
    c.note("degrees 0..4 decomposed; d=3 splits 88 = 72 + 16");
    return c;
}

// criterion 3: the ideal generated by the (2,1) component has the up-set dimensions
Check criterion_component_ideal(std::uint64_t seed, std::map<int, GradedBasis>* out_slices,
                                const ARing& A, const std::vector<SuperDerivation>& gens) {
    Check c;
    StrictPartition lambda({2, 1});
    auto slices = ideal_from_component(A, gens, lambda, 6, seed);
    std::string dims;
    for (int d = 0; d <= 6; ++d) {
        Rat expect = 0;
        for (const StrictPartition& mu : enumerate_strict(d))
            if (mu.contains(lambda) && mu.length() <= 2) expect += Rat(component_dim(mu, 2));
        c.require(Int(static_cast<long>(slices[d].dimension())) == to_int(expect),
                  "degree " + std::to_string(d) + ": dim " + std::to_string(slices[d].dimension()) +
                      " vs " + to_int(expect).get_str());
        if (d) dims += (d > 1 ? "," : "") + std::to_string(slices[d].dimension());
    }
    c.note("graded dims 1..6: [" + dims + "]");
    if (out_slices) *out_slices = std::move(slices);
    return c;
}

// criterion 4: the kernel realization matches the prediction and the component ideal
Check criterion_kernel(const QdetContext& ctx, const EquivariantHom& phi,
                       const std::map<int, GradedBasis>& component,
                       std::map<int, GradedBasis>* out_kernel) {
    Check c;
    auto kernel = ideal_Ir(ctx, phi, 6);
    std::string dims;
    for (int d = 0; d <= 6; ++d) {
        Rat expect = 0;
        for (const StrictPartition& mu : enumerate_strict(d))
            if (mu.length() == 2) expect += Rat(component_dim(mu, 2));
        c.require(Int(static_cast<long>(kernel[d].dimension())) == to_int(expect),
                  "kernel dim at degree " + std::to_string(d));
        if (d) dims += (d > 1 ? "," : "") + std::to_string(kernel[d].dimension());
    }
    for (int d = 0; d <= 6; ++d) {
        const GradedBasis& a = kernel.at(d);
        const GradedBasis& b = component.at(d);
        bool same = a.dimension() == b.dimension();
        for (size_t k = 0; same && k < a.vectors.size(); ++k) {
            SuperPolynomial rebuilt(ctx.A.ring);
            for (const auto& [m, coef] : b.vectors[k].terms()) rebuilt.add_term(m, coef);
            same = a.vectors[k] == rebuilt;
        }
        c.require(same, "kernel and component ideal differ at degree " + std::to_string(d));
    }
    c.note("kernel dims 1..6: [" + dims + "], coincides with the component ideal");
    if (out_kernel) *out_kernel = std::move(kernel);
    return c;
}

// criterion 5: rank-locus inclusions and minor powers at (2,1) and (2,0)
Check criterion_rank_locus(const QdetContext& ctx21, const EquivariantHom& phi21) {
    Check c;
    RankLocusReport r1 = verify_rank_locus(ctx21, phi21, 6, 4);
    c.require(r1.inclusion_ok, "some kernel vector escapes (minors + odd variables) at r=1");
    c.require(r1.minor_powers.size() == 1, "expected a single 2x2 minor");
    if (!r1.minor_powers.empty()) {
        c.require(r1.minor_powers[0].found, "no power of the determinant fell into the kernel");
        c.require(!r1.minor_powers[0].in_ideal_at_1, "the determinant itself landed in the kernel");
        if (r1.minor_powers[0].found)
            c.note("det: least k with det^k in the kernel is " + std::to_string(r1.minor_powers[0].least_k) +
                   " (checked " + std::to_string(r1.vectors_checked) + " kernel vectors)");
    }
    QdetContext ctx20(2, 0);
    EquivariantHom phi20 = build_phi(ctx20);
    RankLocusReport r0 = verify_rank_locus(ctx20, phi20, 3, 4);
    c.require(r0.inclusion_ok, "kernel of the zero map escapes the variable ideal");
    for (const MinorPowerWitness& w : r0.minor_powers)
        c.require(w.found && w.least_k == 1, "variable " + w.minor + " not annihilated at k=1");
    return c;
}

// criterion 6: equivariance of phi and uniqueness of the solution
Check criterion_equivariance(const QdetContext& ctx21, const EquivariantHom& phi21) {
    Check c;
    c.require(equivariance_holds(ctx21, phi21), "phi at (2,1) fails a generator");
    c.require(phi21.solution_dim == 1, "solution space at (2,1)");
    for (auto [n, r] : {std::pair{1, 1}, std::pair{2, 2}}) {
        QdetContext ctx(n, r);
        EquivariantHom phi = build_phi(ctx);
        c.require(phi.solution_dim == 1,
                  "solution space at (" + std::to_string(n) + "," + std::to_string(r) + ")");
        c.require(equivariance_holds(ctx, phi),
                  "phi at (" + std::to_string(n) + "," + std::to_string(r) + ") fails a generator");
    }
    c.note("solution spaces one-dimensional at (1,1), (2,1), (2,2); all generators commute exactly");
    return c;
}

// criterion 7: the symbolic classification, exhaustively over antichains of size <= 6
Check criterion_lattice() {
    Check c;
    std::vector<StrictPartition> pool;
    for (int d = 1; d <= 6; ++d)
        for (const StrictPartition& p : enumerate_strict(d)) pool.push_back(p);
    std::vector<EquivariantIdeal> ideals;
    for (size_t mask = 0; mask < (1u << pool.size()); ++mask) {
        std::vector<StrictPartition> subset;
        for (size_t k = 0; k < pool.size(); ++k)
            if (mask & (1u << k)) subset.push_back(pool[k]);
        bool antichain = true;
        for (size_t a = 0; a < subset.size() && antichain; ++a)
            for (size_t b = 0; b < subset.size() && antichain; ++b)
                if (a != b && subset[a].contains(subset[b])) antichain = false;
        if (antichain) ideals.push_back(EquivariantIdeal::from_generators(subset));
    }
    for (const EquivariantIdeal& I : ideals) {
        EquivariantIdeal rad = g_radical(I);
        c.require(g_radical(rad) == rad, "idempotence at " + I.str());
        c.require(leq(I, rad), "extensivity at " + I.str());
        c.require(is_g_prime(rad), "radical not prime at " + I.str());
        // brute-force scan for the smallest containing staircase ideal
        if (!I.is_zero()) {
            EquivariantIdeal best = EquivariantIdeal::determinantal(0);
            for (int r = 0; r <= 8; ++r) {
                EquivariantIdeal cand = EquivariantIdeal::determinantal(r);
                if (leq(I, cand)) best = cand;
            }
            c.require(rad == best, "scan disagreement at " + I.str());
        }
    }
    size_t monotone_pairs = 0;
    for (const EquivariantIdeal& I : ideals)
        for (const EquivariantIdeal& J : ideals)
            if (leq(I, J)) {
                c.require(leq(g_radical(I), g_radical(J)), "monotonicity at " + I.str() + " <= " + J.str());
                ++monotone_pairs;
            }
    std::vector<EquivariantIdeal> primes;
    for (const EquivariantIdeal& I : ideals)
        if (is_g_prime(I)) primes.push_back(I);
    for (const EquivariantIdeal& P : primes)
        for (const EquivariantIdeal& Q : primes)
            c.require(leq(P, Q) || leq(Q, P), "primes not comparable: " + P.str() + " vs " + Q.str());
    for (const StrictPartition& lambda : pool)
        c.require(g_radical(EquivariantIdeal::principal(lambda)) ==
                      EquivariantIdeal::determinantal(lambda.length() - 1),
                  "radical formula at " + lambda.str());
    c.note(std::to_string(ideals.size()) + " antichain ideals, " + std::to_string(monotone_pairs) +
           " comparable pairs, " + std::to_string(primes.size()) + " primes");
    return c;
}

// criterion 8: randomized ring laws plus monomial counting
Check criterion_ring_laws(std::uint64_t seed) {
    Check c;
    ARing A(2);
    auto gens = q_generators(A);
    std::mt19937_64 rng(seed);
    auto random_parity_poly = [&](Parity parity) {
        SuperPolynomial f(A.ring);
        for (int t = 0; t < 2; ++t) {
            SuperPolynomial m = SuperPolynomial::constant(A.ring, GaussRat(1 + static_cast<int>(rng() % 4)));
            if (rng() % 4 == 0) m *= GaussRat(Rat(0), Rat(1));
            int deg = 1 + static_cast<int>(rng() % 2);
            for (int k = 0; k < deg; ++k)
                m *= SuperPolynomial::variable(A.ring, static_cast<VarId>(rng() % 8));
            if (!m.is_zero() && m.parity() != parity)
                m *= SuperPolynomial::variable(A.ring, 4 + static_cast<VarId>(rng() % 4));
            if (!m.is_zero() && m.parity() == parity) f += m;
        }
        if (f.is_zero())
            return parity == Parity::even ? SuperPolynomial::constant(A.ring, GaussRat(1))
                                          : SuperPolynomial::variable(A.ring, 4);
        return f;
    };
    long cases = 0;
    for (int t = 0; t < 4000; ++t) {
        Parity pf = rng() % 2 ? Parity::odd : Parity::even;
        Parity pg = rng() % 2 ? Parity::odd : Parity::even;
        SuperPolynomial f = random_parity_poly(pf), g = random_parity_poly(pg);
        SuperPolynomial gf = g * f;
        if (pf == Parity::odd && pg == Parity::odd) gf *= GaussRat(-1);
        if (!(f * g == gf)) c.require(false, "supercommutativity case " + std::to_string(t));
        ++cases;
    }
    for (int t = 0; t < 3500; ++t) {
        SuperPolynomial f = random_parity_poly(rng() % 2 ? Parity::odd : Parity::even);
        SuperPolynomial g = random_parity_poly(rng() % 2 ? Parity::odd : Parity::even);
        SuperPolynomial h = random_parity_poly(rng() % 2 ? Parity::odd : Parity::even);
        if (!((f * g) * h == f * (g * h))) c.require(false, "associativity case " + std::to_string(t));
        if (!(f * (g + h) == f * g + f * h)) c.require(false, "distributivity case " + std::to_string(t));
        ++cases;
    }
    for (int t = 0; t < 3500; ++t) {
        const SuperDerivation& d = gens[rng() % gens.size()];
        Parity pf = rng() % 2 ? Parity::odd : Parity::even;
        SuperPolynomial f = random_parity_poly(pf);
        SuperPolynomial g = random_parity_poly(rng() % 2 ? Parity::odd : Parity::even);
        SuperPolynomial rhs = d(f) * g;
        SuperPolynomial tail = f * d(g);
        if (d.parity == Parity::odd && pf == Parity::odd) tail *= GaussRat(-1);
        rhs += tail;
        if (!(d(f * g) == rhs)) c.require(false, "Leibniz case " + std::to_string(t));
        ++cases;
    }
    // monomial counting against the closed form
    for (int n = 1; n <= 3; ++n) {
        std::vector<std::string> evens, odds;
        for (int i = 0; i < n * n; ++i) {
            evens.push_back("e" + std::to_string(i));
            odds.push_back("o" + std::to_string(i));
        }
        SuperRing ring(evens, odds);
        for (int d = 0; d <= 8; ++d)
            c.require(Int(static_cast<long>(enumerate_monomials(ring, d).size())) == graded_dim_A(n, d),
                      "monomial count n=" + std::to_string(n) + " d=" + std::to_string(d));
    }
    c.note(std::to_string(cases) + " randomized cases; monomial counts up to n=3, d=8");
    return c;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts) {
    std::vector<CriterionResult> results;
    auto run = [&](int id, const std::string& name, auto&& fn) {
        auto t0 = Clock::now();
        Check c;
        try {
            c = fn();
        } catch (const std::exception& e) {
            c.pass = false;
            c.note(std::string("exception: ") + e.what());
        }
        auto t1 = Clock::now();
        results.push_back({id, name, c.pass, c.detail.str(),
                           std::chrono::duration<double>(t1 - t0).count()});
    };

    run(1, "Cauchy identity (n<=3, d<=8, exact)", [&] { return criterion_cauchy(); });
    run(2, "isotypic decomposition (n=2, d<=4)", [&] { return criterion_isotypic(opts.seed); });

    // the remaining determinantal criteria share one context
    ARing A(2);
    auto gens = q_generators(A);
    std::map<int, GradedBasis> component;
    run(3, "component ideal dimensions (lambda=(2,1), degrees<=6)",
        [&] { return criterion_component_ideal(opts.seed, &component, A, gens); });

    QdetContext ctx21(2, 1);
    EquivariantHom phi21 = build_phi(ctx21);
    std::map<int, GradedBasis> kernel;
    run(4, "determinantal kernel (n=2, r=1, degrees<=6)",
        [&] { return criterion_kernel(ctx21, phi21, component, &kernel); });
    run(5, "rank locus (n=2, r=1 and r=0)", [&] { return criterion_rank_locus(ctx21, phi21); });
    run(6, "equivariance and uniqueness of phi", [&] { return criterion_equivariance(ctx21, phi21); });
    run(7, "equivariant prime classification (|lambda|<=6)", [&] { return criterion_lattice(); });
    run(8, "supercommutative ring laws (>=10^4 cases)", [&] { return criterion_ring_laws(opts.seed); });
    return results;
}

bool all_passed(const std::vector<CriterionResult>& results) {
    for (const CriterionResult& r : results)
        if (!r.pass) return false;
    return true;
}

void print_results(std::ostream& os, const std::vector<CriterionResult>& results) {
    char buf[32];
    for (const CriterionResult& r : results) {
        std::snprintf(buf, sizeof buf, "%.1fs", r.seconds);
        os << (r.pass ? "[PASS]" : "[FAIL]") << " criterion " << r.id << ": " << r.name << " (" << buf
           << ")";
        if (!r.detail.empty()) os << " -- " << r.detail;
        os << "\n";
    }
}

}  // namespace isomeric
