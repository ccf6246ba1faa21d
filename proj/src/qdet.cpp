#include "isomeric/qdet.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include "isomeric/linalg.hpp"

namespace isomeric {

namespace {

std::vector<std::string> block_names(const std::string& prefix, int rows, int cols, bool row_first) {
    std::vector<std::string> names;
    names.reserve(static_cast<size_t>(rows) * static_cast<size_t>(cols));
    for (int a = 0; a < rows; ++a)
        for (int b = 0; b < cols; ++b)
            names.push_back(row_first ? prefix + std::to_string(a + 1) + std::to_string(b + 1)
                                      : prefix + std::to_string(b + 1) + std::to_string(a + 1));
    return names;
}

std::vector<std::string> concat(std::vector<std::string> a, const std::vector<std::string>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

}  // namespace

BRing::BRing(int n_, int r_)
    : n(n_), r(r_), E{r_, "E"}, Edual{r_, "E*"},
      ring(concat(block_names("u", n_, r_, true), block_names("v", r_, n_, true)),
           concat(block_names("ut", n_, r_, true), block_names("vt", r_, n_, true))),
      // u block: (V, E) slot (i,k) at id i*r + k
      u_pair{n_, r_, 0, 2 * n_ * r_, r_, 1},
      // v block: (W, E*) slot (j,k) at id n*r + k*n + j
      w_pair{n_, r_, n_ * r_, 3 * n_ * r_, 1, n_} {
    if (n_ < 1 || n_ > 9 || r_ < 0 || r_ > 9) throw std::invalid_argument("BRing: bad dimensions");
}

QdetContext::QdetContext(int n_, int r_) : A(n_), B(n_, r_) {
    struct Family {
        Side side_A;  // in A, the W copy acts on the right tensor factor
        const PairLayout* pair_B;
        GenKind kind;
        const char* tag;
    };
    const Family families[] = {{Side::left, &B.u_pair, GenKind::diag, "EV"},
                               {Side::left, &B.u_pair, GenKind::off, "FV"},
                               {Side::right, &B.w_pair, GenKind::diag, "EW"},
                               {Side::right, &B.w_pair, GenKind::off, "FW"}};
    for (const Family& fam : families)
        for (int a = 0; a < n_; ++a)
            for (int b = 0; b < n_; ++b) {
                std::string label = std::string(fam.tag) + "[" + std::to_string(a + 1) + "," +
                                    std::to_string(b + 1) + "]";
                gens_A.push_back(transport_generator(A.ring, A.pair, fam.side_A, fam.kind, a, b, label));
                // in B both copies act on the left factor of their own block
                gens_B.push_back(transport_generator(B.ring, *fam.pair_B, Side::left, fam.kind, a, b, label));
            }
}

namespace {

// The four index patterns of the degree-2 ansatz; e selects which.
SuperPolynomial ansatz_pattern(const QdetContext& ctx, int e, int i, int j) {
    const BRing& B = ctx.B;
    SuperPolynomial out(B.ring);
    for (int k = 0; k < B.r; ++k) {
        VarId first, second;
        switch (e) {
            case 0: first = B.u(i, k); second = B.v(k, j); break;
            case 1: first = B.ut(i, k); second = B.vt(k, j); break;
            case 2: first = B.u(i, k); second = B.vt(k, j); break;
            default: first = B.ut(i, k); second = B.v(k, j); break;
        }
        out += SuperPolynomial::variable(B.ring, first) * SuperPolynomial::variable(B.ring, second);
    }
    return out;
}

RingHom hom_with_constants(const QdetContext& ctx, const std::vector<GaussRat>& c) {
    const ARing& A = ctx.A;
    std::vector<SuperPolynomial> images;
    images.reserve(static_cast<size_t>(A.ring.n_vars()));
    for (VarId v = 0; v < A.ring.n_vars(); ++v) images.emplace_back(ctx.B.ring);
    for (int i = 0; i < A.n; ++i)
        for (int j = 0; j < A.n; ++j) {
            SuperPolynomial xi = ansatz_pattern(ctx, 0, i, j);
            xi *= c[0];
            SuperPolynomial xt = ansatz_pattern(ctx, 1, i, j);
            xt *= c[1];
            xi += xt;
            images[static_cast<size_t>(A.x(i, j))] = std::move(xi);
            SuperPolynomial yi = ansatz_pattern(ctx, 2, i, j);
            yi *= c[2];
            SuperPolynomial yt = ansatz_pattern(ctx, 3, i, j);
            yt *= c[3];
            yi += yt;
            images[static_cast<size_t>(A.y(i, j))] = std::move(yi);
        }
    return RingHom(A.ring, ctx.B.ring, std::move(images));
}

}  // namespace

EquivariantHom build_phi(const QdetContext& ctx) {
    const ARing& A = ctx.A;
    if (ctx.B.r == 0) {
        std::vector<SuperPolynomial> zero_images(static_cast<size_t>(A.ring.n_vars()),
                                                 SuperPolynomial(ctx.B.ring));
        return {A.n, 0, -1, {}, RingHom(A.ring, ctx.B.ring, std::move(zero_images))};
    }
    // basis homomorphisms, one per ansatz constant
    std::vector<RingHom> basis;
    basis.reserve(4);
    for (int e = 0; e < 4; ++e) {
        std::vector<GaussRat> c(4, GaussRat(0));
        c[static_cast<size_t>(e)] = GaussRat(1);
        basis.push_back(hom_with_constants(ctx, c));
    }
    // the equivariance conditions phi(D_A v) = D_B(phi v) are linear in the constants
    RowEchelon system;
    for (size_t g = 0; g < ctx.gens_A.size(); ++g) {
        for (VarId v = 0; v < A.ring.n_vars(); ++v) {
            std::vector<SuperPolynomial> diff;
            diff.reserve(4);
            for (int e = 0; e < 4; ++e) {
                SuperPolynomial lhs = basis[static_cast<size_t>(e)](ctx.gens_A[g].var_images[static_cast<size_t>(v)]);
                SuperPolynomial rhs = ctx.gens_B[g](
                    basis[static_cast<size_t>(e)](SuperPolynomial::variable(A.ring, v)));
                lhs -= rhs;
                diff.push_back(std::move(lhs));
            }
            std::set<Monomial, MonomialLess> support;
            for (const SuperPolynomial& p : diff)
                for (const auto& [m, c] : p.terms()) support.insert(m);
            for (const Monomial& m : support) {
                SparseVec row;
                for (int e = 0; e < 4; ++e) {
                    GaussRat c = diff[static_cast<size_t>(e)].coefficient(m);
                    if (!c.is_zero()) row.emplace_back(e, std::move(c));
                }
                if (!row.empty()) system.add_row(std::move(row));
            }
        }
    }
    std::vector<SparseVec> sols = null_space_of(system, 4);
    if (sols.size() != 1)
        throw std::logic_error("build_phi: equivariance solution space has dimension " +
                               std::to_string(sols.size()) + ", expected 1 (sign convention bug)");
    std::vector<GaussRat> constants(4, GaussRat(0));
    for (const auto& [e, c] : sols.front()) constants[static_cast<size_t>(e)] = c;
    GaussRat lead;
    for (const GaussRat& c : constants)
        if (!c.is_zero()) {
            lead = c;
            break;
        }
    for (GaussRat& c : constants) c = c * lead.inverse();

    EquivariantHom phi{A.n, ctx.B.r, static_cast<int>(sols.size()), constants,
                       hom_with_constants(ctx, constants)};
    if (!equivariance_holds(ctx, phi))
        throw std::logic_error("build_phi: solved map fails the exact equivariance check");
    return phi;
}

bool equivariance_holds(const QdetContext& ctx, const EquivariantHom& phi) {
    for (size_t g = 0; g < ctx.gens_A.size(); ++g)
        for (VarId v = 0; v < ctx.A.ring.n_vars(); ++v) {
            SuperPolynomial lhs = phi.hom(ctx.gens_A[g].var_images[static_cast<size_t>(v)]);
            SuperPolynomial rhs = ctx.gens_B[g](phi.hom(SuperPolynomial::variable(ctx.A.ring, v)));
            if (!(lhs == rhs)) return false;
        }
    return true;
}

std::map<int, GradedBasis> ideal_Ir(const QdetContext& ctx, const EquivariantHom& phi, int D) {
    std::map<int, GradedBasis> slices;
    for (int d = 0; d <= D; ++d) {
        DegreeSpace src = DegreeSpace::make(ctx.A.ring, d);
        // collect only the target monomials that actually appear
        std::map<Monomial, int, MonomialLess> target_index;
        std::vector<SparseVec> rows;
        rows.reserve(src.monomials.size());
        for (const Monomial& m : src.monomials) {
            SuperPolynomial img = phi.hom(SuperPolynomial::term(ctx.A.ring, m, GaussRat(1)));
            SparseVec row;
            row.reserve(img.terms().size());
            for (const auto& [tm, c] : img.terms()) {
                auto [it, inserted] = target_index.emplace(tm, static_cast<int>(target_index.size()));
                row.emplace_back(it->second, c);
            }
            std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
            rows.push_back(std::move(row));
        }
        std::vector<SparseVec> combos = left_kernel(rows);
        GradedBasis basis;
        basis.degree = d;
        for (const SparseVec& combo : combos) {
            SuperPolynomial f(ctx.A.ring);
            for (const auto& [idx, c] : combo) f.add_term(src.monomials[static_cast<size_t>(idx)], c);
            basis.vectors.push_back(std::move(f));
        }
        slices[d] = std::move(basis);
    }
    return slices;
}

std::vector<SuperPolynomial> rad_Ir_generators(const ARing& A, int r) {
    if (r < 0 || r >= A.n)
        throw std::invalid_argument("rad_Ir_generators: requires 0 <= r < n");
    std::vector<SuperPolynomial> gens;
    for (int i = 0; i < A.n; ++i)
        for (int j = 0; j < A.n; ++j) gens.push_back(SuperPolynomial::variable(A.ring, A.y(i, j)));
    // all (r+1)x(r+1) minors of the even coordinate matrix
    int k = r + 1;
    auto minor_det = [&](const std::vector<int>& rs, const std::vector<int>& cs) {
        SuperPolynomial det(A.ring);
        std::vector<int> perm(static_cast<size_t>(k));
        for (int t = 0; t < k; ++t) perm[static_cast<size_t>(t)] = t;
        do {
            int inv = 0;
            for (int s = 0; s < k; ++s)
                for (int t = s + 1; t < k; ++t)
                    if (perm[static_cast<size_t>(s)] > perm[static_cast<size_t>(t)]) ++inv;
            Monomial::Factors factors;
            for (int t = 0; t < k; ++t)
                factors.emplace_back(A.x(rs[static_cast<size_t>(t)], cs[static_cast<size_t>(perm[static_cast<size_t>(t)])]), 1);
            std::sort(factors.begin(), factors.end());
            // even variables never collide here: distinct rows force distinct ids
            det.add_term(Monomial(factors), GaussRat(inv % 2 ? -1 : 1));
        } while (std::next_permutation(perm.begin(), perm.end()));
        return det;
    };
    // iterate over k-subsets via sorted index vectors
    std::vector<std::vector<int>> all_subsets;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(cur.size()) == k) {
            all_subsets.push_back(cur);
            return;
        }
        for (int t = start; t < A.n; ++t) {
            cur.push_back(t);
            self(self, t + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    for (const auto& rs : all_subsets)
        for (const auto& cs : all_subsets) gens.push_back(minor_det(rs, cs));
    return gens;
}

bool RankLocusReport::conclusive() const {
    for (const MinorPowerWitness& w : minor_powers)
        if (!w.found) return false;
    return true;
}

bool RankLocusReport::ok() const { return inclusion_ok && conclusive(); }

RankLocusReport verify_rank_locus(const QdetContext& ctx, const EquivariantHom& phi, int D, int kmax) {
    RankLocusReport rep;
    rep.n = ctx.A.n;
    rep.r = phi.r;
    rep.max_degree = D;
    rep.kmax = kmax;
    std::vector<SuperPolynomial> rad = rad_Ir_generators(ctx.A, phi.r);
    std::map<int, GradedBasis> kernel = ideal_Ir(ctx, phi, D);
    for (int d = 1; d <= D; ++d) {
        const GradedBasis& piece = kernel[d];
        rep.kernel_dims.push_back(static_cast<int>(piece.dimension()));
        if (piece.vectors.empty()) continue;
        DegreeSpace space = DegreeSpace::make(ctx.A.ring, d);
        RowEchelon rad_ech;
        for (const SuperPolynomial& g : rad) {
            int dg = g.homogeneous_degree();
            if (dg > d) continue;
            for (const Monomial& m : enumerate_monomials(ctx.A.ring, d - dg)) {
                SuperPolynomial row = SuperPolynomial::term(ctx.A.ring, m, GaussRat(1)) * g;
                if (!row.is_zero()) rad_ech.add_row(space.vectorize(row));
            }
        }
        for (const SuperPolynomial& vec : piece.vectors) {
            ++rep.vectors_checked;
            if (!rad_ech.reduces_to_zero(space.vectorize(vec))) rep.inclusion_ok = false;
        }
    }
    // nilpotency of the minors modulo the kernel: phi(m)^k = phi(m^k)
    for (const SuperPolynomial& g : rad) {
        if (g.homogeneous_degree() == 1 && g.parity() == Parity::odd) continue;  // odd squares vanish
        MinorPowerWitness w;
        w.minor = g.str();
        SuperPolynomial img = phi.hom(g);
        if (img.is_zero()) {
            w.least_k = 1;
            w.found = true;
            w.in_ideal_at_1 = true;
        } else {
            SuperPolynomial pow = img;
            for (int k = 2; k <= kmax && !w.found; ++k) {
                pow *= img;
                if (pow.is_zero()) {
                    w.least_k = k;
                    w.found = true;
                }
            }
        }
        rep.minor_powers.push_back(std::move(w));
    }
    return rep;
}

namespace {

std::set<VarId> support_of(const SuperPolynomial& f) {
    std::set<VarId> vars;
    for (const auto& [m, c] : f.terms())
        for (const auto& [v, e] : m.factors()) vars.insert(v);
    return vars;
}

bool disjoint(const std::set<VarId>& a, const std::set<VarId>& b) {
    for (VarId v : a)
        if (b.count(v)) return false;
    return true;
}

}  // namespace

IntegralityReport integrality_check(const ARing& A, const std::vector<SuperDerivation>& gens, int trials,
                                    std::uint64_t seed) {
    if (A.n < 2) throw std::invalid_argument("integrality_check: needs n >= 2");
    IntegralityReport rep;
    rep.n = A.n;
    rep.seed = seed;
    rep.trials = trials;
    std::mt19937_64 rng(seed);
    auto random_element = [&]() {
        // small-support homogeneous element: one or two variables multiplied
        int deg = 1 + static_cast<int>(rng() % 2);
        SuperPolynomial f = SuperPolynomial::constant(A.ring, GaussRat(1));
        for (int t = 0; t < deg; ++t) {
            VarId v = static_cast<VarId>(rng() % static_cast<std::uint64_t>(A.ring.n_vars()));
            f *= SuperPolynomial::variable(A.ring, v);
        }
        return f;
    };
    for (int t = 0; t < trials; ++t) {
        SuperPolynomial f = random_element();
        while (f.is_zero()) f = random_element();  // an odd square may have vanished
        SuperPolynomial g = random_element();
        while (g.is_zero()) g = random_element();
        IntegralityWitness w;
        w.f = f.str();
        w.g = g.str();
        std::set<VarId> gsup = support_of(g);
        // breadth-first over generator applications until the support clears g
        std::vector<SuperPolynomial> frontier{f};
        bool found = false;
        for (int depth = 0; depth <= 6 && !found; ++depth) {
            for (const SuperPolynomial& h : frontier) {
                if (!h.is_zero() && disjoint(support_of(h), gsup)) {
                    w.moved = h.str();
                    w.depth = depth;
                    w.ok = !(h * g).is_zero();
                    found = true;
                    break;
                }
            }
            if (found) break;
            std::vector<SuperPolynomial> next;
            next.reserve(frontier.size() * gens.size());
            for (const SuperPolynomial& h : frontier)
                for (const SuperDerivation& dgen : gens) {
                    SuperPolynomial img = dgen(h);
                    if (!img.is_zero()) next.push_back(std::move(img));
                    if (next.size() > 400) break;
                }
            frontier = std::move(next);
        }
        if (!found) w.ok = false;
        rep.all_ok = rep.all_ok && w.ok;
        rep.witnesses.push_back(std::move(w));
    }
    return rep;
}

}  // namespace isomeric
