#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "isomeric/liealg.hpp"
#include "isomeric/superpoly.hpp"

namespace isomeric {

/// Target ring of the rank-restriction map: coordinates of the half tensor
/// products of (V, E) and (W, E*) with E of dimension r|r. Even u_ik, v_kj
/// and odd ut_ik, vt_kj for i,j in [n], k in [r].
struct BRing {
    int n, r;
    IsomericSpace E, Edual;  // the auxiliary r|r space and its dual
    SuperRing ring;
    PairLayout u_pair;  // (V, E) block
    PairLayout w_pair;  // (W, E*) block, W acting on the left

    BRing(int n, int r);
    BRing(const BRing&) = delete;
    BRing& operator=(const BRing&) = delete;

    VarId u(int i, int k) const { return u_pair.even_var(i, k); }
    VarId ut(int i, int k) const { return u_pair.odd_var(i, k); }
    VarId v(int k, int j) const { return w_pair.even_var(j, k); }
    VarId vt(int k, int j) const { return w_pair.odd_var(j, k); }
};

/// Rings plus the matched generator actions on both sides. The k-th entry of
/// gens_A and gens_B realize the same abstract generator.
struct QdetContext {
    ARing A;
    BRing B;
    std::vector<SuperDerivation> gens_A, gens_B;

    QdetContext(int n, int r);
    QdetContext(const QdetContext&) = delete;
    QdetContext& operator=(const QdetContext&) = delete;
};

/// The equivariant ring map A -> B with its solved constants. For r >= 1 the
/// four ansatz constants are determined by the equivariance system, whose
/// solution space must be exactly one-dimensional; the first nonzero
/// constant is normalized to 1. r = 0 is the zero map and carries
/// solution_dim = -1 (nothing to solve).
struct EquivariantHom {
    int n = 0, r = 0;
    int solution_dim = 0;
    std::vector<GaussRat> constants;  // (c_uv, c_utvt, c_uvt, c_utv)
    RingHom hom;

    SuperPolynomial operator()(const SuperPolynomial& f) const { return hom(f); }
};

EquivariantHom build_phi(const QdetContext& ctx);

/// Exact check phi . D_A = D_B . phi on every variable for every generator.
bool equivariance_holds(const QdetContext& ctx, const EquivariantHom& phi);

/// Degreewise kernel bases of phi for degrees 0..D.
std::map<int, GradedBasis> ideal_Ir(const QdetContext& ctx, const EquivariantHom& phi, int D);

/// Odd variables plus the (r+1)x(r+1) minors of the even coordinate matrix;
/// the classical generators of the radical. Requires r < n.
std::vector<SuperPolynomial> rad_Ir_generators(const ARing& A, int r);

struct MinorPowerWitness {
    std::string minor;
    int least_k = 0;       // least power with phi(minor)^k = 0, if found
    bool found = false;    // found within kmax
    bool in_ideal_at_1 = false;  // the minor itself already lies in the kernel
};

struct RankLocusReport {
    int n = 0, r = 0, max_degree = 0, kmax = 0;
    std::vector<int> kernel_dims;  // degrees 1..max_degree
    bool inclusion_ok = true;      // every kernel vector inside (minors + odd variables)
    int vectors_checked = 0;
    std::vector<MinorPowerWitness> minor_powers;

    bool conclusive() const;
    bool ok() const;
};

/// Both inclusions of the rank-locus description, degreewise up to D:
/// kernel vectors are members of the classical radical ideal, and each
/// (r+1)-minor has some power <= kmax falling into the kernel.
RankLocusReport verify_rank_locus(const QdetContext& ctx, const EquivariantHom& phi, int D, int kmax);

struct IntegralityWitness {
    std::string f, g, moved;  // moved: element of the module generated by f, support-disjoint from g
    int depth = 0;            // generator applications used
    bool ok = false;
};

struct IntegralityReport {
    int n = 0;
    std::uint64_t seed = 0;
    int trials = 0;
    bool all_ok = true;
    std::vector<IntegralityWitness> witnesses;
};

/// Desk-scale shadow of integrality: for random nonzero homogeneous f, g the
/// action moves f to an element with support disjoint from g, and the
/// product of the two is then nonzero.
IntegralityReport integrality_check(const ARing& A, const std::vector<SuperDerivation>& gens, int trials,
                                    std::uint64_t seed = 12345);

}  // namespace isomeric
