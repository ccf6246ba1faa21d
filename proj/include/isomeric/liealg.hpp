#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "isomeric/linalg.hpp"
#include "isomeric/partition.hpp"
#include "isomeric/superpoly.hpp"
#include "isomeric/symfunc.hpp"

namespace isomeric {

/// An isomeric vector space of dimension n|n with its odd structure map:
/// basis e_1..e_n (even), f_1..f_n (odd), alpha(e_i) = f_i, alpha(f_i) = e_i.
/// Purely a naming carrier; all computations run through the coordinate
/// transport below.
struct IsomericSpace {
    int n = 0;
    std::string label;  // "V", "W", "E", ...
};

/// Coordinate block of a half tensor product inside a ring: the even
/// variable at slot (i,k) is even_base + i*stride_l + k*stride_r, and the
/// odd partner sits at the same offset from odd_base.
struct PairLayout {
    int nl = 0, nr = 0;  // left and right dimensions
    VarId even_base = 0, odd_base = 0;
    int stride_l = 0, stride_r = 0;

    VarId even_var(int i, int k) const { return even_base + i * stride_l + k * stride_r; }
    VarId odd_var(int i, int k) const { return odd_base + i * stride_l + k * stride_r; }
};

enum class Side { left, right };
enum class GenKind { diag, off };  // diag = even matrix unit pair, off = odd one

/// Parity-graded derivation of a super ring, determined by variable images.
struct SuperDerivation {
    const SuperRing* ring = nullptr;
    Parity parity = Parity::even;
    std::string label;
    std::vector<SuperPolynomial> var_images;  // indexed by VarId

    /// Graded Leibniz extension to the whole ring.
    SuperPolynomial operator()(const SuperPolynomial& f) const;
};

/// Graded commutator [d1, d2] as a derivation (restriction to variables).
SuperDerivation bracket(const SuperDerivation& d1, const SuperDerivation& d2);

/// Transports one standard generator of the isomeric algebra acting on the
/// named factor of a half tensor product to a derivation of the ambient
/// ring. kind=diag is the even matrix unit E_ab (e_b -> e_a, f_b -> f_a);
/// kind=off is the odd unit F_ab (e_b -> -f_a, f_b -> e_a). Every transport
/// re-derives the eigenbasis and verifies (alpha x beta)^2 = -1 and the
/// zeta_4 eigenvalue equations; a failure throws, signalling a broken sign
/// convention.
SuperDerivation transport_generator(const SuperRing& ring, const PairLayout& pair, Side side,
                                    GenKind kind, int a, int b, const std::string& label);

/// The rank-n coordinate ring: n^2 even variables x_ij and n^2 odd y_ij,
/// realized as the half tensor product of two rank-n isomeric spaces.
struct ARing {
    int n;
    IsomericSpace V, W;
    SuperRing ring;
    PairLayout pair;

    explicit ARing(int n);
    ARing(const ARing&) = delete;
    ARing& operator=(const ARing&) = delete;

    VarId x(int i, int j) const { return pair.even_var(i, j); }
    VarId y(int i, int j) const { return pair.odd_var(i, j); }

    /// (row sums, column sums) of the exponent matrix of m: the torus weight.
    std::pair<std::vector<int>, std::vector<int>> weight(const Monomial& m) const;
};

/// The 4n^2 generator derivations of the product action on the rank-n ring:
/// left even/odd matrix units then right even/odd units, in a fixed order.
std::vector<SuperDerivation> q_generators(const ARing& A);

/// Sparse operator on a graded piece; column j holds the coordinates of the
/// image of the j-th canonical monomial.
struct OpMatrix {
    std::vector<SparseVec> columns;

    SparseVec apply(const SparseVec& v) const;
};

OpMatrix matrix_of(const SuperDerivation& d, const DegreeSpace& space);

struct CommutantBasis {
    DegreeSpace space;
    std::vector<OpMatrix> elements;

    int dim() const { return static_cast<int>(elements.size()); }
};

/// Basis of the parity-even operators on the degree-d piece commuting with
/// every generator. Unknowns are restricted to cells that preserve torus
/// weight and parity (forced for any solution); the system is solved exactly.
CommutantBasis commutant_basis(const ARing& A, const std::vector<SuperDerivation>& gens, int d);

struct IsotypicComponent {
    StrictPartition label;
    int degree = 0;
    GradedBasis basis;
    Int expected_dim;
    long eigenvalue = 0;
    bool labeled_by_weight_fallback = false;
};

struct IsotypicReport {
    int n = 0;
    int degree = 0;
    std::uint64_t seed = 0;
    int commutant_dim = 0;
    int retries = 0;
    std::vector<IsotypicComponent> components;
};

/// Splits the degree-d piece into eigenspaces of a generic integer
/// combination of the commutant basis (seeded; retried with fresh
/// randomness until the eigenvalues are distinct integers and the
/// eigenspaces fill the whole piece). Components are labeled by matching
/// dimensions against 2^{-delta} t_dim^2 over strict partitions of d with
/// at most n rows; on a dimension collision the extreme-weight fallback
/// labels them and is flagged in the result. Every component is verified
/// stable under all generators.
IsotypicReport isotypic_decomposition(const ARing& A, const std::vector<SuperDerivation>& gens, int d,
                                      std::uint64_t seed = 12345);

/// Degreewise bases, up to degree D, of the ideal generated by the lambda
/// isotypic component of degree |lambda|. When l(lambda) > n the component
/// is zero and so is the ideal.
std::map<int, GradedBasis> ideal_from_component(const ARing& A, const std::vector<SuperDerivation>& gens,
                                                const StrictPartition& lambda, int D,
                                                std::uint64_t seed = 12345);

}  // namespace isomeric
