#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "isomeric/rational.hpp"
#include "isomeric/superpoly.hpp"

namespace isomeric {

/// Sparse vector over Q(i): (index, coefficient) pairs sorted by index,
/// coefficients nonzero.
using SparseVec = std::vector<std::pair<int, GaussRat>>;

SparseVec sparse_add_scaled(const SparseVec& a, const GaussRat& c, const SparseVec& b);  // a + c*b
SparseVec sparse_combine(const GaussRat& ca, const SparseVec& a, const GaussRat& cb,
                         const SparseVec& b);  // ca*a + cb*b
SparseVec sparse_scale(SparseVec v, const GaussRat& c);
bool sparse_is_zero(const SparseVec& v);
/// Scales so all entries are integers with no common factor. Keeps exactness
/// while letting eliminations run on small integers.
void make_primitive(SparseVec& v);

/// Incremental exact row echelon with deterministic pivoting: the pivot of a
/// row is its leftmost nonzero column; rows arriving later are reduced
/// against earlier pivots. Internally rows are kept primitive-integer and
/// eliminations cross-multiply; finalize() back-substitutes and rescales to
/// the unique reduced row-echelon basis of the row space, so bases are
/// reproducible regardless of insertion order.
class RowEchelon {
public:
    /// Returns true if the row enlarged the row space.
    bool add_row(SparseVec row);

    void finalize();

    int rank() const { return static_cast<int>(rows_.size()); }
    /// Pivot-sorted rows; reduced echelon after finalize().
    const std::vector<SparseVec>& rows() const { return rows_; }

    /// Remainder of v after eliminating all pivot columns.
    SparseVec reduce(SparseVec v) const;
    bool reduces_to_zero(const SparseVec& v) const { return sparse_is_zero(reduce(std::move(v))); }

    const std::map<int, int>& pivots() const { return pivot_row_; }

private:
    std::vector<SparseVec> rows_;
    std::map<int, int> pivot_row_;  // pivot column -> row index
    bool finalized_ = false;
};

/// Basis of {x : R x = 0} for the matrix whose rows are given; columns are
/// 0..ncols-1. Canonical: reduced echelon + one basis vector per free column
/// in ascending column order.
std::vector<SparseVec> null_space(const std::vector<SparseVec>& rows, int ncols);

/// Same, from an echelon the caller filled row by row (finalizes it).
std::vector<SparseVec> null_space_of(RowEchelon& ech, int ncols);

/// Machine-integer fast path for null_space: exact fraction-free elimination
/// over int64 with overflow guards. Returns nullopt when the input has
/// non-integer or oversized entries or an intermediate would overflow; the
/// caller then falls back to the arbitrary-precision route. When it returns,
/// the basis is identical to null_space(rows, ncols).
std::optional<std::vector<SparseVec>> null_space_int64(const std::vector<SparseVec>& rows, int ncols);

/// Basis of the left kernel: combinations c with sum_i c_i row_i = 0,
/// canonical in the same sense.
std::vector<SparseVec> left_kernel(const std::vector<SparseVec>& rows);

/// Canonical coordinates on the degree-d graded piece of a ring: monomials in
/// canonical order with their positions.
struct DegreeSpace {
    const SuperRing* ring = nullptr;
    int degree = 0;
    std::vector<Monomial> monomials;
    std::map<Monomial, int, MonomialLess> index;

    static DegreeSpace make(const SuperRing& ring, int d);

    int dim() const { return static_cast<int>(monomials.size()); }
    SparseVec vectorize(const SuperPolynomial& f) const;
    SuperPolynomial polynomial(const SparseVec& v) const;
};

/// RREF basis of the span of the given homogeneous polynomials.
GradedBasis span_basis(const std::vector<SuperPolynomial>& vecs, const DegreeSpace& space);

}  // namespace isomeric
