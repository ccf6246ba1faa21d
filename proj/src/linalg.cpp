#include "isomeric/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace isomeric {

SparseVec sparse_add_scaled(const SparseVec& a, const GaussRat& c, const SparseVec& b) {
    if (c.is_zero()) return a;
    SparseVec out;
    out.reserve(a.size() + b.size());
    auto ia = a.begin(), ib = b.begin();
    while (ia != a.end() || ib != b.end()) {
        if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
            out.push_back(*ia++);
        } else if (ia == a.end() || ib->first < ia->first) {
            out.emplace_back(ib->first, c * ib->second);
            ++ib;
        } else {
            GaussRat v = ia->second + c * ib->second;
            if (!v.is_zero()) out.emplace_back(ia->first, std::move(v));
            ++ia;
            ++ib;
        }
    }
    return out;
}

SparseVec sparse_combine(const GaussRat& ca, const SparseVec& a, const GaussRat& cb, const SparseVec& b) {
    SparseVec out;
    out.reserve(a.size() + b.size());
    auto ia = a.begin(), ib = b.begin();
    while (ia != a.end() || ib != b.end()) {
        if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
            out.emplace_back(ia->first, ca * ia->second);
            ++ia;
        } else if (ia == a.end() || ib->first < ia->first) {
            out.emplace_back(ib->first, cb * ib->second);
            ++ib;
        } else {
            GaussRat v = ca * ia->second + cb * ib->second;
            if (!v.is_zero()) out.emplace_back(ia->first, std::move(v));
            ++ia;
            ++ib;
        }
    }
    return out;
}

SparseVec sparse_scale(SparseVec v, const GaussRat& c) {
    if (c.is_zero()) return {};
    for (auto& [i, x] : v) x *= c;
    return v;
}

bool sparse_is_zero(const SparseVec& v) { return v.empty(); }

void make_primitive(SparseVec& v) {
    if (v.empty()) return;
    Int den_lcm = 1;
    for (const auto& [i, c] : v) {
        Int d = c.re.get_den();
        den_lcm = den_lcm / gcd(den_lcm, d) * d;
        if (c.im != 0) {
            d = c.im.get_den();
            den_lcm = den_lcm / gcd(den_lcm, d) * d;
        }
    }
    Int num_gcd = 0;
    for (const auto& [i, c] : v) {
        if (c.re != 0) num_gcd = gcd(num_gcd, Int(c.re.get_num() * (den_lcm / c.re.get_den())));
        if (c.im != 0) num_gcd = gcd(num_gcd, Int(c.im.get_num() * (den_lcm / c.im.get_den())));
        if (num_gcd == 1 && den_lcm == 1) return;
    }
    GaussRat scale{Rat(den_lcm) / Rat(num_gcd), Rat(0)};
    if (scale == GaussRat(1)) return;
    for (auto& [i, c] : v) c *= scale;
}

bool RowEchelon::add_row(SparseVec row) {
    finalized_ = false;
    make_primitive(row);
    while (!row.empty()) {
        auto it = pivot_row_.find(row.front().first);
        if (it == pivot_row_.end()) {
            pivot_row_.emplace(row.front().first, static_cast<int>(rows_.size()));
            rows_.push_back(std::move(row));
            return true;
        }
        const SparseVec& pivot = rows_[static_cast<size_t>(it->second)];
        // integer cross-elimination: pivot_lead * row - row_lead * pivot
        row = sparse_combine(pivot.front().second, row, -row.front().second, pivot);
        make_primitive(row);
    }
    return false;
}

void RowEchelon::finalize() {
    if (finalized_) return;
    // eliminate pivot columns from all other rows, working right to left
    std::vector<std::pair<int, int>> by_pivot(pivot_row_.begin(), pivot_row_.end());
    for (auto it = by_pivot.rbegin(); it != by_pivot.rend(); ++it) {
        const auto [col, ridx] = *it;
        const SparseVec& pivot = rows_[static_cast<size_t>(ridx)];
        for (auto& [c2, r2] : pivot_row_) {
            if (r2 == ridx) continue;
            SparseVec& row = rows_[static_cast<size_t>(r2)];
            auto hit = std::lower_bound(row.begin(), row.end(), col,
                                        [](const auto& p, int c) { return p.first < c; });
            if (hit != row.end() && hit->first == col) {
                row = sparse_combine(pivot.front().second, row, -hit->second, pivot);
                make_primitive(row);
            }
        }
    }
    // store rows sorted by pivot column, rescaled to leading coefficient 1
    std::vector<SparseVec> sorted;
    sorted.reserve(rows_.size());
    std::map<int, int> new_pivots;
    for (const auto& [col, ridx] : by_pivot) {
        new_pivots.emplace(col, static_cast<int>(sorted.size()));
        SparseVec row = std::move(rows_[static_cast<size_t>(ridx)]);
        row = sparse_scale(std::move(row), row.front().second.inverse());
        sorted.push_back(std::move(row));
    }
    rows_ = std::move(sorted);
    pivot_row_ = std::move(new_pivots);
    finalized_ = true;
}

SparseVec RowEchelon::reduce(SparseVec v) const {
    // Eliminating a pivot column only introduces entries to its right, so a
    // single left-to-right sweep clears every pivot column from v.
    size_t i = 0;
    while (i < v.size()) {
        auto it = pivot_row_.find(v[i].first);
        if (it == pivot_row_.end()) {
            ++i;
            continue;
        }
        const SparseVec& pivot = rows_[static_cast<size_t>(it->second)];
        v = sparse_add_scaled(v, -(v[i].second / pivot.front().second), pivot);
    }
    return v;
}

std::vector<SparseVec> null_space(const std::vector<SparseVec>& rows, int ncols) {
    RowEchelon ech;
    for (const SparseVec& r : rows) ech.add_row(r);
    return null_space_of(ech, ncols);
}

std::vector<SparseVec> null_space_of(RowEchelon& ech, int ncols) {
    ech.finalize();
    std::vector<SparseVec> basis;
    const auto& pivots = ech.pivots();
    for (int col = 0; col < ncols; ++col) {
        if (pivots.count(col)) continue;
        // free column: x[col] = 1, pivot entries forced
        SparseVec x{{col, GaussRat(1)}};
        for (const auto& [pcol, ridx] : pivots) {
            const SparseVec& row = ech.rows()[static_cast<size_t>(ridx)];
            auto hit = std::lower_bound(row.begin(), row.end(), col,
                                        [](const auto& p, int c) { return p.first < c; });
            if (hit != row.end() && hit->first == col) x.emplace_back(pcol, -hit->second);
        }
        std::sort(x.begin(), x.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        basis.push_back(std::move(x));
    }
    return basis;
}

std::vector<SparseVec> left_kernel(const std::vector<SparseVec>& rows) {
    // Augmented elimination: carry the combination alongside each row; rows
    // whose body cancels yield kernel combinations.
    struct AugRow {
        SparseVec body, tag;
    };
    std::vector<AugRow> pivots;
    std::map<int, int> pivot_of_col;
    std::vector<SparseVec> kernel_rows;
    for (size_t i = 0; i < rows.size(); ++i) {
        AugRow cur{rows[i], {{static_cast<int>(i), GaussRat(1)}}};
        while (!cur.body.empty()) {
            auto it = pivot_of_col.find(cur.body.front().first);
            if (it == pivot_of_col.end()) break;
            const AugRow& p = pivots[static_cast<size_t>(it->second)];
            GaussRat c = -cur.body.front().second;
            cur.body = sparse_add_scaled(cur.body, c, p.body);
            cur.tag = sparse_add_scaled(cur.tag, c, p.tag);
        }
        if (cur.body.empty()) {
            kernel_rows.push_back(std::move(cur.tag));
        } else {
            GaussRat inv = cur.body.front().second.inverse();
            cur.body = sparse_scale(std::move(cur.body), inv);
            cur.tag = sparse_scale(std::move(cur.tag), inv);
            pivot_of_col.emplace(cur.body.front().first, static_cast<int>(pivots.size()));
            pivots.push_back(std::move(cur));
        }
    }
    RowEchelon canon;
    for (SparseVec& k : kernel_rows) canon.add_row(std::move(k));
    canon.finalize();
    return canon.rows();
}

namespace {

using I64Row = std::vector<std::pair<int, long long>>;

constexpr long long kOverflowGuard = 1LL << 62;

// content-strip and overflow-check a row built with __int128 arithmetic
bool normalize_i64(std::vector<std::pair<int, __int128>>& wide, I64Row& out) {
    __int128 g = 0;
    for (const auto& [i, v] : wide) {
        __int128 a = v < 0 ? -v : v;
        while (a != 0) {
            __int128 t = g % a;
            g = a;
            a = t;
        }
        if (g == 1) break;
    }
    if (g == 0) {
        out.clear();
        return true;
    }
    out.clear();
    out.reserve(wide.size());
    for (const auto& [i, v] : wide) {
        __int128 q = v / g;
        if (q > kOverflowGuard || q < -kOverflowGuard) return false;
        out.emplace_back(i, static_cast<long long>(q));
    }
    return true;
}

// pl*row - rl*pivot, content-stripped; false on overflow
bool combine_i64(long long pl, const I64Row& row, long long rl, const I64Row& pivot, I64Row& out) {
    std::vector<std::pair<int, __int128>> wide;
    wide.reserve(row.size() + pivot.size());
    auto ia = row.begin(), ib = pivot.begin();
    __int128 PL = pl, RL = rl;
    while (ia != row.end() || ib != pivot.end()) {
        if (ib == pivot.end() || (ia != row.end() && ia->first < ib->first)) {
            wide.emplace_back(ia->first, PL * ia->second);
            ++ia;
        } else if (ia == row.end() || ib->first < ia->first) {
            wide.emplace_back(ib->first, -RL * ib->second);
            ++ib;
        } else {
            __int128 v = PL * ia->second - RL * ib->second;
            if (v != 0) wide.emplace_back(ia->first, v);
            ++ia;
            ++ib;
        }
    }
    return normalize_i64(wide, out);
}

}  // namespace

std::optional<std::vector<SparseVec>> null_space_int64(const std::vector<SparseVec>& rows, int ncols) {
    // convert, rejecting anything non-integral or large
    std::vector<I64Row> input;
    input.reserve(rows.size());
    for (const SparseVec& r : rows) {
        I64Row row;
        row.reserve(r.size());
        for (const auto& [i, c] : r) {
            if (c.im != 0 || !is_integral(c.re)) return std::nullopt;
            if (!c.re.get_num().fits_slong_p()) return std::nullopt;
            long v = c.re.get_num().get_si();
            if (v > (1L << 40) || v < -(1L << 40)) return std::nullopt;
            row.emplace_back(i, static_cast<long long>(v));
        }
        input.push_back(std::move(row));
    }
    // incremental echelon
    std::vector<I64Row> pivots;
    std::map<int, int> pivot_of;
    I64Row scratch;
    for (I64Row& row : input) {
        while (!row.empty()) {
            auto it = pivot_of.find(row.front().first);
            if (it == pivot_of.end()) break;
            const I64Row& p = pivots[static_cast<size_t>(it->second)];
            if (!combine_i64(p.front().second, row, row.front().second, p, scratch)) return std::nullopt;
            row.swap(scratch);
        }
        if (!row.empty()) {
            pivot_of.emplace(row.front().first, static_cast<int>(pivots.size()));
            pivots.push_back(std::move(row));
        }
    }
    // back-substitution to reduced echelon
    for (auto it = pivot_of.rbegin(); it != pivot_of.rend(); ++it) {
        const I64Row& p = pivots[static_cast<size_t>(it->second)];
        for (auto& [c2, r2] : pivot_of) {
            if (r2 == it->second) continue;
            I64Row& row = pivots[static_cast<size_t>(r2)];
            auto hit = std::lower_bound(row.begin(), row.end(), it->first,
                                        [](const auto& e, int c) { return e.first < c; });
            if (hit != row.end() && hit->first == it->first) {
                if (!combine_i64(p.front().second, row, hit->second, p, scratch)) return std::nullopt;
                row.swap(scratch);
            }
        }
    }
    // free-column basis, normalized exactly as the arbitrary-precision route
    std::vector<SparseVec> basis;
    for (int col = 0; col < ncols; ++col) {
        if (pivot_of.count(col)) continue;
        SparseVec x{{col, GaussRat(1)}};
        for (const auto& [pcol, ridx] : pivot_of) {
            const I64Row& row = pivots[static_cast<size_t>(ridx)];
            auto hit = std::lower_bound(row.begin(), row.end(), col,
                                        [](const auto& e, int c) { return e.first < c; });
            if (hit != row.end() && hit->first == col) {
                long long num = -hit->second, den = row.front().second;
                if (den < 0) {
                    num = -num;
                    den = -den;
                }
                Rat val(static_cast<long>(num), static_cast<unsigned long>(den));
                val.canonicalize();
                x.emplace_back(pcol, GaussRat(val));
            }
        }
        std::sort(x.begin(), x.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        basis.push_back(std::move(x));
    }
    return basis;
}

DegreeSpace DegreeSpace::make(const SuperRing& ring, int d) {
    DegreeSpace space;
    space.ring = &ring;
    space.degree = d;
    space.monomials = enumerate_monomials(ring, d);
    for (size_t i = 0; i < space.monomials.size(); ++i)
        space.index.emplace(space.monomials[i], static_cast<int>(i));
    return space;
}

SparseVec DegreeSpace::vectorize(const SuperPolynomial& f) const {
    SparseVec v;
    v.reserve(f.terms().size());
    for (const auto& [m, c] : f.terms()) {
        auto it = index.find(m);
        if (it == index.end())
            throw std::invalid_argument("DegreeSpace::vectorize: monomial of wrong degree");
        v.emplace_back(it->second, c);
    }
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return v;
}

SuperPolynomial DegreeSpace::polynomial(const SparseVec& v) const {
    SuperPolynomial f(*ring);
    for (const auto& [i, c] : v) f.add_term(monomials[static_cast<size_t>(i)], c);
    return f;
}

GradedBasis span_basis(const std::vector<SuperPolynomial>& vecs, const DegreeSpace& space) {
    RowEchelon ech;
    for (const SuperPolynomial& f : vecs)
        if (!f.is_zero()) ech.add_row(space.vectorize(f));
    ech.finalize();
    GradedBasis basis;
    basis.degree = space.degree;
    for (const SparseVec& row : ech.rows()) basis.vectors.push_back(space.polynomial(row));
    return basis;
}

}  // namespace isomeric
