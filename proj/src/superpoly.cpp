#include "isomeric/superpoly.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "isomeric/linalg.hpp"

namespace isomeric {

SuperRing::SuperRing(std::vector<std::string> even_names, std::vector<std::string> odd_names)
    : names_(std::move(even_names)), n_even_(static_cast<int>(names_.size())) {
    names_.insert(names_.end(), odd_names.begin(), odd_names.end());
    std::set<std::string> seen(names_.begin(), names_.end());
    if (seen.size() != names_.size()) throw std::invalid_argument("SuperRing: variable labels must be distinct");
}

Monomial::Monomial(Factors factors) : factors_(std::move(factors)) {
    for (size_t i = 0; i < factors_.size(); ++i) {
        if (factors_[i].second <= 0) throw std::invalid_argument("Monomial: exponents must be positive");
        if (i + 1 < factors_.size() && factors_[i].first >= factors_[i + 1].first)
            throw std::invalid_argument("Monomial: factors must be sorted by variable");
    }
}

int Monomial::degree() const {
    int d = 0;
    for (const auto& [v, e] : factors_) d += e;
    return d;
}

int Monomial::exponent(VarId v) const {
    for (const auto& [w, e] : factors_)
        if (w == v) return e;
    return 0;
}

int Monomial::odd_count(const SuperRing& ring) const {
    int k = 0;
    for (const auto& [v, e] : factors_)
        if (ring.is_odd(v)) k += e;
    return k;
}

Parity Monomial::parity(const SuperRing& ring) const {
    return odd_count(ring) % 2 ? Parity::odd : Parity::even;
}

std::string Monomial::str(const SuperRing& ring) const {
    if (factors_.empty()) return "1";
    std::string out;
    for (const auto& [v, e] : factors_) {
        if (!out.empty()) out += '*';
        out += ring.var_name(v);
        if (e > 1) out += "^" + std::to_string(e);
    }
    return out;
}

bool monomial_before(const Monomial& a, const Monomial& b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da > db;
    auto ia = a.factors().begin(), ea = a.factors().end();
    auto ib = b.factors().begin(), eb = b.factors().end();
    while (ia != ea && ib != eb) {
        if (ia->first != ib->first) return ia->first < ib->first;  // earlier variable present wins
        if (ia->second != ib->second) return ia->second > ib->second;
        ++ia;
        ++ib;
    }
    return ib != eb;  // a exhausted first: a had larger exponents earlier
}

std::optional<std::pair<Monomial, int>> multiply_monomials(const SuperRing& ring, const Monomial& a,
                                                           const Monomial& b) {
    Monomial::Factors out;
    out.reserve(a.factors().size() + b.factors().size());
    int odd_a_remaining = 0;
    for (const auto& [v, e] : a.factors())
        if (ring.is_odd(v)) ++odd_a_remaining;
    int inversions = 0;
    auto ia = a.factors().begin(), ea = a.factors().end();
    auto ib = b.factors().begin(), eb = b.factors().end();
    while (ia != ea || ib != eb) {
        if (ib == eb || (ia != ea && ia->first < ib->first)) {
            if (ring.is_odd(ia->first)) --odd_a_remaining;
            out.push_back(*ia++);
        } else if (ia == ea || ib->first < ia->first) {
            // a b-letter jumps over every odd a-letter still pending
            if (ring.is_odd(ib->first)) inversions += odd_a_remaining;
            out.push_back(*ib++);
        } else {  // same variable
            if (ring.is_odd(ia->first)) return std::nullopt;  // odd square vanishes
            out.emplace_back(ia->first, ia->second + ib->second);
            ++ia;
            ++ib;
        }
    }
    return std::make_pair(Monomial(std::move(out)), inversions % 2 ? -1 : 1);
}

SuperPolynomial SuperPolynomial::constant(const SuperRing& ring, GaussRat c) {
    SuperPolynomial p(ring);
    p.add_term(Monomial{}, std::move(c));
    return p;
}

SuperPolynomial SuperPolynomial::variable(const SuperRing& ring, VarId v) {
    SuperPolynomial p(ring);
    p.add_term(Monomial::var(v), GaussRat(1));
    return p;
}

SuperPolynomial SuperPolynomial::term(const SuperRing& ring, Monomial m, GaussRat c) {
    SuperPolynomial p(ring);
    p.add_term(std::move(m), std::move(c));
    return p;
}

GaussRat SuperPolynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? GaussRat() : it->second;
}

void SuperPolynomial::add_term(Monomial m, GaussRat c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(std::move(m), std::move(c));
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

SuperPolynomial& SuperPolynomial::operator+=(const SuperPolynomial& o) {
    if (o.ring_ != ring_) throw std::invalid_argument("SuperPolynomial: ring mismatch");
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

SuperPolynomial& SuperPolynomial::operator-=(const SuperPolynomial& o) {
    if (o.ring_ != ring_) throw std::invalid_argument("SuperPolynomial: ring mismatch");
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

SuperPolynomial operator*(const SuperPolynomial& a, const SuperPolynomial& b) {
    if (a.ring_ != b.ring_) throw std::invalid_argument("SuperPolynomial: ring mismatch");
    SuperPolynomial out(*a.ring_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            auto prod = multiply_monomials(*a.ring_, ma, mb);
            if (!prod) continue;
            GaussRat c = ca * cb;
            if (prod->second < 0) c = -c;
            out.add_term(std::move(prod->first), std::move(c));
        }
    return out;
}

SuperPolynomial& SuperPolynomial::operator*=(const GaussRat& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

SuperPolynomial SuperPolynomial::operator-() const {
    SuperPolynomial out(*ring_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

bool operator==(const SuperPolynomial& a, const SuperPolynomial& b) {
    return a.ring_ == b.ring_ && a.terms_ == b.terms_;
}

SuperPolynomial SuperPolynomial::pow(int e) const {
    if (e < 0) throw std::invalid_argument("SuperPolynomial::pow: negative exponent");
    SuperPolynomial out = constant(*ring_, GaussRat(1));
    for (int k = 0; k < e; ++k) out *= *this;
    return out;
}

SuperPolynomial multiply(const SuperPolynomial& f, const SuperPolynomial& g) { return f * g; }

int SuperPolynomial::degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

bool SuperPolynomial::is_homogeneous() const {
    int d = -1;
    for (const auto& [m, c] : terms_) {
        if (d == -1)
            d = m.degree();
        else if (m.degree() != d)
            return false;
    }
    return true;
}

int SuperPolynomial::homogeneous_degree() const {
    if (!is_homogeneous()) throw std::invalid_argument("SuperPolynomial: not homogeneous");
    return is_zero() ? 0 : terms_.begin()->first.degree();
}

bool SuperPolynomial::is_parity_homogeneous() const {
    if (terms_.empty()) return true;
    Parity p = terms_.begin()->first.parity(*ring_);
    for (const auto& [m, c] : terms_)
        if (m.parity(*ring_) != p) return false;
    return true;
}

Parity SuperPolynomial::parity() const {
    if (!is_parity_homogeneous()) throw std::invalid_argument("SuperPolynomial: mixed parity");
    return terms_.empty() ? Parity::even : terms_.begin()->first.parity(*ring_);
}

std::string SuperPolynomial::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
        // pull a display sign out front so terms read "a - b" rather than "a + -b"
        bool neg = c.re != 0 ? c.re < 0 : c.im < 0;
        GaussRat mag = neg ? -c : c;
        std::string coef = to_string(mag);
        if (!out.empty())
            out += neg ? " - " : " + ";
        else if (neg)
            out += "-";
        if (m.is_one())
            out += coef;
        else if (mag == GaussRat(1))
            out += m.str(*ring_);
        else
            out += coef + "*" + m.str(*ring_);
    }
    return out;
}

namespace {

void enumerate_even_rec(const SuperRing& ring, int var, int remaining, Monomial::Factors& acc,
                        const Monomial::Factors& odd_tail, std::vector<Monomial>& out) {
    if (var == ring.n_even()) {
        if (remaining == 0) {
            Monomial::Factors full = acc;
            full.insert(full.end(), odd_tail.begin(), odd_tail.end());
            out.emplace_back(std::move(full));
        }
        return;
    }
    for (int e = remaining; e >= 1; --e) {
        acc.emplace_back(var, e);
        enumerate_even_rec(ring, var + 1, remaining - e, acc, odd_tail, out);
        acc.pop_back();
    }
    enumerate_even_rec(ring, var + 1, remaining, acc, odd_tail, out);  // exponent 0
}

void enumerate_odd_rec(const SuperRing& ring, int var, int remaining, Monomial::Factors& odd_acc,
                       std::vector<Monomial::Factors>& out) {
    if (remaining == 0) {
        out.push_back(odd_acc);
        return;
    }
    if (var >= ring.n_vars() || ring.n_vars() - var < remaining) return;
    odd_acc.emplace_back(var, 1);
    enumerate_odd_rec(ring, var + 1, remaining - 1, odd_acc, out);
    odd_acc.pop_back();
    enumerate_odd_rec(ring, var + 1, remaining, odd_acc, out);
}

}  // namespace

std::vector<Monomial> enumerate_monomials(const SuperRing& ring, int d) {
    if (d < 0) throw std::invalid_argument("enumerate_monomials: d must be nonnegative");
    std::vector<Monomial> out;
    for (int k = std::min(d, ring.n_odd()); k >= 0; --k) {
        std::vector<Monomial::Factors> odd_parts;
        Monomial::Factors odd_acc;
        enumerate_odd_rec(ring, ring.n_even(), k, odd_acc, odd_parts);
        int even_deg = d - k;
        for (const auto& odd_tail : odd_parts) {
            if (ring.n_even() == 0) {
                if (even_deg == 0) out.emplace_back(odd_tail);
                continue;
            }
            Monomial::Factors acc;
            enumerate_even_rec(ring, 0, even_deg, acc, odd_tail, out);
        }
    }
    std::sort(out.begin(), out.end(), MonomialLess{});
    return out;
}

GradedBasis monomial_basis(const SuperRing& ring, int d) {
    GradedBasis basis;
    basis.degree = d;
    for (const Monomial& m : enumerate_monomials(ring, d))
        basis.vectors.push_back(SuperPolynomial::term(ring, m, GaussRat(1)));
    return basis;
}

GradedBasis ideal_degree_basis(const std::vector<SuperPolynomial>& gens, int d) {
    GradedBasis basis;
    basis.degree = d;
    if (gens.empty()) return basis;
    const SuperRing& ring = gens.front().ring();
    DegreeSpace space = DegreeSpace::make(ring, d);
    RowEchelon ech;
    for (const SuperPolynomial& g : gens) {
        if (&g.ring() != &ring) throw std::invalid_argument("ideal_degree_basis: ring mismatch");
        if (!g.is_homogeneous()) throw std::invalid_argument("ideal_degree_basis: inhomogeneous generator");
        if (g.is_zero()) continue;
        int dg = g.homogeneous_degree();
        if (dg > d) continue;  // contributes nothing in this degree
        for (const Monomial& m : enumerate_monomials(ring, d - dg)) {
            SuperPolynomial row = SuperPolynomial::term(ring, m, GaussRat(1)) * g;
            if (!row.is_zero()) ech.add_row(space.vectorize(row));
        }
    }
    ech.finalize();
    for (const SparseVec& row : ech.rows()) basis.vectors.push_back(space.polynomial(row));
    return basis;
}

bool membership(const SuperPolynomial& f, const std::vector<SuperPolynomial>& gens) {
    if (!f.is_homogeneous()) throw std::invalid_argument("membership: inhomogeneous element");
    if (f.is_zero()) return true;
    GradedBasis basis = ideal_degree_basis(gens, f.homogeneous_degree());
    DegreeSpace space = DegreeSpace::make(f.ring(), f.homogeneous_degree());
    RowEchelon ech;
    for (const SuperPolynomial& b : basis.vectors) ech.add_row(space.vectorize(b));
    return ech.reduces_to_zero(space.vectorize(f));
}

RingHom::RingHom(const SuperRing& src, const SuperRing& dst, std::vector<SuperPolynomial> images)
    : src_(&src), dst_(&dst), images_(std::move(images)) {
    if (static_cast<int>(images_.size()) != src.n_vars())
        throw std::invalid_argument("RingHom: need one image per source variable");
    for (VarId v = 0; v < src.n_vars(); ++v) {
        const SuperPolynomial& im = images_[static_cast<size_t>(v)];
        if (&im.ring() != dst_) throw std::invalid_argument("RingHom: image in wrong ring");
        if (im.is_zero()) continue;
        if (!im.is_homogeneous()) throw std::invalid_argument("RingHom: image must be homogeneous");
        if (!im.is_parity_homogeneous() || im.parity() != src.parity(v))
            throw std::invalid_argument("RingHom: image parity must match the variable");
    }
}

SuperPolynomial RingHom::operator()(const SuperPolynomial& f) const {
    if (&f.ring() != src_) throw std::invalid_argument("RingHom: argument in wrong ring");
    SuperPolynomial out(*dst_);
    for (const auto& [m, c] : f.terms()) {
        SuperPolynomial prod = SuperPolynomial::constant(*dst_, c);
        for (const auto& [v, e] : m.factors()) {
            for (int k = 0; k < e && !prod.is_zero(); ++k) prod *= images_[static_cast<size_t>(v)];
        }
        out += prod;
    }
    return out;
}

}  // namespace isomeric
