#include "isomeric/symfunc.hpp"

#include <algorithm>
#include <stdexcept>

namespace isomeric {

SymPolynomial SymPolynomial::constant(int nvars, const Rat& c) {
    SymPolynomial p(nvars);
    p.add_term(Exponents(static_cast<size_t>(nvars), 0), c);
    return p;
}

Rat SymPolynomial::coefficient(const Exponents& e) const {
    auto it = coeffs_.find(e);
    return it == coeffs_.end() ? Rat(0) : it->second;
}

void SymPolynomial::add_term(const Exponents& e, const Rat& c) {
    if (static_cast<int>(e.size()) != nvars_)
        throw std::invalid_argument("SymPolynomial: exponent vector has wrong length");
    if (c == 0) return;
    auto [it, inserted] = coeffs_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) coeffs_.erase(it);
    }
}

SymPolynomial& SymPolynomial::operator+=(const SymPolynomial& o) {
    if (o.nvars_ != nvars_) throw std::invalid_argument("SymPolynomial: variable count mismatch");
    for (const auto& [e, c] : o.coeffs_) add_term(e, c);
    return *this;
}

SymPolynomial& SymPolynomial::operator-=(const SymPolynomial& o) {
    if (o.nvars_ != nvars_) throw std::invalid_argument("SymPolynomial: variable count mismatch");
    for (const auto& [e, c] : o.coeffs_) add_term(e, -c);
    return *this;
}

SymPolynomial operator*(const SymPolynomial& a, const SymPolynomial& b) {
    if (a.nvars_ != b.nvars_) throw std::invalid_argument("SymPolynomial: variable count mismatch");
    SymPolynomial out(a.nvars_);
    for (const auto& [ea, ca] : a.coeffs_)
        for (const auto& [eb, cb] : b.coeffs_) {
            SymPolynomial::Exponents e(ea);
            for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
            out.add_term(e, ca * cb);
        }
    return out;
}

SymPolynomial& SymPolynomial::operator*=(const Rat& c) {
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& [e, v] : coeffs_) v *= c;
    return *this;
}

Rat SymPolynomial::eval(const std::vector<Rat>& point) const {
    if (static_cast<int>(point.size()) != nvars_)
        throw std::invalid_argument("SymPolynomial::eval: wrong point dimension");
    Rat total = 0;
    for (const auto& [e, c] : coeffs_) {
        Rat m = c;
        for (size_t i = 0; i < e.size(); ++i)
            for (int k = 0; k < e[i]; ++k) m *= point[i];
        total += m;
    }
    return total;
}

Rat SymPolynomial::eval_ones() const {
    Rat total = 0;
    for (const auto& [e, c] : coeffs_) total += c;
    return total;
}

bool SymPolynomial::is_symmetric() const {
    for (int i = 0; i + 1 < nvars_; ++i) {
        for (const auto& [e, c] : coeffs_) {
            Exponents swapped(e);
            std::swap(swapped[static_cast<size_t>(i)], swapped[static_cast<size_t>(i) + 1]);
            if (coefficient(swapped) != c) return false;
        }
    }
    return true;
}

std::string SymPolynomial::str() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    // higher leading exponents print first
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        const auto& [e, c] = *it;
        std::string mono;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += '*';
            mono += "x" + std::to_string(i + 1);
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        bool neg = c < 0;
        Rat mag = neg ? Rat(-c) : c;
        std::string coef = to_string(mag);
        if (!out.empty())
            out += neg ? " - " : " + ";
        else if (neg)
            out += "-";
        if (mono.empty())
            out += coef;
        else if (mag == 1)
            out += mono;
        else
            out += coef + "*" + mono;
    }
    return out;
}

SymPolynomial q_row(int r, int n) {
    if (r < 0) throw std::invalid_argument("q_row: r must be nonnegative");
    if (n < 1) throw std::invalid_argument("q_row: n must be positive");
    // Truncated series in t with SymPolynomial coefficients; multiply in the
    // factors (1 + x_i t) * (1 + x_i t + x_i^2 t^2 + ...) one variable at a time.
    std::vector<SymPolynomial> series;
    series.reserve(static_cast<size_t>(r) + 1);
    series.push_back(SymPolynomial::constant(n, 1));
    for (int d = 1; d <= r; ++d) series.emplace_back(n);
    for (int i = 0; i < n; ++i) {
        SymPolynomial xi(n);
        SymPolynomial::Exponents e(static_cast<size_t>(n), 0);
        e[static_cast<size_t>(i)] = 1;
        xi.add_term(e, 1);
        // times (1 + x_i t): work downward so each slot uses the old value below it
        for (int d = r; d >= 1; --d) series[static_cast<size_t>(d)] += xi * series[static_cast<size_t>(d) - 1];
        // times 1/(1 - x_i t): prefix recurrence upward
        for (int d = 1; d <= r; ++d) series[static_cast<size_t>(d)] += xi * series[static_cast<size_t>(d) - 1];
    }
    return series[static_cast<size_t>(r)];
}

namespace {

// Q_(a,b) for a > b >= 0 via the quadratic expansion in one-row functions.
SymPolynomial two_row_q(int a, int b, int n) {
    SymPolynomial out = q_row(a, n) * q_row(b, n);
    for (int i = 1; i <= b; ++i) {
        SymPolynomial term = q_row(a + i, n) * q_row(b - i, n);
        term *= Rat(i % 2 ? -2 : 2);
        out += term;
    }
    return out;
}

// Pfaffian by expansion along the first remaining index. `entry(s,t)` must be
// antisymmetric in concept; only s < t is ever requested.
SymPolynomial pfaffian(const std::vector<std::vector<SymPolynomial>>& m, std::vector<int> idx, int n) {
    if (idx.empty()) return SymPolynomial::constant(n, 1);
    SymPolynomial out(n);
    int i0 = idx[0];
    for (size_t p = 1; p < idx.size(); ++p) {
        std::vector<int> rest;
        rest.reserve(idx.size() - 2);
        for (size_t q = 1; q < idx.size(); ++q)
            if (q != p) rest.push_back(idx[q]);
        SymPolynomial term = m[static_cast<size_t>(i0)][static_cast<size_t>(idx[p])] * pfaffian(m, rest, n);
        if (p % 2 == 0) term *= Rat(-1);
        out += term;
    }
    return out;
}

}  // namespace

SymPolynomial schur_q_pfaffian(const StrictPartition& lambda, int n) {
    std::vector<int> parts = lambda.parts();
    if (parts.size() % 2) parts.push_back(0);  // pad to even length
    size_t l = parts.size();
    std::vector<std::vector<SymPolynomial>> m(l, std::vector<SymPolynomial>(l, SymPolynomial(n)));
    for (size_t s = 0; s < l; ++s)
        for (size_t t = s + 1; t < l; ++t) m[s][t] = two_row_q(parts[s], parts[t], n);
    std::vector<int> idx(l);
    for (size_t i = 0; i < l; ++i) idx[i] = static_cast<int>(i);
    return pfaffian(m, idx, n);
}

SymPolynomial schur_q(const StrictPartition& lambda, int n) {
    if (n < 1) throw std::invalid_argument("schur_q: n must be positive");
    switch (lambda.length()) {
        case 0: return SymPolynomial::constant(n, 1);
        case 1: return q_row(lambda.part(0), n);
        case 2: return two_row_q(lambda.part(0), lambda.part(1), n);
        default: return schur_q_pfaffian(lambda, n);
    }
}

Int t_dim(const StrictPartition& lambda, int n) {
    Rat v = schur_q(lambda, n).eval_ones();
    v *= pow2(-(lambda.length() / 2));
    if (!is_integral(v))
        throw std::domain_error("t_dim: nonintegral value " + to_string(v) + " for lambda=" + lambda.str());
    if (v < 0) throw std::domain_error("t_dim: negative value for lambda=" + lambda.str());
    return v.get_num();
}

Int graded_dim_A(int n, int d) {
    if (n < 1 || d < 0) throw std::invalid_argument("graded_dim_A: need n >= 1 and d >= 0");
    unsigned long nsq = static_cast<unsigned long>(n) * static_cast<unsigned long>(n);
    Int total = 0;
    for (int k = 0; k <= d && k <= static_cast<int>(nsq); ++k)
        total += binomial(nsq, static_cast<unsigned long>(k)) *
                 binomial(nsq + static_cast<unsigned long>(d - k) - 1, static_cast<unsigned long>(d - k));
    return total;
}

CauchyReport cauchy_check(int n, int d) {
    CauchyReport rep;
    rep.n = n;
    rep.degree = d;
    rep.lhs = graded_dim_A(n, d);
    Rat rhs = 0;
    for (const StrictPartition& lambda : enumerate_strict(d)) {
        Rat q1 = schur_q(lambda, n).eval_ones();
        Rat term = q1 * q1 * pow2(-lambda.length());
        if (!is_integral(term))
            throw std::domain_error("cauchy_check: nonintegral term for lambda=" + lambda.str());
        rep.per_lambda.push_back({lambda, term.get_num()});
        rhs += term;
    }
    rep.rhs = to_int(rhs);
    rep.equal = rep.lhs == rep.rhs;
    return rep;
}

}  // namespace isomeric
