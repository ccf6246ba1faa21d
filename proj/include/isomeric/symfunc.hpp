#pragma once

#include <map>
#include <string>
#include <vector>

#include "isomeric/partition.hpp"
#include "isomeric/rational.hpp"

namespace isomeric {

/// Symmetric polynomial in n variables with exact rational coefficients,
/// stored as exponent vector -> coefficient with no explicit zeros.
class SymPolynomial {
public:
    using Exponents = std::vector<int>;

    explicit SymPolynomial(int nvars) : nvars_(nvars) {}
    static SymPolynomial constant(int nvars, const Rat& c);

    int nvars() const { return nvars_; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::map<Exponents, Rat>& terms() const { return coeffs_; }
    Rat coefficient(const Exponents& e) const;

    void add_term(const Exponents& e, const Rat& c);

    SymPolynomial& operator+=(const SymPolynomial& o);
    SymPolynomial& operator-=(const SymPolynomial& o);
    friend SymPolynomial operator+(SymPolynomial a, const SymPolynomial& b) { return a += b; }
    friend SymPolynomial operator-(SymPolynomial a, const SymPolynomial& b) { return a -= b; }
    friend SymPolynomial operator*(const SymPolynomial& a, const SymPolynomial& b);
    SymPolynomial& operator*=(const Rat& c);
    friend bool operator==(const SymPolynomial&, const SymPolynomial&) = default;

    Rat eval(const std::vector<Rat>& point) const;
    Rat eval_ones() const;

    /// Invariance under all adjacent variable transpositions (they generate S_n).
    bool is_symmetric() const;

    std::string str() const;

private:
    int nvars_;
    std::map<Exponents, Rat> coeffs_;
};

/// One-row Q-function q_r in n variables: the degree-r coefficient of
/// prod_i (1 + x_i t)/(1 - x_i t).
SymPolynomial q_row(int r, int n);

/// Schur Q-function Q_lambda in n variables. One- and two-row cases use the
/// quadratic rule Q_(a,b) = q_a q_b + 2 sum_{i>=1} (-1)^i q_{a+i} q_{b-i};
/// longer partitions go through the Pfaffian of the two-row matrix, padding
/// lambda with one zero part when its length is odd.
SymPolynomial schur_q(const StrictPartition& lambda, int n);

/// Pfaffian route regardless of length, exposed so padding invariance is testable.
SymPolynomial schur_q_pfaffian(const StrictPartition& lambda, int n);

/// dim T_lambda at rank n: 2^{-floor(l/2)} Q_lambda(1,...,1). Throws if the
/// value fails to be an integer, which would signal a convention bug.
Int t_dim(const StrictPartition& lambda, int n);

/// Dimension of the degree-d piece of the rank-n coordinate ring
/// (n^2 even and n^2 odd generators).
Int graded_dim_A(int n, int d);

struct CauchyTerm {
    StrictPartition lambda;
    Int term;  // 2^{-l(lambda)} Q_lambda(1^n)^2
};

struct CauchyReport {
    int n = 0;
    int degree = 0;
    Int lhs, rhs;
    bool equal = false;
    std::vector<CauchyTerm> per_lambda;
};

/// Compares the monomial count of the degree-d piece against the sum of
/// squared principal specializations over strict partitions of d.
CauchyReport cauchy_check(int n, int d);

}  // namespace isomeric
