#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "isomeric/rational.hpp"

namespace isomeric {

using VarId = int;

enum class Parity : int { even = 0, odd = 1 };

inline Parity operator+(Parity a, Parity b) {
    return static_cast<Parity>((static_cast<int>(a) + static_cast<int>(b)) % 2);
}

/// Supercommutative polynomial ring: a list of even generators followed by a
/// list of odd generators. Variable ids are 0..n_even-1 for the even block,
/// then n_even..n_even+n_odd-1 for the odd block. Rings are identified by
/// address: polynomials hold a pointer and the ring must outlive them.
class SuperRing {
public:
    SuperRing(std::vector<std::string> even_names, std::vector<std::string> odd_names);

    int n_even() const { return n_even_; }
    int n_odd() const { return static_cast<int>(names_.size()) - n_even_; }
    int n_vars() const { return static_cast<int>(names_.size()); }
    bool is_odd(VarId v) const { return v >= n_even_; }
    Parity parity(VarId v) const { return is_odd(v) ? Parity::odd : Parity::even; }
    const std::string& var_name(VarId v) const { return names_[static_cast<size_t>(v)]; }

    SuperRing(const SuperRing&) = delete;
    SuperRing& operator=(const SuperRing&) = delete;

private:
    std::vector<std::string> names_;
    int n_even_;
};

/// Normal-form monomial: factors sorted by variable id, positive exponents,
/// odd exponents capped at 1 by the ring axioms. The monomial stands for the
/// product of its variables in ascending id order.
class Monomial {
public:
    using Factors = std::vector<std::pair<VarId, int>>;

    Monomial() = default;
    explicit Monomial(Factors factors);

    static Monomial var(VarId v, int exp = 1) { return Monomial(Factors{{v, exp}}); }

    const Factors& factors() const { return factors_; }
    bool is_one() const { return factors_.empty(); }
    int degree() const;
    int exponent(VarId v) const;
    Parity parity(const SuperRing& ring) const;
    int odd_count(const SuperRing& ring) const;

    std::string str(const SuperRing& ring) const;

    friend bool operator==(const Monomial&, const Monomial&) = default;

private:
    Factors factors_;
};

/// Canonical term order: higher total degree first, then more weight on
/// earlier variables. This is the print order and the pivot order of all
/// row reductions, so bases are reproducible.
bool monomial_before(const Monomial& a, const Monomial& b);

struct MonomialLess {
    bool operator()(const Monomial& a, const Monomial& b) const { return monomial_before(a, b); }
};

/// Product of normal-form monomials: merged exponents plus the Koszul sign
/// from sorting the odd letters; nullopt when an odd variable repeats.
std::optional<std::pair<Monomial, int>> multiply_monomials(const SuperRing& ring, const Monomial& a,
                                                           const Monomial& b);

class SuperPolynomial {
public:
    using TermMap = std::map<Monomial, GaussRat, MonomialLess>;

    explicit SuperPolynomial(const SuperRing& ring) : ring_(&ring) {}
    static SuperPolynomial zero(const SuperRing& ring) { return SuperPolynomial(ring); }
    static SuperPolynomial constant(const SuperRing& ring, GaussRat c);
    static SuperPolynomial variable(const SuperRing& ring, VarId v);
    static SuperPolynomial term(const SuperRing& ring, Monomial m, GaussRat c);

    const SuperRing& ring() const { return *ring_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    size_t term_count() const { return terms_.size(); }
    GaussRat coefficient(const Monomial& m) const;

    void add_term(Monomial m, GaussRat c);

    SuperPolynomial& operator+=(const SuperPolynomial& o);
    SuperPolynomial& operator-=(const SuperPolynomial& o);
    friend SuperPolynomial operator+(SuperPolynomial a, const SuperPolynomial& b) { return a += b; }
    friend SuperPolynomial operator-(SuperPolynomial a, const SuperPolynomial& b) { return a -= b; }
    friend SuperPolynomial operator*(const SuperPolynomial& a, const SuperPolynomial& b);
    SuperPolynomial& operator*=(const SuperPolynomial& o) { return *this = *this * o; }
    SuperPolynomial& operator*=(const GaussRat& c);
    SuperPolynomial operator-() const;
    friend bool operator==(const SuperPolynomial& a, const SuperPolynomial& b);

    SuperPolynomial pow(int e) const;

    /// -1 for the zero polynomial, else the maximal term degree.
    int degree() const;
    bool is_homogeneous() const;
    /// Throws on inhomogeneous input; degree 0 for the zero polynomial.
    int homogeneous_degree() const;
    bool is_parity_homogeneous() const;
    Parity parity() const;  // throws when terms mix parity

    std::string str() const;

private:
    const SuperRing* ring_;
    TermMap terms_;
};

SuperPolynomial multiply(const SuperPolynomial& f, const SuperPolynomial& g);

/// All normal-form monomials of total degree d, in canonical order.
std::vector<Monomial> enumerate_monomials(const SuperRing& ring, int d);

struct GradedBasis {
    int degree = 0;
    std::vector<SuperPolynomial> vectors;

    size_t dimension() const { return vectors.size(); }
};

/// All degree-d monomials as a basis of the graded piece.
GradedBasis monomial_basis(const SuperRing& ring, int d);

/// Reduced row-echelon basis of the degree-d piece of the ideal generated by
/// the given homogeneous elements: the row space of {m * g} over monomials m
/// of degree d - deg g. Generators of degree > d contribute nothing. Throws
/// on an inhomogeneous generator.
GradedBasis ideal_degree_basis(const std::vector<SuperPolynomial>& gens, int d);

/// Exact membership of a homogeneous element in the span of
/// ideal_degree_basis(gens, deg f).
bool membership(const SuperPolynomial& f, const std::vector<SuperPolynomial>& gens);

/// Parity-preserving graded ring homomorphism given by variable images
/// (each image homogeneous of the parity of its variable, or zero).
class RingHom {
public:
    RingHom(const SuperRing& src, const SuperRing& dst, std::vector<SuperPolynomial> images);

    const SuperRing& src() const { return *src_; }
    const SuperRing& dst() const { return *dst_; }
    const SuperPolynomial& image(VarId v) const { return images_[static_cast<size_t>(v)]; }

    SuperPolynomial operator()(const SuperPolynomial& f) const;

private:
    const SuperRing* src_;
    const SuperRing* dst_;
    std::vector<SuperPolynomial> images_;
};

inline SuperPolynomial apply_hom(const RingHom& h, const SuperPolynomial& f) { return h(f); }

}  // namespace isomeric
