#pragma once

#include <gmpxx.h>

#include <string>

namespace isomeric {

// Exact arithmetic used everywhere in the library. No floating point.
using Rat = mpq_class;
using Int = mpz_class;

inline bool is_integral(const Rat& q) { return q.get_den() == 1; }

inline Int to_int(const Rat& q) {
    if (!is_integral(q)) throw std::domain_error("to_int: value " + q.get_str() + " is not an integer");
    return q.get_num();
}

inline Int binomial(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline Rat pow2(int e) {
    Rat r = 1;
    if (e >= 0)
        mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned long>(e));
    else
        mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned long>(-e));
    return r;
}

/// Element of the coefficient field Q(i): a pair of exact rationals.
/// The imaginary unit enters through the half tensor eigenbasis and the
/// solved constants of the equivariant homomorphism, so plain rationals
/// are not enough.
struct GaussRat {
    Rat re, im;

    GaussRat() : re(0), im(0) {}
    GaussRat(int v) : re(v), im(0) {}         // NOLINT(google-explicit-constructor)
    GaussRat(Rat r) : re(std::move(r)), im(0) {}  // NOLINT(google-explicit-constructor)
    GaussRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

    static GaussRat unit_i() { return {Rat(0), Rat(1)}; }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    GaussRat conj() const { return {re, -im}; }

    GaussRat operator-() const { return {-re, -im}; }

    GaussRat& operator+=(const GaussRat& o) {
        re += o.re;
        if (o.im != 0) im += o.im;
        return *this;
    }
    GaussRat& operator-=(const GaussRat& o) {
        re -= o.re;
        if (o.im != 0) im -= o.im;
        return *this;
    }
    GaussRat& operator*=(const GaussRat& o) {
        if (im == 0 && o.im == 0) {  // common case: real times real
            re *= o.re;
            return *this;
        }
        Rat nre = re * o.re - im * o.im;
        Rat nim = re * o.im + im * o.re;
        re = std::move(nre);
        im = std::move(nim);
        return *this;
    }

    friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
    friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
    friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }

    GaussRat inverse() const {
        if (is_zero()) throw std::domain_error("GaussRat: division by zero");
        if (im == 0) return {Rat(1 / re), Rat(0)};
        Rat n = re * re + im * im;
        return {re / n, -im / n};
    }

    friend GaussRat operator/(const GaussRat& a, const GaussRat& b) { return a * b.inverse(); }
    GaussRat& operator/=(const GaussRat& b) { return *this = *this * b.inverse(); }

    friend bool operator==(const GaussRat& a, const GaussRat& b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }
};

std::string to_string(const Rat& q);
std::string to_string(const GaussRat& z);

}  // namespace isomeric
