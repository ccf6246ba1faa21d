#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "isomeric/linalg.hpp"
#include "isomeric/superpoly.hpp"
#include "isomeric/symfunc.hpp"

using namespace isomeric;

namespace {

SuperPolynomial var(const SuperRing& ring, VarId v) { return SuperPolynomial::variable(ring, v); }

// random polynomial with terms of the given parity, small support
SuperPolynomial random_poly(const SuperRing& ring, std::mt19937_64& rng, Parity parity, int max_terms = 3) {
    SuperPolynomial f(ring);
    int terms = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_terms));
    for (int t = 0; t < terms; ++t) {
        SuperPolynomial m = SuperPolynomial::constant(ring, GaussRat(1 + static_cast<int>(rng() % 5)));
        if (rng() % 3 == 0) m *= GaussRat(Rat(0), Rat(1 + static_cast<int>(rng() % 3)));
        int deg = static_cast<int>(rng() % 3);
        int odd_used = 0;
        for (int k = 0; k < deg; ++k) m *= var(ring, static_cast<VarId>(rng() % static_cast<unsigned>(ring.n_vars())));
        // force the requested parity with one more factor if needed
        ( void )odd_used;
        if (!m.is_zero() && m.is_parity_homogeneous() && m.parity() != parity)
            m *= var(ring, static_cast<VarId>(ring.n_even() + static_cast<int>(rng() % static_cast<unsigned>(ring.n_odd()))));
        if (!m.is_zero() && m.is_parity_homogeneous() && m.parity() == parity) f += m;
    }
    if (f.is_zero() || !f.is_parity_homogeneous() || f.parity() != parity)
        return parity == Parity::even ? SuperPolynomial::constant(ring, GaussRat(1))
                                      : var(ring, ring.n_even());
    return f;
}

}  // namespace

TEST_CASE("odd variables anticommute and square to zero") {
    SuperRing ring({"x"}, {"y1", "y2"});
    SuperPolynomial y1 = var(ring, 1), y2 = var(ring, 2);
    CHECK(y1 * y2 == -(y2 * y1));
    CHECK((y1 * y1).is_zero());
    CHECK((y2 * y2).is_zero());
    SuperPolynomial x = var(ring, 0);
    CHECK((x + y1) * (x - y1) == x * x);
}

TEST_CASE("supercommutativity on random parity-homogeneous pairs") {
    SuperRing ring({"x1", "x2"}, {"y1", "y2"});
    std::mt19937_64 rng(7);
    for (int t = 0; t < 500; ++t) {
        Parity pf = rng() % 2 ? Parity::odd : Parity::even;
        Parity pg = rng() % 2 ? Parity::odd : Parity::even;
        SuperPolynomial f = random_poly(ring, rng, pf);
        SuperPolynomial g = random_poly(ring, rng, pg);
        SuperPolynomial gf = g * f;
        if (pf == Parity::odd && pg == Parity::odd) gf *= GaussRat(-1);
        CHECK(f * g == gf);
    }
}

TEST_CASE("associativity and distributivity on random triples") {
    SuperRing ring({"x1", "x2"}, {"y1", "y2"});
    std::mt19937_64 rng(11);
    for (int t = 0; t < 300; ++t) {
        Parity p[3] = {rng() % 2 ? Parity::odd : Parity::even, rng() % 2 ? Parity::odd : Parity::even,
                       rng() % 2 ? Parity::odd : Parity::even};
        SuperPolynomial f = random_poly(ring, rng, p[0]);
        SuperPolynomial g = random_poly(ring, rng, p[1]);
        SuperPolynomial h = random_poly(ring, rng, p[2]);
        CHECK((f * g) * h == f * (g * h));
        CHECK(f * (g + h) == f * g + f * h);
    }
}

TEST_CASE("monomial basis sizes") {
    SuperRing rank1({"x"}, {"y"});
    GradedBasis d2 = monomial_basis(rank1, 2);
    REQUIRE(d2.dimension() == 2);
    CHECK(d2.vectors[0].str() == "x^2");
    CHECK(d2.vectors[1].str() == "x*y");

    SuperRing rank2({"x11", "x12", "x21", "x22"}, {"y11", "y12", "y21", "y22"});
    CHECK(monomial_basis(rank2, 3).dimension() == 88);
    CHECK(monomial_basis(rank2, 0).dimension() == 1);
    CHECK(monomial_basis(rank2, 0).vectors[0].str() == "1");
}

TEST_CASE("monomial counts match graded_dim_A") {
    for (int n = 1; n <= 3; ++n) {
        std::vector<std::string> evens, odds;
        for (int i = 0; i < n * n; ++i) {
            evens.push_back("x" + std::to_string(i));
            odds.push_back("y" + std::to_string(i));
        }
        SuperRing ring(evens, odds);
        for (int d = 0; d <= (n < 3 ? 8 : 6); ++d)
            CHECK(Int(static_cast<long>(enumerate_monomials(ring, d).size())) == graded_dim_A(n, d));
    }
}

TEST_CASE("ideal degree pieces") {
    SuperRing ring({"x"}, {"y1"});
    SuperPolynomial x = var(ring, 0), y1 = var(ring, 1);

    SUBCASE("maximal ideal covers the full degree-2 space") {
        GradedBasis b = ideal_degree_basis({x, y1}, 2);
        CHECK(b.dimension() == monomial_basis(ring, 2).dimension());
    }
    SUBCASE("principal odd ideal") {
        GradedBasis b = ideal_degree_basis({y1}, 2);
        REQUIRE(b.dimension() == 1);
        CHECK(b.vectors[0] == x * y1);
    }
    SUBCASE("zero ideal") {
        CHECK(ideal_degree_basis({}, 3).dimension() == 0);
    }
    SUBCASE("inhomogeneous generators are rejected") {
        CHECK_THROWS_AS(ideal_degree_basis({x + SuperPolynomial::constant(ring, GaussRat(1))}, 2),
                        std::invalid_argument);
    }
}

TEST_CASE("membership") {
    SuperRing ring({"x"}, {"y1"});
    SuperPolynomial x = var(ring, 0), y1 = var(ring, 1);
    CHECK(membership(x * y1, {y1}));
    CHECK_FALSE(membership(x * x, {y1}));
    CHECK(membership(SuperPolynomial::zero(ring), {y1}));
}

TEST_CASE("ideal monotonicity under generator containment") {
    SuperRing ring({"x1", "x2"}, {"y1", "y2"});
    std::mt19937_64 rng(23);
    for (int t = 0; t < 20; ++t) {
        // G2 random homogeneous gens; G1 = multiples of them, so ideal(G1) <= ideal(G2)
        std::vector<SuperPolynomial> g2;
        for (int k = 0; k < 2; ++k) {
            Parity p = rng() % 2 ? Parity::odd : Parity::even;
            SuperPolynomial f = random_poly(ring, rng, p);
            // keep only the lowest-degree homogeneous slice to satisfy homogeneity
            int dmin = 1000;
            for (const auto& [m, c] : f.terms()) dmin = std::min(dmin, m.degree());
            SuperPolynomial slice(ring);
            for (const auto& [m, c] : f.terms())
                if (m.degree() == dmin) slice.add_term(m, c);
            g2.push_back(slice);
        }
        std::vector<SuperPolynomial> g1;
        for (const SuperPolynomial& g : g2) g1.push_back(var(ring, static_cast<VarId>(rng() % 4)) * g);
        for (int d = 1; d <= 4; ++d) {
            GradedBasis b1 = ideal_degree_basis(g1, d);
            GradedBasis b2 = ideal_degree_basis(g2, d);
            DegreeSpace space = DegreeSpace::make(ring, d);
            RowEchelon ech;
            for (const SuperPolynomial& v : b2.vectors) ech.add_row(space.vectorize(v));
            for (const SuperPolynomial& v : b1.vectors) CHECK(ech.reduces_to_zero(space.vectorize(v)));
        }
    }
}

TEST_CASE("graded bases are linearly independent") {
    SuperRing ring({"x1", "x2"}, {"y1", "y2"});
    GradedBasis b = ideal_degree_basis({var(ring, 0) + var(ring, 1), var(ring, 2)}, 3);
    DegreeSpace space = DegreeSpace::make(ring, 3);
    RowEchelon ech;
    for (const SuperPolynomial& v : b.vectors) CHECK(ech.add_row(space.vectorize(v)));
}

TEST_CASE("ring homomorphism application") {
    SuperRing src({"x"}, {"y"});
    SuperRing dst({"u", "v"}, {"s", "t"});

    SUBCASE("identity-like and linearity") {
        RingHom h(src, dst, {var(dst, 0) * var(dst, 1), var(dst, 0) * var(dst, 2)});
        SuperPolynomial one = SuperPolynomial::constant(src, GaussRat(1));
        CHECK(h(one) == SuperPolynomial::constant(dst, GaussRat(1)));
        SuperPolynomial f = var(src, 0), g = var(src, 1);
        CHECK(h(f + g) == h(f) + h(g));
        std::mt19937_64 rng(5);
        for (int t = 0; t < 200; ++t) {
            SuperPolynomial a = random_poly(src, rng, rng() % 2 ? Parity::odd : Parity::even);
            SuperPolynomial b = random_poly(src, rng, rng() % 2 ? Parity::odd : Parity::even);
            CHECK(h(a * b) == h(a) * h(b));
        }
    }
    SUBCASE("zero map kills positive degrees") {
        RingHom h(src, dst, {SuperPolynomial(dst), SuperPolynomial(dst)});
        CHECK(h(var(src, 0) * var(src, 0) + var(src, 0) * var(src, 1)).is_zero());
        CHECK(h(SuperPolynomial::constant(src, GaussRat(3))) ==
              SuperPolynomial::constant(dst, GaussRat(3)));
    }
    SUBCASE("parity mismatch is rejected") {
        CHECK_THROWS_AS(RingHom(src, dst, {var(dst, 2), var(dst, 0)}), std::invalid_argument);
    }
}

TEST_CASE("printing follows the canonical monomial order") {
    SuperRing ring({"x11", "x12", "x21", "x22"}, {"y11", "y12", "y21", "y22"});
    SuperPolynomial f(ring);
    f.add_term(Monomial({{0, 2}, {5, 1}}), GaussRat(3));   // 3*x11^2*y12
    f.add_term(Monomial({{4, 1}, {7, 1}}), GaussRat(-1));  // - y11*y22
    CHECK(f.str() == "3*x11^2*y12 - y11*y22");
    SuperPolynomial g(ring);
    g.add_term(Monomial({{4, 1}}), GaussRat(Rat(0), Rat(-1)));
    CHECK(g.str() == "-i*y11");
}

TEST_CASE("mixed ring arithmetic is rejected") {
    SuperRing r1({"x"}, {"y"});
    SuperRing r2({"x"}, {"y"});
    CHECK_THROWS_AS(var(r1, 0) * var(r2, 0), std::invalid_argument);
}
