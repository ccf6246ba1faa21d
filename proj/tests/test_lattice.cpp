#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "isomeric/lattice.hpp"

using namespace isomeric;

namespace {

StrictPartition sp(std::vector<int> parts) { return StrictPartition(std::move(parts)); }
EquivariantIdeal princ(std::vector<int> parts) { return EquivariantIdeal::principal(sp(std::move(parts))); }

// all antichains drawn from the strict partitions of size <= dmax
std::vector<EquivariantIdeal> all_antichain_ideals(int dmax) {
    std::vector<StrictPartition> pool;
    for (int d = 1; d <= dmax; ++d)
        for (const auto& p : enumerate_strict(d)) pool.push_back(p);
    std::vector<EquivariantIdeal> out;
    size_t count = 1u << pool.size();
    for (size_t mask = 0; mask < count; ++mask) {
        std::vector<StrictPartition> subset;
        for (size_t k = 0; k < pool.size(); ++k)
            if (mask & (1u << k)) subset.push_back(pool[k]);
        bool antichain = true;
        for (size_t a = 0; a < subset.size() && antichain; ++a)
            for (size_t b = 0; b < subset.size() && antichain; ++b)
                if (a != b && subset[a].contains(subset[b])) antichain = false;
        if (antichain) out.push_back(EquivariantIdeal::from_generators(subset));
    }
    return out;
}

// brute-force smallest determinantal ideal containing I
EquivariantIdeal radical_by_scan(const EquivariantIdeal& I, int rmax = 8) {
    if (I.is_zero()) return EquivariantIdeal::zero();
    EquivariantIdeal best = EquivariantIdeal::determinantal(0);
    for (int r = 0; r <= rmax; ++r) {
        EquivariantIdeal cand = EquivariantIdeal::determinantal(r);
        if (leq(I, cand)) best = cand;
    }
    return best;
}

}  // namespace

TEST_CASE("leq follows the containment rule") {
    CHECK(leq(princ({3, 1}), princ({2, 1})));
    CHECK_FALSE(leq(princ({3}), princ({2, 1})));
    for (const auto& I : all_antichain_ideals(4)) CHECK(leq(EquivariantIdeal::zero(), I));
    CHECK(leq(EquivariantIdeal::zero(), EquivariantIdeal::zero()));
}

TEST_CASE("sum and intersection") {
    EquivariantIdeal s = ideal_sum(princ({2, 1}), princ({3}));
    REQUIRE(s.generators().size() == 2);
    CHECK(s.generators()[0] == sp({3}));
    CHECK(s.generators()[1] == sp({2, 1}));

    CHECK(ideal_intersect(princ({2, 1}), princ({3})) == princ({3, 1}));
    CHECK(ideal_intersect(princ({2, 1}), EquivariantIdeal::zero()) == EquivariantIdeal::zero());
    CHECK(ideal_sum(princ({2, 1}), EquivariantIdeal::zero()) == princ({2, 1}));
    CHECK(ideal_sum(princ({2, 1}), EquivariantIdeal::unit()) == EquivariantIdeal::unit());
}

TEST_CASE("intersection agrees with brute-force up-set intersection") {
    // constituents of I cap J up to size 8 must match the up-set of the join
    auto small = all_antichain_ideals(4);
    std::vector<StrictPartition> probes;
    for (int d = 0; d <= 8; ++d)
        for (const auto& p : enumerate_strict(d)) probes.push_back(p);
    for (const auto& I : small)
        for (const auto& J : small) {
            EquivariantIdeal meet = ideal_intersect(I, J);
            for (const auto& nu : probes)
                CHECK(meet.has_constituent(nu) == (I.has_constituent(nu) && J.has_constituent(nu)));
        }
}

TEST_CASE("leq is a partial order with sum as join and intersect as meet") {
    auto ideals = all_antichain_ideals(6);
    for (const auto& I : ideals) CHECK(leq(I, I));
    for (const auto& I : ideals)
        for (const auto& J : ideals) {
            if (leq(I, J) && leq(J, I)) CHECK(I == J);
            EquivariantIdeal s = ideal_sum(I, J);
            EquivariantIdeal m = ideal_intersect(I, J);
            CHECK(leq(I, s));
            CHECK(leq(J, s));
            CHECK(leq(m, I));
            CHECK(leq(m, J));
        }
    // least/greatest properties and transitivity on a smaller family
    auto small = all_antichain_ideals(4);
    for (const auto& I : small)
        for (const auto& J : small) {
            EquivariantIdeal s = ideal_sum(I, J);
            EquivariantIdeal m = ideal_intersect(I, J);
            for (const auto& K : small) {
                if (leq(I, K) && leq(J, K)) CHECK(leq(s, K));
                if (leq(K, I) && leq(K, J)) CHECK(leq(K, m));
                if (leq(I, J) && leq(J, K)) CHECK(leq(I, K));
            }
        }
}

TEST_CASE("g_radical examples") {
    CHECK(g_radical(princ({3, 1})) == EquivariantIdeal::determinantal(1));
    CHECK(g_radical(princ({3, 1})) == princ({2, 1}));
    for (int r = 0; r <= 5; ++r)
        CHECK(g_radical(EquivariantIdeal::determinantal(r)) == EquivariantIdeal::determinantal(r));
    CHECK(g_radical(EquivariantIdeal::zero()) == EquivariantIdeal::zero());
}

TEST_CASE("g_radical laws, exhaustively") {
    auto ideals = all_antichain_ideals(6);
    for (const auto& I : ideals) {
        EquivariantIdeal r = g_radical(I);
        CHECK(r == radical_by_scan(I));
        CHECK(g_radical(r) == r);      // idempotent
        CHECK(leq(I, r));              // extensive
        CHECK(is_g_prime(r));          // radicals land on the prime chain
    }
    for (const auto& I : ideals)
        for (const auto& J : ideals)
            if (leq(I, J)) CHECK(leq(g_radical(I), g_radical(J)));  // monotone
}

TEST_CASE("g_radical of principal ideals is the length staircase") {
    for (int d = 1; d <= 6; ++d)
        for (const auto& lambda : enumerate_strict(d)) {
            EquivariantIdeal expect = EquivariantIdeal::determinantal(lambda.length() - 1);
            CHECK(g_radical(EquivariantIdeal::principal(lambda)) == expect);
        }
}

TEST_CASE("primality classification") {
    CHECK(is_g_prime(princ({2, 1})));
    CHECK_FALSE(is_g_prime(princ({3, 1})));
    CHECK(is_g_prime(EquivariantIdeal::zero()));
    CHECK_FALSE(is_g_prime(EquivariantIdeal::unit()));  // proper by convention
    CHECK_FALSE(is_g_prime(ideal_sum(princ({2, 1}), princ({3}))));
}

TEST_CASE("primes are totally ordered") {
    auto ideals = all_antichain_ideals(6);
    std::vector<EquivariantIdeal> primes;
    for (const auto& I : ideals)
        if (is_g_prime(I)) primes.push_back(I);
    primes.push_back(EquivariantIdeal::zero());
    for (const auto& P : primes)
        for (const auto& Q : primes) CHECK((leq(P, Q) || leq(Q, P)));
}

TEST_CASE("spectrum chain") {
    auto spec = g_spectrum(2);
    REQUIRE(spec.size() == 4);
    CHECK(spec[0].rank == 0);
    CHECK(spec[0].ideal == princ({1}));
    CHECK(spec[1].ideal == princ({2, 1}));
    CHECK(spec[2].ideal == princ({3, 2, 1}));
    CHECK_FALSE(spec[3].rank.has_value());
    CHECK(spec[3].ideal.is_zero());
    for (size_t i = 0; i + 1 < spec.size(); ++i) {
        CHECK(leq(spec[i + 1].ideal, spec[i].ideal));
        CHECK_FALSE(leq(spec[i].ideal, spec[i + 1].ideal));  // strictly decreasing
    }
    for (const auto& entry : spec) {
        CHECK(is_g_prime(entry.ideal));
        CHECK(g_radical(entry.ideal) == entry.ideal);
    }
}

TEST_CASE("parsing and printing") {
    EquivariantIdeal I = EquivariantIdeal::parse("2,1;3");
    REQUIRE(I.generators().size() == 2);
    CHECK(I.str() == "3;2,1");  // canonical decreasing-lex order
    CHECK(EquivariantIdeal::parse("0").is_zero());
    CHECK(EquivariantIdeal::parse("-") == EquivariantIdeal::unit());
    // redundant generators are minimalized away: (3,1) sits inside (4,2)
    CHECK(EquivariantIdeal::parse("3,1;4,2") == princ({3, 1}));
    CHECK(EquivariantIdeal::parse("3,1;2,1") == princ({2, 1}));
    CHECK_THROWS_AS(EquivariantIdeal::parse("2,2"), std::invalid_argument);
}
