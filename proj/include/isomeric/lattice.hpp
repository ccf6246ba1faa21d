#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "isomeric/partition.hpp"

namespace isomeric {

/// Symbolic equivariant ideal of the infinite-rank algebra: the up-closed
/// set of constituent labels, stored as the antichain of its minimal
/// generators. The empty antichain is the zero ideal; the antichain holding
/// just the empty partition is the unit ideal.
class EquivariantIdeal {
public:
    EquivariantIdeal() = default;  // zero ideal

    static EquivariantIdeal zero() { return {}; }
    static EquivariantIdeal unit() { return principal(StrictPartition{}); }
    static EquivariantIdeal principal(StrictPartition lambda);
    /// Minimalizes the given generators into an antichain.
    static EquivariantIdeal from_generators(std::vector<StrictPartition> gens);
    /// I_r: generated by the staircase with r+1 rows.
    static EquivariantIdeal determinantal(int r);
    /// Parses "3,1;4,2" (semicolon-separated partitions); "0" is the zero ideal.
    static EquivariantIdeal parse(std::string_view s);

    const std::vector<StrictPartition>& generators() const { return gens_; }
    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const { return gens_.size() == 1 && gens_.front().empty(); }

    /// Membership of lambda in the up-set: lambda contains some generator.
    bool has_constituent(const StrictPartition& lambda) const;

    std::string str() const;

    friend bool operator==(const EquivariantIdeal&, const EquivariantIdeal&) = default;

private:
    std::vector<StrictPartition> gens_;  // antichain, decreasing-lex sorted
};

/// Ideal containment I <= J (every constituent of I lies in J).
bool leq(const EquivariantIdeal& I, const EquivariantIdeal& J);

EquivariantIdeal ideal_sum(const EquivariantIdeal& I, const EquivariantIdeal& J);
EquivariantIdeal ideal_intersect(const EquivariantIdeal& I, const EquivariantIdeal& J);

/// Smallest determinantal ideal containing I; the zero ideal is its own
/// radical. A generator of length k contains the k-row staircase and no
/// longer one, so the answer is the staircase ideal at min generator length.
EquivariantIdeal g_radical(const EquivariantIdeal& I);

/// The zero ideal and the staircase-generated ideals are the primes; the
/// unit ideal is excluded by convention.
bool is_g_prime(const EquivariantIdeal& I);

struct SpectrumEntry {
    std::optional<int> rank;  // nullopt encodes the rank-infinity point (the zero ideal)
    EquivariantIdeal ideal;
};

/// The chain I_0 > I_1 > ... > I_rmax > 0 with rank labels.
std::vector<SpectrumEntry> g_spectrum(int rmax);

}  // namespace isomeric
