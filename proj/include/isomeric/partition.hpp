#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace isomeric {

/// A partition with strictly decreasing positive parts. The empty partition
/// is allowed and prints as "-".
class StrictPartition {
public:
    StrictPartition() = default;
    explicit StrictPartition(std::vector<int> parts);

    /// (r, r-1, ..., 1); the empty partition for r = 0.
    static StrictPartition staircase(int r);

    /// Parses "3,2,1"; "-" or "" denotes the empty partition.
    static StrictPartition parse(std::string_view s);

    int length() const { return static_cast<int>(parts_.size()); }
    int weight() const;          // sum of parts
    int delta() const { return length() % 2; }
    int part(int i) const { return i < length() ? parts_[static_cast<size_t>(i)] : 0; }
    const std::vector<int>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }

    /// Young-diagram containment: mu fits inside this partition row by row.
    bool contains(const StrictPartition& mu) const;

    std::string str() const;

    friend auto operator<=>(const StrictPartition&, const StrictPartition&) = default;

private:
    std::vector<int> parts_;
};

inline std::pair<int, int> length_delta(const StrictPartition& p) { return {p.length(), p.delta()}; }

/// Componentwise maximum; the least upper bound under containment.
StrictPartition join(const StrictPartition& a, const StrictPartition& b);

/// All strict partitions of d in decreasing lexicographic order.
std::vector<StrictPartition> enumerate_strict(int d);

/// true when a precedes b in decreasing lexicographic order.
bool dec_lex_before(const StrictPartition& a, const StrictPartition& b);

}  // namespace isomeric
