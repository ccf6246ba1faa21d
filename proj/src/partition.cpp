#include "isomeric/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace isomeric {

StrictPartition::StrictPartition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("StrictPartition: parts must be positive");
        if (i + 1 < parts_.size() && parts_[i] <= parts_[i + 1])
            throw std::invalid_argument("StrictPartition: parts must strictly decrease");
    }
}

StrictPartition StrictPartition::staircase(int r) {
    if (r < 0) throw std::invalid_argument("staircase: r must be nonnegative");
    std::vector<int> parts(static_cast<size_t>(r));
    std::iota(parts.rbegin(), parts.rend(), 1);
    return StrictPartition(std::move(parts));
}

StrictPartition StrictPartition::parse(std::string_view s) {
    if (s.empty() || s == "-") return {};
    std::vector<int> parts;
    size_t pos = 0;
    while (pos <= s.size()) {
        size_t comma = s.find(',', pos);
        std::string_view tok = s.substr(pos, comma == std::string_view::npos ? comma : comma - pos);
        if (tok.empty()) throw std::invalid_argument("StrictPartition: empty part in \"" + std::string(s) + "\"");
        int value = 0;
        for (char c : tok) {
            if (c < '0' || c > '9')
                throw std::invalid_argument("StrictPartition: bad character in \"" + std::string(s) + "\"");
            value = value * 10 + (c - '0');
            if (value > 1000000) throw std::invalid_argument("StrictPartition: part too large");
        }
        parts.push_back(value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return StrictPartition(std::move(parts));  // constructor re-validates strictness
}

int StrictPartition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

bool StrictPartition::contains(const StrictPartition& mu) const {
    if (mu.length() > length()) return false;
    for (int i = 0; i < mu.length(); ++i)
        if (mu.parts_[static_cast<size_t>(i)] > parts_[static_cast<size_t>(i)]) return false;
    return true;
}

std::string StrictPartition::str() const {
    if (parts_.empty()) return "-";
    std::string out;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

StrictPartition join(const StrictPartition& a, const StrictPartition& b) {
    std::vector<int> parts;
    int len = std::max(a.length(), b.length());
    parts.reserve(static_cast<size_t>(len));
    for (int i = 0; i < len; ++i) parts.push_back(std::max(a.part(i), b.part(i)));
    return StrictPartition(std::move(parts));
}

namespace {

void enumerate_rec(int remaining, int max_part, std::vector<int>& acc,
                   std::vector<StrictPartition>& out) {
    if (remaining == 0) {
        out.emplace_back(acc);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        // after taking p the rest must fit under parts < p: 1+2+...+(p-1)
        if (remaining - p > p * (p - 1) / 2) continue;
        acc.push_back(p);
        enumerate_rec(remaining - p, p - 1, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<StrictPartition> enumerate_strict(int d) {
    if (d < 0) throw std::invalid_argument("enumerate_strict: d must be nonnegative");
    std::vector<StrictPartition> out;
    std::vector<int> acc;
    enumerate_rec(d, d, acc, out);  // d = 0 yields exactly the empty partition
    return out;
}

bool dec_lex_before(const StrictPartition& a, const StrictPartition& b) {
    return std::lexicographical_compare(b.parts().begin(), b.parts().end(), a.parts().begin(),
                                        a.parts().end());
}

}  // namespace isomeric
