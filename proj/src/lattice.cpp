#include "isomeric/lattice.hpp"

#include <algorithm>
#include <stdexcept>

namespace isomeric {

EquivariantIdeal EquivariantIdeal::principal(StrictPartition lambda) {
    EquivariantIdeal I;
    I.gens_.push_back(std::move(lambda));
    return I;
}

EquivariantIdeal EquivariantIdeal::from_generators(std::vector<StrictPartition> gens) {
    EquivariantIdeal I;
    for (size_t i = 0; i < gens.size(); ++i) {
        bool redundant = false;
        for (size_t j = 0; j < gens.size() && !redundant; ++j) {
            if (i == j) continue;
            // drop gens[i] when it lies in the up-set of another generator;
            // on ties (duplicates) keep the first occurrence
            if (gens[i].contains(gens[j]) && (gens[i] != gens[j] || j < i)) redundant = true;
        }
        if (!redundant) I.gens_.push_back(gens[i]);
    }
    std::sort(I.gens_.begin(), I.gens_.end(), dec_lex_before);
    return I;
}

EquivariantIdeal EquivariantIdeal::determinantal(int r) {
    if (r < 0) throw std::invalid_argument("determinantal: r must be nonnegative");
    return principal(StrictPartition::staircase(r + 1));
}

EquivariantIdeal EquivariantIdeal::parse(std::string_view s) {
    if (s == "0") return zero();
    std::vector<StrictPartition> gens;
    size_t pos = 0;
    while (pos <= s.size()) {
        size_t semi = s.find(';', pos);
        std::string_view tok = s.substr(pos, semi == std::string_view::npos ? semi : semi - pos);
        gens.push_back(StrictPartition::parse(tok));
        if (semi == std::string_view::npos) break;
        pos = semi + 1;
    }
    return from_generators(std::move(gens));
}

bool EquivariantIdeal::has_constituent(const StrictPartition& lambda) const {
    for (const StrictPartition& g : gens_)
        if (lambda.contains(g)) return true;
    return false;
}

std::string EquivariantIdeal::str() const {
    if (gens_.empty()) return "0";
    std::string out;
    for (size_t i = 0; i < gens_.size(); ++i) {
        if (i) out += ';';
        out += gens_[i].str();
    }
    return out;
}

bool leq(const EquivariantIdeal& I, const EquivariantIdeal& J) {
    for (const StrictPartition& g : I.generators())
        if (!J.has_constituent(g)) return false;
    return true;
}

EquivariantIdeal ideal_sum(const EquivariantIdeal& I, const EquivariantIdeal& J) {
    std::vector<StrictPartition> gens = I.generators();
    gens.insert(gens.end(), J.generators().begin(), J.generators().end());
    return EquivariantIdeal::from_generators(std::move(gens));
}

EquivariantIdeal ideal_intersect(const EquivariantIdeal& I, const EquivariantIdeal& J) {
    std::vector<StrictPartition> gens;
    for (const StrictPartition& a : I.generators())
        for (const StrictPartition& b : J.generators()) gens.push_back(join(a, b));
    return EquivariantIdeal::from_generators(std::move(gens));
}

EquivariantIdeal g_radical(const EquivariantIdeal& I) {
    if (I.is_zero()) return EquivariantIdeal::zero();
    int k = I.generators().front().length();
    for (const StrictPartition& g : I.generators()) k = std::min(k, g.length());
    return EquivariantIdeal::principal(StrictPartition::staircase(k));
}

bool is_g_prime(const EquivariantIdeal& I) {
    if (I.is_zero()) return true;
    if (I.generators().size() != 1) return false;
    const StrictPartition& g = I.generators().front();
    return !g.empty() && g == StrictPartition::staircase(g.length());
}

std::vector<SpectrumEntry> g_spectrum(int rmax) {
    if (rmax < 0) throw std::invalid_argument("g_spectrum: rmax must be nonnegative");
    std::vector<SpectrumEntry> out;
    for (int r = 0; r <= rmax; ++r) out.push_back({r, EquivariantIdeal::determinantal(r)});
    out.push_back({std::nullopt, EquivariantIdeal::zero()});
    return out;
}

}  // namespace isomeric
