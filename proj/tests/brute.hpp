#pragma once

// Brute-force oracles shared by the unit and acceptance suites. Everything
// here enumerates bitmasks directly and stays independent of the library's
// recursion and closed forms.

#include <cstdint>
#include <vector>

#include "enumlab/subset_codec.hpp"

namespace brute {

inline enumlab::subsets::FiniteSubset subset_of_mask(std::uint64_t mask) {
    std::vector<enumlab::BigInt> elems;
    for (std::uint64_t b = 0; b < 64; ++b)
        if (mask & (std::uint64_t(1) << b)) elems.push_back(b);
    return enumlab::subsets::FiniteSubset(std::move(elems));
}

/// All subsets of {0..universe-1} with the given cardinality and greatest
/// element, in mask order.
inline std::vector<enumlab::subsets::FiniteSubset> subsets_with(std::uint64_t cardinality,
                                                                std::uint64_t greatest,
                                                                unsigned universe) {
    std::vector<enumlab::subsets::FiniteSubset> out;
    for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << universe); ++mask) {
        auto s = subset_of_mask(mask);
        if (s.size() == cardinality && s.greatest() == greatest) out.push_back(std::move(s));
    }
    return out;
}

/// All subsets of {0..universe-1} with at most max_cardinality elements.
inline std::vector<enumlab::subsets::FiniteSubset> subsets_up_to(unsigned max_cardinality,
                                                                 unsigned universe) {
    std::vector<enumlab::subsets::FiniteSubset> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << universe); ++mask) {
        auto s = subset_of_mask(mask);
        if (s.size() <= max_cardinality) out.push_back(std::move(s));
    }
    return out;
}

/// Maximum bipartite matching size by exhaustive augmentation-free search:
/// tries every subset of queries and checks feasibility by recursion.
inline std::size_t max_matching_size(const std::vector<std::vector<std::size_t>>& feasible) {
    std::size_t best = 0;
    std::vector<std::size_t> chosen;  // rows already taken
    auto taken = [&](std::size_t row) {
        for (std::size_t r : chosen)
            if (r == row) return true;
        return false;
    };
    auto rec = [&](auto&& self, std::size_t qi) -> void {
        if (chosen.size() > best) best = chosen.size();
        if (qi == feasible.size()) return;
        self(self, qi + 1);  // skip this query
        for (std::size_t row : feasible[qi]) {
            if (taken(row)) continue;
            chosen.push_back(row);
            self(self, qi + 1);
            chosen.pop_back();
        }
    };
    rec(rec, 0);
    return best;
}

}  // namespace brute
