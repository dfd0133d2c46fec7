#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "enumlab/numeric.hpp"

namespace enumlab::subsets {

/// A finite subset of the naturals, kept as a strictly increasing sequence.
/// The empty subset is allowed.
class FiniteSubset {
  public:
    FiniteSubset() = default;
    explicit FiniteSubset(std::vector<BigInt> elems);

    const std::vector<BigInt>& elements() const { return elems_; }
    bool empty() const { return elems_.empty(); }
    std::size_t size() const { return elems_.size(); }
    const BigInt& greatest() const;  // throws on empty

    bool contains(const BigInt& n) const;
    FiniteSubset with(const BigInt& n) const;  // union with {n}

    friend bool operator==(const FiniteSubset&, const FiniteSubset&) = default;
    friend bool operator<(const FiniteSubset& a, const FiniteSubset& b) {
        return a.elems_ < b.elems_;
    }

  private:
    std::vector<BigInt> elems_;
};

/// A class A_i^g: all subsets of cardinality i whose greatest element is g.
struct ClassKey {
    std::uint64_t cardinality = 1;  // i >= 1
    BigInt greatest = 0;            // g >= i - 1
};

/// (i, j'): cardinality plus the within-cardinality index.
struct RankPair {
    std::uint64_t cardinality = 1;  // i >= 1
    BigInt index;                   // j' >= 0

    friend bool operator==(const RankPair&, const RankPair&) = default;
};

/// |A_i^g| = C(g, i-1), exact.
BigInt class_size(const ClassKey& key);

/// All members of A_i^g in canonical order: A_1^g = [{g}], and A_i^g lists
/// {g} u b for b over the concatenation of A_{i-1}^{i-2} .. A_{i-1}^{g-1}.
std::vector<FiniteSubset> build_class(const ClassKey& key);

/// Maps a nonempty subset to (i, j'), where j' is the combinatorial-number-
/// system index: j' = sum over C(g,i) of the prefix classes plus the position
/// within build_class order. j' = 0 exactly for {0, 1, .., i-1}.
RankPair rank(const FiniteSubset& s);

/// Inverse of rank; total on all pairs.
FiniteSubset unrank(const RankPair& p);

/// Global enumeration: index 0 is the empty subset, index 1 + pi(i-1, j')
/// holds unrank(i, j'). Returns the first `count` entries.
std::vector<FiniteSubset> enumerate_subsets(std::uint64_t count);

/// The global index the enumeration assigns to a subset (0 for the empty one).
BigInt enumeration_index(const FiniteSubset& s);

/// "0,2,5"; the empty subset serializes to an empty string.
std::string to_string(const FiniteSubset& s);
FiniteSubset parse_subset(std::string_view text);

/// "i:jprime".
std::string to_string(const RankPair& p);
RankPair parse_rank_pair(std::string_view text);

}  // namespace enumlab::subsets
