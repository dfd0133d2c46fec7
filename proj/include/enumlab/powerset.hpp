#pragma once

#include <cstdint>
#include <vector>

#include "enumlab/numeric.hpp"
#include "enumlab/subset_codec.hpp"

namespace enumlab::powerset {

using subsets::FiniteSubset;

/// Contiguously indexed, pairwise distinct subsets.
using SubsetTable = std::vector<FiniteSubset>;

/// P(N_i) as a table of 2^i entries; entry n is the set of positions of the
/// 1-bits of n, bit 0 least significant.
SubsetTable proof3_table(unsigned i);

/// One inductive step: the first 2^i entries are kept, entry 2^i + n is
/// entry n with i adjoined. The input must itself be a proof3 table.
SubsetTable proof3_extend(const SubsetTable& table);

/// All subsets of [0, M) with at most k elements, built by the cartesian
/// product rounds (i, j) -> {i} u {j}, then (a, j) -> a u {j}, deduplicating
/// each round and adjoining the empty subset last. Canonically sorted by
/// (cardinality, elements).
std::vector<FiniteSubset> proof2_build(unsigned k, unsigned M);

/// [2^0, .., 2^(count-1)], exact.
std::vector<BigInt> powers_of_two(unsigned count);

/// Index of a table entry recovered from its elements (bitmask re-encode).
std::uint64_t bitmask_of(const FiniteSubset& s);

}  // namespace enumlab::powerset
