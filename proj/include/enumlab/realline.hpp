#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "enumlab/bitstring.hpp"
#include "enumlab/numeric.hpp"

namespace enumlab::realline {

using bits::BitString;

/// The first n reduced fractions in [0, 1): 0 first, then for each
/// denominator b = 2, 3, .. the coprime numerators in ascending order.
std::vector<Rational> q01_list(std::size_t n);

/// First `digits` bits of the binary expansion of q in [0, 1), by exact long
/// division. Dyadic rationals get the terminating form (trailing 0s).
BitString to_binary(const Rational& q, std::size_t digits);

/// Exact eventually-periodic form: minimal prefix and minimal period found
/// by long-division remainder-cycle detection. Dyadic values carry period
/// "0"; value() reconstructs the rational exactly.
struct BinaryExpansion {
    BitString prefix;
    BitString period;
    Rational value() const;
};

BinaryExpansion eventually_periodic(const Rational& q);

/// Antidiagonal over the first n rows of the q01 expansions, plus the first
/// rational among q01_list(search_limit) whose expansion starts with exactly
/// those bits, if one exists.
struct AntidiagResult {
    BitString bits;
    std::optional<Rational> match;
};

AntidiagResult antidiag_rationals(std::size_t n, std::size_t digits,
                                  std::size_t search_limit = 1000);

/// One query's placement: the rows (below the window) where its expansion
/// agrees with the diagonal's, and the row the matching assigned, if any.
struct Placement {
    Rational query;
    std::vector<std::size_t> feasible;
    std::optional<std::size_t> row;
};

struct ReorderReport {
    std::vector<Placement> placements;     // one per query, in query order
    std::vector<Rational> excluded;        // queries left without a row
    BitString antidiagonal_bits;           // complement of the diagonal's bits
    std::optional<Rational> antidiagonal;  // 1 - qD when that lies in [0, 1)
};

/// A query can occupy row r only where its expansion agrees with qD's; the
/// assignment is a maximum bipartite matching, processed in query order, so
/// the reported exclusions carry a no-augmenting-path certificate.
ReorderReport reorder_demo(const Rational& q_diag, std::size_t window,
                           const std::vector<Rational>& queries);

/// Open interval with exact rational endpoints.
struct Interval {
    Rational lo;
    Rational hi;
};

/// One nested-interval run: intervals[0] is the start, one more per executed
/// step; picks[v] is the (alpha, beta) pair extracted at step v. exhausted is
/// set when fewer than two pool members remained strictly inside.
struct NestedRun {
    std::vector<Interval> intervals;
    std::vector<std::pair<Rational, Rational>> picks;
    bool exhausted = false;

    std::size_t steps() const { return picks.size(); }
};

/// At each step, the first two pool members (in pool order) strictly inside
/// the current interval become the new endpoints.
NestedRun nested_intervals(const std::vector<Rational>& pool, const Interval& start,
                           std::size_t steps);

}  // namespace enumlab::realline
