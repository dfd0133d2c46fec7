#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "enumlab/numeric.hpp"

namespace enumlab::bits {

/// A fixed-length {0,1} string.
class BitString {
  public:
    BitString() = default;
    explicit BitString(std::vector<bool> bits) : bits_(std::move(bits)) {}
    static BitString parse(std::string_view text);  // "0101"

    std::size_t length() const { return bits_.size(); }
    bool bit(std::size_t i) const { return bits_.at(i); }
    void set(std::size_t i, bool v) { bits_.at(i) = v; }
    std::string str() const;
    BitString complemented() const;

    friend bool operator==(const BitString&, const BitString&) = default;

  private:
    std::vector<bool> bits_;
};

/// Rows of identical length, indexed from 0.
class StringArray {
  public:
    StringArray() = default;
    explicit StringArray(std::vector<BitString> rows);

    std::size_t rows() const { return rows_.size(); }
    std::size_t length() const { return length_; }
    const BitString& row(std::size_t i) const { return rows_.at(i); }
    const std::vector<BitString>& all() const { return rows_; }

  private:
    std::vector<BitString> rows_;
    std::size_t length_ = 0;
};

/// One row of 0/1 characters per line.
std::ostream& operator<<(std::ostream& os, const StringArray& a);

/// All 2^k strings of length k in ascending binary order, most significant
/// bit first (row n is the k-bit encoding of n).
StringArray full_array(unsigned k);

/// Diagonal walk with every bit complemented; the walk stops at
/// min(rows, length) and any unreached tail positions are left 0.
BitString antidiagonal(const StringArray& a);

/// First row equal to s, if any. Lengths must match.
std::optional<std::size_t> locate(const StringArray& a, const BitString& s);

/// min(1, length/rows) as an exact rational; rows >= 1.
Rational diagonal_cover_finite(const BigInt& rows, const BigInt& length);

enum class DcFamily { Full, S2, Sq1Bound };

/// One diagonal-cover table row: the fraction is kept in the family's
/// literal form (k/2^k, or k/2k for S2), value() reduces it.
struct DcEntry {
    unsigned k = 0;
    BigInt num;
    BigInt den;
    Rational value() const { return Rational(num, den); }
};

/// Full: k/2^k. S2: k/2k (constantly 1/2). Sq1Bound: the bound k/2^k.
std::vector<DcEntry> dc_sequence(DcFamily family, unsigned k_max);

/// 2*pairs rows: row 2m has a single 1 at position m among 0s, row 2m+1 a
/// single 0 at position m among 1s, truncated to `length`.
StringArray s2_array(std::size_t pairs, std::size_t length);

/// Counts of strings at each Hamming distance from a fixed template:
/// census[d] = C(k, d); included = census[1] = k; excluded = 2^k - k.
struct HammingCensus {
    std::vector<BigInt> census;  // indexed by distance d = 0..k
    BigInt included;
    BigInt excluded;
};

HammingCensus hamming_census(unsigned k);

/// Convenience bundle over one array: cover, antidiagonal, and where (if
/// anywhere) the antidiagonal sits in the array itself. The census is filled
/// when the array holds the full space of its string length.
struct DiagonalReport {
    Rational cover;
    BitString antidiag;
    std::optional<std::size_t> found_at;
    std::map<unsigned, BigInt> census;
};

DiagonalReport diagonal_report(const StringArray& a);

}  // namespace enumlab::bits
