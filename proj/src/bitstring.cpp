#include "enumlab/bitstring.hpp"

#include <algorithm>
#include <ostream>

namespace enumlab::bits {

namespace {
constexpr unsigned kMaxFullArrayBits = 20;
}

BitString BitString::parse(std::string_view text) {
    std::vector<bool> bits;
    bits.reserve(text.size());
    for (char c : text) {
        if (c != '0' && c != '1') throw std::invalid_argument("bit string may contain only 0 and 1");
        bits.push_back(c == '1');
    }
    return BitString(std::move(bits));
}

std::string BitString::str() const {
    std::string s(bits_.size(), '0');
    for (std::size_t i = 0; i < bits_.size(); ++i)
        if (bits_[i]) s[i] = '1';
    return s;
}

BitString BitString::complemented() const {
    std::vector<bool> out(bits_.size());
    for (std::size_t i = 0; i < bits_.size(); ++i) out[i] = !bits_[i];
    return BitString(std::move(out));
}

StringArray::StringArray(std::vector<BitString> rows) : rows_(std::move(rows)) {
    if (!rows_.empty()) {
        length_ = rows_.front().length();
        for (const BitString& r : rows_)
            if (r.length() != length_)
                throw std::invalid_argument("string array rows must share one length");
    }
}

std::ostream& operator<<(std::ostream& os, const StringArray& a) {
    for (const BitString& r : a.all()) os << r.str() << '\n';
    return os;
}

StringArray full_array(unsigned k) {
    if (k > kMaxFullArrayBits) throw std::domain_error("full_array: k too large to materialize");
    std::vector<BitString> rows;
    rows.reserve(std::size_t(1) << k);
    for (std::uint64_t n = 0; n < (std::uint64_t(1) << k); ++n) {
        std::vector<bool> bits(k);
        for (unsigned b = 0; b < k; ++b) bits[b] = (n >> (k - 1 - b)) & 1;  // MSB first
        rows.emplace_back(std::move(bits));
    }
    return StringArray(std::move(rows));
}

BitString antidiagonal(const StringArray& a) {
    if (a.rows() == 0) throw std::domain_error("antidiagonal: empty array");
    std::vector<bool> bits(a.length(), false);
    std::size_t walk = std::min(a.rows(), a.length());
    for (std::size_t n = 0; n < walk; ++n) bits[n] = !a.row(n).bit(n);
    return BitString(std::move(bits));
}

std::optional<std::size_t> locate(const StringArray& a, const BitString& s) {
    if (a.rows() > 0 && s.length() != a.length())
        throw std::domain_error("locate: string length does not match the array");
    for (std::size_t i = 0; i < a.rows(); ++i)
        if (a.row(i) == s) return i;
    return std::nullopt;
}

Rational diagonal_cover_finite(const BigInt& rows, const BigInt& length) {
    if (rows < 1) throw std::domain_error("diagonal cover: array must have at least one row");
    if (length < 0) throw std::domain_error("diagonal cover: negative length");
    if (length >= rows) return 1;
    return Rational(length, rows);
}

std::vector<DcEntry> dc_sequence(DcFamily family, unsigned k_max) {
    if (k_max < 1) throw std::domain_error("dc_sequence: k_max must be >= 1");
    std::vector<DcEntry> out;
    out.reserve(k_max);
    for (unsigned k = 1; k <= k_max; ++k) {
        DcEntry e;
        e.k = k;
        e.num = k;
        e.den = family == DcFamily::S2 ? BigInt(2 * BigInt(k)) : pow2(k);
        out.push_back(std::move(e));
    }
    return out;
}

StringArray s2_array(std::size_t pairs, std::size_t length) {
    if (length < pairs) throw std::domain_error("s2_array: length must be >= pairs");
    std::vector<BitString> rows;
    rows.reserve(2 * pairs);
    for (std::size_t m = 0; m < pairs; ++m) {
        std::vector<bool> ones(length, false), zeros(length, true);
        ones[m] = true;
        zeros[m] = false;
        rows.emplace_back(std::move(ones));
        rows.emplace_back(std::move(zeros));
    }
    return StringArray(std::move(rows));
}

HammingCensus hamming_census(unsigned k) {
    if (k < 1) throw std::domain_error("hamming_census: k must be >= 1");
    HammingCensus out;
    out.census.reserve(k + 1);
    for (unsigned d = 0; d <= k; ++d) out.census.push_back(binomial(k, d));
    out.included = out.census[1];
    out.excluded = pow2(k) - out.included;
    return out;
}

DiagonalReport diagonal_report(const StringArray& a) {
    DiagonalReport r;
    r.cover = diagonal_cover_finite(a.rows(), a.length());
    r.antidiag = antidiagonal(a);
    r.found_at = locate(a, r.antidiag);
    if (a.length() >= 1 && a.length() <= 63 && a.rows() == (std::size_t(1) << a.length())) {
        auto census = hamming_census(static_cast<unsigned>(a.length()));
        for (unsigned d = 0; d < census.census.size(); ++d) r.census[d] = census.census[d];
    }
    return r;
}

}  // namespace enumlab::bits
