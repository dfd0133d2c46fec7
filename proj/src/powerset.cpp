#include "enumlab/powerset.hpp"

#include <algorithm>
#include <set>

namespace enumlab::powerset {

namespace {

constexpr unsigned kMaxTableBits = 20;

bool has_single_bit(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

bool canonical_less(const FiniteSubset& a, const FiniteSubset& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.elements() < b.elements();
}

}  // namespace

std::uint64_t bitmask_of(const FiniteSubset& s) {
    std::uint64_t mask = 0;
    for (const BigInt& e : s.elements()) {
        if (e >= 64) throw std::domain_error("bitmask_of: element out of range");
        mask |= std::uint64_t(1) << e.convert_to<unsigned>();
    }
    return mask;
}

SubsetTable proof3_table(unsigned i) {
    if (i > kMaxTableBits) throw std::domain_error("proof3_table: universe too large to materialize");
    SubsetTable table;
    table.reserve(std::size_t(1) << i);
    for (std::uint64_t n = 0; n < (std::uint64_t(1) << i); ++n) {
        std::vector<BigInt> elems;
        for (unsigned b = 0; b < i; ++b)
            if (n & (std::uint64_t(1) << b)) elems.push_back(b);
        table.emplace_back(std::move(elems));
    }
    return table;
}

SubsetTable proof3_extend(const SubsetTable& table) {
    if (!has_single_bit(table.size()))
        throw std::domain_error("proof3_extend: table size is not a power of two");
    unsigned i = 0;
    while ((std::size_t(1) << i) < table.size()) ++i;
    if (i + 1 > kMaxTableBits) throw std::domain_error("proof3_extend: result too large to materialize");
    for (std::size_t n = 0; n < table.size(); ++n)
        if (bitmask_of(table[n]) != n)
            throw std::domain_error("proof3_extend: malformed input table");
    SubsetTable out = table;
    out.reserve(table.size() * 2);
    for (const FiniteSubset& s : table) out.push_back(s.with(i));
    return out;
}

std::vector<FiniteSubset> proof2_build(unsigned k, unsigned M) {
    if (M < 1) throw std::domain_error("proof2_build: universe must be nonempty");
    if (k < 1) throw std::domain_error("proof2_build: cardinality bound must be >= 1");
    std::set<FiniteSubset> current;
    if (k == 1) {
        for (unsigned j = 0; j < M; ++j) current.insert(FiniteSubset({j}));
    } else {
        // F_2 over ordered pairs renders T_2 \ {}; repeats collapse to sets.
        for (unsigned i = 0; i < M; ++i)
            for (unsigned j = 0; j < M; ++j) current.insert(FiniteSubset({i}).with(j));
        // F_{r+1}: (a, j) -> a u {j}, one round per extra unit of cardinality.
        for (unsigned r = 3; r <= k; ++r) {
            std::set<FiniteSubset> next;
            for (const FiniteSubset& a : current)
                for (unsigned j = 0; j < M; ++j) next.insert(a.with(j));
            current = std::move(next);
        }
    }
    std::vector<FiniteSubset> out(current.begin(), current.end());
    out.emplace_back();  // adjoin the empty subset
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

std::vector<BigInt> powers_of_two(unsigned count) {
    std::vector<BigInt> out;
    out.reserve(count);
    BigInt p = 1;
    for (unsigned i = 0; i < count; ++i) {
        out.push_back(p);
        p *= 2;
    }
    return out;
}

}  // namespace enumlab::powerset
