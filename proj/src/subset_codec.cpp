#include "enumlab/subset_codec.hpp"

#include <algorithm>

namespace enumlab::subsets {

namespace {

constexpr std::size_t kClassEntryLimit = 1u << 22;

void check_key(const ClassKey& key) {
    if (key.cardinality < 1) throw std::domain_error("class key: cardinality must be >= 1");
    if (key.greatest < 0 || key.greatest + 1 < key.cardinality)
        throw std::domain_error("class key: greatest element must be >= cardinality - 1");
}

}  // namespace

FiniteSubset::FiniteSubset(std::vector<BigInt> elems) : elems_(std::move(elems)) {
    if (!elems_.empty() && elems_.front() < 0)
        throw std::invalid_argument("finite subset: elements must be naturals");
    for (std::size_t i = 1; i < elems_.size(); ++i)
        if (elems_[i - 1] >= elems_[i])
            throw std::invalid_argument("finite subset: elements must be strictly increasing");
}

const BigInt& FiniteSubset::greatest() const {
    if (elems_.empty()) throw std::domain_error("empty subset has no greatest element");
    return elems_.back();
}

bool FiniteSubset::contains(const BigInt& n) const {
    return std::binary_search(elems_.begin(), elems_.end(), n);
}

FiniteSubset FiniteSubset::with(const BigInt& n) const {
    if (contains(n)) return *this;
    std::vector<BigInt> e = elems_;
    e.insert(std::upper_bound(e.begin(), e.end(), n), n);
    FiniteSubset out;
    out.elems_ = std::move(e);
    return out;
}

BigInt class_size(const ClassKey& key) {
    check_key(key);
    return binomial(key.greatest, key.cardinality - 1);
}

std::vector<FiniteSubset> build_class(const ClassKey& key) {
    check_key(key);
    if (class_size(key) > kClassEntryLimit)
        throw std::domain_error("build_class: class too large to materialize");
    if (key.cardinality == 1) return {FiniteSubset({key.greatest})};
    std::vector<FiniteSubset> out;
    for (BigInt k = key.cardinality - 2; k < key.greatest; ++k) {
        for (const FiniteSubset& b : build_class({key.cardinality - 1, k}))
            out.push_back(b.with(key.greatest));
    }
    return out;
}

RankPair rank(const FiniteSubset& s) {
    if (s.empty()) throw std::domain_error("rank: the empty subset has no rank pair");
    // Combinatorial number system in colex order: j' = sum_r C(a_{r-1}, r).
    // This closed form equals the recursive class order: the C(g, i) term is
    // the size of the classes A_i^{i-1} .. A_i^{g-1} that precede A_i^g, and
    // the remaining terms are the position within build_class(i, g).
    BigInt jprime = 0;
    std::uint64_t r = 1;
    for (const BigInt& a : s.elements()) jprime += binomial(a, r++);
    return {s.size(), jprime};
}

FiniteSubset unrank(const RankPair& p) {
    if (p.cardinality < 1) throw std::domain_error("unrank: cardinality must be >= 1");
    if (p.index < 0) throw std::domain_error("unrank: index must be >= 0");
    std::vector<BigInt> elems(p.cardinality);
    BigInt m = p.index;
    for (std::uint64_t r = p.cardinality; r >= 1; --r) {
        // Largest a with C(a, r) <= m, by galloping then bisection.
        BigInt a = r - 1;  // C(r-1, r) = 0 <= m
        BigInt step = 1;
        while (binomial(a + step, r) <= m) {
            a += step;
            step *= 2;
        }
        while (step > 0) {
            if (binomial(a + step, r) <= m) a += step;
            step /= 2;
        }
        elems[r - 1] = a;
        m -= binomial(a, r);
    }
    return FiniteSubset(std::move(elems));
}

std::vector<FiniteSubset> enumerate_subsets(std::uint64_t count) {
    std::vector<FiniteSubset> out;
    out.reserve(count);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        if (idx == 0) {
            out.emplace_back();
            continue;
        }
        auto [a, b] = unpair_index(BigInt(idx) - 1);
        out.push_back(unrank({static_cast<std::uint64_t>(a) + 1, b}));
    }
    return out;
}

BigInt enumeration_index(const FiniteSubset& s) {
    if (s.empty()) return 0;
    RankPair p = rank(s);
    return 1 + pair_index(p.cardinality - 1, p.index);
}

std::string to_string(const FiniteSubset& s) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ',';
        out += s.elements()[i].str();
    }
    return out;
}

FiniteSubset parse_subset(std::string_view text) {
    std::vector<BigInt> elems;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find(',', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string tok(text.substr(pos, end - pos));
        if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("malformed subset element: '" + tok + "'");
        elems.emplace_back(tok);
        pos = end + 1;
    }
    return FiniteSubset(std::move(elems));
}

std::string to_string(const RankPair& p) {
    return std::to_string(p.cardinality) + ":" + p.index.str();
}

RankPair parse_rank_pair(std::string_view text) {
    auto colon = text.find(':');
    if (colon == std::string_view::npos)
        throw std::invalid_argument("rank pair must look like i:jprime");
    std::string i(text.substr(0, colon)), j(text.substr(colon + 1));
    if (i.empty() || j.empty() || i.find_first_not_of("0123456789") != std::string::npos ||
        j.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("malformed rank pair: '" + std::string(text) + "'");
    RankPair p{std::stoull(i), BigInt(j)};
    if (p.cardinality < 1) throw std::domain_error("rank pair: cardinality must be >= 1");
    return p;
}

}  // namespace enumlab::subsets
