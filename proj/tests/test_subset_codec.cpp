#include <doctest.h>

#include <set>

#include "brute.hpp"
#include "enumlab/subset_codec.hpp"

using namespace enumlab;
using namespace enumlab::subsets;

namespace {
FiniteSubset S(std::vector<BigInt> v) { return FiniteSubset(std::move(v)); }
}  // namespace

TEST_SUITE_BEGIN("subset_codec");

TEST_CASE("class_size examples") {
    CHECK(class_size({2, 3}) == 3);
    CHECK(class_size({1, 0}) == 1);
    // brute-force oracle: 4-subsets of {0..7} containing 7
    CHECK(brute::subsets_with(4, 7, 8).size() == 35);
    CHECK(class_size({4, 7}) == 35);
    CHECK_THROWS_AS(class_size({4, 2}), std::domain_error);
    CHECK_THROWS_AS(class_size({0, 4}), std::domain_error);
}

TEST_CASE("class sizes match brute-force counts") {
    for (std::uint64_t i = 1; i <= 6; ++i)
        for (std::uint64_t g = i - 1; g <= 12; ++g)
            CHECK(class_size({i, g}) == brute::subsets_with(i, g, 13).size());
}

TEST_CASE("build_class canonical order") {
    CHECK(build_class({1, 5}) == std::vector{S({5})});
    CHECK(build_class({2, 2}) == std::vector{S({0, 2}), S({1, 2})});
    CHECK(build_class({3, 3}) == std::vector{S({0, 1, 3}), S({0, 2, 3}), S({1, 2, 3})});
}

TEST_CASE("build_class agrees with class_size and the brute-force universe") {
    for (std::uint64_t i = 1; i <= 6; ++i)
        for (std::uint64_t g = i - 1; g <= 12; ++g) {
            auto cls = build_class({i, g});
            CHECK(BigInt(cls.size()) == class_size({i, g}));
            auto expected = brute::subsets_with(i, g, 13);
            CHECK(std::set(cls.begin(), cls.end()) == std::set(expected.begin(), expected.end()));
            for (const auto& s : cls) CHECK(s.greatest() == g);
        }
}

TEST_CASE("rank examples") {
    CHECK(rank(S({0, 1})) == RankPair{2, 0});
    CHECK(rank(S({5})) == RankPair{1, 5});
    CHECK(rank(S({1, 2})) == RankPair{2, 2});
    CHECK_THROWS_AS(rank(FiniteSubset{}), std::domain_error);
}

TEST_CASE("rank equals position in build_class order") {
    for (std::uint64_t i = 1; i <= 5; ++i)
        for (std::uint64_t g = i - 1; g <= 10; ++g) {
            auto cls = build_class({i, g});
            // j' of the class's first member is the total size of the
            // preceding classes A_i^{i-1} .. A_i^{g-1}.
            BigInt base = rank(cls.front()).index;
            for (std::size_t m = 0; m < cls.size(); ++m) {
                RankPair p = rank(cls[m]);
                CHECK(p.cardinality == i);
                CHECK(p.index == base + m);
            }
        }
}

TEST_CASE("jprime is zero exactly for initial segments") {
    for (std::uint64_t i = 1; i <= 8; ++i) {
        std::vector<BigInt> seg(i);
        for (std::uint64_t t = 0; t < i; ++t) seg[t] = t;
        CHECK(rank(S(seg)).index == 0);
    }
    CHECK(rank(S({0, 2})).index != 0);
}

TEST_CASE("unrank examples") {
    CHECK(unrank({2, 0}) == S({0, 1}));
    CHECK(unrank({1, 5}) == S({5}));
    CHECK(unrank({2, 2}) == S({1, 2}));
}

TEST_CASE("round trips over the 13-element universe") {
    for (std::uint64_t mask = 1; mask < (1u << 13); ++mask) {
        FiniteSubset s = brute::subset_of_mask(mask);
        RankPair p = rank(s);
        CHECK(unrank(p) == s);
        RankPair again = rank(unrank(p));
        CHECK(again == p);
    }
}

TEST_CASE("binomial identities") {
    // C(g, i-1) = sum_{k=i-2}^{g-1} C(k, i-2)
    for (BigInt i = 2; i <= 20; ++i)
        for (BigInt g = i; g <= 20; ++g) {
            BigInt sum = 0;
            for (BigInt k = i - 2; k <= g - 1; ++k) sum += binomial(k, i - 2);
            CHECK(binomial(g, i - 1) == sum);
        }
    // sum_i C(n, i) = 2^n
    for (unsigned n = 0; n <= 30; ++n) {
        BigInt sum = 0;
        for (BigInt i = 0; i <= n; ++i) sum += binomial(n, i);
        CHECK(sum == pow2(n));
    }
}

TEST_CASE("class size splits into the product of ratios") {
    // C(i+j-1, j) = prod_{t=1..j} (i+t-1)/t evaluated exactly in rationals
    for (std::uint64_t i = 1; i <= 6; ++i)
        for (std::uint64_t g = i - 1; g <= 12; ++g) {
            std::uint64_t j = g - i + 1;
            Rational prod = 1;
            for (std::uint64_t t = 1; t <= j; ++t) prod *= Rational(i + t - 1, t);
            CHECK(denominator(prod) == 1);
            CHECK(numerator(prod) == class_size({i, g}));
        }
}

TEST_CASE("enumeration reserves index 0 for the empty subset") {
    auto first = enumerate_subsets(1);
    REQUIRE(first.size() == 1);
    CHECK(first[0].empty());
    CHECK(enumerate_subsets(0).empty());
}

TEST_CASE("enumeration places each small subset at 1 + pi(i-1, jprime)") {
    CHECK(enumeration_index(S({0, 1})) == 1 + pair_index(1, 0));
    auto prefix = enumerate_subsets(2700);
    for (std::uint64_t mask = 1; mask < (1u << 8); ++mask) {
        FiniteSubset s = brute::subset_of_mask(mask);
        BigInt idx = enumeration_index(s);
        REQUIRE(idx < prefix.size());
        CHECK(prefix[static_cast<std::size_t>(idx)] == s);
    }
}

TEST_CASE("enumeration prefixes are duplicate-free") {
    auto prefix = enumerate_subsets(10000);
    std::set<FiniteSubset> seen(prefix.begin(), prefix.end());
    CHECK(seen.size() == prefix.size());
}

TEST_CASE("serialization") {
    CHECK(to_string(S({0, 2, 5})) == "0,2,5");
    CHECK(to_string(FiniteSubset{}) == "");
    CHECK(parse_subset("0,2,5") == S({0, 2, 5}));
    CHECK(parse_subset("") == FiniteSubset{});
    CHECK_THROWS_AS(parse_subset("2,1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_subset("a,b"), std::invalid_argument);
    CHECK(to_string(RankPair{2, 0}) == "2:0");
    CHECK(parse_rank_pair("17:123456789012345678901234567890") ==
          RankPair{17, BigInt("123456789012345678901234567890")});
    CHECK_THROWS_AS(parse_rank_pair("12"), std::invalid_argument);
}

TEST_CASE("subset invariants are enforced") {
    CHECK_THROWS_AS(S({1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(S({3, 2}), std::invalid_argument);
    CHECK(S({1, 2}).with(1) == S({1, 2}));
    CHECK(S({1, 3}).with(2) == S({1, 2, 3}));
}

TEST_SUITE_END();
