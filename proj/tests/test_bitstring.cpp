#include <doctest.h>

#include <random>

#include "enumlab/bitstring.hpp"

using namespace enumlab;
using namespace enumlab::bits;

TEST_SUITE_BEGIN("bitstring");

TEST_CASE("full arrays list strings in ascending binary order") {
    auto a2 = full_array(2);
    REQUIRE(a2.rows() == 4);
    CHECK(a2.row(0).str() == "00");
    CHECK(a2.row(1).str() == "01");
    CHECK(a2.row(2).str() == "10");
    CHECK(a2.row(3).str() == "11");
    auto a0 = full_array(0);
    CHECK(a0.rows() == 1);
    CHECK(a0.row(0).length() == 0);
    CHECK(full_array(3).row(5).str() == "101");
    CHECK(full_array(12).rows() == 4096);
    CHECK_THROWS_AS(full_array(40), std::domain_error);
}

TEST_CASE("antidiagonals of the full arrays") {
    CHECK(antidiagonal(full_array(1)).str() == "1");
    CHECK(antidiagonal(full_array(2)).str() == "10");
    CHECK(antidiagonal(full_array(3)).str() == "111");
    CHECK(antidiagonal(full_array(4)).str() == "1100");
    CHECK(antidiagonal(StringArray({BitString::parse("0")})).str() == "1");
    CHECK_THROWS_AS(antidiagonal(StringArray{}), std::domain_error);
}

TEST_CASE("antidiagonal pads unreached positions with 0") {
    // 2 rows of length 4: the walk covers positions 0 and 1 only.
    StringArray a({BitString::parse("1111"), BitString::parse("1111")});
    CHECK(antidiagonal(a).str() == "0000");
}

TEST_CASE("the antidiagonal reappears further down the full array") {
    unsigned expected_row[] = {1, 2, 7, 12};
    for (unsigned k = 1; k <= 4; ++k) {
        auto a = full_array(k);
        auto found = locate(a, antidiagonal(a));
        REQUIRE(found.has_value());
        CHECK(*found == expected_row[k - 1]);
    }
}

TEST_CASE("locate") {
    CHECK(locate(full_array(4), BitString::parse("1100")) == 12);
    CHECK(locate(full_array(2), BitString::parse("10")) == 2);
    CHECK_THROWS_AS(locate(full_array(2), BitString::parse("101")), std::domain_error);
}

TEST_CASE("finite diagonal cover") {
    CHECK(diagonal_cover_finite(16, 4) == Rational(1, 4));
    CHECK(diagonal_cover_finite(3, 5) == 1);
    CHECK(diagonal_cover_finite(7, 7) == 1);
    CHECK_THROWS_AS(diagonal_cover_finite(0, 3), std::domain_error);
}

TEST_CASE("dc sequences") {
    auto full = dc_sequence(DcFamily::Full, 40);
    CHECK(full[0].value() == Rational(1, 2));
    CHECK(full[3].num == 4);
    CHECK(full[3].den == 16);
    for (unsigned k = 1; k <= 20; ++k)
        CHECK(full[k - 1].value() == diagonal_cover_finite(pow2(k), k));
    // strictly decreasing from k = 2 on, and negligible by k = 40
    for (std::size_t i = 2; i < full.size(); ++i) CHECK(full[i].value() < full[i - 1].value());
    CHECK(full[39].value() < Rational(1, BigInt(1000000000)));

    for (const auto& e : dc_sequence(DcFamily::S2, 24)) CHECK(e.value() == Rational(1, 2));
    auto bound = dc_sequence(DcFamily::Sq1Bound, 8);
    CHECK(bound[7].num == 8);
    CHECK(bound[7].den == 256);
    CHECK_THROWS_AS(dc_sequence(DcFamily::Full, 0), std::domain_error);
}

TEST_CASE("s2 arrays alternate a lone 1 and a lone 0") {
    auto a = s2_array(1, 10);
    REQUIRE(a.rows() == 2);
    CHECK(a.row(0).str() == "1000000000");
    CHECK(a.row(1).str() == "0111111111");
    CHECK(s2_array(2, 8).row(2).str() == "01000000");
    CHECK(s2_array(0, 4).rows() == 0);
    CHECK_THROWS_AS(s2_array(5, 4), std::domain_error);
}

TEST_CASE("hamming census by formula and by brute force") {
    auto c3 = hamming_census(3);
    CHECK(c3.census == std::vector<BigInt>{1, 3, 3, 1});
    CHECK(c3.included == 3);
    CHECK(c3.excluded == 5);
    CHECK(hamming_census(1).excluded == 1);

    for (unsigned k = 1; k <= 12; ++k) {
        auto c = hamming_census(k);
        CHECK(c.included + c.excluded == pow2(k));
        CHECK(c.included == k);
        CHECK(c.excluded == pow2(k) - k);
        // brute force against a fixed template
        std::vector<BigInt> counts(k + 1, 0);
        std::uint64_t tmpl = 0x5a5a5a5a5a5a5a5aULL & ((std::uint64_t(1) << k) - 1);
        for (std::uint64_t s = 0; s < (std::uint64_t(1) << k); ++s)
            ++counts[static_cast<unsigned>(__builtin_popcountll(s ^ tmpl))];
        CHECK(counts == c.census);
    }
    for (unsigned k = 3; k <= 20; ++k) {
        auto c = hamming_census(k);
        CHECK(c.excluded > c.included);
    }
}

TEST_CASE("antidiagonal disagrees with every walked row") {
    std::mt19937 rng(20260809);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t rows = 1 + rng() % 16, len = 1 + rng() % 16;
        std::vector<BitString> rs;
        for (std::size_t r = 0; r < rows; ++r) {
            std::vector<bool> bits(len);
            for (std::size_t i = 0; i < len; ++i) bits[i] = rng() & 1;
            rs.emplace_back(std::move(bits));
        }
        StringArray a(std::move(rs));
        BitString anti = antidiagonal(a);
        for (std::size_t n = 0; n < std::min(rows, len); ++n)
            CHECK(anti.bit(n) != a.row(n).bit(n));
    }
}

TEST_CASE("diagonal report bundles the pieces") {
    auto r = diagonal_report(full_array(3));
    CHECK(r.cover == Rational(3, 8));
    CHECK(r.antidiag.str() == "111");
    CHECK(r.found_at == 7);
    BigInt total = 0;
    for (const auto& [d, count] : r.census) total += count;
    CHECK(total == 8);

    auto partial = diagonal_report(s2_array(2, 4));
    CHECK(partial.census.empty());
    CHECK(partial.cover == 1);
}

TEST_SUITE_END();
