#include <doctest.h>

#include "enumlab/ratio.hpp"

using namespace enumlab;
using namespace enumlab::ratio;

namespace {
using CF = CountingFormula;
}

TEST_SUITE_BEGIN("ratio");

TEST_CASE("finite relative cardinality") {
    CHECK(rho_finite(6, 4) == Rational(3, 2));
    CHECK(rho_finite(0, 5) == 0);
    CHECK(rho_finite(7, 7) == 1);
    CHECK_THROWS_AS(rho_finite(3, 0), std::domain_error);
}

TEST_CASE("headline pairs classify symbolically") {
    auto halves_vs_thirds = rho_limit(CF::floor_linear(1, 2), CF::floor_linear(1, 3));
    CHECK(halves_vs_thirds.kind == RatioKind::Converges);
    CHECK(*halves_vs_thirds.limit == Rational(3, 2));
    CHECK(halves_vs_thirds.method == RatioMethod::Symbolic);

    CHECK(rho_limit(CF::ident_shift(1), CF::affine_exponential(2, 1)).kind == RatioKind::Zero);
    CHECK(rho_limit(CF::poly({0, 1}), CF::exponential(2)).kind == RatioKind::Zero);

    auto evens_vs_odds = rho_limit(CF::floor_linear(1, 2, 2), CF::floor_linear(1, 2, 1));
    CHECK(evens_vs_odds.kind == RatioKind::Converges);
    CHECK(*evens_vs_odds.limit == 1);

    CHECK(rho_limit(CF::exponential(2), CF::poly({0, 0, 1})).kind == RatioKind::Infinite);
    CHECK(rho_limit(CF::exponential(2), CF::exponential(3)).kind == RatioKind::Zero);
    CHECK(rho_limit(CF::exponential(3), CF::exponential(2)).kind == RatioKind::Infinite);
    CHECK(rho_limit(CF::poly({1, 2, 3}), CF::poly({5})).kind == RatioKind::Infinite);
}

TEST_CASE("reflexivity of equicardinality for the built-in families") {
    std::vector<CF> formulas = {CF::floor_linear(1, 2),          CF::floor_linear(3, 7, 2),
                                CF::poly({1, 0, 4}),             CF::exponential(2),
                                CF::affine_exponential(5, 9),    CF::ident_shift(3)};
    for (const CF& f : formulas) {
        auto r = rho_limit(f, f);
        CHECK(r.kind == RatioKind::Converges);
        CHECK(*r.limit == 1);
        CHECK(equicardinal(f, f));
    }
    CHECK_FALSE(equicardinal(CF::poly({0, 1}), CF::exponential(2)));
    CHECK_FALSE(equicardinal(CF::floor_linear(1, 2), CF::floor_linear(1, 3)));
}

TEST_CASE("converging pairs invert to the reciprocal limit") {
    std::vector<std::pair<CF, CF>> pairs = {
        {CF::floor_linear(1, 2), CF::floor_linear(1, 3)},
        {CF::poly({0, 0, 3}), CF::poly({7, 1, 2})},
        {CF::ident_shift(4), CF::floor_linear(5, 3)},
    };
    for (const auto& [a, b] : pairs) {
        auto fwd = rho_limit(a, b), rev = rho_limit(b, a);
        REQUIRE(fwd.kind == RatioKind::Converges);
        REQUIRE(rev.kind == RatioKind::Converges);
        CHECK(*fwd.limit != 0);
        CHECK(*rev.limit == 1 / *fwd.limit);
    }
}

TEST_CASE("sampled ratios stay near the symbolic limit") {
    CF a = CF::floor_linear(1, 2), b = CF::floor_linear(1, 3);
    for (BigInt n = 12; n <= 4096; n *= 2) {
        Rational s = sample_ratio(a, b, n);
        CHECK(abs(s - Rational(3, 2)) <= Rational(3, n));
    }
}

TEST_CASE("zero classifications are corroborated numerically") {
    BigInt n = BigInt(1) << 20;
    CHECK(sample_ratio(CF::poly({0, 1}), CF::exponential(2), n) < Rational(1, 1000));
    CHECK(sample_ratio(CF::ident_shift(1), CF::affine_exponential(2, 1), n) < Rational(1, 1000));
}

TEST_CASE("custom pairs require the comparability acknowledgment") {
    CF a = CF::custom([](const BigInt& n) { return n / 2; });
    CF b = CF::custom([](const BigInt& n) { return n / 3; });
    CHECK_THROWS_AS(rho_limit(a, b), std::invalid_argument);
    auto r = rho_limit(a, b, true);
    CHECK(r.method == RatioMethod::Numeric);
    CHECK(r.kind == RatioKind::Converges);
    CHECK(*r.limit == Rational(3, 2));
    REQUIRE(r.tolerance.has_value());
    CHECK(*r.tolerance == Rational(1, BigInt(1000000000)));
}

TEST_CASE("numeric trend classification") {
    CF shrinking = CF::custom([](const BigInt& n) { return n / 1000; });
    auto zero = rho_limit(shrinking, CF::custom([](const BigInt& n) { return n * n; }), true);
    CHECK(zero.kind == RatioKind::Zero);

    auto inf = rho_limit(CF::custom([](const BigInt& n) { return n * n * n; }),
                         CF::custom([](const BigInt&) { return BigInt(1); }), true);
    CHECK(inf.kind == RatioKind::Infinite);

    // ratio oscillating with the bit length of n: neither trend nor agreement
    auto wobble = [](const BigInt& n) { return msb(n) % 2 == 0 ? n : 3 * n; };
    auto osc = rho_limit(CF::custom(wobble), CF::custom([](const BigInt& n) { return n; }), true);
    CHECK(osc.kind == RatioKind::Inconclusive);
    CHECK_THROWS_AS(
        equicardinal(CF::custom(wobble), CF::custom([](const BigInt& n) { return n; }), true),
        std::domain_error);
}

TEST_CASE("a vanishing denominator formula is rejected") {
    CHECK_THROWS_AS(rho_limit(CF::ident_shift(0), CF::poly({})), std::domain_error);
    CHECK_THROWS_AS(rho_limit(CF::custom([](const BigInt& n) { return n; }),
                              CF::custom([](const BigInt&) { return BigInt(0); }), true),
                    std::domain_error);
    CHECK_THROWS_AS(sample_ratio(CF::ident_shift(0), CF::poly({}), 4), std::domain_error);
}

TEST_CASE("dc_as_rho matches the bitstring dc table bit for bit") {
    auto from_ratio = dc_as_rho(40);
    auto from_bits = bits::dc_sequence(bits::DcFamily::Full, 40);
    REQUIRE(from_ratio.size() == from_bits.size());
    for (std::size_t i = 0; i < from_ratio.size(); ++i) {
        CHECK(from_ratio[i].k == from_bits[i].k);
        CHECK(from_ratio[i].num == from_bits[i].num);
        CHECK(from_ratio[i].den == from_bits[i].den);
    }
    CHECK(from_ratio[3].num == 4);
    CHECK(from_ratio[3].den == 16);
    CHECK(from_ratio[0].value() == Rational(1, 2));
}

TEST_CASE("formula keyword parsing") {
    CHECK(rho_limit(CF::parse("floor:n/2"), CF::parse("floor:n/3")).limit == Rational(3, 2));
    CHECK(rho_limit(CF::parse("floor:(n+2)/2"), CF::parse("floor:(n+1)/2")).limit == Rational(1));
    CHECK(rho_limit(CF::parse("ident:+1"), CF::parse("affine-exp:2,+1")).kind == RatioKind::Zero);
    CHECK(rho_limit(CF::parse("poly:0,1"), CF::parse("exp:2")).kind == RatioKind::Zero);
    CHECK(rho_limit(CF::parse("floor:2n/3"), CF::parse("floor:n/3")).limit == Rational(2));
    CHECK_THROWS_AS(CF::parse("wat:3"), std::invalid_argument);
    CHECK_THROWS_AS(CF::parse("floor:x/2"), std::invalid_argument);
    CHECK_THROWS_AS(CF::parse("exp"), std::invalid_argument);
}

TEST_CASE("continued-fraction rationalization") {
    CHECK(rationalize(Rational(355, 113), 1000) == Rational(355, 113));
    // 3.14159265 = 62831853/20000000; best approximation under 1000 is 355/113
    CHECK(rationalize(Rational(62831853, 20000000), 1000) == Rational(355, 113));
    CHECK(rationalize(Rational(1, 3), 2) == Rational(1, 2));  // closer than 0/1
}

TEST_SUITE_END();
