#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace enumlab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exact binomial coefficient; 0 outside the triangle.
BigInt binomial(const BigInt& n, const BigInt& k);

BigInt pow2(unsigned k);

/// n-th triangular number n(n+1)/2.
BigInt triangular(const BigInt& n);

/// Diagonal pairing pi(a, b) = (a+b)(a+b+1)/2 + a.
BigInt pair_index(const BigInt& a, const BigInt& b);

/// Inverse of pair_index.
std::pair<BigInt, BigInt> unpair_index(const BigInt& z);

/// "a/b", or just "a" when b == 1.
std::string to_string(const Rational& q);

/// Accepts "a", "a/b" and an optional leading '-'.
Rational parse_rational(std::string_view text);

/// Best rational approximation of q with denominator <= max_den,
/// by continued-fraction convergents.
Rational rationalize(const Rational& q, const BigInt& max_den);

}  // namespace enumlab
