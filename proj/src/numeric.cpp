#include "enumlab/numeric.hpp"

#include <boost/multiprecision/integer.hpp>

namespace enumlab {

BigInt binomial(const BigInt& n, const BigInt& k) {
    if (k < 0 || n < 0 || k > n) return 0;
    BigInt kk = k;
    if (kk > n - kk) kk = n - kk;
    BigInt r = 1;
    for (BigInt i = 1; i <= kk; ++i) {
        r *= n - kk + i;
        r /= i;  // exact: r is always an integer after the division
    }
    return r;
}

BigInt pow2(unsigned k) { return BigInt(1) << k; }

BigInt triangular(const BigInt& n) { return n * (n + 1) / 2; }

BigInt pair_index(const BigInt& a, const BigInt& b) {
    if (a < 0 || b < 0) throw std::domain_error("pair_index: negative argument");
    return triangular(a + b) + a;
}

std::pair<BigInt, BigInt> unpair_index(const BigInt& z) {
    if (z < 0) throw std::domain_error("unpair_index: negative argument");
    // s = floor((sqrt(8z+1)-1)/2), then fix up rounding of the integer sqrt.
    BigInt disc = 8 * z + 1;
    BigInt s = (sqrt(disc) - 1) / 2;
    while (triangular(s + 1) <= z) ++s;
    while (triangular(s) > z) --s;
    BigInt a = z - triangular(s);
    return {a, s - a};
}

std::string to_string(const Rational& q) {
    std::string s = numerator(q).str();
    if (denominator(q) != 1) s += "/" + denominator(q).str();
    return s;
}

Rational parse_rational(std::string_view text) {
    auto bad = [&] { return std::invalid_argument("malformed rational: '" + std::string(text) + "'"); };
    if (text.empty()) throw bad();
    std::string num, den = "1";
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        num = std::string(text);
    } else {
        num = std::string(text.substr(0, slash));
        den = std::string(text.substr(slash + 1));
    }
    auto digits = [](std::string_view s) {
        if (s.empty()) return false;
        size_t i = s[0] == '-' ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    };
    if (!digits(num) || !digits(den)) throw bad();
    BigInt d(den);
    if (d == 0) throw std::domain_error("rational with zero denominator");
    return Rational(BigInt(num), d);
}

Rational rationalize(const Rational& q, const BigInt& max_den) {
    if (max_den < 1) throw std::domain_error("rationalize: max_den must be >= 1");
    if (denominator(q) <= max_den) return q;
    // Continued-fraction convergents p/q until the denominator bound is hit.
    BigInt a = numerator(q), b = denominator(q);
    BigInt p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    while (b != 0) {
        BigInt t = a / b;
        if (a < 0 && a % b != 0) --t;  // floor division
        BigInt p2 = t * p1 + p0, q2 = t * q1 + q0;
        if (q2 > max_den) {
            // Best semiconvergent still within the bound.
            BigInt steps = (max_den - q0) / q1;
            BigInt ps = steps * p1 + p0, qs = steps * q1 + q0;
            Rational cand1(p1, q1), cand2(ps, qs);
            return abs(cand2 - q) < abs(cand1 - q) ? cand2 : cand1;
        }
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        BigInt r = a - t * b;
        a = b; b = r;
    }
    return Rational(p1, q1);
}

}  // namespace enumlab
