#include "enumlab/ratio.hpp"

#include <algorithm>

namespace enumlab::ratio {

namespace {

// Evaluating base^n past this exponent is refused rather than attempted.
constexpr unsigned kMaxExponentBits = 23;

const Rational kConvergeTol{BigInt(1), boost::multiprecision::pow(BigInt(10), 9)};
const Rational kZeroThreshold{BigInt(1), boost::multiprecision::pow(BigInt(10), 12)};
const Rational kInfiniteThreshold{boost::multiprecision::pow(BigInt(10), 12), BigInt(1)};

BigInt ipow(const BigInt& base, const BigInt& n) {
    if (n < 0) throw std::domain_error("formula exponent must be a natural");
    if (n > (BigInt(1) << kMaxExponentBits))
        throw std::overflow_error("formula value too large to evaluate");
    BigInt r = 1, b = base;
    BigInt e = n;
    while (e > 0) {
        if ((e & 1) != 0) r *= b;
        e >>= 1;
        if (e > 0) b *= b;
    }
    return r;
}

}  // namespace

CountingFormula CountingFormula::floor_linear(const BigInt& scale_num, const BigInt& scale_den,
                                              const BigInt& shift) {
    if (scale_num < 0 || shift < 0 || scale_den < 1)
        throw std::domain_error("floor formula must keep values natural");
    CountingFormula f;
    f.kind_ = Kind::FloorLinear;
    f.p_ = scale_num;
    f.q_ = scale_den;
    f.r_ = shift;
    return f;
}

CountingFormula CountingFormula::poly(std::vector<BigInt> coeffs) {
    for (const BigInt& c : coeffs)
        if (c < 0) throw std::domain_error("polynomial coefficients must be natural");
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    CountingFormula f;
    f.kind_ = Kind::Poly;
    f.coeffs_ = std::move(coeffs);
    return f;
}

CountingFormula CountingFormula::exponential(const BigInt& base) {
    if (base < 1) throw std::domain_error("exponential base must be >= 1");
    CountingFormula f;
    f.kind_ = Kind::Exp;
    f.p_ = base;
    f.r_ = 0;
    return f;
}

CountingFormula CountingFormula::affine_exponential(const BigInt& base, const BigInt& shift) {
    if (base < 1) throw std::domain_error("exponential base must be >= 1");
    if (shift < 0) throw std::domain_error("affine shift must be natural");
    CountingFormula f;
    f.kind_ = Kind::AffineExp;
    f.p_ = base;
    f.r_ = shift;
    return f;
}

CountingFormula CountingFormula::ident_shift(const BigInt& shift) {
    if (shift < 0) throw std::domain_error("identity shift must be natural");
    CountingFormula f;
    f.kind_ = Kind::IdentShift;
    f.r_ = shift;
    return f;
}

CountingFormula CountingFormula::custom(std::function<BigInt(const BigInt&)> evaluator) {
    if (!evaluator) throw std::invalid_argument("custom formula requires an evaluator");
    CountingFormula f;
    f.kind_ = Kind::Custom;
    f.eval_ = std::move(evaluator);
    return f;
}

BigInt CountingFormula::operator()(const BigInt& n) const {
    if (n < 0) throw std::domain_error("counting formulas are defined on naturals");
    switch (kind_) {
        case Kind::FloorLinear: return (n * p_ + r_) / q_;
        case Kind::Poly: {
            BigInt acc = 0;
            for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * n + *it;
            return acc;
        }
        case Kind::Exp: return ipow(p_, n);
        case Kind::AffineExp: return ipow(p_, n) + r_;
        case Kind::IdentShift: return n + r_;
        case Kind::Custom: {
            BigInt v = eval_(n);
            if (v < 0) throw std::domain_error("custom formula produced a negative value");
            return v;
        }
    }
    throw std::logic_error("unreachable");
}

CountingFormula::Growth CountingFormula::growth() const {
    Growth g;
    auto constant = [&](const BigInt& c) {
        if (c == 0) {
            g.kind = Growth::Kind::Zero;
        } else {
            g.kind = Growth::Kind::Poly;
            g.degree = 0;
            g.rate = c;
        }
    };
    switch (kind_) {
        case Kind::FloorLinear:
            if (p_ == 0) {
                constant(r_ / q_);
            } else {
                g.kind = Growth::Kind::Poly;
                g.degree = 1;
                g.rate = Rational(p_, q_);
            }
            break;
        case Kind::Poly:
            if (coeffs_.empty()) {
                g.kind = Growth::Kind::Zero;
            } else if (coeffs_.size() == 1) {
                constant(coeffs_[0]);
            } else {
                g.kind = Growth::Kind::Poly;
                g.degree = static_cast<unsigned>(coeffs_.size() - 1);
                g.rate = coeffs_.back();
            }
            break;
        case Kind::Exp:
        case Kind::AffineExp:
            if (p_ == 1) {
                constant(1 + r_);
            } else {
                g.kind = Growth::Kind::Exp;
                g.base = p_;
            }
            break;
        case Kind::IdentShift:
            g.kind = Growth::Kind::Poly;
            g.degree = 1;
            g.rate = 1;
            break;
        case Kind::Custom: throw std::logic_error("custom formulas have no symbolic growth");
    }
    return g;
}

Rational rho_finite(const BigInt& a, const BigInt& b) {
    if (b < 1) throw std::domain_error("rho_finite: |B| must be >= 1");
    if (a < 0) throw std::domain_error("rho_finite: |A| must be >= 0");
    return Rational(a, b);
}

Rational sample_ratio(const CountingFormula& a, const CountingFormula& b, const BigInt& n) {
    BigInt den = b(n);
    if (den == 0) throw std::domain_error("sample_ratio: phi_B vanishes at n=" + n.str());
    return Rational(a(n), den);
}

namespace {

void collect_samples(RatioReport& report, const CountingFormula& a, const CountingFormula& b,
                     unsigned lo_exp, unsigned hi_exp) {
    for (unsigned e = lo_exp; e <= hi_exp; ++e) {
        BigInt n = BigInt(1) << e;
        try {
            BigInt den = b(n);
            if (den == 0) continue;
            report.samples.emplace_back(n, Rational(a(n), den));
        } catch (const std::overflow_error&) {
            break;  // value grew past what we are willing to materialize
        }
    }
}

RatioReport classify_numeric(const CountingFormula& a, const CountingFormula& b) {
    RatioReport report;
    report.method = RatioMethod::Numeric;
    report.tolerance = kConvergeTol;
    collect_samples(report, a, b, 10, 40);
    if (report.samples.empty())
        throw std::domain_error("rho_limit: phi_B is zero on the whole sampled range");
    const auto& s = report.samples;
    if (s.size() >= 3) {
        const Rational& last = s[s.size() - 1].second;
        const Rational& mid = s[s.size() - 2].second;
        const Rational& first = s[s.size() - 3].second;
        if (last == 0 && mid == 0 && first == 0) {
            report.kind = RatioKind::Zero;
            return report;
        }
        if (last != 0 && abs(mid - last) <= abs(last) * kConvergeTol &&
            abs(first - last) <= abs(last) * kConvergeTol) {
            report.kind = RatioKind::Converges;
            report.limit = rationalize(last, boost::multiprecision::pow(BigInt(10), 6));
            return report;
        }
    }
    bool nonincreasing = true, nondecreasing = true;
    for (std::size_t i = 1; i < s.size(); ++i) {
        if (s[i].second > s[i - 1].second) nonincreasing = false;
        if (s[i].second < s[i - 1].second) nondecreasing = false;
    }
    const Rational& last = s.back().second;
    if (nonincreasing && last < kZeroThreshold) {
        report.kind = RatioKind::Zero;
    } else if (nondecreasing && last > kInfiniteThreshold) {
        report.kind = RatioKind::Infinite;
    } else {
        report.kind = RatioKind::Inconclusive;
    }
    return report;
}

}  // namespace

RatioReport rho_limit(const CountingFormula& phi_a, const CountingFormula& phi_b,
                      bool custom_acknowledged) {
    if (phi_a.is_custom() || phi_b.is_custom()) {
        if (!custom_acknowledged)
            throw std::invalid_argument(
                "rho_limit: custom formula pairs require an explicit acknowledgment that the "
                "interim cardinalities are genuinely comparable");
        return classify_numeric(phi_a, phi_b);
    }

    RatioReport report;
    report.method = RatioMethod::Symbolic;

    using GK = CountingFormula::Growth::Kind;
    auto ga = phi_a.growth();
    auto gb = phi_b.growth();
    if (gb.kind == GK::Zero) throw std::domain_error("rho_limit: phi_B is identically zero");

    if (ga.kind == GK::Zero) {
        report.kind = RatioKind::Zero;
    } else if (ga.kind == GK::Poly && gb.kind == GK::Poly) {
        if (ga.degree < gb.degree) {
            report.kind = RatioKind::Zero;
        } else if (ga.degree > gb.degree) {
            report.kind = RatioKind::Infinite;
        } else {
            report.kind = RatioKind::Converges;
            report.limit = ga.rate / gb.rate;
        }
    } else if (ga.kind == GK::Poly && gb.kind == GK::Exp) {
        report.kind = RatioKind::Zero;
    } else if (ga.kind == GK::Exp && gb.kind == GK::Poly) {
        report.kind = RatioKind::Infinite;
    } else {  // Exp vs Exp
        if (ga.base == gb.base) {
            report.kind = RatioKind::Converges;
            report.limit = 1;
        } else {
            report.kind = ga.base < gb.base ? RatioKind::Zero : RatioKind::Infinite;
        }
    }
    collect_samples(report, phi_a, phi_b, 4, 12);
    return report;
}

bool equicardinal(const CountingFormula& phi_a, const CountingFormula& phi_b,
                  bool custom_acknowledged) {
    RatioReport r = rho_limit(phi_a, phi_b, custom_acknowledged);
    if (r.kind == RatioKind::Inconclusive)
        throw std::domain_error("equicardinal: the limiting ratio is undetermined");
    return r.kind == RatioKind::Converges && *r.limit == 1;
}

std::vector<bits::DcEntry> dc_as_rho(unsigned k_max) {
    if (k_max < 1) throw std::domain_error("dc_as_rho: k_max must be >= 1");
    CountingFormula diag_positions = CountingFormula::poly({0, 1});
    CountingFormula all_strings = CountingFormula::exponential(2);
    std::vector<bits::DcEntry> out;
    out.reserve(k_max);
    for (unsigned k = 1; k <= k_max; ++k)
        out.push_back({k, diag_positions(k), all_strings(k)});
    return out;
}

std::string to_string(RatioKind kind) {
    switch (kind) {
        case RatioKind::Converges: return "CONVERGES";
        case RatioKind::Zero: return "ZERO";
        case RatioKind::Infinite: return "INFINITE";
        case RatioKind::Inconclusive: return "INCONCLUSIVE";
    }
    return "?";
}

namespace {

BigInt parse_nat(std::string_view s, std::string_view what) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string_view::npos)
        throw std::invalid_argument("malformed " + std::string(what) + ": '" + std::string(s) + "'");
    return BigInt(std::string(s));
}

// floor:n/2 | floor:2n/3 | floor:(n+2)/2 | floor:(2n+1)/3
CountingFormula parse_floor(std::string_view body) {
    auto slash = body.rfind('/');
    if (slash == std::string_view::npos)
        throw std::invalid_argument("floor formula needs a /denominator");
    BigInt den = parse_nat(body.substr(slash + 1), "floor denominator");
    std::string_view head = body.substr(0, slash);
    BigInt scale = 1, shift = 0;
    if (!head.empty() && head.front() == '(' && head.back() == ')')
        head = head.substr(1, head.size() - 2);
    auto plus = head.find('+');
    if (plus != std::string_view::npos) {
        shift = parse_nat(head.substr(plus + 1), "floor shift");
        head = head.substr(0, plus);
    }
    auto npos = head.find('n');
    if (npos == std::string_view::npos)
        throw std::invalid_argument("floor formula needs the variable n");
    std::string_view coef = head.substr(0, npos);
    if (!coef.empty() && coef.back() == '*') coef.remove_suffix(1);
    if (!coef.empty()) scale = parse_nat(coef, "floor scale");
    if (npos + 1 != head.size())
        throw std::invalid_argument("malformed floor formula");
    return CountingFormula::floor_linear(scale, den, shift);
}

}  // namespace

CountingFormula CountingFormula::parse(std::string_view text) {
    auto colon = text.find(':');
    if (colon == std::string_view::npos)
        throw std::invalid_argument("formula keyword must look like family:args");
    std::string_view family = text.substr(0, colon);
    std::string_view body = text.substr(colon + 1);
    if (family == "floor") return parse_floor(body);
    if (family == "exp") return exponential(parse_nat(body, "exp base"));
    if (family == "affine-exp") {
        auto comma = body.find(',');
        if (comma == std::string_view::npos)
            throw std::invalid_argument("affine-exp needs base,+shift");
        std::string_view shift = body.substr(comma + 1);
        if (!shift.empty() && shift.front() == '+') shift.remove_prefix(1);
        return affine_exponential(parse_nat(body.substr(0, comma), "exp base"),
                                  parse_nat(shift, "affine shift"));
    }
    if (family == "ident") {
        std::string_view shift = body;
        if (!shift.empty() && shift.front() == '+') shift.remove_prefix(1);
        return ident_shift(parse_nat(shift, "identity shift"));
    }
    if (family == "poly") {
        std::vector<BigInt> coeffs;
        std::size_t pos = 0;
        while (pos <= body.size()) {
            auto end = body.find(',', pos);
            if (end == std::string_view::npos) end = body.size();
            coeffs.push_back(parse_nat(body.substr(pos, end - pos), "poly coefficient"));
            pos = end + 1;
        }
        return poly(std::move(coeffs));
    }
    throw std::invalid_argument("unknown formula family: '" + std::string(family) + "'");
}

}  // namespace enumlab::ratio
