#pragma once

#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "enumlab/bitstring.hpp"
#include "enumlab/numeric.hpp"

namespace enumlab::ratio {

enum class RatioKind { Converges, Zero, Infinite, Inconclusive };
enum class RatioMethod { Symbolic, Numeric };

struct RatioReport {
    std::vector<std::pair<BigInt, Rational>> samples;
    RatioKind kind = RatioKind::Inconclusive;
    std::optional<Rational> limit;  // set exactly when kind == Converges
    RatioMethod method = RatioMethod::Symbolic;
    std::optional<Rational> tolerance;  // recorded on the numeric path
};

/// A counting formula phi(n): naturals to naturals. Built-in families carry
/// enough shape for symbolic limit classification; custom evaluators are
/// classified by sampling only.
class CountingFormula {
  public:
    // n -> floor((n*scale_num + shift) / scale_den)
    static CountingFormula floor_linear(const BigInt& scale_num, const BigInt& scale_den,
                                        const BigInt& shift = 0);
    // n -> sum coeffs[d] * n^d (coefficients in ascending degree)
    static CountingFormula poly(std::vector<BigInt> coeffs);
    // n -> base^n
    static CountingFormula exponential(const BigInt& base);
    // n -> base^n + shift
    static CountingFormula affine_exponential(const BigInt& base, const BigInt& shift);
    // n -> n + shift
    static CountingFormula ident_shift(const BigInt& shift);
    // arbitrary evaluator; excluded from the symbolic path
    static CountingFormula custom(std::function<BigInt(const BigInt&)> evaluator);

    BigInt operator()(const BigInt& n) const;
    bool is_custom() const { return kind_ == Kind::Custom; }

    /// Parses the CLI keyword grammar: floor:n/2, floor:(n+2)/2, floor:2n/3,
    /// poly:c0,c1,.., exp:2, affine-exp:2,+1, ident:+1.
    static CountingFormula parse(std::string_view text);

  private:
    enum class Kind { FloorLinear, Poly, Exp, AffineExp, IdentShift, Custom };

    // Asymptotic shape: identically zero, polynomial of some degree with a
    // rational leading rate, or exponential with an integer base >= 2.
    struct Growth {
        enum class Kind { Zero, Poly, Exp } kind = Kind::Zero;
        unsigned degree = 0;
        Rational rate;
        BigInt base;
    };
    Growth growth() const;

    Kind kind_;
    BigInt p_, q_, r_;
    std::vector<BigInt> coeffs_;
    std::function<BigInt(const BigInt&)> eval_;

    friend RatioReport rho_limit(const CountingFormula&, const CountingFormula&, bool);
};

/// |A|/|B| for finite sets; b >= 1.
Rational rho_finite(const BigInt& a, const BigInt& b);

/// phi_A(n)/phi_B(n), exact; throws when phi_B(n) = 0.
Rational sample_ratio(const CountingFormula& a, const CountingFormula& b, const BigInt& n);

/// The limiting ratio of two counting formulas. Recognized built-in pairs
/// take the symbolic path; any custom formula forces the sampling path and
/// requires the caller to acknowledge that the two formulas are genuinely
/// comparable.
RatioReport rho_limit(const CountingFormula& phi_a, const CountingFormula& phi_b,
                      bool custom_acknowledged = false);

/// True exactly when rho_limit converges to 1; throws on an inconclusive
/// sampling verdict.
bool equicardinal(const CountingFormula& phi_a, const CountingFormula& phi_b,
                  bool custom_acknowledged = false);

/// The diagonal cover read as a relative cardinality: entry k carries
/// phi_A(k) = k over phi_B(k) = 2^k, matching the bitstring dc table.
std::vector<bits::DcEntry> dc_as_rho(unsigned k_max);

std::string to_string(RatioKind kind);

}  // namespace enumlab::ratio
