#include "enumlab/realline.hpp"

#include <map>

namespace enumlab::realline {

namespace {

void check_unit(const Rational& q, const char* who) {
    if (q < 0 || q >= 1) throw std::domain_error(std::string(who) + ": value must lie in [0, 1)");
}

}  // namespace

std::vector<Rational> q01_list(std::size_t n) {
    std::vector<Rational> out;
    out.reserve(n);
    if (n == 0) return out;
    out.emplace_back(0);
    for (BigInt b = 2; out.size() < n; ++b)
        for (BigInt a = 1; a < b && out.size() < n; ++a)
            if (gcd(a, b) == 1) out.emplace_back(a, b);
    return out;
}

BitString to_binary(const Rational& q, std::size_t digits) {
    check_unit(q, "to_binary");
    std::vector<bool> bits(digits);
    BigInt rem = numerator(q);
    const BigInt den = denominator(q);
    for (std::size_t i = 0; i < digits; ++i) {
        rem *= 2;
        if (rem >= den) {
            bits[i] = true;
            rem -= den;
        }
    }
    return BitString(std::move(bits));
}

Rational BinaryExpansion::value() const {
    // 0.p1..pa(s1..sb) = (P + S/(2^b - 1)) / 2^a
    BigInt p = 0, s = 0;
    for (std::size_t i = 0; i < prefix.length(); ++i) p = p * 2 + (prefix.bit(i) ? 1 : 0);
    for (std::size_t i = 0; i < period.length(); ++i) s = s * 2 + (period.bit(i) ? 1 : 0);
    Rational tail = 0;
    if (period.length() > 0 && s != 0)
        tail = Rational(s, (BigInt(1) << period.length()) - 1);
    return (Rational(p) + tail) / Rational(BigInt(1) << prefix.length());
}

BinaryExpansion eventually_periodic(const Rational& q) {
    check_unit(q, "eventually_periodic");
    const BigInt den = denominator(q);
    std::map<BigInt, std::size_t> seen;
    std::vector<bool> digits;
    BigInt rem = numerator(q);
    while (!seen.count(rem)) {
        seen[rem] = digits.size();
        rem *= 2;
        if (rem >= den) {
            digits.push_back(true);
            rem -= den;
        } else {
            digits.push_back(false);
        }
    }
    std::size_t split = seen[rem];
    BinaryExpansion e;
    e.prefix = BitString(std::vector<bool>(digits.begin(), digits.begin() + split));
    e.period = BitString(std::vector<bool>(digits.begin() + split, digits.end()));
    return e;
}

AntidiagResult antidiag_rationals(std::size_t n, std::size_t digits, std::size_t search_limit) {
    if (n > digits) throw std::domain_error("antidiag_rationals: need digits >= rows");
    std::vector<Rational> rows = q01_list(n);
    std::vector<bool> bits(n);
    for (std::size_t r = 0; r < n; ++r) bits[r] = !to_binary(rows[r], r + 1).bit(r);
    AntidiagResult result{BitString(std::move(bits)), std::nullopt};
    for (const Rational& q : q01_list(search_limit)) {
        if (to_binary(q, n) == result.bits) {
            result.match = q;
            break;
        }
    }
    return result;
}

namespace {

// Kuhn's augmenting-path matching, queries processed in the given order.
class RowMatcher {
  public:
    explicit RowMatcher(const std::vector<std::vector<std::size_t>>& feasible)
        : feasible_(feasible), owner_by_row_() {}

    std::optional<std::size_t> row_of(std::size_t query) const {
        for (const auto& [row, owner] : owner_by_row_)
            if (owner == query) return row;
        return std::nullopt;
    }

    bool place(std::size_t query) {
        std::vector<bool> visited(feasible_.size(), false);
        return augment(query, visited);
    }

  private:
    bool augment(std::size_t query, std::vector<bool>& visited) {
        if (visited[query]) return false;
        visited[query] = true;
        for (std::size_t row : feasible_[query]) {
            auto it = owner_by_row_.find(row);
            if (it == owner_by_row_.end() || augment(it->second, visited)) {
                owner_by_row_[row] = query;
                return true;
            }
        }
        return false;
    }

    const std::vector<std::vector<std::size_t>>& feasible_;
    std::map<std::size_t, std::size_t> owner_by_row_;
};

}  // namespace

ReorderReport reorder_demo(const Rational& q_diag, std::size_t window,
                           const std::vector<Rational>& queries) {
    check_unit(q_diag, "reorder_demo");
    if (window < 1) throw std::domain_error("reorder_demo: window must be >= 1");
    BitString diag = to_binary(q_diag, window);

    ReorderReport report;
    report.antidiagonal_bits = diag.complemented();
    if (q_diag > 0) report.antidiagonal = Rational(1) - q_diag;

    std::vector<std::vector<std::size_t>> feasible(queries.size());
    for (std::size_t qi = 0; qi < queries.size(); ++qi) {
        check_unit(queries[qi], "reorder_demo query");
        BitString bits = to_binary(queries[qi], window);
        for (std::size_t r = 0; r < window; ++r)
            if (bits.bit(r) == diag.bit(r)) feasible[qi].push_back(r);
    }

    RowMatcher matcher(feasible);
    for (std::size_t qi = 0; qi < queries.size(); ++qi) matcher.place(qi);
    for (std::size_t qi = 0; qi < queries.size(); ++qi) {
        Placement p{queries[qi], feasible[qi], matcher.row_of(qi)};
        if (!p.row.has_value()) report.excluded.push_back(queries[qi]);
        report.placements.push_back(std::move(p));
    }
    return report;
}

NestedRun nested_intervals(const std::vector<Rational>& pool, const Interval& start,
                           std::size_t steps) {
    if (start.lo >= start.hi) throw std::domain_error("nested_intervals: degenerate start interval");
    NestedRun run;
    run.intervals.push_back(start);
    Interval cur = start;
    for (std::size_t v = 0; v < steps; ++v) {
        std::optional<Rational> first, second;
        for (const Rational& w : pool) {
            if (w <= cur.lo || w >= cur.hi) continue;
            if (!first) {
                first = w;
            } else {
                second = w;
                break;
            }
        }
        if (!second) {
            run.exhausted = true;
            break;
        }
        Rational alpha = std::min(*first, *second), beta = std::max(*first, *second);
        run.picks.emplace_back(alpha, beta);
        cur = {alpha, beta};
        run.intervals.push_back(cur);
    }
    return run;
}

}  // namespace enumlab::realline
