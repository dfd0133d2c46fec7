#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace enumlab::chains {

/// A possibly negated named statement; ~P is {P, true}.
struct Statement {
    std::string name;
    bool negated = false;

    friend bool operator==(const Statement&, const Statement&) = default;
};

std::string to_string(const Statement& s);

enum class Connective { Implies, Iff };

/// A linear reductio chain. The node sequence is the statements followed by
/// FALSUM when ends_in_falsum is set; connectives[i] joins sequence element
/// i to i+1. Every chain has at least one link.
struct Chain {
    std::vector<Statement> statements;
    std::vector<Connective> connectives;
    bool ends_in_falsum = false;

    friend bool operator==(const Chain&, const Chain&) = default;

    std::size_t sequence_length() const {
        return statements.size() + (ends_in_falsum ? 1 : 0);
    }
    const Statement& initial() const { return statements.front(); }
    /// Terminal statement; empty when the chain ends in FALSUM.
    std::optional<Statement> terminal() const {
        if (ends_in_falsum) return std::nullopt;
        return statements.back();
    }
};

/// Grammar: statements are [~]identifier with identifiers [A-Za-z][A-Za-z0-9]*,
/// connectives are => and <=>, and the terminal may be FALSUM or the written
/// contradiction (R & ~R). Whitespace is insignificant.
Chain parse(std::string_view text);

/// Canonical single-line form; parse(render(c)) == c.
std::string render(const Chain& c);

/// Reachability over sequence positions: each link contributes its forward
/// edge, an IFF also the backward one, except that FALSUM never gains an
/// outgoing edge. Reflexive and transitive.
class Closure {
  public:
    explicit Closure(std::vector<std::vector<bool>> reach) : reach_(std::move(reach)) {}
    bool reaches(std::size_t from, std::size_t to) const { return reach_.at(from).at(to); }
    std::size_t size() const { return reach_.size(); }

  private:
    std::vector<std::vector<bool>> reach_;
};

Closure closure(const Chain& c);

struct Flag {
    Statement statement;
    std::string reason;

    friend bool operator==(const Flag&, const Flag&) = default;
};

struct FlagResult {
    std::vector<Flag> flagged;
    std::vector<std::string> warnings;
};

/// Intermediate statements (neither the initial assumption nor the terminal)
/// that reach both halves of a complementary pair X/~X present in the chain.
/// Without such a pair the result is empty and carries a warning.
FlagResult flag(const Chain& c);

enum class ChainKind { Direct, ExternalReductio, InternalReductio, InvalidInternal, Unknown };

std::string to_string(ChainKind kind);

struct Verdict {
    ChainKind kind = ChainKind::Unknown;
    std::vector<Flag> flagged;
    std::vector<std::string> warnings;
};

Verdict classify(const Chain& c);

struct AuditReport {
    bool pass = false;
    Verdict verdict;
};

/// Fails exactly when flag() is nonempty; an inconceivable initial assumption
/// is the sanctioned exception for reductio chains and never fails by itself.
AuditReport audit(const Chain& c);

}  // namespace enumlab::chains
