#include "enumlab/chain.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

namespace enumlab::chains {

namespace {

struct Token {
    enum class Type { Statement, Implies, Iff, Falsum, End };
    Type type;
    Statement statement;  // when type == Statement
};

class Lexer {
  public:
    explicit Lexer(std::string_view text) : text_(text) {}

    Token next() {
        skip_ws();
        if (pos_ >= text_.size()) return {Token::Type::End, {}};
        char c = text_[pos_];
        if (c == '<') {
            expect("<=>");
            return {Token::Type::Iff, {}};
        }
        if (c == '=') {
            expect("=>");
            return {Token::Type::Implies, {}};
        }
        if (c == '(') return lex_contradiction();
        if (c == '~') {
            ++pos_;
            skip_ws();
            return {Token::Type::Statement, {identifier(), true}};
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string name = identifier();
            if (name == "FALSUM") return {Token::Type::Falsum, {}};
            return {Token::Type::Statement, {std::move(name), false}};
        }
        throw std::invalid_argument(std::string("chain parse: unknown token at '") + c + "'");
    }

  private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    void expect(std::string_view lit) {
        if (text_.substr(pos_, lit.size()) != lit)
            throw std::invalid_argument("chain parse: expected '" + std::string(lit) + "'");
        pos_ += lit.size();
    }

    std::string identifier() {
        if (pos_ >= text_.size() || !std::isalpha(static_cast<unsigned char>(text_[pos_])))
            throw std::invalid_argument("chain parse: expected an identifier");
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    // "(R & ~R)" is the written form of FALSUM; the two names must agree.
    Token lex_contradiction() {
        expect("(");
        skip_ws();
        std::string lhs = identifier();
        skip_ws();
        expect("&");
        skip_ws();
        expect("~");
        skip_ws();
        std::string rhs = identifier();
        skip_ws();
        expect(")");
        if (lhs != rhs)
            throw std::invalid_argument("chain parse: mismatched contradiction (" + lhs + " & ~" +
                                        rhs + ")");
        return {Token::Type::Falsum, {}};
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

std::string to_string(const Statement& s) { return s.negated ? "~" + s.name : s.name; }

Chain parse(std::string_view text) {
    Lexer lexer(text);
    Chain c;
    bool expect_node = true;
    for (Token tok = lexer.next();; tok = lexer.next()) {
        if (tok.type == Token::Type::End) {
            if (expect_node && !c.connectives.empty())
                throw std::invalid_argument("chain parse: dangling connective");
            break;
        }
        if (expect_node) {
            if (tok.type == Token::Type::Statement) {
                c.statements.push_back(tok.statement);
            } else if (tok.type == Token::Type::Falsum) {
                c.ends_in_falsum = true;
            } else {
                throw std::invalid_argument("chain parse: expected a statement");
            }
            expect_node = false;
        } else {
            if (c.ends_in_falsum)
                throw std::invalid_argument("chain parse: FALSUM must be terminal");
            if (tok.type == Token::Type::Implies) {
                c.connectives.push_back(Connective::Implies);
            } else if (tok.type == Token::Type::Iff) {
                c.connectives.push_back(Connective::Iff);
            } else {
                throw std::invalid_argument("chain parse: expected => or <=>");
            }
            expect_node = true;
        }
    }
    if (c.sequence_length() == 0) throw std::invalid_argument("chain parse: empty chain");
    if (c.connectives.empty()) throw std::invalid_argument("chain parse: a chain needs at least one link");
    if (c.ends_in_falsum && c.statements.empty())
        throw std::invalid_argument("chain parse: FALSUM cannot stand alone");
    return c;
}

std::string render(const Chain& c) {
    std::string out;
    for (std::size_t i = 0; i < c.statements.size(); ++i) {
        if (i) out += c.connectives[i - 1] == Connective::Iff ? " <=> " : " => ";
        out += to_string(c.statements[i]);
    }
    if (c.ends_in_falsum)
        out += (c.connectives.back() == Connective::Iff ? " <=> " : " => ") + std::string("FALSUM");
    return out;
}

Closure closure(const Chain& c) {
    std::size_t n = c.sequence_length();
    std::vector reach(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) reach[i][i] = true;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        reach[i][i + 1] = true;
        bool target_is_falsum = c.ends_in_falsum && i + 1 == n - 1;
        if (c.connectives[i] == Connective::Iff && !target_is_falsum) reach[i + 1][i] = true;
    }
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i) {
            if (!reach[i][k]) continue;
            for (std::size_t j = 0; j < n; ++j)
                if (reach[k][j]) reach[i][j] = true;
        }
    return Closure(std::move(reach));
}

FlagResult flag(const Chain& c) {
    FlagResult result;
    // Complementary pairs present among the chain's statements.
    std::set<std::string> plain, negated;
    for (const Statement& s : c.statements) (s.negated ? negated : plain).insert(s.name);
    std::vector<std::string> pairs;
    for (const std::string& name : plain)
        if (negated.count(name)) pairs.push_back(name);
    if (pairs.empty()) {
        result.warnings.push_back("no complementary pair X/~X present in the chain");
        return result;
    }

    Closure reach = closure(c);
    std::size_t n = c.sequence_length();
    std::set<std::pair<std::string, bool>> seen;
    for (std::size_t i = 1; i + 1 < n; ++i) {  // intermediates only
        const Statement& node = c.statements[i];
        for (const std::string& name : pairs) {
            bool hits_plain = false, hits_negated = false;
            for (std::size_t j = 0; j < c.statements.size(); ++j) {
                if (c.statements[j].name != name || !reach.reaches(i, j)) continue;
                (c.statements[j].negated ? hits_negated : hits_plain) = true;
            }
            if (hits_plain && hits_negated) {
                if (seen.insert({node.name, node.negated}).second)
                    result.flagged.push_back(
                        {node, "derives both " + name + " and ~" + name + " (inconceivable)"});
                break;
            }
        }
    }
    return result;
}

std::string to_string(ChainKind kind) {
    switch (kind) {
        case ChainKind::Direct: return "DIRECT";
        case ChainKind::ExternalReductio: return "EXTERNAL_REDUCTIO";
        case ChainKind::InternalReductio: return "INTERNAL_REDUCTIO";
        case ChainKind::InvalidInternal: return "INVALID_INTERNAL";
        case ChainKind::Unknown: return "UNKNOWN";
    }
    return "?";
}

Verdict classify(const Chain& c) {
    Verdict v;
    FlagResult fr = flag(c);
    v.flagged = fr.flagged;
    v.warnings = fr.warnings;
    if (c.ends_in_falsum && c.connectives.back() == Connective::Iff)
        v.warnings.push_back("biconditional link from " + to_string(c.statements.back()) +
                             " to the terminal contradiction");

    const Statement& start = c.initial();
    std::optional<Statement> terminal = c.terminal();
    if (!start.negated && terminal.has_value()) {
        v.kind = ChainKind::Direct;
    } else if (start.negated && !terminal.has_value()) {
        v.kind = ChainKind::ExternalReductio;
    } else if (start.negated && terminal.has_value() && terminal->name == start.name &&
               !terminal->negated) {
        v.kind = v.flagged.empty() ? ChainKind::InternalReductio : ChainKind::InvalidInternal;
    } else {
        v.kind = ChainKind::Unknown;
    }
    return v;
}

AuditReport audit(const Chain& c) {
    AuditReport report;
    report.verdict = classify(c);
    report.pass = report.verdict.flagged.empty();
    return report;
}

}  // namespace enumlab::chains
