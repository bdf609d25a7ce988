#pragma once

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "conjugacy/words.hpp"

namespace conjugacy::expr {

using words::Word;
using words::WordPair;

enum class ExprKind { empty_set, literal, concat, sum, star };

/// Immutable AST of a rational expression over word pairs. Concat and Sum
/// children are flattened (no nested Concat under Concat, likewise for Sum)
/// and have at least two children.
class Expr {
public:
    static Expr empty_set();
    static Expr literal(WordPair p);
    /// Splices nested concats; a single-element list returns that element.
    static Expr concat(std::vector<Expr> children);
    /// Splices nested sums; a single-element list returns that element.
    static Expr sum(std::vector<Expr> children);
    static Expr star(Expr child);

    ExprKind kind() const;
    const WordPair& pair() const;              // literal only
    const std::vector<Expr>& children() const; // concat / sum
    const Expr& child() const;                 // star

    /// Number of nodes in the expression tree.
    std::size_t node_count() const;

    friend bool operator==(const Expr& a, const Expr& b);

private:
    struct Node;
    explicit Expr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

struct Expr::Node {
    ExprKind kind;
    WordPair pair;              // literal
    std::vector<Expr> children; // concat/sum: >= 2 entries; star: 1 entry
};

inline ExprKind Expr::kind() const { return node_->kind; }

class ParseError : public std::runtime_error {
public:
    enum class Kind { syntax, unknown_symbol };

    ParseError(Kind k, std::size_t line, std::size_t column, const std::string& what)
        : std::runtime_error(what), kind(k), line(line), column(column) {}

    Kind kind;
    std::size_t line;   // 1-based
    std::size_t column; // 1-based
};

/// Parses the expression grammar:
///   expr    := term ('+' term)*
///   term    := factor factor*
///   factor  := atom '*'*
///   atom    := pair | '(' expr ')' | '0'
///   pair    := '(' word ',' word ')'
///   word    := [a-z]*
/// Whitespace is ignored; '0' denotes the empty set. After '(' a run of
/// letters followed by ',' is a pair literal, otherwise the parenthesis
/// groups a subexpression.
Expr parse(std::string_view text);

/// Canonical text form; parse(render(e)) is structurally equal to e.
std::string render(const Expr& e);

} // namespace conjugacy::expr
