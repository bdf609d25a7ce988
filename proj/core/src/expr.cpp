#include "conjugacy/expr.hpp"

#include <cctype>
#include <utility>

namespace conjugacy::expr {

Expr Expr::empty_set() {
    return Expr(std::make_shared<const Node>(Node{ExprKind::empty_set, {}, {}}));
}

Expr Expr::literal(WordPair p) {
    return Expr(std::make_shared<const Node>(Node{ExprKind::literal, std::move(p), {}}));
}

static std::vector<Expr> splice(std::vector<Expr> children, ExprKind nested) {
    std::vector<Expr> flat;
    flat.reserve(children.size());
    for (Expr& c : children) {
        if (c.kind() == nested) {
            for (const Expr& g : c.children()) flat.push_back(g);
        } else {
            flat.push_back(std::move(c));
        }
    }
    return flat;
}

Expr Expr::concat(std::vector<Expr> children) {
    std::vector<Expr> flat = splice(std::move(children), ExprKind::concat);
    if (flat.empty()) throw std::invalid_argument("concat of zero expressions");
    if (flat.size() == 1) return std::move(flat.front());
    return Expr(std::make_shared<const Node>(Node{ExprKind::concat, {}, std::move(flat)}));
}

Expr Expr::sum(std::vector<Expr> children) {
    std::vector<Expr> flat = splice(std::move(children), ExprKind::sum);
    if (flat.empty()) throw std::invalid_argument("sum of zero expressions");
    if (flat.size() == 1) return std::move(flat.front());
    return Expr(std::make_shared<const Node>(Node{ExprKind::sum, {}, std::move(flat)}));
}

Expr Expr::star(Expr child) {
    std::vector<Expr> kids;
    kids.push_back(std::move(child));
    return Expr(std::make_shared<const Node>(Node{ExprKind::star, {}, std::move(kids)}));
}

const WordPair& Expr::pair() const {
    if (kind() != ExprKind::literal) throw std::logic_error("pair() on non-literal");
    return node_->pair;
}

const std::vector<Expr>& Expr::children() const {
    if (kind() != ExprKind::concat && kind() != ExprKind::sum)
        throw std::logic_error("children() on non-concat/sum");
    return node_->children;
}

const Expr& Expr::child() const {
    if (kind() != ExprKind::star) throw std::logic_error("child() on non-star");
    return node_->children.front();
}

std::size_t Expr::node_count() const {
    std::size_t n = 1;
    for (const Expr& c : node_->children) n += c.node_count();
    return n;
}

bool operator==(const Expr& a, const Expr& b) {
    if (a.node_ == b.node_) return true;
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
    case ExprKind::empty_set: return true;
    case ExprKind::literal: return a.node_->pair == b.node_->pair;
    default: break;
    }
    const auto& ca = a.node_->children;
    const auto& cb = b.node_->children;
    if (ca.size() != cb.size()) return false;
    for (std::size_t i = 0; i < ca.size(); ++i) {
        if (!(ca[i] == cb[i])) return false;
    }
    return true;
}

namespace {

bool is_punct(char c) {
    return c == '(' || c == ')' || c == '+' || c == '*' || c == ',' || c == '0';
}

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Expr run() {
        scan_unknown_symbols();
        skip_ws();
        Expr e = parse_expr();
        skip_ws();
        if (pos_ != text_.size()) fail_syntax("end of input");
        return e;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;

    void scan_unknown_symbols() const {
        for (std::size_t i = 0; i < text_.size(); ++i) {
            char c = text_[i];
            if (words::is_alphabet_char(c) || is_punct(c) || std::isspace(static_cast<unsigned char>(c)))
                continue;
            auto [line, col] = line_col(i);
            throw ParseError(ParseError::Kind::unknown_symbol, line, col,
                             "unknown symbol '" + std::string(1, c) + "' at line " +
                                 std::to_string(line) + ", column " + std::to_string(col));
        }
    }

    std::pair<std::size_t, std::size_t> line_col(std::size_t at) const {
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i < at && i < text_.size(); ++i) {
            if (text_[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        return {line, col};
    }

    [[noreturn]] void fail_syntax(const std::string& expected) const {
        auto [line, col] = line_col(pos_);
        std::string found = pos_ < text_.size() ? "'" + std::string(1, text_[pos_]) + "'" : "end of input";
        throw ParseError(ParseError::Kind::syntax, line, col,
                         "syntax error at line " + std::to_string(line) + ", column " +
                             std::to_string(col) + ": expected " + expected + ", found " + found);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool at(char c) const { return pos_ < text_.size() && text_[pos_] == c; }

    bool starts_atom() const { return at('(') || at('0'); }

    Word parse_word() {
        std::string out;
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (std::isspace(static_cast<unsigned char>(c))) {
                ++pos_;
                continue;
            }
            if (!words::is_alphabet_char(c)) break;
            out += c;
            ++pos_;
        }
        return Word(out);
    }

    Expr parse_expr() {
        std::vector<Expr> terms;
        terms.push_back(parse_term());
        skip_ws();
        while (at('+')) {
            ++pos_;
            skip_ws();
            terms.push_back(parse_term());
            skip_ws();
        }
        return terms.size() == 1 ? std::move(terms.front()) : Expr::sum(std::move(terms));
    }

    Expr parse_term() {
        std::vector<Expr> factors;
        factors.push_back(parse_factor());
        skip_ws();
        while (starts_atom()) {
            factors.push_back(parse_factor());
            skip_ws();
        }
        return factors.size() == 1 ? std::move(factors.front()) : Expr::concat(std::move(factors));
    }

    Expr parse_factor() {
        Expr e = parse_atom();
        skip_ws();
        while (at('*')) {
            ++pos_;
            e = Expr::star(std::move(e));
            skip_ws();
        }
        return e;
    }

    Expr parse_atom() {
        skip_ws();
        if (at('0')) {
            ++pos_;
            return Expr::empty_set();
        }
        if (!at('(')) fail_syntax("'(' or '0'");
        ++pos_;
        const std::size_t after_paren = pos_;
        Word w = parse_word();
        skip_ws();
        if (at(',')) {
            ++pos_;
            Word w2 = parse_word();
            skip_ws();
            if (!at(')')) fail_syntax("')'");
            ++pos_;
            return Expr::literal(WordPair{std::move(w), std::move(w2)});
        }
        // Not a pair: a grouped expression. A grouped expression never begins
        // with a bare word, so rewinding is unambiguous.
        pos_ = after_paren;
        skip_ws();
        if (pos_ < text_.size() && words::is_alphabet_char(text_[pos_]))
            fail_syntax("',' (a grouped expression cannot begin with a bare word)");
        Expr e = parse_expr();
        skip_ws();
        if (!at(')')) fail_syntax("')'");
        ++pos_;
        return e;
    }
};

void render_into(const Expr& e, std::string& out);

void render_child_of_concat(const Expr& c, std::string& out) {
    if (c.kind() == ExprKind::sum) {
        out += '(';
        render_into(c, out);
        out += ')';
    } else {
        render_into(c, out);
    }
}

void render_into(const Expr& e, std::string& out) {
    switch (e.kind()) {
    case ExprKind::empty_set:
        out += '0';
        return;
    case ExprKind::literal:
        out += '(';
        out += e.pair().u.str();
        out += ',';
        out += e.pair().v.str();
        out += ')';
        return;
    case ExprKind::star: {
        const Expr& c = e.child();
        if (c.kind() == ExprKind::concat || c.kind() == ExprKind::sum) {
            out += '(';
            render_into(c, out);
            out += ')';
        } else {
            render_into(c, out);
        }
        out += '*';
        return;
    }
    case ExprKind::concat:
        for (const Expr& c : e.children()) render_child_of_concat(c, out);
        return;
    case ExprKind::sum: {
        bool first = true;
        for (const Expr& c : e.children()) {
            if (!first) out += '+';
            first = false;
            render_into(c, out);
        }
        return;
    }
    }
}

} // namespace

Expr parse(std::string_view text) { return Parser(text).run(); }

std::string render(const Expr& e) {
    std::string out;
    render_into(e, out);
    return out;
}

} // namespace conjugacy::expr
