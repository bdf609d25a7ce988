#include "conjugacy/snf.hpp"

#include <algorithm>
#include <utility>

namespace conjugacy::expr {

bool operator==(const SumfreeMonomial& a, const SumfreeMonomial& b) {
    return a.head == b.head && a.segments == b.segments;
}

bool operator==(const MonomialSegment& a, const MonomialSegment& b) {
    return a.tail == b.tail && a.body == b.body;
}

bool denotes_only_epsilon(const SumfreeMonomial& m) {
    if (!words::is_epsilon_pair(m.head)) return false;
    for (const MonomialSegment& s : m.segments) {
        if (!words::is_epsilon_pair(s.tail)) return false;
        if (!denotes_only_epsilon(s.body)) return false;
    }
    return true;
}

SumfreeMonomial simplify_monomial(const SumfreeMonomial& m) {
    SumfreeMonomial out;
    out.head = m.head;
    for (const MonomialSegment& s : m.segments) {
        SumfreeMonomial body = simplify_monomial(s.body);
        if (denotes_only_epsilon(body)) {
            // The star contributes only (epsilon, epsilon): drop it and fuse
            // the tail into the preceding literal.
            if (out.segments.empty()) {
                out.head = out.head + s.tail;
            } else {
                out.segments.back().tail = out.segments.back().tail + s.tail;
            }
        } else {
            out.segments.push_back(MonomialSegment{std::move(body), s.tail});
        }
    }
    return out;
}

std::size_t monomial_tree_size(const SumfreeMonomial& m) {
    std::size_t factors = 1 + 2 * m.segments.size();
    std::size_t total = 1; // head literal
    for (const MonomialSegment& s : m.segments) {
        total += monomial_tree_size(s.body) + 1; // starred body
        total += 1;                              // tail literal
    }
    return total + (factors - 1); // binary concatenation nodes
}

SumfreeMonomial concat_monomials(const SumfreeMonomial& a, const SumfreeMonomial& b) {
    SumfreeMonomial out = a;
    if (out.segments.empty()) {
        out.head = out.head + b.head;
    } else {
        out.segments.back().tail = out.segments.back().tail + b.head;
    }
    out.segments.insert(out.segments.end(), b.segments.begin(), b.segments.end());
    return out;
}

namespace {

// Rendering. A monomial renders as a juxtaposition of factors; epsilon-pair
// literals are dropped when at least one star factor is present. Returns the
// number of factors emitted so star wrapping can avoid redundant parentheses.
std::size_t render_monomial_into(const SumfreeMonomial& m, std::string& out);

void render_pair_into(const WordPair& p, std::string& out) {
    out += '(';
    out += p.u.str();
    out += ',';
    out += p.v.str();
    out += ')';
}

std::size_t render_monomial_into(const SumfreeMonomial& m, std::string& out) {
    const bool has_star = !m.segments.empty();
    std::size_t factors = 0;
    auto emit_pair = [&](const WordPair& p) {
        if (has_star && words::is_epsilon_pair(p)) return;
        render_pair_into(p, out);
        ++factors;
    };
    emit_pair(m.head);
    for (const MonomialSegment& s : m.segments) {
        std::string body;
        std::size_t body_factors = render_monomial_into(s.body, body);
        if (body_factors == 1) {
            out += body;
        } else {
            out += '(';
            out += body;
            out += ')';
        }
        out += '*';
        ++factors;
        emit_pair(s.tail);
    }
    if (factors == 0) {
        // Everything was epsilon: fall back to the bare epsilon pair.
        render_pair_into(WordPair{}, out);
        ++factors;
    }
    return factors;
}

} // namespace

std::string render_monomial(const SumfreeMonomial& m) {
    std::string out;
    render_monomial_into(m, out);
    return out;
}

Expr monomial_to_expr(const SumfreeMonomial& m) {
    std::vector<Expr> factors;
    auto emit_pair = [&](const WordPair& p) {
        if (!words::is_epsilon_pair(p)) factors.push_back(Expr::literal(p));
    };
    emit_pair(m.head);
    for (const MonomialSegment& s : m.segments) {
        factors.push_back(Expr::star(monomial_to_expr(s.body)));
        emit_pair(s.tail);
    }
    if (factors.empty()) return Expr::literal(WordPair{});
    if (factors.size() == 1) return std::move(factors.front());
    return Expr::concat(std::move(factors));
}

namespace {

class SnfBuilder {
public:
    explicit SnfBuilder(std::size_t limit) : limit_(limit) {}

    std::vector<SumfreeMonomial> convert(const Expr& e) {
        switch (e.kind()) {
        case ExprKind::empty_set:
            return {};
        case ExprKind::literal:
            return account({SumfreeMonomial::from_pair(e.pair())});
        case ExprKind::sum: {
            std::vector<SumfreeMonomial> out;
            for (const Expr& c : e.children()) {
                std::vector<SumfreeMonomial> part = convert(c);
                out.insert(out.end(), std::make_move_iterator(part.begin()),
                           std::make_move_iterator(part.end()));
            }
            return out;
        }
        case ExprKind::concat: {
            const auto& kids = e.children();
            std::vector<SumfreeMonomial> acc = convert(kids.front());
            for (std::size_t i = 1; i < kids.size(); ++i) {
                acc = product(acc, convert(kids[i]));
            }
            return acc;
        }
        case ExprKind::star: {
            std::vector<SumfreeMonomial> inner = convert(e.child());
            if (inner.empty()) {
                // 0* denotes {(epsilon, epsilon)}.
                return account({SumfreeMonomial::from_pair(WordPair{})});
            }
            // The inner summands get folded into one wrapped monomial, which is
            // re-accounted whole below.
            for (const SumfreeMonomial& m : inner) total_ -= monomial_tree_size(m);
            SumfreeMonomial body;
            if (inner.size() == 1) {
                body = std::move(inner.front());
            } else {
                // (m1 + ... + mq)* == (m1* m2* ... mq*)*
                body.head = WordPair{};
                for (SumfreeMonomial& mi : inner) {
                    body.segments.push_back(MonomialSegment{std::move(mi), WordPair{}});
                }
            }
            SumfreeMonomial wrapped;
            wrapped.head = WordPair{};
            wrapped.segments.push_back(MonomialSegment{std::move(body), WordPair{}});
            return account({std::move(wrapped)});
        }
        }
        throw std::logic_error("to_snf: unreachable expression kind");
    }

    std::size_t total() const { return total_; }

private:
    std::size_t limit_;
    std::size_t total_ = 0; // accumulated monomial tree nodes across live summands

    std::vector<SumfreeMonomial> account(std::vector<SumfreeMonomial> ms) {
        for (const SumfreeMonomial& m : ms) add(monomial_tree_size(m));
        return ms;
    }

    void add(std::size_t nodes) {
        total_ += nodes;
        if (total_ > limit_) throw SnfLimitError(total_, limit_);
    }

    std::vector<SumfreeMonomial> product(const std::vector<SumfreeMonomial>& a,
                                         const std::vector<SumfreeMonomial>& b) {
        // Sizes of the operands are retired; the pairwise products are accounted
        // as they are built so a blow-up aborts early.
        for (const SumfreeMonomial& m : a) total_ -= monomial_tree_size(m);
        for (const SumfreeMonomial& m : b) total_ -= monomial_tree_size(m);
        std::vector<SumfreeMonomial> out;
        out.reserve(a.size() * b.size());
        for (const SumfreeMonomial& x : a) {
            for (const SumfreeMonomial& y : b) {
                SumfreeMonomial m = concat_monomials(x, y);
                add(monomial_tree_size(m));
                out.push_back(std::move(m));
            }
        }
        return out;
    }
};

} // namespace

SnfResult to_snf(const Expr& e, std::size_t size_limit) {
    SnfBuilder builder(size_limit);
    std::vector<SumfreeMonomial> summands = builder.convert(e);

    std::vector<std::pair<std::string, SumfreeMonomial>> keyed;
    keyed.reserve(summands.size());
    for (SumfreeMonomial& m : summands) {
        keyed.emplace_back(render_monomial(m), std::move(m));
    }
    std::stable_sort(keyed.begin(), keyed.end(),
                     [](const auto& x, const auto& y) { return x.first < y.first; });

    SnfResult result;
    result.input_size = e.node_count();
    result.output_size = 0;
    result.summands.reserve(keyed.size());
    for (auto& [key, m] : keyed) {
        result.output_size += monomial_tree_size(m);
        result.summands.push_back(std::move(m));
    }
    result.output_size += result.summands.size() + 1; // sum spine of the SNF tree
    return result;
}

} // namespace conjugacy::expr
