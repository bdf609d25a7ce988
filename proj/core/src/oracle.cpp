#include "conjugacy/oracle.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

namespace conjugacy::oracle {

using words::Cut;
using words::cuts;
using words::is_conjugate;
using words::is_epsilon_pair;
using words::is_witness;
using words::omega_prefix;
using words::shortlex_less;

namespace {

class Enumerator {
public:
    explicit Enumerator(const EnumBounds& b) : bounds_(b) {}

    std::set<WordPair> eval(const Expr& e) {
        switch (e.kind()) {
        case expr::ExprKind::empty_set:
            return {};
        case expr::ExprKind::literal: {
            std::set<WordPair> out;
            add(out, e.pair());
            return out;
        }
        case expr::ExprKind::sum: {
            std::set<WordPair> out;
            for (const Expr& c : e.children()) {
                for (const WordPair& p : eval(c)) add(out, p);
            }
            return out;
        }
        case expr::ExprKind::concat: {
            const auto& kids = e.children();
            std::set<WordPair> acc = eval(kids.front());
            for (std::size_t i = 1; i < kids.size(); ++i) {
                std::set<WordPair> rhs = eval(kids[i]);
                std::set<WordPair> next;
                for (const WordPair& a : acc) {
                    for (const WordPair& b : rhs) add(next, a + b);
                }
                acc = std::move(next);
            }
            return acc;
        }
        case expr::ExprKind::star: {
            std::set<WordPair> base = eval(e.child());
            std::set<WordPair> acc{WordPair{}};
            std::set<WordPair> last = acc;
            std::size_t k = 0;
            for (; k < bounds_.max_unroll; ++k) {
                std::set<WordPair> next;
                for (const WordPair& a : last) {
                    for (const WordPair& b : base) add(next, a + b);
                }
                std::set<WordPair> fresh;
                for (const WordPair& p : next) {
                    if (!acc.contains(p)) fresh.insert(p);
                }
                if (fresh.empty()) break; // fixpoint: further unrolling adds nothing
                for (const WordPair& p : fresh) add(acc, p);
                last = std::move(fresh);
            }
            if (k == bounds_.max_unroll && !last.empty() && !base.empty()) {
                // The unroll cap was binding: deeper iterations exist.
                truncated_ = true;
            }
            return acc;
        }
        }
        throw std::logic_error("enumerate_pairs: unreachable expression kind");
    }

    bool truncated() const { return truncated_; }

private:
    const EnumBounds& bounds_;
    bool truncated_ = false;

    void add(std::set<WordPair>& s, const WordPair& p) {
        if (p.u.size() > bounds_.max_len || p.v.size() > bounds_.max_len) {
            truncated_ = true;
            return;
        }
        if (s.contains(p)) return;
        if (s.size() >= bounds_.max_pairs) {
            truncated_ = true;
            return;
        }
        s.insert(p);
    }
};

} // namespace

PairEnumeration enumerate_pairs(const Expr& e, const EnumBounds& b) {
    Enumerator en(b);
    std::set<WordPair> pairs = en.eval(e);
    PairEnumeration out;
    out.pairs.assign(pairs.begin(), pairs.end());
    out.truncated = en.truncated();
    return out;
}

std::optional<WordPair> check_all_conjugate(const std::vector<WordPair>& pairs) {
    for (const WordPair& p : pairs) {
        if (!is_conjugate(p.u, p.v)) return p;
    }
    return std::nullopt;
}

namespace {

std::set<Word> cut_family(const WordPair& p, Side side, std::size_t max_len) {
    std::set<Word> out;
    for (const Cut& c : cuts(p.u, p.v)) {
        const Word step = side == Side::inner ? c.x + c.y : c.y + c.x;
        Word z = side == Side::inner ? c.x : c.y;
        while (z.size() <= max_len) {
            out.insert(z);
            if (step.empty()) break; // only for the degenerate (epsilon, epsilon) cut
            z = step + z;
        }
    }
    return out;
}

} // namespace

std::vector<Word> brute_witnesses(const std::vector<WordPair>& pairs, Side side,
                                  std::size_t max_len) {
    if (pairs.empty()) throw std::invalid_argument("brute_witnesses: empty pair set");
    std::vector<const WordPair*> constraining;
    for (const WordPair& p : pairs) {
        if (!is_conjugate(p.u, p.v))
            throw std::invalid_argument("brute_witnesses: non-conjugate input pair");
        if (!is_epsilon_pair(p)) constraining.push_back(&p);
    }
    if (constraining.empty())
        throw std::invalid_argument(
            "brute_witnesses: every pair is (epsilon, epsilon); all words are witnesses");

    std::set<Word> acc = cut_family(*constraining.front(), side, max_len);
    for (std::size_t i = 1; i < constraining.size() && !acc.empty(); ++i) {
        std::set<Word> fam = cut_family(*constraining[i], side, max_len);
        std::set<Word> kept;
        for (const Word& w : acc) {
            if (fam.contains(w)) kept.insert(w);
        }
        acc = std::move(kept);
    }
    std::vector<Word> out(acc.begin(), acc.end());
    std::sort(out.begin(), out.end(), shortlex_less);
    return out;
}

std::vector<Word> naive_witnesses(const std::vector<WordPair>& pairs, Side side,
                                  std::size_t max_len, std::string_view alphabet) {
    std::vector<Word> out;
    std::vector<Word> level{Word::epsilon()};
    for (std::size_t len = 0; len <= max_len; ++len) {
        for (const Word& z : level) {
            bool ok = true;
            for (const WordPair& p : pairs) {
                if (!is_witness(z, p, side)) {
                    ok = false;
                    break;
                }
            }
            if (ok) out.push_back(z);
        }
        if (len == max_len) break;
        std::vector<Word> next;
        next.reserve(level.size() * alphabet.size());
        for (const Word& z : level) {
            for (char c : alphabet) next.push_back(z + Word(std::string_view(&c, 1)));
        }
        level = std::move(next);
    }
    return out;
}

namespace {

// Language of a monomial stratified by total star-unroll budget: levels[b] are
// the pairs derivable using exactly b star iterations summed over all nesting
// levels. Pairs longer than word_cap are dropped.
using Levels = std::vector<std::set<WordPair>>;

void add_capped(std::set<WordPair>& s, const WordPair& p, std::size_t cap) {
    if (p.u.size() <= cap && p.v.size() <= cap) s.insert(p);
}

Levels monomial_levels(const SumfreeMonomial& m, std::size_t max_budget, std::size_t cap) {
    Levels acc(max_budget + 1);
    add_capped(acc[0], m.head, cap);
    for (const expr::MonomialSegment& seg : m.segments) {
        Levels body = monomial_levels(seg.body, max_budget, cap);

        // Star of the body: one iteration costs 1 plus the budget of the
        // iterated pair.
        Levels star(max_budget + 1);
        star[0].insert(WordPair{});
        for (std::size_t b = 1; b <= max_budget; ++b) {
            for (std::size_t bi = 0; bi + 1 <= b; ++bi) {
                for (const WordPair& s : star[b - 1 - bi]) {
                    for (const WordPair& p : body[bi]) add_capped(star[b], s + p, cap);
                }
            }
        }

        Levels next(max_budget + 1);
        for (std::size_t b1 = 0; b1 <= max_budget; ++b1) {
            for (const WordPair& a : acc[b1]) {
                for (std::size_t b2 = 0; b1 + b2 <= max_budget; ++b2) {
                    for (const WordPair& s : star[b2]) add_capped(next[b1 + b2], a + s + seg.tail, cap);
                }
            }
        }
        acc = std::move(next);
    }
    return acc;
}

} // namespace

std::optional<WordPair> find_counterexample(const SumfreeMonomial& m,
                                            std::size_t max_total_unroll, std::size_t word_cap) {
    Levels levels = monomial_levels(m, max_total_unroll, word_cap);
    std::set<WordPair> seen;
    for (const std::set<WordPair>& level : levels) {
        for (const WordPair& p : level) {
            if (!seen.insert(p).second) continue;
            if (!is_conjugate(p.u, p.v)) return p;
        }
    }
    return std::nullopt;
}

bool replay_empty_evidence(const EmptyEvidence& e) {
    using Kind = EmptyEvidence::Kind;
    switch (e.kind) {
    case Kind::skewed_star_body:
        return e.pair_a.u.size() != e.pair_a.v.size();
    case Kind::non_conjugate_pair:
        return !is_conjugate(e.pair_a.u, e.pair_a.v);
    case Kind::no_common_root_witness: {
        // Any common inner witness is a prefix of u1^omega, any common outer
        // witness a prefix of v1^omega; a unique common witness of two
        // distinct primitive pairs is at most 2*max(|u1|,|u2|) long.
        if (e.pair_a.u.empty() || e.pair_b.u.empty()) return false;
        const std::size_t bound = 2 * std::max(e.pair_a.u.size(), e.pair_b.u.size());
        for (std::size_t len = 0; len <= bound; ++len) {
            Word zi = len == 0 ? Word::epsilon() : omega_prefix(e.pair_a.u, len);
            if (is_witness(zi, e.pair_a, Side::inner) && is_witness(zi, e.pair_b, Side::inner))
                return false;
            Word zo = len == 0 ? Word::epsilon() : omega_prefix(e.pair_a.v, len);
            if (is_witness(zo, e.pair_a, Side::outer) && is_witness(zo, e.pair_b, Side::outer))
                return false;
        }
        return true;
    }
    case Kind::witness_rejected: {
        if (!e.a_inner && !e.a_outer) return false;
        if (e.a_inner && is_witness(e.word_a, e.pair_a, Side::inner)) return false;
        if (e.a_outer && is_witness(e.word_a, e.pair_a, Side::outer)) return false;
        return true;
    }
    case Kind::witness_words_differ:
        return e.word_a != e.word_b;
    case Kind::witness_sides_conflict:
        return !(e.a_inner && e.b_inner) && !(e.a_outer && e.b_outer);
    case Kind::delay_unavailable:
        if (e.a_inner) return !words::suffix_delay(e.word_a, e.word_b).has_value();
        return !words::prefix_delay(e.word_a, e.word_b).has_value();
    }
    return false;
}

OracleReport cross_validate(const Expr& e, const EnumBounds& b, std::size_t witness_len) {
    PairEnumeration en = enumerate_pairs(e, b);
    OracleReport rep;
    rep.pairs_checked = en.pairs.size();
    rep.truncated = en.truncated;
    // Report the minimal failure by (combined length, lexicographic), matching
    // the iteration-depth-minimal counterexamples of the bounded search.
    for (const WordPair& p : en.pairs) {
        if (is_conjugate(p.u, p.v)) continue;
        if (!rep.counterexample) {
            rep.counterexample = p;
            continue;
        }
        const auto key = [](const WordPair& q) {
            return std::make_tuple(q.u.size() + q.v.size(), q.u.str(), q.v.str());
        };
        if (key(p) < key(*rep.counterexample)) rep.counterexample = p;
    }

    bool witnesses_computed = false;
    if (!rep.counterexample && !en.pairs.empty()) {
        const bool all_eps = std::all_of(en.pairs.begin(), en.pairs.end(),
                                         [](const WordPair& p) { return is_epsilon_pair(p); });
        if (all_eps) {
            rep.witnesses_unconstrained = true;
        } else {
            rep.inner_witnesses = brute_witnesses(en.pairs, Side::inner, witness_len);
            rep.outer_witnesses = brute_witnesses(en.pairs, Side::outer, witness_len);
            witnesses_computed = true;
        }
    }

    const witness::ConjugacyReport engine = witness::decide(e);

    if (engine.conjugate && rep.counterexample) {
        throw CrossValidationError("engine verdict conjugate, but the oracle found the pair (" +
                                   rep.counterexample->u.str() + ", " +
                                   rep.counterexample->v.str() + ")");
    }
    if (!engine.conjugate && !rep.counterexample && !rep.truncated) {
        throw CrossValidationError(
            "engine verdict non-conjugate, but the fully enumerated language is conjugate");
    }

    if (engine.summands.size() == 1 && !rep.counterexample && !en.pairs.empty()) {
        const witness::WitnessSet& ws = engine.summands.front().witnesses;
        if (ws.kind() == witness::WitnessSet::Kind::universal) {
            if (witnesses_computed) {
                throw CrossValidationError(
                    "engine witness set is universal, but a non-epsilon pair was enumerated");
            }
        } else if (witnesses_computed) {
            for (Side side : {Side::inner, Side::outer}) {
                std::vector<Word> eng = witness::enumerate_witnesses(ws, side, witness_len);
                const std::vector<Word>& ora =
                    side == Side::inner ? rep.inner_witnesses : rep.outer_witnesses;
                for (const Word& w : eng) {
                    if (std::find(ora.begin(), ora.end(), w) == ora.end()) {
                        throw CrossValidationError("engine witness '" + w.str() +
                                                   "' is not an oracle witness");
                    }
                }
                if (!rep.truncated && eng.size() != ora.size()) {
                    throw CrossValidationError(
                        "oracle found witnesses the engine does not report");
                }
            }
        }
    }
    return rep;
}

} // namespace conjugacy::oracle
