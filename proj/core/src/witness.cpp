#include "conjugacy/witness.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>

namespace conjugacy::witness {

using words::Cut;
using words::cuts;
using words::is_conjugate;
using words::is_epsilon_pair;
using words::is_witness;
using words::prefix_delay;
using words::primitive_root;
using words::suffix_delay;

WitnessSet WitnessSet::unique(Word w, bool inner, bool outer) {
    if (w.empty()) {
        // An epsilon witness on either side forces every described pair to be
        // identical, and then epsilon witnesses both sides.
        inner = outer = true;
    }
    if (!inner && !outer) throw std::logic_error("WitnessSet::unique with no side");
    WitnessSet s(Kind::unique);
    s.word_ = std::move(w);
    s.inner_ = inner;
    s.outer_ = outer;
    return s;
}

WitnessSet WitnessSet::all_of(WordPair root) {
    if (root.u.empty() || root.v.empty())
        throw std::logic_error("WitnessSet::all_of with an empty component");
    if (!is_conjugate(root.u, root.v))
        throw std::logic_error("WitnessSet::all_of with a non-conjugate pair");
    if (!words::is_primitive(root.u) || !words::is_primitive(root.v))
        throw std::logic_error("WitnessSet::all_of with a non-primitive pair");
    WitnessSet s(Kind::all_of);
    s.root_ = std::move(root);
    return s;
}

namespace {

using Ev = std::optional<EmptyEvidence>;

WitnessSet report_empty(Ev* ev, EmptyEvidence e) {
    if (ev != nullptr && !ev->has_value()) *ev = std::move(e);
    return WitnessSet::empty();
}

EmptyEvidence non_conjugate_evidence(const WordPair& p) {
    EmptyEvidence e;
    e.kind = EmptyEvidence::Kind::non_conjugate_pair;
    e.pair_a = p;
    return e;
}

/// Componentwise primitive roots of a conjugate nonempty pair; the exponents
/// agree for conjugate words.
WordPair root_pair(const WordPair& p) {
    words::PrimitiveRoot ru = primitive_root(p.u);
    words::PrimitiveRoot rv = primitive_root(p.v);
    if (ru.exponent != rv.exponent)
        throw std::logic_error("root_pair: conjugate pair with unequal exponents");
    return WordPair{std::move(ru.root), std::move(rv.root)};
}

WitnessSet pair_witnesses_ev(const WordPair& p, Ev* ev) {
    if (is_epsilon_pair(p)) return WitnessSet::universal();
    if (!is_conjugate(p.u, p.v)) return report_empty(ev, non_conjugate_evidence(p));
    return WitnessSet::all_of(root_pair(p));
}

WitnessSet two_root_witnesses_ev(const WordPair& p1, const WordPair& p2, Ev* ev) {
    for (const WordPair* p : {&p1, &p2}) {
        if (p->u.empty() || p->v.empty())
            throw std::invalid_argument("two_root_witnesses: empty component");
        if (!is_conjugate(p->u, p->v))
            throw std::invalid_argument("two_root_witnesses: pair is not conjugate");
        if (!words::is_primitive(p->u) || !words::is_primitive(p->v))
            throw std::invalid_argument("two_root_witnesses: pair is not primitive");
    }
    if (p1 == p2) return WitnessSet::all_of(p1);

    const WordPair& longer = p1.u.size() >= p2.u.size() ? p1 : p2;

    // Candidate witnesses from the longer pair's cut families with exponents
    // 0 and 1; the 2*max(|u1|,|u2|) length bound on a unique common witness
    // makes this exhaustive.
    std::map<Word, std::pair<bool, bool>> survivors;
    for (const Cut& c : cuts(longer.u, longer.v)) {
        const Word xy = c.x + c.y;
        const Word yx = c.y + c.x;
        const Word inner_cands[2] = {c.x, xy + c.x};
        const Word outer_cands[2] = {c.y, yx + c.y};
        for (const Word& z : inner_cands) {
            if (is_witness(z, p1, Side::inner) && is_witness(z, p2, Side::inner))
                survivors[z].first = true;
        }
        for (const Word& z : outer_cands) {
            if (is_witness(z, p1, Side::outer) && is_witness(z, p2, Side::outer))
                survivors[z].second = true;
        }
    }

    if (survivors.empty()) {
        EmptyEvidence e;
        e.kind = EmptyEvidence::Kind::no_common_root_witness;
        e.pair_a = p1;
        e.pair_b = p2;
        return report_empty(ev, std::move(e));
    }
    if (survivors.size() > 1)
        throw std::logic_error("two_root_witnesses: distinct primitive pairs with several witnesses");
    const auto& [word, sides] = *survivors.begin();
    return WitnessSet::unique(word, sides.first, sides.second);
}

WitnessSet two_pair_witnesses_ev(const WordPair& p1, const WordPair& p2, Ev* ev) {
    if (!is_conjugate(p1.u, p1.v)) return report_empty(ev, non_conjugate_evidence(p1));
    if (!is_conjugate(p2.u, p2.v)) return report_empty(ev, non_conjugate_evidence(p2));
    const bool e1 = is_epsilon_pair(p1);
    const bool e2 = is_epsilon_pair(p2);
    if (e1 && e2) return WitnessSet::universal();
    if (e1) return pair_witnesses_ev(p2, ev);
    if (e2) return pair_witnesses_ev(p1, ev);
    return two_root_witnesses_ev(root_pair(p1), root_pair(p2), ev);
}

WitnessSet intersect_ev(const WitnessSet& w1, const WitnessSet& w2, Ev* ev) {
    using Kind = WitnessSet::Kind;
    if (w1.kind() == Kind::empty || w2.kind() == Kind::empty) return WitnessSet::empty();
    if (w1.kind() == Kind::universal) return w2;
    if (w2.kind() == Kind::universal) return w1;

    if (w1.kind() == Kind::unique && w2.kind() == Kind::unique) {
        if (w1.unique_word() != w2.unique_word()) {
            EmptyEvidence e;
            e.kind = EmptyEvidence::Kind::witness_words_differ;
            e.word_a = w1.unique_word();
            e.word_b = w2.unique_word();
            return report_empty(ev, std::move(e));
        }
        const bool in = w1.unique_inner() && w2.unique_inner();
        const bool out = w1.unique_outer() && w2.unique_outer();
        if (!in && !out) {
            EmptyEvidence e;
            e.kind = EmptyEvidence::Kind::witness_sides_conflict;
            e.word_a = w1.unique_word();
            e.a_inner = w1.unique_inner();
            e.a_outer = w1.unique_outer();
            e.b_inner = w2.unique_inner();
            e.b_outer = w2.unique_outer();
            return report_empty(ev, std::move(e));
        }
        return WitnessSet::unique(w1.unique_word(), in, out);
    }

    if (w1.kind() == Kind::unique || w2.kind() == Kind::unique) {
        const WitnessSet& uq = w1.kind() == Kind::unique ? w1 : w2;
        const WitnessSet& all = w1.kind() == Kind::unique ? w2 : w1;
        const bool in = uq.unique_inner() && is_witness(uq.unique_word(), all.root(), Side::inner);
        const bool out = uq.unique_outer() && is_witness(uq.unique_word(), all.root(), Side::outer);
        if (!in && !out) {
            EmptyEvidence e;
            e.kind = EmptyEvidence::Kind::witness_rejected;
            e.word_a = uq.unique_word();
            e.pair_a = all.root();
            e.a_inner = uq.unique_inner();
            e.a_outer = uq.unique_outer();
            return report_empty(ev, std::move(e));
        }
        return WitnessSet::unique(uq.unique_word(), in, out);
    }

    // all_of vs all_of
    if (w1.root() == w2.root()) return w1;
    return two_root_witnesses_ev(w1.root(), w2.root(), ev);
}

/// Lifts the unique witness z' of the star content E u {c} to the witness of
/// prefix . E* . suffix via the delay formulas; the side of the result follows
/// the length comparison of the wrap words.
WitnessSet star_wrap_unique(const Word& zp, bool fin, bool fout, const WordPair& c,
                            const WordPair& prefix, const WordPair& suffix, Ev* ev) {
    const bool route_inner = fin && is_witness(zp, c, Side::inner);
    const bool route_outer = fout && is_witness(zp, c, Side::outer);
    if (!route_inner && !route_outer) {
        EmptyEvidence e;
        e.kind = EmptyEvidence::Kind::witness_rejected;
        e.word_a = zp;
        e.pair_a = c;
        e.a_inner = fin;
        e.a_outer = fout;
        return report_empty(ev, std::move(e));
    }

    std::optional<Word> word;
    bool inner = false, outer = false;

    if (route_inner) {
        // z = [a0 z', b0]_R = [a1, z' b1]_L
        std::optional<Word> zr = suffix_delay(prefix.u + zp, prefix.v);
        std::optional<Word> zl = prefix_delay(suffix.u, zp + suffix.v);
        if (!zr || !zl) {
            EmptyEvidence e;
            e.kind = EmptyEvidence::Kind::delay_unavailable;
            e.a_inner = !zr.has_value(); // true: the suffix delay failed
            e.word_a = !zr ? prefix.u + zp : suffix.u;
            e.word_b = !zr ? prefix.v : zp + suffix.v;
            return report_empty(ev, std::move(e));
        }
        if (*zr != *zl) throw std::logic_error("star_wrap: inner-route delays disagree");
        word = *zr;
        if (prefix.u.size() + zp.size() >= prefix.v.size()) inner = true;
        else outer = true;
    }
    if (route_outer) {
        // z = [a0, b0 z']_R = [z' a1, b1]_L
        std::optional<Word> zr = suffix_delay(prefix.u, prefix.v + zp);
        std::optional<Word> zl = prefix_delay(zp + suffix.u, suffix.v);
        if (!zr || !zl) {
            EmptyEvidence e;
            e.kind = EmptyEvidence::Kind::delay_unavailable;
            e.a_inner = !zr.has_value();
            e.word_a = !zr ? prefix.u : zp + suffix.u;
            e.word_b = !zr ? prefix.v + zp : suffix.v;
            return report_empty(ev, std::move(e));
        }
        if (*zr != *zl) throw std::logic_error("star_wrap: outer-route delays disagree");
        if (word.has_value() && *word != *zr)
            throw std::logic_error("star_wrap: the two routes produced distinct witnesses");
        word = *zr;
        if (zp.size() + suffix.u.size() >= suffix.v.size()) outer = true;
        else inner = true;
    }
    return WitnessSet::unique(*word, inner, outer);
}

WitnessSet star_wrap_ev(const WitnessSet& we, const WordPair& prefix, const WordPair& suffix,
                        Ev* ev) {
    using Kind = WitnessSet::Kind;
    const WordPair c{suffix.u + prefix.u, suffix.v + prefix.v};
    const WordPair r = prefix + suffix;

    switch (we.kind()) {
    case Kind::empty:
        return WitnessSet::empty();
    case Kind::universal:
        // The star contributes only (epsilon, epsilon); the set is {redux}.
        return pair_witnesses_ev(r, ev);
    case Kind::unique:
        return star_wrap_unique(we.unique_word(), we.unique_inner(), we.unique_outer(), c, prefix,
                                suffix, ev);
    case Kind::all_of:
        break;
    }

    const WordPair& rho = we.root();
    if (is_epsilon_pair(c)) {
        // All wrap literals are empty: the set is E* itself.
        return we;
    }
    if (is_conjugate(c.u, c.v) && root_pair(c) == rho) {
        // The whole monomial is a set of powers of the primitive root of its redux.
        if (!is_conjugate(r.u, r.v))
            throw std::logic_error("star_wrap: same-root wrap with a non-conjugate redux");
        return WitnessSet::all_of(root_pair(r));
    }
    WitnessSet w2 = two_pair_witnesses_ev(rho, c, ev);
    switch (w2.kind()) {
    case Kind::empty:
        return WitnessSet::empty();
    case Kind::unique:
        return star_wrap_unique(w2.unique_word(), w2.unique_inner(), w2.unique_outer(), c, prefix,
                                suffix, ev);
    default:
        throw std::logic_error("star_wrap: unexpected witness set for distinct roots");
    }
}

/// A length-skewed pair in the monomial's language, if any: the redux when the
/// literal lengths disagree, otherwise one star iteration around a skewed pair
/// of a nested body.
std::optional<WordPair> find_skewed_pair(const SumfreeMonomial& m) {
    WordPair rd = redux_of(m);
    if (rd.u.size() != rd.v.size()) return rd;
    for (const SingletonRedux& sr : singleton_reduxes(m)) {
        if (std::optional<WordPair> s = find_skewed_pair(sr.body)) {
            return sr.prefix + *s + sr.suffix;
        }
    }
    return std::nullopt;
}

WitnessSet monomial_witnesses_ev(const SumfreeMonomial& m, Ev* ev) {
    // Cheap rejection: a star body generating a length-skewed pair makes every
    // surrounding set non-conjugate once the star is iterated.
    for (const expr::MonomialSegment& seg : m.segments) {
        if (std::optional<WordPair> skew = find_skewed_pair(seg.body)) {
            EmptyEvidence e;
            e.kind = EmptyEvidence::Kind::skewed_star_body;
            e.pair_a = *skew;
            return report_empty(ev, std::move(e));
        }
    }
    if (m.segments.empty()) return pair_witnesses_ev(m.head, ev);

    const WordPair rdx = redux_of(m);
    if (!is_conjugate(rdx.u, rdx.v)) return report_empty(ev, non_conjugate_evidence(rdx));

    WitnessSet acc = WitnessSet::universal();
    for (const SingletonRedux& sr : singleton_reduxes(m)) {
        WitnessSet wb = monomial_witnesses_ev(sr.body, ev);
        WitnessSet wi = star_wrap_ev(wb, sr.prefix, sr.suffix, ev);
        acc = intersect_ev(acc, wi, ev);
        if (acc.kind() == WitnessSet::Kind::empty) return acc;
    }
    return acc;
}

} // namespace

WitnessSet pair_witnesses(const WordPair& p) { return pair_witnesses_ev(p, nullptr); }

WitnessSet two_root_witnesses(const WordPair& p1, const WordPair& p2) {
    return two_root_witnesses_ev(p1, p2, nullptr);
}

WitnessSet two_pair_witnesses(const WordPair& p1, const WordPair& p2) {
    return two_pair_witnesses_ev(p1, p2, nullptr);
}

bool membership(const Word& z, const WitnessSet& w, Side side) {
    switch (w.kind()) {
    case WitnessSet::Kind::universal:
        return true;
    case WitnessSet::Kind::empty:
        return false;
    case WitnessSet::Kind::unique:
        return z == w.unique_word() && (side == Side::inner ? w.unique_inner() : w.unique_outer());
    case WitnessSet::Kind::all_of:
        return is_witness(z, w.root(), side);
    }
    return false;
}

WitnessSet intersect(const WitnessSet& w1, const WitnessSet& w2) {
    return intersect_ev(w1, w2, nullptr);
}

WitnessSet star_wrap_witnesses(const WitnessSet& we, const WordPair& prefix,
                               const WordPair& suffix) {
    return star_wrap_ev(we, prefix, suffix, nullptr);
}

WordPair redux_of(const SumfreeMonomial& m) {
    WordPair out = m.head;
    for (const expr::MonomialSegment& s : m.segments) out = out + s.tail;
    return out;
}

std::vector<SingletonRedux> singleton_reduxes(const SumfreeMonomial& m) {
    std::vector<SingletonRedux> out;
    out.reserve(m.segments.size());
    WordPair prefix = m.head;
    for (std::size_t i = 0; i < m.segments.size(); ++i) {
        WordPair suffix;
        for (std::size_t j = i; j < m.segments.size(); ++j) suffix = suffix + m.segments[j].tail;
        out.push_back(SingletonRedux{prefix, m.segments[i].body, std::move(suffix)});
        prefix = prefix + m.segments[i].tail;
    }
    return out;
}

WitnessSet monomial_witnesses(const SumfreeMonomial& m) {
    return monomial_witnesses_ev(m, nullptr);
}

ExplainedWitnesses monomial_witnesses_explained(const SumfreeMonomial& m) {
    Ev ev;
    WitnessSet set = monomial_witnesses_ev(m, &ev);
    return ExplainedWitnesses{std::move(set), std::move(ev)};
}

std::vector<Word> enumerate_witnesses(const WitnessSet& w, Side side, std::size_t max_len) {
    switch (w.kind()) {
    case WitnessSet::Kind::universal:
        throw std::invalid_argument(
            "enumerate_witnesses: the universal witness set has no finite enumeration");
    case WitnessSet::Kind::empty:
        return {};
    case WitnessSet::Kind::unique: {
        const bool flagged = side == Side::inner ? w.unique_inner() : w.unique_outer();
        if (flagged && w.unique_word().size() <= max_len) return {w.unique_word()};
        return {};
    }
    case WitnessSet::Kind::all_of:
        break;
    }

    std::set<Word> found;
    for (const Cut& c : cuts(w.root().u, w.root().v)) {
        const Word step = side == Side::inner ? c.x + c.y : c.y + c.x;
        Word z = side == Side::inner ? c.x : c.y;
        while (z.size() <= max_len) {
            found.insert(z);
            if (step.empty()) break;
            z = step + z;
        }
    }
    std::vector<Word> out(found.begin(), found.end());
    std::sort(out.begin(), out.end(), words::shortlex_less);
    return out;
}

} // namespace conjugacy::witness
