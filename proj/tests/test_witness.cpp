#include <algorithm>
#include <set>
#include <vector>

#include "doctest.h"

#include "conjugacy/oracle.hpp"
#include "conjugacy/snf.hpp"
#include "conjugacy/witness.hpp"
#include "support/generators.hpp"

using namespace conjugacy::witness;
using conjugacy::expr::MonomialSegment;
using conjugacy::expr::parse;
using conjugacy::expr::simplify_monomial;
using conjugacy::expr::to_snf;
using conjugacy::testgen::Gen;
using conjugacy::words::Word;
using conjugacy::words::WordPair;

namespace {

Word W(const char* s) { return Word(s); }
WordPair P(const char* u, const char* v) { return WordPair{Word(u), Word(v)}; }
SumfreeMonomial pairm(const char* u, const char* v) { return SumfreeMonomial::from_pair(P(u, v)); }

WitnessSet uniq(const char* w, bool in, bool out) { return WitnessSet::unique(W(w), in, out); }
WitnessSet allof(const char* u, const char* v) { return WitnessSet::all_of(P(u, v)); }

SumfreeMonomial single_summand(const char* text) {
    auto snf = to_snf(parse(text));
    REQUIRE(snf.summands.size() == 1);
    return simplify_monomial(snf.summands.front());
}

} // namespace

TEST_CASE("pair_witnesses") {
    CHECK(pair_witnesses(P("aba", "baa")) == allof("aba", "baa"));
    CHECK(pair_witnesses(P("abab", "baba")) == allof("ab", "ba"));
    CHECK(pair_witnesses(P("a", "b")) == WitnessSet::empty());
    CHECK(pair_witnesses(P("", "")) == WitnessSet::universal());
}

TEST_CASE("two_root_witnesses") {
    CHECK(two_root_witnesses(P("ab", "ba"), P("ac", "ca")) == uniq("a", true, false));
    CHECK(two_root_witnesses(P("ab", "ba"), P("ba", "ab")) == WitnessSet::empty());
    CHECK(two_root_witnesses(P("bab", "abb"), P("bab", "abb")) == allof("bab", "abb"));
    // Identical-component pairs with distinct roots share only epsilon.
    CHECK(two_root_witnesses(P("ab", "ab"), P("ba", "ba")) == uniq("", true, true));
    CHECK_THROWS_AS(two_root_witnesses(P("abab", "baba"), P("ab", "ba")), std::invalid_argument);
    CHECK_THROWS_AS(two_root_witnesses(P("ab", "cd"), P("ab", "ba")), std::invalid_argument);
}

TEST_CASE("two_pair_witnesses") {
    CHECK(two_pair_witnesses(P("abab", "baba"), P("ab", "ba")) == allof("ab", "ba"));
    CHECK(two_pair_witnesses(P("ac", "ca"), P("abb", "bba")) == uniq("a", true, false));
    CHECK(two_pair_witnesses(P("", ""), P("ab", "ba")) == allof("ab", "ba"));
    CHECK(two_pair_witnesses(P("", ""), P("", "")) == WitnessSet::universal());
    CHECK(two_pair_witnesses(P("ab", "cd"), P("ab", "ba")) == WitnessSet::empty());
}

TEST_CASE("membership") {
    CHECK(membership(W("aba"), allof("ab", "ba"), Side::inner));
    CHECK(!membership(W("b"), allof("ab", "ba"), Side::inner));
    CHECK(membership(W(""), allof("ab", "ab"), Side::inner));
    CHECK(membership(W("x"), WitnessSet::universal(), Side::outer));
    CHECK(!membership(W("x"), WitnessSet::empty(), Side::inner));
    CHECK(membership(W("b"), uniq("b", true, false), Side::inner));
    CHECK(!membership(W("b"), uniq("b", true, false), Side::outer));
}

TEST_CASE("intersect") {
    CHECK(intersect(uniq("b", true, false), allof("bab", "abb")) == uniq("b", true, false));
    CHECK(intersect(allof("ab", "ba"), allof("ba", "ab")) == WitnessSet::empty());
    CHECK(intersect(WitnessSet::universal(), allof("ab", "ba")) == allof("ab", "ba"));
    CHECK(intersect(WitnessSet::empty(), allof("ab", "ba")) == WitnessSet::empty());
    CHECK(intersect(uniq("a", true, false), uniq("a", false, true)) == WitnessSet::empty());
    CHECK(intersect(uniq("a", true, true), uniq("a", true, false)) == uniq("a", true, false));
    CHECK(intersect(uniq("a", true, false), uniq("b", true, false)) == WitnessSet::empty());
    CHECK(intersect(allof("ab", "ba"), allof("ab", "ba")) == allof("ab", "ba"));
}

TEST_CASE("intersect algebra") {
    // Exhaustive over a pool: commutative, associative, universal identity,
    // empty absorbing.
    std::vector<WitnessSet> pool = {
        WitnessSet::empty(),
        WitnessSet::universal(),
        uniq("a", true, false),
        uniq("a", false, true),
        uniq("a", true, true),
        uniq("b", true, false),
        uniq("", true, true),
        uniq("aba", true, false),
        allof("ab", "ba"),
        allof("ba", "ab"),
        allof("ab", "ab"),
        allof("ba", "ba"),
        allof("aba", "baa"),
        allof("ac", "ca"),
        allof("bab", "abb"),
        allof("a", "a"),
    };
    for (const WitnessSet& x : pool) {
        CHECK(intersect(WitnessSet::universal(), x) == x);
        CHECK(intersect(WitnessSet::empty(), x) == WitnessSet::empty());
        for (const WitnessSet& y : pool) {
            CHECK(intersect(x, y) == intersect(y, x));
            for (const WitnessSet& z : pool) {
                CHECK(intersect(intersect(x, y), z) == intersect(x, intersect(y, z)));
            }
        }
    }
}

TEST_CASE("star_wrap_witnesses") {
    CHECK(star_wrap_witnesses(allof("bab", "abb"), P("ab", "b"), P("b", "ab")) ==
          allof("abb", "bab"));
    CHECK(star_wrap_witnesses(allof("ac", "ca"), P("b", "a"), P("ab", "bb")) ==
          uniq("b", true, false));
    CHECK(star_wrap_witnesses(WitnessSet::empty(), P("a", "a"), P("b", "b")) ==
          WitnessSet::empty());
    // Universal body: the star contributes only (epsilon, epsilon).
    CHECK(star_wrap_witnesses(WitnessSet::universal(), P("ab", "b"), P("b", "ab")) ==
          allof("abb", "bab"));
    CHECK(star_wrap_witnesses(WitnessSet::universal(), P("", ""), P("", "")) ==
          WitnessSet::universal());
    // Empty wrap literals leave the body's witnesses untouched.
    CHECK(star_wrap_witnesses(allof("ab", "ba"), P("", ""), P("", "")) == allof("ab", "ba"));
}

TEST_CASE("redux and singleton reduxes") {
    SumfreeMonomial m = single_summand("(a,a)(baa,aba)*(b,a)(aab,baa)*(a,b)");
    CHECK(redux_of(m) == P("aba", "aab"));
    std::vector<SingletonRedux> srs = singleton_reduxes(m);
    REQUIRE(srs.size() == 2);
    CHECK(srs[0].prefix == P("a", "a"));
    CHECK(srs[0].body == pairm("baa", "aba"));
    CHECK(srs[0].suffix == P("ba", "ab"));
    CHECK(srs[1].prefix == P("ab", "aa"));
    CHECK(srs[1].body == pairm("aab", "baa"));
    CHECK(srs[1].suffix == P("a", "b"));

    SumfreeMonomial bare = pairm("u", "v");
    CHECK(redux_of(bare) == P("u", "v"));
    CHECK(singleton_reduxes(bare).empty());
}

TEST_CASE("monomial_witnesses") {
    CHECK(monomial_witnesses(single_summand("(b,a)(ac,ca)*(ab,b)(bab,bab)*(,b)")) ==
          uniq("b", true, false));
    CHECK(monomial_witnesses(single_summand("(ab,b)(bab,abb)*(b,ab)")) == allof("abb", "bab"));
    CHECK(monomial_witnesses(single_summand("(ab,ba)*(ba,ab)*")) == WitnessSet::empty());
    CHECK(monomial_witnesses(single_summand("(ab,ba)*")) == allof("ab", "ba"));
    CHECK(monomial_witnesses(pairm("", "")) == WitnessSet::universal());
    // Non-conjugate redux short-circuits.
    CHECK(monomial_witnesses(single_summand("(ab,bb)(ab,ba)*")) == WitnessSet::empty());
    // Length-skewed star body.
    CHECK(monomial_witnesses(single_summand("(a,a)(ab,b)*(a,a)")) == WitnessSet::empty());
}

TEST_CASE("monomial_witnesses_explained replays") {
    auto expl = monomial_witnesses_explained(single_summand("(ab,ba)*(ba,ab)*"));
    CHECK(expl.set == WitnessSet::empty());
    REQUIRE(expl.why_empty.has_value());
    CHECK(conjugacy::oracle::replay_empty_evidence(*expl.why_empty));

    expl = monomial_witnesses_explained(single_summand("(a,a)(ab,b)*(a,a)"));
    REQUIRE(expl.why_empty.has_value());
    CHECK(expl.why_empty->kind == EmptyEvidence::Kind::skewed_star_body);
    CHECK(conjugacy::oracle::replay_empty_evidence(*expl.why_empty));

    expl = monomial_witnesses_explained(pairm("ab", "bb"));
    REQUIRE(expl.why_empty.has_value());
    CHECK(expl.why_empty->kind == EmptyEvidence::Kind::non_conjugate_pair);
    CHECK(conjugacy::oracle::replay_empty_evidence(*expl.why_empty));

    // Conjugate results carry no evidence.
    expl = monomial_witnesses_explained(single_summand("(ab,ba)*"));
    CHECK(!expl.why_empty.has_value());
}

TEST_CASE("decide") {
    DecideOptions opts;
    opts.find_counterexample = true;

    ConjugacyReport rep = decide(parse("(ab,ba)*"), opts);
    CHECK(rep.conjugate);
    REQUIRE(rep.summands.size() == 1);
    CHECK(rep.summands[0].witnesses == allof("ab", "ba"));

    rep = decide(parse("(ab,ba)*(ba,ab)*"), opts);
    CHECK(!rep.conjugate);
    REQUIRE(rep.summands.size() == 1);
    REQUIRE(rep.summands[0].counterexample.has_value());
    CHECK(*rep.summands[0].counterexample == P("ababba", "babaab"));

    rep = decide(parse("(ab,b)(bab,abb)*(b,ab)"), opts);
    CHECK(rep.conjugate);
    CHECK(rep.summands[0].witnesses == allof("abb", "bab"));

    // Summand-wise conjunction over the normal form.
    rep = decide(parse("(ab,ba)*+(a,b)"), opts);
    CHECK(!rep.conjugate);
    REQUIRE(rep.summands.size() == 2);
    CHECK(rep.summands[0].conjugate != rep.summands[1].conjugate);

    // The empty relation is vacuously conjugate.
    rep = decide(parse("0"), opts);
    CHECK(rep.conjugate);
    CHECK(rep.summands.empty());
}

TEST_CASE("decide counterexample lies in the summand language and fails rotation") {
    Gen gen(0xD001);
    DecideOptions opts;
    opts.find_counterexample = true;
    int found = 0;
    for (int it = 0; it < 150 && found < 40; ++it) {
        conjugacy::expr::Expr e = gen.expression("ab", 3, 3, 3);
        ConjugacyReport rep;
        try {
            rep = decide(e, opts);
        } catch (const conjugacy::expr::SnfLimitError&) {
            continue;
        }
        for (const SummandReport& s : rep.summands) {
            if (!s.counterexample) continue;
            ++found;
            CHECK(!conjugacy::words::is_conjugate(s.counterexample->u, s.counterexample->v));
            // Membership: with the unroll bound at the pair's combined length,
            // the enumeration reaches every pair of that size.
            const std::size_t sum = s.counterexample->u.size() + s.counterexample->v.size();
            if (sum > 20) continue;
            conjugacy::oracle::EnumBounds b;
            b.max_unroll = sum;
            b.max_len = std::max(s.counterexample->u.size(), s.counterexample->v.size());
            auto en = conjugacy::oracle::enumerate_pairs(
                conjugacy::expr::monomial_to_expr(s.monomial), b);
            CHECK(std::find(en.pairs.begin(), en.pairs.end(), *s.counterexample) !=
                  en.pairs.end());
        }
    }
    CHECK(found >= 20);
}

TEST_CASE("enumerate_witnesses") {
    CHECK(enumerate_witnesses(allof("ab", "ba"), Side::inner, 5) ==
          std::vector<Word>{W("a"), W("aba"), W("ababa")});
    CHECK(enumerate_witnesses(uniq("b", true, false), Side::outer, 5).empty());
    CHECK(enumerate_witnesses(WitnessSet::empty(), Side::inner, 9).empty());
    CHECK(enumerate_witnesses(allof("ab", "ab"), Side::inner, 4) ==
          std::vector<Word>{W(""), W("ab"), W("abab")});
    CHECK(enumerate_witnesses(uniq("b", true, false), Side::inner, 0).empty());
    CHECK_THROWS_AS(enumerate_witnesses(WitnessSet::universal(), Side::inner, 3),
                    std::invalid_argument);
}

// The side of a unique star-wrap witness follows the wrap-length comparison.
TEST_CASE("star_wrap unique side rule") {
    Gen gen(0xD002);
    int seen = 0;
    for (int it = 0; it < 4000 && seen < 120; ++it) {
        WordPair body = gen.conjugate_pair("ab", 1, 4);
        WordPair prefix = gen.pair("ab", 2, false);
        WordPair suffix = gen.pair("ab", 2, false);
        WitnessSet we = pair_witnesses(body);
        if (we.kind() != WitnessSet::Kind::all_of) continue;
        WitnessSet out = star_wrap_witnesses(we, prefix, suffix);
        if (out.kind() != WitnessSet::Kind::unique || out.unique_word().empty()) continue;
        const WordPair c{suffix.u + prefix.u, suffix.v + prefix.v};
        WitnessSet wc = two_pair_witnesses(body, c);
        REQUIRE(wc.kind() == WitnessSet::Kind::unique);
        if (wc.unique_inner() == wc.unique_outer()) continue; // both routes: sides union
        ++seen;
        const Word& zp = wc.unique_word();
        if (wc.unique_inner()) {
            const bool inner_by_rule = prefix.u.size() + zp.size() >= prefix.v.size();
            CHECK(out.unique_inner() == inner_by_rule);
            CHECK(out.unique_outer() == !inner_by_rule);
        } else {
            const bool outer_by_rule = zp.size() + suffix.u.size() >= suffix.v.size();
            CHECK(out.unique_outer() == outer_by_rule);
            CHECK(out.unique_inner() == !outer_by_rule);
        }
    }
    CHECK(seen >= 60);
}

// Star transparency: a witness of the body witnesses every sampled pair of the
// body's Kleene closure.
TEST_CASE("star transparency") {
    Gen gen(0xD003);
    int seen = 0;
    for (int it = 0; it < 300 && seen < 80; ++it) {
        conjugacy::expr::Expr e = gen.expression("ab", 2, 2, 1);
        auto snf = to_snf(e);
        if (snf.summands.size() != 1) continue;
        SumfreeMonomial body = simplify_monomial(snf.summands.front());
        WitnessSet ws = monomial_witnesses(body);
        if (ws.kind() == WitnessSet::Kind::empty || ws.kind() == WitnessSet::Kind::universal)
            continue;
        ++seen;
        conjugacy::oracle::EnumBounds b;
        b.max_unroll = 3;
        b.max_len = 24;
        b.max_pairs = 2000;
        auto closure = conjugacy::oracle::enumerate_pairs(
            conjugacy::expr::Expr::star(conjugacy::expr::monomial_to_expr(body)), b);
        for (Side side : {Side::inner, Side::outer}) {
            for (const Word& z : enumerate_witnesses(ws, side, 8)) {
                for (const WordPair& p : closure.pairs) {
                    CHECK(conjugacy::words::is_witness(z, p, side));
                }
            }
        }
    }
    CHECK(seen >= 40);
}

// Soundness of non-empty verdicts: for conjugate summands, every enumerated
// language pair passes the rotation scan and every enumerated witness word
// witnesses every such pair on its side.
TEST_CASE("non-empty verdicts are sound against enumeration") {
    Gen gen(0xD005);
    int pairs_checked = 0;
    for (int it = 0; it < 120; ++it) {
        conjugacy::expr::Expr e = gen.expression("ab", 3, 3, 3);
        ConjugacyReport rep;
        try {
            rep = decide(e);
        } catch (const conjugacy::expr::SnfLimitError&) {
            continue;
        }
        for (const SummandReport& s : rep.summands) {
            if (!s.conjugate) continue;
            conjugacy::oracle::EnumBounds b;
            b.max_unroll = 5;
            b.max_len = 24;
            b.max_pairs = 3000;
            auto en = conjugacy::oracle::enumerate_pairs(
                conjugacy::expr::monomial_to_expr(s.monomial), b);
            for (const WordPair& p : en.pairs) {
                ++pairs_checked;
                CHECK(conjugacy::words::is_conjugate(p.u, p.v));
            }
            if (s.witnesses.kind() == WitnessSet::Kind::universal) continue;
            for (Side side : {Side::inner, Side::outer}) {
                for (const Word& z : enumerate_witnesses(s.witnesses, side, 12)) {
                    for (const WordPair& p : en.pairs) {
                        CHECK(conjugacy::words::is_witness(z, p, side));
                    }
                }
            }
        }
    }
    CHECK(pairs_checked > 1000);
}

// A word witnesses all sampled pairs of a two-star monomial iff it witnesses
// both singleton reduxes' sampled pairs (same side).
TEST_CASE("singleton redux equivalence") {
    Gen gen(0xD004);
    int seen = 0;
    for (int it = 0; it < 400 && seen < 50; ++it) {
        WordPair b1 = gen.conjugate_pair("ab", 1, 3);
        WordPair b2 = gen.conjugate_pair("ab", 1, 3);
        WordPair w0 = gen.pair("ab", 1, true);
        WordPair w1 = gen.pair("ab", 1, true);
        WordPair w2 = gen.pair("ab", 1, true);
        SumfreeMonomial m;
        m.head = w0;
        m.segments.push_back(MonomialSegment{SumfreeMonomial::from_pair(b1), w1});
        m.segments.push_back(MonomialSegment{SumfreeMonomial::from_pair(b2), w2});
        m = simplify_monomial(m);
        if (m.segments.size() != 2) continue;
        ++seen;

        conjugacy::oracle::EnumBounds bounds;
        bounds.max_unroll = 3;
        bounds.max_len = 48;
        auto full = conjugacy::oracle::enumerate_pairs(
            conjugacy::expr::monomial_to_expr(m), bounds);
        std::vector<std::vector<WordPair>> redux_pairs;
        for (const SingletonRedux& sr : singleton_reduxes(m)) {
            SumfreeMonomial mi;
            mi.head = sr.prefix;
            mi.segments.push_back(MonomialSegment{sr.body, sr.suffix});
            redux_pairs.push_back(conjugacy::oracle::enumerate_pairs(
                                      conjugacy::expr::monomial_to_expr(mi), bounds)
                                      .pairs);
        }

        for (int zi = 0; zi < 24; ++zi) {
            Word z = gen.word("ab", 0, 8);
            for (Side side : {Side::inner, Side::outer}) {
                auto witnesses_all = [&](const std::vector<WordPair>& ps) {
                    return std::all_of(ps.begin(), ps.end(), [&](const WordPair& p) {
                        return conjugacy::words::is_witness(z, p, side);
                    });
                };
                bool on_m = witnesses_all(full.pairs);
                bool on_reduxes = witnesses_all(redux_pairs[0]) && witnesses_all(redux_pairs[1]);
                CHECK(on_m == on_reduxes);
            }
        }
    }
    CHECK(seen >= 30);
}
