#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "conjugacy/snf.hpp"
#include "conjugacy/words.hpp"

namespace conjugacy::witness {

using expr::SumfreeMonomial;
using words::Side;
using words::Word;
using words::WordPair;

/// Exact finite description of all common witnesses of a set of word pairs.
///
///   empty      - no common witness; the set (and any monomial it came from)
///                is not conjugate.
///   unique     - exactly one witness word, flagged per side. A unique epsilon
///                witness forces every pair to be identical, so epsilon always
///                carries both side flags.
///   all_of     - the witnesses of one primitive conjugate pair (u, v): the
///                inner family (xy)*x and outer family (yx)*y over its cut(s);
///                for u = v both families are u* including epsilon.
///   universal  - every word is a witness on both sides; arises only from sets
///                whose every pair is (epsilon, epsilon).
class WitnessSet {
public:
    enum class Kind { empty, unique, all_of, universal };

    static WitnessSet empty() { return WitnessSet(Kind::empty); }
    static WitnessSet universal() { return WitnessSet(Kind::universal); }
    static WitnessSet unique(Word w, bool inner, bool outer);
    /// root must be a conjugate pair of nonempty primitive words.
    static WitnessSet all_of(WordPair root);

    Kind kind() const { return kind_; }
    const Word& unique_word() const { return word_; }
    bool unique_inner() const { return inner_; }
    bool unique_outer() const { return outer_; }
    const WordPair& root() const { return root_; }

    friend bool operator==(const WitnessSet&, const WitnessSet&) = default;

private:
    explicit WitnessSet(Kind k) : kind_(k) {}
    Kind kind_;
    Word word_;
    bool inner_ = false;
    bool outer_ = false;
    WordPair root_;
};

/// Why a computation produced an empty witness set. Each value captures one
/// concrete step that an independent checker can replay from the operands
/// alone (see oracle::replay_empty_evidence).
struct EmptyEvidence {
    enum class Kind {
        skewed_star_body,       // pair_a: a star body generates this length-skewed pair
        non_conjugate_pair,     // pair_a fails the rotation scan
        no_common_root_witness, // pair_a, pair_b: primitive pairs with no common same-side witness
        witness_rejected,       // word_a fails to witness pair_a on every required side
        witness_words_differ,   // word_a != word_b, two unique-witness requirements collide
        witness_sides_conflict, // word_a shared, but required sides (a_*) and (b_*) AND to nothing
        delay_unavailable,      // word_a, word_b are prefix/suffix incomparable
    };

    Kind kind{};
    WordPair pair_a;
    WordPair pair_b;
    Word word_a;
    Word word_b;
    bool a_inner = false;
    bool a_outer = false;
    bool b_inner = false;
    bool b_outer = false;
};

/// Witness set of a single pair: (epsilon, epsilon) is universal, a
/// non-conjugate pair has no witnesses, and a conjugate nonempty pair has
/// exactly the witnesses of its primitive root pair.
WitnessSet pair_witnesses(const WordPair& p);

/// Witness set of a two-element set of conjugate primitive pairs. Identical
/// pairs keep the whole family; distinct pairs have at most one common
/// witness, found among the candidates (xy)^k x / (yx)^k y, k in {0, 1}, drawn
/// from the cuts of the pair with the longer words. Throws
/// std::invalid_argument if a pair is not conjugate or not primitive.
WitnessSet two_root_witnesses(const WordPair& p1, const WordPair& p2);

/// Witness set of {p1, p2} for arbitrary pairs, via their primitive roots.
WitnessSet two_pair_witnesses(const WordPair& p1, const WordPair& p2);

/// Is z a side-witness of every pair described by w?
bool membership(const Word& z, const WitnessSet& w, Side side);

/// Side-respecting intersection: the result describes exactly the words that
/// are common inner witnesses of both sets or common outer witnesses of both.
WitnessSet intersect(const WitnessSet& w1, const WitnessSet& w2);

/// Witness set of prefix . E* . suffix given the witness set of E.
WitnessSet star_wrap_witnesses(const WitnessSet& we, const WordPair& prefix,
                               const WordPair& suffix);

/// Redux: the pair left after substituting every star by (epsilon, epsilon).
WordPair redux_of(const SumfreeMonomial& m);

struct SingletonRedux {
    WordPair prefix;
    SumfreeMonomial body;
    WordPair suffix;
};

/// Singleton reduxes: one per star, keeping only that star with the
/// surrounding literals accumulated into a prefix and a suffix pair.
std::vector<SingletonRedux> singleton_reduxes(const SumfreeMonomial& m);

/// Witness set of a canonical sumfree monomial: the intersection of the
/// witness sets of its singleton reduxes (a bare pair falls back to
/// pair_witnesses). A monomial is conjugate iff this is not empty.
WitnessSet monomial_witnesses(const SumfreeMonomial& m);

struct ExplainedWitnesses {
    WitnessSet set;
    std::optional<EmptyEvidence> why_empty; // present iff set is empty
};

/// monomial_witnesses plus the replayable step that produced an empty result.
ExplainedWitnesses monomial_witnesses_explained(const SumfreeMonomial& m);

/// All side-witness words of length <= max_len described by w, sorted by
/// (length, lexicographic). Rejects the universal set with
/// std::invalid_argument: it has no finite enumeration and is reported
/// symbolically instead.
std::vector<Word> enumerate_witnesses(const WitnessSet& w, Side side, std::size_t max_len);

struct SummandReport {
    SumfreeMonomial monomial; // canonical form actually analysed
    std::string expression;   // rendered text of the canonical form
    bool conjugate = false;
    WitnessSet witnesses = WitnessSet::empty();
    std::optional<WordPair> counterexample;
};

struct ConjugacyReport {
    bool conjugate = false;
    std::vector<SummandReport> summands;
};

struct DecideOptions {
    std::size_t snf_size_limit = expr::kDefaultSnfSizeLimit;
    bool find_counterexample = false;
    /// Total star-unroll budget for the per-summand counterexample search;
    /// 0 derives a budget from the summand's redux and body sizes.
    std::size_t counterexample_unroll = 0;
    std::size_t counterexample_word_cap = 256;
};

/// Full decision procedure: convert to SNF, canonicalize each summand, compute
/// its witness set; the expression is conjugate iff every summand's set is
/// nonempty. Parse and SNF-limit errors propagate.
ConjugacyReport decide(const expr::Expr& e, const DecideOptions& options = {});

} // namespace conjugacy::witness
