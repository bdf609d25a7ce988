#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "conjugacy/expr.hpp"
#include "conjugacy/snf.hpp"
#include "conjugacy/witness.hpp"
#include "conjugacy/words.hpp"

namespace conjugacy::oracle {

using expr::Expr;
using expr::SumfreeMonomial;
using witness::EmptyEvidence;
using words::Side;
using words::Word;
using words::WordPair;

struct EnumBounds {
    std::size_t max_unroll = 4;   // each star iterated 0..max_unroll times
    std::size_t max_len = 64;     // per-component word length cap
    std::size_t max_pairs = 200000;
};

struct PairEnumeration {
    std::vector<WordPair> pairs; // deduplicated, sorted
    bool truncated = false;      // some cap was binding; the list may be incomplete
};

/// Exactly the pairs derivable with every star unrolled at most max_unroll
/// times and both components at most max_len long (up to the max_pairs cap,
/// which sets the truncation flag like the other caps).
PairEnumeration enumerate_pairs(const Expr& e, const EnumBounds& b);

/// First pair (in sorted order) failing the rotation-scan conjugacy check;
/// absent when every pair passes.
std::optional<WordPair> check_all_conjugate(const std::vector<WordPair>& pairs);

/// All common side-witnesses of the given conjugate pairs up to max_len,
/// computed by intersecting the per-pair cut-pattern families (xy)*x resp.
/// (yx)*y over all cuts, sorted by (length, lexicographic).
/// (epsilon, epsilon) pairs constrain nothing and are skipped. Throws
/// std::invalid_argument on a non-conjugate pair, on empty input, and when
/// every pair is (epsilon, epsilon) - then every word is a witness and the
/// list is not enumerable.
std::vector<Word> brute_witnesses(const std::vector<WordPair>& pairs, Side side,
                                  std::size_t max_len);

/// Micro-oracle for tiny inputs: filters every word over the given alphabet up
/// to max_len through the witness equations directly. Exponential; used to
/// cross-check brute_witnesses.
std::vector<Word> naive_witnesses(const std::vector<WordPair>& pairs, Side side,
                                  std::size_t max_len, std::string_view alphabet);

struct OracleReport {
    std::size_t pairs_checked = 0;
    bool truncated = false;
    std::optional<WordPair> counterexample; // absent: all enumerated pairs conjugate
    std::vector<Word> inner_witnesses;
    std::vector<Word> outer_witnesses;
    bool witnesses_unconstrained = false; // every enumerated pair was (epsilon, epsilon)
};

class CrossValidationError : public std::runtime_error {
public:
    explicit CrossValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// Differential harness: enumerates the language, checks conjugacy by rotation
/// scan, gathers brute-force witnesses, and compares everything against
/// decide(e). Throws CrossValidationError on any disagreement: an
/// engine-conjugate verdict with an oracle counterexample, an engine
/// non-conjugate verdict on a fully enumerated conjugate language, or witness
/// lists that differ from the engine's (single-monomial expressions; list
/// equality is only required when the enumeration was not truncated).
OracleReport cross_validate(const Expr& e, const EnumBounds& b, std::size_t witness_len);

/// Bounded search for a non-conjugate pair in the monomial's language,
/// breadth-first on the total star-unroll count with ties in lexicographic
/// order, so the reported pair is minimal in iteration depth. Pairs with a
/// component longer than word_cap are skipped.
std::optional<WordPair> find_counterexample(const SumfreeMonomial& m,
                                            std::size_t max_total_unroll,
                                            std::size_t word_cap);

/// Independently confirms one empty-witness-set derivation step using only
/// rotation scans, omega-prefix candidate enumeration and the raw witness
/// equations. Returns true when the step holds up.
bool replay_empty_evidence(const EmptyEvidence& e);

} // namespace conjugacy::oracle
