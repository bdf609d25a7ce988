#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "conjugacy/expr.hpp"
#include "conjugacy/words.hpp"

namespace conjugacy::expr {

struct MonomialSegment;

/// A sumfree monomial (a0,b0) B1* (a1,b1) ... Bk* (ak,bk): a head pair
/// followed by alternating starred bodies and tail pairs. k = 0 denotes a
/// bare pair. Star bodies are themselves monomials, which covers arbitrary
/// star nesting: (F*)* is a body whose own segment list wraps F between
/// epsilon pairs.
struct SumfreeMonomial {
    WordPair head;
    std::vector<MonomialSegment> segments;

    static SumfreeMonomial from_pair(WordPair p) { return SumfreeMonomial{std::move(p), {}}; }
};

struct MonomialSegment {
    SumfreeMonomial body;
    WordPair tail;
};

bool operator==(const SumfreeMonomial& a, const SumfreeMonomial& b);
bool operator==(const MonomialSegment& a, const MonomialSegment& b);

struct SnfResult {
    std::vector<SumfreeMonomial> summands; // sorted lexicographically by rendered text
    std::size_t input_size;                // node count of the input expression tree
    std::size_t output_size;               // node count of the SNF expression tree
};

class SnfLimitError : public std::runtime_error {
public:
    SnfLimitError(std::size_t partial_size, std::size_t limit)
        : std::runtime_error("sumfree normal form exceeds the size limit (" +
                             std::to_string(partial_size) + " nodes so far, limit " +
                             std::to_string(limit) + ")"),
          partial_size(partial_size),
          limit(limit) {}

    std::size_t partial_size;
    std::size_t limit;
};

inline constexpr std::size_t kDefaultSnfSizeLimit = std::size_t{1} << 20;

/// Converts a rational expression to a sum of sumfree monomials with the same
/// language. The empty set is absorbed (0.X = 0, 0+X = X, 0* = {(e,e)}); sums
/// concatenate summand lists, products distribute pairwise (fusing adjacent
/// pair literals), and a star of summands m1+...+mq rewrites to (m1*...mq*)*.
/// Throws SnfLimitError once the accumulated output size passes size_limit.
SnfResult to_snf(const Expr& e, std::size_t size_limit = kDefaultSnfSizeLimit);

/// Canonical form: adjacent pair literals fused, star bodies whose language is
/// exactly {(epsilon, epsilon)} deleted. Idempotent and language-preserving.
SumfreeMonomial simplify_monomial(const SumfreeMonomial& m);

/// True iff the monomial's language is exactly {(epsilon, epsilon)}.
bool denotes_only_epsilon(const SumfreeMonomial& m);

/// Node count of the monomial's expression tree (pair literals and stars count
/// one node each, factors are joined by binary concatenation nodes).
std::size_t monomial_tree_size(const SumfreeMonomial& m);

/// Expression text for the monomial, parseable by parse(). Epsilon-pair
/// literals are omitted when the monomial has at least one star.
std::string render_monomial(const SumfreeMonomial& m);

/// The monomial as a plain rational expression (same language).
Expr monomial_to_expr(const SumfreeMonomial& m);

/// Concatenation of two monomials; the seam literals are fused pairwise.
SumfreeMonomial concat_monomials(const SumfreeMonomial& a, const SumfreeMonomial& b);

} // namespace conjugacy::expr
