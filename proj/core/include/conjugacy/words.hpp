#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace conjugacy::words {

/// The alphabet is fixed to lowercase Latin letters a-z.
bool is_alphabet_char(char c);

/// A finite word over a-z. The empty word is a valid value.
class Word {
public:
    Word() = default;

    /// Throws std::invalid_argument if any character is outside a-z.
    explicit Word(std::string_view s);

    static Word epsilon() { return Word(); }

    std::size_t size() const noexcept { return data_.size(); }
    bool empty() const noexcept { return data_.empty(); }
    char operator[](std::size_t i) const { return data_[i]; }
    const std::string& str() const noexcept { return data_; }

    friend Word operator+(const Word& a, const Word& b) {
        return Word(a.data_ + b.data_, unchecked_tag{});
    }
    Word& operator+=(const Word& o) {
        data_ += o.data_;
        return *this;
    }

    friend bool operator==(const Word&, const Word&) = default;
    friend auto operator<=>(const Word&, const Word&) = default;

private:
    struct unchecked_tag {};
    Word(std::string s, unchecked_tag) : data_(std::move(s)) {}
    std::string data_;

    friend Word unchecked_word(std::string s);
};

/// Internal fast path for words assembled from already-validated symbols.
Word unchecked_word(std::string s);

/// Ordering by (length, lexicographic). Used wherever witness lists are sorted.
bool shortlex_less(const Word& a, const Word& b);

bool is_prefix(const Word& p, const Word& w);
bool is_suffix(const Word& s, const Word& w);

/// w repeated n times.
Word power(const Word& w, std::size_t n);

/// The prefix of length len of the infinite repetition w^omega. Requires w nonempty.
Word omega_prefix(const Word& w, std::size_t len);

/// i left cyclic shifts of w; i is reduced modulo the length, and the shift of
/// the empty word is the empty word.
Word cyclic_shift(const Word& w, std::size_t i);

Word reverse(const Word& w);

/// Prefix delay [u,v]_L: the leftover of the longer word when one of u, v is a
/// prefix of the other; absent when the words are prefix-incomparable.
std::optional<Word> prefix_delay(const Word& u, const Word& v);

/// Suffix delay [u,v]_R, symmetric to prefix_delay on suffixes.
std::optional<Word> suffix_delay(const Word& u, const Word& v);

/// True iff w is not a proper power r^n, n >= 2. Rejects the empty word
/// (primitivity is defined on nonempty words only) with std::invalid_argument.
bool is_primitive(const Word& w);

struct PrimitiveRoot {
    Word root;
    std::size_t exponent; // >= 1, root^exponent == w
};

/// The unique primitive root of a nonempty word: the smallest i in 1..|w| with
/// cyclic_shift(w, i) == w yields the root w[0..i). Rejects the empty word.
PrimitiveRoot primitive_root(const Word& w);

/// True iff u and v are cyclic shifts of one another. (epsilon, epsilon) is conjugate.
bool is_conjugate(const Word& u, const Word& v);

/// An element (u, v) of the product monoid. Component lengths may differ; such
/// a pair is simply not conjugate.
struct WordPair {
    Word u;
    Word v;

    friend bool operator==(const WordPair&, const WordPair&) = default;
    friend auto operator<=>(const WordPair&, const WordPair&) = default;
};

/// Pairwise concatenation: (u1 u2, v1 v2).
inline WordPair operator+(const WordPair& a, const WordPair& b) {
    return WordPair{a.u + b.u, a.v + b.v};
}

inline bool is_epsilon_pair(const WordPair& p) { return p.u.empty() && p.v.empty(); }

/// A cut (x, y) of a conjugate pair (u, v): u = xy and v = yx. The cut is
/// "empty" when x or y is the empty word.
struct Cut {
    Word x;
    Word y;

    bool is_empty_cut() const { return x.empty() || y.empty(); }
    friend bool operator==(const Cut&, const Cut&) = default;
};

/// All cuts of (u, v) in increasing |x| order; empty iff the pair is not
/// conjugate. A distinct primitive pair has exactly one cut; an identical
/// primitive pair has exactly the two empty cuts. cuts(epsilon, epsilon) is the
/// single entry (epsilon, epsilon) - the two coincident empty cuts collapse.
std::vector<Cut> cuts(const Word& u, const Word& v);

enum class Side { inner, outer };

/// Inner: u z == z v. Outer: z u == v z.
bool is_witness(const Word& z, const WordPair& p, Side side);

/// True iff u^omega and v^omega agree on the first |u| + |v| - gcd(|u|, |v|)
/// symbols, which holds exactly when u and v are powers of a common word.
/// Rejects empty inputs.
bool fine_wilf_same_root(const Word& u, const Word& v);

} // namespace conjugacy::words
