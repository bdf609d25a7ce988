#include "conjugacy/words.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace conjugacy::words {

bool is_alphabet_char(char c) { return c >= 'a' && c <= 'z'; }

Word::Word(std::string_view s) : data_(s) {
    for (char c : data_) {
        if (!is_alphabet_char(c)) {
            throw std::invalid_argument(std::string("word symbol outside a-z: '") + c + "'");
        }
    }
}

Word unchecked_word(std::string s) { return Word(std::move(s), Word::unchecked_tag{}); }

bool shortlex_less(const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.str() < b.str();
}

bool is_prefix(const Word& p, const Word& w) {
    return p.size() <= w.size() && w.str().compare(0, p.size(), p.str()) == 0;
}

bool is_suffix(const Word& s, const Word& w) {
    return s.size() <= w.size() && w.str().compare(w.size() - s.size(), s.size(), s.str()) == 0;
}

Word power(const Word& w, std::size_t n) {
    std::string out;
    out.reserve(w.size() * n);
    for (std::size_t i = 0; i < n; ++i) out += w.str();
    return unchecked_word(std::move(out));
}

Word omega_prefix(const Word& w, std::size_t len) {
    if (w.empty()) throw std::invalid_argument("omega_prefix of the empty word");
    std::string out;
    out.reserve(len);
    while (out.size() < len) {
        out.append(w.str(), 0, std::min(w.size(), len - out.size()));
    }
    return unchecked_word(std::move(out));
}

Word cyclic_shift(const Word& w, std::size_t i) {
    if (w.empty()) return w;
    i %= w.size();
    if (i == 0) return w;
    return unchecked_word(w.str().substr(i) + w.str().substr(0, i));
}

Word reverse(const Word& w) {
    std::string out(w.str().rbegin(), w.str().rend());
    return unchecked_word(std::move(out));
}

std::optional<Word> prefix_delay(const Word& u, const Word& v) {
    if (is_prefix(u, v)) return unchecked_word(v.str().substr(u.size()));
    if (is_prefix(v, u)) return unchecked_word(u.str().substr(v.size()));
    return std::nullopt;
}

std::optional<Word> suffix_delay(const Word& u, const Word& v) {
    if (is_suffix(u, v)) return unchecked_word(v.str().substr(0, v.size() - u.size()));
    if (is_suffix(v, u)) return unchecked_word(u.str().substr(0, u.size() - v.size()));
    return std::nullopt;
}

bool is_primitive(const Word& w) {
    if (w.empty()) throw std::invalid_argument("is_primitive: primitivity is undefined on the empty word");
    const std::size_t n = w.size();
    // Exhaustive divisor scan: w is a proper power iff w = w[0..d)^(n/d) for some divisor d < n.
    for (std::size_t d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        bool repeats = true;
        for (std::size_t i = d; i < n && repeats; ++i) {
            if (w[i] != w[i % d]) repeats = false;
        }
        if (repeats) return false;
    }
    return true;
}

PrimitiveRoot primitive_root(const Word& w) {
    if (w.empty()) throw std::invalid_argument("primitive_root: undefined on the empty word");
    const std::size_t n = w.size();
    for (std::size_t i = 1; i <= n; ++i) {
        if (cyclic_shift(w, i) == w) {
            // The smallest fixing shift always divides the length.
            if (n % i != 0) throw std::logic_error("primitive_root: fixing shift does not divide length");
            return PrimitiveRoot{unchecked_word(w.str().substr(0, i)), n / i};
        }
    }
    throw std::logic_error("primitive_root: no fixing shift found");
}

bool is_conjugate(const Word& u, const Word& v) {
    if (u.size() != v.size()) return false;
    if (u.empty()) return true;
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (cyclic_shift(u, i) == v) return true;
    }
    return false;
}

std::vector<Cut> cuts(const Word& u, const Word& v) {
    std::vector<Cut> out;
    if (u.size() != v.size()) return out;
    // For (epsilon, epsilon) the loop visits only i = 0, collapsing the two
    // coincident empty cuts into the single entry (epsilon, epsilon).
    for (std::size_t i = 0; i <= u.size(); ++i) {
        Word x = unchecked_word(u.str().substr(0, i));
        Word y = unchecked_word(u.str().substr(i));
        if (y + x == v) out.push_back(Cut{std::move(x), std::move(y)});
    }
    return out;
}

bool is_witness(const Word& z, const WordPair& p, Side side) {
    if (side == Side::inner) return p.u + z == z + p.v;
    return z + p.u == p.v + z;
}

bool fine_wilf_same_root(const Word& u, const Word& v) {
    if (u.empty() || v.empty()) throw std::invalid_argument("fine_wilf_same_root: empty input");
    const std::size_t g = std::gcd(u.size(), v.size());
    const std::size_t n = u.size() + v.size() - g;
    return omega_prefix(u, n) == omega_prefix(v, n);
}

} // namespace conjugacy::words
