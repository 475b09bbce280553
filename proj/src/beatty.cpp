#include "phinum/beatty.hpp"

#include <algorithm>
#include <stdexcept>

namespace phinum {

Int gbs_term(const GBSParams& g, const Int& n) {
    if (n < (g.from_zero ? 0 : 1)) throw std::invalid_argument("gbs_term: index before sequence origin");
    return g.p * floor_phi(n) + g.q * n + g.r;
}

std::vector<Int> gbs_terms(const GBSParams& g, size_t count) {
    std::vector<Int> out;
    out.reserve(count);
    Int n = g.from_zero ? 0 : 1;
    for (size_t i = 0; i < count; ++i, ++n) out.push_back(gbs_term(g, n));
    return out;
}

GBSParams gbs_compose_A(const GBSParams& g) {
    if (g.from_zero) throw std::invalid_argument("gbs_compose_A: composition needs origin n >= 1");
    return {g.p + g.q, g.p, g.r - g.p, false};
}

GBSParams gbs_compose_B(const GBSParams& g) {
    if (g.from_zero) throw std::invalid_argument("gbs_compose_B: composition needs origin n >= 1");
    return {2 * g.p + g.q, g.p + g.q, g.r, false};
}

namespace {

// 1 encodes the letter a, 0 the letter b; fixed point of a -> ab, b -> a.
std::vector<std::uint8_t> fibonacci_pattern(size_t length) {
    std::vector<std::uint8_t> pat;
    if (length == 0) return pat;
    pat.push_back(1);
    while (pat.size() < length) {
        std::vector<std::uint8_t> next;
        next.reserve(2 * pat.size() + 1);
        for (auto c : pat) {
            if (c) {
                next.push_back(1);
                next.push_back(0);
            } else {
                next.push_back(1);
            }
        }
        pat.swap(next);
    }
    pat.resize(length);
    return pat;
}

std::vector<Int> differences(const std::vector<Int>& seq) {
    std::vector<Int> diff;
    if (seq.size() < 2) return diff;
    diff.reserve(seq.size() - 1);
    for (size_t i = 1; i < seq.size(); ++i) diff.push_back(seq[i] - seq[i - 1]);
    return diff;
}

// The two distinct values of a word, in order of first appearance.
std::optional<std::pair<Int, Int>> two_values(const std::vector<Int>& word) {
    std::vector<Int> vals;
    for (const auto& v : word)
        if (std::find(vals.begin(), vals.end(), v) == vals.end()) {
            vals.push_back(v);
            if (vals.size() > 2) return std::nullopt;
        }
    if (vals.size() != 2) return std::nullopt;
    return std::make_pair(vals[0], vals[1]);
}

}  // namespace

std::vector<Int> fibonacci_word(const Int& a, const Int& b, size_t length) {
    std::vector<Int> out;
    out.reserve(length);
    for (auto c : fibonacci_pattern(length)) out.push_back(c ? a : b);
    return out;
}

std::optional<GBSParams> gbs_recognize(const std::vector<Int>& seq) {
    if (seq.size() < 8) return std::nullopt;
    const auto diff = differences(seq);
    const auto vals = two_values(diff);
    if (!vals) return std::nullopt;
    const Int& a = vals->first;  // the Fibonacci word starts with its a letter
    const Int& b = vals->second;
    const GBSParams cand{a - b, 2 * b - a, seq[0] - b, false};
    if (gbs_terms(cand, seq.size()) != seq) return std::nullopt;
    return cand;
}

const Morphism kMorphF{{'a', {'a', 'b', 'a'}}, {'b', {'a', 'b'}}};
const Morphism kMorphG{{'a', {'b', 'a', 'a'}}, {'b', {'b', 'a'}}};
const Morphism kMorphH{{'a', {'a', 'a', 'b'}}, {'b', {'a', 'b'}}};
const Morphism kMorphKappa{{3, {5}}, {4, {4, 3, 4}}, {5, {5, 4, 5}}};
const Morphism kMorphDelta{{'a', {5, 4}}, {'b', {3, 4}}};

std::vector<int> morphism_apply(const Morphism& m, const std::vector<int>& word) {
    std::vector<int> out;
    for (int c : word) {
        auto it = m.find(c);
        if (it == m.end()) throw std::invalid_argument("morphism_apply: letter outside the table");
        out.insert(out.end(), it->second.begin(), it->second.end());
    }
    return out;
}

std::vector<int> morphism_iterate(const Morphism& m, int letter, size_t k) {
    std::vector<int> word{letter};
    for (size_t i = 0; i < k; ++i) word = morphism_apply(m, word);
    return word;
}

std::string letters_to_string(const std::vector<int>& word) {
    std::string s;
    s.reserve(word.size());
    for (int c : word) s += (c >= 0 && c <= 9) ? static_cast<char>('0' + c) : static_cast<char>(c);
    return s;
}

DiffWordClass classify_difference_word(const std::vector<Int>& seq) {
    DiffWordClass out;
    if (seq.size() < 8) return out;
    const auto diff = differences(seq);
    const auto vals = two_values(diff);
    if (!vals) return out;
    const Int& first = vals->first;
    const Int& other = vals->second;

    const auto matches = [&diff](const std::vector<Int>& pattern) { return diff == pattern; };
    using Tag = DiffWordClass::Tag;
    const auto consider = [&](Tag tag, const Int& a, const Int& b, const std::vector<Int>& pattern) {
        if (!matches(pattern)) return;
        out.all_matches.push_back(tag);
        if (out.tag == Tag::None) {
            out.tag = tag;
            out.a = a;
            out.b = b;
        }
    };

    // x_F starts with a; x_G = b x_F puts b first; x_H = a x_F doubles the a.
    consider(Tag::XF, first, other, fibonacci_word(first, other, diff.size()));
    {
        std::vector<Int> pat{first};
        const auto tail = fibonacci_word(other, first, diff.size() - 1);
        pat.insert(pat.end(), tail.begin(), tail.end());
        consider(Tag::XG, other, first, pat);
    }
    {
        std::vector<Int> pat{first};
        const auto tail = fibonacci_word(first, other, diff.size() - 1);
        pat.insert(pat.end(), tail.begin(), tail.end());
        consider(Tag::XH, first, other, pat);
    }
    return out;
}

const char* to_string(DiffWordClass::Tag tag) {
    switch (tag) {
        case DiffWordClass::Tag::XF: return "X_F";
        case DiffWordClass::Tag::XG: return "X_G";
        case DiffWordClass::Tag::XH: return "X_H";
        case DiffWordClass::Tag::None: return "none";
    }
    return "none";
}

}  // namespace phinum
