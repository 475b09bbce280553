#include "phinum/words.hpp"

#include <stdexcept>

namespace phinum {

bool admissible(const DigitWord& w) {
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] > 1) return false;
        if (i + 1 < w.size() && w[i] == 1 && w[i + 1] == 1) return false;
    }
    return true;
}

std::vector<DigitWord> admissible_words(std::size_t len) {
    std::vector<DigitWord> out;
    DigitWord cur(len, 0);
    // Counting order: generate recursively with the digit at index 0 most
    // significant, emitting 0-branch before 1-branch.
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == len) {
            out.push_back(cur);
            return;
        }
        cur[i] = 0;
        self(self, i + 1);
        if (i == 0 || cur[i - 1] == 0) {
            cur[i] = 1;
            self(self, i + 1);
            cur[i] = 0;
        }
    };
    rec(rec, 0);
    return out;
}

std::string word_to_string(const DigitWord& w) {
    std::string s;
    s.reserve(w.size());
    for (auto d : w) s.push_back(static_cast<char>('0' + d));
    return s;
}

DigitWord parse_word(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("parse_word: empty string");
    DigitWord w;
    w.reserve(s.size());
    for (char c : s) {
        if (c < '0' || c > '2') throw std::invalid_argument("parse_word: invalid digit character");
        w.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return w;
}

int digit_at(const PhiExpansion& e, long long i) {
    if (i >= 0) {
        // left stores d_L .. d_0; index from the back.
        auto n = static_cast<long long>(e.left.size());
        if (i >= n) return 0;
        return e.left[static_cast<std::size_t>(n - 1 - i)];
    }
    // right stores d_-1 .. d_R; position -1 is the front.
    auto k = -i - 1;
    if (k >= static_cast<long long>(e.right.size())) return 0;
    return e.right[static_cast<std::size_t>(k)];
}

bool admissible(const PhiExpansion& e) {
    if (!admissible(e.left) || !admissible(e.right)) return false;
    if (!e.left.empty() && !e.right.empty() && e.left.back() == 1 && e.right.front() == 1)
        return false;
    return true;
}

std::string to_string(const PhiExpansion& e) {
    std::string s = e.left.empty() ? "0" : word_to_string(e.left);
    s.push_back('.');
    s += word_to_string(e.right);
    return s;
}

PhiExpansion parse_phi_expansion(const std::string& s) {
    auto dot = s.find('.');
    std::string ls = (dot == std::string::npos) ? s : s.substr(0, dot);
    std::string rs = (dot == std::string::npos) ? "" : s.substr(dot + 1);
    if (s.find('.', dot == std::string::npos ? 0 : dot + 1) != std::string::npos)
        throw std::invalid_argument("parse_phi_expansion: multiple radix points");
    if (ls.empty() && rs.empty())
        throw std::invalid_argument("parse_phi_expansion: empty input");
    PhiExpansion e;
    if (!ls.empty()) e.left = parse_word(ls);
    if (!rs.empty()) e.right = parse_word(rs);
    // Canonicalize "0" / leading zeros on the left away so that parse and
    // to_string round-trip on canonical expansions.
    while (!e.left.empty() && e.left.front() == 0) e.left.erase(e.left.begin());
    return e;
}

bool matches_suffix(const PhiExpansion& e, const DigitWord& w) {
    auto m = static_cast<long long>(w.size());
    for (long long k = 0; k < m; ++k) {
        // w's last digit is d_0, its first is d_{m-1}.
        if (digit_at(e, k) != w[static_cast<std::size_t>(m - 1 - k)]) return false;
    }
    return true;
}

bool matches_prefix(const PhiExpansion& e, const DigitWord& v) {
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (digit_at(e, -static_cast<long long>(k) - 1) != v[k]) return false;
    }
    return true;
}

bool matches_central(const PhiExpansion& e, const DigitWord& w, const DigitWord& v) {
    return matches_suffix(e, w) && matches_prefix(e, v);
}

}  // namespace phinum
