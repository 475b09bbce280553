#pragma once

// Digit words and radix-point expansions. A DigitWord stores digits
// most-significant first; digits are 0/1 when admissible, and 2 may appear
// transiently while carries are being resolved.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace phinum {

using DigitWord = std::vector<std::uint8_t>;

// True iff all digits are 0/1 and no two adjacent digits are both 1.
bool admissible(const DigitWord& w);

// All admissible words of the given length, in increasing numeric order
// (i.e. lexicographic). There are F_{len+2} of them.
std::vector<DigitWord> admissible_words(std::size_t len);

std::string word_to_string(const DigitWord& w);

// Parses a run of characters '0' '1' '2'. Throws std::invalid_argument on
// anything else (including an empty string).
DigitWord parse_word(const std::string& s);

// Base-phi expansion of a natural number, split at the radix point:
//   left  = d_L .. d_0   (most significant first; empty only for N = 0)
//   right = d_-1 .. d_R  (most significant first; empty for N in {0, 1})
// Canonical expansions have no leading zero on the left, no trailing zero
// on the right, and are admissible across the radix point.
struct PhiExpansion {
    DigitWord left;
    DigitWord right;

    bool operator==(const PhiExpansion& o) const = default;
};

// Digit d_i with zero padding outside the stored range; i >= 0 indexes the
// left word (i = 0 is its last digit), i < 0 the right word.
int digit_at(const PhiExpansion& e, long long i);

// Admissibility of the whole expansion, including across the radix point.
bool admissible(const PhiExpansion& e);

// Renders as "left.right", e.g. "1000.1001"; "0." for the empty expansion
// and "1." for N = 1.
std::string to_string(const PhiExpansion& e);

// Parses "1000.1001"-style text; the radix point may be omitted (empty
// right part) and a bare "0" left part denotes the empty word. Digit '2'
// is accepted (raw input for normalization); validity beyond digit shape
// is the caller's concern.
PhiExpansion parse_phi_expansion(const std::string& s);

// Does beta_plus (the left word) end in w, after conceptually padding the
// expansion with zeros on the left to at least |w| digits?
bool matches_suffix(const PhiExpansion& e, const DigitWord& w);

// Does beta_minus (the right word) begin with v, padding with zeros on the
// right (digits beyond the stored expansion are zero)?
bool matches_prefix(const PhiExpansion& e, const DigitWord& v);

// Suffix w of the left word and prefix v of the right word simultaneously.
bool matches_central(const PhiExpansion& e, const DigitWord& w, const DigitWord& v);

}  // namespace phinum
