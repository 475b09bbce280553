#pragma once

// Generalized Beatty sequences V(n) = p*floor(n*phi) + q*n + r, their
// behaviour under Wythoff composition, recognition from raw terms, and the
// substitution machinery used by the interval splittings.

#include "phinum/arith.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace phinum {

// Term rule p*floor(n*phi) + q*n + r, indexed from n = 1, or from n = 0 when
// from_zero is set (the n = 0 term is r).
struct GBSParams {
    Int p, q, r;
    bool from_zero = false;
    bool operator==(const GBSParams&) const = default;
};

Int gbs_term(const GBSParams& g, const Int& n);
std::vector<Int> gbs_terms(const GBSParams& g, size_t count);

// Composing the index with the Wythoff sequences A(n) = floor(n*phi) and
// B(n) = floor(n*phi^2) yields generalized Beatty sequences again:
//   V∘A has parameters (p+q, p, r-p),  V∘B has (2p+q, p+q, r).
GBSParams gbs_compose_A(const GBSParams& g);
GBSParams gbs_compose_B(const GBSParams& g);

// Prefix of the Fibonacci word, the fixed point of a -> ab, b -> a, rendered
// over the two-letter alphabet {a, b}.
std::vector<Int> fibonacci_word(const Int& a, const Int& b, size_t length);

// Recovers (p, q, r) from raw terms: the differences must take exactly two
// values and follow the Fibonacci word on a = 2p+q (the first difference)
// and b = p+q; the first term then anchors r. Returns nullopt for constant
// differences, more than two values, or a non-Fibonacci pattern. Recognized
// parameters are indexed from n = 1.
std::optional<GBSParams> gbs_recognize(const std::vector<Int>& seq);

// Letter-indexed substitution over a small integer alphabet. Letters 'a' and
// 'b' are their char codes; numeric alphabets use the numbers themselves.
// Applying a morphism to a letter outside its table is an error.
using Morphism = std::map<int, std::vector<int>>;

extern const Morphism kMorphF;      // a -> aba, b -> ab
extern const Morphism kMorphG;      // a -> baa, b -> ba
extern const Morphism kMorphH;      // a -> aab, b -> ab
extern const Morphism kMorphKappa;  // 3 -> 5, 4 -> 434, 5 -> 545
extern const Morphism kMorphDelta;  // a -> 54, b -> 34

std::vector<int> morphism_apply(const Morphism& m, const std::vector<int>& word);
std::vector<int> morphism_iterate(const Morphism& m, int letter, size_t k);
std::string letters_to_string(const std::vector<int>& word);

// Matches a term sequence against the three difference-word shapes
// x_F (the Fibonacci word), x_G = b x_F, x_H = a x_F, over the two letter
// values observed in the differences. tag/a/b report the first match in
// F, G, H order; all_matches lists every shape whose prefix fits.
struct DiffWordClass {
    enum class Tag { XF, XG, XH, None };
    Tag tag = Tag::None;
    Int a = 0, b = 0;
    std::vector<Tag> all_matches;
};

DiffWordClass classify_difference_word(const std::vector<Int>& seq);

const char* to_string(DiffWordClass::Tag tag);

}  // namespace phinum
