#pragma once

// Occurrence structure of digit blocks: scanners for suffix, central, and
// fractional-prefix blocks, predicted closed forms, tridents and their codes,
// the code permutation of a Xi block, the circle-rotation comparator, and
// the difference-word classifier over all short prefixes.

#include "phinum/beatty.hpp"
#include "phinum/lucas.hpp"
#include "phinum/numeration.hpp"
#include "phinum/words.hpp"

#include <string>
#include <vector>

namespace phinum {

// All N in [0, maxN] whose beta_plus, left-padded with zeros, ends in w.
std::vector<Int> scan_suffix(const DigitWord& w, const Int& maxN, unsigned jobs = 1);

// All N in [0, maxN] matching suffix w and fractional prefix v simultaneously.
std::vector<Int> scan_central(const DigitWord& w, const DigitWord& v, const Int& maxN,
                              unsigned jobs = 1);

// All N in [2, maxN] whose beta_minus, right-padded with zeros, starts with v.
// Starts at 2 because that is where fractional parts (and the Xi blocks that
// organize them) begin.
std::vector<Int> scan_prefix(const DigitWord& v, const Int& maxN, unsigned jobs = 1);

// A predicted occurrence set: nothing, provably empty, one generalized
// Beatty sequence, a union of two, or a trident triple V(p,q,{r,r+1,r+2}).
struct ClosedForm {
    enum class Kind { None, Empty, Single, Union, Triple };
    Kind kind = Kind::None;
    std::vector<GBSParams> parts;  // Single/Triple: 1 entry; Union: 2

    static ClosedForm none() { return {}; }
    static ClosedForm empty() { return {Kind::Empty, {}}; }
    static ClosedForm single(GBSParams g) { return {Kind::Single, {std::move(g)}}; }
    static ClosedForm union2(GBSParams g, GBSParams h) { return {Kind::Union, {std::move(g), std::move(h)}}; }
    static ClosedForm triple(GBSParams base) { return {Kind::Triple, {std::move(base)}}; }

    // All predicted values <= maxValue, ascending. Empty for Kind::Empty;
    // must not be called on Kind::None.
    std::vector<Int> terms(const Int& maxValue) const;
};

// Closed form for a suffix block w:
//   - any w ending in 1 whose last two ones enclose an even number of zeros
//     never occurs (Empty);
//   - all-zero w: a union of two sequences with Lucas-number slopes;
//   - 0^k 1: a single sequence indexed from n = 0;
//   - 1 0^{2m+1} 1: Lucas slopes with a closed-form offset;
//   - otherwise Lucas slopes chosen by the leading digit, offset anchored at
//     the first occurrence (found by a short bounded scan).
ClosedForm predict_suffix(const DigitWord& w);

// Closed form for a central block w.v with w all-zero and v a single digit.
// Returns Kind::None for shapes outside that family.
ClosedForm predict_central(const DigitWord& w, const DigitWord& v);

// The closed-form table for fractional prefixes up to length 3; longer
// prefixes have no predicted form (Kind::None) and are only classified.
ClosedForm predict_prefix_small(const DigitWord& v);

enum class Verdict { Match, Mismatch, NoPrediction };

struct OccurrenceReport {
    std::string kind;  // "suffix", "central", or "prefix"
    DigitWord suffix_block;
    DigitWord prefix_block;
    Int horizon = 0;
    std::vector<Int> scanned;
    ClosedForm predicted;
    Verdict verdict = Verdict::NoPrediction;
    long long mismatch_index = -1;  // first position where scan and prediction differ
};

OccurrenceReport suffix_report(const DigitWord& w, const Int& maxN, unsigned jobs = 1);
OccurrenceReport central_report(const DigitWord& w, const DigitWord& v, const Int& maxN,
                                unsigned jobs = 1);
OccurrenceReport prefix_report(const DigitWord& v, const Int& maxN, unsigned jobs = 1);

// Three consecutive integers sharing one fractional word; the middle one is
// the trident's essential representative.
struct Trident {
    Int first;  // elements first, first+1, first+2
};

// Grouping of a Xi block into tridents and singletons. essentials lists the
// trident middles and the singletons in increasing order.
struct TridentDecomposition {
    std::vector<Trident> tridents;
    std::vector<Int> singletons;
    std::vector<Int> essentials;
};
TridentDecomposition tridents(size_t n);
std::vector<Int> pi_essential(size_t n);

// gamma_minus(N) rebuilt by the six-case interval recursion; equals the
// beta_parts gamma component everywhere (enforced by tests).
DigitWord gamma_recursive(const Int& N);

// code(N) = Zeckendorf value of gamma_minus(N); N >= 2.
Int code(const Int& N);

// Codes of the essential elements of Xi_n in increasing-N order; a bijection
// onto {0, ..., F_{2n}-1}.
struct PiPermutation {
    size_t n = 0;
    std::vector<Int> values;
};
PiPermutation pi_permutation(size_t n);

// True iff the permutation starts at F_{2n}-1 and steps by F_{2n-2} mod F_{2n}.
bool verify_pi_arithmetic(size_t n);

// The permutation recovered from the rotation z -> z - phi on the unit
// circle. ResidueSketch builds the residue list u_j = (j-1) F_{2n-1} mod F_{2n}
// and applies the reverse-and-shift recipe; RawOrbit sorts the first F_{2n}
// iterates by exact circle position. Both reproduce pi_permutation.
enum class RotationConvention { ResidueSketch, RawOrbit };
std::vector<Int> rotation_orbit_sketch(size_t n);  // the residue list (u_1 ... u_{F_{2n}})
std::vector<Int> rotation_permutation(size_t n, RotationConvention convention);

// True iff {beta_minus(N) : N in Xi_n} is exactly the set of admissible
// words of length 2n ending in 1 (there are F_{2n} of them).
bool verify_all_gamma(size_t n);

bool is_lucas(const Int& x);

// One scanned prefix word in the difference-word survey. Prefixes starting
// with 1 match only singletons and yield one class; prefixes starting with 0
// match whole tridents and yield one class per trident position.
struct ConjectureRow {
    DigitWord word;
    bool undersampled = false;
    bool trident_structured = false;
    std::vector<DiffWordClass> classes;
    bool lucas_letters = false;  // every classified letter is a Lucas number
    std::string note;            // set when the run structure is irregular
};
std::vector<ConjectureRow> conjecture_scan(size_t max_prefix_len, const Int& horizon,
                                           unsigned jobs = 1);

}  // namespace phinum
