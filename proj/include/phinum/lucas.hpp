#pragma once

// Lucas-interval geometry of the integers under base-phi expansion: the
// tiling by Lambda_m, expansions at interval borders, the interval-recursive
// encoder, canonical splittings into {Lambda_3, Lambda_4, Lambda_5} pieces,
// central-block congruence between intervals, and a falsification harness
// for window-propagated central-block claims.

#include "phinum/arith.hpp"
#include "phinum/numeration.hpp"
#include "phinum/words.hpp"

#include <vector>

namespace phinum {

// Lambda_{2n} = [L_{2n}, L_{2n+1}], Lambda_{2n+1} = [L_{2n+1}+1, L_{2n+2}-1];
// consecutive intervals tile the integers N >= 2.
struct LucasInterval {
    size_t index = 0;  // m >= 1
    Int lo, hi;
};
LucasInterval lambda_interval(size_t m);

// The unique Lambda_m containing N; rejects N < 2.
LucasInterval locate(const Int& N);

// Xi_n = Lambda_{2n-1} ∪ Lambda_{2n} = [L_{2n-1}+1, L_{2n+1}], the block of
// the L_{2n} integers whose fractional part has exactly 2n digits.
struct XiInterval {
    size_t index = 0;  // n >= 1
    Int lo, hi;
};
XiInterval xi_interval(size_t n);

// Closed forms at the four borders of the interval pair (Lambda_{2n},
// Lambda_{2n+1}), for n >= 1:
//   beta(L_{2n})      = 1 0^{2n}   . 0^{2n-1} 1
//   beta(L_{2n+1})    = 1 (01)^n   . (01)^n
//   beta(L_{2n+1}+1)  = 1 0^{2n+1} . (10)^n 01
//   beta(L_{2n+2}-1)  = (10)^{n+1} . 0^{2n+1} 1
struct BorderExpansions {
    PhiExpansion even_lo, even_hi, odd_lo, odd_hi;
};
BorderExpansions lucas_border_expansions(size_t n);

// Fast encoder. For N in Lambda_m (m >= 5) the expansion is obtained from a
// smaller interval by word surgery: with pieces
//   (a) Lambda_{m-2} + L_{m-1},  (b) Lambda_{m-3} + L_m,  (c) Lambda_{m-2} + L_m
// the left part gains a prefix (1000 after stripping 10, 100, or 10) and the
// right part a suffix (after stripping a trailing 01 where required). The
// strips are asserted, not assumed. Bottoms out at a table for N <= 11.
// Agrees with phi_encode everywhere (enforced by tests, not recomputed here).
PhiExpansion phi_encode_recursive(const Int& N);

// An interval of consecutive integers, inclusive on both ends.
struct IntervalRef {
    Int lo, hi;
};

// Canonical splitting: an ordered tiling of a Lambda or Xi interval by
// shifted copies of Lambda_3, Lambda_4, Lambda_5. The letter word (the base
// indices in order) is the interval's splitting word.
struct SplittingPiece {
    int base;   // 3, 4, or 5
    Int shift;  // element N of Lambda_base appears here as N + shift
};
struct SplittingWord {
    std::vector<SplittingPiece> pieces;
    std::vector<int> word() const;
};
SplittingWord canonical_splitting_lambda(size_t m);  // m >= 3
SplittingWord canonical_splitting_xi(size_t n);      // n >= 2

// True iff the i-th element of gamma and the i-th element of the
// concatenated parts have elementwise-equal central blocks
// d_{q-1} ... d_0 . d_{-1} ... d_{-q}. Throws if the lengths differ.
bool check_congruence(const IntervalRef& gamma, const std::vector<IntervalRef>& parts, unsigned q);

// Central block condition: left digits d_{|suffix|-1}..d_0 match `suffix`
// and right digits d_{-1}..d_{-|prefix|} match `prefix`, with zero padding
// outside the stored word.
struct CentralPattern {
    DigitWord suffix;
    DigitWord prefix;
};
bool matches_central(const PhiExpansion& e, const CentralPattern& pat);

struct PropagationReport {
    bool hypothesis_ok = true;  // claim verified on the base window
    bool conclusion_ok = true;  // claim survived the full rescan
    Int first_violation = -1;
    Int scanned = 0;
};

// Window-propagation harness, absence form: the pattern must occur for no N
// in the base window 1..17; the rescan then confirms it occurs for no
// N <= maxN. Central blocks must fit in 4 digits on each side.
PropagationReport propagation_absence(const CentralPattern& pat, const Int& maxN);

// Coupling form: occurrence of `earlier` at N - offset is equivalent to
// occurrence of `later` at N, checked on the base window N = offset..offset+17,
// then rescanned for all N <= maxN. offset must be between 1 and 4.
PropagationReport propagation_coupling(const CentralPattern& earlier, const CentralPattern& later,
                                       unsigned offset, const Int& maxN);

}  // namespace phinum
