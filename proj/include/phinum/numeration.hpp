#pragma once

// Zeckendorf and base-phi codecs. Zeckendorf expansions are over the
// shifted Fibonacci numbers 1, 2, 3, 5, 8, ...; base-phi expansions are
// over powers of phi with the same no-adjacent-ones digit rule, extended
// across a radix point. Both representations are unique.

#include "phinum/arith.hpp"
#include "phinum/words.hpp"

#include <functional>
#include <optional>

namespace phinum {

// Greedy Zeckendorf encoding; empty word for N = 0. Inverse of zeck_decode.
DigitWord zeck_encode(const Int& N);

// Sum of the shifted Fibonacci numbers selected by w. Leading zeros are
// ignored; throws std::invalid_argument if w is not admissible.
Int zeck_decode(const DigitWord& w);

// Exact value of an expansion (digits up to 2 allowed) as an element of
// Z[phi]: value = a*phi + b. Integer values have a = 0.
struct PhiValue {
    Int a;
    Int b;
    bool operator==(const PhiValue& o) const = default;
};
PhiValue phi_value(const PhiExpansion& e);

// Rewrites an expansion with digits up to 2 into the admissible form with
// the same exact value, by the two value-preserving rules
//   011 -> 100               (phi^{n+2} = phi^{n+1} + phi^n)
//   2 at n -> 1 at n+1, 1 at n-2   (2 phi^n = phi^{n+1} + phi^{n-2})
// applied most-significant first until a fixpoint. Throws std::logic_error
// if the iteration cap is hit (cannot happen for well-formed input).
PhiExpansion normalize(PhiExpansion raw);

// beta(N) -> beta(N+1): raw increment of digit d_0, then normalize.
PhiExpansion phi_add_one(const PhiExpansion& e);

// Reference encoder: iterates phi_add_one from the empty expansion of 0.
// O(N); the interval-recursion encoder in lucas.hpp is the fast path and
// the two are asserted equal across the test horizons.
PhiExpansion phi_encode(const Int& N);

// Exact decode. Computes two independent readings and asserts they agree:
// (i) the full Z[phi] value, which must be an integer; (ii) the ceiling of
// the beta_plus part alone. Throws std::invalid_argument on inadmissible
// input or a non-integer value.
Int phi_decode(const PhiExpansion& e);

// The individual decode paths, exposed for verification.
Int phi_decode_value(const PhiExpansion& e);    // path (i)
Int phi_decode_ceiling(const PhiExpansion& e);  // path (ii), ignores e.right

struct BetaParts {
    DigitWord plus;                    // beta_plus(N)
    DigitWord minus;                   // beta_minus(N)
    std::optional<DigitWord> gamma;    // beta_minus with final "01" stripped; N >= 2 only
};
BetaParts beta_parts(const Int& N);
BetaParts beta_parts(const PhiExpansion& e);

// S(N) = #{k >= 1 : V(k) < N} with V(k) = 3*floor(k*phi) + k + 1. This is
// the count of D-numbers strictly below N; beta_plus(N) = Z(N + S(N)).
Int skip_count(const Int& N);

struct ZeckPhiReport {
    bool ok = true;
    Int checked = 0;
    Int first_fail = -1;  // least N with beta_plus(N) != zeck_encode(N + S(N)), if any
    // The operational count is compared against two nearby closed forms,
    //   S_a(N) = max{k >= 1 : V(k) <= N} - 1   (empty max read as S_a = 0)
    //   S_b(N) = max{k >= 0 : V(k) - 1 <= N}
    // neither of which satisfies the Zeckendorf identity everywhere.
    Int alt_a_mismatches = 0;
    Int alt_b_mismatches = 0;
    std::vector<Int> alt_a_examples;  // first few N where S_a != S
    std::vector<Int> alt_b_examples;
};

// Checks beta_plus(N) == zeck_encode(N + skip_count(N)) for 0 <= N <= maxN.
ZeckPhiReport verify_zeckphi(const Int& maxN);

// Sequential enumeration of expansions: yields (N, beta(N)) for N = from,
// from+1, ... via amortized-O(1) add-one steps. The seed expansion must be
// beta(from).
class ExpansionWalker {
  public:
    ExpansionWalker() : n_(0) {}  // starts at N = 0
    ExpansionWalker(Int start, PhiExpansion seed) : n_(std::move(start)), e_(std::move(seed)) {}

    const Int& n() const { return n_; }
    const PhiExpansion& value() const { return e_; }
    void advance() {
        e_ = phi_add_one(e_);
        ++n_;
    }

  private:
    Int n_;
    PhiExpansion e_;
};

}  // namespace phinum
