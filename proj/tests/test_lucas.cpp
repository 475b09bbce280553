#include "phinum/beatty.hpp"
#include "phinum/lucas.hpp"
#include "phinum/numeration.hpp"

#include <doctest.h>

#include <random>
#include <string>
#include <vector>

using namespace phinum;

namespace {

std::string rep(const std::string& block, size_t times) {
    std::string s;
    for (size_t i = 0; i < times; ++i) s += block;
    return s;
}

// Pieces must be shifted base intervals laid end to end over [lo, hi].
void check_tiling(const SplittingWord& sw, const Int& lo, const Int& hi) {
    Int cursor = lo;
    for (const SplittingPiece& p : sw.pieces) {
        REQUIRE((p.base == 3 || p.base == 4 || p.base == 5));
        LucasInterval base = lambda_interval(static_cast<size_t>(p.base));
        CHECK(base.lo + p.shift == cursor);
        cursor = base.hi + p.shift + 1;
    }
    CHECK(cursor == hi + 1);
}

}  // namespace

TEST_CASE("Lucas intervals tile the integers from 2 on") {
    CHECK(lambda_interval(2).lo == 3);
    CHECK(lambda_interval(2).hi == 4);
    CHECK(lambda_interval(3).lo == 5);
    CHECK(lambda_interval(3).hi == 6);
    CHECK(lambda_interval(4).lo == 7);
    CHECK(lambda_interval(4).hi == 11);
    CHECK(lambda_interval(5).lo == 12);
    CHECK(lambda_interval(5).hi == 17);
    CHECK(lambda_interval(6).lo == 18);
    CHECK(lambda_interval(6).hi == 29);
    CHECK(lambda_interval(1).lo == 2);
    CHECK(lambda_interval(1).hi == 2);
    for (size_t m = 1; m <= 20; ++m) {
        LucasInterval a = lambda_interval(m), b = lambda_interval(m + 1);
        CHECK(a.lo <= a.hi);
        CHECK(b.lo == a.hi + 1);
    }
    CHECK(locate(17).index == 5);
    CHECK(locate(18).index == 6);
    CHECK(locate(29).index == 6);
    CHECK(locate(30).index == 7);
    CHECK(locate(2).index == 1);
    CHECK_THROWS_AS(locate(1), std::invalid_argument);
    CHECK_THROWS_AS(lambda_interval(0), std::invalid_argument);
}

TEST_CASE("Xi blocks pair an odd interval with the next even one") {
    XiInterval x2 = xi_interval(2);
    CHECK(x2.lo == 5);
    CHECK(x2.hi == 11);
    XiInterval x3 = xi_interval(3);
    CHECK(x3.lo == 12);
    CHECK(x3.hi == 29);
    for (size_t n = 1; n <= 9; ++n) {
        XiInterval x = xi_interval(n);
        CHECK(x.lo == lambda_interval(2 * n - 1).lo);
        CHECK(x.hi == lambda_interval(2 * n).hi);
        CHECK(x.hi - x.lo + 1 == lucas(2 * n));
    }
}

TEST_CASE("interval-recursive encoder agrees with the add-one chain") {
    ExpansionWalker w;
    while (w.n() <= 2000) {
        CHECK(phi_encode_recursive(w.n()) == w.value());
        w.advance();
    }
}

TEST_CASE("interval-recursive encoder at random large inputs") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<unsigned long long> dist(2, 1000000000000ull);
    for (int trial = 0; trial < 200; ++trial) {
        Int N = dist(rng);
        PhiExpansion e = phi_encode_recursive(N);
        CHECK(admissible(e));
        CHECK(phi_decode(e) == N);
        CHECK(phi_add_one(e) == phi_encode_recursive(Int(N + 1)));
    }
}

TEST_CASE("border expansions in closed form") {
    for (size_t n = 1; n <= 6; ++n) {
        BorderExpansions b = lucas_border_expansions(n);
        CHECK(to_string(b.even_lo) == "1" + rep("0", 2 * n) + "." + rep("0", 2 * n - 1) + "1");
        CHECK(to_string(b.even_hi) == "1" + rep("01", n) + "." + rep("01", n));
        CHECK(to_string(b.odd_lo) == "1" + rep("0", 2 * n + 1) + "." + rep("10", n) + "01");
        CHECK(to_string(b.odd_hi) == rep("10", n + 1) + "." + rep("0", 2 * n + 1) + "1");
        CHECK(b.even_lo == phi_encode_recursive(lucas(2 * n)));
        CHECK(b.even_hi == phi_encode_recursive(lucas(2 * n + 1)));
        CHECK(b.odd_lo == phi_encode_recursive(Int(lucas(2 * n + 1) + 1)));
        CHECK(b.odd_hi == phi_encode_recursive(Int(lucas(2 * n + 2) - 1)));
    }
}

TEST_CASE("canonical splittings tile their intervals") {
    CHECK(canonical_splitting_lambda(6).word() == std::vector<int>{4, 3, 4});
    CHECK(canonical_splitting_lambda(8).word() == std::vector<int>{4, 3, 4, 5, 4, 3, 4});
    CHECK(canonical_splitting_xi(2).word() == std::vector<int>{3, 4});
    CHECK(canonical_splitting_xi(3).word() == std::vector<int>{5, 4, 3, 4});
    for (size_t m = 3; m <= 12; ++m) {
        LucasInterval iv = lambda_interval(m);
        check_tiling(canonical_splitting_lambda(m), iv.lo, iv.hi);
    }
    for (size_t n = 2; n <= 7; ++n) {
        XiInterval x = xi_interval(n);
        check_tiling(canonical_splitting_xi(n), x.lo, x.hi);
    }
}

TEST_CASE("splitting words obey the substitution recursions") {
    for (size_t n = 0; n <= 5; ++n) {
        CHECK(canonical_splitting_lambda(2 * n + 4).word() == morphism_iterate(kMorphKappa, 4, n));
        CHECK(canonical_splitting_lambda(2 * n + 5).word() == morphism_iterate(kMorphKappa, 5, n));
    }
    for (size_t n = 2; n <= 7; ++n)
        CHECK(canonical_splitting_xi(n).word() ==
              morphism_apply(kMorphDelta, morphism_iterate(kMorphH, 'b', n - 2)));
}

TEST_CASE("central-block congruence between an interval and its pieces") {
    auto lam = [](size_t m) {
        LucasInterval L = lambda_interval(m);
        return IntervalRef{L.lo, L.hi};
    };
    auto triple = [&lam](size_t m) {
        return std::vector<IntervalRef>{lam(m - 2), lam(m - 3), lam(m - 2)};
    };
    CHECK(check_congruence(lam(5), triple(5), 1));
    CHECK(check_congruence(lam(6), triple(6), 3));
    CHECK(!check_congruence(lam(6), triple(6), 5));
    for (size_t m = 8; m <= 14; ++m) CHECK(check_congruence(lam(m), triple(m), 4));
    std::vector<IntervalRef> glued = triple(8);
    for (const IntervalRef& r : triple(9)) glued.push_back(r);
    CHECK(check_congruence(IntervalRef{lucas(8), Int(lucas(10) - 1)}, glued, 4));
    CHECK_THROWS_AS(check_congruence(IntervalRef{2, 5}, {IntervalRef{2, 4}}, 2),
                    std::invalid_argument);
}

TEST_CASE("window propagation: absence claims") {
    PropagationReport ok = propagation_absence({parse_word("10"), parse_word("1")}, 10000);
    CHECK(ok.hypothesis_ok);
    CHECK(ok.conclusion_ok);
    CHECK(ok.first_violation == -1);
    CHECK(ok.scanned == 10000);

    // d_1 d_0 . d_{-1} = 00.1 occurs already at N = 5, inside the base window.
    PropagationReport bad = propagation_absence({parse_word("00"), parse_word("1")}, 10000);
    CHECK(!bad.hypothesis_ok);
    CHECK(bad.conclusion_ok);
    CHECK(bad.first_violation == 5);

    CHECK_THROWS_AS(propagation_absence({parse_word("10"), parse_word("1")}, 10),
                    std::invalid_argument);
}

TEST_CASE("window propagation: coupled occurrences") {
    PropagationReport r1 = propagation_coupling({parse_word("100"), parse_word("0")},
                                                {parse_word("00"), parse_word("1")}, 2, 10000);
    CHECK(r1.hypothesis_ok);
    CHECK(r1.conclusion_ok);
    CHECK(r1.scanned == 9999);

    PropagationReport r2 = propagation_coupling({parse_word("1010"), DigitWord{}},
                                                {parse_word("000"), parse_word("0")}, 1, 10000);
    CHECK(r2.hypothesis_ok);
    CHECK(r2.conclusion_ok);

    // A miscoupled pair must fail inside the base window.
    PropagationReport bad = propagation_coupling({parse_word("10"), parse_word("0")},
                                                 {parse_word("00"), parse_word("1")}, 2, 10000);
    CHECK(!bad.hypothesis_ok);
    CHECK(bad.first_violation >= 2);
    CHECK(bad.first_violation <= 19);

    CHECK_THROWS_AS(propagation_coupling({parse_word("10"), parse_word("1")},
                                         {parse_word("10"), parse_word("1")}, 5, 10000),
                    std::invalid_argument);
}
