// Command-line front end: codecs, expansion tables, theorem verifiers,
// block-occurrence scanners, the code permutation, and the difference-word
// survey. Exit codes: 0 = pass, 1 = counterexample found, 2 = usage error.

#include "phinum/arith.hpp"
#include "phinum/beatty.hpp"
#include "phinum/lucas.hpp"
#include "phinum/numeration.hpp"
#include "phinum/occurrence.hpp"
#include "phinum/words.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace phinum;
using nlohmann::json;

namespace {

Int parse_nat(const std::string& s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("expected a decimal natural number, got '" + s + "'");
    return Int(s);
}

long long to_ll(const Int& x) { return x.convert_to<long long>(); }

std::string join(const std::vector<Int>& v, const std::string& sep) {
    std::ostringstream o;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) o << sep;
        o << v[i];
    }
    return o.str();
}

std::string gbs_to_string(const GBSParams& g) {
    std::ostringstream o;
    o << (g.from_zero ? "V0(" : "V(") << g.p << "," << g.q << "," << g.r << ")";
    return o.str();
}

std::string form_to_string(const ClosedForm& f) {
    switch (f.kind) {
        case ClosedForm::Kind::None:
            return "none";
        case ClosedForm::Kind::Empty:
            return "empty";
        case ClosedForm::Kind::Single:
            return gbs_to_string(f.parts[0]);
        case ClosedForm::Kind::Union:
            return gbs_to_string(f.parts[0]) + " U " + gbs_to_string(f.parts[1]);
        case ClosedForm::Kind::Triple: {
            const GBSParams& g = f.parts[0];
            std::ostringstream o;
            o << (g.from_zero ? "V0(" : "V(") << g.p << "," << g.q << ",{" << g.r << ","
              << g.r + 1 << "," << g.r + 2 << "})";
            return o.str();
        }
    }
    return "none";
}

json gbs_to_json(const GBSParams& g) {
    return {{"p", to_ll(g.p)}, {"q", to_ll(g.q)}, {"r", to_ll(g.r)},
            {"origin", g.from_zero ? 0 : 1}};
}

json form_to_json(const ClosedForm& f) {
    json parts = json::array();
    for (const auto& g : f.parts) parts.push_back(gbs_to_json(g));
    const char* kind = "none";
    switch (f.kind) {
        case ClosedForm::Kind::None: kind = "none"; break;
        case ClosedForm::Kind::Empty: kind = "empty"; break;
        case ClosedForm::Kind::Single: kind = "single"; break;
        case ClosedForm::Kind::Union: kind = "union"; break;
        case ClosedForm::Kind::Triple: kind = "triple"; break;
    }
    return {{"kind", kind}, {"parts", parts}};
}

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Match: return "MATCH";
        case Verdict::Mismatch: return "MISMATCH";
        case Verdict::NoPrediction: return "NO_PREDICTION";
    }
    return "NO_PREDICTION";
}

json report_to_json(const OccurrenceReport& r) {
    json scanned = json::array();
    for (const auto& n : r.scanned) scanned.push_back(to_ll(n));
    json out = {{"kind", r.kind},
                {"horizon", to_ll(r.horizon)},
                {"scanned", scanned},
                {"predicted", form_to_json(r.predicted)},
                {"verdict", verdict_name(r.verdict)}};
    if (!r.suffix_block.empty()) out["block"] = word_to_string(r.suffix_block);
    if (!r.prefix_block.empty()) out["prefix_block"] = word_to_string(r.prefix_block);
    if (r.verdict == Verdict::Mismatch) out["mismatch_index"] = r.mismatch_index;
    return out;
}

// ---------------------------------------------------------------- verify ---

struct VerifyOpts {
    std::optional<Int> maxn;
    std::optional<size_t> n;
    unsigned jobs = 1;
};

struct VerifyResult {
    std::string id;
    bool pass = false;
    std::string detail;
};

VerifyResult vf_zeckphi(const VerifyOpts& o) {
    Int maxn = o.maxn.value_or(Int(100000));
    ZeckPhiReport r = verify_zeckphi(maxn);
    std::ostringstream d;
    if (r.ok)
        d << "beta_plus(N) = Z(N + S(N)) for all N <= " << maxn;
    else
        d << "identity fails first at N = " << r.first_fail;
    d << "; closed-form variant A disagrees with the operational count " << r.alt_a_mismatches
      << " times";
    if (!r.alt_a_examples.empty()) d << " (first at N = " << r.alt_a_examples.front() << ")";
    d << ", variant B " << r.alt_b_mismatches << " times";
    if (!r.alt_b_examples.empty()) d << " (first at N = " << r.alt_b_examples.front() << ")";
    return {"zeckphi", r.ok, d.str()};
}

VerifyResult vf_ceiling(const VerifyOpts& o) {
    Int maxn = o.maxn.value_or(Int(100000));
    ExpansionWalker w;
    while (w.n() <= maxn) {
        if (phi_decode(w.value()) != w.n()) {
            std::ostringstream d;
            d << "decode disagrees at N = " << w.n();
            return {"ceiling", false, d.str()};
        }
        w.advance();
    }
    std::ostringstream d;
    d << "both decode paths return N for all N <= " << maxn;
    return {"ceiling", true, d.str()};
}

VerifyResult vf_recursive(const VerifyOpts& o) {
    Int maxn = o.maxn.value_or(Int(5778));
    ExpansionWalker w;
    while (w.n() <= maxn) {
        if (phi_encode_recursive(w.n()) != w.value() || phi_decode(w.value()) != w.n()) {
            std::ostringstream d;
            d << "encoders disagree at N = " << w.n();
            return {"recursive", false, d.str()};
        }
        w.advance();
    }
    std::ostringstream d;
    d << "interval-recursion encoder matches the add-one chain for all N <= " << maxn;
    return {"recursive", true, d.str()};
}

DigitWord repeat_pair(const char* unit, size_t times) {
    DigitWord w;
    for (size_t i = 0; i < times; ++i)
        for (const char* c = unit; *c; ++c) w.push_back(static_cast<std::uint8_t>(*c - '0'));
    return w;
}

VerifyResult vf_borders(const VerifyOpts& o) {
    size_t nmax = o.n.value_or(9);
    for (size_t n = 1; n <= nmax; ++n) {
        BorderExpansions b = lucas_border_expansions(n);
        struct Point {
            Int N;
            const PhiExpansion* e;
            DigitWord gamma;
            Int code;
        };
        Point pts[4] = {
            {lucas(2 * n), &b.even_lo, repeat_pair("0", 2 * n - 2), 0},
            {lucas(2 * n + 1), &b.even_hi, repeat_pair("01", n - 1), Int(fib(2 * n - 1) - 1)},
            {Int(lucas(2 * n + 1) + 1), &b.odd_lo, repeat_pair("10", n), Int(fib(2 * n + 2) - 1)},
            {Int(lucas(2 * n + 2) - 1), &b.odd_hi, repeat_pair("0", 2 * n), 0},
        };
        for (const Point& p : pts) {
            BetaParts parts = beta_parts(p.N);
            if (phi_encode_recursive(p.N) != *p.e || !parts.gamma || *parts.gamma != p.gamma ||
                code(p.N) != p.code) {
                std::ostringstream d;
                d << "border formula fails at N = " << p.N << " (block index " << 2 * n << ".."
                  << 2 * n + 2 << ")";
                return {"borders", false, d.str()};
            }
        }
    }
    std::ostringstream d;
    d << "expansions, gamma words and codes at all four block borders, n = 1.." << nmax;
    return {"borders", true, d.str()};
}

bool splitting_sound(const SplittingWord& sw, const Int& lo, const Int& hi, std::string& err) {
    Int cur = lo;
    for (const SplittingPiece& piece : sw.pieces) {
        LucasInterval base = lambda_interval(static_cast<size_t>(piece.base));
        if (base.lo + piece.shift != cur) {
            err = "pieces do not tile the interval";
            return false;
        }
        cur = base.hi + piece.shift + 1;
        for (Int N = base.lo; N <= base.hi; ++N) {
            DigitWord g1 = gamma_recursive(N);
            DigitWord g2 = gamma_recursive(Int(N + piece.shift));
            if (g1.size() > g2.size() || !std::equal(g1.begin(), g1.end(), g2.begin())) {
                std::ostringstream e;
                e << "gamma(" << N << ") is not a prefix of gamma(" << N + piece.shift << ")";
                err = e.str();
                return false;
            }
        }
    }
    if (cur != hi + 1) {
        err = "pieces stop short of the interval end";
        return false;
    }
    return true;
}

VerifyResult vf_splitting_lambda(const VerifyOpts& o) {
    size_t mmax = o.n.value_or(16);
    for (size_t m = 3; m <= mmax; ++m) {
        SplittingWord sw = canonical_splitting_lambda(m);
        std::vector<int> expect;
        if (m <= 5)
            expect = {static_cast<int>(m)};
        else if (m % 2 == 0)
            expect = morphism_iterate(kMorphKappa, 4, (m - 4) / 2);
        else
            expect = morphism_iterate(kMorphKappa, 5, (m - 5) / 2);
        if (sw.word() != expect) {
            std::ostringstream d;
            d << "splitting word of block " << m << " is " << letters_to_string(sw.word())
              << ", expected " << letters_to_string(expect);
            return {"splitting-lambda", false, d.str()};
        }
        LucasInterval lam = lambda_interval(m);
        std::string err;
        if (!splitting_sound(sw, lam.lo, lam.hi, err))
            return {"splitting-lambda", false, "block " + std::to_string(m) + ": " + err};
    }
    std::ostringstream d;
    d << "kappa-iterate splitting words, tiling and gamma-prefix soundness for m = 3.." << mmax;
    return {"splitting-lambda", true, d.str()};
}

VerifyResult vf_splitting_xi(const VerifyOpts& o) {
    size_t nmax = o.n.value_or(8);
    for (size_t n = 2; n <= nmax; ++n) {
        SplittingWord sw = canonical_splitting_xi(n);
        std::vector<int> expect =
            morphism_apply(kMorphDelta, morphism_iterate(kMorphH, 'b', n - 2));
        if (sw.word() != expect) {
            std::ostringstream d;
            d << "splitting word of Xi_" << n << " is " << letters_to_string(sw.word())
              << ", expected " << letters_to_string(expect);
            return {"splitting-xi", false, d.str()};
        }
        XiInterval xi = xi_interval(n);
        std::string err;
        if (!splitting_sound(sw, xi.lo, xi.hi, err))
            return {"splitting-xi", false, "Xi_" + std::to_string(n) + ": " + err};
    }
    std::ostringstream d;
    d << "delta(h^(n-2)(b)) splitting words, tiling and soundness for n = 2.." << nmax;
    return {"splitting-xi", true, d.str()};
}

VerifyResult vf_congruence(const VerifyOpts&) {
    auto lam = [](size_t m) {
        LucasInterval L = lambda_interval(m);
        return IntervalRef{L.lo, L.hi};
    };
    auto triple = [&lam](size_t m) {
        return std::vector<IntervalRef>{lam(m - 2), lam(m - 3), lam(m - 2)};
    };
    if (!check_congruence(lam(5), triple(5), 1))
        return {"congruence", false, "block 5 is not congruent to its pieces mod 1"};
    if (!check_congruence(lam(6), triple(6), 3))
        return {"congruence", false, "block 6 is not congruent to its pieces mod 3"};
    if (check_congruence(lam(6), triple(6), 5))
        return {"congruence", false, "block 6 congruent mod 5, which should fail"};
    for (size_t m = 8; m <= 16; ++m)
        if (!check_congruence(lam(m), triple(m), 4)) {
            std::ostringstream d;
            d << "block " << m << " is not congruent to its pieces mod 4";
            return {"congruence", false, d.str()};
        }
    // Concatenation closure: gluing the mod-4 congruences of two adjacent
    // blocks yields a mod-4 congruence of the concatenation.
    std::vector<IntervalRef> glued = triple(8);
    for (const IntervalRef& r : triple(9)) glued.push_back(r);
    if (!check_congruence(IntervalRef{lucas(8), Int(lucas(10) - 1)}, glued, 4))
        return {"congruence", false, "concatenation of blocks 8 and 9 breaks the congruence"};
    return {"congruence", true,
            "interval congruences mod 1/3/4, the expected mod-5 failure, and concatenation"};
}

VerifyResult vf_exclusions(const VerifyOpts& o) {
    Int maxn = o.maxn.value_or(Int(100000));
    std::vector<std::pair<DigitWord, DigitWord>> central;
    for (size_t m = 1; m <= 8; ++m) {
        DigitWord a{1};
        for (size_t i = 0; i < 2 * m; ++i) a.push_back(0);
        central.push_back({a, DigitWord{1}});  // 1 0^{2m} . 1
        a.push_back(0);
        central.push_back({a, DigitWord{0}});  // 1 0^{2m+1} . 0
    }
    std::vector<DigitWord> suffixes;
    for (size_t m = 2; m <= 8; ++m) {
        DigitWord s{1};
        for (size_t i = 0; i < 2 * m; ++i) s.push_back(0);
        s.push_back(1);
        suffixes.push_back(s);  // 1 0^{2m} 1
    }
    ExpansionWalker w;
    while (w.n() <= maxn) {
        for (const auto& [a, b] : central)
            if (matches_central(w.value(), a, b)) {
                std::ostringstream d;
                d << "forbidden central block " << word_to_string(a) << "." << word_to_string(b)
                  << " occurs at N = " << w.n();
                return {"exclusions", false, d.str()};
            }
        for (const auto& s : suffixes)
            if (matches_suffix(w.value(), s)) {
                std::ostringstream d;
                d << "forbidden suffix " << word_to_string(s) << " occurs at N = " << w.n();
                return {"exclusions", false, d.str()};
            }
        w.advance();
    }
    std::ostringstream d;
    d << "no forbidden central or suffix block occurs for N <= " << maxn;
    return {"exclusions", true, d.str()};
}

VerifyResult reports_all_match(const char* id, const std::vector<OccurrenceReport>& reps,
                               const std::string& what) {
    for (const auto& r : reps) {
        if (r.verdict != Verdict::Match) {
            std::ostringstream d;
            d << "block " << word_to_string(r.suffix_block.empty() ? r.prefix_block
                                                                   : r.suffix_block)
              << " (" << r.kind << "): " << verdict_name(r.verdict) << ", predicted "
              << form_to_string(r.predicted);
            if (r.verdict == Verdict::Mismatch) d << " at index " << r.mismatch_index;
            return {id, false, d.str()};
        }
    }
    std::ostringstream d;
    d << what << " (" << reps.size() << " blocks)";
    return {id, true, d.str()};
}

VerifyResult vf_suffix_tree(const VerifyOpts& o) {
    Int maxn = o.maxn.value_or(Int(10000));
    static const char* kNodes[] = {
        "0",  "00", "000", "0000", "1000",  "100",   "0100", "10",  "010",   "0010",  "1010",
        "1",  "01", "001", "0001", "00001", "10001", "1001", "101", "0101",  "00101", "10101"};
    std::vector<OccurrenceReport> reps;
    for (const char* s : kNodes) reps.push_back(suffix_report(parse_word(s), maxn, o.jobs));
    return reports_all_match("suffix-tree", reps,
                             "every drawn suffix-tree node matches its closed form");
}

VerifyResult vf_prefix_table(const VerifyOpts& o) {
    Int maxn = o.maxn.value_or(Int(10000));
    static const char* kNodes[] = {"0", "1", "10", "00", "01", "010", "000", "001", "100", "101"};
    std::vector<OccurrenceReport> reps;
    for (const char* s : kNodes) reps.push_back(prefix_report(parse_word(s), maxn, o.jobs));
    return reports_all_match("prefix-table", reps,
                             "every tabulated fractional prefix matches its closed form");
}

VerifyResult vf_suffix_families(const VerifyOpts& o) {
    Int maxn = o.maxn.value_or(Int(100000));
    size_t mmax = o.n.value_or(4);
    std::vector<OccurrenceReport> reps;
    for (size_t m = 1; m <= mmax; ++m) {
        std::vector<DigitWord> words;
        words.push_back(repeat_pair("0", 2 * m));      // 0^{2m}
        words.push_back(repeat_pair("0", 2 * m + 1));  // 0^{2m+1}
        DigitWord zk = repeat_pair("0", 2 * m);
        zk.push_back(1);
        words.push_back(zk);  // 0^{2m} 1
        DigitWord even{1};
        for (size_t i = 0; i < 2 * m; ++i) even.push_back(0);
        even.push_back(1);
        words.push_back(even);  // 1 0^{2m} 1, provably absent
        DigitWord odd{1};
        for (size_t i = 0; i < 2 * m + 1; ++i) odd.push_back(0);
        odd.push_back(1);
        words.push_back(odd);  // 1 0^{2m+1} 1
        for (const auto& w : words) reps.push_back(suffix_report(w, maxn, o.jobs));
    }
    return reports_all_match("suffix-families", reps,
                             "all-zero, single-one and enclosed-zero suffix families match");
}

VerifyResult vf_tridents(const VerifyOpts& o) {
    size_t nmax = o.n.value_or(7);
    for (size_t n = 1; n <= nmax; ++n) {
        TridentDecomposition td = tridents(n);
        if (Int(static_cast<long long>(td.tridents.size())) != fib(2 * n - 1) ||
            Int(static_cast<long long>(td.singletons.size())) != fib(2 * n - 2)) {
            std::ostringstream d;
            d << "Xi_" << n << " has " << td.tridents.size() << " tridents and "
              << td.singletons.size() << " singletons, expected F_" << 2 * n - 1 << " and F_"
              << 2 * n - 2;
            return {"tridents", false, d.str()};
        }
        for (size_t i = 0; i + 1 < td.essentials.size(); ++i)
            if (td.essentials[i] >= td.essentials[i + 1])
                return {"tridents", false, "essentials are not increasing in Xi_" + std::to_string(n)};
        if (n >= 2) {
            // The boundary trident straddles the two halves of Xi_n: it
            // starts at the last element of the odd block.
            Int boundary = lucas(2 * n) - 1;
            bool found = false;
            for (const Trident& t : td.tridents) found = found || t.first == boundary;
            if (!found)
                return {"tridents", false,
                        "no trident straddles the block boundary in Xi_" + std::to_string(n)};
        }
    }
    std::ostringstream d;
    d << "trident/singleton counts, ordering and boundary tridents for n = 1.." << nmax;
    return {"tridents", true, d.str()};
}

VerifyResult vf_gamma_all(const VerifyOpts& o) {
    size_t nmax = o.n.value_or(7);
    for (size_t n = 1; n <= nmax; ++n)
        if (!verify_all_gamma(n))
            return {"gamma-all", false,
                    "Xi_" + std::to_string(n) + " does not realize every admissible word"};
    Int maxn = o.maxn.value_or(Int(10000));
    for (Int N = 2; N <= maxn; ++N) {
        BetaParts parts = beta_parts(N);
        if (!parts.gamma || gamma_recursive(N) != *parts.gamma) {
            std::ostringstream d;
            d << "gamma recursion disagrees with beta_parts at N = " << N;
            return {"gamma-all", false, d.str()};
        }
    }
    std::ostringstream d;
    d << "fractional words exhaust all admissible words for n = 1.." << nmax
      << "; gamma recursion agrees up to N = " << maxn;
    return {"gamma-all", true, d.str()};
}

VerifyResult vf_pi_arith(const VerifyOpts& o) {
    size_t nmax = o.n.value_or(8);
    for (size_t n = 1; n <= nmax; ++n)
        if (!verify_pi_arithmetic(n))
            return {"pi-arith", false,
                    "code permutation of Xi_" + std::to_string(n) + " is not the arithmetic one"};
    auto expect = [](const std::vector<Int>& got, std::vector<long long> want) {
        std::vector<Int> w(want.begin(), want.end());
        return got == w;
    };
    if (!expect(pi_permutation(2).values, {2, 0, 1}))
        return {"pi-arith", false, "permutation of Xi_2 is not (2 0 1)"};
    if (!expect(pi_permutation(3).values, {7, 2, 5, 0, 3, 6, 1, 4}))
        return {"pi-arith", false, "permutation of Xi_3 is not (7 2 5 0 3 6 1 4)"};
    std::ostringstream d;
    d << "code permutations are the arithmetic progressions for n = 1.." << nmax;
    return {"pi-arith", true, d.str()};
}

VerifyResult vf_rotation(const VerifyOpts& o) {
    size_t nmax = o.n.value_or(8);
    std::vector<Int> orbit = rotation_orbit_sketch(3);
    std::vector<Int> expect_orbit{0, 5, 2, 7, 4, 1, 6, 3};
    if (orbit != expect_orbit)
        return {"rotation", false, "residue orbit for n = 3 is not (0 5 2 7 4 1 6 3)"};
    for (size_t n = 2; n <= nmax; ++n) {
        std::vector<Int> want = pi_permutation(n).values;
        if (rotation_permutation(n, RotationConvention::ResidueSketch) != want ||
            rotation_permutation(n, RotationConvention::RawOrbit) != want)
            return {"rotation", false,
                    "rotation does not reproduce the code permutation for n = " + std::to_string(n)};
    }
    std::ostringstream d;
    d << "both rotation readings reproduce the code permutation for n = 2.." << nmax;
    return {"rotation", true, d.str()};
}

VerifyResult vf_conjecture(const VerifyOpts& o) {
    size_t maxlen = o.n.value_or(5);
    Int horizon = o.maxn.value_or(Int(1000000));
    std::vector<ConjectureRow> rows = conjecture_scan(maxlen, horizon, o.jobs);
    size_t classified = 0;
    for (const ConjectureRow& row : rows) {
        std::string w = word_to_string(row.word);
        if (!row.note.empty()) return {"conjecture", false, "prefix " + w + ": " + row.note};
        if (row.undersampled)
            return {"conjecture", false, "prefix " + w + " is undersampled at this horizon"};
        for (const DiffWordClass& c : row.classes) {
            if (c.tag == DiffWordClass::Tag::None)
                return {"conjecture", false, "prefix " + w + " has an unclassified subsequence"};
            if (!is_lucas(c.a) || !is_lucas(c.b))
                return {"conjecture", false, "prefix " + w + " has non-Lucas letters"};
            ++classified;
        }
        if (w == "1001" &&
            !(row.classes[0].tag == DiffWordClass::Tag::XG && row.classes[0].a == 29 &&
              row.classes[0].b == 18))
            return {"conjecture", false, "prefix 1001 is not X_G with letters 29, 18"};
        if (w == "0100" &&
            !(row.classes[0].tag == DiffWordClass::Tag::XH && row.classes[0].a == 18 &&
              row.classes[0].b == 11))
            return {"conjecture", false, "first-of-trident 0100 is not X_H with letters 18, 11"};
    }
    std::ostringstream d;
    d << classified << " subsequences over " << rows.size()
      << " prefixes all classify as X_F/X_G/X_H with Lucas letters, horizon " << horizon;
    return {"conjecture", true, d.str()};
}

const std::vector<std::pair<std::string, VerifyResult (*)(const VerifyOpts&)>> kVerifiers = {
    {"zeckphi", vf_zeckphi},
    {"ceiling", vf_ceiling},
    {"recursive", vf_recursive},
    {"borders", vf_borders},
    {"splitting-lambda", vf_splitting_lambda},
    {"splitting-xi", vf_splitting_xi},
    {"congruence", vf_congruence},
    {"exclusions", vf_exclusions},
    {"suffix-tree", vf_suffix_tree},
    {"prefix-table", vf_prefix_table},
    {"suffix-families", vf_suffix_families},
    {"tridents", vf_tridents},
    {"gamma-all", vf_gamma_all},
    {"pi-arith", vf_pi_arith},
    {"rotation", vf_rotation},
    {"conjecture", vf_conjecture},
};

// ------------------------------------------------------------------ table ---

struct TableRow {
    Int n;
    std::string zeck, phi, gamma, codev;
};

std::vector<TableRow> build_table(const Int& from, const Int& to) {
    std::vector<TableRow> rows;
    for (Int N = from; N <= to; ++N) {
        TableRow row;
        row.n = N;
        DigitWord z = zeck_encode(N);
        row.zeck = z.empty() ? "0" : word_to_string(z);
        row.phi = to_string(phi_encode_recursive(N));
        if (N >= 2) {
            BetaParts parts = beta_parts(N);
            row.gamma = parts.gamma ? word_to_string(*parts.gamma) : "-";
            row.codev = code(N).str();
        } else {
            row.gamma = "-";
            row.codev = "-";
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

void print_table(const std::vector<TableRow>& rows, const std::string& format) {
    if (format == "csv") {
        std::cout << "n,zeck,phi,gamma,code\n";
        for (const auto& r : rows)
            std::cout << r.n << ',' << r.zeck << ',' << r.phi << ',' << r.gamma << ','
                      << r.codev << '\n';
        return;
    }
    if (format == "json") {
        json out = json::array();
        for (const auto& r : rows)
            out.push_back({{"n", to_ll(r.n)},
                           {"zeck", r.zeck},
                           {"phi", r.phi},
                           {"gamma", r.gamma},
                           {"code", r.codev}});
        std::cout << out.dump(2) << '\n';
        return;
    }
    size_t wz = 4, wp = 3, wg = 5, wn = 1;
    for (const auto& r : rows) {
        wz = std::max(wz, r.zeck.size());
        wp = std::max(wp, r.phi.size());
        wg = std::max(wg, r.gamma.size());
        wn = std::max(wn, r.n.str().size());
    }
    std::cout << std::setw(static_cast<int>(wn)) << "N" << "  " << std::left
              << std::setw(static_cast<int>(wz)) << "zeck" << "  "
              << std::setw(static_cast<int>(wp)) << "phi" << "  "
              << std::setw(static_cast<int>(wg)) << "gamma" << std::right << "  code\n";
    for (const auto& r : rows) {
        std::cout << std::setw(static_cast<int>(wn)) << r.n.str() << "  " << std::left
                  << std::setw(static_cast<int>(wz)) << r.zeck << "  "
                  << std::setw(static_cast<int>(wp)) << r.phi << "  "
                  << std::setw(static_cast<int>(wg)) << r.gamma << std::right << "  " << r.codev
                  << '\n';
    }
}

// ------------------------------------------------------------------- main ---

void print_report(const OccurrenceReport& rep, const std::string& format,
                  std::optional<size_t> count) {
    if (format == "json") {
        std::cout << report_to_json(rep).dump(2) << '\n';
        return;
    }
    if (format == "csv") {
        std::cout << "k,n\n";
        size_t limit = count.value_or(rep.scanned.size());
        for (size_t i = 0; i < rep.scanned.size() && i < limit; ++i)
            std::cout << i << ',' << rep.scanned[i] << '\n';
        return;
    }
    std::vector<Int> shown = rep.scanned;
    if (count && shown.size() > *count) shown.resize(*count);
    std::cout << join(shown, ",") << '\n';
    std::cout << "predicted: " << form_to_string(rep.predicted) << '\n';
    std::cout << "verdict: " << verdict_name(rep.verdict);
    if (rep.verdict == Verdict::Mismatch) std::cout << " at index " << rep.mismatch_index;
    std::cout << '\n';
}

std::string class_to_string(const DiffWordClass& c) {
    if (c.tag == DiffWordClass::Tag::None) return "NONE";
    std::ostringstream o;
    o << to_string(c.tag) << "(" << c.a << "," << c.b << ")";
    return o.str();
}

int run(int argc, char** argv) {
    CLI::App app{"Exact base-phi / Zeckendorf numeration toolkit"};
    app.require_subcommand(1);
    std::string format = "text";
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();

    // encode / decode
    std::string base, number, word;
    auto* enc = app.add_subcommand("encode", "Encode a natural number");
    enc->add_option("base", base, "phi or zeck")->required()->check(CLI::IsMember({"phi", "zeck"}));
    enc->add_option("number", number, "decimal natural number")->required();

    std::string dbase, dword;
    auto* dec = app.add_subcommand("decode", "Decode a digit word");
    dec->add_option("base", dbase, "phi or zeck")->required()->check(CLI::IsMember({"phi", "zeck"}));
    dec->add_option("word", dword, "digit word, e.g. 1000.1001 or 101000")->required();

    // table
    std::string from_s, to_s;
    auto* tab = app.add_subcommand("table", "Print N, Zeckendorf, base-phi, gamma, code rows");
    tab->add_option("from", from_s)->required();
    tab->add_option("to", to_s)->required();

    // verify
    std::string verify_id;
    std::string maxn_s;
    long long n_opt = -1;
    unsigned jobs = 1;
    auto* ver = app.add_subcommand("verify", "Run a theorem verifier (or 'all')");
    ver->add_option("id", verify_id, "theorem id; 'all' runs every verifier")->required();
    ver->add_option("--max-n", maxn_s, "scan horizon (default depends on the id)");
    ver->add_option("--n", n_opt, "block-index bound (default depends on the id)");
    ver->add_option("--jobs", jobs, "worker threads for scans");

    // scan
    std::string kind, w1, w2;
    std::string scan_maxn_s;
    long long count_opt = -1;
    unsigned scan_jobs = 1;
    auto* scan = app.add_subcommand("scan", "Scan occurrences of a digit block");
    scan->add_option("kind", kind, "suffix, prefix, or central")
        ->required()
        ->check(CLI::IsMember({"suffix", "prefix", "central"}));
    scan->add_option("word", w1, "digit block")->required();
    scan->add_option("word2", w2, "fractional side of a central block");
    scan->add_option("--max-n", scan_maxn_s, "scan horizon (default 10000)");
    scan->add_option("--count", count_opt, "print only the first K occurrences");
    scan->add_option("--jobs", scan_jobs, "worker threads");

    // perm
    size_t perm_n = 3;
    std::string convention = "sketch";
    bool show_orbit = false;
    auto* perm = app.add_subcommand("perm", "Code permutation of a Xi block");
    perm->add_option("--n", perm_n, "block index n (permutation of size F_2n)")
        ->capture_default_str();
    perm->add_option("--convention", convention, "rotation reading")
        ->check(CLI::IsMember({"sketch", "raw"}))
        ->capture_default_str();
    perm->add_flag("--orbit", show_orbit, "print the rotation residue orbit instead");

    // conjecture
    size_t max_len = 5;
    std::string conj_maxn_s;
    unsigned conj_jobs = 1;
    auto* conj = app.add_subcommand("conjecture", "Difference-word survey over short prefixes");
    conj->add_option("--max-len", max_len, "maximum prefix length")->capture_default_str();
    conj->add_option("--max-n", conj_maxn_s, "scan horizon (default 1000000)");
    conj->add_option("--jobs", conj_jobs, "worker threads");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 2;
    }

    if (enc->parsed()) {
        Int N = parse_nat(number);
        if (base == "zeck") {
            DigitWord z = zeck_encode(N);
            std::cout << (z.empty() ? "0" : word_to_string(z)) << '\n';
        } else {
            PhiExpansion e = phi_encode_recursive(N);
            if (phi_decode(e) != N) throw std::logic_error("encode/decode round trip failed");
            std::cout << to_string(e) << '\n';
        }
        return 0;
    }
    if (dec->parsed()) {
        Int N = dbase == "zeck" ? zeck_decode(parse_word(dword))
                                : phi_decode(parse_phi_expansion(dword));
        std::cout << N << '\n';
        return 0;
    }
    if (tab->parsed()) {
        Int from = parse_nat(from_s), to = parse_nat(to_s);
        if (from > to) throw std::invalid_argument("empty table range");
        print_table(build_table(from, to), format);
        return 0;
    }
    if (ver->parsed()) {
        VerifyOpts opts;
        if (!maxn_s.empty()) opts.maxn = parse_nat(maxn_s);
        if (n_opt >= 0) opts.n = static_cast<size_t>(n_opt);
        opts.jobs = jobs;
        std::vector<VerifyResult> results;
        bool known = false;
        for (const auto& [id, fn] : kVerifiers) {
            if (verify_id == "all" || verify_id == id) {
                known = true;
                try {
                    results.push_back(fn(opts));
                } catch (const std::exception& e) {
                    results.push_back({id, false, std::string("exception: ") + e.what()});
                }
            }
        }
        if (!known) {
            std::cerr << "unknown theorem id '" << verify_id << "'\n";
            return 2;
        }
        bool all_pass = true;
        if (format == "json") {
            json out = json::array();
            for (const auto& r : results) {
                out.push_back({{"id", r.id}, {"pass", r.pass}, {"detail", r.detail}});
                all_pass = all_pass && r.pass;
            }
            std::cout << out.dump(2) << '\n';
        } else {
            for (const auto& r : results) {
                std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.id << ": " << r.detail << '\n';
                all_pass = all_pass && r.pass;
            }
        }
        return all_pass ? 0 : 1;
    }
    if (scan->parsed()) {
        Int maxn = scan_maxn_s.empty() ? Int(10000) : parse_nat(scan_maxn_s);
        std::optional<size_t> count;
        if (count_opt >= 0) count = static_cast<size_t>(count_opt);
        OccurrenceReport rep;
        if (kind == "suffix") {
            rep = suffix_report(parse_word(w1), maxn, scan_jobs);
        } else if (kind == "prefix") {
            rep = prefix_report(parse_word(w1), maxn, scan_jobs);
        } else {
            if (w2.empty())
                throw std::invalid_argument("central scans need both block words: scan central W V");
            rep = central_report(parse_word(w1), parse_word(w2), maxn, scan_jobs);
        }
        print_report(rep, format, count);
        return rep.verdict == Verdict::Mismatch ? 1 : 0;
    }
    if (perm->parsed()) {
        if (show_orbit) {
            std::vector<Int> orbit = rotation_orbit_sketch(perm_n);
            if (format == "json") {
                json vals = json::array();
                for (const auto& v : orbit) vals.push_back(to_ll(v));
                std::cout << json{{"n", perm_n}, {"orbit", vals}}.dump(2) << '\n';
            } else {
                std::cout << join(orbit, " ") << '\n';
            }
            return 0;
        }
        RotationConvention conv = convention == "raw" ? RotationConvention::RawOrbit
                                                      : RotationConvention::ResidueSketch;
        std::vector<Int> values = rotation_permutation(perm_n, conv);
        if (values != pi_permutation(perm_n).values) {
            std::cerr << "rotation permutation disagrees with the code permutation\n";
            return 1;
        }
        if (format == "json") {
            json vals = json::array();
            for (const auto& v : values) vals.push_back(to_ll(v));
            std::cout << json{{"n", perm_n}, {"convention", convention}, {"values", vals}}.dump(2)
                      << '\n';
        } else {
            std::cout << join(values, " ") << '\n';
        }
        return 0;
    }
    if (conj->parsed()) {
        Int horizon = conj_maxn_s.empty() ? Int(1000000) : parse_nat(conj_maxn_s);
        std::vector<ConjectureRow> rows = conjecture_scan(max_len, horizon, conj_jobs);
        if (format == "json") {
            json out = json::array();
            for (const auto& row : rows) {
                json classes = json::array();
                for (const auto& c : row.classes)
                    classes.push_back({{"tag", to_string(c.tag)},
                                       {"a", to_ll(c.a)},
                                       {"b", to_ll(c.b)}});
                out.push_back({{"word", word_to_string(row.word)},
                               {"structure", row.trident_structured ? "trident" : "singleton"},
                               {"classes", classes},
                               {"lucas_letters", row.lucas_letters},
                               {"undersampled", row.undersampled},
                               {"note", row.note}});
            }
            std::cout << out.dump(2) << '\n';
        } else if (format == "csv") {
            std::cout << "word,structure,position,class,a,b,lucas\n";
            for (const auto& row : rows)
                for (size_t i = 0; i < row.classes.size(); ++i)
                    std::cout << word_to_string(row.word) << ','
                              << (row.trident_structured ? "trident" : "singleton") << ',' << i + 1
                              << ',' << to_string(row.classes[i].tag) << ',' << row.classes[i].a
                              << ',' << row.classes[i].b << ','
                              << (row.lucas_letters ? "yes" : "no") << '\n';
        } else {
            for (const auto& row : rows) {
                std::cout << std::left << std::setw(6) << word_to_string(row.word) << std::right
                          << (row.trident_structured ? " trident  " : " singleton");
                for (const auto& c : row.classes) std::cout << ' ' << class_to_string(c);
                if (row.lucas_letters) std::cout << "  [Lucas letters]";
                if (row.undersampled) std::cout << "  [UNDERSAMPLED]";
                if (!row.note.empty()) std::cout << "  note: " << row.note;
                std::cout << '\n';
            }
        }
        return 0;
    }
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
