#include "phinum/lucas.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace phinum {

LucasInterval lambda_interval(size_t m) {
    if (m < 1) throw std::invalid_argument("lambda_interval: index starts at 1");
    LucasInterval iv;
    iv.index = m;
    if (m % 2 == 0) {
        iv.lo = lucas(m);
        iv.hi = lucas(m + 1);
    } else {
        iv.lo = lucas(m) + 1;
        iv.hi = lucas(m + 1) - 1;
    }
    return iv;
}

LucasInterval locate(const Int& N) {
    if (N < 2) throw std::invalid_argument("locate: intervals start at N = 2");
    size_t m = 1;
    while (lambda_interval(m).hi < N) ++m;
    const LucasInterval iv = lambda_interval(m);
    if (N < iv.lo) throw std::logic_error("locate: intervals failed to tile");
    return iv;
}

XiInterval xi_interval(size_t n) {
    if (n < 1) throw std::invalid_argument("xi_interval: index starts at 1");
    return {n, lucas(2 * n - 1) + 1, lucas(2 * n + 1)};
}

namespace {

void append_digits(DigitWord& w, const char* s) {
    for (; *s; ++s) w.push_back(static_cast<std::uint8_t>(*s - '0'));
}

DigitWord digits(const char* s) {
    DigitWord w;
    append_digits(w, s);
    return w;
}

DigitWord repeat(const char* block, size_t times) {
    DigitWord w;
    for (size_t i = 0; i < times; ++i) append_digits(w, block);
    return w;
}

DigitWord concat(DigitWord a, const DigitWord& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

void strip_prefix_checked(DigitWord& w, const char* pre) {
    const DigitWord p = digits(pre);
    if (w.size() < p.size() || !std::equal(p.begin(), p.end(), w.begin()))
        throw std::logic_error("word surgery: expected prefix missing");
    w.erase(w.begin(), w.begin() + static_cast<long long>(p.size()));
}

void strip_suffix_checked(DigitWord& w, const char* suf) {
    const DigitWord s = digits(suf);
    if (w.size() < s.size() || !std::equal(s.begin(), s.end(), w.end() - static_cast<long long>(s.size())))
        throw std::logic_error("word surgery: expected suffix missing");
    w.erase(w.end() - static_cast<long long>(s.size()), w.end());
}

}  // namespace

BorderExpansions lucas_border_expansions(size_t n) {
    if (n < 1) throw std::invalid_argument("lucas_border_expansions: index starts at 1");
    BorderExpansions b;
    b.even_lo.left = concat(digits("1"), repeat("0", 2 * n));
    b.even_lo.right = concat(repeat("0", 2 * n - 1), digits("1"));
    b.even_hi.left = concat(digits("1"), repeat("01", n));
    b.even_hi.right = repeat("01", n);
    b.odd_lo.left = concat(digits("1"), repeat("0", 2 * n + 1));
    b.odd_lo.right = concat(repeat("10", n), digits("01"));
    b.odd_hi.left = repeat("10", n + 1);
    b.odd_hi.right = concat(repeat("0", 2 * n + 1), digits("1"));
    return b;
}

PhiExpansion phi_encode_recursive(const Int& N) {
    if (N < 0) throw std::invalid_argument("phi_encode_recursive: negative input");
    static const std::vector<PhiExpansion> base = [] {
        const char* rows[] = {"0.",         "1",          "10.01",      "100.01",
                              "101.01",     "1000.1001",  "1010.0001",  "10000.0001",
                              "10001.0001", "10010.0101", "10100.0101", "10101.0101"};
        std::vector<PhiExpansion> t;
        for (const char* s : rows) t.push_back(parse_phi_expansion(s));
        return t;
    }();
    if (N <= 11) return base[static_cast<size_t>(N)];

    const LucasInterval lam = locate(N);
    const size_t m = lam.index;  // >= 5 since N > 11
    const LucasInterval inner_a = lambda_interval(m - 2);
    const LucasInterval inner_b = lambda_interval(m - 3);
    const Int shift_a = lucas(m - 1);
    const Int shift_bc = lucas(m);

    char piece;
    Int inner;
    if (N <= inner_a.hi + shift_a) {
        piece = 'a';
        inner = N - shift_a;
        if (inner < inner_a.lo) throw std::logic_error("phi_encode_recursive: piece a underflow");
    } else if (N <= inner_b.hi + shift_bc) {
        piece = 'b';
        inner = N - shift_bc;
        if (inner < inner_b.lo) throw std::logic_error("phi_encode_recursive: piece b underflow");
    } else {
        piece = 'c';
        inner = N - shift_bc;
        if (inner < inner_a.lo || inner > inner_a.hi)
            throw std::logic_error("phi_encode_recursive: piece c out of range");
    }

    PhiExpansion sub = phi_encode_recursive(inner);
    const bool even = (m % 2 == 0);
    PhiExpansion out;
    if (piece == 'a') {
        strip_prefix_checked(sub.left, "10");
        out.left = concat(digits("1000"), sub.left);
        strip_suffix_checked(sub.right, "01");
        out.right = std::move(sub.right);
        append_digits(out.right, even ? "0001" : "1001");
    } else if (piece == 'b') {
        out.left = concat(digits("100"), sub.left);
        out.right = std::move(sub.right);
        if (even) {
            append_digits(out.right, "01");
        } else {
            strip_suffix_checked(out.right, "01");
            append_digits(out.right, "001001");
        }
    } else {
        out.left = concat(digits("10"), sub.left);
        out.right = std::move(sub.right);
        if (even) {
            append_digits(out.right, "01");
        } else {
            strip_suffix_checked(out.right, "01");
            append_digits(out.right, "0001");
        }
    }
    return out;
}

BetaParts beta_parts(const Int& N) {
    if (N < 0) throw std::invalid_argument("beta_parts: negative input");
    return beta_parts(phi_encode_recursive(N));
}

std::vector<int> SplittingWord::word() const {
    std::vector<int> w;
    w.reserve(pieces.size());
    for (const auto& p : pieces) w.push_back(p.base);
    return w;
}

SplittingWord canonical_splitting_lambda(size_t m) {
    if (m < 3) throw std::invalid_argument("canonical_splitting_lambda: defined for m >= 3");
    SplittingWord out;
    if (m <= 5) {
        out.pieces.push_back({static_cast<int>(m), Int(0)});
        return out;
    }
    const SplittingWord wing = canonical_splitting_lambda(m - 2);
    const SplittingWord mid = canonical_splitting_lambda(m - 3);
    const Int lm1 = lucas(m - 1);
    const Int lm = lucas(m);
    for (SplittingPiece p : wing.pieces) {
        p.shift += lm1;
        out.pieces.push_back(p);
    }
    for (SplittingPiece p : mid.pieces) {
        p.shift += lm;
        out.pieces.push_back(p);
    }
    for (SplittingPiece p : wing.pieces) {
        p.shift += lm;
        out.pieces.push_back(p);
    }
    return out;
}

SplittingWord canonical_splitting_xi(size_t n) {
    if (n < 2) throw std::invalid_argument("canonical_splitting_xi: defined for n >= 2");
    SplittingWord out = canonical_splitting_lambda(2 * n - 1);
    const SplittingWord even = canonical_splitting_lambda(2 * n);
    out.pieces.insert(out.pieces.end(), even.pieces.begin(), even.pieces.end());
    return out;
}

namespace {

bool congruent_central(const PhiExpansion& x, const PhiExpansion& y, unsigned q) {
    for (long long i = -static_cast<long long>(q); i < static_cast<long long>(q); ++i)
        if (digit_at(x, i) != digit_at(y, i)) return false;
    return true;
}

}  // namespace

bool check_congruence(const IntervalRef& gamma, const std::vector<IntervalRef>& parts, unsigned q) {
    Int total = 0;
    for (const auto& p : parts) total += p.hi - p.lo + 1;
    if (total != gamma.hi - gamma.lo + 1)
        throw std::invalid_argument("check_congruence: part lengths do not sum to the interval length");
    Int n = gamma.lo;
    for (const auto& p : parts)
        for (Int k = p.lo; k <= p.hi; ++k, ++n)
            if (!congruent_central(phi_encode_recursive(n), phi_encode_recursive(k), q)) return false;
    return true;
}

bool matches_central(const PhiExpansion& e, const CentralPattern& pat) {
    return matches_central(e, pat.suffix, pat.prefix);
}

namespace {

void validate_pattern(const CentralPattern& pat) {
    if (pat.suffix.size() > 4 || pat.prefix.size() > 4)
        throw std::invalid_argument("propagation: central block wider than 4 digits per side");
}

}  // namespace

PropagationReport propagation_absence(const CentralPattern& pat, const Int& maxN) {
    validate_pattern(pat);
    if (maxN < 17) throw std::invalid_argument("propagation_absence: scan must cover the base window 1..17");
    PropagationReport rep;
    ExpansionWalker w;
    for (Int N = 1; N <= maxN; ++N) {
        w.advance();
        ++rep.scanned;
        if (matches_central(w.value(), pat)) {
            (N <= 17 ? rep.hypothesis_ok : rep.conclusion_ok) = false;
            rep.first_violation = N;
            return rep;
        }
    }
    return rep;
}

PropagationReport propagation_coupling(const CentralPattern& earlier, const CentralPattern& later,
                                       unsigned offset, const Int& maxN) {
    validate_pattern(earlier);
    validate_pattern(later);
    if (offset < 1 || offset > 4) throw std::invalid_argument("propagation_coupling: offset must be 1..4");
    const Int window_end = Int(offset) + 17;
    if (maxN < window_end)
        throw std::invalid_argument("propagation_coupling: scan must cover the base window");
    PropagationReport rep;
    ExpansionWalker w;
    std::deque<PhiExpansion> ring;  // expansions of N - offset .. N
    ring.push_back(w.value());
    for (Int N = 1; N <= maxN; ++N) {
        w.advance();
        ring.push_back(w.value());
        if (ring.size() > offset + 1) ring.pop_front();
        if (N < offset) continue;
        ++rep.scanned;
        if (matches_central(ring.front(), earlier) != matches_central(ring.back(), later)) {
            (N <= window_end ? rep.hypothesis_ok : rep.conclusion_ok) = false;
            rep.first_violation = N;
            return rep;
        }
    }
    return rep;
}

}  // namespace phinum
