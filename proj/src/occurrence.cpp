#include "phinum/occurrence.hpp"

#include <algorithm>
#include <future>
#include <set>
#include <stdexcept>

namespace phinum {

namespace {

GBSParams gbs(Int p, Int q, Int r, bool from_zero = false) {
    return {std::move(p), std::move(q), std::move(r), from_zero};
}

void append_tail(DigitWord& w, const char* s) {
    for (; *s; ++s) w.push_back(static_cast<std::uint8_t>(*s - '0'));
}

// Walks [lo, maxN] and collects every N whose expansion satisfies pred.
// With jobs > 1 the range is cut into chunks, each seeded directly by the
// interval-recursion encoder so the walks are independent.
template <typename Pred>
std::vector<Int> scan_range(const Int& lo, const Int& maxN, unsigned jobs, Pred pred) {
    if (maxN < lo) return {};
    auto walk = [&pred](const Int& from, const Int& to) {
        std::vector<Int> hits;
        ExpansionWalker w(from, phi_encode_recursive(from));
        while (w.n() <= to) {
            if (pred(w.value())) hits.push_back(w.n());
            w.advance();
        }
        return hits;
    };
    Int total = maxN - lo + 1;
    if (jobs <= 1 || total < 512) return walk(lo, maxN);

    Int chunk = total / jobs + 1;
    std::vector<std::future<std::vector<Int>>> futures;
    for (unsigned j = 0; j < jobs; ++j) {
        Int a = lo + chunk * j;
        if (a > maxN) break;
        Int b = a + chunk - 1;
        if (b > maxN) b = maxN;
        futures.push_back(std::async(std::launch::async, walk, a, b));
    }
    std::vector<Int> all;
    for (auto& f : futures) {
        auto part = f.get();
        all.insert(all.end(), part.begin(), part.end());
    }
    return all;
}

void require_admissible(const DigitWord& w, const char* what) {
    if (w.empty() || !admissible(w))
        throw std::invalid_argument(std::string(what) + " must be a nonempty admissible word");
}

}  // namespace

std::vector<Int> scan_suffix(const DigitWord& w, const Int& maxN, unsigned jobs) {
    require_admissible(w, "suffix block");
    return scan_range(Int(0), maxN, jobs,
                      [&w](const PhiExpansion& e) { return matches_suffix(e, w); });
}

std::vector<Int> scan_central(const DigitWord& w, const DigitWord& v, const Int& maxN,
                              unsigned jobs) {
    require_admissible(w, "central block, integer side");
    require_admissible(v, "central block, fractional side");
    if (w.back() == 1 && v.front() == 1)
        throw std::invalid_argument("central block has adjacent ones across the radix point");
    return scan_range(Int(0), maxN, jobs,
                      [&w, &v](const PhiExpansion& e) { return matches_central(e, w, v); });
}

std::vector<Int> scan_prefix(const DigitWord& v, const Int& maxN, unsigned jobs) {
    require_admissible(v, "fractional prefix");
    return scan_range(Int(2), maxN, jobs,
                      [&v](const PhiExpansion& e) { return matches_prefix(e, v); });
}

std::vector<Int> ClosedForm::terms(const Int& maxValue) const {
    if (kind == Kind::None) throw std::logic_error("no closed form to enumerate");
    if (kind == Kind::Empty) return {};
    std::vector<GBSParams> gens;
    if (kind == Kind::Triple) {
        for (int off = 0; off < 3; ++off) {
            GBSParams g = parts.at(0);
            g.r += off;
            gens.push_back(g);
        }
    } else {
        gens = parts;
    }
    std::vector<Int> out;
    for (const auto& g : gens) {
        if (QuadInt(Int(g.p + 2 * g.q), g.p).sign() <= 0)
            throw std::invalid_argument("sequence slope must be positive");
        for (Int n = g.from_zero ? 0 : 1;; ++n) {
            Int t = gbs_term(g, n);
            if (t > maxValue) break;
            out.push_back(std::move(t));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

ClosedForm predict_suffix(const DigitWord& w) {
    require_admissible(w, "suffix block");
    size_t m = w.size();
    size_t ones = static_cast<size_t>(std::count(w.begin(), w.end(), 1));

    if (ones == 0) {
        // All-zero blocks split by the final fractional digit into two
        // Lucas-slope sequences; the pair depends on the parity of |w|.
        if (m == 1) return ClosedForm::single(gbs(-1, 3, 0, true));
        if (m % 2 == 0)
            return ClosedForm::union2(gbs(lucas(m), lucas(m - 1), 1),
                                      gbs(lucas(m - 1), lucas(m - 2), 0, true));
        return ClosedForm::union2(gbs(lucas(m), lucas(m - 1), 0, true),
                                  gbs(lucas(m - 1), lucas(m - 2), 1));
    }

    if (w.back() == 1) {
        if (ones == 1) {
            // w = 0^k 1
            size_t half = (m - 1) / 2;
            return ClosedForm::single(gbs(lucas(2 * half + 1), lucas(2 * half), 1, true));
        }
        size_t prev = m - 2;
        while (w[prev] == 0) --prev;
        size_t z = m - 2 - prev;  // zeros between the last two ones
        if (z % 2 == 0) return ClosedForm::empty();
        if (ones == 2 && prev == 0) {
            // w = 1 0^{2j+1} 1 exactly
            size_t j = (z - 1) / 2;
            return ClosedForm::single(
                gbs(lucas(2 * j + 2), lucas(2 * j + 1), Int(1 - lucas(2 * j + 1))));
        }
    }

    // Generic block: slope from the leading digit, offset anchored at the
    // first occurrence, which is guaranteed to appear within L_{|w|} + 1.
    Int p, q;
    if (w.front() == 1) {
        p = lucas(m - 1);
        q = lucas(m - 2);
    } else {
        p = lucas(m - 2);
        q = lucas(m - 3);
    }
    Int cutoff = lucas(m + 2);
    ExpansionWalker walker;
    while (walker.n() <= cutoff) {
        if (matches_suffix(walker.value(), w))
            return ClosedForm::single(gbs(p, q, Int(walker.n() - p - q)));
        walker.advance();
    }
    return ClosedForm::none();
}

ClosedForm predict_central(const DigitWord& w, const DigitWord& v) {
    if (w.size() < 2 || v.size() != 1) return ClosedForm::none();
    if (std::count(w.begin(), w.end(), 1) != 0) return ClosedForm::none();
    size_t k = w.size();
    if (v[0] == 1) {
        size_t half = k / 2;
        return ClosedForm::single(gbs(lucas(2 * half), lucas(2 * half - 1), 1));
    }
    if (k % 2 == 0) return ClosedForm::single(gbs(lucas(k - 1), lucas(k - 2), 0, true));
    return ClosedForm::single(gbs(lucas(k), lucas(k - 1), 0, true));
}

ClosedForm predict_prefix_small(const DigitWord& v) {
    require_admissible(v, "fractional prefix");
    const std::string s = word_to_string(v);
    if (s == "0") return ClosedForm::triple(gbs(1, 2, -1));
    if (s == "1" || s == "10") return ClosedForm::single(gbs(3, 1, 1));
    if (s == "00") return ClosedForm::triple(gbs(3, 1, 2));
    if (s == "01" || s == "010") return ClosedForm::triple(gbs(4, 3, 2, true));
    if (s == "000") return ClosedForm::triple(gbs(4, 3, -1));
    if (s == "001") return ClosedForm::triple(gbs(7, 4, 2));
    if (s == "100") return ClosedForm::single(gbs(4, 3, -2));
    if (s == "101") return ClosedForm::single(gbs(7, 4, 1));
    return ClosedForm::none();
}

namespace {

OccurrenceReport finish_report(OccurrenceReport rep, const Int& maxN) {
    rep.horizon = maxN;
    if (rep.predicted.kind == ClosedForm::Kind::None) {
        rep.verdict = Verdict::NoPrediction;
        return rep;
    }
    std::vector<Int> expected = rep.predicted.terms(maxN);
    size_t common = std::min(expected.size(), rep.scanned.size());
    for (size_t i = 0; i < common; ++i) {
        if (expected[i] != rep.scanned[i]) {
            rep.verdict = Verdict::Mismatch;
            rep.mismatch_index = static_cast<long long>(i);
            return rep;
        }
    }
    if (expected.size() != rep.scanned.size()) {
        rep.verdict = Verdict::Mismatch;
        rep.mismatch_index = static_cast<long long>(common);
        return rep;
    }
    rep.verdict = Verdict::Match;
    return rep;
}

}  // namespace

OccurrenceReport suffix_report(const DigitWord& w, const Int& maxN, unsigned jobs) {
    OccurrenceReport rep;
    rep.kind = "suffix";
    rep.suffix_block = w;
    rep.scanned = scan_suffix(w, maxN, jobs);
    rep.predicted = predict_suffix(w);
    return finish_report(std::move(rep), maxN);
}

OccurrenceReport central_report(const DigitWord& w, const DigitWord& v, const Int& maxN,
                                unsigned jobs) {
    OccurrenceReport rep;
    rep.kind = "central";
    rep.suffix_block = w;
    rep.prefix_block = v;
    rep.scanned = scan_central(w, v, maxN, jobs);
    rep.predicted = predict_central(w, v);
    return finish_report(std::move(rep), maxN);
}

OccurrenceReport prefix_report(const DigitWord& v, const Int& maxN, unsigned jobs) {
    OccurrenceReport rep;
    rep.kind = "prefix";
    rep.prefix_block = v;
    rep.scanned = scan_prefix(v, maxN, jobs);
    rep.predicted = predict_prefix_small(v);
    return finish_report(std::move(rep), maxN);
}

TridentDecomposition tridents(size_t n) {
    if (n < 1) throw std::invalid_argument("Xi blocks start at n = 1");
    XiInterval xi = xi_interval(n);
    TridentDecomposition out;
    ExpansionWalker w(xi.lo, phi_encode_recursive(xi.lo));
    Int run_start = xi.lo;
    Int run_len = 0;
    DigitWord run_word;
    auto flush = [&out](const Int& start, const Int& len) {
        if (len == 3) {
            out.tridents.push_back({start});
            out.essentials.push_back(start + 1);
        } else if (len == 1) {
            out.singletons.push_back(start);
            out.essentials.push_back(start);
        } else {
            throw std::logic_error("fractional-word run of unexpected length");
        }
    };
    while (w.n() <= xi.hi) {
        const DigitWord& minus = w.value().right;
        if (run_len == 0 || minus != run_word) {
            if (run_len != 0) flush(run_start, run_len);
            run_start = w.n();
            run_word = minus;
            run_len = 1;
        } else {
            ++run_len;
        }
        w.advance();
    }
    flush(run_start, run_len);
    return out;
}

std::vector<Int> pi_essential(size_t n) { return tridents(n).essentials; }

DigitWord gamma_recursive(const Int& N) {
    if (N < 2) throw std::invalid_argument("gamma is defined for N >= 2");
    if (N <= 11) {
        static const char* kBase[] = {"", "", "", "10", "00", "00", "00", "01", "01", "01"};
        DigitWord out;
        append_tail(out, kBase[static_cast<size_t>(N - 2)]);
        return out;
    }
    LucasInterval lam = locate(N);
    size_t m = lam.index;
    bool odd = (m % 2 == 1);
    LucasInterval inner_a = lambda_interval(m - 2);
    LucasInterval inner_b = lambda_interval(m - 3);
    Int shift_a = lucas(m - 1);
    Int shift_bc = lucas(m);
    DigitWord out;
    if (N <= inner_a.hi + shift_a) {
        out = gamma_recursive(Int(N - shift_a));
        append_tail(out, odd ? "10" : "00");
    } else if (N <= inner_b.hi + shift_bc) {
        out = gamma_recursive(Int(N - shift_bc));
        append_tail(out, odd ? "0010" : "01");
    } else {
        out = gamma_recursive(Int(N - shift_bc));
        append_tail(out, odd ? "00" : "01");
    }
    return out;
}

Int code(const Int& N) {
    if (N < 2) throw std::invalid_argument("codes are defined for N >= 2");
    BetaParts parts = beta_parts(N);
    if (!parts.gamma) throw std::logic_error("fractional part does not end in 01");
    return zeck_decode(*parts.gamma);
}

PiPermutation pi_permutation(size_t n) {
    PiPermutation perm;
    perm.n = n;
    for (const Int& N : pi_essential(n)) perm.values.push_back(code(N));
    std::vector<Int> sorted = perm.values;
    std::sort(sorted.begin(), sorted.end());
    Int modulus = fib(2 * n);
    if (Int(static_cast<long long>(sorted.size())) != modulus)
        throw std::logic_error("essential count does not match F_{2n}");
    for (size_t i = 0; i < sorted.size(); ++i)
        if (sorted[i] != Int(static_cast<long long>(i)))
            throw std::logic_error("codes of essentials are not a permutation of 0..F_{2n}-1");
    return perm;
}

bool verify_pi_arithmetic(size_t n) {
    PiPermutation perm = pi_permutation(n);
    Int modulus = fib(2 * n);
    Int step = fib(2 * n - 2);
    if (perm.values.empty() || perm.values.front() != modulus - 1) return false;
    for (size_t i = 0; i + 1 < perm.values.size(); ++i) {
        if (perm.values[i + 1] != (perm.values[i] + step) % modulus) return false;
    }
    return true;
}

std::vector<Int> rotation_orbit_sketch(size_t n) {
    if (n < 1) throw std::invalid_argument("rotation orbits start at n = 1");
    Int modulus = fib(2 * n);
    Int mult = fib(2 * n - 1);
    std::vector<Int> u;
    Int cur = 0;
    for (Int j = 0; j < modulus; ++j) {
        u.push_back(cur);
        cur = (cur + mult) % modulus;
    }
    return u;
}

std::vector<Int> rotation_permutation(size_t n, RotationConvention convention) {
    Int modulus = fib(2 * n);
    std::vector<Int> out;
    if (convention == RotationConvention::ResidueSketch) {
        std::vector<Int> u = rotation_orbit_sketch(n);
        out.push_back(modulus - 1);
        for (size_t j = u.size(); j >= 2; --j) out.push_back(Int(u[j - 1] - 1));
    } else {
        // Sort k = 1..F_{2n} by the circle position of -k*phi, i.e. by
        // descending fractional part of k*phi, and emit k-1.
        std::vector<Int> ks;
        for (Int k = 1; k <= modulus; ++k) ks.push_back(k);
        std::sort(ks.begin(), ks.end(),
                  [](const Int& x, const Int& y) { return frac_phi_compare(x, y) > 0; });
        for (const Int& k : ks) out.push_back(Int(k - 1));
    }
    return out;
}

bool verify_all_gamma(size_t n) {
    if (n < 1) throw std::invalid_argument("Xi blocks start at n = 1");
    XiInterval xi = xi_interval(n);
    std::set<DigitWord> seen;
    ExpansionWalker w(xi.lo, phi_encode_recursive(xi.lo));
    while (w.n() <= xi.hi) {
        const DigitWord& minus = w.value().right;
        if (minus.size() != 2 * n || minus.back() != 1) return false;
        seen.insert(minus);
        w.advance();
    }
    std::set<DigitWord> expected;
    for (const DigitWord& word : admissible_words(2 * n))
        if (word.back() == 1) expected.insert(word);
    return seen == expected;
}

bool is_lucas(const Int& x) {
    if (x < 1) return false;
    Int a = 2, b = 1;  // L_0, L_1
    if (x == a) return true;
    while (b < x) {
        Int c = a + b;
        a = b;
        b = c;
    }
    return b == x;
}

namespace {

ConjectureRow make_conjecture_row(DigitWord v, std::vector<Int> occ, const Int& horizon) {
    ConjectureRow row;
    row.word = std::move(v);
    row.trident_structured = (row.word.front() == 0);
    std::vector<std::vector<Int>> seqs;
    if (!row.trident_structured) {
        seqs.push_back(std::move(occ));
    } else {
        // Matches come in whole tridents (three consecutive N sharing one
        // fractional word), so each maximal run has length divisible by 3
        // unless the horizon cuts the final trident short.
        std::vector<Int> pos[3];
        size_t i = 0;
        while (i < occ.size()) {
            size_t j = i;
            while (j + 1 < occ.size() && occ[j + 1] == occ[j] + 1) ++j;
            size_t len = j - i + 1;
            size_t tail = len % 3;
            if (tail != 0 && !(j + 1 == occ.size() && occ[j] == horizon)) {
                row.note = "run of matches not aligned to tridents";
                return row;
            }
            for (size_t t = i; t + 2 <= j; t += 3)
                for (int k = 0; k < 3; ++k) pos[k].push_back(occ[t + static_cast<size_t>(k)]);
            i = j + 1;
        }
        for (auto& p : pos) seqs.push_back(std::move(p));
    }
    for (auto& s : seqs) {
        if (s.size() < 8) row.undersampled = true;
        row.classes.push_back(classify_difference_word(s));
    }
    bool any = false, all = true;
    for (const auto& c : row.classes) {
        if (c.tag == DiffWordClass::Tag::None) {
            all = false;
            continue;
        }
        any = true;
        if (!is_lucas(c.a) || !is_lucas(c.b)) all = false;
    }
    row.lucas_letters = any && all;
    return row;
}

}  // namespace

std::vector<ConjectureRow> conjecture_scan(size_t max_prefix_len, const Int& horizon,
                                           unsigned jobs) {
    if (max_prefix_len < 1) throw std::invalid_argument("need at least prefix length 1");
    if (horizon < 2) throw std::invalid_argument("horizon must be at least 2");
    std::vector<DigitWord> words;
    for (size_t len = 1; len <= max_prefix_len; ++len)
        for (DigitWord& w : admissible_words(len)) words.push_back(std::move(w));

    auto collect = [&words](const Int& lo, const Int& hi) {
        std::vector<std::vector<Int>> buckets(words.size());
        ExpansionWalker w(lo, phi_encode_recursive(lo));
        while (w.n() <= hi) {
            for (size_t i = 0; i < words.size(); ++i)
                if (matches_prefix(w.value(), words[i])) buckets[i].push_back(w.n());
            w.advance();
        }
        return buckets;
    };

    std::vector<std::vector<Int>> buckets(words.size());
    Int lo = 2;
    Int total = horizon - lo + 1;
    if (jobs <= 1 || total < 512) {
        buckets = collect(lo, horizon);
    } else {
        Int chunk = total / jobs + 1;
        std::vector<std::future<std::vector<std::vector<Int>>>> futures;
        for (unsigned j = 0; j < jobs; ++j) {
            Int a = lo + chunk * j;
            if (a > horizon) break;
            Int b = a + chunk - 1;
            if (b > horizon) b = horizon;
            futures.push_back(std::async(std::launch::async, collect, a, b));
        }
        for (auto& f : futures) {
            auto part = f.get();
            for (size_t i = 0; i < words.size(); ++i)
                buckets[i].insert(buckets[i].end(), part[i].begin(), part[i].end());
        }
    }

    std::vector<ConjectureRow> rows;
    for (size_t i = 0; i < words.size(); ++i)
        rows.push_back(make_conjecture_row(words[i], std::move(buckets[i]), horizon));
    return rows;
}

}  // namespace phinum
