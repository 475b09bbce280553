#include "phinum/numeration.hpp"

#include <stdexcept>

namespace phinum {

DigitWord zeck_encode(const Int& N) {
    if (N < 0) throw std::invalid_argument("zeck_encode: negative input");
    if (N == 0) return {};
    size_t top = 0;
    while (fib_shifted(top + 1) <= N) ++top;
    DigitWord w(top + 1, 0);
    Int rest = N;
    for (size_t i = top + 1; i-- > 0;) {
        if (fib_shifted(i) <= rest) {
            w[top - i] = 1;
            rest -= fib_shifted(i);
        }
    }
    if (rest != 0) throw std::logic_error("zeck_encode: nonzero residue after greedy descent");
    return w;
}

Int zeck_decode(const DigitWord& w) {
    if (!admissible(w)) throw std::invalid_argument("zeck_decode: inadmissible word");
    Int n = 0;
    const size_t m = w.size();
    for (size_t idx = 0; idx < m; ++idx)
        if (w[idx]) n += fib_shifted(m - 1 - idx);
    return n;
}

PhiValue phi_value(const PhiExpansion& e) {
    PhiValue v{0, 0};
    const long long n = static_cast<long long>(e.left.size());
    for (long long idx = 0; idx < n; ++idx) {
        const int d = e.left[static_cast<size_t>(idx)];
        if (!d) continue;
        const long long i = n - 1 - idx;
        v.a += d * fib_signed(i);
        v.b += d * fib_signed(i - 1);
    }
    for (size_t idx = 0; idx < e.right.size(); ++idx) {
        const int d = e.right[idx];
        if (!d) continue;
        const long long i = -1 - static_cast<long long>(idx);
        v.a += d * fib_signed(i);
        v.b += d * fib_signed(i - 1);
    }
    return v;
}

PhiExpansion normalize(PhiExpansion raw) {
    // Digit buffer in most-significant-first order; digits[k] is the digit at
    // exponent top - k. The buffer always covers a contiguous exponent range
    // and, once it reaches exponent 0, keeps covering it.
    std::vector<int> digits;
    digits.reserve(raw.left.size() + raw.right.size() + 4);
    for (auto d : raw.left) digits.push_back(d);
    for (auto d : raw.right) digits.push_back(d);
    if (digits.empty()) return {};
    long long top = raw.left.empty() ? -1 : static_cast<long long>(raw.left.size()) - 1;

    // Each rewrite strictly decreases the potential sum of d_i * 1.2^i
    // (1.2^2 < 1.2 + 1 and 1.2^3 + 1 < 2 * 1.2^2), so a fixpoint is reached;
    // the cap only guards against implementation bugs.
    constexpr int kMaxSweeps = 100000;
    bool changed = true;
    int sweeps = 0;
    while (changed) {
        if (++sweeps > kMaxSweeps) throw std::logic_error("normalize: no fixpoint within sweep cap");
        changed = false;
        if (digits.front() != 0) {  // headroom so every run of ones has a zero above it
            digits.insert(digits.begin(), 0);
            ++top;
        }
        for (size_t k = 0; k < digits.size(); ++k) {
            while (digits[k] >= 2) {  // 2*phi^n = phi^{n+1} + phi^{n-2}
                if (k == 0) {
                    digits.insert(digits.begin(), 0);
                    ++top;
                    ++k;
                }
                if (digits.size() <= k + 2) digits.resize(k + 3, 0);
                digits[k] -= 2;
                digits[k - 1] += 1;
                digits[k + 2] += 1;
                changed = true;
            }
            if (k + 2 < digits.size() && digits[k] == 0 && digits[k + 1] == 1 && digits[k + 2] == 1) {
                digits[k] = 1;  // phi^{n+1} + phi^n = phi^{n+2}
                digits[k + 1] = 0;
                digits[k + 2] = 0;
                changed = true;
            }
        }
    }
    for (size_t k = 0; k < digits.size(); ++k) {
        if (digits[k] > 1 || (k + 1 < digits.size() && digits[k] == 1 && digits[k + 1] == 1))
            throw std::logic_error("normalize: fixpoint is not admissible");
    }

    PhiExpansion out;
    for (size_t k = 0; k < digits.size(); ++k) {
        const long long e = top - static_cast<long long>(k);
        auto& side = (e >= 0) ? out.left : out.right;
        side.push_back(static_cast<std::uint8_t>(digits[k]));
    }
    size_t lead = 0;
    while (lead < out.left.size() && out.left[lead] == 0) ++lead;
    out.left.erase(out.left.begin(), out.left.begin() + static_cast<long long>(lead));
    while (!out.right.empty() && out.right.back() == 0) out.right.pop_back();
    return out;
}

PhiExpansion phi_add_one(const PhiExpansion& e) {
    PhiExpansion raw = e;
    if (raw.left.empty())
        raw.left.push_back(1);
    else
        raw.left.back() += 1;
    return normalize(std::move(raw));
}

PhiExpansion phi_encode(const Int& N) {
    if (N < 0) throw std::invalid_argument("phi_encode: negative input");
    ExpansionWalker w;
    while (w.n() < N) w.advance();
    return w.value();
}

Int phi_decode_value(const PhiExpansion& e) {
    const PhiValue v = phi_value(e);
    if (v.a != 0) throw std::invalid_argument("phi_decode: expansion value is not an integer");
    return v.b;
}

Int phi_decode_ceiling(const PhiExpansion& e) {
    Int a = 0, b = 0;
    const long long n = static_cast<long long>(e.left.size());
    for (long long idx = 0; idx < n; ++idx) {
        if (!e.left[static_cast<size_t>(idx)]) continue;
        const long long i = n - 1 - idx;
        a += fib_signed(i);
        b += fib_signed(i - 1);
    }
    if (a == 0) return b;  // ceil(a*phi + b) with a >= 0 and a*phi irrational otherwise
    return b + floor_phi(a) + 1;
}

Int phi_decode(const PhiExpansion& e) {
    if (!admissible(e)) throw std::invalid_argument("phi_decode: inadmissible expansion");
    const Int by_value = phi_decode_value(e);
    const Int by_ceiling = phi_decode_ceiling(e);
    if (by_value != by_ceiling) throw std::logic_error("phi_decode: value and ceiling paths disagree");
    return by_value;
}

BetaParts beta_parts(const PhiExpansion& e) {
    BetaParts parts;
    parts.plus = e.left;
    size_t lead = 0;
    while (lead < parts.plus.size() && parts.plus[lead] == 0) ++lead;
    parts.plus.erase(parts.plus.begin(), parts.plus.begin() + static_cast<long long>(lead));
    parts.minus = e.right;
    while (!parts.minus.empty() && parts.minus.back() == 0) parts.minus.pop_back();
    const size_t m = parts.minus.size();
    if (m >= 2 && parts.minus[m - 2] == 0 && parts.minus[m - 1] == 1)
        parts.gamma = DigitWord(parts.minus.begin(), parts.minus.end() - 2);
    return parts;
}

namespace {

// V(k) = 3*floor(k*phi) + k + 1, the values N whose expansion has d_{-1} = 1.
Int dnum(const Int& k) { return 3 * floor_phi(k) + k + 1; }

}  // namespace

Int skip_count(const Int& N) {
    if (N <= 5) return 0;        // V(1) = 5 is the least value with k >= 1
    Int lo = 1, hi = N / 4 + 2;  // V(k) >= 4k + 1, so V(hi) >= N
    while (hi - lo > 1) {        // invariant: V(lo) < N <= V(hi)
        const Int mid = (lo + hi) / 2;
        if (dnum(mid) < N)
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

ZeckPhiReport verify_zeckphi(const Int& maxN) {
    ZeckPhiReport rep;
    ExpansionWalker w;
    constexpr size_t kMaxExamples = 8;
    Int s = 0;  // #{k >= 1 : V(k) < N}
    Int next_strict = dnum(1);
    Int cnt_le = 0;  // #{k >= 1 : V(k) <= N}
    Int next_le = dnum(1);
    Int cnt_le1 = 0;  // #{k >= 1 : V(k) <= N + 1}
    Int next_le1 = dnum(1);
    for (Int N = 0; N <= maxN; ++N) {
        while (next_strict < N) {
            ++s;
            next_strict = dnum(s + 1);
        }
        while (next_le <= N) {
            ++cnt_le;
            next_le = dnum(cnt_le + 1);
        }
        while (next_le1 <= N + 1) {
            ++cnt_le1;
            next_le1 = dnum(cnt_le1 + 1);
        }
        if (w.value().left != zeck_encode(N + s)) {
            rep.ok = false;
            rep.first_fail = N;
            return rep;
        }
        const Int alt_a = cnt_le > 0 ? Int(cnt_le - 1) : Int(0);
        if (alt_a != s) {
            ++rep.alt_a_mismatches;
            if (rep.alt_a_examples.size() < kMaxExamples) rep.alt_a_examples.push_back(N);
        }
        if (cnt_le1 != s) {
            ++rep.alt_b_mismatches;
            if (rep.alt_b_examples.size() < kMaxExamples) rep.alt_b_examples.push_back(N);
        }
        ++rep.checked;
        w.advance();
    }
    return rep;
}

}  // namespace phinum
