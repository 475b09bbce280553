#include "phinum/arith.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace phinum {

Int isqrt(const Int& n) {
    if (n < 0) throw std::domain_error("isqrt: negative argument");
    if (n < 2) return n;
    // Newton iteration x <- (x + n/x) / 2 from an overestimate; monotone
    // decreasing once above the root, so stop at the first non-decrease.
    Int x = Int(1) << (unsigned)((msb(n) / 2) + 1);
    while (true) {
        Int y = (x + n / x) >> 1;
        if (y >= x) break;
        x = y;
    }
    return x;
}

Int floor_phi(const Int& n) {
    if (n < 0) throw std::domain_error("floor_phi: negative argument");
    return (n + isqrt(5 * n * n)) / 2;
}

int QuadInt::sign() const {
    int sa = a.sign();
    int sb = b.sign();
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // Signs differ: |a| vs |b|*sqrt(5) decides.
    Int a2 = a * a;
    Int b25 = 5 * b * b;
    if (a2 == b25) return 0;  // impossible for nonzero b (5 not a square), kept for totality
    return (a2 > b25) ? sa : sb;
}

int frac_phi_compare(const Int& i, const Int& j) {
    if (i < 1 || j < 1) throw std::domain_error("frac_phi_compare: arguments must be >= 1");
    if (i == j) throw std::invalid_argument("frac_phi_compare: equal arguments");
    // {i phi} - {j phi} = (i-j)phi - (floor_phi(i) - floor_phi(j))
    //                   = ((i-j) - 2d + (i-j) sqrt(5)) / 2,  d = fi - fj.
    Int d = floor_phi(i) - floor_phi(j);
    QuadInt twice{(i - j) - 2 * d, i - j};
    int s = twice.sign();
    if (s == 0) throw std::logic_error("frac_phi_compare: impossible tie");
    return s;
}

namespace {

std::mutex cache_mutex;
std::vector<Int> fib_cache = {0, 1};
std::vector<Int> lucas_cache = {2, 1};

Int cached(std::vector<Int>& c, std::size_t n) {
    std::lock_guard<std::mutex> lock(cache_mutex);
    while (c.size() <= n) c.push_back(c[c.size() - 1] + c[c.size() - 2]);
    return c[n];
}

}  // namespace

Int fib(std::size_t n) { return cached(fib_cache, n); }
Int lucas(std::size_t n) { return cached(lucas_cache, n); }
Int fib_shifted(std::size_t i) { return fib(i + 2); }

Int fib_signed(long long n) {
    if (n >= 0) return fib((std::size_t)n);
    Int f = fib((std::size_t)(-n));
    return ((-n) % 2 == 0) ? -f : f;
}

}  // namespace phinum
