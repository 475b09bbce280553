#pragma once

// Exact integer and Z[sqrt(5)] arithmetic. Everything downstream (digit
// expansions, Beatty sequences, interval recursions) reduces to integer
// comparisons here; there is no floating point in the library.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <cstdint>

namespace phinum {

using Int = boost::multiprecision::cpp_int;

// floor(sqrt(n)) for n >= 0, by Newton iteration. Throws std::domain_error
// on negative input.
Int isqrt(const Int& n);

// floor(n * phi) with phi = (1+sqrt(5))/2, computed exactly as
// floor((n + isqrt(5 n^2)) / 2). Defined for all n >= 0; throws
// std::domain_error on negative input (no caller needs it).
Int floor_phi(const Int& n);

// Exact element a + b*sqrt(5). Closed under + - *; ordering decided by
// integer sign tests (compare a^2 against 5 b^2 when signs of a, b differ).
struct QuadInt {
    Int a;
    Int b;

    QuadInt() = default;
    QuadInt(Int a_, Int b_) : a(std::move(a_)), b(std::move(b_)) {}

    QuadInt operator+(const QuadInt& o) const { return {a + o.a, b + o.b}; }
    QuadInt operator-(const QuadInt& o) const { return {a - o.a, b - o.b}; }
    QuadInt operator-() const { return {-a, -b}; }
    QuadInt operator*(const QuadInt& o) const {
        return {a * o.a + 5 * b * o.b, a * o.b + b * o.a};
    }

    // -1, 0, +1 for the sign of the real number a + b*sqrt(5).
    int sign() const;

    bool operator==(const QuadInt& o) const { return a == o.a && b == o.b; }
    bool operator<(const QuadInt& o) const { return (*this - o).sign() < 0; }
    bool operator>(const QuadInt& o) const { return (*this - o).sign() > 0; }
};

// Compares the fractional parts {i*phi} and {j*phi} exactly: returns -1 if
// {i phi} < {j phi}, +1 if greater. i == j is rejected (equality cannot
// happen for i != j since phi is irrational). Requires i, j >= 1.
int frac_phi_compare(const Int& i, const Int& j);

// Fibonacci F_0=0, F_1=1 and Lucas L_0=2, L_1=1 numbers, cached, exact at
// any index. fib_shifted(i) = F_{i+2} is the Zeckendorf basis 1,2,3,5,8,...
Int fib(std::size_t n);
Int lucas(std::size_t n);
Int fib_shifted(std::size_t i);

// F_n extended to negative indices by F_{-n} = (-1)^{n+1} F_n.
Int fib_signed(long long n);

}  // namespace phinum
