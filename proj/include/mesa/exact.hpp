#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace mesa {

// Exact, unbounded integer used for every count the library reports.
using Count = boost::multiprecision::cpp_int;

inline std::string to_string(const Count& c) { return c.str(); }

inline Count pow2(unsigned exponent) {
    Count r = 1;
    r <<= exponent;
    return r;
}

// Multiplicative binomial; each partial product r * (n-k+i) / i is itself a
// binomial coefficient, so every division is exact.
inline Count binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    Count r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

// (2n-1)!! = |Q_n|.
inline Count double_factorial_odd(unsigned n) {
    Count r = 1;
    for (unsigned j = 3; j + 1 <= 2 * n; j += 2) r *= j;
    return r;
}

} // namespace mesa
