#pragma once

// Test-only brute-force oracles. None of these share code with the library:
// big integers come from boost::multiprecision rather than GMP, and digit
// work is done by plain repeated division.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <vector>

namespace reference {

using BigInt = boost::multiprecision::cpp_int;

/// C_n = Π_{j=2}^{n} (n+j)/j, computed from scratch.
inline BigInt catalan_by_product(unsigned n) {
    BigInt num = 1;
    BigInt den = 1;
    for (unsigned j = 2; j <= n; ++j) {
        num *= n + j;
        den *= j;
    }
    return num / den;
}

/// C_0 .. C_{count-1} by the convolution C_{m+1} = Σ C_i C_{m-i}.
inline std::vector<BigInt> catalan_by_convolution(unsigned count) {
    std::vector<BigInt> c(count);
    if (count == 0) return c;
    c[0] = 1;
    for (unsigned m = 0; m + 1 < count; ++m) {
        BigInt s = 0;
        for (unsigned i = 0; i <= m; ++i) s += c[i] * c[m - i];
        c[m + 1] = s;
    }
    return c;
}

inline unsigned trial_valuation(BigInt v, unsigned p) {
    unsigned a = 0;
    while (v != 0 && v % p == 0) {
        v /= p;
        ++a;
    }
    return a;
}

inline unsigned trial_valuation(std::uint64_t v, unsigned p) {
    unsigned a = 0;
    while (v != 0 && v % p == 0) {
        v /= p;
        ++a;
    }
    return a;
}

/// Pascal's triangle rows 0..rows-1.
inline std::vector<std::vector<BigInt>> pascal(unsigned rows) {
    std::vector<std::vector<BigInt>> tri(rows);
    for (unsigned r = 0; r < rows; ++r) {
        tri[r].assign(r + 1, 1);
        for (unsigned i = 1; i < r; ++i) tri[r][i] = tri[r - 1][i - 1] + tri[r - 1][i];
    }
    return tri;
}

/// Base-p digits, least significant first, by repeated division.
inline std::vector<unsigned> digits(std::uint64_t n, unsigned p) {
    std::vector<unsigned> out;
    for (; n != 0; n /= p) out.push_back(static_cast<unsigned>(n % p));
    return out;
}

inline bool tstar_member(std::uint64_t n) {
    const auto d = digits(n, 3);
    for (std::size_t i = 1; i < d.size(); ++i)
        if (d[i] == 2) return false;
    return true;
}

}  // namespace reference
