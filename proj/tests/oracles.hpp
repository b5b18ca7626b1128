#pragma once

// Brute-force references that share no code with the library's formulas.

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace oracle {

inline int popcount(uint64_t v) { return __builtin_popcountll(v); }

// Pascal row by repeated addition.
inline std::vector<mpz_class> pascal_row(int n) {
    std::vector<mpz_class> row{1};
    for (int i = 0; i < n; ++i) {
        std::vector<mpz_class> next(row.size() + 1, 0);
        for (std::size_t k = 0; k < row.size(); ++k) {
            next[k] += row[k];
            next[k + 1] += row[k];
        }
        row = std::move(next);
    }
    return row;
}

inline mpz_class choose(int n, int k) {
    if (n < 0 || k < 0 || k > n) return 0;
    return pascal_row(n)[k];
}

// sum over x with |x| = a of (-1)^{<x,z>}, z the first m coordinates; enumerates
// all 2^n strings, so keep n small.
inline mpz_class krawtchouk_enum(int a, int n, int m) {
    const uint64_t z = (uint64_t{1} << m) - 1;
    mpz_class s = 0;
    for (uint64_t x = 0; x < (uint64_t{1} << n); ++x)
        if (popcount(x) == a) s += (popcount(x & z) & 1) ? -1 : 1;
    return s;
}

// Product of (1 + t) and (1 - t) factors, coefficient of t^a.
inline mpz_class krawtchouk_poly(int a, int n, int m) {
    std::vector<mpz_class> p{1};
    for (int i = 0; i < n; ++i) {
        const int sign = i < m ? -1 : 1;
        std::vector<mpz_class> q(p.size() + 1, 0);
        for (std::size_t k = 0; k < p.size(); ++k) {
            q[k] += p[k];
            q[k + 1] += sign * p[k];
        }
        p = std::move(q);
    }
    return a < static_cast<int>(p.size()) ? p[a] : mpz_class(0);
}

// Rational rank by plain Gaussian elimination over Q.
inline int64_t rank_rational(std::vector<std::vector<mpq_class>> m) {
    const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (m[i][c] == 0) continue;
            const mpq_class f = m[i][c] / m[r][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return static_cast<int64_t>(r);
}

}  // namespace oracle
