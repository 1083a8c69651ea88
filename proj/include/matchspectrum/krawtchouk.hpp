#pragma once

// Exact Krawtchouk coefficient table. entries[i][j] is the coefficient of
// x^i in (1-x)^j (1+x)^(m-j), i.e. sum_k (-1)^k C(j,k) C(m-j, i-k).
// Row 0 is all ones, column 0 is C(m, i), column sums vanish for j >= 1.
// Entries reach ~2^(2m), so everything is exact big-integer arithmetic.

#include <stdexcept>
#include <vector>

#include "weight_distribution.hpp"

namespace matchspectrum {

// Pascal triangle up to row n: table[a][b] = C(a, b).
inline std::vector<std::vector<BigInt>> binomial_table(int n) {
    std::vector<std::vector<BigInt>> c(n + 1);
    for (int a = 0; a <= n; ++a) {
        c[a].assign(a + 1, BigInt(0));
        c[a][0] = 1;
        for (int b = 1; b <= a; ++b)
            c[a][b] = c[a - 1][b - 1] + (b <= a - 1 ? c[a - 1][b] : BigInt(0));
    }
    return c;
}

struct KrawtchoukTable {
    int m = 0;
    std::vector<std::vector<BigInt>> entries;  // (m+1) x (m+1)

    const BigInt& at(int i, int j) const { return entries[i][j]; }
};

inline KrawtchoukTable krawtchouk_table(int m) {
    if (m < 0) throw std::invalid_argument("krawtchouk_table: negative length");
    auto binom = binomial_table(m);
    auto choose = [&](int a, int b) -> BigInt {
        if (b < 0 || b > a) return BigInt(0);
        return binom[a][b];
    };

    KrawtchoukTable t;
    t.m = m;
    t.entries.assign(m + 1, std::vector<BigInt>(m + 1, BigInt(0)));
    for (int j = 0; j <= m; ++j) {
        for (int i = 0; i <= m; ++i) {
            BigInt acc = 0;
            for (int k = 0; k <= j && k <= i; ++k) {
                BigInt term = choose(j, k) * choose(m - j, i - k);
                if (k & 1)
                    acc -= term;
                else
                    acc += term;
            }
            t.entries[i][j] = acc;
        }
    }
    return t;
}

}  // namespace matchspectrum
