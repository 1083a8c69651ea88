#pragma once

// MacWilliams transform between the weight distributions of a GF(2) linear
// code and its dual. Given the distribution W of a code D with rank r and
// length m, the dual distribution is
//
//     W_dual[i] = ( sum_j entries[i][j] * W[j] ) / 2^r
//
// with entries[i][j] the coefficient of x^i in (1-x)^j (1+x)^(m-j). Every
// division must be exact and every entry non-negative; anything else means
// the input rank or distribution was wrong, and we fail loudly instead of
// rounding.

#include <stdexcept>
#include <string>

#include "errors.hpp"
#include "krawtchouk.hpp"
#include "weight_distribution.hpp"

namespace matchspectrum {

inline WeightDistribution macwilliams_dual_distribution(const WeightDistribution& w, int m,
                                                        int input_rank,
                                                        const KrawtchoukTable* table = nullptr) {
    if (w.max_weight() != m)
        throw std::invalid_argument("macwilliams: distribution length must be m+1");
    if (input_rank < 0 || input_rank > m)
        throw std::invalid_argument("macwilliams: rank out of range");
    if (w.mass() != pow2(input_rank))
        throw IntegrityError("macwilliams: input mass is not 2^rank");

    KrawtchoukTable local;
    if (!table) {
        local = krawtchouk_table(m);
        table = &local;
    }

    WeightDistribution out = WeightDistribution::zeros(m);
    for (int i = 0; i <= m; ++i) {
        BigInt acc = 0;
        for (int j = 0; j <= m; ++j) acc += table->at(i, j) * w.counts[j];
        if (acc < 0)
            throw IntegrityError("macwilliams: negative coefficient sum at weight " +
                                 std::to_string(i));
        if (mpz_divisible_2exp_p(acc.get_mpz_t(), input_rank) == 0)
            throw IntegrityError("macwilliams: inexact division at weight " +
                                 std::to_string(i));
        mpz_fdiv_q_2exp(out.counts[i].get_mpz_t(), acc.get_mpz_t(), input_rank);
    }

    if (out.counts[0] != 1)
        throw IntegrityError("macwilliams: dual distribution lost the zero word");
    if (out.mass() != pow2(m - input_rank))
        throw IntegrityError("macwilliams: dual mass is not 2^(m-rank)");
    return out;
}

}  // namespace matchspectrum
