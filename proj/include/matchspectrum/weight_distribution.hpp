#pragma once

// Weight distributions: length-(m+1) vectors of exact non-negative counts
// indexed by Hamming/cut weight. Counts routinely exceed 64 bits, so entries
// are GMP integers. Serialized form is an array of decimal strings.

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

#include "errors.hpp"

namespace matchspectrum {

using BigInt = mpz_class;

inline BigInt pow2(unsigned long k) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, k);
    return r;
}

struct WeightDistribution {
    std::vector<BigInt> counts;

    WeightDistribution() = default;

    static WeightDistribution zeros(int m) {
        WeightDistribution w;
        w.counts.assign(static_cast<size_t>(m) + 1, BigInt(0));
        return w;
    }

    static WeightDistribution unit(int m, int weight) {
        WeightDistribution w = zeros(m);
        w.counts.at(weight) = 1;
        return w;
    }

    int max_weight() const { return static_cast<int>(counts.size()) - 1; }

    BigInt mass() const {
        BigInt s = 0;
        for (const BigInt& c : counts) s += c;
        return s;
    }

    WeightDistribution& operator+=(const WeightDistribution& o) {
        if (counts.size() != o.counts.size())
            throw std::invalid_argument("WeightDistribution: size mismatch");
        for (size_t i = 0; i < counts.size(); ++i) counts[i] += o.counts[i];
        return *this;
    }

    friend WeightDistribution operator+(WeightDistribution a, const WeightDistribution& b) {
        a += b;
        return a;
    }

    bool operator==(const WeightDistribution& o) const { return counts == o.counts; }
};

inline std::vector<std::string> decimal_strings(const WeightDistribution& w) {
    std::vector<std::string> out;
    out.reserve(w.counts.size());
    for (const BigInt& c : w.counts) out.push_back(c.get_str());
    return out;
}

// Entrywise division by 2^k; inexact entries are a pipeline bug.
inline WeightDistribution exact_div_pow2(const WeightDistribution& w, unsigned long k) {
    WeightDistribution out = WeightDistribution::zeros(w.max_weight());
    for (size_t i = 0; i < w.counts.size(); ++i) {
        if (mpz_divisible_2exp_p(w.counts[i].get_mpz_t(), k) == 0)
            throw IntegrityError("exact_div_pow2: entry " + std::to_string(i) +
                                 " not divisible by 2^" + std::to_string(k));
        mpz_fdiv_q_2exp(out.counts[i].get_mpz_t(), w.counts[i].get_mpz_t(), k);
    }
    return out;
}

}  // namespace matchspectrum
