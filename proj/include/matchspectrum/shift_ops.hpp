#pragma once

// The two vector operators the cut-distribution engines are built from.
// sigma_x translates a distribution by x slots (entries pushed past either
// end are dropped, or rejected in checked mode). shift folds
// W <- W + sigma_l(W) over a sequence of per-vertex deltas, doubling total
// mass at every step.
//
// Both are templated on the count type: engines run on BigInt, tests also
// instantiate the identities on plain machine integers.

#include <cstdint>
#include <cstdlib>
#include <vector>

#include "errors.hpp"
#include "weight_distribution.hpp"

namespace matchspectrum {

using ShiftSequence = std::vector<int>;

// Operation tallies exposed by the engines; the benchmark harness consumes
// these so engine orderings are observable independent of machine speed.
struct OpReport {
    std::uint64_t sigma_applications = 0;
    std::uint64_t vector_additions = 0;
    std::uint64_t class_count = 0;  // split engine only
};

template <class Int>
std::vector<Int> sigma_vec(const std::vector<Int>& w, int x, bool checked = false) {
    const int n = static_cast<int>(w.size());
    if (std::abs(x) > n - 1)
        throw std::invalid_argument("sigma: |x| exceeds distribution length");
    std::vector<Int> out(w.size());
    for (int i = 0; i < n; ++i) {
        int j = i - x;
        if (j >= 0 && j < n) out[i] = w[j];
    }
    if (checked) {
        // entries with no image inside [0, m] were dropped
        if (x > 0)
            for (int j = n - x; j < n; ++j)
                if (w[j] != 0) throw IntegrityError("sigma: mass truncated above max weight");
        if (x < 0)
            for (int j = 0; j < -x; ++j)
                if (w[j] != 0) throw IntegrityError("sigma: mass truncated below weight 0");
    }
    return out;
}

template <class Int>
std::vector<Int> shift_vec(std::vector<Int> w, const ShiftSequence& seq,
                           bool checked = false, OpReport* report = nullptr) {
    for (int l : seq) {
        std::vector<Int> moved = sigma_vec(w, l, checked);
        for (size_t i = 0; i < w.size(); ++i) w[i] += moved[i];
        if (report) {
            ++report->sigma_applications;
            ++report->vector_additions;
        }
    }
    return w;
}

inline WeightDistribution sigma(const WeightDistribution& w, int x, bool checked = false) {
    WeightDistribution out;
    out.counts = sigma_vec(w.counts, x, checked);
    return out;
}

inline WeightDistribution shift(const WeightDistribution& w, const ShiftSequence& seq,
                                bool checked = false, OpReport* report = nullptr) {
    WeightDistribution out;
    out.counts = shift_vec(w.counts, seq, checked, report);
    return out;
}

}  // namespace matchspectrum
