#pragma once

// Deterministic random bipartite instances. The generator is pinned so every
// run (and every reimplementation) produces the same edge list for a given
// (n, target_degree, seed):
//
//   * std::mt19937_64 seeded directly with the seed,
//   * bounded draws by rejection: accept the first raw x >= 2^64 mod k,
//     return x % k,
//   * a partial Fisher-Yates shuffle selecting round(target_degree * n)
//     distinct cells of the n x n grid,
//   * chosen cells sorted ascending, emitted as (cell / n, cell % n).

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

#include "bipartite_graph.hpp"

namespace matchspectrum {

inline std::uint64_t bounded_uniform(std::mt19937_64& rng, std::uint64_t k) {
    // the accepted range has size divisible by k, so x % k is unbiased
    const std::uint64_t reject_below = (0 - k) % k;
    for (;;) {
        std::uint64_t x = rng();
        if (x >= reject_below) return x % k;
    }
}

inline BipartiteGraph gen_random_bipartite(int n, double target_degree,
                                           std::uint64_t seed) {
    if (n < 0) throw std::invalid_argument("gen_random_bipartite: negative size");
    if (target_degree < 0.0 || target_degree > static_cast<double>(n))
        throw std::invalid_argument("gen_random_bipartite: degree must be in [0, n]");
    const std::uint64_t cells = static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n);
    const std::uint64_t want =
        static_cast<std::uint64_t>(std::llround(target_degree * static_cast<double>(n)));
    if (want > cells)
        throw std::invalid_argument("gen_random_bipartite: edge count exceeds n^2");

    std::mt19937_64 rng(seed);
    std::vector<std::uint64_t> ids(cells);
    std::iota(ids.begin(), ids.end(), std::uint64_t{0});
    for (std::uint64_t i = 0; i < want; ++i)
        std::swap(ids[i], ids[i + bounded_uniform(rng, cells - i)]);

    std::vector<std::uint64_t> chosen(ids.begin(), ids.begin() + want);
    std::sort(chosen.begin(), chosen.end());

    BipartiteGraph g(n, n);
    for (std::uint64_t id : chosen)
        g.add_edge(static_cast<int>(id / static_cast<std::uint64_t>(n)),
                   static_cast<int>(id % static_cast<std::uint64_t>(n)));
    return g;
}

}  // namespace matchspectrum
