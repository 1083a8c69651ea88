#pragma once

// End-to-end perfect-matching counting: odd transformation, cut-weight
// distribution of the transformed graph, correction by the 2^d partition
// multiplicity, MacWilliams transform to the cycle-space distribution, and
// the read-off at weight m - n. The count of perfect matchings of an odd
// graph equals the number of cycle-space elements of weight m - n: the
// complement of such an element drops every degree to d(v) - 1, which is
// even only for a 1-factor complement.
//
// Two independent oracles live here as well: Ryser's inclusion-exclusion
// permanent (Gray-code row sums) and plain backtracking enumeration.

#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bipartite_graph.hpp"
#include "cut_distribution.hpp"
#include "errors.hpp"
#include "gf2.hpp"
#include "macwilliams.hpp"
#include "odd_transform.hpp"
#include "weight_distribution.hpp"

namespace matchspectrum {

enum class CountEngine { Bruteforce, Halfenum, Split, Auto };

inline const char* engine_name(CountEngine e) {
    switch (e) {
        case CountEngine::Bruteforce: return "bruteforce";
        case CountEngine::Halfenum: return "halfenum";
        case CountEngine::Split: return "split";
        case CountEngine::Auto: return "auto";
    }
    return "?";
}

struct CountOptions {
    EngineOptions engine;
    SplitStrategy strategy = SplitStrategy::Formula;
    std::optional<std::vector<int>> explicit_u1;  // overrides the split plan
    int enumeration_cap = 14;                     // backtracking oracle cap
};

struct CountResult {
    BigInt count = 0;
    std::string algorithm;
    OpReport stats;
    bool transformed = false;
    int target_weight = -1;  // m - n of the graph the distribution was computed on
    int split_u1_size = 0;   // split engine only
    int split_h = 0;
};

inline CountResult count_perfect_matchings(const BipartiteGraph& g, CountEngine engine,
                                           const CountOptions& opts = {}) {
    CountResult res;
    res.algorithm = engine_name(engine);
    if (!g.is_balanced()) return res;  // unbalanced sides can never be covered

    OddTransformResult tr = to_odd_graph(g);
    const BipartiteGraph& t = tr.graph;
    res.transformed = !tr.was_already_odd;

    const int m = t.edge_count();
    const int nv = t.vertex_count();

    CountEngine chosen = engine;
    SplitPlan plan;
    bool have_plan = false;
    if (engine == CountEngine::Split) {
        if (opts.explicit_u1)
            plan = plan_split_explicit(t, *opts.explicit_u1);
        else if (t.left_count >= 1)
            plan = plan_split(t, opts.strategy);
        else
            chosen = CountEngine::Halfenum;  // nothing to split
        have_plan = chosen == CountEngine::Split;
    } else if (engine == CountEngine::Auto) {
        // split pays off only when the plan has real structure
        chosen = CountEngine::Halfenum;
        if (t.left_count >= 1) {
            SplitPlan candidate = plan_split(t, opts.strategy);
            if (static_cast<int>(candidate.u1.size()) >= 2 && candidate.h < t.right_count) {
                plan = std::move(candidate);
                chosen = CountEngine::Split;
                have_plan = true;
            }
        }
    }

    WeightDistribution wprime;
    switch (chosen) {
        case CountEngine::Bruteforce:
            wprime = cutdist_bruteforce(t, opts.engine, &res.stats);
            break;
        case CountEngine::Halfenum:
            wprime = cutdist_halfenum(t, opts.engine, &res.stats);
            break;
        case CountEngine::Split:
            wprime = cutdist_split(t, plan, opts.engine, &res.stats);
            break;
        case CountEngine::Auto:
            throw std::logic_error("unresolved auto engine");
    }
    if (have_plan) {
        res.split_u1_size = static_cast<int>(plan.u1.size());
        res.split_h = plan.h;
    }
    if (engine == CountEngine::Auto)
        res.algorithm = std::string("auto:") + engine_name(chosen);
    else
        res.algorithm = engine_name(chosen);

    // 2^d partitions induce each cutset, d the component count; dividing
    // first keeps the two exactness checks independent.
    const int d = connected_components(t);
    WeightDistribution w_cut = exact_div_pow2(wprime, static_cast<unsigned long>(d));
    WeightDistribution w_cyc = macwilliams_dual_distribution(w_cut, m, nv - d);

    res.target_weight = m - nv / 2;
    if (res.target_weight < 0 || res.target_weight > m)
        throw IntegrityError("count_perfect_matchings: read-off weight out of range");
    res.count = w_cyc.counts[res.target_weight];
    return res;
}

// 0/1 biadjacency of a bipartite graph; rows are left vertices.
inline std::vector<std::vector<int>> biadjacency(const BipartiteGraph& g) {
    std::vector<std::vector<int>> a(g.left_count, std::vector<int>(g.right_count, 0));
    for (const auto& [u, v] : g.edges) a[u][v] = 1;
    return a;
}

// Permanent by inclusion-exclusion over column subsets, Gray-coded so each
// step adjusts the row sums by a single column.
inline BigInt ryser_permanent(const std::vector<std::vector<int>>& a) {
    const int n = static_cast<int>(a.size());
    for (const auto& row : a)
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("ryser_permanent: matrix must be square");
    if (n == 0) return 1;
    detail::require_enumerable(n, "ryser_permanent");

    std::vector<long> rowsum(n, 0);
    std::vector<char> in_cols(n, 0);
    int cols_in = 0;
    BigInt total = 0;
    BigInt prod;
    const std::uint64_t subsets = std::uint64_t{1} << n;
    for (std::uint64_t k = 1; k < subsets; ++k) {
        int j = std::countr_zero(k);
        in_cols[j] ^= 1;
        int dir = in_cols[j] ? 1 : -1;
        cols_in += dir;
        for (int i = 0; i < n; ++i) rowsum[i] += dir * a[i][j];

        prod = 1;
        for (int i = 0; i < n; ++i) {
            if (rowsum[i] == 0) {
                prod = 0;
                break;
            }
            prod *= rowsum[i];
        }
        if ((n - cols_in) & 1)
            total -= prod;
        else
            total += prod;
    }
    return total;
}

namespace detail {

inline void count_matchings_rec(const BipartiteGraph& g, int u, std::uint64_t& used,
                                unsigned long long& count) {
    if (u == g.left_count) {
        ++count;
        return;
    }
    for (int e : g.left_edges[u]) {
        std::uint64_t bit = std::uint64_t{1} << g.edges[e].second;
        if (used & bit) continue;
        used |= bit;
        count_matchings_rec(g, u + 1, used, count);
        used &= ~bit;
    }
}

}  // namespace detail

// Backtracking count over left vertices in index order.
inline BigInt enumerate_perfect_matchings(const BipartiteGraph& g, int cap = 14) {
    if (g.left_count != g.right_count) return 0;
    if (g.left_count > cap)
        throw CapExceededError("enumerate_perfect_matchings: " +
                               std::to_string(g.left_count) + " exceeds cap " +
                               std::to_string(cap));
    std::uint64_t used = 0;
    unsigned long long count = 0;
    detail::count_matchings_rec(g, 0, used, count);
    return BigInt(static_cast<unsigned long>(count));
}

// Checks the matching/cycle-space bijection on an odd graph: every
// cycle-space element of weight m - n must have a perfect-matching
// complement, and there must be exactly as many as backtracking finds.
inline bool verify_matching_bijection(const BipartiteGraph& g, int span_cap = 24, int enum_cap = 14) {
    if (!g.is_odd()) throw std::invalid_argument("verify_matching_bijection: graph must be odd");
    const int nv = g.vertex_count();  // odd degrees force an even vertex count
    const int m = g.edge_count();
    const int target = m - nv / 2;

    Gf2Matrix basis = cycle_space_basis(g);
    if (basis.row_count() > span_cap)
        throw CapExceededError("verify_matching_bijection: cycle rank " +
                               std::to_string(basis.row_count()) + " exceeds cap " +
                               std::to_string(span_cap));

    const BigInt expected = enumerate_perfect_matchings(g, enum_cap);

    auto complement_is_matching = [&](const Gf2Vector& w) {
        std::vector<int> deg(nv, 0);
        for (int e = 0; e < m; ++e) {
            if (w.get(e)) continue;
            ++deg[g.global_left(g.edges[e].first)];
            ++deg[g.global_right(g.edges[e].second)];
        }
        for (int v = 0; v < nv; ++v)
            if (deg[v] != 1) return false;
        return true;
    };

    unsigned long long hits = 0;
    Gf2Vector cur(m);
    if (target >= 0 && cur.weight() == target) {
        if (!complement_is_matching(cur)) return false;
        ++hits;
    }
    const std::uint64_t total = std::uint64_t{1} << basis.row_count();
    for (std::uint64_t k = 1; k < total; ++k) {
        cur ^= basis.rows[std::countr_zero(k)];
        if (target >= 0 && cur.weight() == target) {
            if (!complement_is_matching(cur)) return false;
            ++hits;
        }
    }
    return BigInt(static_cast<unsigned long>(hits)) == expected;
}

}  // namespace matchspectrum
