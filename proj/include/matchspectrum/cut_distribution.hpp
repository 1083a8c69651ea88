#pragma once

// Engines for the partition cut-weight distribution W' of a bipartite graph:
// W'[k] counts the subsets S of V whose cut c(S, V\S) has exactly k edges,
// so the total mass is 2^|V|.
//
//   cutdist_bruteforce  walks all 2^|V| subsets (oracle, capped)
//   cutdist_halfenum    walks the 2^|V1| left subsets, finishing each with a
//                       shift fold over the right side
//   cutdist_split       partitions V1 into (T1, U1), groups the T1 subsets
//                       into classes with equal tail signature, and
//                       recombines each class with all U1 subsets
//
// All three agree entrywise on every input; the brute-force engine is the
// reference the others are tested against.

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "bipartite_graph.hpp"
#include "errors.hpp"
#include "shift_ops.hpp"
#include "weight_distribution.hpp"

namespace matchspectrum {

struct EngineOptions {
    bool checked = false;      // assert that no shift ever truncates mass
    int bruteforce_cap = 24;   // max |V| for the brute-force engine
};

// Per-right-vertex shift deltas for a left subset S: the entry for v is
// c(v, V1 \ S) - c(v, S) = deg(v) - 2 * |edges from v into S|.
inline ShiftSequence l_vector(const BipartiteGraph& g, const std::vector<int>& s_left,
                              const std::vector<int>& right_order = {}) {
    std::vector<char> in_s(g.left_count, 0);
    for (int u : s_left) {
        if (u < 0 || u >= g.left_count)
            throw std::invalid_argument("l_vector: left vertex out of range");
        in_s[u] = 1;
    }
    auto entry = [&](int v) {
        int to_s = 0;
        for (int e : g.right_edges[v])
            if (in_s[g.edges[e].first]) ++to_s;
        return g.right_degree(v) - 2 * to_s;
    };
    ShiftSequence out;
    out.reserve(g.right_count);
    if (right_order.empty()) {
        for (int v = 0; v < g.right_count; ++v) out.push_back(entry(v));
    } else {
        for (int v : right_order) out.push_back(entry(v));
    }
    return out;
}

namespace detail {

// Reusable in-place shift fold. Tracks the window that can hold nonzero
// entries so early fold steps touch only a few cells; op counts are kept by
// the caller, one sigma + one addition per apply().
class ShiftFolder {
public:
    explicit ShiftFolder(int m) : w_(static_cast<size_t>(m) + 1) {}

    int max_weight() const { return static_cast<int>(w_.size()) - 1; }

    void reset_unit(int weight) {
        clear();
        w_[weight] = 1;
        lo_ = hi_ = weight;
    }

    // Load src translated by offset: one sigma application.
    void reset_shifted(const std::vector<BigInt>& src, int src_lo, int src_hi, int offset,
                       bool checked) {
        clear();
        if (src_hi < src_lo) return;
        const int mx = max_weight();
        if (checked && (src_lo + offset < 0 || src_hi + offset > mx)) {
            for (int j = src_lo; j <= src_hi; ++j) {
                int i = j + offset;
                if ((i < 0 || i > mx) && src[j] != 0)
                    throw IntegrityError("sigma: mass truncated");
            }
        }
        int lo = std::max(src_lo + offset, 0);
        int hi = std::min(src_hi + offset, mx);
        for (int i = lo; i <= hi; ++i) w_[i] = src[i - offset];
        if (lo <= hi) {
            lo_ = lo;
            hi_ = hi;
        }
    }

    // W += sigma_l(W) over the window.
    void apply(int l, bool checked) {
        if (hi_ < lo_) return;
        const int mx = max_weight();
        if (l == 0) {
            for (int i = lo_; i <= hi_; ++i) w_[i] *= 2;
            return;
        }
        if (l > 0) {
            if (checked && hi_ + l > mx)
                for (int j = std::max(lo_, mx - l + 1); j <= hi_; ++j)
                    if (w_[j] != 0)
                        throw IntegrityError("sigma: mass truncated above max weight");
            int nhi = std::min(hi_ + l, mx);
            // descending so each source cell is read before it is written
            for (int i = nhi; i >= lo_ + l; --i) w_[i] += w_[i - l];
            hi_ = nhi;
        } else {
            if (checked && lo_ + l < 0)
                for (int j = lo_; j <= std::min(hi_, -l - 1); ++j)
                    if (w_[j] != 0)
                        throw IntegrityError("sigma: mass truncated below weight 0");
            int nlo = std::max(lo_ + l, 0);
            for (int i = nlo; i <= hi_ + l; ++i) w_[i] += w_[i - l];
            lo_ = nlo;
        }
    }

    void accumulate_into(std::vector<BigInt>& total) const {
        for (int i = lo_; i <= hi_; ++i) total[i] += w_[i];
    }

private:
    void clear() {
        for (int i = lo_; i <= hi_; ++i) w_[i] = 0;
        lo_ = 0;
        hi_ = -1;
    }

    std::vector<BigInt> w_;
    int lo_ = 0;
    int hi_ = -1;
};

inline void require_enumerable(int count, const char* what) {
    if (count > 62)
        throw std::invalid_argument(std::string(what) + ": side too large to enumerate");
}

}  // namespace detail

inline WeightDistribution cutdist_bruteforce(const BipartiteGraph& g,
                                             const EngineOptions& opts = {},
                                             OpReport* report = nullptr) {
    (void)report;  // the brute-force engine performs no sigma/add operations
    const int nv = g.vertex_count();
    if (nv > opts.bruteforce_cap)
        throw CapExceededError("cutdist_bruteforce: " + std::to_string(nv) +
                               " vertices exceeds cap " +
                               std::to_string(opts.bruteforce_cap));
    detail::require_enumerable(nv, "cutdist_bruteforce");

    WeightDistribution w = WeightDistribution::zeros(g.edge_count());
    std::vector<char> in_s(nv, 0);
    int weight = 0;
    w.counts[0] += 1;  // S = empty
    const std::uint64_t subsets = std::uint64_t{1} << nv;
    for (std::uint64_t k = 1; k < subsets; ++k) {
        // Gray-code walk: toggling one vertex flips the crossing status of
        // exactly its incident edges.
        int t = std::countr_zero(k);
        in_s[t] ^= 1;
        for (int e : g.incident(t)) {
            int o = g.other_endpoint(e, t);
            weight += (in_s[t] != in_s[o]) ? 1 : -1;
        }
        w.counts[weight] += 1;
    }
    return w;
}

inline WeightDistribution cutdist_halfenum(const BipartiteGraph& g,
                                           const EngineOptions& opts = {},
                                           OpReport* report = nullptr) {
    const int nl = g.left_count, nr = g.right_count, m = g.edge_count();
    detail::require_enumerable(nl, "cutdist_halfenum");

    WeightDistribution total = WeightDistribution::zeros(m);
    OpReport scratch;
    OpReport& rep = report ? *report : scratch;

    std::vector<int> l(nr);
    for (int v = 0; v < nr; ++v) l[v] = g.right_degree(v);  // S = empty
    long long degsum = 0;
    std::vector<char> in_s(nl, 0);
    detail::ShiftFolder folder(m);

    auto flush = [&]() {
        folder.reset_unit(static_cast<int>(degsum));
        for (int v = 0; v < nr; ++v) {
            folder.apply(l[v], opts.checked);
            ++rep.sigma_applications;
            ++rep.vector_additions;
        }
        folder.accumulate_into(total.counts);
        ++rep.vector_additions;
    };

    flush();
    const std::uint64_t subsets = std::uint64_t{1} << nl;
    for (std::uint64_t k = 1; k < subsets; ++k) {
        int u = std::countr_zero(k);
        in_s[u] ^= 1;
        int dir = in_s[u] ? 1 : -1;
        degsum += dir * g.left_degree(u);
        for (int e : g.left_edges[u]) l[g.edges[e].second] -= 2 * dir;
        flush();
    }

    if (opts.checked && total.mass() != pow2(static_cast<unsigned long>(nl + nr)))
        throw IntegrityError("cutdist_halfenum: total mass is not 2^|V|");
    return total;
}

enum class SplitStrategy { Formula, Greedy };

struct SplitPlan {
    std::vector<int> u1;           // ascending left indices
    std::vector<int> t1;           // complement of u1, ascending
    std::vector<int> right_order;  // N(u1) occupies the last h slots
    int h = 0;
};

namespace detail {

inline SplitPlan finish_plan(const BipartiteGraph& g, std::vector<int> u1) {
    std::sort(u1.begin(), u1.end());
    std::vector<char> in_u(g.left_count, 0);
    for (int u : u1) in_u[u] = 1;

    SplitPlan p;
    p.u1 = std::move(u1);
    for (int u = 0; u < g.left_count; ++u)
        if (!in_u[u]) p.t1.push_back(u);

    std::vector<char> nb(g.right_count, 0);
    for (int u : p.u1)
        for (int e : g.left_edges[u]) nb[g.edges[e].second] = 1;
    for (int v = 0; v < g.right_count; ++v)
        if (!nb[v]) p.right_order.push_back(v);
    for (int v = 0; v < g.right_count; ++v)
        if (nb[v]) {
            p.right_order.push_back(v);
            ++p.h;
        }
    return p;
}

// max(1, floor(n / (5 * avg_degree * max(1, log2 avg_degree)))), the size
// split plans aim for; sparse instances give small values.
inline int formula_u1_size(const BipartiteGraph& g) {
    const int n = g.left_count;
    if (g.edge_count() == 0) return 1;
    const double delta = static_cast<double>(g.edge_count()) / static_cast<double>(n);
    const double lg = std::max(1.0, std::log2(delta));
    const int k = static_cast<int>(std::floor(static_cast<double>(n) / (5.0 * delta * lg)));
    return std::clamp(k, 1, n);
}

}  // namespace detail

inline SplitPlan plan_split(const BipartiteGraph& g,
                            SplitStrategy strategy = SplitStrategy::Formula) {
    if (g.left_count < 1) throw std::invalid_argument("plan_split: empty left side");
    const int k = detail::formula_u1_size(g);

    std::vector<int> u1;
    if (strategy == SplitStrategy::Formula) {
        // lowest-degree prefix
        std::vector<int> order(g.left_count);
        for (int u = 0; u < g.left_count; ++u) order[u] = u;
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            return g.left_degree(a) < g.left_degree(b);
        });
        u1.assign(order.begin(), order.begin() + k);
    } else {
        // grow by smallest neighborhood increase
        std::vector<char> in_u(g.left_count, 0), nb(g.right_count, 0);
        for (int step = 0; step < k; ++step) {
            int best = -1, best_gain = g.right_count + 1;
            for (int u = 0; u < g.left_count; ++u) {
                if (in_u[u]) continue;
                int gain = 0;
                for (int e : g.left_edges[u])
                    if (!nb[g.edges[e].second]) ++gain;
                if (gain < best_gain) {
                    best_gain = gain;
                    best = u;
                }
            }
            in_u[best] = 1;
            for (int e : g.left_edges[best]) nb[g.edges[e].second] = 1;
            u1.push_back(best);
        }
    }
    return detail::finish_plan(g, std::move(u1));
}

inline SplitPlan plan_split_explicit(const BipartiteGraph& g, std::vector<int> u1) {
    std::vector<char> seen(g.left_count, 0);
    for (int u : u1) {
        if (u < 0 || u >= g.left_count)
            throw std::invalid_argument("plan_split_explicit: vertex not in left side");
        if (seen[u]) throw std::invalid_argument("plan_split_explicit: duplicate vertex");
        seen[u] = 1;
    }
    return detail::finish_plan(g, std::move(u1));
}

// One class of T1-subsets: all X with the same tail signature
// key[i] = c(v_i, T1 \ X) - c(v_i, X) over the last h right vertices.
struct ClassAccumulator {
    ShiftSequence key;
    WeightDistribution weight_sum;
    std::uint64_t member_count = 0;
};

inline std::vector<ClassAccumulator> classify(const BipartiteGraph& g, const SplitPlan& plan,
                                              const EngineOptions& opts = {},
                                              OpReport* report = nullptr) {
    const int nr = g.right_count, m = g.edge_count();
    const int tsz = static_cast<int>(plan.t1.size());
    const int head = nr - plan.h;
    detail::require_enumerable(tsz, "classify");

    OpReport scratch;
    OpReport& rep = report ? *report : scratch;

    std::vector<int> pos(nr);
    for (int i = 0; i < nr; ++i) pos[plan.right_order[i]] = i;

    std::vector<char> in_t(g.left_count, 0);
    for (int u : plan.t1) in_t[u] = 1;

    // X = empty: every entry starts at c(v, T1). Head vertices have no U1
    // edges, so there the value equals the full degree.
    std::vector<int> head_l(head), key(plan.h);
    for (int i = 0; i < nr; ++i) {
        int v = plan.right_order[i];
        int to_t = 0;
        for (int e : g.right_edges[v])
            if (in_t[g.edges[e].first]) ++to_t;
        if (i < head)
            head_l[i] = to_t;
        else
            key[i - head] = to_t;
    }

    long long degsum = 0;
    std::vector<char> in_x(g.left_count, 0);
    detail::ShiftFolder folder(m);
    std::map<ShiftSequence, size_t> slot;
    std::vector<ClassAccumulator> classes;

    auto absorb = [&]() {
        folder.reset_unit(static_cast<int>(degsum));
        for (int i = 0; i < head; ++i) {
            folder.apply(head_l[i], opts.checked);
            ++rep.sigma_applications;
            ++rep.vector_additions;
        }
        auto [it, fresh] = slot.try_emplace(key, classes.size());
        if (fresh) classes.push_back({key, WeightDistribution::zeros(m), 0});
        ClassAccumulator& acc = classes[it->second];
        folder.accumulate_into(acc.weight_sum.counts);
        ++rep.vector_additions;
        ++acc.member_count;
    };

    absorb();
    const std::uint64_t subsets = std::uint64_t{1} << tsz;
    for (std::uint64_t k = 1; k < subsets; ++k) {
        int u = plan.t1[std::countr_zero(k)];
        in_x[u] ^= 1;
        int dir = in_x[u] ? 1 : -1;
        degsum += dir * g.left_degree(u);
        for (int e : g.left_edges[u]) {
            int p = pos[g.edges[e].second];
            if (p < head)
                head_l[p] -= 2 * dir;
            else
                key[p - head] -= 2 * dir;
        }
        absorb();
    }

    rep.class_count = classes.size();
    return classes;
}

inline WeightDistribution cutdist_split(const BipartiteGraph& g, const SplitPlan& plan,
                                        const EngineOptions& opts = {},
                                        OpReport* report = nullptr) {
    const int nr = g.right_count, m = g.edge_count();
    const int usz = static_cast<int>(plan.u1.size());
    const int head = nr - plan.h;
    detail::require_enumerable(usz, "cutdist_split");

    OpReport scratch;
    OpReport& rep = report ? *report : scratch;
    std::vector<ClassAccumulator> classes = classify(g, plan, opts, &rep);

    std::vector<int> tailpos(nr, -1);
    for (int i = head; i < nr; ++i) tailpos[plan.right_order[i]] = i - head;

    std::vector<char> in_u(g.left_count, 0);
    for (int u : plan.u1) in_u[u] = 1;

    // Y = empty baseline: c(v, U1 \ Y) - c(v, Y) = full count of U1 edges.
    std::vector<int> u_base(plan.h, 0);
    for (int i = 0; i < plan.h; ++i) {
        int v = plan.right_order[head + i];
        for (int e : g.right_edges[v])
            if (in_u[g.edges[e].first]) ++u_base[i];
    }

    WeightDistribution total = WeightDistribution::zeros(m);
    detail::ShiftFolder folder(m);

    // class-major: each class distribution is loaded once and swept over
    // all U1 subsets
    for (const ClassAccumulator& cls : classes) {
        int lo = 0, hi = -1;
        for (int i = 0; i <= m; ++i)
            if (cls.weight_sum.counts[i] != 0) {
                if (hi < 0) lo = i;
                hi = i;
            }

        std::vector<int> uvec = u_base;
        long long c_y = 0;
        std::vector<char> in_y(g.left_count, 0);

        auto emit = [&]() {
            folder.reset_shifted(cls.weight_sum.counts, lo, hi, static_cast<int>(c_y),
                                 opts.checked);
            ++rep.sigma_applications;
            for (int i = 0; i < plan.h; ++i) {
                folder.apply(cls.key[i] + uvec[i], opts.checked);
                ++rep.sigma_applications;
                ++rep.vector_additions;
            }
            folder.accumulate_into(total.counts);
            ++rep.vector_additions;
        };

        emit();
        const std::uint64_t subsets = std::uint64_t{1} << usz;
        for (std::uint64_t k = 1; k < subsets; ++k) {
            int u = plan.u1[std::countr_zero(k)];
            in_y[u] ^= 1;
            int dir = in_y[u] ? 1 : -1;
            c_y += dir * g.left_degree(u);
            for (int e : g.left_edges[u]) uvec[tailpos[g.edges[e].second]] -= 2 * dir;
            emit();
        }
    }

    if (opts.checked &&
        total.mass() != pow2(static_cast<unsigned long>(g.vertex_count())))
        throw IntegrityError("cutdist_split: total mass is not 2^|V|");
    return total;
}

}  // namespace matchspectrum
