#pragma once

// GF(2) linear algebra on word-packed bit vectors: rank, independent row
// extraction, graph incidence matrices, fundamental-cycle bases, and the
// brute-force span enumeration used as the weight-distribution oracle.

#include <bit>
#include <cstdint>
#include <queue>
#include <stdexcept>
#include <vector>

#include "bipartite_graph.hpp"
#include "errors.hpp"
#include "weight_distribution.hpp"

namespace matchspectrum {

class Gf2Vector {
public:
    Gf2Vector() = default;
    explicit Gf2Vector(int bits)
        : bits_(bits), words_((static_cast<size_t>(bits) + 63) / 64, 0) {
        if (bits < 0) throw std::invalid_argument("Gf2Vector: negative size");
    }

    int size() const { return bits_; }

    bool get(int i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }

    void set(int i, bool v) {
        std::uint64_t mask = std::uint64_t{1} << (i & 63);
        if (v)
            words_[i >> 6] |= mask;
        else
            words_[i >> 6] &= ~mask;
    }

    void flip(int i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    Gf2Vector& operator^=(const Gf2Vector& o) {
        if (bits_ != o.bits_) throw std::invalid_argument("Gf2Vector: size mismatch");
        for (size_t w = 0; w < words_.size(); ++w) words_[w] ^= o.words_[w];
        return *this;
    }

    friend Gf2Vector operator^(Gf2Vector a, const Gf2Vector& b) {
        a ^= b;
        return a;
    }

    int weight() const {
        int w = 0;
        for (std::uint64_t x : words_) w += std::popcount(x);
        return w;
    }

    bool is_zero() const {
        for (std::uint64_t x : words_)
            if (x) return false;
        return true;
    }

    // GF(2) inner product: parity of the AND.
    bool dot(const Gf2Vector& o) const {
        if (bits_ != o.bits_) throw std::invalid_argument("Gf2Vector: size mismatch");
        std::uint64_t acc = 0;
        for (size_t w = 0; w < words_.size(); ++w) acc ^= words_[w] & o.words_[w];
        return std::popcount(acc) & 1;
    }

    // Index of the highest set bit, -1 if zero.
    int leading() const {
        for (int w = static_cast<int>(words_.size()) - 1; w >= 0; --w)
            if (words_[w]) return w * 64 + 63 - std::countl_zero(words_[w]);
        return -1;
    }

    bool operator==(const Gf2Vector& o) const = default;

private:
    int bits_ = 0;
    std::vector<std::uint64_t> words_;
};

struct Gf2Matrix {
    int cols = 0;
    std::vector<Gf2Vector> rows;

    Gf2Matrix() = default;
    explicit Gf2Matrix(int cols) : cols(cols) {}

    void add_row(Gf2Vector r) {
        if (r.size() != cols) throw std::invalid_argument("Gf2Matrix: row width mismatch");
        rows.push_back(std::move(r));
    }

    int row_count() const { return static_cast<int>(rows.size()); }
};

namespace detail {

// Row-reduces by leading bit; returns the independent rows found. Pivots
// carry distinct leading bits, so cancelling the lead repeatedly either
// zeroes the row or exposes a fresh pivot.
inline std::vector<Gf2Vector> eliminate(const Gf2Matrix& m) {
    std::vector<Gf2Vector> pivots;
    for (Gf2Vector row : m.rows) {
        int lead = row.leading();
        while (lead >= 0) {
            const Gf2Vector* hit = nullptr;
            for (const Gf2Vector& p : pivots)
                if (p.leading() == lead) {
                    hit = &p;
                    break;
                }
            if (!hit) break;
            row ^= *hit;
            lead = row.leading();
        }
        if (lead >= 0) pivots.push_back(std::move(row));
    }
    return pivots;
}

}  // namespace detail

inline int gf2_rank(const Gf2Matrix& m) {
    return static_cast<int>(detail::eliminate(m).size());
}

// An independent generating set for the row space (row-echelon pivots).
inline Gf2Matrix gf2_row_basis(const Gf2Matrix& m) {
    Gf2Matrix out(m.cols);
    for (Gf2Vector& r : detail::eliminate(m)) out.add_row(std::move(r));
    return out;
}

// |V| x m incidence matrix; bit j of a row marks edge j. Left rows first.
inline Gf2Matrix incidence_matrix(const BipartiteGraph& g) {
    Gf2Matrix a(g.edge_count());
    for (int u = 0; u < g.left_count; ++u) {
        Gf2Vector row(g.edge_count());
        for (int e : g.left_edges[u]) row.set(e, true);
        a.add_row(std::move(row));
    }
    for (int v = 0; v < g.right_count; ++v) {
        Gf2Vector row(g.edge_count());
        for (int e : g.right_edges[v]) row.set(e, true);
        a.add_row(std::move(row));
    }
    return a;
}

// Fundamental-cycle basis of a spanning forest grown in edge order: one row
// per non-forest edge, the edge plus its forest path. Exactly
// m - |V| + components rows, each an even subgraph.
inline Gf2Matrix cycle_space_basis(const BipartiteGraph& g) {
    const int nv = g.vertex_count();
    const int m = g.edge_count();

    std::vector<int> parent(nv);
    for (int i = 0; i < nv; ++i) parent[i] = i;
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };

    std::vector<char> in_forest(m, 0);
    std::vector<std::vector<int>> tree_edges(nv);
    for (int e = 0; e < m; ++e) {
        int a = g.global_left(g.edges[e].first);
        int b = g.global_right(g.edges[e].second);
        int ra = find(a), rb = find(b);
        if (ra != rb) {
            parent[ra] = rb;
            in_forest[e] = 1;
            tree_edges[a].push_back(e);
            tree_edges[b].push_back(e);
        }
    }

    // BFS parent pointers within the forest, path recovered per chord.
    Gf2Matrix basis(m);
    std::vector<int> via_edge(nv);
    std::vector<char> seen(nv);
    for (int e = 0; e < m; ++e) {
        if (in_forest[e]) continue;
        int a = g.global_left(g.edges[e].first);
        int b = g.global_right(g.edges[e].second);

        std::fill(seen.begin(), seen.end(), 0);
        std::queue<int> q;
        q.push(a);
        seen[a] = 1;
        via_edge[a] = -1;
        bool found = false;
        while (!q.empty() && !found) {
            int w = q.front();
            q.pop();
            for (int te : tree_edges[w]) {
                int o = g.other_endpoint(te, w);
                if (seen[o]) continue;
                seen[o] = 1;
                via_edge[o] = te;
                if (o == b) {
                    found = true;
                    break;
                }
                q.push(o);
            }
        }
        if (!found) throw IntegrityError("cycle_space_basis: chord endpoints not connected");

        Gf2Vector row(m);
        row.set(e, true);
        for (int w = b; via_edge[w] != -1;) {
            int te = via_edge[w];
            row.set(te, true);
            w = g.other_endpoint(te, w);
        }
        basis.add_row(std::move(row));
    }

    const int expected = m - nv + connected_components(g);
    if (basis.row_count() != expected)
        throw IntegrityError("cycle_space_basis: unexpected rank");
    return basis;
}

// Enumerates the 2^rows span combinations of `basis` by Gray code and tallies
// codeword weights. Callers wanting a code distribution supply an independent
// basis; dependent rows tally with multiplicity.
inline WeightDistribution enumerate_weight_distribution(const Gf2Matrix& basis, int m,
                                                        int row_cap = 24) {
    if (basis.row_count() > row_cap)
        throw CapExceededError("enumerate_weight_distribution: " +
                               std::to_string(basis.row_count()) + " rows exceeds cap " +
                               std::to_string(row_cap));
    for (const Gf2Vector& r : basis.rows)
        if (r.size() != m)
            throw std::invalid_argument("enumerate_weight_distribution: width mismatch");

    WeightDistribution w = WeightDistribution::zeros(m);
    Gf2Vector cur(m);
    w.counts[0] += 1;  // the zero combination
    const std::uint64_t total = std::uint64_t{1} << basis.row_count();
    for (std::uint64_t k = 1; k < total; ++k) {
        cur ^= basis.rows[std::countr_zero(k)];
        w.counts[cur.weight()] += 1;
    }
    return w;
}

}  // namespace matchspectrum
