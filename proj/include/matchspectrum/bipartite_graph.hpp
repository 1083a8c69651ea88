#pragma once

// Bipartite graph with an indexed edge list. Edge j is edges[j], and every
// cut/cycle-space computation downstream keys off that index, so edge order
// is part of the value.
//
// Global vertex numbering used by mixed-side operations: left vertex u is u,
// right vertex v is left_count + v.

#include <algorithm>
#include <cstdint>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace matchspectrum {

struct BipartiteGraph {
    int left_count = 0;
    int right_count = 0;
    std::vector<std::pair<int, int>> edges;     // (left, right) in insertion order
    std::vector<std::vector<int>> left_edges;   // left vertex -> incident edge ids
    std::vector<std::vector<int>> right_edges;  // right vertex -> incident edge ids

    BipartiteGraph() = default;
    BipartiteGraph(int nl, int nr)
        : left_count(nl), right_count(nr), left_edges(nl), right_edges(nr) {
        if (nl < 0 || nr < 0) throw std::invalid_argument("negative vertex count");
    }

    int vertex_count() const { return left_count + right_count; }
    int edge_count() const { return static_cast<int>(edges.size()); }

    bool has_edge(int u, int v) const {
        for (int e : left_edges[u])
            if (edges[e].second == v) return true;
        return false;
    }

    // Appends edge (u, v); the new edge gets the next index.
    void add_edge(int u, int v) {
        if (u < 0 || u >= left_count || v < 0 || v >= right_count)
            throw std::invalid_argument("vertex index out of range");
        if (has_edge(u, v)) throw std::invalid_argument("duplicate edge");
        int id = edge_count();
        edges.emplace_back(u, v);
        left_edges[u].push_back(id);
        right_edges[v].push_back(id);
    }

    int left_degree(int u) const { return static_cast<int>(left_edges[u].size()); }
    int right_degree(int v) const { return static_cast<int>(right_edges[v].size()); }

    bool is_left_vertex(int global) const { return global < left_count; }

    int degree(int global) const {
        return is_left_vertex(global) ? left_degree(global)
                                      : right_degree(global - left_count);
    }

    int global_left(int u) const { return u; }
    int global_right(int v) const { return left_count + v; }

    // Incident edge ids of a global vertex.
    const std::vector<int>& incident(int global) const {
        return is_left_vertex(global) ? left_edges[global]
                                      : right_edges[global - left_count];
    }

    // The endpoint of edge e opposite to global vertex `global`.
    int other_endpoint(int e, int global) const {
        int gl = global_left(edges[e].first);
        return global == gl ? global_right(edges[e].second) : gl;
    }

    bool is_balanced() const { return left_count == right_count; }

    bool is_odd() const {
        for (int u = 0; u < left_count; ++u)
            if (left_degree(u) % 2 == 0) return false;
        for (int v = 0; v < right_count; ++v)
            if (right_degree(v) % 2 == 0) return false;
        return true;
    }

    bool operator==(const BipartiteGraph& o) const {
        return left_count == o.left_count && right_count == o.right_count &&
               edges == o.edges;
    }
};

// Number of connected components, isolated vertices included.
inline int connected_components(const BipartiteGraph& g) {
    const int nv = g.vertex_count();
    std::vector<char> seen(nv, 0);
    int components = 0;
    for (int s = 0; s < nv; ++s) {
        if (seen[s]) continue;
        ++components;
        std::queue<int> q;
        q.push(s);
        seen[s] = 1;
        while (!q.empty()) {
            int w = q.front();
            q.pop();
            for (int e : g.incident(w)) {
                int o = g.other_endpoint(e, w);
                if (!seen[o]) {
                    seen[o] = 1;
                    q.push(o);
                }
            }
        }
    }
    return components;
}

// Number of edges with one endpoint in S and the other in T. S and T are
// disjoint sets of global vertex ids.
inline int cut_count(const BipartiteGraph& g, const std::vector<int>& s,
                     const std::vector<int>& t) {
    const int nv = g.vertex_count();
    std::vector<char> mark(nv, 0);  // 1 = S, 2 = T
    for (int v : s) {
        if (v < 0 || v >= nv) throw std::invalid_argument("cut_count: vertex out of range");
        mark[v] = 1;
    }
    for (int v : t) {
        if (v < 0 || v >= nv) throw std::invalid_argument("cut_count: vertex out of range");
        if (mark[v] == 1) throw std::invalid_argument("cut_count: S and T overlap");
        mark[v] = 2;
    }
    int crossing = 0;
    for (const auto& [u, v] : g.edges) {
        char a = mark[u];
        char b = mark[g.left_count + v];
        if ((a == 1 && b == 2) || (a == 2 && b == 1)) ++crossing;
    }
    return crossing;
}

}  // namespace matchspectrum
