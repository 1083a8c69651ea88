#pragma once

// Transformation of a balanced bipartite graph into an odd bipartite graph
// (every degree odd) with the same number of perfect matchings.
//
// Construction: append hub and pendant vertices v_{i,1}, v_{i,2} to side i,
// wire every even-degree vertex of side i to the opposite hub v_{3-i,1},
// give each hub a pendant from its own side, and bridge the two hubs if
// their degrees ended up even. The two pendant edges are forced into every
// perfect matching of the result, which is what preserves the count.

#include <array>
#include <stdexcept>
#include <vector>

#include "bipartite_graph.hpp"
#include "errors.hpp"

namespace matchspectrum {

struct OddTransformResult {
    BipartiteGraph graph;
    std::array<int, 2> added_left{{-1, -1}};   // left hub, left pendant
    std::array<int, 2> added_right{{-1, -1}};  // right hub, right pendant
    int added_edge_count = 0;
    bool bridge_edge_present = false;
    bool was_already_odd = false;  // true iff the input was returned unchanged
};

// `force` applies the construction even to graphs that are already odd.
inline OddTransformResult to_odd_graph(const BipartiteGraph& g, bool force = false) {
    if (!g.is_balanced())
        throw std::invalid_argument("to_odd_graph: left and right sides must be balanced");

    if (!force && g.is_odd()) {
        OddTransformResult r;
        r.graph = g;
        r.was_already_odd = true;
        return r;
    }

    std::vector<int> even_left, even_right;
    for (int u = 0; u < g.left_count; ++u)
        if (g.left_degree(u) % 2 == 0) even_left.push_back(u);
    for (int v = 0; v < g.right_count; ++v)
        if (g.right_degree(v) % 2 == 0) even_right.push_back(v);

    // |even_left| and |even_right| agree in parity for every bipartite graph;
    // the bridge rule below depends on it.
    if ((even_left.size() & 1) != (even_right.size() & 1))
        throw IntegrityError("to_odd_graph: even-vertex parity mismatch");

    OddTransformResult r;
    BipartiteGraph t(g.left_count + 2, g.right_count + 2);
    for (const auto& [u, v] : g.edges) t.add_edge(u, v);

    const int left_hub = g.left_count;       // v_{1,1}
    const int left_pendant = g.left_count + 1;   // v_{1,2}
    const int right_hub = g.right_count;     // v_{2,1}
    const int right_pendant = g.right_count + 1;  // v_{2,2}

    // Original vertices keep their indices; hub then pendant are appended.
    for (int u : even_left) t.add_edge(u, right_hub);
    t.add_edge(left_pendant, right_hub);
    for (int v : even_right) t.add_edge(left_hub, v);
    t.add_edge(left_hub, right_pendant);

    // Hub degrees are recomputed after wiring, not predicted: the pendant
    // alone keeps a hub at degree 1 when its even set is empty.
    if (t.left_degree(left_hub) % 2 == 0 && t.right_degree(right_hub) % 2 == 0) {
        t.add_edge(left_hub, right_hub);
        r.bridge_edge_present = true;
    } else if (t.left_degree(left_hub) % 2 != t.right_degree(right_hub) % 2) {
        throw IntegrityError("to_odd_graph: hub degree parity mismatch");
    }

    r.added_edge_count = t.edge_count() - g.edge_count();
    r.added_left = {left_hub, left_pendant};
    r.added_right = {right_hub, right_pendant};
    r.graph = std::move(t);

    if (!r.graph.is_odd())
        throw IntegrityError("to_odd_graph: result is not odd");
    return r;
}

}  // namespace matchspectrum
