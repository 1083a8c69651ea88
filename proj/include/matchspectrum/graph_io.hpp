#pragma once

// Text formats for bipartite graphs.
//
// Edge-list format:
//   # comment lines and blank lines are ignored
//   bipartite <nL> <nR> <m>
//   <u> <v>          (m lines, 0 <= u < nL, 0 <= v < nR)
//
// JSON format: {"left": int, "right": int, "edges": [[u, v], ...]}

#include <istream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "bipartite_graph.hpp"
#include "errors.hpp"

namespace matchspectrum {

namespace detail {

inline bool blank_or_comment(const std::string& line) {
    for (char c : line) {
        if (c == '#') return true;
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

}  // namespace detail

inline BipartiteGraph parse_edge_list(std::istream& in) {
    std::string line;
    int lineno = 0;

    auto next_content_line = [&](std::string& out) {
        while (std::getline(in, line)) {
            ++lineno;
            if (!detail::blank_or_comment(line)) {
                out = line;
                return true;
            }
        }
        return false;
    };

    std::string header;
    if (!next_content_line(header)) throw ParseError("missing header", lineno + 1);

    std::istringstream hs(header);
    std::string tag;
    long nl = -1, nr = -1, m = -1;
    std::string trailing;
    if (!(hs >> tag >> nl >> nr >> m) || tag != "bipartite" || nl < 0 || nr < 0 ||
        m < 0 || (hs >> trailing))
        throw ParseError("malformed header", lineno);
    constexpr long vertex_limit = 1L << 24;
    if (nl > vertex_limit || nr > vertex_limit || m > vertex_limit * 4)
        throw ParseError("graph too large", lineno);

    BipartiteGraph g(static_cast<int>(nl), static_cast<int>(nr));
    for (long i = 0; i < m; ++i) {
        std::string edge_line;
        if (!next_content_line(edge_line))
            throw ParseError("unexpected end of input: expected " + std::to_string(m) +
                                 " edges, got " + std::to_string(i),
                             lineno + 1);
        std::istringstream es(edge_line);
        long u = -1, v = -1;
        if (!(es >> u >> v) || (es >> trailing))
            throw ParseError("malformed edge", lineno);
        if (u < 0 || u >= nl || v < 0 || v >= nr)
            throw ParseError("vertex index out of range", lineno);
        if (g.has_edge(static_cast<int>(u), static_cast<int>(v)))
            throw ParseError("duplicate edge", lineno);
        g.add_edge(static_cast<int>(u), static_cast<int>(v));
    }
    std::string extra;
    if (next_content_line(extra)) throw ParseError("unexpected trailing content", lineno);
    return g;
}

inline BipartiteGraph parse_json_graph(std::istream& in) {
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(), 0);
    }
    if (!j.is_object() || !j.contains("left") || !j.contains("right") ||
        !j.contains("edges"))
        throw ParseError("JSON graph needs fields left, right, edges", 0);
    if (!j["left"].is_number_integer() || !j["right"].is_number_integer() ||
        !j["edges"].is_array())
        throw ParseError("JSON graph field has wrong type", 0);
    long nl = j["left"].get<long>();
    long nr = j["right"].get<long>();
    if (nl < 0 || nr < 0) throw ParseError("negative vertex count", 0);
    if (nl > (1L << 24) || nr > (1L << 24)) throw ParseError("graph too large", 0);

    BipartiteGraph g(static_cast<int>(nl), static_cast<int>(nr));
    size_t idx = 0;
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer())
            throw ParseError("edge " + std::to_string(idx) + " is not an integer pair", 0);
        long u = e[0].get<long>();
        long v = e[1].get<long>();
        if (u < 0 || u >= nl || v < 0 || v >= nr)
            throw ParseError("vertex index out of range, edge " + std::to_string(idx), 0);
        if (g.has_edge(static_cast<int>(u), static_cast<int>(v)))
            throw ParseError("duplicate edge, edge " + std::to_string(idx), 0);
        g.add_edge(static_cast<int>(u), static_cast<int>(v));
        ++idx;
    }
    return g;
}

// Autodetects the format: a leading '{' means JSON, anything else edge-list.
inline BipartiteGraph parse_graph(std::istream& in) {
    int c;
    while ((c = in.peek()) != EOF && std::isspace(c)) in.get();
    if (c == '{') return parse_json_graph(in);
    return parse_edge_list(in);
}

inline std::string serialize_edge_list(const BipartiteGraph& g) {
    std::ostringstream out;
    out << "bipartite " << g.left_count << ' ' << g.right_count << ' '
        << g.edge_count() << '\n';
    for (const auto& [u, v] : g.edges) out << u << ' ' << v << '\n';
    return out.str();
}

inline nlohmann::json graph_to_json(const BipartiteGraph& g) {
    nlohmann::json j;
    j["left"] = g.left_count;
    j["right"] = g.right_count;
    auto edges = nlohmann::json::array();
    for (const auto& [u, v] : g.edges) edges.push_back({u, v});
    j["edges"] = std::move(edges);
    return j;
}

}  // namespace matchspectrum
