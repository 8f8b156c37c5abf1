#pragma once

// Test-only reference implementations, kept independent of the library's
// algorithmic paths: Floyd-Warshall distances, triple-loop triangle counts,
// and the exhaustive edge-subset oracle for the edge-triangle property.

#include <algorithm>
#include <optional>
#include <vector>

#include "triclub/graph.hpp"
#include "triclub/properties.hpp"

namespace oracles {

using triclub::edge_set;
using triclub::graph;
using triclub::unreachable_dist;
using triclub::vertex_set;

inline std::vector<std::vector<int>> floyd_warshall(const graph& g) {
    const int n = g.vertex_count();
    const int inf = 1 << 28;
    std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
    for (int v = 0; v < n; ++v) d[v][v] = 0;
    for (const auto& [u, v] : g.edge_list()) d[u][v] = d[v][u] = 1;
    for (int w = 0; w < n; ++w)
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v) d[u][v] = std::min(d[u][v], d[u][w] + d[w][v]);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (d[u][v] >= inf) d[u][v] = unreachable_dist;
    return d;
}

inline std::vector<int> naive_vertex_triangles(const graph& g, const vertex_set& members) {
    const int n = g.vertex_count();
    std::vector<int> counts(n, 0);
    const auto& ids = members.ids();
    for (size_t a = 0; a < ids.size(); ++a)
        for (size_t b = a + 1; b < ids.size(); ++b)
            for (size_t c = b + 1; c < ids.size(); ++c) {
                int u = ids[a], v = ids[b], w = ids[c];
                if (g.has_edge(u, v) && g.has_edge(v, w) && g.has_edge(u, w)) {
                    ++counts[u];
                    ++counts[v];
                    ++counts[w];
                }
            }
    return counts;
}

inline int naive_edge_triangles(const graph& g, int u, int v, const vertex_set& members) {
    int c = 0;
    for (int w : members.ids())
        if (w != u && w != v && g.has_edge(u, w) && g.has_edge(v, w)) ++c;
    return c;
}

// True iff every edge of the subset lies in >= ell triangles formed entirely
// by subset edges.
inline bool edge_subset_self_supporting(const std::vector<std::pair<int, int>>& subset, int ell) {
    auto has = [&](int a, int b) {
        for (const auto& [u, v] : subset)
            if ((u == a && v == b) || (u == b && v == a)) return true;
        return false;
    };
    std::vector<int> verts;
    for (const auto& [u, v] : subset) {
        verts.push_back(u);
        verts.push_back(v);
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    for (const auto& [u, v] : subset) {
        int t = 0;
        for (int w : verts)
            if (w != u && w != v && has(u, w) && has(v, w)) ++t;
        if (t < ell) return false;
    }
    return true;
}

inline std::optional<int> subgraph_diameter(const graph& g, const vertex_set& members,
                                            const std::vector<std::pair<int, int>>& subset) {
    edge_set mask{std::vector<std::pair<int, int>>(subset)};
    return triclub::diameter(g, &members, &mask);
}

// Exhaustive edge-triangle oracle: does some spanning edge subset of G[S]
// qualify? Only usable when G[S] has at most ~16 edges.
inline bool brute_edge_triangle_club(const graph& g, const vertex_set& members, int s, int ell) {
    if (members.size() == 1) return true;
    std::vector<std::pair<int, int>> all;
    for (const auto& [u, v] : g.edge_list())
        if (members.contains(u) && members.contains(v)) all.emplace_back(u, v);
    const int m = static_cast<int>(all.size());
    for (long long bits = (1LL << m) - 1; bits >= 0; --bits) {
        std::vector<std::pair<int, int>> subset;
        for (int e = 0; e < m; ++e)
            if (bits & (1LL << e)) subset.push_back(all[e]);
        if (!edge_subset_self_supporting(subset, ell)) continue;
        auto d = subgraph_diameter(g, members, subset);
        if (d.has_value() && *d <= s) return true;
    }
    return false;
}

// Handy fixed graphs.
inline graph complete(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return graph::build(n, e);
}

inline graph path(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return graph::build(n, e);
}

inline graph cycle(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return graph::build(n, e);
}

// Two K4s {0..3} and {4..7} joined by the bridge 3-4.
inline graph two_k4_bridge() {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            e.emplace_back(i, j);
            e.emplace_back(i + 4, j + 4);
        }
    e.emplace_back(3, 4);
    return graph::build(8, e);
}

inline graph star(int leaves) {
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
    return graph::build(leaves + 1, e);
}

}  // namespace oracles
