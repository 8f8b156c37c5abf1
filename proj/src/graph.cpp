#include "triclub/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>

namespace triclub {

namespace {

std::vector<char> make_mask(int n, const vertex_set* mask) {
    std::vector<char> in(n, mask == nullptr ? 1 : 0);
    if (mask != nullptr) {
        for (int v : mask->ids()) {
            if (v < 0 || v >= n) throw std::invalid_argument("mask vertex " + std::to_string(v) + " out of range");
            in[v] = 1;
        }
    }
    return in;
}

}  // namespace

vertex_set::vertex_set(std::vector<int> ids) : ids_(std::move(ids)) {
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
    if (!ids_.empty() && ids_.front() < 0) throw std::invalid_argument("negative vertex id in vertex_set");
}

vertex_set vertex_set::all(int n) {
    std::vector<int> ids(n);
    for (int i = 0; i < n; ++i) ids[i] = i;
    return vertex_set(std::move(ids));
}

bool vertex_set::contains(int v) const {
    return std::binary_search(ids_.begin(), ids_.end(), v);
}

bool vertex_set::is_subset_of(const vertex_set& other) const {
    return std::includes(other.ids_.begin(), other.ids_.end(), ids_.begin(), ids_.end());
}

edge_set::edge_set(std::vector<std::pair<int, int>> pairs) : pairs_(std::move(pairs)) {
    for (auto& [u, v] : pairs_) {
        if (u == v) throw std::invalid_argument("self-loop in edge_set");
        if (u > v) std::swap(u, v);
    }
    std::sort(pairs_.begin(), pairs_.end());
    pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
}

bool edge_set::contains(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(pairs_.begin(), pairs_.end(), std::make_pair(u, v));
}

graph graph::build(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    graph g;
    g.n_ = n;
    g.adj_.assign(n, {});
    std::vector<std::pair<int, int>> norm;
    norm.reserve(edges.size());
    for (const auto& [a, b] : edges) {
        if (a == b)
            throw std::invalid_argument("self-loop " + std::to_string(a) + "-" + std::to_string(b) + " rejected");
        if (a < 0 || b < 0 || a >= n || b >= n)
            throw std::invalid_argument("edge endpoint out of range: " + std::to_string(a) + "-" + std::to_string(b));
        norm.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(norm.begin(), norm.end());
    norm.erase(std::unique(norm.begin(), norm.end()), norm.end());
    for (const auto& [u, v] : norm) {
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (auto& nbrs : g.adj_) std::sort(nbrs.begin(), nbrs.end());
    g.m_ = static_cast<long long>(norm.size());
    return g;
}

bool graph::has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) return false;
    const auto& a = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
    int t = adj_[u].size() <= adj_[v].size() ? v : u;
    return std::binary_search(a.begin(), a.end(), t);
}

std::vector<std::pair<int, int>> graph::edge_list() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<size_t>(m_));
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

std::vector<int> bfs_distances(const graph& g, int source, const vertex_set* mask,
                               const edge_set* edge_mask) {
    const int n = g.vertex_count();
    if (source < 0 || source >= n) throw std::invalid_argument("bfs source out of range");
    std::vector<char> in = make_mask(n, mask);
    if (!in[source]) throw std::invalid_argument("bfs source not in mask");
    std::vector<int> dist(n, unreachable_dist);
    dist[source] = 0;
    std::queue<int> q;
    q.push(source);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : g.neighbors(u)) {
            if (!in[v] || dist[v] != unreachable_dist) continue;
            if (edge_mask != nullptr && !edge_mask->contains(u, v)) continue;
            dist[v] = dist[u] + 1;
            q.push(v);
        }
    }
    return dist;
}

vertex_set neighborhood(const graph& g, const vertex_set& from, int radius, bool closed,
                        const vertex_set* mask) {
    if (radius < 0) throw std::invalid_argument("negative neighborhood radius");
    if (from.empty()) throw std::invalid_argument("neighborhood of empty set");
    const int n = g.vertex_count();
    std::vector<char> in = make_mask(n, mask);
    std::vector<int> dist(n, unreachable_dist);
    std::queue<int> q;
    for (int v : from.ids()) {
        if (v < 0 || v >= n) throw std::invalid_argument("neighborhood source out of range");
        if (!in[v]) throw std::invalid_argument("neighborhood source not in mask");
        dist[v] = 0;
        q.push(v);
    }
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        if (dist[u] >= radius) continue;
        for (int v : g.neighbors(u)) {
            if (!in[v] || dist[v] != unreachable_dist) continue;
            dist[v] = dist[u] + 1;
            q.push(v);
        }
    }
    std::vector<int> out;
    for (int v = 0; v < n; ++v) {
        if (dist[v] == unreachable_dist) continue;
        if (closed ? dist[v] <= radius : dist[v] == radius) out.push_back(v);
    }
    return vertex_set(std::move(out));
}

std::optional<int> diameter(const graph& g, const vertex_set* mask, const edge_set* edge_mask) {
    const int n = g.vertex_count();
    std::vector<int> verts;
    if (mask != nullptr) {
        verts = mask->ids();
    } else {
        verts.resize(n);
        for (int i = 0; i < n; ++i) verts[i] = i;
    }
    if (verts.empty()) throw std::invalid_argument("diameter of empty vertex set");
    if (verts.size() == 1) return 0;
    int best = 0;
    for (int v : verts) {
        std::vector<int> dist = bfs_distances(g, v, mask, edge_mask);
        for (int u : verts) {
            if (dist[u] == unreachable_dist) return std::nullopt;
            best = std::max(best, dist[u]);
        }
    }
    return best;
}

std::vector<int> vertex_triangle_counts(const graph& g, const vertex_set* mask) {
    const int n = g.vertex_count();
    std::vector<char> in = make_mask(n, mask);
    std::vector<int> counts(n, 0);
    for (int u = 0; u < n; ++u) {
        if (!in[u]) continue;
        for (int v : g.neighbors(u)) {
            if (v <= u || !in[v]) continue;
            // walk common neighbors w > v so each triangle is counted once
            const auto& nu = g.neighbors(u);
            const auto& nv = g.neighbors(v);
            size_t i = 0, j = 0;
            while (i < nu.size() && j < nv.size()) {
                if (nu[i] < nv[j]) {
                    ++i;
                } else if (nu[i] > nv[j]) {
                    ++j;
                } else {
                    int w = nu[i];
                    if (w > v && in[w]) {
                        ++counts[u];
                        ++counts[v];
                        ++counts[w];
                    }
                    ++i;
                    ++j;
                }
            }
        }
    }
    return counts;
}

std::vector<edge_count> edge_triangle_counts(const graph& g, const vertex_set* mask,
                                             const edge_set* edge_mask) {
    const int n = g.vertex_count();
    std::vector<char> in = make_mask(n, mask);
    std::vector<edge_count> out;
    for (int u = 0; u < n; ++u) {
        if (!in[u]) continue;
        for (int v : g.neighbors(u)) {
            if (v <= u || !in[v]) continue;
            if (edge_mask != nullptr && !edge_mask->contains(u, v)) continue;
            int c = 0;
            const auto& nu = g.neighbors(u);
            const auto& nv = g.neighbors(v);
            size_t i = 0, j = 0;
            while (i < nu.size() && j < nv.size()) {
                if (nu[i] < nv[j]) {
                    ++i;
                } else if (nu[i] > nv[j]) {
                    ++j;
                } else {
                    int w = nu[i];
                    if (in[w] &&
                        (edge_mask == nullptr || (edge_mask->contains(u, w) && edge_mask->contains(v, w))))
                        ++c;
                    ++i;
                    ++j;
                }
            }
            out.push_back({u, v, c});
        }
    }
    return out;
}

edge_set truss_peel(const graph& g, int ell, const vertex_set* mask) {
    if (ell < 1) throw std::invalid_argument("truss threshold must be >= 1");
    const int n = g.vertex_count();
    std::vector<char> in = make_mask(n, mask);

    // indexed edge list over the masked subgraph
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<std::pair<int, int>>> inc(n);  // vertex -> (neighbor, edge index)
    for (int u = 0; u < n; ++u) {
        if (!in[u]) continue;
        for (int v : g.neighbors(u)) {
            if (v <= u || !in[v]) continue;
            int id = static_cast<int>(edges.size());
            edges.emplace_back(u, v);
            inc[u].emplace_back(v, id);
            inc[v].emplace_back(u, id);
        }
    }
    const int m = static_cast<int>(edges.size());
    std::vector<char> alive(m, 1);
    std::vector<int> count(m, 0);

    auto edge_id = [&](int u, int v) -> int {
        const auto& lst = inc[u].size() <= inc[v].size() ? inc[u] : inc[v];
        int t = inc[u].size() <= inc[v].size() ? v : u;
        for (const auto& [w, id] : lst)
            if (w == t) return id;
        return -1;
    };

    for (int e = 0; e < m; ++e) {
        auto [u, v] = edges[e];
        const auto& nu = g.neighbors(u);
        const auto& nv = g.neighbors(v);
        size_t i = 0, j = 0;
        while (i < nu.size() && j < nv.size()) {
            if (nu[i] < nv[j]) {
                ++i;
            } else if (nu[i] > nv[j]) {
                ++j;
            } else {
                if (in[nu[i]]) ++count[e];
                ++i;
                ++j;
            }
        }
    }

    std::vector<int> work;
    for (int e = 0; e < m; ++e)
        if (count[e] < ell) work.push_back(e);

    while (!work.empty()) {
        int e = work.back();
        work.pop_back();
        if (!alive[e]) continue;
        alive[e] = 0;
        auto [u, v] = edges[e];
        const auto& nu = g.neighbors(u);
        const auto& nv = g.neighbors(v);
        size_t i = 0, j = 0;
        while (i < nu.size() && j < nv.size()) {
            if (nu[i] < nv[j]) {
                ++i;
            } else if (nu[i] > nv[j]) {
                ++j;
            } else {
                int w = nu[i];
                ++i;
                ++j;
                if (!in[w]) continue;
                int euw = edge_id(u, w);
                int evw = edge_id(v, w);
                if (euw < 0 || evw < 0 || !alive[euw] || !alive[evw]) continue;
                if (--count[euw] < ell) work.push_back(euw);
                if (--count[evw] < ell) work.push_back(evw);
            }
        }
    }

    std::vector<std::pair<int, int>> kept;
    for (int e = 0; e < m; ++e)
        if (alive[e]) kept.push_back(edges[e]);
    return edge_set(std::move(kept));
}

induced_graph induced_subgraph(const graph& g, const vertex_set& members) {
    if (members.empty()) throw std::invalid_argument("induced subgraph of empty set");
    const int n = g.vertex_count();
    induced_graph out;
    out.from_original.assign(n, -1);
    out.to_original = members.ids();
    for (size_t i = 0; i < out.to_original.size(); ++i) {
        int v = out.to_original[i];
        if (v < 0 || v >= n) throw std::invalid_argument("induced subgraph vertex out of range");
        out.from_original[v] = static_cast<int>(i);
    }
    std::vector<std::pair<int, int>> edges;
    for (int u : out.to_original)
        for (int v : g.neighbors(u))
            if (u < v && out.from_original[v] >= 0)
                edges.emplace_back(out.from_original[u], out.from_original[v]);
    out.g = graph::build(static_cast<int>(out.to_original.size()), edges);
    return out;
}

}  // namespace triclub
