#pragma once

#include <optional>
#include <utility>
#include <vector>

namespace triclub {

// Sentinel for "no finite distance". Never compare a raw distance against a
// bound without checking for this value first.
inline constexpr int unreachable_dist = -1;

// Sorted set of vertex ids. Immutable after construction.
class vertex_set {
public:
    vertex_set() = default;
    explicit vertex_set(std::vector<int> ids);  // sorts and dedupes
    static vertex_set all(int n);

    bool contains(int v) const;
    int size() const { return static_cast<int>(ids_.size()); }
    bool empty() const { return ids_.empty(); }
    const std::vector<int>& ids() const { return ids_; }
    bool is_subset_of(const vertex_set& other) const;

    friend bool operator==(const vertex_set&, const vertex_set&) = default;

private:
    std::vector<int> ids_;
};

// Sorted set of undirected edges, each stored with the smaller endpoint first.
class edge_set {
public:
    edge_set() = default;
    explicit edge_set(std::vector<std::pair<int, int>> pairs);  // normalizes, sorts, dedupes

    bool contains(int u, int v) const;
    int size() const { return static_cast<int>(pairs_.size()); }
    bool empty() const { return pairs_.empty(); }
    const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }

    friend bool operator==(const edge_set&, const edge_set&) = default;

private:
    std::vector<std::pair<int, int>> pairs_;
};

// Immutable undirected simple graph over dense vertex ids 0..n-1.
class graph {
public:
    graph() = default;

    // Rejects self-loops and out-of-range endpoints; collapses duplicate pairs.
    static graph build(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return n_; }
    long long edge_count() const { return m_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    bool has_edge(int u, int v) const;
    std::vector<std::pair<int, int>> edge_list() const;

private:
    int n_ = 0;
    long long m_ = 0;
    std::vector<std::vector<int>> adj_;
};

// Single-source shortest paths in the induced (and optionally edge-restricted)
// subgraph. Vertices outside the mask report unreachable_dist.
std::vector<int> bfs_distances(const graph& g, int source,
                               const vertex_set* mask = nullptr,
                               const edge_set* edge_mask = nullptr);

// N_i(S) for closed=false (vertices at distance exactly i from S),
// N_i[S] for closed=true (distance at most i). Computed inside the mask.
vertex_set neighborhood(const graph& g, const vertex_set& from, int radius, bool closed,
                        const vertex_set* mask = nullptr);

// Max pairwise distance in the masked subgraph; nullopt when disconnected
// with at least two vertices; 0 for a single vertex. Empty mask is rejected.
std::optional<int> diameter(const graph& g, const vertex_set* mask = nullptr,
                            const edge_set* edge_mask = nullptr);

// Per-vertex count of triangles of the masked induced subgraph.
std::vector<int> vertex_triangle_counts(const graph& g, const vertex_set* mask = nullptr);

struct edge_count {
    int u = 0, v = 0;
    int count = 0;
};

// Per-edge common-neighbor counts within the masked / edge-restricted subgraph.
std::vector<edge_count> edge_triangle_counts(const graph& g, const vertex_set* mask = nullptr,
                                             const edge_set* edge_mask = nullptr);

// Unique edge-maximal set F inside the masked induced subgraph such that every
// edge of F lies in >= ell triangles of (mask, F). Worklist peeling; result is
// a fixpoint and independent of removal order.
edge_set truss_peel(const graph& g, int ell, const vertex_set* mask = nullptr);

struct induced_graph {
    graph g;
    std::vector<int> to_original;    // new id -> old id
    std::vector<int> from_original;  // old id -> new id, -1 when absent
};

induced_graph induced_subgraph(const graph& g, const vertex_set& members);

}  // namespace triclub
