#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "triclub/properties.hpp"

namespace triclub {

struct kernel_trace {
    std::vector<int> removed_vertices;
    std::vector<std::pair<int, int>> removed_edges;
    std::vector<int> isolated_vertices;  // left in place by the edge rule
    std::optional<certificate> shortcut_witness;
    bool infeasible = false;
    int rounds = 0;  // rounds that removed something
};

struct reduction_result {
    graph reduced;      // same id space; removed vertices keep no edges
    vertex_set alive;   // surviving vertices
    kernel_trace trace;
};

// Delete vertices in no triangle, to a fixpoint.
reduction_result rr1_vertex_triangle_prune(const graph& g);

// Delete edges in no triangle, to a fixpoint; isolated vertices stay.
reduction_result rr2_edge_triangle_prune(const graph& g);

// Delete vertices at distance >= s+1 from any seed, to a fixpoint. Removing a
// seed marks the instance infeasible instead of erroring.
reduction_result rr3_seed_distance_prune(const graph& g, const vertex_set& seeds, int s);

// Yes-instance witness for the vertex variant with l=1, s >= 4, after rr1:
// a vertex whose closed (floor(s/2)-1)-ball has >= k vertices yields the ball
// plus two triangle partners for every boundary vertex.
std::optional<certificate> vt_shortcut(const graph& reduced, const vertex_set& alive, int k, int s);

// Yes-instance witness for the edge variant with l=1 after rr2: a closed
// floor(s/2)-ball of size >= k, paired with its peeled edge set. Isolated
// vertices are skipped for k >= 2.
std::optional<certificate> et_shortcut(const graph& reduced, const vertex_set& alive, int k, int s);

enum class seeded_case {
    whole_seed,     // |W| >= k: the clique seed itself qualifies
    seed_neighborhood,  // s = 2: some closed N[w] with w in W has >= k vertices
    seed_ball,      // s >= 3: the closed ball of W at radius floor((s+1)/2)-1
    hub_ball,       // s >= 3: a vertex near W whose floor(s/2)-ball is large
    pigeonhole      // the distance-s shell is huge; common-neighbor witness
};

struct seeded_shortcut_result {
    certificate cert;
    seeded_case which;
};

// Requires a clique seed and an rr3-reduced graph with all seeds alive.
std::optional<seeded_shortcut_result> seeded_shortcut(const graph& reduced, const vertex_set& alive,
                                                      const vertex_set& seeds, int k, int s);

struct turing_subinstance {
    std::optional<int> center;  // absent for the seeded variant
    vertex_set seed_center;     // the seed set, seeded variant only
    vertex_set universe;        // closed s-neighborhood of the center
    long long bound = 0;        // theorem size bound for this combination
};

struct turing_decomposition {
    graph reduced;
    vertex_set alive;
    kernel_trace trace;
    std::optional<certificate> shortcut;
    std::vector<turing_subinstance> subinstances;
};

// Applies the matching reduction rule, tries the matching shortcut, and
// otherwise decomposes into per-vertex universes (single universe for the
// seeded variant). Rejects combinations with no kernel theorem; a universe
// exceeding its bound is an internal error.
turing_decomposition turing_subinstances(const graph& g, const problem_spec& spec);

}  // namespace triclub
