#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "triclub/properties.hpp"

namespace triclub {

// Role of a generated vertex: which source vertex owns it (-1 for shared
// structures), which layer of the gadget it sits in, and its coordinates.
struct role_label {
    std::string tag;  // "T","Y","p","q","x","y","z","A","B","C","seed","copy1","copy2","path","link","apex"
    int owner = -1;   // source vertex id, or -1 for shared parts
    int i = -1;
    int j = -1;

    friend bool operator==(const role_label&, const role_label&) = default;
};

struct gadget_instance {
    graph g;
    int k_prime = 0;
    problem_spec spec;
    std::vector<role_label> layout;  // indexed by vertex id
    graph source;
    int source_k = 0;
    std::string construction;  // "vt2","vts","et","seeded2","seededs"
};

struct gadget_params {
    int c = 0;         // smallest clique order with C(c-1,2) >= ell
    int s_star = 0;    // floor((s-1)/2)
    int ell_star = 0;  // ceil(ell/2)
    int x = 0;         // 6*ell_star*(s-1) + floor(ell/2)
};

gadget_params compute_gadget_params(int ell, int s);
int smallest_clique_order(int ell);

// Vertex variant, s=2: one clique per source vertex plus a shared clique,
// wired by alternating connector edges for every source edge.
gadget_instance gen_vt2(const graph& source, int k, int ell);

// Vertex variant, s=3 with ell>=1 or s>=4 with ell>=2: cascading gadgets of
// exactly 3*ell*s_star vertices with case-dependent connector edges.
gadget_instance gen_vts(const graph& source, int k, int ell, int s);

// Edge variant, ell>=2: two rings of x+1 vertices per source vertex (plus a
// sparse third ring for odd ell) with banded intra-ring and cross-gadget edges.
gadget_instance gen_et(const graph& source, int k, int ell, int s);

// Seeded variant, s=2: seed wired isomorphic to a non-clique shape, two source
// copies cross-linked vertex-by-vertex, plus three apex vertices.
gadget_instance gen_seeded2(const graph& source, int k, const graph& seed_shape);

// Seeded variant, s>=3: seed shape with >=2 components split across two fully
// joined source copies, a bridging path, and one linking path per source vertex.
gadget_instance gen_seededs(const graph& source, int k, const graph& seed_shape, int s);

// Erdos-Renyi sample; identical output for identical seeds.
graph gen_random_gnp(int n, double p, std::uint64_t rng_seed);

// Re-derives the full edge set from the layout table alone; used to check
// that labels and wiring agree exactly.
std::vector<std::pair<int, int>> edges_from_layout(const gadget_instance& inst);

}  // namespace triclub
