#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "triclub/graph.hpp"

namespace triclub {

// Default seed for every randomized fallback (documented in the README and
// in --help); wall-clock entropy is never used.
inline constexpr std::uint64_t default_rng_seed = 0x5eedc1ab;

enum class variant { club, vertex_triangle, edge_triangle, seeded };

const char* variant_name(variant v);

struct problem_spec {
    variant var = variant::club;
    int s = 1;        // diameter bound, >= 1
    int ell = 0;      // triangle threshold, >= 1 for triangle variants
    int k = 1;        // target solution size, >= 1
    vertex_set seeds; // non-empty iff var == seeded

    // Throws on inconsistent combinations (e.g. seeds given for a triangle
    // variant, ell missing for a triangle variant, seed id out of range).
    void validate(const graph& g) const;
};

struct certificate {
    vertex_set members;
    std::optional<edge_set> witness_edges;  // edge variant spanning subgraph
};

// diameter(G[S]) <= s; a single vertex qualifies. Empty S is rejected.
bool is_s_club(const graph& g, const vertex_set& s_set, int s);

// s-club in which every member lies in >= ell triangles of G[S].
bool verify_vertex_triangle_club(const graph& g, const vertex_set& s_set, int s, int ell);

// Peels G[S] to the maximal spanning subgraph whose edges all lie in >= ell
// of its triangles, then checks that subgraph's diameter. Returns the witness
// edge set on success. A singleton passes vacuously with an empty witness.
std::pair<bool, edge_set> verify_edge_triangle_club(const graph& g, const vertex_set& s_set,
                                                    int s, int ell);

// W <= S and S is an s-club.
bool verify_seeded_club(const graph& g, const vertex_set& s_set, int s, const vertex_set& seeds);

// Dispatches on spec.var; ignores spec.k (size checks belong to the caller).
bool verify_certificate(const graph& g, const problem_spec& spec, const certificate& cert);

struct robustness_options {
    std::uint64_t rng_seed = default_rng_seed;
    long long exhaustive_limit = 100000;  // max deletion sets enumerated exhaustively
    int samples = 1000;                   // sampled deletion sets beyond that
};

// Checks that after deleting up to `budget` edges from the certificate's
// witness subgraph, the diameter stays <= min(s + budget, 2s). Exhaustive when
// the number of deletion sets is small, deterministic sampling otherwise.
// The certificate must verify as an edge-ell-triangle s-club.
bool robustness_check(const graph& g, const certificate& cert, int s, int ell, int budget,
                      const robustness_options& opt = {});

}  // namespace triclub
