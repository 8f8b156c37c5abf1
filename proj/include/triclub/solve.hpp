#pragma once

#include <optional>
#include <vector>

#include "triclub/kernel.hpp"
#include "triclub/properties.hpp"

namespace triclub {

struct subinstance_stat {
    int center = -1;        // -1 for the seeded single universe
    int universe_size = 0;
    long long nodes = 0;
    int best_size = 0;      // best solution size found inside this universe
};

struct solve_options {
    int threads = 1;
};

struct solve_result {
    std::optional<certificate> best;
    int optimum_size = 0;
    long long nodes_explored = 0;
    bool used_shortcut = false;
    std::vector<subinstance_stat> per_subinstance;
    kernel_trace trace;
};

// Exact maximum-size solution for the spec's variant. Deterministic given
// (g, spec); independent of the thread count.
solve_result solve_max(const graph& g, const problem_spec& spec, const solve_options& opt = {});

struct decision_result {
    bool yes = false;
    std::optional<certificate> cert;
    long long nodes_explored = 0;
    bool used_shortcut = false;
    kernel_trace trace;
};

// True iff a solution of size >= spec.k exists; stops at the first witness.
decision_result solve_decision(const graph& g, const problem_spec& spec, const solve_options& opt = {});

// Desk-scale oracle: enumerates vertex subsets in decreasing size order and
// returns the first one the matching verifier accepts. Guarded to n <= 20.
solve_result brute_force_max(const graph& g, const problem_spec& spec);

struct clique_result {
    int size = 0;
    vertex_set members;
};

// Exact maximum clique, guarded to n <= 25.
clique_result clique_max(const graph& g);

}  // namespace triclub
