#include "triclub/solve.hpp"

#include <algorithm>
#include <atomic>
#include <climits>
#include <stdexcept>
#include <thread>

namespace triclub {

namespace {

std::vector<int> mask_ids(const std::vector<char>& mask) {
    std::vector<int> ids;
    for (int v = 0; v < static_cast<int>(mask.size()); ++v)
        if (mask[v]) ids.push_back(v);
    return ids;
}

// One universe-local exact search. Works entirely in local vertex ids.
struct local_search {
    const graph* g = nullptr;
    variant var = variant::club;
    int s = 1;
    int ell = 0;
    std::vector<char> forced;
    bool decision = false;
    int target = 0;     // decision mode: stop at the first solution of this size
    int incumbent = 0;  // solutions must beat this size
    long long nodes = 0;
    bool found = false;
    bool stop = false;
    std::vector<int> best_members;                  // local ids
    std::vector<std::pair<int, int>> best_edges;    // edge variant witness at accept

    // reusable scratch
    std::vector<int> dist;
    std::vector<int> bfs_queue;
    std::vector<int> comp_label;
};

// BFS from src over the candidate's structure adjacency. For the edge variant
// the peeled adjacency is passed in; otherwise the graph adjacency filtered by
// the candidate mask is used. Returns distances in ls.dist.
void structure_bfs(local_search& ls, const std::vector<char>& cand,
                   const std::vector<std::vector<int>>* peeled_adj, int src) {
    const int n = ls.g->vertex_count();
    ls.dist.assign(n, unreachable_dist);
    ls.bfs_queue.clear();
    ls.dist[src] = 0;
    ls.bfs_queue.push_back(src);
    for (size_t head = 0; head < ls.bfs_queue.size(); ++head) {
        int u = ls.bfs_queue[head];
        const std::vector<int>& nbrs = peeled_adj != nullptr ? (*peeled_adj)[u] : ls.g->neighbors(u);
        for (int v : nbrs) {
            if (!cand[v] || ls.dist[v] != unreachable_dist) continue;
            ls.dist[v] = ls.dist[u] + 1;
            ls.bfs_queue.push_back(v);
        }
    }
}

// Peeled structure adjacency for the edge variant within the candidate.
std::vector<std::vector<int>> peel_structure(const local_search& ls, const std::vector<char>& cand) {
    vertex_set members(mask_ids(cand));
    edge_set f = truss_peel(*ls.g, ls.ell, &members);
    std::vector<std::vector<int>> adj(ls.g->vertex_count());
    for (const auto& [u, v] : f.pairs()) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    return adj;
}

void run_search(local_search& ls, std::vector<char> cand, int cnt) {
    if (ls.stop) return;
    ++ls.nodes;
    const graph& g = *ls.g;
    const int n = g.vertex_count();
    std::vector<std::vector<int>> peeled;
    bool use_peeled = ls.var == variant::edge_triangle;

    while (true) {
        if (ls.stop || cnt <= ls.incumbent) return;
        bool changed = false;

        if (ls.var == variant::vertex_triangle) {
            // candidates in fewer than ell triangles can never stay
            while (true) {
                vertex_set members(mask_ids(cand));
                std::vector<int> tric = vertex_triangle_counts(g, &members);
                bool removed = false;
                for (int v : members.ids()) {
                    if (tric[v] < ls.ell) {
                        if (ls.forced[v]) return;
                        cand[v] = 0;
                        --cnt;
                        removed = true;
                    }
                }
                if (!removed) break;
                changed = true;
                if (cnt <= ls.incumbent) return;
            }
        }

        if (use_peeled) {
            while (true) {
                peeled = peel_structure(ls, cand);
                if (cnt <= 1) break;
                bool removed = false;
                for (int v = 0; v < n; ++v) {
                    if (!cand[v] || !peeled[v].empty()) continue;
                    if (ls.forced[v]) return;
                    cand[v] = 0;
                    --cnt;
                    removed = true;
                }
                if (!removed) break;
                changed = true;
                if (cnt <= ls.incumbent) return;
            }
        }

        // every candidate must stay within distance s of every forced vertex
        for (int f = 0; f < n && cnt > ls.incumbent; ++f) {
            if (!ls.forced[f]) continue;
            if (!cand[f]) return;
            structure_bfs(ls, cand, use_peeled ? &peeled : nullptr, f);
            for (int v = 0; v < n; ++v) {
                if (!cand[v] || v == f) continue;
                if (ls.dist[v] == unreachable_dist || ls.dist[v] > ls.s) {
                    if (ls.forced[v]) return;
                    cand[v] = 0;
                    --cnt;
                    changed = true;
                }
            }
        }
        if (cnt <= ls.incumbent) return;
        if (changed) continue;

        // split into connected components of the structure
        ls.comp_label.assign(n, -1);
        int ncomp = 0;
        for (int v = 0; v < n; ++v) {
            if (!cand[v] || ls.comp_label[v] != -1) continue;
            structure_bfs(ls, cand, use_peeled ? &peeled : nullptr, v);
            for (int u = 0; u < n; ++u)
                if (cand[u] && ls.dist[u] != unreachable_dist) ls.comp_label[u] = ncomp;
            ++ncomp;
        }
        if (ncomp > 1) {
            int forced_comp = -1;
            bool forced_split = false;
            for (int v = 0; v < n; ++v) {
                if (!ls.forced[v]) continue;
                if (forced_comp == -1)
                    forced_comp = ls.comp_label[v];
                else if (forced_comp != ls.comp_label[v])
                    forced_split = true;
            }
            if (forced_split) return;
            for (int c = 0; c < ncomp; ++c) {
                if (forced_comp != -1 && c != forced_comp) continue;
                std::vector<char> sub(n, 0);
                int sub_cnt = 0;
                for (int v = 0; v < n; ++v)
                    if (cand[v] && ls.comp_label[v] == c) {
                        sub[v] = 1;
                        ++sub_cnt;
                    }
                if (sub_cnt > ls.incumbent) {
                    run_search(ls, std::move(sub), sub_cnt);
                    if (ls.stop) return;
                }
            }
            return;
        }

        // connected: one BFS per candidate gives reach counts, the diameter
        // and the farthest pair in a single pass
        int ecc = 0, far_a = -1, far_b = -1;
        std::vector<int> to_remove;
        for (int v = 0; v < n; ++v) {
            if (!cand[v]) continue;
            structure_bfs(ls, cand, use_peeled ? &peeled : nullptr, v);
            int reach = 0;
            for (int u = 0; u < n; ++u) {
                if (!cand[u]) continue;
                int d = ls.dist[u];
                if (d <= ls.s) ++reach;  // connected, so d is finite
                int a = std::min(u, v), b = std::max(u, v);
                if (d > ecc || (d == ecc && far_a != -1 &&
                                (a < far_a || (a == far_a && b < far_b)))) {
                    ecc = d;
                    far_a = a;
                    far_b = b;
                }
            }
            if (reach <= ls.incumbent) to_remove.push_back(v);
        }
        if (!to_remove.empty()) {
            for (int v : to_remove) {
                if (ls.forced[v]) return;
                cand[v] = 0;
                --cnt;
            }
            continue;
        }

        if (ecc <= ls.s) {
            ls.found = true;
            ls.best_members = mask_ids(cand);
            if (use_peeled) {
                ls.best_edges.clear();
                for (int u = 0; u < n; ++u)
                    for (int v : peeled[u])
                        if (u < v) ls.best_edges.emplace_back(u, v);
            }
            if (ls.decision)
                ls.stop = true;  // cnt > incumbent = target-1, so cnt >= target
            else
                ls.incumbent = cnt;
            return;
        }

        // far pair: no solution inside cand keeps both endpoints, so either
        // the first endpoint goes, or it is committed and the second goes
        auto deg = [&](int v) {
            if (use_peeled) return static_cast<int>(peeled[v].size());
            int d = 0;
            for (int u : g.neighbors(v))
                if (cand[u]) ++d;
            return d;
        };
        int first = deg(far_a) >= deg(far_b) ? far_a : far_b;
        int second = first == far_a ? far_b : far_a;
        if (!ls.forced[first]) {
            std::vector<char> child = cand;
            child[first] = 0;
            run_search(ls, std::move(child), cnt - 1);
            if (ls.stop) return;
        }
        if (!ls.forced[second]) {
            std::vector<char> child = cand;
            child[second] = 0;
            const bool was_forced = ls.forced[first];
            ls.forced[first] = 1;
            run_search(ls, std::move(child), cnt - 1);
            ls.forced[first] = was_forced;
            if (ls.stop) return;
        }
        return;
    }
}

struct preprocess_result {
    graph reduced;
    vertex_set alive;
    kernel_trace trace;
};

preprocess_result preprocess(const graph& g, const problem_spec& spec) {
    switch (spec.var) {
        case variant::club:
            return {g, vertex_set::all(g.vertex_count()), {}};
        case variant::vertex_triangle: {
            auto r = rr1_vertex_triangle_prune(g);
            return {std::move(r.reduced), std::move(r.alive), std::move(r.trace)};
        }
        case variant::edge_triangle: {
            auto r = rr2_edge_triangle_prune(g);
            if (spec.ell > 1) {
                // edges that cannot reach ell triangles anywhere in the graph
                // cannot appear in any witness subgraph either
                edge_set keep = truss_peel(g, spec.ell);
                r.reduced = graph::build(g.vertex_count(), keep.pairs());
            }
            return {std::move(r.reduced), std::move(r.alive), std::move(r.trace)};
        }
        case variant::seeded: {
            auto r = rr3_seed_distance_prune(g, spec.seeds, spec.s);
            return {std::move(r.reduced), std::move(r.alive), std::move(r.trace)};
        }
    }
    throw std::logic_error("unhandled variant");
}

std::optional<certificate> try_shortcut(const preprocess_result& pre, const problem_spec& spec) {
    switch (spec.var) {
        case variant::club:
            return std::nullopt;
        case variant::vertex_triangle:
            if (spec.ell == 1 && spec.s >= 4) return vt_shortcut(pre.reduced, pre.alive, spec.k, spec.s);
            return std::nullopt;
        case variant::edge_triangle:
            if (spec.ell == 1 && spec.s >= 2) return et_shortcut(pre.reduced, pre.alive, spec.k, spec.s);
            return std::nullopt;
        case variant::seeded: {
            const auto& ids = spec.seeds.ids();
            for (size_t i = 0; i < ids.size(); ++i)
                for (size_t j = i + 1; j < ids.size(); ++j)
                    if (!pre.reduced.has_edge(ids[i], ids[j])) return std::nullopt;
            auto r = seeded_shortcut(pre.reduced, pre.alive, spec.seeds, spec.k, spec.s);
            if (r.has_value()) return r->cert;
            return std::nullopt;
        }
    }
    return std::nullopt;
}

struct universe_task {
    int center = -1;          // global id; -1 for the seeded single universe
    vertex_set members;       // global ids
};

std::vector<universe_task> build_universes(const preprocess_result& pre, const problem_spec& spec) {
    std::vector<universe_task> tasks;
    if (spec.var == variant::seeded) {
        if (!pre.alive.empty()) tasks.push_back({-1, pre.alive});
        return tasks;
    }
    // every solution lies inside N_s[c] of its smallest member c, so later
    // universes may drop all earlier centers
    for (int c : pre.alive.ids()) {
        std::vector<int> dist = bfs_distances(pre.reduced, c, &pre.alive);
        std::vector<int> members;
        for (int u : pre.alive.ids())
            if (u >= c && dist[u] != unreachable_dist && dist[u] <= spec.s) members.push_back(u);
        tasks.push_back({c, vertex_set(std::move(members))});
    }
    return tasks;
}

struct universe_outcome {
    long long nodes = 0;
    int best_size = 0;
    std::vector<int> best_members;                // global ids
    bool executed = false;
};

universe_outcome run_universe(const preprocess_result& pre, const problem_spec& spec,
                              const universe_task& task, int start_incumbent, bool decision,
                              int target) {
    universe_outcome out;
    out.executed = true;
    if (task.members.size() <= start_incumbent) return out;

    induced_graph local = induced_subgraph(pre.reduced, task.members);
    local_search ls;
    ls.g = &local.g;
    ls.var = spec.var;
    ls.s = spec.s;
    ls.ell = spec.ell;
    ls.decision = decision;
    ls.target = target;
    ls.incumbent = start_incumbent;
    ls.forced.assign(local.g.vertex_count(), 0);
    if (spec.var == variant::seeded) {
        for (int w : spec.seeds.ids()) ls.forced[local.from_original[w]] = 1;
    } else {
        ls.forced[local.from_original[task.center]] = 1;
    }
    std::vector<char> cand(local.g.vertex_count(), 1);
    run_search(ls, std::move(cand), local.g.vertex_count());

    out.nodes = ls.nodes;
    if (ls.found) {
        out.best_size = static_cast<int>(ls.best_members.size());
        out.best_members.reserve(ls.best_members.size());
        for (int v : ls.best_members) out.best_members.push_back(local.to_original[v]);
        std::sort(out.best_members.begin(), out.best_members.end());
    }
    return out;
}

certificate finish_certificate(const preprocess_result& pre, const problem_spec& spec,
                               std::vector<int> members) {
    certificate cert;
    cert.members = vertex_set(std::move(members));
    if (spec.var == variant::edge_triangle)
        cert.witness_edges = truss_peel(pre.reduced, spec.ell, &cert.members);
    return cert;
}

int base_solution_size(const preprocess_result& pre, const problem_spec& spec) {
    // a single vertex is a valid club / edge-variant solution
    if (spec.var == variant::club || spec.var == variant::edge_triangle)
        return pre.alive.empty() ? 0 : 1;
    return 0;
}

}  // namespace

solve_result solve_max(const graph& g, const problem_spec& spec, const solve_options& opt) {
    spec.validate(g);
    solve_result res;
    preprocess_result pre = preprocess(g, spec);
    res.trace = pre.trace;
    if (res.trace.infeasible) return res;

    std::optional<certificate> shortcut = try_shortcut(pre, spec);
    res.used_shortcut = shortcut.has_value();
    if (shortcut.has_value()) res.trace.shortcut_witness = shortcut;

    const int base = base_solution_size(pre, spec);
    int seed_incumbent = std::max(base, shortcut ? shortcut->members.size() : 0);

    std::vector<universe_task> tasks = build_universes(pre, spec);
    std::vector<universe_outcome> outcomes(tasks.size());

    const int threads = std::max(1, opt.threads);
    if (threads == 1 || tasks.size() <= 1) {
        for (size_t i = 0; i < tasks.size(); ++i)
            outcomes[i] = run_universe(pre, spec, tasks[i], seed_incumbent, false, 0);
    } else {
        std::atomic<size_t> next{0};
        auto worker = [&] {
            while (true) {
                size_t i = next.fetch_add(1);
                if (i >= tasks.size()) break;
                outcomes[i] = run_universe(pre, spec, tasks[i], seed_incumbent, false, 0);
            }
        };
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    int best_size = seed_incumbent;
    for (size_t i = 0; i < tasks.size(); ++i) {
        res.nodes_explored += outcomes[i].nodes;
        res.per_subinstance.push_back({tasks[i].center, tasks[i].members.size(), outcomes[i].nodes,
                                       outcomes[i].best_size});
        best_size = std::max(best_size, outcomes[i].best_size);
    }
    res.optimum_size = best_size;
    if (best_size == 0) return res;

    if (shortcut.has_value() && shortcut->members.size() == best_size) {
        res.best = finish_certificate(pre, spec, shortcut->members.ids());
        return res;
    }
    for (size_t i = 0; i < tasks.size(); ++i) {
        if (outcomes[i].best_size == best_size) {
            res.best = finish_certificate(pre, spec, outcomes[i].best_members);
            return res;
        }
    }
    // base singleton: smallest alive vertex
    res.best = finish_certificate(pre, spec, {pre.alive.ids().front()});
    return res;
}

decision_result solve_decision(const graph& g, const problem_spec& spec, const solve_options& opt) {
    spec.validate(g);
    decision_result res;
    preprocess_result pre = preprocess(g, spec);
    res.trace = pre.trace;
    if (res.trace.infeasible) return res;

    std::optional<certificate> shortcut = try_shortcut(pre, spec);
    res.used_shortcut = shortcut.has_value();
    if (shortcut.has_value()) res.trace.shortcut_witness = shortcut;
    if (shortcut.has_value() && shortcut->members.size() >= spec.k) {
        res.yes = true;
        res.cert = finish_certificate(pre, spec, shortcut->members.ids());
        return res;
    }
    if (base_solution_size(pre, spec) >= spec.k) {
        res.yes = true;
        res.cert = finish_certificate(pre, spec, {pre.alive.ids().front()});
        return res;
    }

    std::vector<universe_task> tasks = build_universes(pre, spec);
    std::vector<universe_outcome> outcomes(tasks.size());
    const int threads = std::max(1, opt.threads);

    if (threads == 1 || tasks.size() <= 1) {
        for (size_t i = 0; i < tasks.size(); ++i) {
            outcomes[i] = run_universe(pre, spec, tasks[i], spec.k - 1, true, spec.k);
            res.nodes_explored += outcomes[i].nodes;
            if (outcomes[i].best_size >= spec.k) {
                res.yes = true;
                res.cert = finish_certificate(pre, spec, outcomes[i].best_members);
                return res;
            }
        }
        return res;
    }

    std::atomic<size_t> next{0};
    std::atomic<long long> first_yes{LLONG_MAX};
    auto worker = [&] {
        while (true) {
            size_t i = next.fetch_add(1);
            if (i >= tasks.size()) break;
            if (static_cast<long long>(i) > first_yes.load()) continue;
            outcomes[i] = run_universe(pre, spec, tasks[i], spec.k - 1, true, spec.k);
            if (outcomes[i].best_size >= spec.k) {
                long long cur = first_yes.load();
                while (static_cast<long long>(i) < cur &&
                       !first_yes.compare_exchange_weak(cur, static_cast<long long>(i))) {
                }
            }
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();

    long long yes_at = first_yes.load();
    for (size_t i = 0; i < tasks.size(); ++i) {
        if (static_cast<long long>(i) > yes_at) break;
        res.nodes_explored += outcomes[i].nodes;
    }
    if (yes_at != LLONG_MAX) {
        res.yes = true;
        res.cert = finish_certificate(pre, spec, outcomes[yes_at].best_members);
    }
    return res;
}

solve_result brute_force_max(const graph& g, const problem_spec& spec) {
    spec.validate(g);
    const int n = g.vertex_count();
    if (n > 20) throw std::invalid_argument("brute-force oracle is guarded to n <= 20");
    solve_result res;

    std::vector<int> pool;  // free vertices (all, or non-seeds for the seeded variant)
    for (int v = 0; v < n; ++v)
        if (spec.var != variant::seeded || !spec.seeds.contains(v)) pool.push_back(v);
    const int base = spec.var == variant::seeded ? spec.seeds.size() : 0;

    for (int size = n; size >= 1; --size) {
        int pick = size - base;
        if (pick < 0 || pick > static_cast<int>(pool.size())) continue;
        std::vector<int> idx(pick);
        for (int i = 0; i < pick; ++i) idx[i] = i;
        while (true) {
            std::vector<int> members;
            if (spec.var == variant::seeded) members = spec.seeds.ids();
            for (int i : idx) members.push_back(pool[i]);
            ++res.nodes_explored;
            certificate cand{vertex_set(std::move(members)), std::nullopt};
            bool ok;
            if (spec.var == variant::edge_triangle) {
                auto [good, f] = verify_edge_triangle_club(g, cand.members, spec.s, spec.ell);
                ok = good;
                if (good) cand.witness_edges = std::move(f);
            } else {
                ok = verify_certificate(g, spec, cand);
            }
            if (ok) {
                res.optimum_size = size;
                res.best = std::move(cand);
                return res;
            }
            int i = pick - 1;
            while (i >= 0 && idx[i] == static_cast<int>(pool.size()) - pick + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < pick; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return res;
}

clique_result clique_max(const graph& g) {
    const int n = g.vertex_count();
    if (n > 25) throw std::invalid_argument("clique oracle is guarded to n <= 25");
    clique_result best;
    std::vector<int> cur;
    std::vector<int> cand(n);
    for (int i = 0; i < n; ++i) cand[i] = i;

    // plain branch and bound over id-ordered candidates
    struct frame_solver {
        const graph& g;
        clique_result& best;
        void expand(std::vector<int>& cur, const std::vector<int>& cand) {
            if (static_cast<int>(cur.size()) > best.size) {
                best.size = static_cast<int>(cur.size());
                best.members = vertex_set(cur);
            }
            for (size_t i = 0; i < cand.size(); ++i) {
                if (static_cast<int>(cur.size() + cand.size() - i) <= best.size) return;
                int v = cand[i];
                std::vector<int> next;
                for (size_t j = i + 1; j < cand.size(); ++j)
                    if (g.has_edge(v, cand[j])) next.push_back(cand[j]);
                cur.push_back(v);
                expand(cur, next);
                cur.pop_back();
            }
        }
    } solver{g, best};
    solver.expand(cur, cand);
    return best;
}

}  // namespace triclub
