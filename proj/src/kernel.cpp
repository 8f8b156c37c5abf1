#include "triclub/kernel.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <stdexcept>
#include <string>

namespace triclub {

namespace {

graph drop_vertices(const graph& g, const std::vector<char>& alive) {
    std::vector<std::pair<int, int>> kept;
    for (int u = 0; u < g.vertex_count(); ++u) {
        if (!alive[u]) continue;
        for (int v : g.neighbors(u))
            if (u < v && alive[v]) kept.emplace_back(u, v);
    }
    return graph::build(g.vertex_count(), kept);
}

vertex_set alive_set(const std::vector<char>& alive) {
    std::vector<int> ids;
    for (int v = 0; v < static_cast<int>(alive.size()); ++v)
        if (alive[v]) ids.push_back(v);
    return vertex_set(std::move(ids));
}

bool is_clique(const graph& g, const vertex_set& w) {
    const auto& ids = w.ids();
    for (size_t i = 0; i < ids.size(); ++i)
        for (size_t j = i + 1; j < ids.size(); ++j)
            if (!g.has_edge(ids[i], ids[j])) return false;
    return true;
}

// k^e capped so bound comparisons never overflow.
long long capped_pow(long long k, int e, long long cap = 1LL << 60) {
    long long r = 1;
    for (int i = 0; i < e; ++i) {
        if (r > cap / std::max<long long>(k, 1)) return cap;
        r *= k;
    }
    return std::min(r, cap);
}

}  // namespace

reduction_result rr1_vertex_triangle_prune(const graph& g) {
    const int n = g.vertex_count();
    std::vector<char> alive(n, 1);
    kernel_trace trace;
    vertex_set mask = vertex_set::all(n);
    while (true) {
        std::vector<int> counts = vertex_triangle_counts(g, &mask);
        std::vector<int> gone;
        for (int v : mask.ids())
            if (counts[v] == 0) gone.push_back(v);
        if (gone.empty()) break;
        ++trace.rounds;
        for (int v : gone) {
            alive[v] = 0;
            trace.removed_vertices.push_back(v);
        }
        mask = alive_set(alive);
        if (mask.empty()) break;
    }
    return {drop_vertices(g, alive), alive_set(alive), std::move(trace)};
}

reduction_result rr2_edge_triangle_prune(const graph& g) {
    const int n = g.vertex_count();
    kernel_trace trace;
    std::vector<std::pair<int, int>> cur = g.edge_list();
    while (true) {
        graph h = graph::build(n, cur);
        std::vector<edge_count> counts = edge_triangle_counts(h);
        std::vector<std::pair<int, int>> kept;
        for (const auto& ec : counts) {
            if (ec.count >= 1)
                kept.emplace_back(ec.u, ec.v);
            else
                trace.removed_edges.emplace_back(ec.u, ec.v);
        }
        if (kept.size() == cur.size()) break;
        ++trace.rounds;
        cur = std::move(kept);
    }
    graph reduced = graph::build(n, cur);
    for (int v = 0; v < n; ++v)
        if (g.degree(v) > 0 && reduced.degree(v) == 0) trace.isolated_vertices.push_back(v);
    return {std::move(reduced), vertex_set::all(n), std::move(trace)};
}

reduction_result rr3_seed_distance_prune(const graph& g, const vertex_set& seeds, int s) {
    if (seeds.empty()) throw std::invalid_argument("rr3 requires a non-empty seed set");
    if (s < 1) throw std::invalid_argument("rr3 requires s >= 1");
    const int n = g.vertex_count();
    for (int w : seeds.ids())
        if (w < 0 || w >= n) throw std::invalid_argument("seed vertex out of range");
    std::vector<char> alive(n, 1);
    kernel_trace trace;
    while (!trace.infeasible) {
        vertex_set mask = alive_set(alive);
        std::vector<char> gone(n, 0);
        for (int w : seeds.ids()) {
            std::vector<int> dist = bfs_distances(g, w, &mask);
            for (int v : mask.ids())
                if (dist[v] == unreachable_dist || dist[v] >= s + 1) gone[v] = 1;
        }
        std::vector<int> removed;
        for (int v : mask.ids())
            if (gone[v]) removed.push_back(v);
        if (removed.empty()) break;
        ++trace.rounds;
        for (int v : removed) {
            alive[v] = 0;
            trace.removed_vertices.push_back(v);
            if (seeds.contains(v)) trace.infeasible = true;
        }
    }
    return {drop_vertices(g, alive), alive_set(alive), std::move(trace)};
}

std::optional<certificate> vt_shortcut(const graph& reduced, const vertex_set& alive, int k, int s) {
    if (s < 4) throw std::invalid_argument("vertex-triangle shortcut needs s >= 4");
    if (alive.empty()) return std::nullopt;
    const int radius = s / 2 - 1;
    for (int v : alive.ids()) {
        std::vector<int> dist = bfs_distances(reduced, v, &alive);
        std::vector<int> ball;
        for (int u : alive.ids())
            if (dist[u] != unreachable_dist && dist[u] <= radius) ball.push_back(u);
        if (static_cast<int>(ball.size()) < k) continue;

        // expand every boundary vertex with two triangle partners
        std::vector<int> members = ball;
        for (int w : ball) {
            if (dist[w] != radius) continue;
            bool found = false;
            const auto& nb = reduced.neighbors(w);
            for (size_t i = 0; i < nb.size() && !found; ++i) {
                if (!alive.contains(nb[i])) continue;
                for (size_t j = i + 1; j < nb.size() && !found; ++j) {
                    if (!alive.contains(nb[j])) continue;
                    if (reduced.has_edge(nb[i], nb[j])) {
                        members.push_back(nb[i]);
                        members.push_back(nb[j]);
                        found = true;
                    }
                }
            }
            if (!found)
                throw std::logic_error("triangle-free vertex survived the vertex-triangle rule");
        }
        return certificate{vertex_set(std::move(members)), std::nullopt};
    }
    return std::nullopt;
}

std::optional<certificate> et_shortcut(const graph& reduced, const vertex_set& alive, int k, int s) {
    if (s < 2) throw std::invalid_argument("edge-triangle shortcut needs s >= 2");
    const int radius = s / 2;
    for (int v : alive.ids()) {
        if (k >= 2 && reduced.degree(v) == 0) continue;  // isolated: size-1 solutions only
        std::vector<int> dist = bfs_distances(reduced, v, &alive);
        std::vector<int> ball;
        for (int u : alive.ids())
            if (dist[u] != unreachable_dist && dist[u] <= radius) ball.push_back(u);
        if (static_cast<int>(ball.size()) < k) continue;
        vertex_set members(std::move(ball));
        edge_set witness = truss_peel(reduced, 1, &members);
        return certificate{std::move(members), std::move(witness)};
    }
    return std::nullopt;
}

namespace {

// Multi-source BFS from the seed set within the alive mask.
std::vector<int> seed_distances(const graph& g, const vertex_set& alive, const vertex_set& seeds,
                                std::vector<int>* parent = nullptr) {
    const int n = g.vertex_count();
    std::vector<int> dist(n, unreachable_dist);
    if (parent != nullptr) parent->assign(n, -1);
    std::queue<int> q;
    for (int w : seeds.ids()) {
        dist[w] = 0;
        q.push(w);
    }
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : g.neighbors(u)) {
            if (!alive.contains(v) || dist[v] != unreachable_dist) continue;
            dist[v] = dist[u] + 1;
            if (parent != nullptr) (*parent)[v] = u;
            q.push(v);
        }
    }
    return dist;
}

}  // namespace

std::optional<seeded_shortcut_result> seeded_shortcut(const graph& reduced, const vertex_set& alive,
                                                      const vertex_set& seeds, int k, int s) {
    if (seeds.empty()) throw std::invalid_argument("seeded shortcut requires seeds");
    if (!seeds.is_subset_of(alive))
        throw std::invalid_argument("seeded shortcut requires all seeds alive");
    if (!is_clique(reduced, seeds))
        throw std::invalid_argument("seeded shortcut requires a clique seed");

    if (seeds.size() >= k)
        return seeded_shortcut_result{certificate{seeds, std::nullopt}, seeded_case::whole_seed};

    if (s == 2) {
        for (int w : seeds.ids()) {
            std::vector<int> ball = {w};
            for (int u : reduced.neighbors(w))
                if (alive.contains(u)) ball.push_back(u);
            if (static_cast<int>(ball.size()) >= k) {
                std::vector<int> members = ball;
                for (int w2 : seeds.ids()) members.push_back(w2);  // clique seed lies inside N[w]
                return seeded_shortcut_result{certificate{vertex_set(std::move(members)), std::nullopt},
                                              seeded_case::seed_neighborhood};
            }
        }
    }

    std::vector<int> parent;
    std::vector<int> dist_w = seed_distances(reduced, alive, seeds, &parent);

    if (s >= 3) {
        const int t = (s + 1) / 2 - 1;
        std::vector<int> near;
        for (int u : alive.ids())
            if (dist_w[u] != unreachable_dist && dist_w[u] <= t) near.push_back(u);
        if (static_cast<int>(near.size()) >= k)
            return seeded_shortcut_result{certificate{vertex_set(std::move(near)), std::nullopt},
                                          seeded_case::seed_ball};

        for (int v : near) {
            std::vector<int> dv = bfs_distances(reduced, v, &alive);
            std::vector<int> ball;
            for (int u : alive.ids())
                if (dv[u] != unreachable_dist && dv[u] <= s / 2) ball.push_back(u);
            if (static_cast<int>(ball.size()) < k) continue;
            std::vector<int> members = ball;
            for (int w : seeds.ids()) members.push_back(w);
            for (int q = v; q != -1 && dist_w[q] > 0; q = parent[q]) members.push_back(q);
            return seeded_shortcut_result{certificate{vertex_set(std::move(members)), std::nullopt},
                                          seeded_case::hub_ball};
        }
    }

    // distance-s shell: group by the per-seed predecessor tuple
    const long long threshold = capped_pow(k, 2 * seeds.size() + 1);
    std::vector<int> shell;
    for (int u : alive.ids())
        if (dist_w[u] == s) shell.push_back(u);
    if (static_cast<long long>(shell.size()) >= threshold) {
        std::vector<std::vector<int>> per_seed_dist;
        std::vector<std::vector<int>> per_seed_parent;
        for (int w : seeds.ids()) {
            std::vector<int> par;
            per_seed_dist.push_back(
                seed_distances(reduced, alive, vertex_set({w}), &par));
            per_seed_parent.push_back(std::move(par));
        }
        std::map<std::vector<int>, std::vector<int>> groups;
        for (int p : shell) {
            std::vector<int> tuple;
            bool ok = true;
            for (size_t i = 0; i < seeds.ids().size(); ++i) {
                int pick = -1;
                for (int u : reduced.neighbors(p)) {
                    if (alive.contains(u) && per_seed_dist[i][u] == s - 1) {
                        pick = u;
                        break;  // neighbors are sorted: smallest id
                    }
                }
                if (pick < 0) {
                    ok = false;  // p is not at exact distance s from this seed
                    break;
                }
                tuple.push_back(pick);
            }
            if (ok) groups[tuple].push_back(p);
        }
        for (const auto& [tuple, members_at_s] : groups) {
            if (static_cast<int>(members_at_s.size()) < k) continue;
            std::vector<int> members = members_at_s;
            for (int w : seeds.ids()) members.push_back(w);
            for (size_t i = 0; i < tuple.size(); ++i) {
                for (int q = tuple[i]; q != -1 && per_seed_dist[i][q] > 0; q = per_seed_parent[i][q])
                    members.push_back(q);
            }
            return seeded_shortcut_result{certificate{vertex_set(std::move(members)), std::nullopt},
                                          seeded_case::pigeonhole};
        }
    }
    return std::nullopt;
}

turing_decomposition turing_subinstances(const graph& g, const problem_spec& spec) {
    spec.validate(g);
    turing_decomposition out;
    const int s = spec.s;
    const int k = spec.k;

    switch (spec.var) {
        case variant::club:
            throw std::invalid_argument(
                "plain s-club has no kernel theorem in this toolkit; use the solver directly");
        case variant::vertex_triangle: {
            if (spec.ell != 1)
                throw std::invalid_argument(
                    "vertex-triangle Turing kernel requires l=1; the problem is W[1]-hard for l>=2");
            if (s < 4)
                throw std::invalid_argument(
                    "vertex-triangle Turing kernel requires s>=4; the problem is W[1]-hard for s in {2,3} with l=1");
            auto red = rr1_vertex_triangle_prune(g);
            out.reduced = red.reduced;
            out.alive = red.alive;
            out.trace = std::move(red.trace);
            out.shortcut = vt_shortcut(out.reduced, out.alive, k, s);
            if (out.shortcut.has_value()) {
                out.trace.shortcut_witness = out.shortcut;
                return out;
            }
            long long bound;
            if (s == 4 || s == 7)
                bound = capped_pow(k, 4);
            else if (s == 5)
                bound = capped_pow(k, 5);
            else
                bound = capped_pow(k, 3);  // s == 6 or s >= 8
            for (int v : out.alive.ids()) {
                vertex_set uni = neighborhood(out.reduced, vertex_set({v}), s, true, &out.alive);
                if (uni.size() > bound)
                    throw std::logic_error("vertex-triangle universe exceeds its theorem bound");
                out.subinstances.push_back({v, {}, std::move(uni), bound});
            }
            return out;
        }
        case variant::edge_triangle: {
            if (spec.ell != 1)
                throw std::invalid_argument(
                    "edge-triangle Turing kernel requires l=1; the problem is W[1]-hard for l>=2");
            if (s < 2)
                throw std::invalid_argument("edge-triangle Turing kernel requires s >= 2");
            auto red = rr2_edge_triangle_prune(g);
            out.reduced = red.reduced;
            out.alive = red.alive;
            out.trace = std::move(red.trace);
            out.shortcut = et_shortcut(out.reduced, out.alive, k, s);
            if (out.shortcut.has_value()) {
                out.trace.shortcut_witness = out.shortcut;
                return out;
            }
            const long long bound = s % 2 == 0 ? capped_pow(k, 2) : capped_pow(k, 3);
            for (int v : out.alive.ids()) {
                vertex_set uni = neighborhood(out.reduced, vertex_set({v}), s, true, &out.alive);
                if (uni.size() > bound)
                    throw std::logic_error("edge-triangle universe exceeds its theorem bound");
                out.subinstances.push_back({v, {}, std::move(uni), bound});
            }
            return out;
        }
        case variant::seeded: {
            if (!is_clique(g, spec.seeds))
                throw std::invalid_argument(
                    "seeded kernel requires a clique seed; non-clique seeds are W[1]-hard cases");
            auto red = rr3_seed_distance_prune(g, spec.seeds, s);
            out.reduced = red.reduced;
            out.alive = red.alive;
            out.trace = std::move(red.trace);
            if (out.trace.infeasible) return out;
            auto sc = seeded_shortcut(out.reduced, out.alive, spec.seeds, k, s);
            if (sc.has_value()) {
                out.shortcut = sc->cert;
                out.trace.shortcut_witness = out.shortcut;
                return out;
            }
            long long bound = capped_pow(k, 2) + capped_pow(k, 2 * spec.seeds.size() + 1);
            if (spec.seeds.size() < k && out.alive.size() > bound)
                throw std::logic_error("seeded kernel exceeds its theorem bound");
            out.subinstances.push_back({std::nullopt, spec.seeds, out.alive, bound});
            return out;
        }
    }
    throw std::logic_error("unhandled variant");
}

}  // namespace triclub
