#include "triclub/generators.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <random>
#include <stdexcept>
#include <tuple>

namespace triclub {

namespace {

using label_key = std::tuple<std::string, int, int, int>;

// Lookup from a role label back to the vertex id carrying it. Built from the
// layout table, so wiring rules depend only on the labels.
struct label_index {
    std::map<label_key, int> ids;

    static label_index build(const std::vector<role_label>& labels) {
        label_index idx;
        for (size_t v = 0; v < labels.size(); ++v) {
            const role_label& l = labels[v];
            auto [it, fresh] = idx.ids.emplace(label_key{l.tag, l.owner, l.i, l.j}, static_cast<int>(v));
            if (!fresh) throw std::logic_error("duplicate layout label");
        }
        return idx;
    }

    int at(const std::string& tag, int owner, int i = -1, int j = -1) const {
        auto it = ids.find(label_key{tag, owner, i, j});
        if (it == ids.end()) throw std::logic_error("layout lookup miss: " + tag);
        return it->second;
    }
};

std::vector<std::pair<int, int>> wire_vt2(const graph& source, int ell, const label_index& idx) {
    const int n = source.vertex_count();
    const int c = smallest_clique_order(ell);
    std::vector<std::pair<int, int>> e;
    auto xv = [&](int v, int i) { return idx.at("T", v, i); };
    auto y = [&](int i) { return idx.at("Y", -1, i); };
    for (int v = 0; v < n; ++v)
        for (int i = 1; i <= c; ++i)
            for (int j = i + 1; j <= c; ++j) e.emplace_back(xv(v, i), xv(v, j));
    for (int i = 1; i <= c; ++i)
        for (int j = i + 1; j <= c; ++j) e.emplace_back(y(i), y(j));
    for (const auto& [v, w] : source.edge_list())
        for (int i = 1; 2 * i <= c; ++i) {
            e.emplace_back(xv(v, 2 * i - 1), xv(w, 2 * i));
            e.emplace_back(xv(w, 2 * i - 1), xv(v, 2 * i));
        }
    for (int v = 0; v < n; ++v)
        for (int i = 1; i <= c; ++i) e.emplace_back(xv(v, i), y(i));
    return e;
}

std::vector<std::pair<int, int>> wire_vts(const graph& source, int ell, int s, const label_index& idx) {
    const int n = source.vertex_count();
    const int s_star = (s - 1) / 2;
    std::vector<std::pair<int, int>> e;
    auto p = [&](int v, int i) { return idx.at("p", v, i); };
    auto q = [&](int v, int i) { return idx.at("q", v, i); };
    auto x = [&](int v, int j, int i) { return idx.at("x", v, j, i); };
    auto y = [&](int v, int t, int i) { return idx.at("y", v, t, i); };
    auto z = [&](int v, int t, int i) { return idx.at("z", v, t, i); };

    for (int v = 0; v < n; ++v) {
        for (int i = 1; i <= ell; ++i) e.emplace_back(p(v, i), q(v, i));
        for (int i = 1; i <= ell - 1; ++i)
            for (int j = 1; j <= ell; ++j) {
                e.emplace_back(p(v, i), x(v, 1, j));
                e.emplace_back(q(v, i), x(v, 1, j));
            }
        for (int j = 1; j <= ell; ++j) {
            e.emplace_back(p(v, ell), x(v, s_star, j));
            e.emplace_back(q(v, ell), x(v, s_star, j));
        }
        for (int t = 1; t <= s_star - 1; ++t)
            for (int i = 1; i <= ell; ++i) {
                e.emplace_back(y(v, t, i), z(v, t, i));
                e.emplace_back(y(v, t, i), x(v, t, i));
                e.emplace_back(z(v, t, i), x(v, t, i));
                for (int j = 1; j <= ell; ++j) {
                    if (j == i) continue;
                    e.emplace_back(y(v, t, i), x(v, t + 1, j));
                    e.emplace_back(z(v, t, i), x(v, t + 1, j));
                }
            }
    }
    for (const auto& [v, w] : source.edge_list()) {
        if (s % 2 == 1) {  // odd s
            for (int i = 1; i <= ell; ++i) {
                e.emplace_back(p(v, i), q(w, i));
                e.emplace_back(q(v, i), p(w, i));
            }
        } else if (ell >= 3) {  // even s, ell >= 3
            e.emplace_back(p(v, 1), q(w, 1));
            e.emplace_back(q(v, 1), p(w, 1));
            e.emplace_back(p(v, ell), q(w, ell));
            e.emplace_back(q(v, ell), p(w, ell));
        } else {  // even s, ell == 2
            e.emplace_back(p(v, 1), x(w, s_star, 1));
            e.emplace_back(p(w, 1), x(v, s_star, 1));
        }
    }
    return e;
}

std::vector<std::pair<int, int>> wire_et(const graph& source, int ell, int s, const label_index& idx) {
    const int n = source.vertex_count();
    const gadget_params gp = compute_gadget_params(ell, s);
    const int ring = gp.x + 1;  // ring indices live in [0, x], arithmetic wraps on x+1
    const int band = 3 * gp.ell_star;
    const int half = ell / 2;
    const bool odd = ell % 2 == 1;
    std::vector<std::pair<int, int>> e;
    auto wrap = [&](int i) { return ((i % ring) + ring) % ring; };
    auto a = [&](int v, int i) { return idx.at("A", v, wrap(i)); };
    auto b = [&](int v, int i) { return idx.at("B", v, wrap(i)); };
    auto c_exists = [&](int i) { return wrap(i) % gp.ell_star == 0; };
    auto c = [&](int v, int i) { return idx.at("C", v, wrap(i)); };

    for (int v = 0; v < n; ++v) {
        for (int i = 0; i <= gp.x; ++i) {
            for (int j = 1; j <= band; ++j) {
                e.emplace_back(a(v, i), a(v, i + j));
                e.emplace_back(b(v, i), b(v, i + j));
            }
            for (int j = -band; j <= band; ++j) e.emplace_back(a(v, i), b(v, i + j));
        }
        if (odd) {
            for (int i = 0; i <= gp.x; i += gp.ell_star) {
                for (int j = -band; j <= band; ++j) {
                    e.emplace_back(c(v, i), a(v, i + j));
                    e.emplace_back(c(v, i), b(v, i + j));
                    if (j != 0 && c_exists(i + j)) e.emplace_back(c(v, i), c(v, i + j));
                }
            }
        }
    }
    for (const auto& [u, v] : source.edge_list()) {
        for (int i = 0; i <= gp.x; ++i)
            for (int j = 0; j <= half; ++j) {
                e.emplace_back(a(v, i), b(u, i + j));
                e.emplace_back(a(u, i), b(v, i + j));
            }
        if (odd) {
            for (int i = 0; i <= gp.x; i += gp.ell_star)
                for (int j = 0; j <= half; ++j) {
                    e.emplace_back(c(v, i), b(u, i + j));
                    e.emplace_back(c(u, i), b(v, i + j));
                }
        }
    }
    return e;
}

std::vector<std::pair<int, int>> wire_seeded2(const graph& source, const graph& shape,
                                              const label_index& idx) {
    const int n = source.vertex_count();
    const int h = shape.vertex_count();
    int su = -1, sv = -1;  // first non-adjacent pair of the shape
    for (int i = 0; i < h && su < 0; ++i)
        for (int j = i + 1; j < h; ++j)
            if (!shape.has_edge(i, j)) {
                su = i;
                sv = j;
                break;
            }
    if (su < 0) throw std::invalid_argument("seed shape must contain two non-adjacent vertices");

    std::vector<std::pair<int, int>> e;
    auto seed = [&](int i) { return idx.at("seed", -1, i); };
    auto cu = [&](int x) { return idx.at("copy1", x); };
    auto cv = [&](int x) { return idx.at("copy2", x); };
    const int apex_p = idx.at("apex", -1, 0);
    const int apex_u = idx.at("apex", -1, 1);
    const int apex_v = idx.at("apex", -1, 2);

    for (const auto& [i, j] : shape.edge_list()) e.emplace_back(seed(i), seed(j));
    for (const auto& [x, y] : source.edge_list()) {
        e.emplace_back(cu(x), cu(y));
        e.emplace_back(cv(x), cv(y));
    }
    for (int x = 0; x < n; ++x) {
        e.emplace_back(seed(su), cu(x));
        e.emplace_back(seed(sv), cv(x));
        e.emplace_back(cu(x), cv(x));
        e.emplace_back(apex_u, cu(x));
        e.emplace_back(apex_v, cv(x));
    }
    for (int i = 0; i < h; ++i) e.emplace_back(apex_p, seed(i));
    e.emplace_back(apex_p, apex_u);
    e.emplace_back(apex_p, apex_v);
    for (int i = 0; i < h; ++i) {
        if (i == su || i == sv) continue;
        e.emplace_back(apex_u, seed(i));
        e.emplace_back(apex_v, seed(i));
    }
    return e;
}

std::vector<std::pair<int, int>> wire_seededs(const graph& source, const graph& shape, int s,
                                              const label_index& idx) {
    const int n = source.vertex_count();
    const int h = shape.vertex_count();
    // first component of the shape versus the rest
    std::vector<int> comp(h, -1);
    std::queue<int> bfs;
    bfs.push(0);
    comp[0] = 0;
    while (!bfs.empty()) {
        int u = bfs.front();
        bfs.pop();
        for (int v : shape.neighbors(u))
            if (comp[v] == -1) {
                comp[v] = 0;
                bfs.push(v);
            }
    }
    bool split = false;
    for (int i = 0; i < h; ++i)
        if (comp[i] == -1) split = true;
    if (!split) throw std::invalid_argument("seed shape must have at least two connected components");

    std::vector<std::pair<int, int>> e;
    auto seed = [&](int i) { return idx.at("seed", -1, i); };
    auto c1 = [&](int x) { return idx.at("copy1", x); };
    auto c2 = [&](int x) { return idx.at("copy2", x); };
    auto path = [&](int t) { return idx.at("path", -1, t); };
    auto link = [&](int x, int t) { return idx.at("link", x, t); };

    for (const auto& [i, j] : shape.edge_list()) e.emplace_back(seed(i), seed(j));
    for (const auto& [x, y] : source.edge_list()) {
        e.emplace_back(c1(x), c1(y));
        e.emplace_back(c2(x), c2(y));
    }
    for (int i = 0; i < h; ++i)
        for (int x = 0; x < n; ++x)
            e.emplace_back(seed(i), comp[i] == 0 ? c1(x) : c2(x));
    for (int t = 1; t <= s - 2; ++t) e.emplace_back(path(t), path(t + 1));
    for (int i = 0; i < h; ++i) {
        if (comp[i] == 0)
            e.emplace_back(path(1), seed(i));
        else
            e.emplace_back(path(s - 1), seed(i));
    }
    for (int x = 0; x < n; ++x) {
        e.emplace_back(c1(x), link(x, 1));
        for (int t = 1; t <= s - 3; ++t) e.emplace_back(link(x, t), link(x, t + 1));
        e.emplace_back(link(x, s - 2), c2(x));
    }
    return e;
}

}  // namespace

int smallest_clique_order(int ell) {
    if (ell < 1) throw std::invalid_argument("triangle threshold must be >= 1");
    int c = 3;
    while ((c - 1) * (c - 2) / 2 < ell) ++c;
    return c;
}

gadget_params compute_gadget_params(int ell, int s) {
    gadget_params gp;
    gp.c = smallest_clique_order(ell);
    gp.s_star = (s - 1) / 2;
    gp.ell_star = (ell + 1) / 2;
    gp.x = 6 * gp.ell_star * (s - 1) + ell / 2;
    return gp;
}

gadget_instance gen_vt2(const graph& source, int k, int ell) {
    if (k < 1 || ell < 1) throw std::invalid_argument("gen_vt2 needs k >= 1 and l >= 1");
    const int n = source.vertex_count();
    const int c = smallest_clique_order(ell);
    gadget_instance inst;
    inst.construction = "vt2";
    inst.source = source;
    inst.source_k = k;
    for (int v = 0; v < n; ++v)
        for (int i = 1; i <= c; ++i) inst.layout.push_back({"T", v, i, -1});
    for (int i = 1; i <= c; ++i) inst.layout.push_back({"Y", -1, i, -1});

    label_index idx = label_index::build(inst.layout);
    inst.g = graph::build(static_cast<int>(inst.layout.size()), wire_vt2(source, ell, idx));
    inst.k_prime = c * (k + 1);
    inst.spec = {variant::vertex_triangle, 2, ell, inst.k_prime, {}};
    return inst;
}

gadget_instance gen_vts(const graph& source, int k, int ell, int s) {
    if (k < 1) throw std::invalid_argument("gen_vts needs k >= 1");
    if (!((s == 3 && ell >= 1) || (s >= 4 && ell >= 2)))
        throw std::invalid_argument("gen_vts covers s=3 with l>=1 or s>=4 with l>=2");
    const int n = source.vertex_count();
    const int s_star = (s - 1) / 2;
    gadget_instance inst;
    inst.construction = "vts";
    inst.source = source;
    inst.source_k = k;
    for (int v = 0; v < n; ++v) {
        for (int i = 1; i <= ell; ++i) inst.layout.push_back({"p", v, i, -1});
        for (int i = 1; i <= ell; ++i) inst.layout.push_back({"q", v, i, -1});
        for (int j = 1; j <= s_star; ++j)
            for (int i = 1; i <= ell; ++i) inst.layout.push_back({"x", v, j, i});
        for (int t = 1; t <= s_star - 1; ++t)
            for (int i = 1; i <= ell; ++i) inst.layout.push_back({"y", v, t, i});
        for (int t = 1; t <= s_star - 1; ++t)
            for (int i = 1; i <= ell; ++i) inst.layout.push_back({"z", v, t, i});
    }
    label_index idx = label_index::build(inst.layout);
    inst.g = graph::build(static_cast<int>(inst.layout.size()), wire_vts(source, ell, s, idx));
    inst.k_prime = 3 * ell * k * s_star;
    inst.spec = {variant::vertex_triangle, s, ell, inst.k_prime, {}};
    return inst;
}

gadget_instance gen_et(const graph& source, int k, int ell, int s) {
    if (k < 3) throw std::invalid_argument("gen_et needs k >= 3");
    if (ell < 2) throw std::invalid_argument("gen_et covers l >= 2");
    if (s < 2) throw std::invalid_argument("gen_et needs s >= 2");
    const int n = source.vertex_count();
    const gadget_params gp = compute_gadget_params(ell, s);
    const bool odd = ell % 2 == 1;
    gadget_instance inst;
    inst.construction = "et";
    inst.source = source;
    inst.source_k = k;
    for (int v = 0; v < n; ++v) {
        for (int i = 0; i <= gp.x; ++i) inst.layout.push_back({"A", v, i, -1});
        for (int i = 0; i <= gp.x; ++i) inst.layout.push_back({"B", v, i, -1});
        if (odd)
            for (int i = 0; i <= gp.x; i += gp.ell_star) inst.layout.push_back({"C", v, i, -1});
    }
    label_index idx = label_index::build(inst.layout);
    inst.g = graph::build(static_cast<int>(inst.layout.size()), wire_et(source, ell, s, idx));
    const int ring = gp.x + 1;
    inst.k_prime = odd ? (2 * ring + (6 * s - 5)) * k : 2 * ring * k;
    inst.spec = {variant::edge_triangle, s, ell, inst.k_prime, {}};
    return inst;
}

gadget_instance gen_seeded2(const graph& source, int k, const graph& seed_shape) {
    if (k < 1) throw std::invalid_argument("gen_seeded2 needs k >= 1");
    const int n = source.vertex_count();
    const int h = seed_shape.vertex_count();
    gadget_instance inst;
    inst.construction = "seeded2";
    inst.source = source;
    inst.source_k = k;
    for (int i = 0; i < h; ++i) inst.layout.push_back({"seed", -1, i, -1});
    for (int x = 0; x < n; ++x) inst.layout.push_back({"copy1", x, -1, -1});
    for (int x = 0; x < n; ++x) inst.layout.push_back({"copy2", x, -1, -1});
    inst.layout.push_back({"apex", -1, 0, -1});
    inst.layout.push_back({"apex", -1, 1, -1});
    inst.layout.push_back({"apex", -1, 2, -1});

    label_index idx = label_index::build(inst.layout);
    inst.g = graph::build(static_cast<int>(inst.layout.size()), wire_seeded2(source, seed_shape, idx));
    inst.k_prime = 2 * k + h + 3;
    std::vector<int> seeds(h);
    for (int i = 0; i < h; ++i) seeds[i] = i;
    inst.spec = {variant::seeded, 2, 0, inst.k_prime, vertex_set(std::move(seeds))};
    return inst;
}

gadget_instance gen_seededs(const graph& source, int k, const graph& seed_shape, int s) {
    if (k < 1) throw std::invalid_argument("gen_seededs needs k >= 1");
    if (s < 3) throw std::invalid_argument("gen_seededs needs s >= 3");
    const int n = source.vertex_count();
    const int h = seed_shape.vertex_count();
    gadget_instance inst;
    inst.construction = "seededs";
    inst.source = source;
    inst.source_k = k;
    for (int i = 0; i < h; ++i) inst.layout.push_back({"seed", -1, i, -1});
    for (int x = 0; x < n; ++x) inst.layout.push_back({"copy1", x, -1, -1});
    for (int x = 0; x < n; ++x) inst.layout.push_back({"copy2", x, -1, -1});
    for (int t = 1; t <= s - 1; ++t) inst.layout.push_back({"path", -1, t, -1});
    for (int x = 0; x < n; ++x)
        for (int t = 1; t <= s - 2; ++t) inst.layout.push_back({"link", x, t, -1});

    label_index idx = label_index::build(inst.layout);
    inst.g = graph::build(static_cast<int>(inst.layout.size()), wire_seededs(source, seed_shape, s, idx));
    inst.k_prime = s * k + h + s - 1;
    std::vector<int> seeds(h);
    for (int i = 0; i < h; ++i) seeds[i] = i;
    inst.spec = {variant::seeded, s, 0, inst.k_prime, vertex_set(std::move(seeds))};
    return inst;
}

graph gen_random_gnp(int n, double p, std::uint64_t rng_seed) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("edge probability outside [0, 1]");
    std::mt19937_64 rng(rng_seed);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            double r = static_cast<double>(rng() >> 11) * 0x1.0p-53;
            if (r < p) edges.emplace_back(i, j);
        }
    return graph::build(n, edges);
}

std::vector<std::pair<int, int>> edges_from_layout(const gadget_instance& inst) {
    label_index idx = label_index::build(inst.layout);
    std::vector<std::pair<int, int>> e;
    if (inst.construction == "vt2") {
        e = wire_vt2(inst.source, inst.spec.ell, idx);
    } else if (inst.construction == "vts") {
        e = wire_vts(inst.source, inst.spec.ell, inst.spec.s, idx);
    } else if (inst.construction == "et") {
        e = wire_et(inst.source, inst.spec.ell, inst.spec.s, idx);
    } else if (inst.construction == "seeded2") {
        // the shape is recoverable from the seed labels and the instance edges
        std::vector<std::pair<int, int>> shape_edges;
        const int h = inst.spec.seeds.size();
        for (const auto& [u, v] : inst.g.edge_list())
            if (u < h && v < h) shape_edges.emplace_back(u, v);
        e = wire_seeded2(inst.source, graph::build(h, shape_edges), idx);
    } else if (inst.construction == "seededs") {
        std::vector<std::pair<int, int>> shape_edges;
        const int h = inst.spec.seeds.size();
        for (const auto& [u, v] : inst.g.edge_list())
            if (u < h && v < h) shape_edges.emplace_back(u, v);
        e = wire_seededs(inst.source, graph::build(h, shape_edges), inst.spec.s, idx);
    } else {
        throw std::invalid_argument("unknown construction: " + inst.construction);
    }
    for (auto& [u, v] : e)
        if (u > v) std::swap(u, v);
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
    return e;
}

}  // namespace triclub
