#include "triclub/properties.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>

namespace triclub {

const char* variant_name(variant v) {
    switch (v) {
        case variant::club: return "club";
        case variant::vertex_triangle: return "vt";
        case variant::edge_triangle: return "et";
        case variant::seeded: return "seeded";
    }
    return "?";
}

void problem_spec::validate(const graph& g) const {
    if (s < 1) throw std::invalid_argument("diameter bound s must be >= 1");
    if (k < 1) throw std::invalid_argument("target size k must be >= 1");
    const bool triangle = var == variant::vertex_triangle || var == variant::edge_triangle;
    if (triangle && ell < 1)
        throw std::invalid_argument("triangle threshold l must be >= 1 for triangle variants");
    if (!triangle && ell != 0)
        throw std::invalid_argument("triangle threshold given for a non-triangle variant");
    if (var == variant::seeded) {
        if (seeds.empty()) throw std::invalid_argument("seeded variant requires a non-empty seed set");
        for (int w : seeds.ids())
            if (w < 0 || w >= g.vertex_count())
                throw std::invalid_argument("seed vertex " + std::to_string(w) + " out of range");
    } else if (!seeds.empty()) {
        throw std::invalid_argument("seed set given for a non-seeded variant");
    }
}

bool is_s_club(const graph& g, const vertex_set& s_set, int s) {
    if (s_set.empty()) throw std::invalid_argument("empty vertex set");
    if (s < 1) throw std::invalid_argument("diameter bound s must be >= 1");
    auto d = diameter(g, &s_set);
    return d.has_value() && *d <= s;
}

bool verify_vertex_triangle_club(const graph& g, const vertex_set& s_set, int s, int ell) {
    if (s_set.empty()) throw std::invalid_argument("empty vertex set");
    if (ell < 1) throw std::invalid_argument("triangle threshold must be >= 1");
    if (!is_s_club(g, s_set, s)) return false;
    std::vector<int> counts = vertex_triangle_counts(g, &s_set);
    for (int v : s_set.ids())
        if (counts[v] < ell) return false;
    return true;
}

std::pair<bool, edge_set> verify_edge_triangle_club(const graph& g, const vertex_set& s_set,
                                                    int s, int ell) {
    if (s_set.empty()) throw std::invalid_argument("empty vertex set");
    if (ell < 1) throw std::invalid_argument("triangle threshold must be >= 1");
    if (s < 1) throw std::invalid_argument("diameter bound s must be >= 1");
    if (s_set.size() == 1) return {true, edge_set{}};
    edge_set f = truss_peel(g, ell, &s_set);
    auto d = diameter(g, &s_set, &f);
    if (d.has_value() && *d <= s) return {true, std::move(f)};
    return {false, edge_set{}};
}

bool verify_seeded_club(const graph& g, const vertex_set& s_set, int s, const vertex_set& seeds) {
    if (s_set.empty() || seeds.empty()) throw std::invalid_argument("empty vertex set");
    if (!seeds.is_subset_of(s_set)) return false;
    return is_s_club(g, s_set, s);
}

bool verify_certificate(const graph& g, const problem_spec& spec, const certificate& cert) {
    switch (spec.var) {
        case variant::club: return is_s_club(g, cert.members, spec.s);
        case variant::vertex_triangle:
            return verify_vertex_triangle_club(g, cert.members, spec.s, spec.ell);
        case variant::edge_triangle:
            return verify_edge_triangle_club(g, cert.members, spec.s, spec.ell).first;
        case variant::seeded: return verify_seeded_club(g, cert.members, spec.s, spec.seeds);
    }
    return false;
}

namespace {

// Number of d-subsets, saturating at limit+1 to avoid overflow.
long long subset_count_capped(int n, int d, long long limit) {
    long long c = 1;
    for (int i = 1; i <= d; ++i) {
        c = c * (n - d + i) / i;
        if (c > limit) return limit + 1;
    }
    return c;
}

bool deletion_ok(const graph& g, const vertex_set& members, const std::vector<std::pair<int, int>>& kept,
                 int bound) {
    edge_set remaining{std::vector<std::pair<int, int>>(kept)};
    auto d = diameter(g, &members, &remaining);
    return d.has_value() && *d <= bound;
}

}  // namespace

bool robustness_check(const graph& g, const certificate& cert, int s, int ell, int budget,
                      const robustness_options& opt) {
    if (budget < 0 || budget > ell)
        throw std::invalid_argument("deletion budget must lie in [0, l]");
    auto [ok, f] = verify_edge_triangle_club(g, cert.members, s, ell);
    if (!ok) throw std::invalid_argument("robustness check requires a verified edge-triangle certificate");
    if (budget == 0) return true;  // diameter already <= s

    const auto& all = f.pairs();
    const int m = static_cast<int>(all.size());
    const int d = std::min(budget, m);
    if (d == 0) return true;  // singleton certificate, nothing to delete
    const int bound = std::min(s + budget, 2 * s);

    auto check_subset = [&](const std::vector<int>& drop) {
        std::vector<std::pair<int, int>> kept;
        kept.reserve(m - d);
        std::vector<char> dead(m, 0);
        for (int idx : drop) dead[idx] = 1;
        for (int e = 0; e < m; ++e)
            if (!dead[e]) kept.push_back(all[e]);
        return deletion_ok(g, cert.members, kept, bound);
    };

    if (subset_count_capped(m, d, opt.exhaustive_limit) <= opt.exhaustive_limit) {
        std::vector<int> idx(d);
        for (int i = 0; i < d; ++i) idx[i] = i;
        while (true) {
            if (!check_subset(idx)) return false;
            int i = d - 1;
            while (i >= 0 && idx[i] == m - d + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < d; ++j) idx[j] = idx[j - 1] + 1;
        }
        return true;
    }

    std::mt19937_64 rng(opt.rng_seed);
    std::vector<int> pool(m);
    for (int i = 0; i < m; ++i) pool[i] = i;
    for (int trial = 0; trial < opt.samples; ++trial) {
        // partial Fisher-Yates draw of d distinct edge indices
        for (int i = 0; i < d; ++i) {
            int j = i + static_cast<int>(rng() % static_cast<std::uint64_t>(m - i));
            std::swap(pool[i], pool[j]);
        }
        std::vector<int> drop(pool.begin(), pool.begin() + d);
        if (!check_subset(drop)) return false;
    }
    return true;
}

}  // namespace triclub
