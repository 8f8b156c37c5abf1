#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>

#include "oracles.hpp"
#include "triclub/generators.hpp"
#include "triclub/graph.hpp"

using namespace triclub;

TEST_CASE("build_graph basics") {
    graph tri = graph::build(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(tri.vertex_count() == 3);
    CHECK(tri.edge_count() == 3);

    graph empty2 = graph::build(2, {});
    CHECK(empty2.edge_count() == 0);

    graph dup = graph::build(3, {{0, 1}, {0, 1}, {1, 2}});
    CHECK(dup.edge_count() == 2);

    graph swapped = graph::build(3, {{1, 0}, {2, 1}});
    CHECK(swapped.has_edge(0, 1));
    CHECK(swapped.has_edge(1, 2));

    CHECK_THROWS_AS(graph::build(3, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(graph::build(3, {{0, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(graph::build(2, {{-1, 0}}), std::invalid_argument);
}

TEST_CASE("adjacency invariants") {
    graph g = gen_random_gnp(30, 0.3, 7);
    long long total = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        total += g.degree(v);
        for (int u : g.neighbors(v)) CHECK(g.has_edge(u, v));
    }
    CHECK(total == 2 * g.edge_count());
}

TEST_CASE("bfs_distances examples") {
    graph p3 = oracles::path(3);
    auto d = bfs_distances(p3, 0);
    CHECK(d[2] == 2);

    graph two_edges = graph::build(4, {{0, 1}, {2, 3}});
    d = bfs_distances(two_edges, 0);
    CHECK(d[1] == 1);
    CHECK(d[2] == unreachable_dist);
    CHECK(d[3] == unreachable_dist);

    graph k4 = oracles::complete(4);
    std::vector<std::pair<int, int>> kept;
    for (const auto& e : k4.edge_list())
        if (e != std::make_pair(0, 1)) kept.push_back(e);
    edge_set mask{kept};
    d = bfs_distances(k4, 0, nullptr, &mask);
    CHECK(d[1] == 2);  // forced through a common neighbor

    vertex_set sub({1, 2});
    CHECK_THROWS_AS(bfs_distances(k4, 0, &sub), std::invalid_argument);
}

TEST_CASE("bfs agrees with Floyd-Warshall") {
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        graph g = gen_random_gnp(10 + 8 * static_cast<int>(seed), 0.15, 100 + seed);
        auto fw = oracles::floyd_warshall(g);
        for (int v = 0; v < g.vertex_count(); ++v) {
            auto d = bfs_distances(g, v);
            CHECK(d == fw[v]);
        }
    }
}

TEST_CASE("neighborhood") {
    graph p4 = oracles::path(4);
    CHECK(neighborhood(p4, vertex_set({0}), 2, true) == vertex_set({0, 1, 2}));
    CHECK(neighborhood(p4, vertex_set({0}), 0, true) == vertex_set({0}));
    CHECK(neighborhood(p4, vertex_set({0}), 2, false) == vertex_set({2}));

    graph k4 = oracles::complete(4);
    CHECK(neighborhood(k4, vertex_set({1}), 1, false) == vertex_set({0, 2, 3}));
}

TEST_CASE("diameter") {
    CHECK(diameter(oracles::complete(5)) == 1);
    CHECK(diameter(oracles::path(4)) == 3);

    graph two_triangles = graph::build(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    CHECK_FALSE(diameter(two_triangles).has_value());

    vertex_set one({2});
    CHECK(diameter(two_triangles, &one) == 0);
    vertex_set none;
    CHECK_THROWS_AS(diameter(two_triangles, &none), std::invalid_argument);
}

TEST_CASE("diameter matches max bfs distance and detects disconnection") {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        graph g = gen_random_gnp(12, 0.2, 400 + seed);
        auto d = diameter(g);
        auto fw = oracles::floyd_warshall(g);
        int mx = 0;
        bool disconnected = false;
        for (int u = 0; u < 12; ++u)
            for (int v = 0; v < 12; ++v) {
                if (fw[u][v] == unreachable_dist)
                    disconnected = true;
                else
                    mx = std::max(mx, fw[u][v]);
            }
        if (disconnected)
            CHECK_FALSE(d.has_value());
        else
            CHECK(d == mx);
    }
}

TEST_CASE("vertex_triangle_counts") {
    auto all_equal = [](const std::vector<int>& v, int x) {
        return std::all_of(v.begin(), v.end(), [&](int c) { return c == x; });
    };
    CHECK(all_equal(vertex_triangle_counts(oracles::complete(3)), 1));
    CHECK(all_equal(vertex_triangle_counts(oracles::complete(4)), 3));
    CHECK(all_equal(vertex_triangle_counts(oracles::star(4)), 0));

    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        graph g = gen_random_gnp(20, 0.3, 900 + seed);
        vertex_set members = vertex_set::all(20);
        CHECK(vertex_triangle_counts(g) == oracles::naive_vertex_triangles(g, members));
    }
}

TEST_CASE("edge_triangle_counts") {
    for (const auto& ec : edge_triangle_counts(oracles::complete(3))) CHECK(ec.count == 1);
    for (const auto& ec : edge_triangle_counts(oracles::complete(4))) CHECK(ec.count == 2);

    graph bridged = oracles::two_k4_bridge();
    for (const auto& ec : edge_triangle_counts(bridged))
        if (ec.u == 3 && ec.v == 4) CHECK(ec.count == 0);

    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        graph g = gen_random_gnp(25, 0.25, 1300 + seed);
        vertex_set members = vertex_set::all(25);
        for (const auto& ec : edge_triangle_counts(g))
            CHECK(ec.count == oracles::naive_edge_triangles(g, ec.u, ec.v, members));
    }
}

TEST_CASE("truss_peel examples") {
    CHECK(truss_peel(oracles::complete(4), 2).size() == 6);
    CHECK(truss_peel(oracles::complete(3), 2).empty());

    edge_set f = truss_peel(oracles::two_k4_bridge(), 1);
    CHECK(f.size() == 12);
    CHECK_FALSE(f.contains(3, 4));

    CHECK_THROWS_AS(truss_peel(oracles::complete(3), 0), std::invalid_argument);
}

TEST_CASE("truss_peel is a fixpoint") {
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        graph g = gen_random_gnp(14, 0.35, 2000 + seed);
        for (int ell = 1; ell <= 2; ++ell) {
            edge_set f = truss_peel(g, ell);
            graph restricted = graph::build(g.vertex_count(), f.pairs());
            CHECK(truss_peel(restricted, ell) == f);
        }
    }
}

TEST_CASE("truss_peel maximality against all edge subsets") {
    int tested = 0;
    for (std::uint64_t seed = 0; tested < 3 && seed < 40; ++seed) {
        graph g = gen_random_gnp(7, 0.55, 3100 + seed);
        if (g.edge_count() > 14 || g.edge_count() < 6) continue;
        ++tested;
        auto all = g.edge_list();
        const int m = static_cast<int>(all.size());
        for (int ell = 1; ell <= 2; ++ell) {
            edge_set peeled = truss_peel(g, ell);
            for (long long bits = 0; bits < (1LL << m); ++bits) {
                std::vector<std::pair<int, int>> subset;
                for (int e = 0; e < m; ++e)
                    if (bits & (1LL << e)) subset.push_back(all[e]);
                if (subset.empty() || !oracles::edge_subset_self_supporting(subset, ell)) continue;
                for (const auto& [u, v] : subset) CHECK(peeled.contains(u, v));
            }
        }
    }
    CHECK(tested == 3);
}

TEST_CASE("induced_subgraph") {
    graph k5 = oracles::complete(5);
    auto sub = induced_subgraph(k5, vertex_set({0, 2, 4}));
    CHECK(sub.g.vertex_count() == 3);
    CHECK(sub.g.edge_count() == 3);
    CHECK(sub.to_original == std::vector<int>{0, 2, 4});

    auto whole = induced_subgraph(k5, vertex_set::all(5));
    CHECK(whole.g.edge_count() == 10);
    for (int v = 0; v < 5; ++v) CHECK(whole.from_original[v] == v);

    graph p3 = oracles::path(3);
    auto ends = induced_subgraph(p3, vertex_set({0, 2}));
    CHECK(ends.g.edge_count() == 0);

    CHECK_THROWS_AS(induced_subgraph(k5, vertex_set{}), std::invalid_argument);
}
