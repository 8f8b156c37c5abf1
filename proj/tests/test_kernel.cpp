#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <stdexcept>

#include "oracles.hpp"
#include "triclub/generators.hpp"
#include "triclub/kernel.hpp"
#include "triclub/solve.hpp"

using namespace triclub;

TEST_CASE("rr1 removes triangle-free vertices") {
    auto r = rr1_vertex_triangle_prune(oracles::path(3));
    CHECK(r.alive.empty());

    r = rr1_vertex_triangle_prune(oracles::complete(3));
    CHECK(r.alive.size() == 3);
    CHECK(r.trace.rounds == 0);

    graph k3_pendant = graph::build(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}});
    r = rr1_vertex_triangle_prune(k3_pendant);
    CHECK(r.alive == vertex_set({0, 1, 2}));
    CHECK(r.trace.removed_vertices == std::vector<int>{3});
    CHECK(r.trace.rounds == 1);
}

TEST_CASE("rr2 removes triangle-free edges and matches truss_peel") {
    auto r = rr2_edge_triangle_prune(oracles::path(5));
    CHECK(r.reduced.edge_count() == 0);
    CHECK(r.alive.size() == 5);

    r = rr2_edge_triangle_prune(oracles::two_k4_bridge());
    CHECK(r.reduced.edge_count() == 12);
    CHECK(r.trace.removed_edges == std::vector<std::pair<int, int>>{{3, 4}});

    r = rr2_edge_triangle_prune(oracles::complete(4));
    CHECK(r.reduced.edge_count() == 6);
    CHECK(r.trace.rounds == 0);

    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        graph g = gen_random_gnp(12, 0.3, 9000 + seed);
        auto rr = rr2_edge_triangle_prune(g);
        edge_set direct = truss_peel(g, 1);
        CHECK(edge_set(rr.reduced.edge_list()) == direct);
    }
}

TEST_CASE("rr3 prunes far vertices and flags infeasible seeds") {
    auto r = rr3_seed_distance_prune(oracles::path(4), vertex_set({0}), 2);
    CHECK(r.alive == vertex_set({0, 1, 2}));
    CHECK_FALSE(r.trace.infeasible);

    r = rr3_seed_distance_prune(oracles::complete(4), vertex_set({1, 2}), 2);
    CHECK(r.alive.size() == 4);
    CHECK(r.trace.rounds == 0);

    r = rr3_seed_distance_prune(oracles::path(5), vertex_set({0, 4}), 3);
    CHECK(r.trace.infeasible);
}

TEST_CASE("vt_shortcut fires on cliques and verifies") {
    for (int k = 3; k <= 6; ++k) {
        graph g = oracles::complete(k);
        auto red = rr1_vertex_triangle_prune(g);
        auto cert = vt_shortcut(red.reduced, red.alive, k, 4);
        REQUIRE(cert.has_value());
        CHECK(cert->members.size() >= k);
        CHECK(verify_vertex_triangle_club(g, cert->members, 4, 1));
    }
    CHECK_THROWS_AS(vt_shortcut(oracles::complete(3), vertex_set::all(3), 2, 3),
                    std::invalid_argument);
}

TEST_CASE("vt_shortcut returns nothing when all balls are small") {
    // two far-apart triangles: every closed 1-ball has 3 vertices
    graph g = graph::build(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    auto red = rr1_vertex_triangle_prune(g);
    CHECK_FALSE(vt_shortcut(red.reduced, red.alive, 4, 4).has_value());
}

TEST_CASE("vt_shortcut witnesses verify on random dense graphs") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        graph g = gen_random_gnp(25, 0.4, 10000 + seed);
        auto red = rr1_vertex_triangle_prune(g);
        if (red.alive.empty()) continue;
        for (int s = 4; s <= 6; ++s) {
            auto cert = vt_shortcut(red.reduced, red.alive, 6, s);
            if (!cert.has_value()) continue;
            CHECK(cert->members.size() >= 6);
            CHECK(verify_vertex_triangle_club(red.reduced, cert->members, s, 1));
        }
    }
}

TEST_CASE("et_shortcut fires on cliques and verifies") {
    for (int s = 2; s <= 5; ++s) {
        graph g = oracles::complete(5);
        auto red = rr2_edge_triangle_prune(g);
        auto cert = et_shortcut(red.reduced, red.alive, 5, s);
        REQUIRE(cert.has_value());
        CHECK(cert->members.size() == 5);
        CHECK(verify_edge_triangle_club(g, cert->members, s, 1).first);
    }
    // K2 reduces to nothing, so no ball can reach size 2
    auto red = rr2_edge_triangle_prune(oracles::path(2));
    CHECK_FALSE(et_shortcut(red.reduced, red.alive, 2, 2).has_value());
}

TEST_CASE("seeded_shortcut cases") {
    // case a: a star center with k-1 leaves
    graph st = oracles::star(5);
    auto red = rr3_seed_distance_prune(st, vertex_set({0}), 2);
    auto res = seeded_shortcut(red.reduced, red.alive, vertex_set({0}), 6, 2);
    REQUIRE(res.has_value());
    CHECK(res->which == seeded_case::seed_neighborhood);
    CHECK(res->cert.members.size() == 6);
    CHECK(verify_seeded_club(st, res->cert.members, 2, vertex_set({0})));

    // |W| >= k short-circuits to the seed itself
    graph k4 = oracles::complete(4);
    auto red2 = rr3_seed_distance_prune(k4, vertex_set({0, 1, 2}), 2);
    auto res2 = seeded_shortcut(red2.reduced, red2.alive, vertex_set({0, 1, 2}), 3, 2);
    REQUIRE(res2.has_value());
    CHECK(res2->which == seeded_case::whole_seed);

    // non-clique seeds are rejected
    graph p3 = oracles::path(3);
    CHECK_THROWS_AS(seeded_shortcut(p3, vertex_set::all(3), vertex_set({0, 2}), 2, 2),
                    std::invalid_argument);

    // every case fails: nothing comes back
    auto red3 = rr3_seed_distance_prune(oracles::path(3), vertex_set({0}), 2);
    CHECK_FALSE(seeded_shortcut(red3.reduced, red3.alive, vertex_set({0}), 5, 2).has_value());
}

TEST_CASE("seeded_shortcut pigeonhole with a two-seed clique") {
    // w1-w2 edge, one gate vertex per seed, two middle vertices adjacent to
    // both gates, and a huge exact-distance-3 shell hanging off the middles:
    // the near-seed balls stay below k, so only the tuple pigeonhole fires.
    const int k = 5, s = 3;
    std::vector<std::pair<int, int>> e;
    int w1 = 0, w2 = 1, a1 = 2, a2 = 3, b1 = 4, b2 = 5;
    e.insert(e.end(), {{w1, w2}, {w1, a1}, {w2, a2}, {a1, b1}, {a1, b2}, {a2, b1}, {a2, b2}});
    int next = 6;
    std::mt19937_64 rng(31337);
    const int shell = 3200;  // >= k^(2|W|+1) = 3125
    for (int i = 0; i < shell; ++i) {
        int c = next++;
        e.emplace_back(c, rng() % 2 == 0 ? b1 : b2);
        if (rng() % 4 == 0) e.emplace_back(c, rng() % 2 == 0 ? b1 : b2);
    }
    graph g = graph::build(next, e);
    vertex_set seeds({w1, w2});
    auto red = rr3_seed_distance_prune(g, seeds, s);
    REQUIRE_FALSE(red.trace.infeasible);
    auto res = seeded_shortcut(red.reduced, red.alive, seeds, k, s);
    REQUIRE(res.has_value());
    CHECK(res->which == seeded_case::pigeonhole);
    CHECK(res->cert.members.size() >= k);
    CHECK(verify_seeded_club(red.reduced, res->cert.members, s, seeds));
}

TEST_CASE("turing_subinstances bounds and rejections") {
    problem_spec et_spec{variant::edge_triangle, 2, 1, 3, {}};
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        graph g = gen_random_gnp(14, 0.25, 11000 + seed);
        auto dec = turing_subinstances(g, et_spec);
        if (dec.shortcut.has_value()) {
            CHECK(dec.shortcut->members.size() >= et_spec.k);
        } else {
            for (const auto& sub : dec.subinstances) CHECK(sub.universe.size() <= 9);
        }
    }

    problem_spec vt3{variant::vertex_triangle, 3, 1, 3, {}};
    CHECK_THROWS_AS(turing_subinstances(oracles::complete(4), vt3), std::invalid_argument);
    problem_spec vt_l2{variant::vertex_triangle, 5, 2, 3, {}};
    CHECK_THROWS_AS(turing_subinstances(oracles::complete(4), vt_l2), std::invalid_argument);
    problem_spec club{variant::club, 2, 0, 3, {}};
    CHECK_THROWS_AS(turing_subinstances(oracles::complete(4), club), std::invalid_argument);
    problem_spec nonclique{variant::seeded, 2, 0, 2, vertex_set({0, 2})};
    CHECK_THROWS_AS(turing_subinstances(oracles::path(3), nonclique), std::invalid_argument);
}

TEST_CASE("universe union preserves the optimum") {
    // the best solution over all subinstance universes equals the global optimum
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
        graph g = gen_random_gnp(10, 0.4, 12000 + seed);
        problem_spec spec{variant::edge_triangle, 2, 1, 2, {}};
        auto dec = turing_subinstances(g, spec);
        solve_result global = brute_force_max(g, spec);
        if (dec.shortcut.has_value()) {
            CHECK(global.optimum_size >= spec.k);
            continue;
        }
        int best = g.vertex_count() > 0 ? 1 : 0;
        for (const auto& sub : dec.subinstances) {
            if (sub.universe.empty()) continue;
            auto local = induced_subgraph(dec.reduced, sub.universe);
            solve_result r = brute_force_max(local.g, spec);
            best = std::max(best, r.optimum_size);
        }
        CHECK(best == global.optimum_size);
    }
}

TEST_CASE("reduction rules preserve the optimum") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 6 + static_cast<int>(rng() % 5);
        double p = 0.25 + 0.15 * static_cast<double>(rng() % 3);
        graph g = gen_random_gnp(n, p, 13000 + trial);

        problem_spec vt{variant::vertex_triangle, 2 + trial % 3, 1 + trial % 2, 1, {}};
        auto r1 = rr1_vertex_triangle_prune(g);
        CHECK(brute_force_max(g, vt).optimum_size == brute_force_max(r1.reduced, vt).optimum_size);

        problem_spec et{variant::edge_triangle, 2 + trial % 3, 1 + trial % 2, 1, {}};
        auto r2 = rr2_edge_triangle_prune(g);
        CHECK(brute_force_max(g, et).optimum_size == brute_force_max(r2.reduced, et).optimum_size);

        int w1 = static_cast<int>(rng() % n);
        problem_spec sd{variant::seeded, 2 + trial % 2, 0, 2, vertex_set({w1})};
        auto r3 = rr3_seed_distance_prune(g, sd.seeds, sd.s);
        int before = brute_force_max(g, sd).optimum_size;
        if (r3.trace.infeasible) {
            CHECK(before == 0);
        } else {
            auto masked = induced_subgraph(r3.reduced, r3.alive);
            problem_spec sd_local = sd;
            sd_local.seeds = vertex_set({masked.from_original[w1]});
            CHECK(before == brute_force_max(masked.g, sd_local).optimum_size);
        }
    }
}
