#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <stdexcept>

#include "oracles.hpp"
#include "triclub/generators.hpp"
#include "triclub/properties.hpp"

using namespace triclub;

namespace {

// Two K4s {0..3} and {4..7} joined by the single edge 3-4.
graph two_k4_one_edge() { return oracles::two_k4_bridge(); }

vertex_set random_subset(const graph& g, std::uint64_t seed, int min_size) {
    std::mt19937_64 rng(seed);
    std::vector<int> ids;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (rng() % 2 == 0) ids.push_back(v);
    int want = std::max(min_size, 1);
    for (int v = 0; static_cast<int>(ids.size()) < want && v < g.vertex_count(); ++v) ids.push_back(v);
    return vertex_set(std::move(ids));
}

}  // namespace

TEST_CASE("is_s_club") {
    CHECK(is_s_club(oracles::complete(4), vertex_set::all(4), 1));
    CHECK_FALSE(is_s_club(oracles::path(4), vertex_set::all(4), 2));
    CHECK(is_s_club(oracles::star(4), vertex_set::all(5), 2));
    CHECK(is_s_club(oracles::path(4), vertex_set({2}), 1));
    CHECK_THROWS_AS(is_s_club(oracles::path(4), vertex_set{}, 2), std::invalid_argument);
}

TEST_CASE("verify_vertex_triangle_club") {
    CHECK(verify_vertex_triangle_club(two_k4_one_edge(), vertex_set::all(8), 3, 3));
    CHECK_FALSE(verify_vertex_triangle_club(two_k4_one_edge(), vertex_set::all(8), 2, 3));
    CHECK(verify_vertex_triangle_club(oracles::complete(4), vertex_set::all(4), 1, 3));
    CHECK_FALSE(verify_vertex_triangle_club(oracles::complete(4), vertex_set({0}), 2, 1));
}

TEST_CASE("verify_edge_triangle_club") {
    auto [bad, none] = verify_edge_triangle_club(oracles::two_k4_bridge(), vertex_set::all(8), 7, 1);
    CHECK_FALSE(bad);  // the bridge peels away and the halves separate

    auto [good, f] = verify_edge_triangle_club(oracles::complete(4), vertex_set::all(4), 1, 2);
    CHECK(good);
    CHECK(f.size() == 6);

    auto [single, empty_f] = verify_edge_triangle_club(oracles::complete(4), vertex_set({2}), 1, 5);
    CHECK(single);
    CHECK(empty_f.empty());

    auto [pair_ok, pf] = verify_edge_triangle_club(oracles::complete(4), vertex_set({0, 1}), 3, 1);
    CHECK_FALSE(pair_ok);  // a lone edge lies in no triangle, so the pair separates
}

TEST_CASE("verify_seeded_club") {
    CHECK(verify_seeded_club(oracles::complete(4), vertex_set::all(4), 1, vertex_set({1, 2})));
    CHECK_FALSE(verify_seeded_club(oracles::complete(4), vertex_set({0, 1}), 1, vertex_set({2})));
    CHECK(verify_seeded_club(oracles::path(3), vertex_set::all(3), 2, vertex_set({0, 2})));
    CHECK_THROWS_AS(verify_seeded_club(oracles::path(3), vertex_set::all(3), 2, vertex_set{}),
                    std::invalid_argument);
}

TEST_CASE("edge property implies vertex property") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        graph g = gen_random_gnp(10, 0.5, 5000 + seed);
        vertex_set members = random_subset(g, seed, 3);
        if (members.size() < 3) continue;
        for (int s = 2; s <= 3; ++s)
            for (int ell = 1; ell <= 2; ++ell) {
                auto [et, f] = verify_edge_triangle_club(g, members, s, ell);
                if (et) CHECK(verify_vertex_triangle_club(g, members, s, ell));
            }
    }
}

TEST_CASE("edge verifier agrees with the exhaustive edge-subset oracle") {
    int tested = 0;
    for (std::uint64_t seed = 0; seed < 120 && tested < 25; ++seed) {
        graph g = gen_random_gnp(8, 0.4, 6000 + seed);
        vertex_set members = random_subset(g, seed * 31 + 5, 3);
        int inner_edges = 0;
        for (const auto& [u, v] : g.edge_list())
            if (members.contains(u) && members.contains(v)) ++inner_edges;
        if (inner_edges > 14) continue;
        ++tested;
        for (int s = 2; s <= 3; ++s)
            for (int ell = 1; ell <= 2; ++ell) {
                bool lib = verify_edge_triangle_club(g, members, s, ell).first;
                bool oracle = oracles::brute_edge_triangle_club(g, members, s, ell);
                CHECK(lib == oracle);
            }
    }
    CHECK(tested >= 20);
}

TEST_CASE("verifiers are monotone in s") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        graph g = gen_random_gnp(9, 0.45, 7000 + seed);
        vertex_set members = random_subset(g, seed * 17 + 3, 2);
        vertex_set seeds({members.ids().front()});
        for (int s = 1; s <= 4; ++s) {
            if (is_s_club(g, members, s)) CHECK(is_s_club(g, members, s + 1));
            if (verify_vertex_triangle_club(g, members, s, 1))
                CHECK(verify_vertex_triangle_club(g, members, s + 1, 1));
            if (verify_edge_triangle_club(g, members, s, 1).first)
                CHECK(verify_edge_triangle_club(g, members, s + 1, 1).first);
            if (verify_seeded_club(g, members, s, seeds))
                CHECK(verify_seeded_club(g, members, s + 1, seeds));
        }
    }
}

TEST_CASE("robustness_check on the K4 certificate") {
    graph k4 = oracles::complete(4);
    certificate cert{vertex_set::all(4), std::nullopt};
    // exhaustive over all C(6,2)=15 deletion pairs, bound min(1+2, 2) = 2
    CHECK(robustness_check(k4, cert, 1, 2, 2));
    CHECK(robustness_check(k4, cert, 1, 2, 0));
    CHECK_THROWS_AS(robustness_check(k4, cert, 1, 2, 3), std::invalid_argument);

    certificate bogus{vertex_set({0, 1}), std::nullopt};
    CHECK_THROWS_AS(robustness_check(k4, bogus, 1, 2, 1), std::invalid_argument);
}

TEST_CASE("robustness_check with budget l never fails on verified certificates") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        graph g = gen_random_gnp(10, 0.6, 8000 + seed);
        vertex_set members = random_subset(g, seed * 13 + 1, 4);
        for (int s = 2; s <= 3; ++s)
            for (int ell = 1; ell <= 2; ++ell) {
                auto [ok, f] = verify_edge_triangle_club(g, members, s, ell);
                if (!ok) continue;
                certificate cert{members, f};
                CHECK(robustness_check(g, cert, s, ell, ell));
            }
    }
}

TEST_CASE("robustness_check sampling path is deterministic") {
    graph k14 = oracles::complete(14);
    certificate cert{vertex_set::all(14), std::nullopt};
    // C(91, 3) = 121485 deletion sets exceeds the exhaustive limit
    robustness_options opt;
    opt.rng_seed = 42;
    CHECK(robustness_check(k14, cert, 1, 3, 3, opt));
    CHECK(robustness_check(k14, cert, 1, 3, 3, opt));
}
