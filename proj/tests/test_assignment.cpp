#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "agcvg/assignment.hpp"
#include "agcvg/bcd.hpp"
#include "agcvg/errors.hpp"
#include "helpers.hpp"

using namespace agcvg;

TEST_CASE("min-cost matching equals the brute-force optimum") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> dim(1, 7);
    for (int trial = 0; trial < 80; ++trial) {
        const auto c = testutil::random_costs(rng, dim(rng), dim(rng), true);
        const Assignment a = min_cost_matching(c);
        CHECK(a.total_cost == testutil::oracle_min_cost(c));
        CHECK(static_cast<int>(a.pairs.size()) == std::min(c.left_size, c.right_size));
        // pairs index into the original orientation
        for (const auto& [i, j] : a.pairs) {
            CHECK(i >= 0);
            CHECK(i < c.left_size);
            CHECK(j >= 0);
            CHECK(j < c.right_size);
        }
    }
}

TEST_CASE("min-cost matching handles non-integer costs") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> dim(2, 6);
    for (int trial = 0; trial < 40; ++trial) {
        const auto c = testutil::random_costs(rng, dim(rng), dim(rng), false);
        const Assignment a = min_cost_matching(c);
        CHECK(a.total_cost == doctest::Approx(testutil::oracle_min_cost(c)).epsilon(1e-12));
    }
}

TEST_CASE("bottleneck matching minimizes the largest edge") {
    std::mt19937 rng(13);
    std::uniform_int_distribution<int> dim(1, 7);
    for (int trial = 0; trial < 80; ++trial) {
        const auto c = testutil::random_costs(rng, dim(rng), dim(rng), true);
        const Assignment a = bottleneck_matching(c);
        CHECK(a.max_edge_cost == testutil::oracle_min_max_edge(c));
        CHECK(static_cast<int>(a.pairs.size()) == std::min(c.left_size, c.right_size));
        for (const auto& [i, j] : a.pairs) CHECK(c.at(i, j) <= a.max_edge_cost);
    }
}

TEST_CASE("matchings stay consistent under transposition") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 30; ++trial) {
        const auto c = testutil::random_costs(rng, 3, 6, true);
        BipartiteCosts t;
        t.left_size = c.right_size;
        t.right_size = c.left_size;
        t.cost.resize(c.cost.size());
        for (int i = 0; i < c.left_size; ++i)
            for (int j = 0; j < c.right_size; ++j)
                t.cost[static_cast<std::size_t>(j) * t.right_size + i] = c.at(i, j);
        CHECK(min_cost_matching(c).total_cost == min_cost_matching(t).total_cost);
        CHECK(bottleneck_matching(c).max_edge_cost == bottleneck_matching(t).max_edge_cost);
    }
}

TEST_CASE("degenerate and invalid cost matrices") {
    BipartiteCosts one;
    one.left_size = one.right_size = 1;
    one.cost = {42.0};
    const Assignment a = min_cost_matching(one);
    CHECK(a.total_cost == 42.0);
    CHECK(a.max_edge_cost == 42.0);
    REQUIRE(a.pairs.size() == 1);

    BipartiteCosts bad;
    bad.left_size = 2;
    bad.right_size = 2;
    bad.cost = {1.0, 2.0, 3.0};  // wrong size
    CHECK_THROWS_AS(min_cost_matching(bad), ValidationError);

    bad.cost = {1.0, -2.0, 3.0, 4.0};  // negative
    CHECK_THROWS_AS(min_cost_matching(bad), ValidationError);

    BipartiteCosts empty;
    CHECK_THROWS_AS(min_cost_matching(empty), ValidationError);
}

TEST_CASE("waypoint cost downsampling keeps endpoints") {
    CoveragePath a;
    a.role = Role::aerial;
    for (int i = 0; i < 8; ++i) a.waypoints.push_back({static_cast<double>(i), 0.0});
    a.segment_transit.assign(7, 0);
    CoveragePath g;
    g.role = Role::ground;
    for (int i = 0; i < 4; ++i) g.waypoints.push_back({static_cast<double>(i), 1.0});
    g.segment_transit.assign(3, 0);

    const BipartiteCosts c = build_waypoint_costs(a, g);
    CHECK(c.left_size == 4);
    CHECK(c.right_size == 4);
    CHECK(std::string(c.unit) == "m");
    // aerial samples land on waypoints {0, 2, 5, 7}; ground keeps all four
    CHECK(c.at(0, 0) == doctest::Approx(1.0));                     // (0,0) vs (0,1)
    CHECK(c.at(3, 3) == doctest::Approx(std::hypot(4.0, 1.0)));    // (7,0) vs (3,1)
    CHECK(c.at(1, 2) == doctest::Approx(1.0));                     // (2,0) vs (2,1)
}

TEST_CASE("rendezvous bound modes") {
    CoveragePath a;
    a.role = Role::aerial;
    a.waypoints = {{0.0, 0.0}, {0.0, 4.0}, {2.0, 4.0}};
    a.segment_transit.assign(2, 0);
    CoveragePath g;
    g.role = Role::ground;
    g.waypoints = {{0.0, 0.0}, {2.0, 0.0}};
    g.segment_transit.assign(1, 0);

    // farthest aerial waypoint from the ground set is (0,4): distance 4
    CHECK(rendezvous_bound(a, g, 2.0, TmaxMode::nearest) == doctest::Approx(2.0));
    // matching-based bounds pair each sampled waypoint with a distinct one
    CHECK(rendezvous_bound(a, g, 2.0, TmaxMode::bottleneck) >= 2.0);
    CHECK(rendezvous_bound(a, g, 2.0, TmaxMode::min_cost_max_edge) >=
          rendezvous_bound(a, g, 2.0, TmaxMode::nearest));
    CHECK_THROWS_AS(rendezvous_bound(a, g, 0.0, TmaxMode::nearest), ValidationError);
}

TEST_CASE("cluster matching picks nearby pairs") {
    // two aerial clusters, two ground clusters, obvious pairing by distance
    PathCluster a0{0, Role::aerial, {{0, 5}, {1, 5}}, {0}, 1.0};
    PathCluster a1{1, Role::aerial, {{10, 5}, {11, 5}}, {0}, 1.0};
    PathCluster g0{0, Role::ground, {{0, 0}, {1, 0}}, {0}, 1.0};
    PathCluster g1{1, Role::ground, {{10, 0}, {11, 0}}, {0}, 1.0};
    const Assignment m = match_clusters({a0, a1}, {g0, g1}, 2.0);
    REQUIRE(m.pairs.size() == 2);
    for (const auto& [ai, gi] : m.pairs) CHECK(ai == gi);
    CHECK(std::string(build_cluster_costs({a0}, {g0}, 2.0).unit) == "s");
    // min-of-four terminal pairing, in seconds at nu_a = 2
    CHECK(build_cluster_costs({a0}, {g0}, 2.0).at(0, 0) == doctest::Approx(2.5));
}
