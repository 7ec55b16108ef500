#include <doctest.h>

#include "gem/canonical.hpp"
#include "gem/enumerate.hpp"
#include "gem/reduce.hpp"
#include "oracles.hpp"

using namespace gem;

TEST_CASE("validate rejects malformed edge lists") {
    std::vector<EdgeRecord> ok{{0, 1, 2}, {1, 1, 2}, {2, 1, 2}};
    CHECK(validate(2, ok) == make_L());

    std::vector<EdgeRecord> loop{{0, 1, 1}, {1, 1, 2}, {2, 1, 2}};
    CHECK_THROWS_AS(validate(2, loop), GraphError);
    std::vector<EdgeRecord> dup{{0, 1, 2}, {0, 1, 2}, {1, 1, 2}, {2, 1, 2}};
    CHECK_THROWS_AS(validate(2, dup), GraphError);
    std::vector<EdgeRecord> missing{{0, 1, 2}, {1, 1, 2}};
    CHECK_THROWS_AS(validate(2, missing), GraphError);
    std::vector<EdgeRecord> range{{0, 1, 3}, {1, 1, 2}, {2, 1, 2}};
    CHECK_THROWS_AS(validate(2, range), GraphError);
    CHECK_THROWS_AS(validate(3, ok), GraphError);
}

TEST_CASE("constructor rejects non-involutions") {
    CHECK_THROWS_AS(ColoredGraph({std::vector<Vertex>{2, 1}, {2, 1}, {1, 2}}), GraphError);
    CHECK_THROWS_AS(ColoredGraph({std::vector<Vertex>{2, 3, 1, 4}, {2, 1, 4, 3}, {2, 1, 4, 3}}), GraphError);
}

TEST_CASE("generators of the catalog") {
    CHECK(is_contracted(make_L()));
    CHECK(is_contracted(make_P1()));
    CHECK(is_contracted(make_T1()));
    CHECK(is_contracted(make_P2()));
    CHECK(is_bipartite(make_T1()).has_value());
    CHECK_FALSE(is_bipartite(make_P2()).has_value());
    CHECK_FALSE(is_bipartite(make_P1()).has_value());
    CHECK(make_T1().is_simple());
    CHECK_FALSE(make_L().is_simple());
    CHECK_FALSE(are_isomorphic(make_T1(), make_P2()).has_value());
}

TEST_CASE("bicolored cycles start at their smallest vertex") {
    const auto c = bicolored_cycles(make_T1(), 0, 1);
    REQUIRE(c.cycles.size() == 1);
    CHECK(c.cycles[0] == std::vector<Vertex>{1, 2, 3, 4, 5, 6});
    const auto d = bicolored_cycles(make_T1(), 0, 2);
    CHECK(d.cycles[0].front() == 1);
    CHECK(cycle_count(make_P2(), 1, 2) == 1);
}

TEST_CASE("bipartite check agrees with brute-force two-colouring") {
    std::mt19937 rng(7);
    int bipartite = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 2 * std::uniform_int_distribution<int>(1, 6)(rng);
        const ColoredGraph g = oracle::random_graph(n, rng);
        if (!is_connected(g)) {
            CHECK_THROWS_AS(is_bipartite(g), PreconditionError);
            continue;
        }
        const auto fast = is_bipartite(g);
        const auto slow = oracle::two_coloring(g);
        REQUIRE(fast.has_value() == slow.has_value());
        if (fast) {
            ++bipartite;
            CHECK(fast->side(1) == Side::black);
            for (Vertex v = 1; v <= n; ++v) CHECK((fast->side(v) == Side::white) == ((*slow)[v] == 1));
        }
    }
    CHECK(bipartite > 0);
}

TEST_CASE("isomorphism agrees with brute force on small graphs") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 2 * std::uniform_int_distribution<int>(1, 4)(rng);
        const ColoredGraph g = oracle::random_graph(n, rng);
        const ColoredGraph h = trial % 2 ? oracle::random_relabel(g, rng) : oracle::random_graph(n, rng);
        const auto map = are_isomorphic(g, h);
        REQUIRE(map.has_value() == oracle::isomorphic(g, h));
        if (map) {
            for (Color c = 0; c < 3; ++c)
                for (Vertex v = 1; v <= n; ++v) CHECK((*map)[g.neighbor(c, v) - 1] == h.neighbor(c, (*map)[v - 1]));
        }
    }
}

TEST_CASE("relabel moves every matching consistently") {
    const std::vector<Vertex> perm{3, 1, 2, 6, 4, 5};
    const ColoredGraph g = relabel(make_T1(), perm);
    for (Color c = 0; c < 3; ++c)
        for (Vertex v = 1; v <= 6; ++v) CHECK(g.neighbor(c, perm[v - 1]) == perm[make_T1().neighbor(c, v) - 1]);
}

TEST_CASE("connected sum numbering and type rule") {
    const ColoredGraph s = connected_sum(make_P1(), 1, make_T1(), 4, false);
    CHECK(s.vertex_count() == 8);
    CHECK(sum_left_image(4, 1, 2) == 1);
    CHECK(sum_left_image(4, 1, 1) == 0);
    CHECK(sum_right_image(4, 4, 1) == 4);
    CHECK(sum_right_image(4, 4, 5) == 7);
    // the welded colors join P1's hanging ends to T1's.
    for (Color c = 0; c < 3; ++c) {
        const Vertex a = sum_left_image(4, 1, make_P1().neighbor(c, 1));
        const Vertex b = sum_right_image(4, 4, make_T1().neighbor(c, 4));
        CHECK(s.neighbor(c, a) == b);
    }
    CHECK_THROWS_AS(connected_sum(make_T1(), 1, make_T1(), 3, true), GraphError);
    CHECK_NOTHROW(connected_sum(make_T1(), 1, make_T1(), 2, true));
}

TEST_CASE("connected sums of contracted graphs stay contracted") {
    std::vector<ColoredGraph> small;
    for (int n = 2; n <= 6; n += 2)
        for (const auto& e : enumerate_contracted(n).classes) small.push_back(e.graph);
    for (const auto& a : small)
        for (const auto& b : small)
            for (Vertex u = 1; u <= a.vertex_count(); ++u)
                for (Vertex v = 1; v <= b.vertex_count(); ++v) CHECK(is_contracted(connected_sum(a, u, b, v, false)));
}

TEST_CASE("contracted graphs beyond two vertices are simple") {
    for (int n = 4; n <= 12; n += 2)
        for (const auto& e : enumerate_contracted(n).classes) CHECK(e.graph.is_simple());
}
