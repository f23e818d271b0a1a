#include <gtest/gtest.h>

#include "edgering/graph.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace edgering;

TEST(Parse, TriangleJson) {
    Graph g = parse_graph(R"({"vertices":["a","b","c"],"edges":[["a","b"],["b","c"],["c","a"]]})");
    EXPECT_EQ(g.vertex_count(), 3);
    EXPECT_EQ(g.edge_count(), 3);
    EXPECT_TRUE(g.has_edge(g.index_of("a"), g.index_of("c")));
}

TEST(Parse, LoopRejected) {
    EXPECT_THROW(parse_graph(R"({"vertices":["a","b"],"edges":[["a","a"]]})"), parse_error);
}

TEST(Parse, DuplicateEdgeRejected) {
    EXPECT_THROW(
        parse_graph(R"({"vertices":["a","b"],"edges":[["a","b"],["b","a"]]})"),
        parse_error);
}

TEST(Parse, UnknownEndpointRejected) {
    EXPECT_THROW(parse_graph(R"({"vertices":["a"],"edges":[["a","z"]]})"), parse_error);
}

TEST(Parse, Figure1Document) {
    Graph g = fixtures::figure1();
    EXPECT_EQ(g.vertex_count(), 9);
    EXPECT_EQ(g.edge_count(), 11);
}

TEST(Parse, TextEdgeList) {
    Graph g = parse_graph("a b\nb c\nc a   # a triangle\n\n");
    EXPECT_EQ(g.vertex_count(), 3);
    EXPECT_EQ(g.edge_count(), 3);
}

TEST(Parse, RoundTripJson) {
    Graph g = fixtures::figure2();
    Graph h = parse_graph(graph_to_json(g).dump());
    EXPECT_EQ(h.labels(), g.labels());
    EXPECT_EQ(h.edges(), g.edges());
}

TEST(Prune, PendantPathOnTriangle) {
    Graph g;
    for (auto l : {"a", "b", "c", "p1", "p2"}) g.add_vertex(l);
    g.add_edge("a", "b");
    g.add_edge("b", "c");
    g.add_edge("c", "a");
    g.add_edge("a", "p1");
    g.add_edge("p1", "p2");
    auto [g0, removed] = prune_leaves(g);
    EXPECT_EQ(g0.vertex_count(), 3);
    EXPECT_EQ(g0.edge_count(), 3);
    EXPECT_EQ(removed, (std::vector<std::string>{"p2", "p1"}));
}

TEST(Prune, OddCycleIsFixedPoint) {
    auto [g0, removed] = prune_leaves(fixtures::cycle_graph(5));
    EXPECT_EQ(g0.vertex_count(), 5);
    EXPECT_TRUE(removed.empty());
}

TEST(Prune, PathPrunesToEmptyInSweepOrder) {
    Graph g;
    for (auto l : {"a", "b", "c"}) g.add_vertex(l);
    g.add_edge("a", "b");
    g.add_edge("b", "c");
    auto [g0, removed] = prune_leaves(g);
    EXPECT_TRUE(g0.empty());
    // both endpoints go in the first sweep, the isolated middle last
    EXPECT_EQ(removed, (std::vector<std::string>{"a", "c", "b"}));
}

TEST(Prune, Idempotent) {
    for (auto make : {fixtures::figure1, fixtures::figure2, fixtures::figure3}) {
        auto [g0, r0] = prune_leaves(make());
        auto [g1, r1] = prune_leaves(g0);
        EXPECT_TRUE(r1.empty());
        EXPECT_EQ(g1.vertex_count(), g0.vertex_count());
        EXPECT_EQ(g1.edges(), g0.edges());
    }
}

TEST(Cycles, Triangle) {
    auto cycles = enumerate_cycles(fixtures::cycle_graph(3));
    ASSERT_EQ(cycles.size(), 1u);
    EXPECT_EQ(cycles[0].length(), 3);
}

TEST(Cycles, CompleteGraphOn4) {
    auto cycles = enumerate_cycles(fixtures::complete_graph(4));
    EXPECT_EQ(cycles.size(), 7u);
    int len3 = 0, len4 = 0;
    for (const auto& c : cycles) (c.length() == 3 ? len3 : len4)++;
    EXPECT_EQ(len3, 4);
    EXPECT_EQ(len4, 3);
}

TEST(Cycles, Figure1Lengths) {
    auto cycles = enumerate_cycles(fixtures::figure1());
    ASSERT_EQ(cycles.size(), 3u);
    std::multiset<int> lens;
    for (const auto& c : cycles) lens.insert(c.length());
    EXPECT_EQ(lens, (std::multiset<int>{3, 3, 5}));
}

TEST(Cycles, BruteCountOnTenVertices) {
    for (unsigned seed = 1; seed <= 4; ++seed) {
        Graph g = oracles::random_graph(10, 0.22, seed);
        EXPECT_EQ(static_cast<int>(enumerate_cycles(g).size()),
                  oracles::cycle_count_brute(g))
            << "seed " << seed;
    }
}

TEST(Cycles, AdjacencyRecheckAndBruteCount) {
    for (unsigned seed = 1; seed <= 12; ++seed) {
        Graph g = oracles::random_graph(7, 0.45, seed);
        auto cycles = enumerate_cycles(g);
        for (const auto& c : cycles) {
            std::set<int> distinct(c.verts.begin(), c.verts.end());
            EXPECT_EQ(static_cast<int>(distinct.size()), c.length());
            for (int i = 0; i < c.length(); ++i)
                EXPECT_TRUE(g.has_edge(c.verts[i], c.verts[(i + 1) % c.length()]));
        }
        std::set<Cycle> dedup(cycles.begin(), cycles.end());
        EXPECT_EQ(dedup.size(), cycles.size());
        EXPECT_EQ(static_cast<int>(cycles.size()), oracles::cycle_count_brute(g));
    }
}

TEST(Cycles, InducedOnK4) {
    auto ind = induced_cycles(fixtures::complete_graph(4));
    ASSERT_EQ(ind.size(), 4u);
    for (const auto& c : ind) EXPECT_EQ(c.length(), 3);
}

TEST(Cycles, InducedOnFigure3) {
    EXPECT_EQ(induced_cycles(fixtures::figure3()).size(), 7u);
}

TEST(Cycles, SingleCycleIsItsOwnInducedCycle) {
    auto ind = induced_cycles(fixtures::cycle_graph(7));
    ASSERT_EQ(ind.size(), 1u);
    EXPECT_EQ(ind[0].length(), 7);
}

TEST(EvenCycle, FourCycle) {
    auto w = find_even_cycle(fixtures::cycle_graph(4));
    ASSERT_TRUE(w.has_value());
    EXPECT_EQ(w->length(), 4);
}

TEST(EvenCycle, Figure2HasNone) {
    EXPECT_FALSE(has_even_cycle(fixtures::figure2()));
}

TEST(EvenCycle, TwoTrianglesSharingAVertex) {
    Graph g;
    for (auto l : {"a", "b", "c", "d", "e"}) g.add_vertex(l);
    g.add_edge("a", "b");
    g.add_edge("b", "c");
    g.add_edge("c", "a");
    g.add_edge("a", "d");
    g.add_edge("d", "e");
    g.add_edge("e", "a");
    EXPECT_FALSE(has_even_cycle(g));
}

TEST(OddCycleCondition, DisjointTrianglesFail) {
    Graph g = fixtures::two_disjoint_triangles();
    auto w = odd_cycle_condition_witness(g);
    ASSERT_TRUE(w.has_value());
    // the witness genuinely violates the condition
    const auto& [c1, c2] = *w;
    for (int v : c1.verts)
        for (int u : c2.verts) {
            EXPECT_NE(v, u);
            EXPECT_FALSE(g.has_edge(v, u));
        }
}

TEST(OddCycleCondition, BridgedTrianglesPass) {
    EXPECT_TRUE(odd_cycle_condition(fixtures::two_disjoint_triangles(true)));
}

TEST(OddCycleCondition, Figure2Passes) {
    EXPECT_TRUE(odd_cycle_condition(fixtures::figure2()));
}

TEST(OddCycleCondition, SingleOddCycleVacuous) {
    EXPECT_TRUE(odd_cycle_condition(fixtures::cycle_graph(9)));
}

TEST(Matching, FiveCycle) {
    EXPECT_EQ(matching_number(fixtures::cycle_graph(5)), 2);
}

TEST(Matching, Figure1) {
    EXPECT_EQ(matching_number(fixtures::figure1()), 4);
}

TEST(Matching, Figure3) {
    EXPECT_EQ(matching_number(fixtures::figure3()), 9);
}

TEST(Matching, AgreesWithSubsetEnumeration) {
    for (unsigned seed = 1; seed <= 10; ++seed) {
        Graph g = oracles::random_graph(8, 0.35, seed);
        if (g.edge_count() > 12) continue;
        EXPECT_EQ(matching_number(g), oracles::matching_brute(g)) << "seed " << seed;
    }
}
