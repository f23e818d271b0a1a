#include <gtest/gtest.h>

#include "edgering/reports.hpp"
#include "fixtures.hpp"

using namespace edgering;

TEST(Reports, ClassifyFigure1) {
    auto r = cmd_classify(fixtures::figure1());
    EXPECT_EQ(r.status, "ok");
    EXPECT_EQ(r.exit_code(), 0);
    EXPECT_EQ(r.payload["class"]["type"], 1);
    EXPECT_EQ(r.payload["class"]["p"], (std::vector<int>{2, 1, 1}));
    EXPECT_EQ(r.payload["labeling"]["e[1,1]"], "(u,u21)");
}

TEST(Reports, ClassifyFourCycle) {
    auto r = cmd_classify(fixtures::cycle_graph(4));
    EXPECT_EQ(r.status, "not-compact");
    EXPECT_EQ(r.exit_code(), 2);
    EXPECT_EQ(r.payload["witness"]["reason"], "even-cycle");
    EXPECT_EQ(r.payload["witness"]["cycle"].size(), 4u);
}

TEST(Reports, ClassifyForest) {
    Graph path;
    for (auto l : {"a", "b", "c"}) path.add_vertex(l);
    path.add_edge("a", "b");
    path.add_edge("b", "c");
    auto r = cmd_classify(path);
    EXPECT_EQ(r.status, "not-compact");
    EXPECT_EQ(r.payload["witness"]["reason"], "empty-after-pruning");
    EXPECT_EQ(r.payload["removed"].size(), 3u);
}

TEST(Reports, ClassifyPrunesPendants) {
    // figure 1 with a pendant path keeps its class
    Graph g = fixtures::figure1();
    g.add_vertex("pend1");
    g.add_vertex("pend2");
    g.add_edge("u11", "pend1");
    g.add_edge("pend1", "pend2");
    auto r = cmd_classify(g);
    EXPECT_EQ(r.status, "ok");
    EXPECT_EQ(r.payload["class"]["p"], (std::vector<int>{2, 1, 1}));
    EXPECT_EQ(r.payload["removed"], (std::vector<std::string>{"pend2", "pend1"}));
}

TEST(Reports, InvariantsFigures) {
    {
        auto r = cmd_invariants(fixtures::figure1());
        EXPECT_EQ(r.payload["t"], 3);
        EXPECT_EQ(r.payload["mat"], 4);
        EXPECT_EQ(r.payload["pdim"], 2);
        EXPECT_EQ(r.payload["reg"], 4);
        EXPECT_EQ(r.payload["type"], 2);
        EXPECT_EQ(r.payload["V"], 9);
        EXPECT_EQ(r.payload["E"], 11);
    }
    {
        auto r = cmd_invariants(fixtures::figure2());
        EXPECT_EQ(r.payload["t"], 5);
        EXPECT_EQ(r.payload["mat"], 7);
        EXPECT_EQ(r.payload["pdim"], 4);
        EXPECT_EQ(r.payload["reg"], 7);
        EXPECT_EQ(r.payload["type"], 4);
    }
    {
        auto r = cmd_invariants(fixtures::figure3());
        EXPECT_EQ(r.payload["t"], 7);
        EXPECT_EQ(r.payload["mat"], 9);
        EXPECT_EQ(r.payload["pdim"], 6);
        EXPECT_EQ(r.payload["reg"], 9);
        EXPECT_EQ(r.payload["type"], 6);
        // top graded Betti of the class behind figure 3
        auto entries = r.payload["topGradedBetti"]["entries"];
        ASSERT_EQ(entries.size(), 2u);
        EXPECT_EQ(entries[0]["j"], 14);
        EXPECT_EQ(entries[0]["b"], 3);
        EXPECT_EQ(entries[1]["j"], 15);
        EXPECT_EQ(entries[1]["b"], 3);
    }
}

TEST(Reports, InvariantsTypeZero) {
    auto r = cmd_invariants(fixtures::cycle_graph(5));
    EXPECT_EQ(r.payload["special"], true);
    EXPECT_EQ(r.payload["t"], 1);
    EXPECT_EQ(r.payload["pdim"], 0);
    EXPECT_EQ(r.payload["reg"], 0);
    EXPECT_EQ(r.payload["type"], 1);
}

TEST(Reports, InitialOnTinyTypeOne) {
    CompactClass c;
    c.kind = CompactKind::Type1;
    c.p = {1, 1};
    auto r = cmd_initial(generate(c));
    EXPECT_EQ(r.payload["count"], 1);
    EXPECT_EQ(r.payload["generators"][0], "e[1,2]*e[2,1]*e[2,3]");
}

TEST(Reports, GroebnerSerialization) {
    CompactClass c;
    c.kind = CompactKind::Type1;
    c.p = {1, 1};
    auto r = cmd_groebner(generate(c));
    EXPECT_EQ(r.payload["count"], 1);
    // oriented leading side first
    EXPECT_EQ(r.payload["binomials"][0], "e[1,2]*e[2,1]*e[2,3] - e[1,1]*e[1,3]*e[2,2]");
}

TEST(Reports, BettiMethodsAgree) {
    Graph g = fixtures::figure1();
    Bounds bounds;
    auto rec = cmd_betti(g, "recursion", true, bounds);
    auto orc = cmd_betti(g, "oracle", true, bounds);
    EXPECT_EQ(rec.status, "ok");
    EXPECT_EQ(orc.status, "ok");
    EXPECT_EQ(rec.payload["table"], orc.payload["table"]);
    auto closed = cmd_betti(g, "closed", false, bounds);
    EXPECT_EQ(closed.payload["totals"], rec.payload["totals"]);
    EXPECT_EQ(rec.payload["regQuotient"], 4);
}

TEST(Reports, BettiClosedGradedRefusesUnequalParameters) {
    auto r = cmd_betti(fixtures::figure1(), "closed", true, Bounds{});
    EXPECT_EQ(r.status, "refused");
    EXPECT_EQ(r.exit_code(), 3);
}

TEST(Reports, BettiOracleRefusalSurfaces) {
    Bounds tight;
    tight.max_gens = 2;
    auto r = cmd_betti(fixtures::figure1(), "oracle", false, tight);
    EXPECT_EQ(r.status, "refused");
}

TEST(Reports, CanonicalVectors) {
    CompactClass c;
    c.kind = CompactKind::Type3;
    c.p = c.q = c.r = {1};
    auto r = cmd_canonical(generate(c));
    EXPECT_EQ(r.payload["count"], 3);
    for (const auto& v : r.payload["vectors"]) EXPECT_EQ(v["degree"], 5);
    EXPECT_EQ(r.payload["vectors"][0]["coords"]["u"], 2);
    EXPECT_EQ(r.payload["fundamentalSets"].size(), 18u);
    EXPECT_EQ(r.payload["regularVertices"].size(), 6u);
}

TEST(Reports, CanonicalConeDataRespectsBound) {
    CompactClass c;
    c.kind = CompactKind::Type1;
    c.p = {1, 1};
    Bounds tight;
    tight.max_vertices = 3;
    auto r = cmd_canonical(generate(c), tight);
    EXPECT_EQ(r.status, "ok"); // vectors still come out
    EXPECT_FALSE(r.payload.contains("fundamentalSets"));
    EXPECT_TRUE(r.payload.contains("coneSystem"));
}

TEST(Reports, VerifyPassesOnSmallInstances) {
    for (auto make : {fixtures::figure1}) {
        auto r = cmd_verify(make(), {"all"}, Bounds{});
        EXPECT_EQ(r.status, "ok") << r.to_json().dump(2);
        for (const auto& ck : r.payload["checks"])
            EXPECT_NE(ck["status"], "fail") << ck.dump();
    }
    CompactClass c;
    c.kind = CompactKind::Type3;
    c.p = c.q = c.r = {1};
    auto r = cmd_verify(generate(c), {"gb"}, Bounds{});
    EXPECT_EQ(r.status, "ok");
    bool saw_elimination = false;
    for (const auto& ck : r.payload["checks"]) {
        EXPECT_EQ(ck["status"], "pass");
        saw_elimination = saw_elimination || ck["name"] == "gb.elimination";
    }
    EXPECT_TRUE(saw_elimination);
}

TEST(Reports, VerifyFigure2SurfacesUnverifiedElimination) {
    // 15 + 19 = 34 variables sit above the default elimination bound, so the
    // elimination cross-check must report unverified, never a silent pass
    auto r = cmd_verify(fixtures::figure2(), {"all"}, Bounds{});
    EXPECT_EQ(r.status, "ok") << r.to_json().dump(2);
    bool unverified_elim = false;
    for (const auto& ck : r.payload["checks"]) {
        EXPECT_NE(ck["status"], "fail") << ck.dump();
        if (ck["name"] == "gb.elimination") unverified_elim = ck["status"] == "unverified";
    }
    EXPECT_TRUE(unverified_elim);
}

TEST(Reports, VerifyTypeZero) {
    auto r = cmd_verify(fixtures::cycle_graph(5), {"all"}, Bounds{});
    EXPECT_EQ(r.status, "ok") << r.to_json().dump(2);
    bool saw_zero_ideal = false;
    for (const auto& ck : r.payload["checks"]) {
        EXPECT_NE(ck["status"], "fail");
        if (ck["name"] == "gb.elimination") saw_zero_ideal = ck["status"] == "pass";
    }
    EXPECT_TRUE(saw_zero_ideal);
}

TEST(Reports, VerifyTamperFails) {
    CompactClass c;
    c.kind = CompactKind::Type1;
    c.p = {1, 1};
    auto r = cmd_verify(generate(c), {"gb"}, Bounds{}, true);
    EXPECT_EQ(r.status, "failed");
    EXPECT_EQ(r.exit_code(), 4);
    bool found = false;
    for (const auto& ck : r.payload["checks"])
        if (ck["status"] == "fail") found = true;
    EXPECT_TRUE(found);
}

TEST(Reports, DeterministicSerialization) {
    auto a = cmd_verify(fixtures::figure1(), {"all"}, Bounds{}).to_json().dump(2);
    auto b = cmd_verify(fixtures::figure1(), {"all"}, Bounds{}).to_json().dump(2);
    EXPECT_EQ(a, b);
    auto c = cmd_invariants(fixtures::figure3()).to_json().dump(2);
    auto d = cmd_invariants(fixtures::figure3()).to_json().dump(2);
    EXPECT_EQ(c, d);
}

TEST(Reports, DigestTracksContent) {
    auto a = graph_digest(fixtures::figure1());
    auto b = graph_digest(fixtures::figure2());
    EXPECT_NE(a, b);
    EXPECT_EQ(a, graph_digest(fixtures::figure1()));
    EXPECT_EQ(a.size(), 16u);
}
