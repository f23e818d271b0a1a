#include <gtest/gtest.h>

#include <random>

#include "edgering/groebner.hpp"
#include "edgering/sweep.hpp"
#include "edgering/toric.hpp"
#include "fixtures.hpp"

using namespace edgering;

namespace {

Monomial var(int nvars, int v, int e = 1) {
    Monomial m(nvars);
    m.mul_var(v, e);
    return m;
}

} // namespace

TEST(Buchberger, LinearToy) {
    // chain z < y < x; input {x - y, y - z}
    Binomial f{var(3, 2), var(3, 1)};
    Binomial g{var(3, 1), var(3, 0)};
    auto gb = buchberger({f, g});
    ASSERT_EQ(gb.elements.size(), 2u);
    EXPECT_EQ(gb.elements[0].plus, var(3, 1));
    EXPECT_EQ(gb.elements[0].minus, var(3, 0)); // y - z
    EXPECT_EQ(gb.elements[1].plus, var(3, 2));
    EXPECT_EQ(gb.elements[1].minus, var(3, 0)); // x - z
    EXPECT_TRUE(gb.reduced);
}

TEST(Buchberger, SingleGeneratorIsItsOwnBasis) {
    CompactClass c;
    c.kind = CompactKind::Type1;
    c.p = {1, 1};
    auto t = lex_order(c);
    auto ugb = universal_groebner_basis(c, t);
    auto gb = buchberger(ugb);
    ASSERT_EQ(gb.elements.size(), 1u);
    EXPECT_EQ(gb.elements[0].plus, leading_term(ugb[0]));
    EXPECT_TRUE(buchberger_criterion(ugb));
}

TEST(Buchberger, CriterionCertifiesWrittenBases) {
    for (const auto& c : sweep_classes()) {
        if (c.model_edge_count() > 20) continue; // the full sweep runs in acceptance
        auto t = lex_order(c);
        auto ugb = universal_groebner_basis(c, t);
        EXPECT_TRUE(buchberger_criterion(ugb)) << "type " << static_cast<int>(c.kind);
        auto gb = buchberger(ugb);
        EXPECT_EQ(leading_term_ideal(gb, t.size()), initial_ideal(c, t));
    }
}

TEST(Buchberger, CriterionRejectsNonBasis) {
    // {x^2 - yz, y^2 - xz} under lex z < y < x is not a Groebner basis
    int n = 3;
    Binomial f{var(n, 2, 2), var(n, 1) * var(n, 0)};
    Binomial g{var(n, 1, 2), var(n, 2) * var(n, 0)};
    EXPECT_FALSE(buchberger_criterion({f, g}));
    // completion fixes it
    auto gb = buchberger({f, g});
    std::vector<Binomial> elems = gb.elements;
    EXPECT_TRUE(buchberger_criterion(elems));
    EXPECT_GT(elems.size(), 2u);
}

TEST(SameIdeal, DetectsEqualityAndInequality) {
    Binomial f{var(2, 1), var(2, 0)};          // y - x
    Binomial g{var(2, 1, 2), var(2, 0, 2)};    // y^2 - x^2
    EXPECT_TRUE(same_binomial_ideal({f}, {f}));
    EXPECT_FALSE(same_binomial_ideal({f}, {g})); // y-x not in (y^2 - x^2)
}

TEST(Elimination, TriangleHasZeroIdeal) {
    auto g = fixtures::cycle_graph(3);
    std::vector<std::pair<int, int>> lab = {{0, 1}, {1, 2}, {0, 2}};
    auto gb = toric_ideal_via_elimination(g, lab);
    EXPECT_TRUE(gb.elements.empty());
}

TEST(Elimination, FourCycle) {
    auto g = fixtures::cycle_graph(4);
    std::vector<std::pair<int, int>> lab = {{0, 1}, {1, 2}, {2, 3}, {0, 3}};
    auto gb = toric_ideal_via_elimination(g, lab);
    ASSERT_EQ(gb.elements.size(), 1u);
    // e1 e3 = e2 e4 with the larger side leading
    EXPECT_EQ(gb.elements[0].plus, var(4, 1) * var(4, 3));
    EXPECT_EQ(gb.elements[0].minus, var(4, 0) * var(4, 2));
}

TEST(Elimination, MatchesWrittenBasisOnSmallClasses) {
    std::vector<CompactClass> cases;
    {
        CompactClass c;
        c.kind = CompactKind::Type1;
        c.p = {1, 1};
        cases.push_back(c);
        c.p = {1, 1, 1};
        cases.push_back(c);
    }
    {
        CompactClass c;
        c.kind = CompactKind::Type2;
        c.p = c.q = {1};
        c.s = 0;
        cases.push_back(c);
        c.s = 2;
        cases.push_back(c);
    }
    for (const auto& c : cases) {
        Graph model = generate(c);
        auto t = lex_order(c);
        auto lab = labeling_on(t, c, model);
        auto gb = toric_ideal_via_elimination(model, lab);
        auto ugb = universal_groebner_basis(c, t);
        EXPECT_TRUE(same_binomial_ideal(gb.elements, ugb));
        EXPECT_EQ(leading_term_ideal(gb, t.size()), initial_ideal(c, t));
    }
}

TEST(Buchberger, WrittenBasesAreUniversal) {
    // a universal basis stays a Groebner basis under any monomial order;
    // spot-check with lex orders over randomly permuted variable chains
    std::mt19937 rng(17);
    std::vector<CompactClass> cases;
    {
        CompactClass c;
        c.kind = CompactKind::Type1;
        c.p = {2, 1, 1};
        cases.push_back(c);
        c = CompactClass{};
        c.kind = CompactKind::Type2;
        c.p = c.q = {1};
        c.s = 2;
        cases.push_back(c);
        c = CompactClass{};
        c.kind = CompactKind::Type3;
        c.p = c.q = c.r = {1};
        cases.push_back(c);
    }
    for (const auto& c : cases) {
        auto t = lex_order(c);
        auto ugb = universal_groebner_basis(c, t);
        for (int trial = 0; trial < 6; ++trial) {
            std::vector<int> perm(t.size());
            std::iota(perm.begin(), perm.end(), 0);
            std::shuffle(perm.begin(), perm.end(), rng);
            std::vector<Binomial> permuted;
            for (const auto& b : ugb) {
                Binomial pb{Monomial(t.size()), Monomial(t.size())};
                for (int v = 0; v < t.size(); ++v) {
                    pb.plus.e[perm[v]] = b.plus.e[v];
                    pb.minus.e[perm[v]] = b.minus.e[v];
                }
                permuted.push_back(pb);
            }
            EXPECT_TRUE(buchberger_criterion(permuted)) << "trial " << trial;
        }
    }
}

TEST(Elimination, AgreesOnMidSizeClasses) {
    std::vector<CompactClass> cases;
    {
        CompactClass c;
        c.kind = CompactKind::Type1;
        c.p = {2, 1};
        cases.push_back(c);
        c.p = {2, 2};
        cases.push_back(c);
        c = CompactClass{};
        c.kind = CompactKind::Type2;
        c.p = {1};
        c.q = {1, 1};
        c.s = 0;
        cases.push_back(c);
        c.s = 2;
        cases.push_back(c);
    }
    for (const auto& c : cases) {
        Graph model = generate(c);
        auto t = lex_order(c);
        auto lab = labeling_on(t, c, model);
        auto gb = toric_ideal_via_elimination(model, lab, 64);
        EXPECT_TRUE(same_binomial_ideal(gb.elements, universal_groebner_basis(c, t)));
        EXPECT_EQ(leading_term_ideal(gb, t.size()), initial_ideal(c, t));
    }
}

TEST(Elimination, VariableBoundRefusal) {
    auto c = fixtures::figure3(); // 19 vertices + 25 edges > 26 variables
    std::vector<std::pair<int, int>> lab;
    for (auto e : c.edges()) lab.push_back(e);
    EXPECT_THROW(toric_ideal_via_elimination(c, lab), refused_error);
    EXPECT_NO_THROW(toric_ideal_via_elimination(c, lab, 64));
}
