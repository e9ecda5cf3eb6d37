#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "foldmatch/folded.hpp"
#include "foldmatch/oracle.hpp"
#include "foldmatch/verify.hpp"

using namespace fm;

TEST(Folded, FixBGraph) {
    auto G = build_G_ab(fixtures::fix_b(), fixtures::fix_b_orbit(), Kind::B);
    EXPECT_GE(G.arc, 0);
    // one hexagon from each half, joined by the arc
    int hex = 0;
    for (auto &t : G.tiles) hex += t.hexagon;
    EXPECT_EQ(hex, 2);
    EXPECT_EQ(enumerate_matchings(G).size(), 11u);
    EXPECT_EQ(f_polynomial(G).str(), fixtures::fix_b_F);
    EXPECT_EQ(g_vector(G), fixtures::fix_b_g);
}

TEST(Folded, FixBFormula) {
    EXPECT_EQ(f_B_formula(fixtures::fix_b(), fixtures::fix_b_orbit()).str(), fixtures::fix_b_F);
}

TEST(Folded, FixCGraph) {
    auto G = build_G_ab(fixtures::fix_c(), fixtures::fix_c_orbit(), Kind::C);
    EXPECT_EQ(G.arc, -1);
    EXPECT_EQ(enumerate_matchings(G).size(), 4u);
    auto x = expand_orbit(fixtures::fix_c(), fixtures::fix_c_orbit(), Kind::C);
    EXPECT_EQ(x.F.str(), fixtures::fix_c_F);
    EXPECT_EQ(x.g, fixtures::fix_c_g);
}

TEST(Folded, FixCFormula) {
    EXPECT_EQ(f_C_formula(fixtures::fix_c(), fixtures::fix_c_orbit()).str(), fixtures::fix_c_F);
    EXPECT_EQ(g_C_formula(fixtures::fix_c(), fixtures::fix_c_orbit()), fixtures::fix_c_g);
}

TEST(Folded, OrbitInTriangulationIsInitial) {
    auto T = fixtures::fix_c();
    for (int i = 1; i <= 3; ++i) {
        auto x = expand_orbit(T, T.orbit(i), Kind::C);
        EXPECT_EQ(x.F.str(), "1");
        std::vector<int> e(3, 0);
        e[i - 1] = 1;
        EXPECT_EQ(x.g, e);
    }
}

TEST(Folded, BRejectsHypothesisViolation) {
    for (auto &T : sweep_instances(3, Kind::C)) {
        if (b_hypothesis(T)) continue;
        try {
            verify_theorems(T, Kind::B);
            FAIL() << "expected UnsupportedTriangulationForB";
        } catch (const Error &e) {
            EXPECT_EQ(e.code, ErrorCode::UnsupportedTriangulationForB);
        }
        return;
    }
    FAIL() << "no violating instance at rank 3";
}

TEST(Folded, GluedGraphMatchingsArePerfect) {
    auto R = restrict(fixtures::fix_c());
    auto parts = R.res(fixtures::fix_c_orbit());
    ASSERT_EQ(parts.size(), 2u);
    auto G = build_G_ab(fixtures::fix_c(), fixtures::fix_c_orbit(), Kind::C);
    for (auto &m : enumerate_matchings(G)) {
        std::vector<int> deg(G.verts.size(), 0);
        for (int e : m) ++deg[G.edges[e].u], ++deg[G.edges[e].v];
        for (int d : deg) EXPECT_EQ(d, 1);
    }
}

TEST(Folded, RankThreeSweepBothKinds) {
    for (Kind k : {Kind::B, Kind::C}) {
        auto s = sweep(3, k, false, 1);
        EXPECT_TRUE(s.ok()) << kind_char(k);
        EXPECT_EQ(s.orbits, 12);
    }
    EXPECT_EQ(sweep(3, Kind::C).triangulations, 20);
}

TEST(Folded, CorruptedFoldingIsDetected) {
    auto rep = verify_theorems(fixtures::fix_c(), Kind::C, true);
    EXPECT_FALSE(rep.ok());
    auto rb = verify_theorems(fixtures::fix_b(), Kind::B, true);
    EXPECT_FALSE(rb.ok());
}
