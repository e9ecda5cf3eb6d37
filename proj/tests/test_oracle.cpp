#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "foldmatch/oracle.hpp"

using namespace fm;

TEST(Oracle, SignedAdjacencyIsSkew) {
    for (auto &tau : all_triangulations(7)) {
        auto B = signed_adjacency(Triangulation(7, tau));
        for (size_t i = 0; i < B.size(); ++i)
            for (size_t j = 0; j < B.size(); ++j) EXPECT_EQ(B[i][j], -B[j][i]);
    }
}

TEST(Oracle, FoldedMatricesAreSkewSymmetrizable) {
    for (Kind k : {Kind::B, Kind::C}) {
        for (auto T : {fixtures::fix_b(), fixtures::fix_c()}) {
            auto B = fold_exchange_matrix(T, k);
            ASSERT_EQ(B.size(), 3u);
            EXPECT_TRUE(skew_symmetrizable(B));
        }
    }
}

TEST(Oracle, BAndCAreTransposeDual) {
    auto T = fixtures::fix_c();
    auto B = fold_exchange_matrix(T, Kind::B), C = fold_exchange_matrix(T, Kind::C);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) EXPECT_EQ(B[i][j], -C[j][i]);
    EXPECT_EQ(fold_exchange_matrix(T, Kind::B, true), C);
}

TEST(Oracle, MutationIsAnInvolution) {
    auto s = initial_seed(fold_exchange_matrix(fixtures::fix_b(), Kind::B));
    for (int k = 0; k < 3; ++k) {
        auto t = mutate_seed(mutate_seed(s, k), k);
        EXPECT_EQ(t.B, s.B);
        for (int i = 0; i < 3; ++i) EXPECT_EQ(t.X[i], s.X[i]);
    }
}

TEST(Oracle, TypeACountsAreCatalan) {
    // n(n+3)/2 cluster variables, Catalan(n+1) clusters
    int clusters[] = {0, 2, 5, 14, 42};
    for (int n = 1; n <= 4; ++n) {
        auto tau = all_triangulations(n + 3).front();
        auto t = explore_A(Triangulation(n + 3, tau));
        EXPECT_EQ(t.variables, n * (n + 3) / 2) << n;
        EXPECT_EQ(t.seeds, clusters[n]) << n;
    }
}

TEST(Oracle, FoldedCounts) {
    // B_n and C_n: n(n+1) variables, binom(2n,n) clusters
    int clusters[] = {0, 0, 6, 20, 70};
    for (int n = 2; n <= 4; ++n) {
        for (auto &t : theta_triangulations(n)) {
            Diag d;
            for (auto e : t)
                if (is_diameter(e, n)) d = e;
            auto T = index_theta(n, t, d.a, d.b);
            for (Kind k : {Kind::B, Kind::C}) {
                auto tab = explore(T, k);
                EXPECT_EQ(tab.variables, n * (n + 1));
                EXPECT_EQ(tab.seeds, clusters[n]);
                EXPECT_EQ(tab.values.size(), all_orbits(n).size());
            }
        }
    }
}

TEST(Oracle, FixtureValues) {
    auto b = explore(fixtures::fix_b(), Kind::B).values.at(fixtures::fix_b_orbit());
    EXPECT_EQ(b.F.str(), fixtures::fix_b_F);
    EXPECT_EQ(b.g, fixtures::fix_b_g);
    auto c = explore(fixtures::fix_c(), Kind::C).values.at(fixtures::fix_c_orbit());
    EXPECT_EQ(c.F.str(), fixtures::fix_c_F);
    EXPECT_EQ(c.g, fixtures::fix_c_g);
}

TEST(Oracle, BudgetIsEnforced) {
    try {
        explore(fixtures::fix_b(), Kind::B, false, 3);
        FAIL() << "expected ClosureBudgetExceeded";
    } catch (const Error &e) {
        EXPECT_EQ(e.code, ErrorCode::ClosureBudgetExceeded);
    }
}
