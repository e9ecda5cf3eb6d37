#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "foldmatch/geometry.hpp"

using namespace fm;

namespace {

ErrorCode code_of(auto &&f) {
    try {
        f();
    } catch (const Error &e) {
        return e.code;
    }
    ADD_FAILURE() << "no error thrown";
    return ErrorCode::Overflow;
}

long long binom(int n, int k) {
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

TEST(Geometry, CrossingIsSymmetricAndStrict) {
    EXPECT_TRUE(crosses({0, 2}, {1, 3}, 6));
    EXPECT_TRUE(crosses({1, 3}, {0, 2}, 6));
    EXPECT_FALSE(crosses({0, 2}, {2, 4}, 6));
    EXPECT_FALSE(crosses({0, 3}, {0, 2}, 6));
    EXPECT_TRUE(is_boundary({0, 5}, 6));
    EXPECT_FALSE(is_boundary({0, 4}, 6));
}

TEST(Geometry, CatalanCounts) {
    int catalan[] = {1, 1, 2, 5, 14, 42, 132};
    for (int N = 3; N <= 8; ++N) EXPECT_EQ(all_triangulations(N).size(), static_cast<size_t>(catalan[N - 2])) << N;
}

TEST(Geometry, ThetaInvariantCensus) {
    for (int n = 2; n <= 5; ++n) {
        auto ts = theta_triangulations(n);
        EXPECT_EQ(static_cast<long long>(ts.size()), binom(2 * n, n)) << n;
        for (auto &T : ts) {
            EXPECT_EQ(T.size(), static_cast<size_t>(2 * n - 1));
            int diam = 0;
            for (auto &d : T) {
                EXPECT_NE(std::find(T.begin(), T.end(), theta(d, n)), T.end());
                diam += is_diameter(d, n);
            }
            EXPECT_EQ(diam, 1);
        }
        EXPECT_EQ(all_orbits(n).size(), static_cast<size_t>(n * (n + 1)));
    }
}

TEST(Geometry, MakeThetaReordersThetaImages) {
    auto T = fixtures::fix_c();
    ASSERT_EQ(T.tau.size(), 5u);
    for (int i = 1; i <= 5; ++i) EXPECT_EQ(T.tau[2 * 3 - i - 1], theta(T.tau[i - 1], 3)) << i;
    EXPECT_EQ(T.tail, 4);
    EXPECT_EQ(T.head, 0);
    EXPECT_NO_THROW(validate(T));
}

TEST(Geometry, ValidationErrors) {
    EXPECT_EQ(code_of([] { validate(6, {{0, 2}, {1, 3}, {0, 4}}); }), ErrorCode::CrossingDiagonals);
    EXPECT_EQ(code_of([] { validate(6, {{0, 2}, {0, 3}}); }), ErrorCode::NotMaximal);
    EXPECT_EQ(code_of([] { validate(6, {{0, 2}, {0, 3}, {0, 9}}); }), ErrorCode::InvalidVertex);
    EXPECT_EQ(code_of([] { validate(6, {{0, 2}, {0, 3}, {1, 1}}); }), ErrorCode::DegenerateDiagonal);
    EXPECT_EQ(code_of([] { make_theta(3, {{0, 2}, {0, 3}, {0, 4}, {0, 5}, {0, 6}}, 0, 4); }),
              ErrorCode::NotThetaInvariant);
}

TEST(Geometry, FlipIsAnInvolution) {
    for (auto &T : all_triangulations(7))
        for (auto e : T) {
            Diag f = flip_diagonal(T, e, 7);
            EXPECT_TRUE(crosses(e, f, 7));
            auto U = T;
            std::replace(U.begin(), U.end(), e, f);
            EXPECT_EQ(flip_diagonal(U, f, 7), e);
        }
}

TEST(Geometry, OrbitFlipKeepsThetaInvariance) {
    auto T = fixtures::fix_b();
    for (int k = 1; k <= 3; ++k) {
        auto U = flip_orbit(T, k);
        EXPECT_NO_THROW(validate(U));
        EXPECT_FALSE(U.contains(T.orbit(k)));
    }
}

TEST(Geometry, RestrictionCollapsesRightSide) {
    auto T = fixtures::fix_c();
    auto R = restrict(T);
    EXPECT_EQ(R.M, 6);
    EXPECT_EQ(R.star, 5);
    EXPECT_EQ(R.tbar.rank(), 3);
    EXPECT_EQ(R.rmap(T.head), 0);
    EXPECT_EQ(R.rmap(T.tail), 4);
}

TEST(Geometry, ChiralityOfFixtures) {
    EXPECT_TRUE(b_hypothesis(fixtures::fix_b()));
    EXPECT_EQ(restrict_orbit(fixtures::fix_b(), fixtures::fix_b_orbit()).size(), 2u);
    EXPECT_EQ(restrict_orbit(fixtures::fix_c(), fixtures::fix_c_orbit()).size(), 2u);
}

TEST(Geometry, ReflectionIsAnInvolution) {
    for (auto &t : theta_triangulations(3)) {
        Diag d;
        for (auto e : t)
            if (is_diameter(e, 3)) d = e;
        auto T = index_theta(3, t, d.a, d.b);
        auto U = reflect(reflect(T));
        auto a = T.tau, b = U.tau;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        EXPECT_EQ(a, b);
    }
}
