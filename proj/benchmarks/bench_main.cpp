#include <benchmark/benchmark.h>

#include "foldmatch/folded.hpp"
#include "foldmatch/oracle.hpp"
#include "foldmatch/verify.hpp"

using namespace fm;

namespace {

// zig-zag triangulation of the N-gon; the long diagonal crosses all of it
Triangulation zigzag(int N) {
    std::vector<Diag> tau;
    int lo = 0, hi = N - 1;
    bool step_lo = true;
    while (hi - lo > 2) {
        if (step_lo) tau.emplace_back(lo + 1, hi), ++lo;
        else tau.emplace_back(lo, hi - 1), --hi;
        step_lo = !step_lo;
    }
    return Triangulation(N, tau);
}

ThetaTriangulation fix_b() { return make_theta(3, {{2, 4}, {1, 4}, {4, 0}, {5, 0}, {6, 0}}, 4, 0); }

}  // namespace

static void BM_MatchingsZigzag(benchmark::State &st) {
    int N = static_cast<int>(st.range(0));
    auto T = zigzag(N);
    auto G = build_snake_graph({0, N / 2}, T);
    for (auto _ : st) benchmark::DoNotOptimize(enumerate_matchings(G));
    st.counters["tiles"] = static_cast<double>(G.tiles.size());
}
BENCHMARK(BM_MatchingsZigzag)->DenseRange(8, 16, 2);

static void BM_BruteForceMatchings(benchmark::State &st) {
    auto T = zigzag(static_cast<int>(st.range(0)));
    auto G = build_snake_graph({0, static_cast<int>(st.range(0)) / 2}, T);
    for (auto _ : st) benchmark::DoNotOptimize(brute_force_matchings(G));
}
BENCHMARK(BM_BruteForceMatchings)->DenseRange(8, 10, 1);

static void BM_FPolynomialFixB(benchmark::State &st) {
    auto G = build_G_ab(fix_b(), orbit_of({2, 7}, 3), Kind::B);
    for (auto _ : st) benchmark::DoNotOptimize(f_polynomial(G));
}
BENCHMARK(BM_FPolynomialFixB);

static void BM_OracleExplore(benchmark::State &st) {
    int n = static_cast<int>(st.range(0));
    auto t = theta_triangulations(n).front();
    Diag d;
    for (auto e : t)
        if (is_diameter(e, n)) d = e;
    auto T = index_theta(n, t, d.a, d.b);
    for (auto _ : st) benchmark::DoNotOptimize(explore(T, Kind::C));
}
BENCHMARK(BM_OracleExplore)->DenseRange(2, 5, 1)->Unit(benchmark::kMillisecond);

static void BM_Sweep(benchmark::State &st) {
    int n = static_cast<int>(st.range(0));
    for (auto _ : st) benchmark::DoNotOptimize(sweep(n, Kind::C, false, 1));
}
BENCHMARK(BM_Sweep)->DenseRange(2, 4, 1)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
