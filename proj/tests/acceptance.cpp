// One PASS/FAIL line per acceptance check; exit status is the number of failures.
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/graphviz.hpp>

#include "cli.hpp"
#include "fixtures.hpp"
#include "foldmatch/oracle.hpp"
#include "foldmatch/verify.hpp"

using namespace fm;

namespace {

using Clock = std::chrono::steady_clock;

struct Check {
    bool ok = true;
    std::string why;
    void expect(bool c, const std::string &msg) {
        if (!c && ok) why = msg;
        ok = ok && c;
    }
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

int failures = 0;

void report(const char *id, const char *what, const std::function<void(Check &)> &body) {
    Check c;
    auto t0 = Clock::now();
    try {
        body(c);
    } catch (const std::exception &e) {
        c.expect(false, std::string("exception: ") + e.what());
    }
    double dt = seconds_since(t0);
    std::cout << id << " " << (c.ok ? "PASS" : "FAIL") << " " << what << " (" << std::fixed;
    std::cout.precision(2);
    std::cout << dt << " s)";
    if (!c.ok) std::cout << ": " << c.why;
    std::cout << std::endl;
    failures += !c.ok;
}

std::string vec(const std::vector<int> &g) { return g_string(g); }

std::vector<ThetaTriangulation> one_orientation(int n) {
    std::vector<ThetaTriangulation> out;
    for (auto &t : theta_triangulations(n)) {
        Diag d;
        for (auto e : t)
            if (is_diameter(e, n)) d = e;
        out.push_back(index_theta(n, t, d.a, d.b));
    }
    return out;
}

bool unique_top(const Poly &F, int n) {
    const Exponent *top = nullptr;
    int best = -1, count = 0;
    for (auto &[e, c] : F.terms()) {
        int d = total_degree(e, n);
        if (d > best) best = d, top = &e, count = 0;
        if (d == best) ++count;
    }
    if (count != 1 || F.coefficient(*top) != 1) return false;
    for (auto &[e, c] : F.terms())
        for (int i = 0; i < n; ++i)
            if (e[i] > (*top)[i]) return false;
    return true;
}

bool constant_one(const Poly &F, int n) { return F.coefficient(make_exponent(std::vector<int>(n, 0))) == 1; }

int cli_code(std::vector<std::string> args, std::string *out = nullptr) {
    args.insert(args.begin(), "foldmatch");
    std::vector<const char *> argv;
    for (auto &a : args) argv.push_back(a.c_str());
    std::ostringstream o, e;
    int code = cli::run(static_cast<int>(argv.size()), argv.data(), o, e);
    if (out) *out = o.str();
    return code;
}

bool dot_parses(const std::string &text) {
    boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS> g;
    boost::dynamic_properties dp(boost::ignore_other_properties);
    std::istringstream in(text);
    try {
        return boost::read_graphviz(in, g, dp) && num_edges(g) > 0;
    } catch (const std::exception &) {
        return false;
    }
}

}  // namespace

int main() {
    report("A1", "type B example, graph and oracle", [](Check &c) {
        auto t0 = Clock::now();
        auto T = fixtures::fix_b();
        auto o = fixtures::fix_b_orbit();
        auto x = expand_orbit(T, o, Kind::B);
        auto orc = explore(T, Kind::B).values.at(o);
        c.expect(x.F.str() == fixtures::fix_b_F, "graph F = " + x.F.str());
        c.expect(x.g == fixtures::fix_b_g, "graph g = " + vec(x.g));
        c.expect(orc.F.str() == fixtures::fix_b_F, "oracle F = " + orc.F.str());
        c.expect(orc.g == fixtures::fix_b_g, "oracle g = " + vec(orc.g));
        c.expect(seconds_since(t0) < 1.0, "slower than 1 s");
    });

    report("A2", "type C example, graph, formula and oracle", [](Check &c) {
        auto t0 = Clock::now();
        auto T = fixtures::fix_c();
        auto o = fixtures::fix_c_orbit();
        auto x = expand_orbit(T, o, Kind::C);
        auto orc = explore(T, Kind::C).values.at(o);
        c.expect(x.F.str() == fixtures::fix_c_F, "graph F = " + x.F.str());
        c.expect(x.g == fixtures::fix_c_g, "graph g = " + vec(x.g));
        c.expect(f_C_formula(T, o).str() == fixtures::fix_c_F, "formula F = " + f_C_formula(T, o).str());
        c.expect(g_C_formula(T, o) == fixtures::fix_c_g, "formula g = " + vec(g_C_formula(T, o)));
        c.expect(orc.F.str() == fixtures::fix_c_F, "oracle F = " + orc.F.str());
        c.expect(orc.g == fixtures::fix_c_g, "oracle g = " + vec(orc.g));
        c.expect(seconds_since(t0) < 1.0, "slower than 1 s");
    });

    report("A3", "graph equals oracle over all theta-invariant triangulations, n = 2..4", [](Check &c) {
        for (int n = 2; n <= 4; ++n) {
            auto t0 = Clock::now();
            for (Kind k : {Kind::C, Kind::B}) {
                auto s = sweep(n, k);
                if (k == Kind::C) c.expect(s.triangulations == (n == 2 ? 6 : n == 3 ? 20 : 70), "triangulation count");
                c.expect(s.orbits == n * (n + 1), "orbit count");
                for (auto &r : s.failures)
                    for (auto &row : r.rows)
                        if (!row.ok)
                            c.expect(false, std::string(1, kind_char(k)) + " n=" + std::to_string(n) + " " +
                                                to_string(row.orbit) + ": " + row.diff);
            }
            double limit = n <= 3 ? 60.0 : 600.0;
            c.expect(seconds_since(t0) < limit, "n=" + std::to_string(n) + " over time budget");
        }
    });

    report("A4", "B and C formulas agree with the modified graphs", [](Check &c) {
        for (int n = 2; n <= 4; ++n)
            for (Kind k : {Kind::B, Kind::C})
                for (auto &T : sweep_instances(n, k))
                    for (auto &o : all_orbits(n)) {
                        if (T.contains(o)) continue;
                        auto x = expand_orbit(T, o, k);
                        std::string where = std::string(1, kind_char(k)) + " n=" + std::to_string(n) + " " + to_string(o);
                        if (k == Kind::B) {
                            c.expect(f_B_formula(T, o) == x.F, "F " + where);
                        } else {
                            c.expect(f_C_formula(T, o) == x.F, "F " + where);
                            c.expect(g_C_formula(T, o) == x.g, "g " + where);
                        }
                    }
    });

    report("A5", "type A snake graphs equal the oracle, n <= 5", [](Check &c) {
        auto t0 = Clock::now();
        for (int n = 1; n <= 5; ++n) {
            int N = n + 3;
            auto trs = all_triangulations(N);
            std::vector<std::string> errs(trs.size());
            parallel_for(static_cast<int>(trs.size()), 0, [&](int i) {
                Triangulation T(N, trs[i]);
                auto orc = explore_A(T);
                for (auto g : all_diagonals(N))
                    if (!(expand_diagonal(g, T) == orc.values.at(g))) errs[i] = "N=" + std::to_string(N) + " " + to_string(g);
            });
            for (auto &e : errs) c.expect(e.empty(), e);
        }
        c.expect(seconds_since(t0) < 60.0, "slower than 1 min");
    });

    report("A6", "skein relation for crossing pairs, n <= 4", [](Check &c) {
        for (int n = 1; n <= 4; ++n) {
            int N = n + 3;
            for (auto &tau : all_triangulations(N)) {
                Triangulation T(N, tau);
                auto ds = all_diagonals(N);
                for (auto g1 : ds)
                    for (auto g2 : ds)
                        if (g1 < g2 && crosses(g1, g2, N))
                            c.expect(skein_check(g1, g2, T), "N=" + std::to_string(N) + " " + to_string(g1) + " x " + to_string(g2));
            }
        }
    });

    report("A7", "census, exact division, constant term and top monomial", [](Check &c) {
        long long binom[] = {1, 2, 6, 20, 70};
        for (int n = 2; n <= 4; ++n) {
            c.expect(static_cast<long long>(theta_triangulations(n).size()) == binom[n], "theta census n=" + std::to_string(n));
            c.expect(static_cast<int>(all_orbits(n).size()) == n * (n + 1), "orbit census");
            for (auto &T : one_orientation(n))
                for (Kind k : {Kind::B, Kind::C}) {
                    auto tab = explore(T, k);
                    c.expect(tab.variables == n * (n + 1), "variable count n=" + std::to_string(n));
                    for (auto &[o, x] : tab.values) {
                        c.expect(constant_one(x.F, n), "constant term of " + x.F.str());
                        c.expect(unique_top(x.F, n), "top monomial of " + x.F.str());
                    }
                }
        }
    });

    report("A8", "backtracking equals brute-force enumeration", [](Check &c) {
        std::mt19937 rng(20261015);
        int sampled = 0, attempts = 0;
        while (sampled < 50 && attempts < 5000) {
            ++attempts;
            int kind = std::uniform_int_distribution<int>(0, 2)(rng);
            int n = std::uniform_int_distribution<int>(2, 5)(rng);
            SnakeGraph G;
            if (kind == 0) {
                int N = n + 3;
                auto trs = all_triangulations(N);
                Triangulation T(N, trs[std::uniform_int_distribution<size_t>(0, trs.size() - 1)(rng)]);
                auto ds = all_diagonals(N);
                Diag g = ds[std::uniform_int_distribution<size_t>(0, ds.size() - 1)(rng)];
                if (T.contains(g)) continue;
                G = build_snake_graph({g.a, g.b}, T);
            } else {
                Kind k = kind == 1 ? Kind::B : Kind::C;
                auto inst = sweep_instances(n, k);
                auto &T = inst[std::uniform_int_distribution<size_t>(0, inst.size() - 1)(rng)];
                auto os = all_orbits(n);
                auto &o = os[std::uniform_int_distribution<size_t>(0, os.size() - 1)(rng)];
                if (T.contains(o)) continue;
                G = build_G_ab(T, o, k);
            }
            if (G.tiles.size() > 8) continue;
            auto a = enumerate_matchings(G), b = brute_force_matchings(G);
            std::sort(a.begin(), a.end());
            std::sort(b.begin(), b.end());
            c.expect(a == b, "enumeration mismatch on sample " + std::to_string(sampled));
            ++sampled;
        }
        c.expect(sampled == 50, "only " + std::to_string(sampled) + " samples");
        auto gb = build_G_ab(fixtures::fix_b(), fixtures::fix_b_orbit(), Kind::B);
        auto gc = build_G_ab(fixtures::fix_c(), fixtures::fix_c_orbit(), Kind::C);
        c.expect(enumerate_matchings(gb).size() == 11, "type B example matching count");
        c.expect(enumerate_matchings(gc).size() == 4, "type C example matching count");
    });

    report("A9", "CLI determinism, DOT output and exit codes", [](Check &c) {
        for (auto f : {"fix_b.json", "fix_c.json"}) {
            std::string o1, o2;
            c.expect(cli_code({"expand", fixtures::data(f)}, &o1) == 0, std::string("expand ") + f);
            cli_code({"expand", fixtures::data(f)}, &o2);
            c.expect(o1 == o2 && !o1.empty(), std::string("expand output differs for ") + f);
            std::string dot;
            c.expect(cli_code({"render", fixtures::data(f)}, &dot) == 0, "render");
            c.expect(dot_parses(dot), std::string("DOT does not parse for ") + f);
        }
        c.expect(cli_code({"expand", fixtures::data("bad_field.json")}) == 1, "unknown field exit code");
        c.expect(cli_code({"expand", fixtures::data("bad_crossing.json")}) == 1, "crossing exit code");
        c.expect(cli_code({"verify", fixtures::data("fix_c.json"), "--corrupt-folding"}) == 3, "mismatch exit code");
        bool found = false;
        for (auto &T : sweep_instances(3, Kind::C)) {
            if (b_hypothesis(T)) continue;
            cli::Instance inst;
            inst.rank = 3;
            inst.kind = Kind::B;
            for (int i = 0; i < 5; ++i)
                inst.triangulation.push_back(i == 2 ? std::array<int, 2>{T.tail, T.head}
                                                    : std::array<int, 2>{T.tau[i].a, T.tau[i].b});
            std::string path = "acceptance_violating_b.json";
            std::ofstream(path) << cli::instance_json(inst);
            c.expect(cli_code({"verify", path}) == 2, "B hypothesis exit code");
            std::remove(path.c_str());
            found = true;
            break;
        }
        c.expect(found, "no B-violating instance found");
    });

    return failures;
}
