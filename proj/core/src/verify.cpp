#include "foldmatch/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <mutex>
#include <set>
#include <thread>

namespace fm {

int Report::passed() const {
    return static_cast<int>(std::count_if(rows.begin(), rows.end(), [](auto &r) { return r.ok; }));
}

Report verify_theorems(const ThetaTriangulation &T, Kind kind, bool corrupt) {
    if (kind == Kind::A) throw Error(ErrorCode::InvalidOperation, "verify needs kind B or C");
    if (kind == Kind::B && !b_hypothesis(T))
        throw Error(ErrorCode::UnsupportedTriangulationForB,
                    "tau_n and tau_{n-1} do not bound a triangle with a boundary side");
    Report rep;
    rep.T = T;
    rep.kind = kind;
    auto table = explore(T, kind, corrupt);
    rep.seeds = table.seeds;
    rep.variables = table.variables;
    for (auto &o : all_orbits(T.n)) {
        OrbitRow row;
        row.orbit = o;
        row.oracle = table.values.at(o);
        std::string why;
        try {
            row.graph = expand_orbit(T, o, kind);
            if (kind == Kind::B) {
                row.formula_f = f_B_formula(T, o);
            } else {
                auto c = c_formula(T, o);
                row.formula_f = c.F;
                row.formula_g = c.g;
            }
        } catch (const Error &e) {
            why = e.what();
        }
        if (why.empty()) {
            if (!(row.graph.F == row.oracle.F)) why += "F graph " + row.graph.F.str() + " vs oracle " + row.oracle.F.str() + "; ";
            if (row.graph.g != row.oracle.g)
                why += "g graph " + g_string(row.graph.g) + " vs oracle " + g_string(row.oracle.g) + "; ";
            if (row.formula_f && !(*row.formula_f == row.graph.F))
                why += "F formula " + row.formula_f->str() + " vs graph; ";
            if (row.formula_g && *row.formula_g != row.graph.g)
                why += "g formula " + g_string(*row.formula_g) + " vs graph; ";
        }
        row.ok = why.empty();
        row.diff = why;
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

std::vector<ThetaTriangulation> sweep_instances(int n, Kind kind) {
    std::vector<ThetaTriangulation> out;
    for (auto &T : theta_triangulations(n)) {
        Diag d;
        for (auto &e : T)
            if (is_diameter(e, n)) d = e;
        for (auto [tail, head] : {std::make_pair(d.a, d.b), std::make_pair(d.b, d.a)}) {
            auto I = index_theta(n, T, tail, head);
            if (kind == Kind::B && !b_hypothesis(I)) continue;
            out.push_back(I);
        }
    }
    return out;
}

Sweep sweep(int n, Kind kind, bool corrupt, int threads) {
    auto inst = sweep_instances(n, kind);
    std::vector<Report> reports(inst.size());
    parallel_for(static_cast<int>(inst.size()), threads, [&](int i) { reports[i] = verify_theorems(inst[i], kind, corrupt); });
    Sweep s;
    s.n = n;
    s.instances = static_cast<int>(inst.size());
    s.orbits = n * (n + 1);
    std::set<std::vector<Diag>> distinct;
    for (auto &r : reports) {
        auto t = r.T.tau;
        std::sort(t.begin(), t.end());
        distinct.insert(t);
        if (!r.ok()) s.failures.push_back(r);
    }
    s.triangulations = static_cast<int>(distinct.size());
    return s;
}

int thread_count() {
    if (const char *v = std::getenv("FOLDMATCH_THREADS")) {
        int k = std::atoi(v);
        if (k > 0) return k;
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_for(int count, int threads, const std::function<void(int)> &body) {
    if (threads <= 0) threads = thread_count();
    threads = std::min(threads, count);
    if (threads <= 1) {
        for (int i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<int> next{0};
    std::exception_ptr err;
    std::mutex mu;
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (int i; (i = next++) < count;) {
                try {
                    body(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(mu);
                    if (!err) err = std::current_exception();
                }
            }
        });
    for (auto &th : pool) th.join();
    if (err) std::rethrow_exception(err);
}

}  // namespace fm
