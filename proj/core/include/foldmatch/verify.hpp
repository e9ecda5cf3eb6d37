#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "foldmatch/folded.hpp"
#include "foldmatch/oracle.hpp"

namespace fm {

struct OrbitRow {
    Orbit orbit;
    Expansion graph, oracle;
    std::optional<Poly> formula_f;
    std::optional<std::vector<int>> formula_g;
    bool ok = false;
    std::string diff;
};

struct Report {
    ThetaTriangulation T;
    Kind kind = Kind::C;
    int seeds = 0, variables = 0;
    std::vector<OrbitRow> rows;
    int passed() const;
    bool ok() const { return passed() == static_cast<int>(rows.size()); }
};

Report verify_theorems(const ThetaTriangulation &T, Kind kind, bool corrupt = false);

// every theta-invariant triangulation of rank n in both diameter orientations;
// B keeps the orientations where the hypothesis holds
std::vector<ThetaTriangulation> sweep_instances(int n, Kind kind);

struct Sweep {
    int n = 0;
    int triangulations = 0;  // distinct triangulations covered
    int instances = 0;       // oriented instances
    int orbits = 0;
    std::vector<Report> failures;
    bool ok() const { return failures.empty(); }
};

Sweep sweep(int n, Kind kind, bool corrupt = false, int threads = 0);

// FOLDMATCH_THREADS, else hardware concurrency
int thread_count();
void parallel_for(int count, int threads, const std::function<void(int)> &body);

}  // namespace fm
