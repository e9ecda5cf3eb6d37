#pragma once

#include <map>
#include <vector>

#include "foldmatch/geometry.hpp"
#include "foldmatch/poly.hpp"
#include "foldmatch/snake.hpp"

namespace fm {

using Matrix = std::vector<std::vector<int>>;

// b_ij = +1 when tau_j follows tau_i clockwise in a common triangle
Matrix signed_adjacency(const Triangulation &T);
Matrix fold_exchange_matrix(const ThetaTriangulation &T, Kind kind, bool corrupt = false);
bool skew_symmetrizable(const Matrix &B);
// works on extended (m x n) matrices
Matrix mutate_matrix(const Matrix &B, int k);

// principal coefficients: x_i are variables 0..n-1, y_j are n..2n-1
struct Seed {
    Matrix B;  // 2n x n
    std::vector<Poly> X;
};

Seed initial_seed(const Matrix &B0);
Seed mutate_seed(const Seed &s, int k);  // k 0-based
Expansion f_and_g(const Poly &X, const Matrix &B0);

struct OracleTable {
    std::map<Orbit, Expansion> values;
    int seeds = 0;
    int variables = 0;
};

struct OracleTableA {
    std::map<Diag, Expansion> values;
    int seeds = 0;
    int variables = 0;
};

OracleTable explore(const ThetaTriangulation &T, Kind kind, bool corrupt = false, int budget = 100000);
OracleTableA explore_A(const Triangulation &T, int budget = 100000);

}  // namespace fm
