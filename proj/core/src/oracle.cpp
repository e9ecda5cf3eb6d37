#include "foldmatch/oracle.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

namespace fm {

Matrix signed_adjacency(const Triangulation &T) {
    int m = T.rank();
    Matrix B(m, std::vector<int>(m, 0));
    for (auto &t : T.tris) {
        std::array<Diag, 3> cyc = {Diag(t[0], t[1]), Diag(t[1], t[2]), Diag(t[2], t[0])};
        for (int k = 0; k < 3; ++k) {
            int i = T.index(cyc[k]), j = T.index(cyc[(k + 1) % 3]);
            if (!i || !j) continue;
            // cyc[k+1] follows cyc[k] counterclockwise
            B[i - 1][j - 1] -= 1;
            B[j - 1][i - 1] += 1;
        }
    }
    return B;
}

Matrix fold_exchange_matrix(const ThetaTriangulation &T, Kind kind, bool corrupt) {
    int n = T.n;
    Matrix b = signed_adjacency(T.full());
    Matrix B(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            B[i][j] = b[i][j];
            if (j != 2 * n - 2 - j) B[i][j] += b[i][2 * n - 2 - j];
        }
    bool transpose = (kind == Kind::C) != corrupt;
    if (!transpose) return B;
    Matrix C(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) C[i][j] = -B[j][i];
    return C;
}

bool skew_symmetrizable(const Matrix &B) {
    int n = static_cast<int>(B.size());
    if (n == 0) return true;
    // propagate d_j / d_i = -b_ij / b_ji along nonzero entries
    std::vector<long long> num(n, 0), den(n, 1);
    for (int s = 0; s < n; ++s) {
        if (num[s]) continue;
        num[s] = 1;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int i = stack.back();
            stack.pop_back();
            for (int j = 0; j < n; ++j) {
                if (i == j) continue;
                if ((B[i][j] == 0) != (B[j][i] == 0)) return false;
                if (B[i][j] == 0) continue;
                if ((B[i][j] > 0) == (B[j][i] > 0)) return false;
                // d_i b_ij = -d_j b_ji
                long long nj = num[i] * B[i][j], dj = den[i] * -B[j][i];
                if (!num[j]) {
                    long long g = std::gcd(nj, dj);
                    num[j] = nj / g;
                    den[j] = dj / g;
                    if (den[j] < 0) num[j] = -num[j], den[j] = -den[j];
                    stack.push_back(j);
                } else if (num[j] * dj != nj * den[j]) {
                    return false;
                }
            }
        }
    }
    for (int i = 0; i < n; ++i)
        if (B[i][i] != 0) return false;
    return true;
}

Matrix mutate_matrix(const Matrix &B, int k) {
    size_t R = B.size(), C = B[0].size();
    Matrix out(R, std::vector<int>(C, 0));
    for (size_t i = 0; i < R; ++i)
        for (size_t j = 0; j < C; ++j) {
            if (static_cast<int>(i) == k || static_cast<int>(j) == k) out[i][j] = -B[i][j];
            else
                out[i][j] = B[i][j] + (std::abs(B[i][k]) * B[k][j] + B[i][k] * std::abs(B[k][j])) / 2;
        }
    return out;
}

Seed initial_seed(const Matrix &B0) {
    int n = static_cast<int>(B0.size());
    Seed s;
    s.B = B0;
    for (int i = 0; i < n; ++i) {
        std::vector<int> row(n, 0);
        row[i] = 1;
        s.B.push_back(row);
    }
    for (int i = 0; i < n; ++i) s.X.push_back(Poly::variable(2 * n, i));
    return s;
}

Seed mutate_seed(const Seed &s, int k) {
    int n = static_cast<int>(s.X.size());
    Poly p1 = Poly::constant(2 * n, 1), p2 = Poly::constant(2 * n, 1);
    for (int i = 0; i < n; ++i) {
        int b = s.B[i][k];
        for (int r = 0; r < std::abs(b); ++r) (b > 0 ? p1 : p2) = (b > 0 ? p1 : p2) * s.X[i];
    }
    std::vector<int> up(2 * n, 0), down(2 * n, 0);
    for (int j = 0; j < n; ++j) {
        int b = s.B[n + j][k];
        if (b > 0) up[n + j] = b;
        else down[n + j] = -b;
    }
    p1 = p1 * y_monomial(up);
    p2 = p2 * y_monomial(down);
    Seed t;
    t.X = s.X;
    t.X[k] = (p1 + p2).exact_div(s.X[k]);
    t.B = mutate_matrix(s.B, k);
    return t;
}

Expansion f_and_g(const Poly &X, const Matrix &B0) {
    int n = static_cast<int>(B0.size());
    Poly F(n);
    std::vector<int> g;
    bool first = true;
    for (auto &[e, c] : X.terms()) {
        std::vector<int> ye(n), deg(n);
        for (int j = 0; j < n; ++j) ye[j] = e[n + j];
        for (int i = 0; i < n; ++i) {
            deg[i] = e[i];
            for (int j = 0; j < n; ++j) deg[i] -= ye[j] * B0[i][j];
        }
        if (first) g = deg, first = false;
        else if (g != deg) throw Error(ErrorCode::NotHomogeneous, "cluster variable is not g-homogeneous");
        F.add_term(make_exponent(ye), c);
    }
    return {F, g};
}

namespace {

template <class Slot, class Flip>
std::pair<std::map<Slot, Poly>, int> closure(const Matrix &B0, std::vector<Slot> slots0, Flip flip, int budget) {
    int n = static_cast<int>(B0.size());
    struct State {
        std::vector<Slot> slots;
        Seed seed;
    };
    auto key = [](std::vector<Slot> s) {
        std::sort(s.begin(), s.end());
        return s;
    };
    std::set<std::vector<Slot>> seen{key(slots0)};
    std::map<Slot, Poly> var;
    Seed s0 = initial_seed(B0);
    for (int k = 0; k < n; ++k) var.emplace(slots0[k], s0.X[k]);
    std::deque<State> queue{{slots0, s0}};
    while (!queue.empty()) {
        State cur = std::move(queue.front());
        queue.pop_front();
        for (int k = 0; k < n; ++k) {
            auto slots = cur.slots;
            slots[k] = flip(cur.slots, k);
            if (!seen.insert(key(slots)).second) continue;
            if (static_cast<int>(seen.size()) > budget)
                throw Error(ErrorCode::ClosureBudgetExceeded, "more than " + std::to_string(budget) + " seeds");
            Seed next = mutate_seed(cur.seed, k);
            var.emplace(slots[k], next.X[k]);
            queue.push_back({std::move(slots), std::move(next)});
        }
    }
    return {var, static_cast<int>(seen.size())};
}

}  // namespace

OracleTable explore(const ThetaTriangulation &T, Kind kind, bool corrupt, int budget) {
    int n = T.n, N = T.N();
    Matrix B0 = fold_exchange_matrix(T, kind, corrupt);
    std::vector<Orbit> slots0;
    for (int k = 1; k <= n; ++k) slots0.push_back(T.orbit(k));
    auto flip = [&](const std::vector<Orbit> &slots, int k) {
        std::vector<Diag> all;
        for (auto &o : slots) all.insert(all.end(), o.d.begin(), o.d.end());
        Orbit r;
        for (auto &e : slots[k].d) r.d.push_back(flip_diagonal(all, e, N));
        std::sort(r.d.begin(), r.d.end());
        return r;
    };
    auto [var, seeds] = closure(B0, slots0, flip, budget);
    OracleTable out;
    out.seeds = seeds;
    out.variables = static_cast<int>(var.size());
    for (auto &[o, X] : var) out.values.emplace(o, f_and_g(X, B0));
    return out;
}

OracleTableA explore_A(const Triangulation &T, int budget) {
    Matrix B0 = signed_adjacency(T);
    auto flip = [&](const std::vector<Diag> &slots, int k) { return flip_diagonal(slots, slots[k], T.N); };
    auto [var, seeds] = closure(B0, T.tau, flip, budget);
    OracleTableA out;
    out.seeds = seeds;
    out.variables = static_cast<int>(var.size());
    for (auto &[d, X] : var) out.values.emplace(d, f_and_g(X, B0));
    return out;
}

}  // namespace fm
