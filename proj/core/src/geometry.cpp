#include "foldmatch/geometry.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace fm {

const char *code_name(ErrorCode c) {
    switch (c) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidVertex: return "InvalidVertex";
    case ErrorCode::DegenerateDiagonal: return "DegenerateDiagonal";
    case ErrorCode::CrossingDiagonals: return "CrossingDiagonals";
    case ErrorCode::NotMaximal: return "NotMaximal";
    case ErrorCode::NotThetaInvariant: return "NotThetaInvariant";
    case ErrorCode::DiameterNotAtIndexN: return "DiameterNotAtIndexN";
    case ErrorCode::InvalidOperation: return "InvalidOperation";
    case ErrorCode::OrbitInTriangulation: return "OrbitInTriangulation";
    case ErrorCode::DiagonalInTriangulation: return "DiagonalInTriangulation";
    case ErrorCode::BoundarySegment: return "BoundarySegment";
    case ErrorCode::NotCrossing: return "NotCrossing";
    case ErrorCode::NoCommonTriangle: return "NoCommonTriangle";
    case ErrorCode::OddDiameterCoordinate: return "OddDiameterCoordinate";
    case ErrorCode::UnsupportedTriangulationForB: return "UnsupportedTriangulationForB";
    case ErrorCode::NoCommonExteriorEdge: return "NoCommonExteriorEdge";
    case ErrorCode::CompanionOrbitNotFound: return "CompanionOrbitNotFound";
    case ErrorCode::InexactDivision: return "InexactDivision";
    case ErrorCode::NotHomogeneous: return "NotHomogeneous";
    case ErrorCode::ClosureBudgetExceeded: return "ClosureBudgetExceeded";
    case ErrorCode::Overflow: return "Overflow";
    }
    return "Unknown";
}

Error::Error(ErrorCode c, const std::string &msg)
    : std::runtime_error(std::string(code_name(c)) + ": " + msg), code(c) {}

char kind_char(Kind k) { return k == Kind::A ? 'A' : k == Kind::B ? 'B' : 'C'; }

std::string to_string(Diag d) {
    return "(" + std::to_string(d.a) + "," + std::to_string(d.b) + ")";
}

static int mod(int x, int m) { return ((x % m) + m) % m; }

bool between_open(int x, int a, int b, int N) {
    int k = mod(x - a, N);
    return 0 < k && k < mod(b - a, N);
}

bool crosses(Diag e, Diag f, int N) {
    if (e.has(f.a) || e.has(f.b)) return false;
    return between_open(f.a, e.a, e.b, N) != between_open(f.b, e.a, e.b, N);
}

bool is_boundary(Diag e, int N) {
    int k = mod(e.a - e.b, N);
    return k == 1 || k == N - 1;
}

std::vector<Diag> all_diagonals(int N) {
    std::vector<Diag> out;
    for (int a = 0; a < N; ++a)
        for (int b = a + 2; b < N; ++b)
            if (!(a == 0 && b == N - 1)) out.emplace_back(a, b);
    return out;
}

std::vector<std::vector<Diag>> all_triangulations(int N) {
    // polygon lo..hi with side (lo,hi)
    std::map<std::pair<int, int>, std::vector<std::vector<Diag>>> memo;
    auto rec = [&](auto &&self, int lo, int hi) -> const std::vector<std::vector<Diag>> & {
        auto key = std::make_pair(lo, hi);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        std::vector<std::vector<Diag>> res;
        if (hi - lo < 2) {
            res.emplace_back();
        } else {
            for (int k = lo + 1; k < hi; ++k) {
                auto L = self(self, lo, k);
                auto R = self(self, k, hi);
                for (auto &l : L)
                    for (auto &r : R) {
                        std::vector<Diag> s = l;
                        s.insert(s.end(), r.begin(), r.end());
                        if (k - lo > 1) s.emplace_back(lo, k);
                        if (hi - k > 1) s.emplace_back(k, hi);
                        res.push_back(std::move(s));
                    }
            }
        }
        return memo[key] = std::move(res);
    };
    auto out = rec(rec, 0, N - 1);
    for (auto &t : out) std::sort(t.begin(), t.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::array<int, 3>> triangles(const std::vector<Diag> &T, int N) {
    std::set<Diag> es(T.begin(), T.end());
    for (int v = 0; v < N; ++v) es.emplace(v, (v + 1) % N);
    std::vector<std::array<int, 3>> out;
    for (int a = 0; a < N; ++a)
        for (int b = a + 1; b < N; ++b) {
            if (!es.count(Diag(a, b))) continue;
            for (int c = b + 1; c < N; ++c)
                if (es.count(Diag(b, c)) && es.count(Diag(a, c))) out.push_back({a, b, c});
        }
    return out;
}

Diag flip_diagonal(const std::vector<Diag> &T, Diag e, int N) {
    std::vector<int> others;
    for (auto &t : triangles(T, N)) {
        int hit = 0, r = -1;
        for (int x : t) {
            if (e.has(x)) ++hit;
            else r = x;
        }
        if (hit == 2) others.push_back(r);
    }
    if (others.size() != 2) throw Error(ErrorCode::InvalidOperation, "cannot flip " + to_string(e));
    return Diag(others[0], others[1]);
}

Triangulation::Triangulation(int vertex_count, std::vector<Diag> diagonals)
    : N(vertex_count), tau(std::move(diagonals)), tris(triangles(tau, N)) {}

int Triangulation::index(Diag e) const {
    for (size_t i = 0; i < tau.size(); ++i)
        if (tau[i] == e) return static_cast<int>(i) + 1;
    return 0;
}

int Triangulation::apex(Diag e, int side) const {
    bool sarc = between_open(side, e.a, e.b, N);
    for (auto &t : tris) {
        if (!(std::count(t.begin(), t.end(), e.a) && std::count(t.begin(), t.end(), e.b))) continue;
        for (int r : t)
            if (!e.has(r) && between_open(r, e.a, e.b, N) == sarc) return r;
    }
    throw Error(ErrorCode::InvalidOperation, "no triangle on " + to_string(e));
}

std::vector<std::array<int, 3>> validate(int N, const std::vector<Diag> &tau) {
    if (N < 4) throw Error(ErrorCode::InvalidVertex, "polygon needs at least 4 vertices");
    std::set<Diag> seen;
    for (auto &e : tau) {
        if (e.a < 0 || e.b >= N)
            throw Error(ErrorCode::InvalidVertex, to_string(e) + " outside 0.." + std::to_string(N - 1));
        if (e.a == e.b) throw Error(ErrorCode::DegenerateDiagonal, to_string(e) + " is a loop");
        if (is_boundary(e, N)) throw Error(ErrorCode::DegenerateDiagonal, to_string(e) + " is a boundary segment");
        if (!seen.insert(e).second) throw Error(ErrorCode::DegenerateDiagonal, to_string(e) + " repeated");
    }
    for (size_t i = 0; i < tau.size(); ++i)
        for (size_t j = i + 1; j < tau.size(); ++j)
            if (crosses(tau[i], tau[j], N))
                throw Error(ErrorCode::CrossingDiagonals, to_string(tau[i]) + " crosses " + to_string(tau[j]));
    if (static_cast<int>(tau.size()) != N - 3)
        throw Error(ErrorCode::NotMaximal,
                    std::to_string(tau.size()) + " diagonals, expected " + std::to_string(N - 3));
    return triangles(tau, N);
}

int theta(int v, const PolygonConfig &cfg) {
    if (cfg.restricted) throw Error(ErrorCode::InvalidOperation, "theta on the restricted polygon");
    return theta(v, cfg.n);
}

int theta(int v, int n) { return (v + n + 1) % (2 * n + 2); }
Diag theta(Diag e, int n) { return Diag(theta(e.a, n), theta(e.b, n)); }
bool is_diameter(Diag e, int n) { return theta(e, n) == e; }

std::string to_string(const Orbit &o) {
    std::string s = "{";
    for (size_t i = 0; i < o.d.size(); ++i) s += (i ? "," : "") + to_string(o.d[i]);
    return s + "}";
}

Orbit orbit_of(Diag g, int n) {
    Diag h = theta(g, n);
    if (h == g) return Orbit{{g}};
    return Orbit{{std::min(g, h), std::max(g, h)}};
}

std::vector<Orbit> all_orbits(int n) {
    std::set<Orbit> s;
    for (auto &e : all_diagonals(2 * n + 2)) s.insert(orbit_of(e, n));
    return {s.begin(), s.end()};
}

bool ThetaTriangulation::contains(Diag e) const {
    return std::find(tau.begin(), tau.end(), e) != tau.end();
}

bool ThetaTriangulation::contains(const Orbit &o) const {
    return std::all_of(o.d.begin(), o.d.end(), [&](Diag e) { return contains(e); });
}

int ThetaTriangulation::orbit_index(const Orbit &o) const {
    for (int i = 1; i <= n; ++i)
        if (orbit(i) == o) return i;
    return 0;
}

Orbit ThetaTriangulation::orbit(int i) const { return orbit_of(tau[i - 1], n); }

void validate(const ThetaTriangulation &T) {
    int n = T.n, N = T.N();
    if (n < 1) throw Error(ErrorCode::InvalidVertex, "rank must be positive");
    if (static_cast<int>(T.tau.size()) != 2 * n - 1)
        throw Error(ErrorCode::NotMaximal,
                    std::to_string(T.tau.size()) + " diagonals, expected " + std::to_string(2 * n - 1));
    validate(N, T.tau);
    Diag d = T.tau[n - 1];
    if (!is_diameter(d, n))
        throw Error(ErrorCode::DiameterNotAtIndexN, "tau_" + std::to_string(n) + "=" + to_string(d) + " is not a diameter");
    if (Diag(T.tail, T.head) != d || T.tail == T.head)
        throw Error(ErrorCode::DiameterNotAtIndexN, "orientation does not match tau_" + std::to_string(n));
    for (int i = 1; i < n; ++i)
        if (T.tau[2 * n - 1 - i] != theta(T.tau[i - 1], n))
            throw Error(ErrorCode::NotThetaInvariant,
                        "tau_" + std::to_string(2 * n - i) + " != theta(tau_" + std::to_string(i) + ")");
}

ThetaTriangulation make_theta(int n, const std::vector<Diag> &tau, int tail, int head) {
    ThetaTriangulation T{n, tau, tail, head};
    if (static_cast<int>(tau.size()) == 2 * n - 1) {
        validate(2 * n + 2, tau);
        std::set<Diag> s(tau.begin(), tau.end());
        for (auto &e : tau)
            if (!s.count(theta(e, n)))
                throw Error(ErrorCode::NotThetaInvariant, "theta" + to_string(e) + " missing");
        if (is_diameter(tau[n - 1], n)) {
            for (int i = 1; i < n; ++i) T.tau[2 * n - 1 - i] = theta(tau[i - 1], n);
            if (std::set<Diag>(T.tau.begin(), T.tau.end()) != s)
                throw Error(ErrorCode::NotThetaInvariant, "upper half is not the theta image of the lower half");
        }
    }
    validate(T);
    return T;
}

std::vector<std::vector<Diag>> theta_triangulations(int n) {
    std::vector<std::vector<Diag>> out;
    for (auto &T : all_triangulations(2 * n + 2)) {
        std::set<Diag> s(T.begin(), T.end());
        if (std::all_of(T.begin(), T.end(), [&](Diag e) { return s.count(theta(e, n)) > 0; })) out.push_back(T);
    }
    return out;
}

ThetaTriangulation index_theta(int n, const std::vector<Diag> &T, int tail, int head) {
    int N = 2 * n + 2;
    Diag d(tail, head);
    int span = mod(tail - head, N);
    std::vector<Diag> left;
    for (auto &e : T)
        if (e != d && mod(e.a - head, N) <= span && mod(e.b - head, N) <= span) left.push_back(e);
    std::sort(left.begin(), left.end());
    int v = -1;
    for (auto &t : triangles(T, N)) {
        if (!(std::count(t.begin(), t.end(), tail) && std::count(t.begin(), t.end(), head))) continue;
        for (int w : t)
            if (w != tail && w != head && 0 < mod(w - head, N) && mod(w - head, N) < span) v = w;
    }
    std::vector<Diag> sides;
    for (Diag s : {Diag(v, tail), Diag(v, head)})
        if (std::find(T.begin(), T.end(), s) != T.end()) sides.push_back(s);
    if (sides.size() == 1) {
        left.erase(std::find(left.begin(), left.end(), sides[0]));
        left.push_back(sides[0]);
    }
    std::vector<Diag> full = left;
    full.push_back(d);
    for (auto it = left.rbegin(); it != left.rend(); ++it) full.push_back(theta(*it, n));
    ThetaTriangulation R{n, full, tail, head};
    validate(R);
    return R;
}

ThetaTriangulation flip_orbit(const ThetaTriangulation &T, int k) {
    int n = T.n, N = T.N();
    ThetaTriangulation R = T;
    Diag e = T.tau[k - 1];
    Diag f = flip_diagonal(T.tau, e, N);
    R.tau[k - 1] = f;
    if (k == n) {
        R.tail = f.a;
        R.head = f.b;
        // keep tail on the side that follows the old tail
        if (!between_open(f.a, T.head, T.tail, N) && f.a != T.tail) std::swap(R.tail, R.head);
    } else {
        R.tau[2 * n - 1 - k] = theta(f, n);
    }
    return R;
}

Diag reflect(Diag e, int N) { return Diag(mod(-e.a, N), mod(-e.b, N)); }

Orbit reflect(const Orbit &o, int N) {
    Orbit r;
    for (auto &e : o.d) r.d.push_back(reflect(e, N));
    std::sort(r.d.begin(), r.d.end());
    return r;
}

ThetaTriangulation reflect(const ThetaTriangulation &T) {
    int N = T.N();
    ThetaTriangulation R{T.n, {}, mod(-T.head, N), mod(-T.tail, N)};
    for (auto &e : T.tau) R.tau.push_back(reflect(e, N));
    return R;
}

int Restriction::rmap(int v) const {
    int k = mod(v - head, N);
    return k <= n + 1 ? k : star;
}

Diag Restriction::rmap(Diag e) const { return Diag(rmap(e.a), rmap(e.b)); }

std::vector<Diag> Restriction::res(const Orbit &o) const {
    std::set<Diag> out;
    for (auto &e : o.d) {
        Diag r = rmap(e);
        if (r.a == r.b || is_boundary(r, M)) continue;
        out.insert(r);
    }
    return {out.begin(), out.end()};
}

Arc Restriction::orient(Diag g) const {
    if (g.b == star) return {g.a, star};
    return {g.a, g.b};
}

std::vector<int> Restriction::crossing_set(Diag g) const {
    std::vector<int> out;
    for (int i = 0; i < n; ++i)
        if (crosses(tbar.tau[i], g, M)) out.push_back(i + 1);
    return out;
}

int Restriction::left_apex() const {
    for (auto &t : tbar.tris) {
        if (!(std::count(t.begin(), t.end(), 0) && std::count(t.begin(), t.end(), n + 1))) continue;
        for (int w : t)
            if (w != 0 && w != n + 1 && w != star) return w;
    }
    throw Error(ErrorCode::NoCommonTriangle, "d has no left triangle");
}

Restriction restrict(const ThetaTriangulation &T) {
    Restriction R;
    R.n = T.n;
    R.N = T.N();
    R.M = T.n + 3;
    R.star = T.n + 2;
    R.tail = T.tail;
    R.head = T.head;
    R.full = T.tau;
    std::vector<Diag> tb;
    for (int i = 0; i < T.n; ++i) tb.push_back(R.rmap(T.tau[i]));
    R.tbar = Triangulation(R.M, tb);
    return R;
}

std::vector<Diag> restrict_orbit(const ThetaTriangulation &T, const Orbit &o) {
    if (T.contains(o)) throw Error(ErrorCode::OrbitInTriangulation, to_string(o) + " lies in T");
    return restrict(T).res(o);
}

Chirality chirality(const ThetaTriangulation &T) {
    if (T.n < 2) throw Error(ErrorCode::NoCommonTriangle, "rank 1 has no tau_{n-1}");
    Restriction R = restrict(T);
    Diag d = R.tbar.tau[T.n - 1], p = R.tbar.tau[T.n - 2];
    for (auto &t : R.tbar.tris) {
        std::array<Diag, 3> cyc = {Diag(t[0], t[1]), Diag(t[1], t[2]), Diag(t[2], t[0])};
        int k = static_cast<int>(std::find(cyc.begin(), cyc.end(), d) - cyc.begin());
        if (k == 3) continue;
        if (cyc[(k + 2) % 3] == p) return Chirality::cw;
        if (cyc[(k + 1) % 3] == p) return Chirality::ccw;
    }
    throw Error(ErrorCode::NoCommonTriangle, "tau_{n-1} and tau_n share no triangle");
}

bool cw_side(const Restriction &R) {
    int v = R.left_apex();
    return R.tbar.contains(Diag(v, R.n + 1));
}

bool b_hypothesis(const ThetaTriangulation &T) {
    if (T.n < 2) return true;
    Restriction R = restrict(T);
    int v = R.left_apex();
    std::vector<Diag> sides;
    for (Diag s : {Diag(0, v), Diag(v, T.n + 1)})
        if (R.tbar.contains(s)) sides.push_back(s);
    return sides.size() == 1 && sides[0] == R.tbar.tau[T.n - 2];
}

std::optional<Diag> companion(const Restriction &R, Diag g) {
    auto want = R.crossing_set(g);
    want.erase(std::remove(want.begin(), want.end(), R.n), want.end());
    std::optional<Diag> found;
    for (auto &e : all_diagonals(R.M)) {
        if (e == g || R.tbar.contains(e)) continue;
        if (R.crossing_set(e) == want) {
            if (found) throw Error(ErrorCode::InvalidOperation, "two companions for " + to_string(g));
            found = e;
        }
    }
    return found;
}

std::vector<Arc> rotated_restrict_orbit(const Restriction &R, const Orbit &o, bool flip_roles) {
    if (std::all_of(o.d.begin(), o.d.end(),
                    [&](Diag e) { return std::find(R.full.begin(), R.full.end(), e) != R.full.end(); }))
        throw Error(ErrorCode::OrbitInTriangulation, to_string(o) + " lies in T");
    auto rs = R.res(o);
    if (o.diameter()) {
        std::vector<Arc> out{R.orient(rs[0])};
        if (auto c = companion(R, rs[0])) out.push_back(R.orient(*c));
        return out;
    }
    if (rs.size() == 1) return {R.orient(rs[0])};
    bool cw = cw_side(R) != flip_roles;
    Diag g1 = rs[0], g2 = rs[1];
    if ((g1.a < g2.a) == cw) std::swap(g1, g2);
    std::vector<Arc> out{R.orient(g1)};
    if (auto c = companion(R, g2)) out.push_back(R.orient(*c));
    return out;
}

bool lamination_crosses(Diag tau, int p, int q, int N) {
    if (p == q) return false;
    int M2 = 2 * N;
    int A = mod(2 * tau.a - 1, M2), B = mod(2 * tau.b - 1, M2);
    return between_open(2 * p, A, B, M2) != between_open(2 * q, A, B, M2);
}

std::vector<int> crossing_vector(int p1, int q1, int p2, int q2, const Triangulation &T) {
    std::vector<int> v;
    for (auto &t : T.tau) v.push_back(lamination_crosses(t, p1, q1, T.N) && lamination_crosses(t, p2, q2, T.N) ? 1 : 0);
    return v;
}

std::vector<int> rotated_restrict_vector(const std::vector<int> &v, int n) {
    if (static_cast<int>(v.size()) < n) throw Error(ErrorCode::InvalidOperation, "vector shorter than n");
    if (v[n - 1] % 2 != 0) throw Error(ErrorCode::OddDiameterCoordinate, "coordinate n is odd");
    std::vector<int> out(v.begin(), v.begin() + n);
    out[n - 1] /= 2;
    return out;
}

}  // namespace fm
