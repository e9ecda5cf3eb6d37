#pragma once

#include <array>
#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fm {

enum class ErrorCode {
    ParseError,
    InvalidVertex,
    DegenerateDiagonal,
    CrossingDiagonals,
    NotMaximal,
    NotThetaInvariant,
    DiameterNotAtIndexN,
    InvalidOperation,
    OrbitInTriangulation,
    DiagonalInTriangulation,
    BoundarySegment,
    NotCrossing,
    NoCommonTriangle,
    OddDiameterCoordinate,
    UnsupportedTriangulationForB,
    NoCommonExteriorEdge,
    CompanionOrbitNotFound,
    InexactDivision,
    NotHomogeneous,
    ClosureBudgetExceeded,
    Overflow,
};

const char *code_name(ErrorCode c);

class Error : public std::runtime_error {
public:
    Error(ErrorCode c, const std::string &msg);
    ErrorCode code;
};

enum class Kind { A, B, C };
char kind_char(Kind k);

// unordered pair, a < b
struct Diag {
    int a = 0, b = 0;
    Diag() = default;
    Diag(int x, int y) : a(x < y ? x : y), b(x < y ? y : x) {}
    bool has(int v) const { return a == v || b == v; }
    int other(int v) const { return v == a ? b : a; }
    auto operator<=>(const Diag &) const = default;
};

// oriented diagonal (s -> t)
using Arc = std::pair<int, int>;

std::string to_string(Diag d);

bool between_open(int x, int a, int b, int N);
bool crosses(Diag e, Diag f, int N);
bool is_boundary(Diag e, int N);
std::vector<Diag> all_diagonals(int N);
std::vector<std::vector<Diag>> all_triangulations(int N);
// ccw vertex triples (a<b<c)
std::vector<std::array<int, 3>> triangles(const std::vector<Diag> &T, int N);
// other diagonal of the quadrilateral around e
Diag flip_diagonal(const std::vector<Diag> &T, Diag e, int N);

// triangulated polygon with tau_1..tau_m (tau[i] is tau_{i+1})
struct Triangulation {
    int N = 0;
    std::vector<Diag> tau;
    std::vector<std::array<int, 3>> tris;

    Triangulation() = default;
    Triangulation(int vertex_count, std::vector<Diag> diagonals);
    int rank() const { return static_cast<int>(tau.size()); }
    int index(Diag e) const;  // 1-based, 0 if absent
    bool contains(Diag e) const { return index(e) != 0; }
    // third vertex of the triangle on e whose apex lies on the same side as `side`
    int apex(Diag e, int side) const;
};

// checks and returns the triangles
std::vector<std::array<int, 3>> validate(int N, const std::vector<Diag> &tau);

struct PolygonConfig {
    int n = 0;
    bool restricted = false;
    int vertex_count() const { return restricted ? n + 3 : 2 * n + 2; }
};

int theta(int v, const PolygonConfig &cfg);
int theta(int v, int n);
Diag theta(Diag e, int n);
bool is_diameter(Diag e, int n);

struct Orbit {
    std::vector<Diag> d;  // 1 (diameter) or 2, sorted
    bool diameter() const { return d.size() == 1; }
    auto operator<=>(const Orbit &) const = default;
};

std::string to_string(const Orbit &o);
Orbit orbit_of(Diag g, int n);
std::vector<Orbit> all_orbits(int n);

// theta-invariant triangulation of the (2n+2)-gon, tau_{2n-i} = theta(tau_i), tau_n = d oriented tail->head
struct ThetaTriangulation {
    int n = 0;
    std::vector<Diag> tau;
    int tail = 0, head = 0;

    int N() const { return 2 * n + 2; }
    Diag diameter() const { return tau[n - 1]; }
    bool contains(Diag e) const;
    bool contains(const Orbit &o) const;
    int orbit_index(const Orbit &o) const;  // i if o = {tau_i, tau_{2n-i}}, else 0
    Orbit orbit(int i) const;               // 1-based
    Triangulation full() const { return Triangulation(N(), tau); }
};

// Builds from the given list; entries after n are re-sorted into theta order.
ThetaTriangulation make_theta(int n, const std::vector<Diag> &tau, int tail, int head);
void validate(const ThetaTriangulation &T);
std::vector<std::vector<Diag>> theta_triangulations(int n);
// canonical indexing: left diagonals sorted, the side of d's left triangle last when it is the only diagonal side
ThetaTriangulation index_theta(int n, const std::vector<Diag> &T, int tail, int head);
ThetaTriangulation flip_orbit(const ThetaTriangulation &T, int k);
ThetaTriangulation reflect(const ThetaTriangulation &T);  // v -> -v
Diag reflect(Diag e, int N);
Orbit reflect(const Orbit &o, int N);

// restriction to the (n+3)-gon, right side of d collapsed to * = n+2
struct Restriction {
    int n = 0, N = 0, M = 0, star = 0;
    int tail = 0, head = 0;
    Triangulation tbar;
    std::vector<Diag> full;

    int rmap(int v) const;
    Diag rmap(Diag e) const;
    std::vector<Diag> res(const Orbit &o) const;
    Arc orient(Diag g) const;  // (p,*) or (a,b)
    std::vector<int> crossing_set(Diag g) const;  // tau indices
    // apex of d's left triangle
    int left_apex() const;
};

Restriction restrict(const ThetaTriangulation &T);
std::vector<Diag> restrict_orbit(const ThetaTriangulation &T, const Orbit &o);

enum class Chirality { cw, ccw };
Chirality chirality(const ThetaTriangulation &T);
// side (v,n+1) of d's left triangle in the restriction
bool cw_side(const Restriction &R);
bool b_hypothesis(const ThetaTriangulation &T);

// diagonal outside T-bar crossing exactly crossing_set(g) minus d
std::optional<Diag> companion(const Restriction &R, Diag g);
std::vector<Arc> rotated_restrict_orbit(const Restriction &R, const Orbit &o, bool flip_roles = false);

bool lamination_crosses(Diag tau, int p, int q, int N);
std::vector<int> crossing_vector(int p1, int q1, int p2, int q2, const Triangulation &T);
std::vector<int> rotated_restrict_vector(const std::vector<int> &v, int n);

}  // namespace fm
