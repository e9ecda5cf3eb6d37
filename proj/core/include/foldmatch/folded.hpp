#pragma once

#include <map>
#include <optional>

#include "foldmatch/geometry.hpp"
#include "foldmatch/snake.hpp"

namespace fm {

// snake graph of gamma over T-bar with the B hexagon / C label duplication
SnakeGraph build_hat(const Restriction &R, Arc gamma, Kind kind);

struct Glued {
    SnakeGraph G;
    std::vector<int> emap1, emap2;
    std::vector<int> vmap2;  // G2 vertex -> glued vertex
    int glued = -1;
};

// identifies edge e2 of G2 with edge e1 of G1; vmap sends e2's endpoints to G1 vertices
Glued glue(const SnakeGraph &G1, const SnakeGraph &G2, int e1, int e2, const std::map<int, int> &vmap);
std::optional<Matching> glue_matching(const Glued &g, const Matching &P1, const Matching &P2);

SnakeGraph build_G_ab_B(const ThetaTriangulation &T, const Orbit &o);
SnakeGraph build_G_ab_C(const ThetaTriangulation &T, const Orbit &o);
SnakeGraph build_G_ab(const ThetaTriangulation &T, const Orbit &o, Kind kind);

// F and g of the orbit's graph; orbit in T gives (1, e_i)
Expansion expand_orbit(const ThetaTriangulation &T, const Orbit &o, Kind kind);

struct Companions {
    bool diameter = false;
    // full-polygon vertices
    int a = -1, b = -1, c = -1, d = -1, bbar = -1, cbar = -1, dbar = -1;
    Diag glue_label;  // restricted coordinates
};

std::optional<Companions> companions(const Restriction &R, const Orbit &o);

Poly f_B_formula(const ThetaTriangulation &T, const Orbit &o);
Expansion c_formula(const ThetaTriangulation &T, const Orbit &o);
Poly f_C_formula(const ThetaTriangulation &T, const Orbit &o);
std::vector<int> g_C_formula(const ThetaTriangulation &T, const Orbit &o);

}  // namespace fm
