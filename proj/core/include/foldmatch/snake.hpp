#pragma once

#include <array>
#include <vector>

#include "foldmatch/geometry.hpp"
#include "foldmatch/poly.hpp"

namespace fm {

enum Side { S = 0, E = 1, N = 2, W = 3 };

struct GVertex {
    int pv = -1;  // polygon vertex, -1 for hexagon subdivision points
    double x = 0, y = 0;
};

struct GEdge {
    int u = 0, v = 0;
    std::vector<Diag> labels;  // first entry is the native label
    std::vector<int> tiles;
    bool arc = false;
    bool interior() const { return tiles.size() == 2; }
};

struct Tile {
    int label = 0;  // tau index
    int rel = 1;
    std::vector<int> edges;
    std::array<int, 4> side{-1, -1, -1, -1};    // S,E,N,W edge ids (-1 once subdivided)
    std::array<int, 4> corner{-1, -1, -1, -1};  // SW,SE,NE,NW vertex ids
    bool hexagon = false;
    int mid = -1;  // middle edge of the subdivided side
    int part = 0;  // 0 plain, 1/2 which hat a glued tile came from
};

using Matching = std::vector<int>;  // sorted edge ids

struct SnakeGraph {
    int rank = 0;
    int polygon = 0;  // vertex count of the labelling polygon
    int star = -1;
    std::vector<Diag> tau;  // labelling triangulation

    std::vector<GVertex> verts;
    std::vector<GEdge> edges;
    std::vector<Tile> tiles;
    std::vector<int> crossings;  // tau indices crossed, with multiplicity
    Matching pminus;             // reference of the height rule
    Matching gref;               // reference of the g-vector (P+ when complement)
    bool complement = false;     // heights measured down from the top monomial
    int arc = -1;

    // hexagon bookkeeping of a hat graph
    int hex_tile = -1, s_w = -1, s_x = -1;

    int add_vertex(int pv, double x, double y);
    int add_edge(int u, int v, std::vector<Diag> labels, int tile);
    int find_edge(int u, int v) const;
    int tile_with_label(int label) const;
    std::vector<int> tile_vertices(int t) const;
    int label_index(Diag d) const;
    std::string label_name(Diag d) const;
    const Matching &reference() const { return complement ? gref : pminus; }
};

std::vector<int> crossing_sequence(Arc gamma, const Triangulation &T);
SnakeGraph build_snake_graph(Arc gamma, const Triangulation &T);

std::vector<Matching> enumerate_matchings(const SnakeGraph &G);
std::vector<Matching> brute_force_matchings(const SnakeGraph &G);
// the two matchings made of boundary edges
std::vector<Matching> boundary_matchings(const SnakeGraph &G, const std::vector<Matching> &all);
Matching minimal_matching(const SnakeGraph &G);

// tile-instance exponents indexed by label-1
std::vector<int> hybrid_height(const SnakeGraph &G, const Matching &ref, const Matching &P);
std::vector<int> height_exponents(const SnakeGraph &G, const Matching &P);
std::vector<int> face_parity_height(const SnakeGraph &G, const Matching &ref, const Matching &P);
Poly height_monomial(const SnakeGraph &G, const Matching &P);
std::vector<int> top_exponents(const SnakeGraph &G);

Poly f_polynomial(const SnakeGraph &G);
std::vector<int> g_vector(const SnakeGraph &G);
// matchings ordered by height degree, reference first
std::vector<Matching> sorted_matchings(const SnakeGraph &G);

struct Expansion {
    Poly F;
    std::vector<int> g;
    bool operator==(const Expansion &o) const { return F == o.F && g == o.g; }
};

std::string g_string(const std::vector<int> &g);

// type-A values with the extension clauses (loops and boundary segments give 1, 0)
Expansion expand_diagonal(Diag gamma, const Triangulation &T);
Poly f_diagonal(int p, int q, const Triangulation &T);

bool skein_check(Diag g1, Diag g2, const Triangulation &T);

}  // namespace fm
