#include "foldmatch/render.hpp"

#include <algorithm>

#include <fmt/format.h>

namespace fm {

namespace {

bool in(const Matching *m, int e) { return m && std::find(m->begin(), m->end(), e) != m->end(); }

std::string pv_name(const SnakeGraph &G, int v) {
    int p = G.verts[v].pv;
    if (p < 0) return "";
    return p == G.star ? "*" : std::to_string(p);
}

}  // namespace

std::string edge_label(const SnakeGraph &G, int e) {
    std::string s;
    for (auto &l : G.edges[e].labels) s += (s.empty() ? "" : ",") + G.label_name(l);
    return s;
}

std::string to_dot(const SnakeGraph &G, const Matching *overlay) {
    std::string out = "graph snake {\n";
    out += "  node [shape=point, width=0.08];\n";
    for (size_t v = 0; v < G.verts.size(); ++v)
        out += fmt::format("  v{} [pos=\"{:.2f},{:.2f}!\", xlabel=\"{}\"];\n", v, G.verts[v].x, G.verts[v].y,
                           pv_name(G, static_cast<int>(v)));
    for (size_t t = 0; t < G.tiles.size(); ++t) {
        auto &tile = G.tiles[t];
        out += fmt::format("  subgraph cluster_tile{} {{\n    label=\"{}{}\";\n", t + 1, tile.label,
                           tile.hexagon ? " hexagon" : "");
        for (int v : G.tile_vertices(static_cast<int>(t))) out += fmt::format("    v{};\n", v);
        out += "  }\n";
    }
    for (size_t e = 0; e < G.edges.size(); ++e) {
        auto &E = G.edges[e];
        std::string attrs;
        if (E.arc) attrs = "style=dashed, label=\"arc\"";
        else attrs = fmt::format("label=\"{}\"", edge_label(G, static_cast<int>(e)));
        if (in(overlay, static_cast<int>(e))) attrs += ", color=red, penwidth=3";
        out += fmt::format("  v{} -- v{} [{}];\n", E.u, E.v, attrs);
    }
    out += "}\n";
    return out;
}

std::string to_tikz(const SnakeGraph &G, const Matching *overlay) {
    std::string out = "\\begin{tikzpicture}[scale=1.6, every node/.style={font=\\scriptsize}]\n";
    for (size_t v = 0; v < G.verts.size(); ++v)
        out += fmt::format("  \\coordinate (v{}) at ({:.2f},{:.2f});\n", v, G.verts[v].x, G.verts[v].y);
    for (size_t t = 0; t < G.tiles.size(); ++t) {
        auto &tile = G.tiles[t];
        double cx = 0, cy = 0;
        auto vs = G.tile_vertices(static_cast<int>(t));
        for (int v : vs) cx += G.verts[v].x, cy += G.verts[v].y;
        cx /= vs.size();
        cy /= vs.size();
        out += fmt::format("  % tile {} {}\n", t + 1, tile.hexagon ? "hexagon" : "square");
        out += fmt::format("  \\node at ({:.2f},{:.2f}) {{${}$}};\n", cx, cy, tile.label);
    }
    for (size_t e = 0; e < G.edges.size(); ++e) {
        auto &E = G.edges[e];
        std::string style = in(overlay, static_cast<int>(e)) ? "red, very thick" : "";
        if (E.arc) {
            out += fmt::format("  % arc\n  \\draw[dashed{}] (v{}) to[bend left=40] (v{});\n", style.empty() ? "" : ", " + style,
                               E.u, E.v);
            continue;
        }
        out += fmt::format("  \\draw[{}] (v{}) -- node[auto, inner sep=1pt] {{${}$}} (v{});\n", style, E.u,
                           edge_label(G, static_cast<int>(e)), E.v);
    }
    for (size_t v = 0; v < G.verts.size(); ++v) {
        auto name = pv_name(G, static_cast<int>(v));
        if (!name.empty()) out += fmt::format("  \\fill (v{}) circle (0.8pt) node[below left, gray] {{{}}};\n", v, name);
    }
    out += "\\end{tikzpicture}\n";
    return out;
}

}  // namespace fm
