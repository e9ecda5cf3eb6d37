#include "foldmatch/folded.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>

namespace fm {

namespace {

void drop_edge(SnakeGraph &G, int eid) {
    G.edges.erase(G.edges.begin() + eid);
    auto fix = [&](int &x) {
        if (x == eid) x = -1;
        else if (x > eid) --x;
    };
    for (auto &t : G.tiles) {
        t.edges.erase(std::remove(t.edges.begin(), t.edges.end(), eid), t.edges.end());
        for (int &e : t.edges) fix(e);
        for (int &e : t.side) fix(e);
        fix(t.mid);
    }
    for (Matching *m : {&G.pminus, &G.gref}) {
        m->erase(std::remove(m->begin(), m->end(), eid), m->end());
        for (int &e : *m) fix(e);
    }
    fix(G.arc);
}

std::complex<double> pos(const SnakeGraph &G, int v) { return {G.verts[v].x, G.verts[v].y}; }

std::complex<double> tile_center(const SnakeGraph &G, int t) {
    auto vs = G.tile_vertices(t);
    std::complex<double> c{};
    for (int v : vs) c += pos(G, v);
    return c / static_cast<double>(vs.size());
}

int shared_vertex(Diag a, Diag b) {
    if (b.has(a.a)) return a.a;
    if (b.has(a.b)) return a.b;
    return -1;
}

std::vector<int> top_matching_of(const SnakeGraph &G) {
    auto ms = enumerate_matchings(G);
    int best = -1, count = 0;
    Matching top;
    for (auto &m : ms) {
        auto h = hybrid_height(G, G.pminus, m);
        int s = std::accumulate(h.begin(), h.end(), 0);
        if (s > best) best = s, count = 1, top = m;
        else if (s == best) ++count;
    }
    if (count != 1) throw Error(ErrorCode::InvalidOperation, "top matching is not unique");
    return top;
}

std::vector<int> add(std::vector<int> a, const std::vector<int> &b) {
    for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

}  // namespace

SnakeGraph build_hat(const Restriction &R, Arc gamma, Kind kind) {
    int n = R.n;
    SnakeGraph G = build_snake_graph(gamma, R.tbar);
    G.star = R.star;
    Diag taun = R.tbar.tau[n - 1];
    int removed = -1, e1 = -1, e2 = -1, e3 = -1;
    if (kind == Kind::B && n >= 2) {
        int ti = G.tile_with_label(n - 1);
        if (ti >= 0) {
            Tile &t = G.tiles[ti];
            for (int e : t.edges)
                if (G.edges[e].labels[0] == taun) removed = e;
            if (removed < 0) throw Error(ErrorCode::UnsupportedTriangulationForB, "tile n-1 has no tau_n edge");
            Diag tnm1 = R.tbar.tau[n - 2];
            GEdge E = G.edges[removed];
            int xv = tnm1.has(G.verts[E.u].pv) ? E.u : E.v;
            int wv = xv == E.u ? E.v : E.u;
            int vpoly = tnm1.has(taun.a) ? tnm1.other(taun.a) : tnm1.other(taun.b);
            int wpoly = G.verts[wv].pv;
            auto mid = (pos(G, xv) + pos(G, wv)) / 2.0;
            auto out = mid - tile_center(G, ti);
            out *= 0.4 / std::abs(out);
            auto pw = pos(G, wv) + out, px = pos(G, xv) + out;
            int sw = G.add_vertex(-1, pw.real(), pw.imag());
            int sx = G.add_vertex(-1, px.real(), px.imag());
            e1 = G.add_edge(wv, sw, {taun}, ti);
            e2 = G.add_edge(sw, sx, {Diag(vpoly, wpoly)}, ti);
            e3 = G.add_edge(sx, xv, {taun}, ti);
            Tile &h = G.tiles[ti];
            h.edges.erase(std::remove(h.edges.begin(), h.edges.end(), removed), h.edges.end());
            h.edges.insert(h.edges.end(), {e1, e2, e3});
            h.hexagon = true;
            h.mid = e2;
            G.hex_tile = ti;
            G.s_w = sw;
            G.s_x = sx;
        }
    }
    if (int tn = G.tile_with_label(n); tn >= 0) {
        auto &t = G.tiles[tn];
        std::array<std::vector<Diag>, 4> extra;
        for (int s = 0; s < 4; ++s) {
            if (t.side[s] < 0) continue;
            auto &E = G.edges[t.side[s]];
            if (kind == Kind::C || E.interior())
                extra[(s + 2) % 4].insert(extra[(s + 2) % 4].end(), E.labels.begin(), E.labels.end());
        }
        for (int s = 0; s < 4; ++s) {
            if (t.side[s] < 0) continue;
            auto &labs = G.edges[t.side[s]].labels;
            for (auto &l : extra[s])
                if (std::find(labs.begin(), labs.end(), l) == labs.end()) labs.push_back(l);
        }
    }
    if (removed >= 0) {
        Matching pm;
        bool hit = false;
        for (int e : G.pminus) {
            if (e == removed) {
                pm.push_back(e1);
                pm.push_back(e3);
                hit = true;
            } else {
                pm.push_back(e);
            }
        }
        if (!hit) pm.push_back(e2);
        std::sort(pm.begin(), pm.end());
        G.pminus = pm;
        drop_edge(G, removed);
    }
    G.gref = G.pminus;
    return G;
}

Glued glue(const SnakeGraph &G1, const SnakeGraph &G2, int e1, int e2, const std::map<int, int> &vmap) {
    Glued out;
    SnakeGraph &G = out.G;
    G.rank = G1.rank;
    G.polygon = G1.polygon;
    G.star = G1.star;
    G.tau = G1.tau;
    G.verts = G1.verts;
    G.edges = G1.edges;
    G.tiles = G1.tiles;
    for (auto &t : G.tiles)
        if (t.part == 0) t.part = 1;
    out.emap1.resize(G1.edges.size());
    std::iota(out.emap1.begin(), out.emap1.end(), 0);
    int off = static_cast<int>(G1.tiles.size());

    // place G2 so its glued edge lands on e1, on the far side from G1's tile
    auto &E2 = G2.edges[e2];
    auto A2 = pos(G2, E2.u), B2 = pos(G2, E2.v);
    auto A1 = pos(G1, vmap.at(E2.u)), B1 = pos(G1, vmap.at(E2.v));
    auto rot = (B1 - A1) / (B2 - A2);
    bool mirror = false;
    {
        auto m = (A1 + B1) / 2.0;
        auto c1 = tile_center(G1, G1.edges[e1].tiles[0]);
        auto c2 = A1 + (tile_center(G2, E2.tiles[0]) - A2) * rot;
        auto dot = [](std::complex<double> p, std::complex<double> q) { return (std::conj(p) * q).real(); };
        mirror = dot(c2 - m, c1 - m) > 0;
    }
    auto place = [&](std::complex<double> z) {
        auto w = (z - A2) / (B2 - A2);
        if (mirror) w = std::conj(w);
        return A1 + w * (B1 - A1);
    };

    std::vector<int> vren(G2.verts.size());
    for (size_t v = 0; v < G2.verts.size(); ++v) {
        if (auto it = vmap.find(static_cast<int>(v)); it != vmap.end()) {
            vren[v] = it->second;
        } else {
            auto z = place(pos(G2, static_cast<int>(v)));
            vren[v] = G.add_vertex(G2.verts[v].pv, z.real(), z.imag());
        }
    }
    out.emap2.resize(G2.edges.size());
    for (size_t i = 0; i < G2.edges.size(); ++i) {
        auto &e = G2.edges[i];
        if (static_cast<int>(i) == e2) {
            auto &tgt = G.edges[e1];
            for (auto &l : e.labels)
                if (std::find(tgt.labels.begin(), tgt.labels.end(), l) == tgt.labels.end()) tgt.labels.push_back(l);
            for (int t : e.tiles) tgt.tiles.push_back(t + off);
            out.emap2[i] = e1;
            continue;
        }
        GEdge ne = e;
        ne.u = vren[e.u];
        ne.v = vren[e.v];
        for (int &t : ne.tiles) t += off;
        out.emap2[i] = static_cast<int>(G.edges.size());
        G.edges.push_back(ne);
    }
    for (auto t : G2.tiles) {
        for (int &e : t.edges) e = out.emap2[e];
        for (int &e : t.side)
            if (e >= 0) e = out.emap2[e];
        for (int &v : t.corner)
            if (v >= 0) v = vren[v];
        if (t.mid >= 0) t.mid = out.emap2[t.mid];
        t.part = 2;
        G.tiles.push_back(t);
    }
    G.crossings = G1.crossings;
    G.crossings.insert(G.crossings.end(), G2.crossings.begin(), G2.crossings.end());
    out.glued = e1;
    out.vmap2 = vren;
    return out;
}

std::optional<Matching> glue_matching(const Glued &g, const Matching &P1, const Matching &P2) {
    Matching a, b;
    for (int e : P1) a.push_back(g.emap1[e]);
    for (int e : P2) b.push_back(g.emap2[e]);
    bool ia = std::find(a.begin(), a.end(), g.glued) != a.end();
    bool ib = std::find(b.begin(), b.end(), g.glued) != b.end();
    if (!ia && !ib) return std::nullopt;
    Matching m = a;
    m.insert(m.end(), b.begin(), b.end());
    std::sort(m.begin(), m.end());
    m.erase(std::unique(m.begin(), m.end()), m.end());
    if (ia != ib) m.erase(std::remove(m.begin(), m.end(), g.glued), m.end());
    return m;
}

namespace {

// clockwise instances: x = tail
SnakeGraph build_B_cw(const Restriction &R, const Orbit &o) {
    int n = R.n;
    auto rs = R.res(o);
    if (rs.size() == 1) return build_hat(R, R.orient(rs[0]), Kind::B);
    Diag taun = R.tbar.tau[n - 1], tnm1 = R.tbar.tau[n - 2];
    int xpoly = shared_vertex(taun, tnm1);
    int vpoly = tnm1.other(xpoly);
    // gamma1 has the left endpoint farther from v
    std::stable_sort(rs.begin(), rs.end(), [&](Diag p, Diag q) { return std::abs(p.a - vpoly) > std::abs(q.a - vpoly); });
    SnakeGraph G1 = build_hat(R, R.orient(rs[0]), Kind::B);
    SnakeGraph G2 = build_hat(R, R.orient(rs[1]), Kind::B);
    if (G1.hex_tile < 0) throw Error(ErrorCode::InvalidOperation, "gamma1 has no hexagon");
    int mid = G1.tiles[G1.hex_tile].mid;
    Diag lab = G1.edges[mid].labels[0];
    int tn2 = G2.tile_with_label(n);
    auto native = [&](int e) { return Diag(G2.verts[G2.edges[e].u].pv, G2.verts[G2.edges[e].v].pv) == lab; };
    std::vector<int> cands;
    for (int e : G2.tiles[tn2].edges) {
        auto &E = G2.edges[e];
        if (E.tiles.size() == 1 && std::find(E.labels.begin(), E.labels.end(), lab) != E.labels.end()) cands.push_back(e);
    }
    if (cands.size() > 1) {
        std::vector<int> dup;
        for (int e : cands)
            if (!native(e)) dup.push_back(e);
        cands = dup;
    }
    if (cands.empty()) throw Error(ErrorCode::InvalidOperation, "no edge of tile n carries " + to_string(lab));
    int e2 = cands[0];
    auto &E2 = G2.edges[e2];
    int key = native(e2) ? vpoly : xpoly;
    int first = G2.verts[E2.u].pv == key ? E2.u : E2.v;
    int second = first == E2.u ? E2.v : E2.u;
    Glued g = glue(G1, G2, mid, e2, {{first, G1.s_w}, {second, G1.s_x}});
    auto pm = glue_matching(g, G1.pminus, G2.pminus);
    if (!pm) throw Error(ErrorCode::InvalidOperation, "glued edge in neither minimal matching");
    SnakeGraph G = std::move(g.G);
    G.pminus = *pm;
    G.gref = G.pminus;
    if (G2.hex_tile >= 0) {
        int tn1 = G1.tile_with_label(n);
        auto a = G1.tile_vertices(tn1), b = G1.tile_vertices(G1.hex_tile);
        int from = -1;
        for (int v : a)
            if (std::binary_search(b.begin(), b.end(), v) && G1.verts[v].pv == vpoly) {
                from = v;
                break;
            }
        if (from < 0) throw Error(ErrorCode::InvalidOperation, "arc start not found");
        int to = g.vmap2[G2.s_w];
        GEdge arc;
        arc.u = from;
        arc.v = to;
        arc.arc = true;
        G.edges.push_back(arc);
        G.arc = static_cast<int>(G.edges.size()) - 1;
    }
    return G;
}

int relabel(int v, int n, int star) { return v < 0 || v == star ? v : n + 1 - v; }

}  // namespace

SnakeGraph build_G_ab_B(const ThetaTriangulation &T, const Orbit &o) {
    if (T.contains(o)) throw Error(ErrorCode::OrbitInTriangulation, to_string(o) + " lies in T");
    if (!b_hypothesis(T))
        throw Error(ErrorCode::UnsupportedTriangulationForB,
                    "tau_n and tau_{n-1} do not bound a triangle with a boundary side");
    int n = T.n;
    Restriction R = restrict(T);
    if (n < 2) return build_hat(R, R.orient(R.res(o)[0]), Kind::B);
    int x = shared_vertex(R.tbar.tau[n - 1], R.tbar.tau[n - 2]);
    if (x == n + 1) return build_B_cw(R, o);
    // counterclockwise: build the mirror image and read heights from the top
    ThetaTriangulation Tm = reflect(T);
    Restriction Rm = restrict(Tm);
    SnakeGraph G = build_B_cw(Rm, reflect(o, T.N()));
    for (auto &v : G.verts) v.pv = relabel(v.pv, n, R.star);
    for (auto &e : G.edges)
        for (auto &l : e.labels) l = Diag(relabel(l.a, n, R.star), relabel(l.b, n, R.star));
    G.tau = R.tbar.tau;
    G.complement = true;
    G.gref = top_matching_of(G);
    return G;
}

std::optional<Companions> companions(const Restriction &R, const Orbit &o) {
    int n = R.n;
    auto rr = rotated_restrict_orbit(R, o);
    if (rr.size() != 2) return std::nullopt;
    auto in_T = [&](const Orbit &q) {
        return std::all_of(q.d.begin(), q.d.end(),
                           [&](Diag e) { return std::find(R.full.begin(), R.full.end(), e) != R.full.end(); });
    };
    auto find = [&](int a, Arc tgt) {
        std::vector<int> out;
        for (auto &q : all_orbits(n)) {
            if (q == o || in_T(q)) continue;
            bool ok = false;
            for (bool fl : {false, true}) {
                auto r = rotated_restrict_orbit(R, q, fl);
                if (r.size() == 1 && Diag(r[0].first, r[0].second) == Diag(tgt.first, tgt.second)) ok = true;
            }
            if (!ok) continue;
            for (auto &e : q.d)
                if (e.has(a)) out.push_back(e.other(a));
        }
        if (out.empty()) throw Error(ErrorCode::CompanionOrbitNotFound, "no companion orbit for " + to_string(o));
        return out[0];
    };
    auto left = [&](int v) { return R.rmap(v) != R.star; };
    Companions c;
    if (o.diameter()) {
        Diag e = o.d[0];
        c.diameter = true;
        c.a = left(e.a) ? e.a : e.b;
        c.cbar = find(c.a, rr[0]);
        c.bbar = find(c.a, rr[1]);
        c.b = theta(c.bbar, n);
        c.c = theta(c.cbar, n);
        c.glue_label = Diag(R.rmap(c.bbar), R.rmap(c.c));
        return c;
    }
    auto [g1s, g1t] = rr[0];
    if (g1t != R.star) return std::nullopt;
    for (auto &e : o.d)
        for (auto [a, b] : {std::make_pair(e.a, e.b), std::make_pair(e.b, e.a)}) {
            if (!left(a) || R.rmap(a) != g1s) continue;
            c.a = a;
            c.b = b;
            c.d = find(a, rr[0]);
            c.c = find(b, rr[1]);
            c.bbar = theta(b, n);
            c.dbar = theta(c.d, n);
            c.cbar = theta(c.c, n);
            c.glue_label = Diag(R.rmap(c.cbar), R.rmap(c.dbar));
            return c;
        }
    return std::nullopt;
}

SnakeGraph build_G_ab_C(const ThetaTriangulation &T, const Orbit &o) {
    if (T.contains(o)) throw Error(ErrorCode::OrbitInTriangulation, to_string(o) + " lies in T");
    int n = T.n;
    Restriction R = restrict(T);
    auto rr = rotated_restrict_orbit(R, o);
    if (rr.size() == 1) return build_hat(R, rr[0], Kind::C);
    SnakeGraph G1 = build_hat(R, rr[0], Kind::C);
    SnakeGraph G2 = build_hat(R, rr[1], Kind::C);
    int tn = G1.tile_with_label(n);
    struct Cand {
        int e1, e2;
        Diag lab;
    };
    std::vector<Cand> cands;
    for (int e1 : G1.tiles[tn].edges) {
        auto &E1 = G1.edges[e1];
        if (E1.tiles.size() != 1) continue;
        Diag nat1(G1.verts[E1.u].pv, G1.verts[E1.v].pv);
        for (size_t e2 = 0; e2 < G2.edges.size(); ++e2) {
            auto &E2 = G2.edges[e2];
            if (E2.tiles.size() != 1 || E2.arc) continue;
            Diag nat(G2.verts[E2.u].pv, G2.verts[E2.v].pv);
            if (nat == nat1) continue;
            if (std::find(E1.labels.begin(), E1.labels.end(), nat) != E1.labels.end())
                cands.push_back({e1, static_cast<int>(e2), nat});
        }
    }
    auto comp = companions(R, o);
    if (comp) {
        std::vector<Cand> keep;
        for (auto &c : cands)
            if (c.lab == comp->glue_label) keep.push_back(c);
        cands = keep;
    } else if (cands.size() > 1) {
        cands.clear();
    }
    if (cands.empty())
        throw Error(ErrorCode::NoCommonExteriorEdge, "no common exterior edge for " + to_string(o));
    auto [e1, e2, lab] = cands[0];
    auto &E1 = G1.edges[e1];
    auto &E2 = G2.edges[e2];
    Glued g = glue(G1, G2, e1, e2, {{E2.u, E1.u}, {E2.v, E1.v}});
    auto pm = glue_matching(g, G1.pminus, G2.pminus);
    if (!pm) throw Error(ErrorCode::NoCommonExteriorEdge, "glued edge in neither minimal matching");
    SnakeGraph G = std::move(g.G);
    G.pminus = *pm;
    G.gref = G.pminus;
    return G;
}

SnakeGraph build_G_ab(const ThetaTriangulation &T, const Orbit &o, Kind kind) {
    if (kind == Kind::B) return build_G_ab_B(T, o);
    if (kind == Kind::C) return build_G_ab_C(T, o);
    throw Error(ErrorCode::InvalidOperation, "orbit graphs need kind B or C");
}

Expansion expand_orbit(const ThetaTriangulation &T, const Orbit &o, Kind kind) {
    if (int i = T.orbit_index(o)) {
        Expansion x{Poly::constant(T.n, 1), std::vector<int>(T.n, 0)};
        x.g[i - 1] = 1;
        return x;
    }
    SnakeGraph G = build_G_ab(T, o, kind);
    return {f_polynomial(G), g_vector(G)};
}

Poly f_B_formula(const ThetaTriangulation &T, const Orbit &o) {
    if (T.contains(o)) return Poly::constant(T.n, 1);
    Restriction R = restrict(T);
    auto rs = R.res(o);
    const auto &tb = R.tbar;
    if (rs.size() == 1) return f_diagonal(rs[0].a, rs[0].b, tb);
    Diag g1 = rs[0], g2 = rs[1];
    Poly prod = f_diagonal(g1.a, g1.b, tb) * f_diagonal(g2.a, g2.b, tb);
    Poly sub = y_monomial(crossing_vector(g1.a, g1.b, g2.a, g2.b, tb)) * f_diagonal(g1.a, g2.a, tb);
    return prod - sub;
}

Expansion c_formula(const ThetaTriangulation &T, const Orbit &o) {
    int n = T.n;
    if (int i = T.orbit_index(o)) {
        Expansion x{Poly::constant(n, 1), std::vector<int>(n, 0)};
        x.g[i - 1] = 1;
        return x;
    }
    Restriction R = restrict(T);
    const auto &tb = R.tbar;
    Diag d = tb.tau[n - 1];
    // tau_i preceding d counterclockwise in a triangle on d
    std::vector<int> E;
    for (auto &t : tb.tris) {
        std::array<Diag, 3> cyc = {Diag(t[0], t[1]), Diag(t[1], t[2]), Diag(t[2], t[0])};
        int k = static_cast<int>(std::find(cyc.begin(), cyc.end(), d) - cyc.begin());
        if (k == 3) continue;
        if (int i = tb.index(cyc[(k + 2) % 3])) E.push_back(i);
    }
    auto with_e = [&](std::vector<int> g) {
        for (int i : E) ++g[i - 1];
        return g;
    };
    auto gA = [&](int p, int q) { return expand_diagonal(Diag(p, q), tb).g; };
    auto Fd = [&](int p, int q) { return f_diagonal(p, q, tb); };
    auto rr = rotated_restrict_orbit(R, o);
    if (rr.size() == 1) {
        auto [p, q] = rr[0];
        auto g = gA(p, q);
        if (crosses(d, Diag(p, q), R.M)) g = with_e(g);
        return {Fd(p, q), g};
    }
    auto c = companions(R, o);
    if (!c) throw Error(ErrorCode::CompanionOrbitNotFound, "no companion orbits for " + to_string(o));
    Poly F12 = Fd(rr[0].first, rr[0].second) * Fd(rr[1].first, rr[1].second);
    auto g12 = add(gA(rr[0].first, rr[0].second), gA(rr[1].first, rr[1].second));
    auto rm = [&](int v) { return R.rmap(v); };
    int st = R.star;
    auto yv = [&](const std::vector<int> &v1, const std::vector<int> &v2) {
        return y_monomial(rotated_restrict_vector(add(v1, v2), n));
    };
    Poly F;
    if (c->diameter) {
        int a = c->a, b = c->b, cc = c->c, bb = c->bbar;
        Poly mono = yv(crossing_vector(rm(a), st, rm(cc), rm(bb), tb), crossing_vector(rm(a), rm(bb), rm(b), st, tb));
        F = F12 - mono * Fd(rm(a), rm(b)) * Fd(rm(a), rm(cc));
    } else {
        int a = c->a, cc = c->c, bb = c->bbar, db = c->dbar, cb = c->cbar;
        Poly mono = yv(crossing_vector(rm(bb), st, rm(db), rm(cb), tb), crossing_vector(rm(a), rm(cb), rm(cc), st, tb));
        F = F12 - mono * Fd(rm(a), rm(cc)) * Fd(rm(bb), rm(db));
    }
    auto g = g12;
    if (!E.empty()) {
        g = with_e(g);
        auto gl = gA(c->glue_label.a, c->glue_label.b);
        for (int i = 0; i < n; ++i) g[i] -= gl[i];
    }
    return {F, g};
}

Poly f_C_formula(const ThetaTriangulation &T, const Orbit &o) { return c_formula(T, o).F; }
std::vector<int> g_C_formula(const ThetaTriangulation &T, const Orbit &o) { return c_formula(T, o).g; }

}  // namespace fm
