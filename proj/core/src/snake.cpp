#include "foldmatch/snake.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>

namespace fm {

int SnakeGraph::add_vertex(int pv, double x, double y) {
    verts.push_back({pv, x, y});
    return static_cast<int>(verts.size()) - 1;
}

int SnakeGraph::add_edge(int u, int v, std::vector<Diag> labels, int tile) {
    int id = find_edge(u, v);
    if (id < 0) {
        edges.push_back({u, v, std::move(labels), {}, false});
        id = static_cast<int>(edges.size()) - 1;
    }
    auto &ts = edges[id].tiles;
    if (tile >= 0 && std::find(ts.begin(), ts.end(), tile) == ts.end()) ts.push_back(tile);
    return id;
}

int SnakeGraph::find_edge(int u, int v) const {
    for (size_t i = 0; i < edges.size(); ++i) {
        auto &e = edges[i];
        if (!e.arc && ((e.u == u && e.v == v) || (e.u == v && e.v == u))) return static_cast<int>(i);
    }
    return -1;
}

int SnakeGraph::tile_with_label(int label) const {
    for (size_t i = 0; i < tiles.size(); ++i)
        if (tiles[i].label == label) return static_cast<int>(i);
    return -1;
}

std::vector<int> SnakeGraph::tile_vertices(int t) const {
    std::vector<int> out;
    for (int e : tiles[t].edges) {
        out.push_back(edges[e].u);
        out.push_back(edges[e].v);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

int SnakeGraph::label_index(Diag d) const {
    for (size_t i = 0; i < tau.size(); ++i)
        if (tau[i] == d) return static_cast<int>(i) + 1;
    return 0;
}

std::string SnakeGraph::label_name(Diag d) const {
    if (int i = label_index(d)) return std::to_string(i);
    auto v = [&](int x) { return x == star ? std::string("*") : std::to_string(x); };
    return "[" + v(d.a) + "," + v(d.b) + "]";
}

std::vector<int> crossing_sequence(Arc gamma, const Triangulation &T) {
    auto [s, t] = gamma;
    Diag g(s, t);
    if (T.contains(g)) throw Error(ErrorCode::DiagonalInTriangulation, to_string(g) + " is in T");
    if (s == t || is_boundary(g, T.N)) throw Error(ErrorCode::BoundarySegment, to_string(g) + " is a boundary segment");
    int N = T.N;
    std::vector<std::pair<int, int>> keyed;
    for (int i = 0; i < T.rank(); ++i) {
        Diag e = T.tau[i];
        if (!crosses(e, g, N)) continue;
        int p = e.a, q = e.b;
        if (!between_open(p, s, t, N)) std::swap(p, q);
        keyed.emplace_back(((p - s) % N + N) % N + ((s - q) % N + N) % N, i + 1);
    }
    std::sort(keyed.begin(), keyed.end());
    std::vector<int> out;
    for (auto &k : keyed) out.push_back(k.second);
    return out;
}

namespace {

bool cyclic_ccw(std::array<int, 4> q) {
    auto m = std::min_element(q.begin(), q.end());
    std::rotate(q.begin(), m, q.end());
    return std::is_sorted(q.begin(), q.end());
}

}  // namespace

SnakeGraph build_snake_graph(Arc gamma, const Triangulation &T) {
    auto seq = crossing_sequence(gamma, T);
    auto [s, t] = gamma;
    SnakeGraph G;
    G.rank = T.rank();
    G.polygon = T.N;
    G.tau = T.tau;
    G.crossings = seq;
    std::map<std::pair<int, int>, int> at;
    auto vert = [&](int x, int y, int pv) {
        auto [it, fresh] = at.emplace(std::make_pair(x, y), 0);
        if (fresh) it->second = G.add_vertex(pv, x, y);
        return it->second;
    };
    int x = 0, y = 0;
    int pSE = -1, pNE = -1, pNW = -1;
    for (size_t j = 0; j < seq.size(); ++j) {
        Diag e = T.tau[seq[j] - 1];
        int NW, SE;
        if (j == 0) {
            NW = e.a;
            SE = e.b;
        } else {
            if (!e.has(pNE)) throw Error(ErrorCode::InvalidOperation, "consecutive tiles share no corner");
            int u = e.other(pNE);
            if (u == pNW) {
                ++x;
                NW = pNE;
                SE = u;
            } else {
                if (u != pSE) throw Error(ErrorCode::InvalidOperation, "tile gluing failed");
                ++y;
                NW = u;
                SE = pNE;
            }
        }
        int SW = T.apex(e, s), NE = T.apex(e, t);
        Tile tile;
        tile.label = seq[j];
        tile.rel = cyclic_ccw({SW, SE, NE, NW}) ? 1 : -1;
        int ti = static_cast<int>(G.tiles.size());
        int vSW = vert(x, y, SW), vSE = vert(x + 1, y, SE), vNE = vert(x + 1, y + 1, NE), vNW = vert(x, y + 1, NW);
        tile.corner = {vSW, vSE, vNE, vNW};
        tile.side[S] = G.add_edge(vSW, vSE, {Diag(SW, SE)}, ti);
        tile.side[E] = G.add_edge(vSE, vNE, {Diag(SE, NE)}, ti);
        tile.side[N] = G.add_edge(vNW, vNE, {Diag(NW, NE)}, ti);
        tile.side[W] = G.add_edge(vSW, vNW, {Diag(SW, NW)}, ti);
        tile.edges = {tile.side[S], tile.side[E], tile.side[N], tile.side[W]};
        G.tiles.push_back(tile);
        pSE = SE;
        pNE = NE;
        pNW = NW;
    }
    G.pminus = minimal_matching(G);
    G.gref = G.pminus;
    return G;
}

std::vector<Matching> enumerate_matchings(const SnakeGraph &G) {
    int V = static_cast<int>(G.verts.size());
    std::vector<int> order(V);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return std::make_pair(G.verts[a].x, G.verts[a].y) < std::make_pair(G.verts[b].x, G.verts[b].y);
    });
    std::vector<std::vector<int>> adj(V);
    for (size_t i = 0; i < G.edges.size(); ++i) {
        adj[G.edges[i].u].push_back(static_cast<int>(i));
        adj[G.edges[i].v].push_back(static_cast<int>(i));
    }
    std::vector<Matching> out;
    std::vector<char> covered(V, 0);
    Matching cur;
    auto rec = [&](auto &&self, size_t pos) -> void {
        while (pos < order.size() && covered[order[pos]]) ++pos;
        if (pos == order.size()) {
            Matching m = cur;
            std::sort(m.begin(), m.end());
            out.push_back(std::move(m));
            return;
        }
        int v = order[pos];
        for (int eid : adj[v]) {
            auto &e = G.edges[eid];
            int w = e.u == v ? e.v : e.u;
            if (w == v || covered[w]) continue;
            covered[v] = covered[w] = 1;
            cur.push_back(eid);
            self(self, pos + 1);
            cur.pop_back();
            covered[v] = covered[w] = 0;
        }
    };
    rec(rec, 0);
    return out;
}

std::vector<Matching> brute_force_matchings(const SnakeGraph &G) {
    int V = static_cast<int>(G.verts.size());
    int Ecount = static_cast<int>(G.edges.size());
    if (V > 64) throw Error(ErrorCode::InvalidOperation, "graph too large for brute force");
    std::vector<Matching> out;
    if (V % 2) return out;
    int k = V / 2;
    std::vector<std::uint64_t> mask(Ecount);
    for (int i = 0; i < Ecount; ++i)
        mask[i] = (std::uint64_t{1} << G.edges[i].u) | (std::uint64_t{1} << G.edges[i].v);
    std::uint64_t full = V == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << V) - 1;
    // every k-subset of edges, checked at the leaf
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    if (k > Ecount) return out;
    while (true) {
        std::uint64_t seen = 0;
        bool ok = true;
        for (int i : idx) {
            if (seen & mask[i]) {
                ok = false;
                break;
            }
            seen |= mask[i];
        }
        if (ok && seen == full) out.emplace_back(idx.begin(), idx.end());
        int i = k - 1;
        while (i >= 0 && idx[i] == Ecount - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

std::vector<Matching> boundary_matchings(const SnakeGraph &G, const std::vector<Matching> &all) {
    std::vector<Matching> out;
    for (auto &m : all)
        if (std::all_of(m.begin(), m.end(), [&](int e) { return G.edges[e].tiles.size() <= 1; })) out.push_back(m);
    return out;
}

Matching minimal_matching(const SnakeGraph &G) {
    auto bms = boundary_matchings(G, enumerate_matchings(G));
    if (bms.size() != 2) throw Error(ErrorCode::InvalidOperation, "expected two boundary matchings");
    auto &t0 = G.tiles[0];
    std::array<int, 2> e12 = t0.rel == 1 ? std::array<int, 2>{t0.side[W], t0.side[E]}
                                         : std::array<int, 2>{t0.side[N], t0.side[S]};
    for (auto &m : bms) {
        bool hit = false;
        for (int e : e12)
            if (std::binary_search(m.begin(), m.end(), e)) hit = true;
        if (!hit) return m;
    }
    throw Error(ErrorCode::InvalidOperation, "no boundary matching avoids e1,e2");
}

std::vector<int> hybrid_height(const SnakeGraph &G, const Matching &ref, const Matching &P) {
    auto in = [](const Matching &m, int e) { return std::binary_search(m.begin(), m.end(), e); };
    int T = static_cast<int>(G.tiles.size());
    std::vector<int> st(T, -1);
    for (int i = 0; i < T; ++i) {
        bool touches = false, shared = false;
        for (int e : G.tiles[i].edges) {
            if (in(ref, e)) {
                touches = true;
                if (in(P, e)) shared = true;
            }
        }
        if (touches) st[i] = shared ? 0 : 1;
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t eid = 0; eid < G.edges.size(); ++eid) {
            auto &e = G.edges[eid];
            if (e.tiles.size() != 2) continue;
            int a = e.tiles[0], b = e.tiles[1];
            int bit = in(ref, static_cast<int>(eid)) != in(P, static_cast<int>(eid)) ? 1 : 0;
            if (st[a] >= 0 && st[b] < 0) st[b] = st[a] ^ bit, changed = true;
            else if (st[b] >= 0 && st[a] < 0) st[a] = st[b] ^ bit, changed = true;
        }
    }
    std::vector<int> h(G.rank, 0);
    for (int i = 0; i < T; ++i) {
        if (st[i] < 0) throw Error(ErrorCode::InvalidOperation, "tile unreachable in height propagation");
        if (st[i]) ++h[G.tiles[i].label - 1];
    }
    return h;
}

std::vector<int> top_exponents(const SnakeGraph &G) {
    std::vector<int> h(G.rank, 0);
    for (auto &t : G.tiles) ++h[t.label - 1];
    return h;
}

std::vector<int> height_exponents(const SnakeGraph &G, const Matching &P) {
    auto h = hybrid_height(G, G.pminus, P);
    if (G.complement) {
        auto top = top_exponents(G);
        for (size_t i = 0; i < h.size(); ++i) h[i] = top[i] - h[i];
    }
    return h;
}

std::vector<int> face_parity_height(const SnakeGraph &G, const Matching &ref, const Matching &P) {
    auto in = [](const Matching &m, int e) { return std::binary_search(m.begin(), m.end(), e); };
    int T = static_cast<int>(G.tiles.size());
    int out = T;  // unbounded face
    std::vector<std::vector<std::pair<int, int>>> nb(T + 1);
    for (size_t i = 0; i < G.edges.size(); ++i) {
        auto &e = G.edges[i];
        if (e.arc) throw Error(ErrorCode::InvalidOperation, "face parity undefined with an arc edge");
        int f0 = e.tiles[0], f1 = e.tiles.size() == 2 ? e.tiles[1] : out;
        int bit = in(ref, static_cast<int>(i)) != in(P, static_cast<int>(i)) ? 1 : 0;
        nb[f0].emplace_back(f1, bit);
        nb[f1].emplace_back(f0, bit);
    }
    std::vector<int> st(T + 1, -1);
    st[out] = 0;
    std::vector<int> stack{out};
    while (!stack.empty()) {
        int f = stack.back();
        stack.pop_back();
        for (auto [g, b] : nb[f]) {
            if (st[g] < 0) {
                st[g] = st[f] ^ b;
                stack.push_back(g);
            } else if (st[g] != (st[f] ^ b)) {
                throw Error(ErrorCode::InvalidOperation, "symmetric difference is not a union of cycles");
            }
        }
    }
    std::vector<int> h(G.rank, 0);
    for (int i = 0; i < T; ++i)
        if (st[i] == 1) ++h[G.tiles[i].label - 1];
    return h;
}

Poly height_monomial(const SnakeGraph &G, const Matching &P) { return y_monomial(height_exponents(G, P)); }

Poly f_polynomial(const SnakeGraph &G) {
    Poly F(G.rank);
    for (auto &P : enumerate_matchings(G)) F += height_monomial(G, P);
    return F;
}

std::vector<int> g_vector(const SnakeGraph &G) {
    std::vector<int> g(G.rank, 0);
    for (int e : G.reference())
        for (auto &l : G.edges[e].labels)
            if (int i = G.label_index(l)) ++g[i - 1];
    for (int i : G.crossings) --g[i - 1];
    return g;
}

std::vector<Matching> sorted_matchings(const SnakeGraph &G) {
    auto ms = enumerate_matchings(G);
    std::vector<std::pair<int, Matching>> keyed;
    for (auto &m : ms) {
        auto h = height_exponents(G, m);
        keyed.emplace_back(std::accumulate(h.begin(), h.end(), 0), m);
    }
    std::stable_sort(keyed.begin(), keyed.end(), [](auto &a, auto &b) { return a.first < b.first; });
    std::vector<Matching> out;
    for (auto &k : keyed) out.push_back(std::move(k.second));
    return out;
}

std::string g_string(const std::vector<int> &g) {
    std::string s = "[";
    for (size_t i = 0; i < g.size(); ++i) s += (i ? "," : "") + std::to_string(g[i]);
    return s + "]";
}

Expansion expand_diagonal(Diag gamma, const Triangulation &T) {
    int m = T.rank();
    Expansion x{Poly::constant(m, 1), std::vector<int>(m, 0)};
    if (gamma.a == gamma.b || is_boundary(gamma, T.N)) return x;
    if (int i = T.index(gamma)) {
        x.g[i - 1] = 1;
        return x;
    }
    auto G = build_snake_graph({gamma.a, gamma.b}, T);
    return {f_polynomial(G), g_vector(G)};
}

Poly f_diagonal(int p, int q, const Triangulation &T) { return expand_diagonal(Diag(p, q), T).F; }

bool skein_check(Diag g1, Diag g2, const Triangulation &T) {
    if (!crosses(g1, g2, T.N)) throw Error(ErrorCode::NotCrossing, to_string(g1) + " and " + to_string(g2));
    std::array<int, 4> v = {g1.a, g1.b, g2.a, g2.b};
    std::sort(v.begin(), v.end());
    int a = v[0], c = v[1], b = v[2], d = v[3];
    Poly lhs = f_diagonal(a, b, T) * f_diagonal(c, d, T);
    Poly r1 = y_monomial(crossing_vector(a, c, b, d, T)) * f_diagonal(a, d, T) * f_diagonal(b, c, T);
    Poly r2 = y_monomial(crossing_vector(a, d, b, c, T)) * f_diagonal(a, c, T) * f_diagonal(b, d, T);
    return lhs == r1 + r2;
}

}  // namespace fm
