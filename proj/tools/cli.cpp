#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "foldmatch/folded.hpp"
#include "foldmatch/render.hpp"
#include "foldmatch/verify.hpp"

namespace fm::cli {

using json = nlohmann::json;

namespace {

std::vector<Diag> diags(const std::vector<std::array<int, 2>> &raw) {
    std::vector<Diag> out;
    for (auto &p : raw) out.emplace_back(p[0], p[1]);
    return out;
}

Kind parse_kind(const std::string &s) {
    if (s == "A") return Kind::A;
    if (s == "B") return Kind::B;
    if (s == "C") return Kind::C;
    throw Error(ErrorCode::ParseError, "kind must be A, B or C, got \"" + s + "\"");
}

std::array<int, 2> pair_of(const json &j, const std::string &what) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
        throw Error(ErrorCode::ParseError, what + " must be a pair of integers");
    return {j[0].get<int>(), j[1].get<int>()};
}

void check_target(const std::array<int, 2> &t, int N, bool allow_boundary) {
    if (t[0] < 0 || t[1] < 0 || t[0] >= N || t[1] >= N)
        throw Error(ErrorCode::InvalidVertex, "target vertex outside 0.." + std::to_string(N - 1));
    if (t[0] == t[1]) throw Error(ErrorCode::DegenerateDiagonal, "target is a loop");
    if (!allow_boundary && is_boundary(Diag(t[0], t[1]), N))
        throw Error(ErrorCode::DegenerateDiagonal, "target is a boundary segment");
}

std::string read_source(const std::string &path) {
    std::stringstream ss;
    if (path == "-") {
        ss << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in) throw Error(ErrorCode::ParseError, "cannot read " + path);
        ss << in.rdbuf();
    }
    return ss.str();
}

json orbit_json(const Orbit &o) {
    json a = json::array();
    for (auto &d : o.d) a.push_back({d.a, d.b});
    return a;
}

json report_json(const Report &r) {
    json rows = json::array();
    for (auto &row : r.rows) {
        json sources = {"graph", "oracle"};
        if (row.formula_f) sources.push_back("formula");
        rows.push_back({{"orbit", orbit_json(row.orbit)},
                        {"F", row.graph.F.str()},
                        {"g", row.graph.g},
                        {"sources", sources},
                        {"status", row.ok ? "ok" : "mismatch"},
                        {"diff", row.diff}});
    }
    json tri = json::array();
    for (int i = 0; i < static_cast<int>(r.T.tau.size()); ++i) {
        auto d = r.T.tau[i];
        if (i == r.T.n - 1) tri.push_back({r.T.tail, r.T.head});
        else tri.push_back({d.a, d.b});
    }
    return {{"kind", std::string(1, kind_char(r.kind))},
            {"rank", r.T.n},
            {"triangulation", tri},
            {"seeds", r.seeds},
            {"variables", r.variables},
            {"passed", r.passed()},
            {"orbits", rows}};
}

void print_report(const Report &r, std::ostream &out) {
    for (auto &row : r.rows)
        if (!row.ok) out << "FAIL " << to_string(row.orbit) << ": " << row.diff << "\n";
    out << r.passed() << "/" << r.rows.size() << " orbits OK\n";
}

}  // namespace

Triangulation Instance::polygon() const {
    int N = rank + 3;
    auto tau = diags(triangulation);
    validate(N, tau);
    return Triangulation(N, tau);
}

ThetaTriangulation Instance::theta() const {
    if (static_cast<int>(triangulation.size()) < rank || rank < 1)
        throw Error(ErrorCode::NotMaximal, "expected " + std::to_string(2 * rank - 1) + " diagonals");
    auto d = triangulation[rank - 1];
    return make_theta(rank, diags(triangulation), d[0], d[1]);
}

Instance parse_instance(const std::string &text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error &e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
    if (!j.is_object()) throw Error(ErrorCode::ParseError, "instance must be a JSON object");
    for (auto &[k, v] : j.items())
        if (k != "rank" && k != "kind" && k != "triangulation" && k != "orbit" && k != "diagonal")
            throw Error(ErrorCode::ParseError, "unknown field \"" + k + "\"");
    Instance inst;
    if (!j.contains("rank") || !j["rank"].is_number_integer()) throw Error(ErrorCode::ParseError, "rank must be an integer");
    inst.rank = j["rank"].get<int>();
    if (inst.rank < 1 || inst.rank > 7) throw Error(ErrorCode::ParseError, "rank must be in 1..7");
    if (!j.contains("kind") || !j["kind"].is_string()) throw Error(ErrorCode::ParseError, "kind must be a string");
    inst.kind = parse_kind(j["kind"].get<std::string>());
    if (!j.contains("triangulation") || !j["triangulation"].is_array())
        throw Error(ErrorCode::ParseError, "triangulation must be an array");
    for (auto &p : j["triangulation"]) inst.triangulation.push_back(pair_of(p, "triangulation entry"));
    bool a = inst.kind == Kind::A;
    if (j.contains(a ? "orbit" : "diagonal"))
        throw Error(ErrorCode::ParseError, std::string("kind ") + kind_char(inst.kind) + " takes \"" +
                                               (a ? "diagonal" : "orbit") + "\"");
    if (j.contains(a ? "diagonal" : "orbit")) inst.target = pair_of(j[a ? "diagonal" : "orbit"], "target");
    if (a) {
        inst.polygon();
        if (inst.target) check_target(*inst.target, inst.rank + 3, true);
    } else {
        inst.theta();
        if (inst.target) check_target(*inst.target, 2 * inst.rank + 2, false);
    }
    return inst;
}

std::string instance_json(const Instance &inst) {
    json j = {{"rank", inst.rank}, {"kind", std::string(1, kind_char(inst.kind))}, {"triangulation", inst.triangulation}};
    if (inst.target) j[inst.kind == Kind::A ? "diagonal" : "orbit"] = *inst.target;
    return j.dump();
}

int exit_code(ErrorCode c) {
    switch (c) {
    case ErrorCode::ParseError:
    case ErrorCode::InvalidVertex:
    case ErrorCode::DegenerateDiagonal:
    case ErrorCode::CrossingDiagonals:
    case ErrorCode::NotMaximal:
    case ErrorCode::NotThetaInvariant:
    case ErrorCode::DiameterNotAtIndexN:
    case ErrorCode::InvalidOperation:
        return 1;
    case ErrorCode::UnsupportedTriangulationForB:
        return 2;
    default:
        return 3;
    }
}

namespace {

struct Options {
    std::string path;
    std::string kind;
    int max_rank = 0;
    std::string format = "dot";
    int matching = -1;
    bool json_out = false;
    bool corrupt = false;
};

Kind effective_kind(const Instance &inst, const Options &o) { return o.kind.empty() ? inst.kind : parse_kind(o.kind); }

Instance load(const Options &o) {
    Instance inst = parse_instance(read_source(o.path));
    if (!o.kind.empty()) {
        Kind k = parse_kind(o.kind);
        if ((k == Kind::A) != (inst.kind == Kind::A))
            throw Error(ErrorCode::ParseError, "--kind cannot switch between polygon and orbit instances");
        inst.kind = k;
    }
    return inst;
}

SnakeGraph graph_of(const Instance &inst) {
    if (!inst.target) throw Error(ErrorCode::ParseError, "instance has no target");
    auto t = *inst.target;
    if (inst.kind == Kind::A) {
        auto T = inst.polygon();
        Diag g(t[0], t[1]);
        return build_snake_graph({g.a, g.b}, T);
    }
    auto T = inst.theta();
    return build_G_ab(T, orbit_of(Diag(t[0], t[1]), inst.rank), inst.kind);
}

int cmd_expand(const Options &o, std::ostream &out) {
    Instance inst = load(o);
    if (!inst.target) throw Error(ErrorCode::ParseError, "expand needs a target");
    auto t = *inst.target;
    Expansion x;
    if (inst.kind == Kind::A) {
        x = expand_diagonal(Diag(t[0], t[1]), inst.polygon());
    } else {
        auto T = inst.theta();
        x = expand_orbit(T, orbit_of(Diag(t[0], t[1]), inst.rank), inst.kind);
    }
    out << "F = " << x.F.str() << "\n";
    out << "g = " << g_string(x.g) << "\n";
    return 0;
}

int cmd_verify(const Options &o, std::ostream &out) {
    if (o.max_rank > 0) {
        std::vector<Kind> kinds;
        if (o.kind.empty()) kinds = {Kind::B, Kind::C};
        else kinds = {parse_kind(o.kind)};
        bool ok = true;
        for (Kind k : kinds) {
            if (k == Kind::A) throw Error(ErrorCode::ParseError, "verify sweeps need kind B or C");
            for (int n = 2; n <= o.max_rank; ++n) {
                auto s = sweep(n, k, o.corrupt);
                out << "kind " << kind_char(k) << ", rank " << n << " (" << s.instances << " oriented instances)\n";
                if (s.ok()) {
                    out << "all " << s.triangulations << " triangulations × " << s.orbits << " orbits OK\n";
                    continue;
                }
                ok = false;
                for (auto &r : s.failures) {
                    out << "triangulation";
                    for (auto &d : r.T.tau) out << " " << to_string(d);
                    out << " (" << r.T.tail << "->" << r.T.head << ")\n";
                    print_report(r, out);
                }
                out << s.failures.size() << " of " << s.instances << " instances FAILED\n";
            }
        }
        return ok ? 0 : 3;
    }
    if (o.path.empty()) throw Error(ErrorCode::ParseError, "verify needs an instance file or --max-rank");
    Instance inst = load(o);
    Kind k = effective_kind(inst, o);
    if (k == Kind::A) throw Error(ErrorCode::ParseError, "verify needs kind B or C");
    auto rep = verify_theorems(inst.theta(), k, o.corrupt);
    if (o.json_out) out << report_json(rep).dump(2) << "\n";
    else print_report(rep, out);
    return rep.ok() ? 0 : 3;
}

int cmd_render(const Options &o, std::ostream &out) {
    Instance inst = load(o);
    SnakeGraph G = graph_of(inst);
    std::optional<Matching> overlay;
    if (o.matching >= 0) {
        auto ms = sorted_matchings(G);
        if (o.matching >= static_cast<int>(ms.size()))
            throw Error(ErrorCode::ParseError, "matching index out of range (graph has " + std::to_string(ms.size()) + ")");
        overlay = ms[o.matching];
    }
    if (o.format == "dot") out << to_dot(G, overlay ? &*overlay : nullptr);
    else if (o.format == "tikz") out << to_tikz(G, overlay ? &*overlay : nullptr);
    else throw Error(ErrorCode::ParseError, "format must be dot or tikz");
    return 0;
}

int cmd_matchings(const Options &o, std::ostream &out) {
    Instance inst = load(o);
    SnakeGraph G = graph_of(inst);
    auto ms = sorted_matchings(G);
    for (size_t i = 0; i < ms.size(); ++i) {
        out << i << ": " << height_monomial(G, ms[i]).str() << " |";
        for (int e : ms[i]) out << " " << G.edges[e].u << "-" << G.edges[e].v;
        out << "\n";
    }
    out << ms.size() << " matchings\n";
    return 0;
}

}  // namespace

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Snake-graph expansions for cluster algebras of types A, B, C"};
    app.require_subcommand(1);
    Options o;
    auto *ex = app.add_subcommand("expand", "print F-polynomial and g-vector of the target");
    ex->add_option("instance", o.path, "instance JSON file, - for stdin")->required();
    ex->add_option("--kind", o.kind, "override kind (A, B or C)");
    auto *ve = app.add_subcommand("verify", "compare graphs, formulas and the mutation oracle");
    ve->add_option("instance", o.path, "instance JSON file");
    ve->add_option("--kind", o.kind, "B or C");
    ve->add_option("--max-rank", o.max_rank, "sweep all theta-invariant triangulations of rank 2..N");
    ve->add_flag("--json", o.json_out, "JSON report");
    ve->add_flag("--corrupt-folding", o.corrupt, "swap the folding binding (test hook)")->group("");
    auto *re = app.add_subcommand("render", "emit the (modified) snake graph");
    re->add_option("instance", o.path, "instance JSON file")->required();
    re->add_option("--kind", o.kind, "override kind");
    re->add_option("--format", o.format, "dot or tikz");
    re->add_option("--matching", o.matching, "overlay matching K (0 is the minimal matching)");
    auto *ma = app.add_subcommand("matchings", "list perfect matchings with height monomials");
    ma->add_option("instance", o.path, "instance JSON file")->required();
    ma->add_option("--kind", o.kind, "override kind");
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }
    try {
        if (*ex) return cmd_expand(o, out);
        if (*ve) return cmd_verify(o, out);
        if (*re) return cmd_render(o, out);
        if (*ma) return cmd_matchings(o, out);
    } catch (const Error &e) {
        err << "error: " << e.what() << "\n";
        return exit_code(e.code);
    }
    return 1;
}

}  // namespace fm::cli
