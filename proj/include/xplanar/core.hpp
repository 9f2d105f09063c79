#pragma once

// Dart-level model of X-graphs: 4-regular multigraphs (loops allowed) whose
// four darts at every vertex are split into two pairs.  A graph is X-planar
// when it can be embedded in the plane so that the two pairs alternate
// 1-2-1-2 around every vertex.  This header holds the value types, the .xg
// text format, Gauss-code construction, and the certificate checker used by
// every other module.

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace xplanar {

struct ParseError : std::runtime_error {
    int line;  // 1-based; 0 when the failure is not tied to a single line
    ParseError(int line_, const std::string& what_)
        : std::runtime_error(line_ > 0 ? "line " + std::to_string(line_) + ": " + what_ : what_),
          line(line_) {}
};

// Invariant failures that indicate a bug rather than bad input.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

enum class EdgeEnd : std::uint8_t { s = 0, t = 1 };

// Half-edge: one of the two ends of an edge.  Ordered by (edge, end), s < t.
struct Dart {
    int edge = 0;
    EdgeEnd end = EdgeEnd::s;
    auto operator<=>(const Dart&) const = default;
};

inline std::string to_string(Dart d) {
    return std::to_string(d.edge) + (d.end == EdgeEnd::s ? ".s" : ".t");
}

// Dense index for table lookups, 0..2E-1.
inline int dart_key(Dart d) { return d.edge * 2 + static_cast<int>(d.end); }
inline Dart dart_from_key(int k) { return Dart{k / 2, static_cast<EdgeEnd>(k % 2)}; }

struct Edge {
    int tail = 0;
    int head = 0;
};

// Two unordered dart pairs.  Valid graphs have exactly 2+2 darts per vertex;
// the vectors stay flexible so validate() can describe malformed input.
struct VertexPairing {
    std::array<std::vector<Dart>, 2> pair;
};

struct XGraph {
    int vertex_count = 0;
    std::vector<Edge> edges;
    std::vector<VertexPairing> pairing;

    int edge_count() const { return static_cast<int>(edges.size()); }
};

inline int dart_vertex(const XGraph& g, Dart d) {
    return d.end == EdgeEnd::s ? g.edges[d.edge].tail : g.edges[d.edge].head;
}

// Per-vertex incident darts, sorted by (edge, end).
inline std::vector<std::vector<Dart>> incident_darts(const XGraph& g) {
    std::vector<std::vector<Dart>> out(g.vertex_count);
    for (int e = 0; e < g.edge_count(); ++e) {
        out[g.edges[e].tail].push_back(Dart{e, EdgeEnd::s});
        out[g.edges[e].head].push_back(Dart{e, EdgeEnd::t});
    }
    return out;
}

// 0 or 1: which pair of vertex v holds dart d.
inline int pair_label(const XGraph& g, int v, Dart d) {
    for (int side = 0; side < 2; ++side)
        for (Dart p : g.pairing[v].pair[side])
            if (p == d) return side;
    throw std::invalid_argument("dart " + to_string(d) + " is not paired at vertex " + std::to_string(v));
}

// Pair label of every dart, indexed by dart_key.  Requires a valid graph.
inline std::vector<std::uint8_t> dart_pair_labels(const XGraph& g) {
    std::vector<std::uint8_t> label(2 * g.edges.size(), 0);
    for (int v = 0; v < g.vertex_count; ++v)
        for (int side = 0; side < 2; ++side)
            for (Dart d : g.pairing[v].pair[side])
                label[dart_key(d)] = static_cast<std::uint8_t>(side);
    return label;
}

// Edge traversal direction: forward = tail to head (s to t).
struct OrientedEdge {
    int edge = 0;
    bool forward = true;
    auto operator<=>(const OrientedEdge&) const = default;
};

inline Dart departure_dart(OrientedEdge oe) {
    return Dart{oe.edge, oe.forward ? EdgeEnd::s : EdgeEnd::t};
}
inline Dart arrival_dart(OrientedEdge oe) {
    return Dart{oe.edge, oe.forward ? EdgeEnd::t : EdgeEnd::s};
}
inline OrientedEdge reversed(OrientedEdge oe) { return OrientedEdge{oe.edge, !oe.forward}; }

inline int step_tail(const XGraph& g, OrientedEdge oe) {
    return oe.forward ? g.edges[oe.edge].tail : g.edges[oe.edge].head;
}
inline int step_head(const XGraph& g, OrientedEdge oe) {
    return oe.forward ? g.edges[oe.edge].head : g.edges[oe.edge].tail;
}

// Cyclic edge sequence; consecutive steps share a vertex and no edge id
// repeats.  The start index carries no meaning.
struct ClosedWalk {
    std::vector<OrientedEdge> steps;
};

// Transit through a vertex: arrive by `in`, leave by `out`.  in != out always
// holds because the two darts come from distinct steps (or the two ends of a
// loop traversed once).
struct Pass {
    int vertex = 0;
    Dart in{};
    Dart out{};
};

inline std::optional<std::string> walk_violation(const ClosedWalk& w, const XGraph& g) {
    if (w.steps.empty()) return "walk is empty";
    std::vector<char> seen(g.edges.size(), 0);
    for (const OrientedEdge& oe : w.steps) {
        if (oe.edge < 0 || oe.edge >= g.edge_count())
            return "edge " + std::to_string(oe.edge) + " does not exist";
        if (seen[oe.edge]) return "edge " + std::to_string(oe.edge) + " appears twice";
        seen[oe.edge] = 1;
    }
    const std::size_t n = w.steps.size();
    for (std::size_t i = 0; i < n; ++i) {
        const OrientedEdge a = w.steps[i];
        const OrientedEdge b = w.steps[(i + 1) % n];
        if (step_head(g, a) != step_tail(g, b))
            return "steps " + std::to_string(i) + " and " + std::to_string((i + 1) % n) +
                   " are not incident";
    }
    return std::nullopt;
}

// One Pass per step boundary; pass k sits between step k and step k+1 (cyclic).
inline std::vector<Pass> passes(const ClosedWalk& w, const XGraph& g) {
    if (auto why = walk_violation(w, g)) throw std::invalid_argument("invalid walk: " + *why);
    const std::size_t n = w.steps.size();
    std::vector<Pass> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const OrientedEdge a = w.steps[i];
        const OrientedEdge b = w.steps[(i + 1) % n];
        out.push_back(Pass{step_head(g, a), arrival_dart(a), departure_dart(b)});
    }
    return out;
}

// ---------------------------------------------------------------------------
// Validation

inline std::vector<std::string> validate(const XGraph& g) {
    std::vector<std::string> report;
    if (g.vertex_count < 0) {
        report.push_back("negative vertex count");
        return report;
    }
    for (int e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edges[e];
        if (ed.tail < 0 || ed.tail >= g.vertex_count || ed.head < 0 || ed.head >= g.vertex_count)
            report.push_back("edge " + std::to_string(e) + ": edge endpoint out of range");
    }
    if (!report.empty()) return report;

    std::vector<int> degree(g.vertex_count, 0);
    for (const Edge& ed : g.edges) {
        ++degree[ed.tail];
        ++degree[ed.head];
    }
    for (int v = 0; v < g.vertex_count; ++v)
        if (degree[v] != 4)
            report.push_back("vertex " + std::to_string(v) + ": degree " + std::to_string(degree[v]) +
                             " != 4");

    if (static_cast<int>(g.pairing.size()) != g.vertex_count) {
        report.push_back("pairing table has " + std::to_string(g.pairing.size()) + " entries for " +
                         std::to_string(g.vertex_count) + " vertices");
        return report;
    }
    for (int v = 0; v < g.vertex_count; ++v) {
        const VertexPairing& vp = g.pairing[v];
        if (vp.pair[0].size() != 2 || vp.pair[1].size() != 2) {
            report.push_back("vertex " + std::to_string(v) + ": pair sizes must be 2 and 2");
            continue;
        }
        bool darts_ok = true;
        std::vector<Dart> all;
        for (int side = 0; side < 2; ++side)
            for (Dart d : vp.pair[side]) {
                if (d.edge < 0 || d.edge >= g.edge_count()) {
                    report.push_back("vertex " + std::to_string(v) + ": unknown dart " + to_string(d));
                    darts_ok = false;
                    continue;
                }
                if (dart_vertex(g, d) != v) {
                    report.push_back("vertex " + std::to_string(v) + ": dart " + to_string(d) +
                                     " is not incident");
                    darts_ok = false;
                    continue;
                }
                all.push_back(d);
            }
        if (!darts_ok) continue;
        std::sort(all.begin(), all.end());
        if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
            report.push_back("vertex " + std::to_string(v) + ": pairing repeats a dart");
            continue;
        }
        if (degree[v] == 4 && all.size() == 4) {
            // The four paired darts must be exactly the four incident darts.
            std::vector<Dart> inc;
            for (int e = 0; e < g.edge_count(); ++e) {
                if (g.edges[e].tail == v) inc.push_back(Dart{e, EdgeEnd::s});
                if (g.edges[e].head == v) inc.push_back(Dart{e, EdgeEnd::t});
            }
            std::sort(inc.begin(), inc.end());
            if (inc != all)
                report.push_back("vertex " + std::to_string(v) + ": pairing does not cover the incident darts");
        }
    }
    return report;
}

// ---------------------------------------------------------------------------
// .xg format

namespace detail {

inline std::vector<std::string> split_ws(std::string_view s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (std::isspace(static_cast<unsigned char>(c))) {
            if (!cur.empty()) out.push_back(std::move(cur)), cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) out.push_back(std::move(cur));
    return out;
}

inline int parse_int(const std::string& tok, int line, const char* what) {
    try {
        std::size_t pos = 0;
        int v = std::stoi(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw ParseError(line, std::string("expected ") + what + ", got '" + tok + "'");
    }
}

inline Dart parse_dart(const std::string& tok, int line) {
    const std::size_t dot = tok.find('.');
    if (dot == std::string::npos || dot + 2 != tok.size() ||
        (tok[dot + 1] != 's' && tok[dot + 1] != 't'))
        throw ParseError(line, "expected dart '<edge>.s' or '<edge>.t', got '" + tok + "'");
    const int e = parse_int(tok.substr(0, dot), line, "edge id");
    return Dart{e, tok[dot + 1] == 's' ? EdgeEnd::s : EdgeEnd::t};
}

}  // namespace detail

inline XGraph parse_xgraph(std::string_view text) {
    XGraph g;
    bool have_header = false;
    int declared_edges = 0;
    std::vector<char> edge_seen, pairing_seen;

    std::istringstream in{std::string(text)};
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        const std::size_t hash = raw.find('#');
        if (hash != std::string::npos) raw.resize(hash);
        const std::vector<std::string> tok = detail::split_ws(raw);
        if (tok.empty()) continue;

        if (tok[0] == "xgraph") {
            if (have_header) throw ParseError(lineno, "duplicate header");
            if (tok.size() != 3) throw ParseError(lineno, "header must be 'xgraph <V> <E>'");
            g.vertex_count = detail::parse_int(tok[1], lineno, "vertex count");
            declared_edges = detail::parse_int(tok[2], lineno, "edge count");
            if (g.vertex_count < 0 || declared_edges < 0)
                throw ParseError(lineno, "negative count in header");
            g.edges.resize(declared_edges);
            g.pairing.resize(g.vertex_count);
            edge_seen.assign(declared_edges, 0);
            pairing_seen.assign(g.vertex_count, 0);
            have_header = true;
            continue;
        }
        if (!have_header) throw ParseError(lineno, "expected 'xgraph <V> <E>' header first");

        if (tok[0] == "e") {
            if (tok.size() != 4) throw ParseError(lineno, "edge line must be 'e <id> <tail> <head>'");
            const int id = detail::parse_int(tok[1], lineno, "edge id");
            if (id < 0 || id >= declared_edges) throw ParseError(lineno, "edge id out of range");
            if (edge_seen[id]) throw ParseError(lineno, "duplicate edge id " + std::to_string(id));
            edge_seen[id] = 1;
            g.edges[id].tail = detail::parse_int(tok[2], lineno, "tail vertex");
            g.edges[id].head = detail::parse_int(tok[3], lineno, "head vertex");
            continue;
        }
        if (tok[0] == "p") {
            if (tok.size() < 3) throw ParseError(lineno, "pairing line must be 'p <v> <darts> | <darts>'");
            const int v = detail::parse_int(tok[1], lineno, "vertex id");
            if (v < 0 || v >= g.vertex_count) throw ParseError(lineno, "vertex id out of range");
            if (pairing_seen[v]) throw ParseError(lineno, "duplicate pairing for vertex " + std::to_string(v));
            pairing_seen[v] = 1;
            int side = 0;
            bool saw_bar = false;
            for (std::size_t i = 2; i < tok.size(); ++i) {
                if (tok[i] == "|") {
                    if (saw_bar) throw ParseError(lineno, "more than one '|' in pairing");
                    saw_bar = true;
                    side = 1;
                    continue;
                }
                g.pairing[v].pair[side].push_back(detail::parse_dart(tok[i], lineno));
            }
            if (!saw_bar) throw ParseError(lineno, "pairing line is missing '|'");
            continue;
        }
        throw ParseError(lineno, "unknown record '" + tok[0] + "'");
    }
    if (!have_header) throw ParseError(0, "missing 'xgraph <V> <E>' header");
    for (int e = 0; e < declared_edges; ++e)
        if (!edge_seen[e]) throw ParseError(0, "edge " + std::to_string(e) + " was never defined");
    for (int v = 0; v < g.vertex_count; ++v)
        if (!pairing_seen[v]) throw ParseError(0, "vertex " + std::to_string(v) + " has no pairing line");

    const std::vector<std::string> report = validate(g);
    if (!report.empty()) throw ParseError(0, report.front());
    return g;
}

// Canonical form: edges ascending, each pair sorted, pair with the smaller
// first dart printed first.  parse(serialize(g)) == serialize-identical.
inline std::string serialize(const XGraph& g) {
    std::ostringstream out;
    out << "xgraph " << g.vertex_count << ' ' << g.edge_count() << '\n';
    for (int e = 0; e < g.edge_count(); ++e)
        out << "e " << e << ' ' << g.edges[e].tail << ' ' << g.edges[e].head << '\n';
    for (int v = 0; v < g.vertex_count; ++v) {
        std::array<std::vector<Dart>, 2> p = g.pairing[v].pair;
        for (auto& side : p) std::sort(side.begin(), side.end());
        if (!p[0].empty() && !p[1].empty() && p[1][0] < p[0][0]) std::swap(p[0], p[1]);
        out << "p " << v;
        for (Dart d : p[0]) out << ' ' << to_string(d);
        out << " |";
        for (Dart d : p[1]) out << ' ' << to_string(d);
        out << '\n';
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// Gauss codes

// Double-occurrence word -> X-graph of the closed curve it describes.
// Vertex ids follow first occurrence; edge i runs from position i to
// position i+1 (cyclic).  Each pass's in-dart and out-dart form one pair,
// which is the structure of a transverse crossing.
inline XGraph from_gauss_code(const std::vector<std::string>& word) {
    const int n = static_cast<int>(word.size());
    if (n < 2) throw std::invalid_argument("gauss code needs at least two symbols");

    std::vector<std::string> names;
    std::vector<int> vertex_at(n);
    for (int i = 0; i < n; ++i) {
        auto it = std::find(names.begin(), names.end(), word[i]);
        if (it == names.end()) {
            vertex_at[i] = static_cast<int>(names.size());
            names.push_back(word[i]);
        } else {
            vertex_at[i] = static_cast<int>(it - names.begin());
        }
    }

    XGraph g;
    g.vertex_count = static_cast<int>(names.size());
    g.edges.resize(n);
    g.pairing.resize(g.vertex_count);
    std::vector<std::vector<int>> occ(g.vertex_count);
    for (int i = 0; i < n; ++i) {
        g.edges[i] = Edge{vertex_at[i], vertex_at[(i + 1) % n]};
        occ[vertex_at[i]].push_back(i);
    }
    for (int v = 0; v < g.vertex_count; ++v)
        if (occ[v].size() != 2)
            throw std::invalid_argument("symbol '" + names[v] + "' occurs " +
                                        std::to_string(occ[v].size()) + " times, expected 2");
    for (int v = 0; v < g.vertex_count; ++v)
        for (int side = 0; side < 2; ++side) {
            const int pos = occ[v][side];
            g.pairing[v].pair[side] = {Dart{(pos + n - 1) % n, EdgeEnd::t}, Dart{pos, EdgeEnd::s}};
        }
    return g;
}

inline XGraph from_gauss_code(std::string_view text) {
    return from_gauss_code(detail::split_ws(text));
}

// ---------------------------------------------------------------------------
// Components

struct Component {
    XGraph graph;
    std::vector<int> vertex_ids;  // local vertex id -> original vertex id
    std::vector<int> edge_ids;    // local edge id -> original edge id
};

inline std::vector<Component> components(const XGraph& g) {
    std::vector<std::vector<int>> adj(g.vertex_count);
    for (int e = 0; e < g.edge_count(); ++e) {
        adj[g.edges[e].tail].push_back(g.edges[e].head);
        adj[g.edges[e].head].push_back(g.edges[e].tail);
    }
    std::vector<int> comp(g.vertex_count, -1);
    int ncomp = 0;
    for (int v = 0; v < g.vertex_count; ++v) {
        if (comp[v] != -1) continue;
        std::vector<int> stack{v};
        comp[v] = ncomp;
        while (!stack.empty()) {
            const int u = stack.back();
            stack.pop_back();
            for (int w : adj[u])
                if (comp[w] == -1) {
                    comp[w] = ncomp;
                    stack.push_back(w);
                }
        }
        ++ncomp;
    }

    std::vector<Component> out(ncomp);
    std::vector<int> local_vertex(g.vertex_count, -1), local_edge(g.edge_count(), -1);
    for (int v = 0; v < g.vertex_count; ++v) {
        Component& c = out[comp[v]];
        local_vertex[v] = static_cast<int>(c.vertex_ids.size());
        c.vertex_ids.push_back(v);
    }
    for (int e = 0; e < g.edge_count(); ++e) {
        Component& c = out[comp[g.edges[e].tail]];
        local_edge[e] = static_cast<int>(c.edge_ids.size());
        c.edge_ids.push_back(e);
    }
    for (Component& c : out) {
        c.graph.vertex_count = static_cast<int>(c.vertex_ids.size());
        c.graph.edges.reserve(c.edge_ids.size());
        for (int e : c.edge_ids)
            c.graph.edges.push_back(Edge{local_vertex[g.edges[e].tail], local_vertex[g.edges[e].head]});
        c.graph.pairing.resize(c.graph.vertex_count);
        for (int lv = 0; lv < c.graph.vertex_count; ++lv)
            for (int side = 0; side < 2; ++side)
                for (Dart d : g.pairing[c.vertex_ids[lv]].pair[side])
                    c.graph.pairing[lv].pair[side].push_back(Dart{local_edge[d.edge], d.end});
    }
    return out;
}

// ---------------------------------------------------------------------------
// Forbidden pairs

// Vertices common to two edge-disjoint closed walks where one walk's pass
// uses both darts of a single pair.  Preconditions: both walks valid,
// edge-disjoint.
inline std::vector<int> crossing_vertices(const ClosedWalk& w1, const ClosedWalk& w2,
                                          const XGraph& g) {
    const std::vector<Pass> p1 = passes(w1, g);
    const std::vector<Pass> p2 = passes(w2, g);
    {
        std::vector<char> used(g.edges.size(), 0);
        for (const OrientedEdge& oe : w1.steps) used[oe.edge] = 1;
        for (const OrientedEdge& oe : w2.steps)
            if (used[oe.edge]) throw std::invalid_argument("walks are not edge-disjoint");
    }
    // Edge-disjointness forces a common vertex to carry exactly one pass of
    // each walk: two passes of one walk would consume all four darts.
    std::vector<int> count1(g.vertex_count, 0), count2(g.vertex_count, 0);
    std::vector<const Pass*> at1(g.vertex_count, nullptr);
    for (const Pass& p : p1) {
        ++count1[p.vertex];
        at1[p.vertex] = &p;
    }
    for (const Pass& p : p2) ++count2[p.vertex];

    std::vector<int> out;
    for (const Pass& p : p2) {
        const int v = p.vertex;
        if (count1[v] == 0) continue;
        if (count1[v] != 1 || count2[v] != 1)
            throw InternalError("common vertex with multiple passes in edge-disjoint walks");
        const Pass& q = *at1[v];
        if (pair_label(g, v, q.in) == pair_label(g, v, q.out)) out.push_back(v);
    }
    std::sort(out.begin(), out.end());
    return out;
}

struct CertificateReport {
    ClosedWalk walk1, walk2;
    std::vector<int> crossing;
    bool valid = false;
    std::string failure_reason;
};

// Total checker: never throws on malformed certificates, it reports instead.
// Valid means both walks are well-formed, edge-disjoint, and have exactly one
// crossing vertex.
inline CertificateReport verify_forbidden_pair(const ClosedWalk& w1, const ClosedWalk& w2,
                                               const XGraph& g) {
    CertificateReport r;
    r.walk1 = w1;
    r.walk2 = w2;
    if (auto why = walk_violation(w1, g)) {
        r.failure_reason = "walk 1: " + *why;
        return r;
    }
    if (auto why = walk_violation(w2, g)) {
        r.failure_reason = "walk 2: " + *why;
        return r;
    }
    {
        std::vector<char> used(g.edges.size(), 0);
        for (const OrientedEdge& oe : w1.steps) used[oe.edge] = 1;
        for (const OrientedEdge& oe : w2.steps)
            if (used[oe.edge]) {
                r.failure_reason = "not edge-disjoint: edge " + std::to_string(oe.edge) + " is shared";
                return r;
            }
    }
    r.crossing = crossing_vertices(w1, w2, g);
    if (r.crossing.size() != 1) {
        r.failure_reason = "expected exactly one crossing vertex, found " +
                           std::to_string(r.crossing.size());
        return r;
    }
    r.valid = true;
    return r;
}

// Loop-erased sub-cycle of w through `anchor`, using a subset of w's edges.
inline ClosedWalk simplify_cycle(const ClosedWalk& w, int anchor, const XGraph& g) {
    if (auto why = walk_violation(w, g)) throw std::invalid_argument("invalid walk: " + *why);
    const std::size_t n = w.steps.size();
    std::size_t start = n;
    for (std::size_t i = 0; i < n; ++i)
        if (step_tail(g, w.steps[i]) == anchor) {
            start = i;
            break;
        }
    if (start == n) throw std::invalid_argument("walk does not visit the anchor vertex");

    std::vector<OrientedEdge> path;
    std::vector<int> path_vertex{anchor};
    std::vector<int> pos_on_path(g.vertex_count, -1);
    pos_on_path[anchor] = 0;
    for (std::size_t k = 0; k < n; ++k) {
        const OrientedEdge oe = w.steps[(start + k) % n];
        const int h = step_head(g, oe);
        if (h == anchor) {
            path.push_back(oe);
            return ClosedWalk{std::move(path)};
        }
        if (pos_on_path[h] >= 0) {
            // Erase the loop back to the first visit of h.
            while (static_cast<int>(path_vertex.size()) - 1 > pos_on_path[h]) {
                pos_on_path[path_vertex.back()] = -1;
                path_vertex.pop_back();
                path.pop_back();
            }
            // h keeps its original position; nothing else to do.
            continue;
        }
        path.push_back(oe);
        path_vertex.push_back(h);
        pos_on_path[h] = static_cast<int>(path_vertex.size()) - 1;
    }
    throw InternalError("closed walk did not return to its anchor");
}

// ---------------------------------------------------------------------------
// Walk text form: 'w +0 -3' where +e is tail-to-head.

inline std::string walk_to_text(const ClosedWalk& w) {
    std::string out = "w";
    for (const OrientedEdge& oe : w.steps) {
        out += oe.forward ? " +" : " -";
        out += std::to_string(oe.edge);
    }
    return out;
}

inline ClosedWalk parse_walk_line(std::string_view line) {
    const std::vector<std::string> tok = detail::split_ws(line);
    if (tok.empty() || tok[0] != "w") throw ParseError(0, "walk line must start with 'w'");
    ClosedWalk w;
    for (std::size_t i = 1; i < tok.size(); ++i) {
        const std::string& t = tok[i];
        if (t.size() < 2 || (t[0] != '+' && t[0] != '-'))
            throw ParseError(0, "expected signed edge id, got '" + t + "'");
        w.steps.push_back(OrientedEdge{detail::parse_int(t.substr(1), 0, "edge id"), t[0] == '+'});
    }
    return w;
}

}  // namespace xplanar
