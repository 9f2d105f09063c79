#pragma once

// The decision procedure.  Per connected component: build a turning Euler
// tour; a self-crossing splits into a certificate on the spot; otherwise an
// odd interlacement cycle converts to a certificate; otherwise the bipartite
// 2-coloring yields a plane embedding.  Planar overall means every component
// embeds.  Certificates and embeddings are re-verified before they leave, so
// a wrong answer can only surface as an InternalError, never silently.

#include "embed.hpp"
#include "interlace.hpp"

namespace xplanar {

struct ComponentResult {
    std::vector<int> vertex_ids;  // local vertex id -> input vertex id
    std::vector<int> edge_ids;    // local edge id -> input edge id
    bool planar = false;
    // planar: all in local ids
    RotationSystem rotation;
    std::vector<std::vector<Dart>> faces;
    std::vector<int> chord_side;
    // non-planar: certificate in local ids
    ClosedWalk walk1, walk2;
    int crossing_vertex = -1;
    std::string provenance;  // strong-turning-split | odd-cycle-formula | odd-cycle-fallback
};

struct Verdict {
    bool planar = false;
    std::vector<ComponentResult> components;
    // Global views in input ids: rotation + faces when planar (rotations
    // start at their smallest dart, faces sorted by first dart), otherwise
    // the first offending component's certificate.
    RotationSystem rotation;
    std::vector<std::vector<Dart>> faces;
    ClosedWalk walk1, walk2;
    int crossing_vertex = -1;
    std::string provenance;
};

namespace detail {

inline ClosedWalk lift_walk(const ClosedWalk& w, const std::vector<int>& edge_ids) {
    ClosedWalk out;
    out.steps.reserve(w.steps.size());
    for (const OrientedEdge& s : w.steps)
        out.steps.push_back(OrientedEdge{edge_ids[s.edge], s.forward});
    return out;
}

inline std::array<Dart, 4> smallest_dart_first(const std::array<Dart, 4>& o) {
    int best = 0;
    for (int i = 1; i < 4; ++i)
        if (o[i] < o[best]) best = i;
    std::array<Dart, 4> r;
    for (int i = 0; i < 4; ++i) r[i] = o[(best + i) % 4];
    return r;
}

inline ComponentResult solve_component(const Component& comp) {
    const XGraph& g = comp.graph;
    ComponentResult r;
    r.vertex_ids = comp.vertex_ids;
    r.edge_ids = comp.edge_ids;

    const ClosedWalk tour = turning_euler_tour(g);
    const std::vector<int> self_crossings = self_crossing_vertices(tour, g);
    if (!self_crossings.empty()) {
        std::tie(r.walk1, r.walk2) = split_at_self_crossing(tour, self_crossings.front(), g);
        r.crossing_vertex = self_crossings.front();
        r.provenance = "strong-turning-split";
    } else if (const auto cycle = shortest_odd_cycle(interlacement_graph(tour, g))) {
        const OddCycleWitness w = witness_from_odd_cycle(g, tour, *cycle);
        r.walk1 = w.walk1;
        r.walk2 = w.walk2;
        r.crossing_vertex = w.crossing_vertex;
        r.provenance = w.used_fallback ? "odd-cycle-fallback" : "odd-cycle-formula";
    } else {
        PlaneEmbedding e = plane_embedding(tour, g);
        r.planar = true;
        r.rotation = std::move(e.rotation);
        r.faces = std::move(e.faces);
        r.chord_side = std::move(e.chord_side);
        return r;
    }

    if (r.walk2.steps < r.walk1.steps) std::swap(r.walk1, r.walk2);
    const CertificateReport check = verify_forbidden_pair(r.walk1, r.walk2, g);
    if (!check.valid)
        throw InternalError("produced certificate failed verification: " + check.failure_reason);
    if (check.crossing != std::vector<int>{r.crossing_vertex})
        throw InternalError("produced certificate crosses at the wrong vertex");
    return r;
}

}  // namespace detail

inline Verdict decide(const XGraph& g) {
    if (const auto report = validate(g); !report.empty())
        throw std::invalid_argument("invalid graph: " + report.front());

    Verdict v;
    v.planar = true;
    for (const Component& comp : components(g))
        v.components.push_back(detail::solve_component(comp));
    for (const ComponentResult& c : v.components) v.planar = v.planar && c.planar;

    if (v.planar) {
        v.rotation.order.resize(g.vertex_count);
        for (const ComponentResult& c : v.components) {
            for (std::size_t lv = 0; lv < c.vertex_ids.size(); ++lv) {
                std::array<Dart, 4> o = c.rotation.order[lv];
                for (Dart& d : o) d = Dart{c.edge_ids[d.edge], d.end};
                v.rotation.order[c.vertex_ids[lv]] = detail::smallest_dart_first(o);
            }
            for (const std::vector<Dart>& face : c.faces) {
                std::vector<Dart> lifted;
                lifted.reserve(face.size());
                for (Dart d : face) lifted.push_back(Dart{c.edge_ids[d.edge], d.end});
                v.faces.push_back(std::move(lifted));
            }
        }
        std::sort(v.faces.begin(), v.faces.end(),
                  [](const std::vector<Dart>& a, const std::vector<Dart>& b) {
                      return a.front() < b.front();
                  });
    } else {
        for (const ComponentResult& c : v.components) {
            if (c.planar) continue;
            v.walk1 = detail::lift_walk(c.walk1, c.edge_ids);
            v.walk2 = detail::lift_walk(c.walk2, c.edge_ids);
            v.crossing_vertex = c.vertex_ids[c.crossing_vertex];
            v.provenance = c.provenance;
            break;
        }
    }
    return v;
}

// Plain-text artifact, one record per line: the verdict, per-component
// flags, then either rotation (r) and face (f) lines or the certificate
// (method, two w lines, the crossing vertex).  Deterministic by design.
inline std::string render_verdict(const Verdict& v) {
    std::string out = "planar ";
    out += v.planar ? '1' : '0';
    out += '\n';
    for (std::size_t i = 0; i < v.components.size(); ++i) {
        out += "component " + std::to_string(i) + " ";
        out += v.components[i].planar ? '1' : '0';
        out += '\n';
    }
    if (v.planar) {
        for (std::size_t vertex = 0; vertex < v.rotation.order.size(); ++vertex) {
            out += "r " + std::to_string(vertex);
            for (Dart d : v.rotation.order[vertex]) out += ' ' + to_string(d);
            out += '\n';
        }
        for (const std::vector<Dart>& face : v.faces) {
            out += 'f';
            for (Dart d : face) out += ' ' + to_string(d);
            out += '\n';
        }
    } else {
        out += "method " + v.provenance + '\n';
        out += walk_to_text(v.walk1) + '\n';
        out += walk_to_text(v.walk2) + '\n';
        out += "x " + std::to_string(v.crossing_vertex) + '\n';
    }
    return out;
}

}  // namespace xplanar
