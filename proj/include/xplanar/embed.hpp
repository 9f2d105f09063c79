#pragma once

// Plane embeddings from a turning Euler tour.  Draw the tour as a circle;
// every vertex becomes a chord between its two passes.  When the tour never
// crosses itself and the interlacement graph is bipartite, one color class
// of chords goes inside the circle and the other outside, and contracting
// each chord yields a rotation system whose faces satisfy V - E + F = 2.
//
// Rotations are counterclockwise dart orders.  With passes a, b in tour
// order, an inside vertex reads (a.in, a.out, b.in, b.out) and an outside
// vertex (a.in, b.out, b.in, a.out); both alternate the two pairs around the
// vertex, which is the local condition X-planarity demands.

#include "core.hpp"
#include "euler.hpp"
#include "interlace.hpp"

#include <cmath>
#include <cstdio>

namespace xplanar {

// Counterclockwise dart order around each vertex.
struct RotationSystem {
    std::vector<std::array<Dart, 4>> order;
};

// Do the two pairs alternate 1-2-1-2 around every vertex?
inline bool rotation_alternates(const RotationSystem& rot, const XGraph& g) {
    for (int v = 0; v < g.vertex_count; ++v) {
        const auto& o = rot.order[v];
        for (int i = 0; i < 4; ++i)
            if (pair_label(g, v, o[i]) == pair_label(g, v, o[(i + 1) % 4])) return false;
    }
    return true;
}

// Face orbits of the rotation system: follow an edge to its far dart, then
// turn to the next dart counterclockwise.  Faces are listed by their
// smallest dart, starting from it, so the output is deterministic.  The
// orbits partition all 2E darts.
inline std::vector<std::vector<Dart>> trace_faces(const RotationSystem& rot, const XGraph& g) {
    const int nd = 2 * g.edge_count();
    std::vector<Dart> succ(nd);
    for (int v = 0; v < g.vertex_count; ++v)
        for (int i = 0; i < 4; ++i) succ[dart_key(rot.order[v][i])] = rot.order[v][(i + 1) % 4];

    const auto other_end = [](Dart d) {
        return Dart{d.edge, d.end == EdgeEnd::s ? EdgeEnd::t : EdgeEnd::s};
    };
    std::vector<char> seen(nd, 0);
    std::vector<std::vector<Dart>> faces;
    for (int k = 0; k < nd; ++k) {
        if (seen[k]) continue;
        std::vector<Dart> face;
        Dart d = dart_from_key(k);
        do {
            seen[dart_key(d)] = 1;
            face.push_back(d);
            d = succ[dart_key(other_end(d))];
        } while (dart_key(d) != k);
        faces.push_back(std::move(face));
    }
    return faces;
}

struct PlaneEmbedding {
    RotationSystem rotation;
    std::vector<std::vector<Dart>> faces;
    std::vector<int> chord_side;  // per vertex: 0 inside the tour circle, 1 outside
};

// Requires a turning Euler tour with no self-crossings and a bipartite
// interlacement graph; throws invalid_argument otherwise.  The result always
// satisfies V - E + F = 2 (InternalError if not, which would be a bug).
inline PlaneEmbedding plane_embedding(const ClosedWalk& tour, const XGraph& g) {
    if (!is_turning_euler_tour(tour, g))
        throw std::invalid_argument("walk is not a turning Euler tour");
    if (!self_crossing_vertices(tour, g).empty())
        throw std::invalid_argument("tour crosses itself");
    const auto color = bipartition(interlacement_graph(tour, g));
    if (!color) throw std::invalid_argument("interlacement graph has an odd cycle");

    const std::vector<Pass> ps = passes(tour, g);
    const auto pos = vertex_pass_positions(tour, g);
    PlaneEmbedding e;
    e.chord_side = *color;
    e.rotation.order.resize(g.vertex_count);
    for (int v = 0; v < g.vertex_count; ++v) {
        const Pass& a = ps[pos[v][0]];
        const Pass& b = ps[pos[v][1]];
        e.rotation.order[v] = (*color)[v] == 0 ? std::array<Dart, 4>{a.in, a.out, b.in, b.out}
                                               : std::array<Dart, 4>{a.in, b.out, b.in, a.out};
    }
    if (!rotation_alternates(e.rotation, g))
        throw InternalError("constructed rotation does not alternate the pairs");
    e.faces = trace_faces(e.rotation, g);
    const int euler = g.vertex_count - g.edge_count() + static_cast<int>(e.faces.size());
    if (euler != 2)
        throw InternalError("embedding is not plane: V - E + F = " + std::to_string(euler));
    return e;
}

// ---------------------------------------------------------------------------
// SVG rendering of the tour-circle diagram

namespace detail {

inline std::string fmt2(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", x);
    return buf;
}

}  // namespace detail

// Structural drawing: the tour as a circle with one chord per vertex.  When
// the interlacement graph is bipartite, one color class is drawn inside as a
// straight chord and the other outside as an arc, so the picture is a plane
// drawing; otherwise all chords are drawn inside in gray.  Output is
// byte-stable for a given graph.
inline std::string render_svg(const ClosedWalk& tour, const XGraph& g) {
    const int n = static_cast<int>(tour.steps.size());
    const auto pos = vertex_pass_positions(tour, g);
    const auto color = bipartition(interlacement_graph(tour, g));
    const double cx = 300, cy = 300, r = 220;
    const double pi = 3.14159265358979323846;

    const auto point = [&](int p, double radius) {
        const double th = 2 * pi * p / n - pi / 2;
        return std::pair<double, double>{cx + radius * std::cos(th), cy + radius * std::sin(th)};
    };
    using detail::fmt2;

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 600 600\">\n";
    svg += "<circle cx=\"300\" cy=\"300\" r=\"220\" fill=\"none\" stroke=\"#999\" stroke-width=\"1\"/>\n";
    for (int v = 0; v < g.vertex_count; ++v) {
        const auto [x1, y1] = point(pos[v][0], r);
        const auto [x2, y2] = point(pos[v][1], r);
        const char* stroke = color ? ((*color)[v] == 0 ? "#1f77b4" : "#d62728") : "#888888";
        if (color && (*color)[v] == 1) {
            // Outside chord: arc over the shorter way around, bulging outward.
            const double t1 = 2 * pi * pos[v][0] / n, t2 = 2 * pi * pos[v][1] / n;
            double d = t2 - t1;
            if (d > pi) d -= 2 * pi;
            if (d < -pi) d += 2 * pi;
            const double tm = t1 + d / 2 - pi / 2;
            const double qx = cx + 1.7 * r * std::cos(tm), qy = cy + 1.7 * r * std::sin(tm);
            svg += "<path d=\"M " + fmt2(x1) + " " + fmt2(y1) + " Q " + fmt2(qx) + " " + fmt2(qy) +
                   " " + fmt2(x2) + " " + fmt2(y2) + "\" fill=\"none\" stroke=\"" + stroke +
                   "\" stroke-width=\"2\"/>\n";
        } else {
            svg += "<line x1=\"" + fmt2(x1) + "\" y1=\"" + fmt2(y1) + "\" x2=\"" + fmt2(x2) +
                   "\" y2=\"" + fmt2(y2) + "\" stroke=\"" + std::string(stroke) +
                   "\" stroke-width=\"2\"/>\n";
        }
    }
    for (int p = 0; p < n; ++p) {
        const auto [x, y] = point(p, r);
        svg += "<circle cx=\"" + fmt2(x) + "\" cy=\"" + fmt2(y) +
               "\" r=\"3\" fill=\"#333333\"/>\n";
        const auto [tx, ty] = point(p, r + 16);
        svg += "<text x=\"" + fmt2(tx) + "\" y=\"" + fmt2(ty) +
               "\" font-size=\"11\" text-anchor=\"middle\" fill=\"#333333\">" +
               std::to_string(step_head(g, tour.steps[p])) + "</text>\n";
    }
    svg += "</svg>\n";
    return svg;
}

}  // namespace xplanar
