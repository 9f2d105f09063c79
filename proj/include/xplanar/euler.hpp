#pragma once

// Turning Euler tours.  A tour is turning when every pass through a vertex
// switches pairs (arrives on a dart of one pair, leaves on a dart of the
// other).  Every connected X-graph has one, and the greedy construction
// below is deterministic.
//
// A turning tour visits each vertex twice.  At a vertex the two arrival
// darts either form one of the two pairs (the tour touches itself there) or
// split across the pairs (the tour is forced to cross itself there).  A
// self-crossing splits the tour into two edge-disjoint closed walks whose
// only crossing vertex is that one, which is exactly a witness against
// X-planarity.

#include "core.hpp"

namespace xplanar {

inline bool pass_turns(const XGraph& g, const Pass& p) {
    return pair_label(g, p.vertex, p.in) != pair_label(g, p.vertex, p.out);
}

inline bool is_turning_euler_tour(const ClosedWalk& w, const XGraph& g) {
    if (walk_violation(w, g)) return false;
    if (static_cast<int>(w.steps.size()) != g.edge_count()) return false;
    for (const Pass& p : passes(w, g))
        if (!pass_turns(g, p)) return false;
    return true;
}

namespace detail {

// Grow a trail from `first`, always departing by the smallest unused dart of
// the pair opposite the arrival dart.  Such a trail can only get stuck at
// the vertex it started from, closing with a turning pass.
inline std::vector<OrientedEdge> greedy_turning_trail(const XGraph& g,
                                                      const std::vector<std::vector<Dart>>& inc,
                                                      const std::vector<std::uint8_t>& label,
                                                      std::vector<char>& used_edge, Dart first) {
    std::vector<OrientedEdge> trail;
    const int start = dart_vertex(g, first);
    Dart dep = first;
    for (;;) {
        used_edge[dep.edge] = 1;
        const OrientedEdge oe{dep.edge, dep.end == EdgeEnd::s};
        trail.push_back(oe);
        const Dart arr = arrival_dart(oe);
        const int cur = dart_vertex(g, arr);
        bool found = false;
        for (Dart d : inc[cur])
            if (!used_edge[d.edge] && label[dart_key(d)] != label[dart_key(arr)]) {
                dep = d;
                found = true;
                break;
            }
        if (!found) {
            if (cur != start) throw InternalError("turning trail stuck away from its start");
            return trail;
        }
    }
}

}  // namespace detail

// Deterministic turning Euler tour of a connected X-graph: greedy trail from
// the smallest dart of vertex 0, then excursions spliced in at the first
// tour position with unused darts.
inline ClosedWalk turning_euler_tour(const XGraph& g) {
    {
        const auto report = validate(g);
        if (!report.empty()) throw std::invalid_argument("invalid graph: " + report.front());
    }
    if (g.vertex_count == 0) throw std::invalid_argument("graph is empty");
    if (components(g).size() != 1) throw std::invalid_argument("graph is not connected");

    const auto inc = incident_darts(g);
    const auto label = dart_pair_labels(g);
    std::vector<char> used(g.edges.size(), 0);

    std::vector<OrientedEdge> tour = detail::greedy_turning_trail(g, inc, label, used, inc[0][0]);
    while (std::find(used.begin(), used.end(), char(0)) != used.end()) {
        bool spliced = false;
        for (std::size_t p = 0; p < tour.size() && !spliced; ++p) {
            const Dart arr = arrival_dart(tour[p]);
            const int w = dart_vertex(g, arr);
            // Unused darts at a tour vertex come one per pair, so exactly one
            // of them starts a turning excursion after this arrival.
            for (Dart d : inc[w]) {
                if (used[d.edge] || label[dart_key(d)] == label[dart_key(arr)]) continue;
                const std::vector<OrientedEdge> exc =
                    detail::greedy_turning_trail(g, inc, label, used, d);
                tour.insert(tour.begin() + p + 1, exc.begin(), exc.end());
                spliced = true;
                break;
            }
        }
        if (!spliced) throw InternalError("unused edges but no splice point on the tour");
    }
    return ClosedWalk{std::move(tour)};
}

// Positions of each vertex's two passes, in tour order.  Pass k sits between
// step k and step k+1, as in passes().
inline std::vector<std::array<int, 2>> vertex_pass_positions(const ClosedWalk& tour,
                                                             const XGraph& g) {
    const std::vector<Pass> ps = passes(tour, g);
    std::vector<std::array<int, 2>> pos(g.vertex_count, {-1, -1});
    for (int i = 0; i < static_cast<int>(ps.size()); ++i) {
        auto& slot = pos[ps[i].vertex];
        if (slot[0] == -1)
            slot[0] = i;
        else if (slot[1] == -1)
            slot[1] = i;
        else
            throw std::invalid_argument("walk passes a vertex more than twice");
    }
    for (int v = 0; v < g.vertex_count; ++v)
        if (pos[v][1] == -1) throw std::invalid_argument("walk is not an Euler tour");
    return pos;
}

// Vertices where the tour's two arrival darts lie in different pairs.  The
// tour cannot touch itself there; any realization crosses.  Empty for an
// X-planar-compatible tour.  Requires a turning Euler tour.
inline std::vector<int> self_crossing_vertices(const ClosedWalk& tour, const XGraph& g) {
    if (!is_turning_euler_tour(tour, g))
        throw std::invalid_argument("walk is not a turning Euler tour");
    const std::vector<Pass> ps = passes(tour, g);
    const auto pos = vertex_pass_positions(tour, g);
    std::vector<int> out;
    for (int v = 0; v < g.vertex_count; ++v) {
        const Dart in1 = ps[pos[v][0]].in;
        const Dart in2 = ps[pos[v][1]].in;
        if (pair_label(g, v, in1) != pair_label(g, v, in2)) out.push_back(v);
    }
    return out;
}

// Split the tour at a self-crossing vertex into two closed walks that cross
// exactly there: the steps strictly between the two passes, and the rest.
inline std::pair<ClosedWalk, ClosedWalk> split_at_self_crossing(const ClosedWalk& tour, int v,
                                                                const XGraph& g) {
    const std::vector<int> sc = self_crossing_vertices(tour, g);
    if (std::find(sc.begin(), sc.end(), v) == sc.end())
        throw std::invalid_argument("tour does not cross itself at vertex " + std::to_string(v));
    const auto pos = vertex_pass_positions(tour, g);
    const int p1 = pos[v][0], p2 = pos[v][1];
    const int n = static_cast<int>(tour.steps.size());
    ClosedWalk w1, w2;
    for (int i = p1 + 1; i <= p2; ++i) w1.steps.push_back(tour.steps[i]);
    for (int i = p2 + 1; i < n; ++i) w2.steps.push_back(tour.steps[i]);
    for (int i = 0; i <= p1; ++i) w2.steps.push_back(tour.steps[i]);
    return {std::move(w1), std::move(w2)};
}

}  // namespace xplanar
