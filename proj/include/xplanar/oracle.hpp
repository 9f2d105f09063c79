#pragma once

// Brute-force reference deciders and instance generators, meant for
// differential testing.  Both oracles work straight from the definitions and
// share no machinery with the tour/interlacement pipeline:
//
//   oracle_rotations       tries every pair-alternating rotation system and
//                          accepts when the faces satisfy Euler's formula,
//   oracle_forbidden_pairs enumerates vertex-simple cycles and looks for an
//                          edge-disjoint pair crossing at exactly one vertex.
//
// A forbidden pair of closed walks can always be reduced to one of simple
// cycles: anchor each walk at the crossing vertex and erase loops.  Every
// common vertex of two edge-disjoint walks carries exactly one pass of each
// (four darts split two and two), so erasure preserves the pass at every
// surviving common vertex and the crossing set only keeps the anchor.

#include "embed.hpp"

#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <utility>

namespace xplanar {

namespace detail {

// The three ways to split four sorted darts into two pairs; `pick` chooses
// the partner of the smallest dart (0, 1, or 2 for the 2nd, 3rd, 4th dart).
inline VertexPairing pairing_choice(const std::vector<Dart>& darts, int pick) {
    VertexPairing p;
    p.pair[0] = {darts[0], darts[pick + 1]};
    for (int i = 1; i < 4; ++i)
        if (i != pick + 1) p.pair[1].push_back(darts[i]);
    return p;
}

}  // namespace detail

// Exhaustive search over pair-alternating rotation systems.  Returns the
// first one (vertex 0's choice most significant) whose faces satisfy
// V - E + F = 2 per connected component, or nullopt if none does, which by
// definition means the graph is not realizable in the plane.
inline std::optional<RotationSystem> oracle_rotations(const XGraph& g) {
    if (const auto report = validate(g); !report.empty())
        throw std::invalid_argument("invalid graph: " + report.front());
    if (g.vertex_count > 20)
        throw std::invalid_argument("rotation search supports at most 20 vertices");

    const auto inc = incident_darts(g);
    const int target = 2 * static_cast<int>(components(g).size());

    // At each vertex the cyclic order must alternate the two pairs, leaving
    // two genuinely different orders once the smallest dart is pinned first.
    std::vector<std::array<Dart, 4>> option0(g.vertex_count), option1(g.vertex_count);
    for (int v = 0; v < g.vertex_count; ++v) {
        const auto& d = inc[v];
        const int a = pair_label(g, v, d[0]);
        std::vector<Dart> same, other;
        for (int i = 1; i < 4; ++i)
            (pair_label(g, v, d[i]) == a ? same : other).push_back(d[i]);
        option0[v] = {d[0], other[0], same[0], other[1]};
        option1[v] = {d[0], other[1], same[0], other[0]};
    }

    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << g.vertex_count); ++mask) {
        RotationSystem rot;
        rot.order.resize(g.vertex_count);
        for (int v = 0; v < g.vertex_count; ++v)
            rot.order[v] =
                (mask >> (g.vertex_count - 1 - v)) & 1 ? option1[v] : option0[v];
        const int f = static_cast<int>(trace_faces(rot, g).size());
        if (g.vertex_count - g.edge_count() + f == target) return rot;
    }
    return std::nullopt;
}

// All vertex-simple cycles, each listed once: rooted at their smallest
// vertex, loops traversed forward, longer cycles in the direction whose
// first edge id is below its last.  Deterministic order.
inline std::vector<ClosedWalk> simple_cycles(const XGraph& g) {
    struct Arc {
        int edge, to;
        bool forward;
    };
    std::vector<std::vector<Arc>> adj(g.vertex_count);
    for (int e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edges[e];
        if (ed.tail == ed.head) continue;  // loops never extend a simple path
        adj[ed.tail].push_back({e, ed.head, true});
        adj[ed.head].push_back({e, ed.tail, false});
    }

    std::vector<ClosedWalk> out;
    std::vector<OrientedEdge> path;
    std::vector<char> visited(g.vertex_count, 0);
    long long budget = 1'000'000;

    const auto emit = [&](std::vector<OrientedEdge> steps) {
        if (--budget < 0) throw InternalError("cycle enumeration exceeded its limit");
        ClosedWalk w;
        w.steps = std::move(steps);
        out.push_back(std::move(w));
    };

    for (int root = 0; root < g.vertex_count; ++root) {
        for (int e = 0; e < g.edge_count(); ++e)
            if (g.edges[e].tail == root && g.edges[e].head == root)
                emit({OrientedEdge{e, true}});

        const auto extend = [&](auto&& self, int at) -> void {
            for (const Arc& arc : adj[at]) {
                if (arc.to == root) {
                    if (path.size() >= 1 && path.front().edge < arc.edge) {
                        auto steps = path;
                        steps.push_back(OrientedEdge{arc.edge, arc.forward});
                        emit(std::move(steps));
                    }
                    continue;
                }
                if (arc.to < root || visited[arc.to]) continue;
                visited[arc.to] = 1;
                path.push_back(OrientedEdge{arc.edge, arc.forward});
                self(self, arc.to);
                path.pop_back();
                visited[arc.to] = 0;
            }
        };
        visited[root] = 1;
        extend(extend, root);
        visited[root] = 0;
    }
    return out;
}

// Exhaustive search for an edge-disjoint pair of simple cycles with exactly
// one crossing vertex.  Finding one proves the graph unrealizable; finding
// none proves realizability because any offending pair of closed walks
// reduces to such a pair of simple cycles.
inline std::optional<std::pair<ClosedWalk, ClosedWalk>> oracle_forbidden_pairs(
    const XGraph& g) {
    if (const auto report = validate(g); !report.empty())
        throw std::invalid_argument("invalid graph: " + report.front());
    if (g.vertex_count > 12)
        throw std::invalid_argument("forbidden-pair search supports at most 12 vertices");

    const std::vector<ClosedWalk> cycles = simple_cycles(g);
    std::vector<std::uint32_t> mask(cycles.size(), 0);
    for (std::size_t i = 0; i < cycles.size(); ++i)
        for (const OrientedEdge& oe : cycles[i].steps) mask[i] |= std::uint32_t{1} << oe.edge;

    for (std::size_t i = 0; i < cycles.size(); ++i)
        for (std::size_t j = i + 1; j < cycles.size(); ++j) {
            if (mask[i] & mask[j]) continue;
            if (crossing_vertices(cycles[i], cycles[j], g).size() == 1)
                return std::make_pair(cycles[i], cycles[j]);
        }
    return std::nullopt;
}

// Every connected 4-regular multigraph on up to max_vertices labeled
// vertices, under each of the 3^V ways to pair the darts at the vertices.
// Edge lists are canonical (sorted, tail <= head); output is deterministic.
inline std::vector<XGraph> enumerate_small_xgraphs(int max_vertices) {
    if (max_vertices < 1 || max_vertices > 4)
        throw std::invalid_argument("enumeration supports 1 to 4 vertices");

    std::vector<XGraph> out;
    for (int n = 1; n <= max_vertices; ++n) {
        std::vector<Edge> edges;
        std::vector<int> deg(n, 0);

        const auto connected = [&]() {
            std::vector<std::vector<int>> adj(n);
            for (const Edge& e : edges) {
                adj[e.tail].push_back(e.head);
                adj[e.head].push_back(e.tail);
            }
            std::vector<char> seen(n, 0);
            std::vector<int> stack{0};
            seen[0] = 1;
            int found = 1;
            while (!stack.empty()) {
                const int v = stack.back();
                stack.pop_back();
                for (int w : adj[v])
                    if (!seen[w]) {
                        seen[w] = 1;
                        ++found;
                        stack.push_back(w);
                    }
            }
            return found == n;
        };

        const auto emit = [&]() {
            if (!connected()) return;
            XGraph base;
            base.vertex_count = n;
            base.edges = edges;
            base.pairing.resize(n);
            const auto inc = incident_darts(base);
            int combos = 1;
            for (int v = 0; v < n; ++v) combos *= 3;
            for (int code = 0; code < combos; ++code) {
                XGraph g = base;
                int rest = code;
                for (int v = n - 1; v >= 0; --v) {
                    g.pairing[v] = detail::pairing_choice(inc[v], rest % 3);
                    rest /= 3;
                }
                out.push_back(std::move(g));
            }
        };

        // Edge multisets in sorted order: always extend the smallest
        // unsaturated vertex, never below the previous head.
        const auto build = [&](auto&& self) -> void {
            int u = 0;
            while (u < n && deg[u] == 4) ++u;
            if (u == n) {
                emit();
                return;
            }
            const int floor_head = !edges.empty() && edges.back().tail == u
                                       ? edges.back().head
                                       : u;
            for (int v = std::max(u, floor_head); v < n; ++v) {
                const int cost = v == u ? 2 : 1;
                if ((v == u ? deg[u] : deg[v]) + cost > 4) continue;
                edges.push_back(Edge{u, v});
                deg[u] += v == u ? 2 : 1;
                if (v != u) deg[v] += 1;
                self(self);
                deg[u] -= v == u ? 2 : 1;
                if (v != u) deg[v] -= 1;
                edges.pop_back();
            }
        };
        build(build);
    }
    return out;
}

// A random doubled word of `letters` distinct symbols turned into a graph,
// transverse pairings by default; scramble_pairing redraws each vertex's
// pairing uniformly from the three choices.  Same seed, same graph; the
// result is always connected (it comes from one closed word).
inline XGraph random_xgraph(int letters, std::uint64_t seed, bool scramble_pairing) {
    if (letters < 1) throw std::invalid_argument("letters must be at least 1");

    std::mt19937_64 rng(seed);
    const auto bounded = [&rng](std::uint64_t k) -> std::uint64_t {
        const std::uint64_t rem =
            (std::numeric_limits<std::uint64_t>::max() % k + 1) % k;
        for (;;) {
            const std::uint64_t r = rng();
            if (rem == 0 || r < std::uint64_t{0} - rem) return r % k;
        }
    };

    std::vector<std::string> word;
    for (int i = 0; i < letters; ++i) {
        word.push_back(std::to_string(i));
        word.push_back(std::to_string(i));
    }
    for (std::size_t i = word.size() - 1; i > 0; --i)
        std::swap(word[i], word[static_cast<std::size_t>(bounded(i + 1))]);

    XGraph g = from_gauss_code(word);
    if (scramble_pairing) {
        const auto inc = incident_darts(g);
        for (int v = 0; v < g.vertex_count; ++v)
            g.pairing[v] = detail::pairing_choice(inc[v], static_cast<int>(bounded(3)));
    }
    return g;
}

}  // namespace xplanar
