#pragma once

// Interlacement analysis of a turning Euler tour, and construction of a
// non-planarity witness from an odd interlacement cycle.
//
// Along the tour every vertex is passed exactly twice, so it spans a chord
// between its two pass positions on the tour circle.  Two vertices are
// interlaced when their chords cross, i.e. exactly one pass of the second
// lies between the two passes of the first.  For a turning tour that never
// crosses itself, the graph is X-planar exactly when this interlacement
// graph is bipartite.
//
// An odd interlacement cycle of length 2k+1 is turned into a witness pair:
// its 4k+2 chord endpoints cut the tour into 4k+2 segments, and two disjoint
// segment subsets reassemble into closed walks that cross at exactly one
// vertex.  The subsets come from a closed-form index pattern; a bounded
// exhaustive search stands behind it, and every witness is re-checked before
// it is returned.

#include "core.hpp"
#include "euler.hpp"

#include <utility>

namespace xplanar {

// Adjacency lists of the interlacement graph, indexed by graph vertex.
// Requires an Euler tour of a 4-regular graph (two passes per vertex).
inline std::vector<std::vector<int>> interlacement_graph(const ClosedWalk& tour, const XGraph& g) {
    const auto pos = vertex_pass_positions(tour, g);
    std::vector<std::vector<int>> adj(g.vertex_count);
    for (int u = 0; u < g.vertex_count; ++u)
        for (int v = u + 1; v < g.vertex_count; ++v) {
            const bool in1 = pos[u][0] < pos[v][0] && pos[v][0] < pos[u][1];
            const bool in2 = pos[u][0] < pos[v][1] && pos[v][1] < pos[u][1];
            if (in1 != in2) {
                adj[u].push_back(v);
                adj[v].push_back(u);
            }
        }
    return adj;
}

// Shortest odd cycle, as a vertex list [c0, ..., c_{2k}] with consecutive
// entries (and last-first) adjacent; nullopt when the graph is bipartite.
// Deterministic: among shortest cycles the one found from the smallest BFS
// root, smallest level-edge endpoints; normalized to start at its smallest
// vertex, heading toward the smaller neighbor.
inline std::optional<std::vector<int>> shortest_odd_cycle(const std::vector<std::vector<int>>& adj) {
    const int n = static_cast<int>(adj.size());
    int best_len = -1, best_root = -1, best_x = -1, best_y = -1;
    std::vector<int> dist(n), parent(n);

    for (int root = 0; root < n; ++root) {
        if (best_len == 3) break;  // nothing beats a triangle
        // Vertices at depth d close cycles of length 2d+1; deeper levels
        // cannot improve on the best found so far.
        const int depth_cap = best_len < 0 ? n : (best_len - 3) / 2;
        if (depth_cap < 1) continue;
        std::fill(dist.begin(), dist.end(), -1);
        std::vector<int> queue{root};
        dist[root] = 0;
        parent[root] = -1;
        int cand_x = -1, cand_y = -1, cand_len = -1;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const int x = queue[head];
            if (cand_len != -1 && 2 * dist[x] + 1 > cand_len) break;
            for (int y : adj[x]) {
                if (dist[y] == -1) {
                    if (dist[x] < depth_cap) {
                        dist[y] = dist[x] + 1;
                        parent[y] = x;
                        queue.push_back(y);
                    }
                    continue;
                }
                if (dist[y] != dist[x]) continue;
                const int len = 2 * dist[x] + 1;
                const int lo = std::min(x, y), hi = std::max(x, y);
                if (cand_len == -1 || len < cand_len ||
                    (len == cand_len && std::pair(lo, hi) < std::pair(cand_x, cand_y))) {
                    cand_len = len;
                    cand_x = lo;
                    cand_y = hi;
                }
            }
        }
        if (cand_len != -1 && (best_len == -1 || cand_len < best_len)) {
            best_len = cand_len;
            best_root = root;
            best_x = cand_x;
            best_y = cand_y;
        }
    }
    if (best_len == -1) return std::nullopt;

    // Rebuild the winning BFS tree and read off the two root paths.
    std::fill(dist.begin(), dist.end(), -1);
    std::vector<int> queue{best_root};
    dist[best_root] = 0;
    parent[best_root] = -1;
    for (std::size_t head = 0; head < queue.size(); ++head)
        for (int y : adj[queue[head]])
            if (dist[y] == -1) {
                dist[y] = dist[queue[head]] + 1;
                parent[y] = queue[head];
                queue.push_back(y);
            }
    std::vector<int> cycle;
    for (int v = best_x; v != -1; v = parent[v]) cycle.push_back(v);
    std::reverse(cycle.begin(), cycle.end());  // root .. best_x
    std::vector<int> back;
    for (int v = best_y; v != best_root; v = parent[v]) back.push_back(v);
    cycle.insert(cycle.end(), back.begin(), back.end());  // .. best_y .. root-child

    if (static_cast<int>(cycle.size()) != best_len)
        throw InternalError("odd cycle reconstruction has the wrong length");
    {
        std::vector<int> sorted = cycle;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw InternalError("odd cycle reconstruction repeats a vertex");
    }

    const auto min_it = std::min_element(cycle.begin(), cycle.end());
    std::rotate(cycle.begin(), min_it, cycle.end());
    if (cycle.back() < cycle[1]) std::reverse(cycle.begin() + 1, cycle.end());
    return cycle;
}

// Proper 2-coloring, or nullopt when some component has an odd cycle.
// Deterministic: BFS from the smallest uncolored vertex, which gets color 0.
inline std::optional<std::vector<int>> bipartition(const std::vector<std::vector<int>>& adj) {
    const int n = static_cast<int>(adj.size());
    std::vector<int> color(n, -1);
    for (int root = 0; root < n; ++root) {
        if (color[root] != -1) continue;
        color[root] = 0;
        std::vector<int> queue{root};
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const int x = queue[head];
            for (int y : adj[x]) {
                if (color[y] == -1) {
                    color[y] = 1 - color[x];
                    queue.push_back(y);
                } else if (color[y] == color[x]) {
                    return std::nullopt;
                }
            }
        }
    }
    return color;
}

// ---------------------------------------------------------------------------
// Segment space: the tour cut at the chord endpoints of one odd cycle.

// Points are the 4k+2 chord endpoints in circular order (after an optional
// rotation).  Segment s runs from point s to point s+1: tour steps
// point_pos[s]+1 .. point_pos[s+1], cyclically.
struct SegmentSpace {
    int tour_length = 0;
    std::vector<int> point_pos;      // point -> tour pass position
    std::vector<int> point_vertex;   // point -> graph vertex (chord owner)
    std::vector<int> point_partner;  // point -> the chord's other point

    int size() const { return static_cast<int>(point_pos.size()); }
};

inline SegmentSpace make_segment_space(const ClosedWalk& tour, const XGraph& g,
                                       const std::vector<int>& cycle, int rotation) {
    const auto pos = vertex_pass_positions(tour, g);
    std::vector<int> pts;
    for (int v : cycle) {
        pts.push_back(pos[v][0]);
        pts.push_back(pos[v][1]);
    }
    std::sort(pts.begin(), pts.end());
    const int m2 = static_cast<int>(pts.size());

    SegmentSpace s;
    s.tour_length = static_cast<int>(tour.steps.size());
    s.point_pos.resize(m2);
    s.point_vertex.resize(m2);
    for (int i = 0; i < m2; ++i) {
        s.point_pos[i] = pts[(i + rotation) % m2];
        s.point_vertex[i] = step_head(g, tour.steps[s.point_pos[i]]);
    }
    s.point_partner.assign(m2, -1);
    for (int i = 0; i < m2; ++i)
        for (int j = i + 1; j < m2; ++j)
            if (s.point_vertex[i] == s.point_vertex[j]) {
                if (s.point_partner[i] != -1)
                    throw std::invalid_argument("cycle vertices are not distinct");
                s.point_partner[i] = j;
                s.point_partner[j] = i;
            }
    for (int i = 0; i < m2; ++i)
        if (s.point_partner[i] == -1) throw InternalError("unmatched chord endpoint");
    return s;
}

// Rotation r such that after shifting the points by r, chord i connects
// points 2i-1 and 2i+2 (0-based; the pattern every witness formula below
// assumes).  nullopt when the chord diagram never aligns.
inline std::optional<int> find_chord_alignment(const SegmentSpace& s) {
    const int m2 = s.size();
    for (int r = 0; r < m2; ++r) {
        bool ok = true;
        for (int o = 1; o < m2 && ok; o += 2)
            ok = s.point_vertex[(o + r) % m2] == s.point_vertex[(o + 3 + r) % m2];
        if (ok) return r;
    }
    return std::nullopt;
}

// Segment subsets whose reassembled walks cross at exactly one vertex, for an
// aligned odd cycle of length 2k+1 (segments 0-based, 4k+2 of them).
inline std::pair<std::vector<int>, std::vector<int>> witness_segment_sets(int k) {
    const int l = (k + 1) / 2;
    std::vector<int> c1, c2;
    for (int j = 0; j <= 4 * l - 4; j += 4) c1.push_back(j);
    c1.push_back(4 * l - 1);
    for (int j = 4 * l + 2; j <= 4 * k - 2; j += 4) c1.push_back(j);
    for (int j = 2; j <= 4 * (k - l) - 2; j += 4) c2.push_back(j);
    c2.push_back(4 * (k - l) + 1);
    for (int j = 4 * (k - l) + 4; j <= 4 * k; j += 4) c2.push_back(j);
    std::sort(c1.begin(), c1.end());
    std::sort(c2.begin(), c2.end());
    return {std::move(c1), std::move(c2)};
}

// One oriented piece of a reassembled walk.
struct SegmentUse {
    int segment = 0;
    bool forward = true;
};

// Chain the given segments into one closed walk: start at the smallest index,
// and after each segment jump the current chord to resume at its other
// endpoint.  Orientation is forced by whether the next segment starts or
// ends there.  Returns nullopt if the set does not close up into a single
// cycle (tries the reversed start before giving up).
inline std::optional<std::vector<SegmentUse>> assemble_segments(const SegmentSpace& s,
                                                                const std::vector<int>& set) {
    if (set.empty()) return std::nullopt;
    const int m2 = s.size();
    for (const bool start_forward : {true, false}) {
        std::vector<SegmentUse> seq;
        std::vector<char> used(m2, 0);
        const int start = set.front();
        const int entry = start_forward ? start : (start + 1) % m2;
        SegmentUse cur{start, start_forward};
        bool ok = true;
        for (std::size_t i = 0; i < set.size(); ++i) {
            seq.push_back(cur);
            used[cur.segment] = 1;
            const int exit_pt = cur.forward ? (cur.segment + 1) % m2 : cur.segment;
            const int jump = s.point_partner[exit_pt];
            if (i + 1 == set.size()) {
                ok = jump == entry;
                break;
            }
            const int fwd = jump, rev = (jump + m2 - 1) % m2;
            if (!used[fwd] && std::binary_search(set.begin(), set.end(), fwd))
                cur = SegmentUse{fwd, true};
            else if (!used[rev] && std::binary_search(set.begin(), set.end(), rev))
                cur = SegmentUse{rev, false};
            else {
                ok = false;
                break;
            }
        }
        if (ok) return seq;
    }
    return std::nullopt;
}

inline ClosedWalk segments_to_walk(const ClosedWalk& tour, const SegmentSpace& s,
                                   const std::vector<SegmentUse>& seq) {
    const int n = s.tour_length, m2 = s.size();
    ClosedWalk w;
    for (const SegmentUse& u : seq) {
        const int from = s.point_pos[u.segment];
        const int to = s.point_pos[(u.segment + 1) % m2];
        const int len = (to - from + n) % n;
        if (u.forward)
            for (int t = 1; t <= len; ++t) w.steps.push_back(tour.steps[(from + t) % n]);
        else
            for (int t = len; t >= 1; --t) w.steps.push_back(reversed(tour.steps[(from + t) % n]));
    }
    return w;
}

// ---------------------------------------------------------------------------
// Witness construction

struct OddCycleWitness {
    ClosedWalk walk1, walk2;
    int crossing_vertex = -1;
    bool used_fallback = false;
};

// Bounded exhaustive search over reassembled segment walks: enumerate closed
// walks (canonical form: smallest segment first, forward), then try disjoint
// pairs.  Every returned witness passed verify_forbidden_pair.
inline std::optional<OddCycleWitness> exhaustive_witness_search(const XGraph& g,
                                                                const ClosedWalk& tour,
                                                                const SegmentSpace& s) {
    const int m2 = s.size();
    constexpr int max_walks = 20000;
    constexpr long max_nodes = 1000000;

    std::vector<std::vector<SegmentUse>> walks;
    long nodes = 0;
    std::vector<SegmentUse> seq;
    std::vector<char> used(m2, 0);

    // Depth-first over (segment, orientation) chains.  From the exit point q
    // the walk can jump the chord (partner point, either adjacent segment) or
    // continue straight along the tour.
    auto extend = [&](auto&& self, int start, int entry) -> void {
        if (++nodes > max_nodes || static_cast<int>(walks.size()) >= max_walks) return;
        const SegmentUse cur = seq.back();
        const int exit_pt = cur.forward ? (cur.segment + 1) % m2 : cur.segment;
        const int jump = s.point_partner[exit_pt];
        if (jump == entry || exit_pt == entry) walks.push_back(seq);
        const int next[3] = {jump, (jump + m2 - 1) % m2,
                             cur.forward ? exit_pt : (exit_pt + m2 - 1) % m2};
        const bool fwd[3] = {true, false, cur.forward};
        for (int i = 0; i < 3; ++i) {
            if (next[i] <= start || used[next[i]]) continue;
            if (i == 1 && next[1] == next[0]) continue;  // loop chord: same move twice
            if (i == 2 && (next[2] == next[0] || next[2] == next[1])) continue;
            used[next[i]] = 1;
            seq.push_back(SegmentUse{next[i], fwd[i]});
            self(self, start, entry);
            seq.pop_back();
            used[next[i]] = 0;
        }
    };
    for (int start = 0; start < m2; ++start) {
        used[start] = 1;
        seq.assign(1, SegmentUse{start, true});
        extend(extend, start, start);
        used[start] = 0;
    }

    std::vector<std::vector<char>> masks;
    masks.reserve(walks.size());
    for (const auto& w : walks) {
        std::vector<char> m(m2, 0);
        for (const SegmentUse& u : w) m[u.segment] = 1;
        masks.push_back(std::move(m));
    }
    for (std::size_t i = 0; i < walks.size(); ++i)
        for (std::size_t j = i + 1; j < walks.size(); ++j) {
            bool disjoint = true;
            for (int t = 0; t < m2 && disjoint; ++t) disjoint = !(masks[i][t] && masks[j][t]);
            if (!disjoint) continue;
            const ClosedWalk w1 = segments_to_walk(tour, s, walks[i]);
            const ClosedWalk w2 = segments_to_walk(tour, s, walks[j]);
            const CertificateReport r = verify_forbidden_pair(w1, w2, g);
            if (r.valid)
                return OddCycleWitness{w1, w2, r.crossing.front(), true};
        }
    return std::nullopt;
}

// Turn an odd interlacement cycle into a checked witness pair.  Requires a
// turning Euler tour with no self-crossings and an odd cycle of the tour's
// interlacement graph.  The closed-form segment subsets are tried first; any
// failure falls back to the exhaustive search.
inline OddCycleWitness witness_from_odd_cycle(const XGraph& g, const ClosedWalk& tour,
                                              const std::vector<int>& cycle) {
    if (cycle.size() < 3 || cycle.size() % 2 == 0)
        throw std::invalid_argument("witness needs an odd cycle of length at least 3");
    if (!self_crossing_vertices(tour, g).empty())
        throw std::invalid_argument("tour crosses itself; split there instead");
    const int k = static_cast<int>(cycle.size() / 2);

    const SegmentSpace base = make_segment_space(tour, g, cycle, 0);
    if (const std::optional<int> r = find_chord_alignment(base)) {
        const SegmentSpace s = make_segment_space(tour, g, cycle, *r);
        const auto [set1, set2] = witness_segment_sets(k);
        const auto seq1 = assemble_segments(s, set1);
        const auto seq2 = assemble_segments(s, set2);
        if (seq1 && seq2) {
            const ClosedWalk w1 = segments_to_walk(tour, s, *seq1);
            const ClosedWalk w2 = segments_to_walk(tour, s, *seq2);
            const CertificateReport rep = verify_forbidden_pair(w1, w2, g);
            if (rep.valid) return OddCycleWitness{w1, w2, rep.crossing.front(), false};
        }
    }
    if (const auto w = exhaustive_witness_search(g, tour, base)) return *w;
    throw InternalError("odd interlacement cycle yielded no witness pair");
}

}  // namespace xplanar
