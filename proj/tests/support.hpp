#pragma once

// Shared helpers for the test binaries.

#include <xplanar/core.hpp>

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace testsupport {

inline std::string read_data_file(const std::string& name) {
    std::ifstream in(std::string(XPLANAR_DATA_DIR) + "/" + name);
    if (!in.good()) throw std::runtime_error("cannot open data file " + name);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline xplanar::XGraph load(const std::string& name) {
    return xplanar::parse_xgraph(read_data_file(name));
}

inline xplanar::ClosedWalk walk(std::initializer_list<int> signed_edges) {
    xplanar::ClosedWalk w;
    for (int se : signed_edges) w.steps.push_back(xplanar::OrientedEdge{std::abs(se), se >= 0});
    return w;
}

// Re-pair every vertex so its two arrival darts form one pair and its two
// departure darts the other.  Only meaningful for graphs built from a closed
// curve (Gauss codes), where each vertex has exactly two of each.
inline xplanar::XGraph with_straight_pairings(xplanar::XGraph g) {
    using namespace xplanar;
    const auto inc = incident_darts(g);
    for (int v = 0; v < g.vertex_count; ++v) {
        VertexPairing vp;
        for (Dart d : inc[v]) vp.pair[d.end == EdgeEnd::t ? 0 : 1].push_back(d);
        if (vp.pair[0].size() != 2 || vp.pair[1].size() != 2)
            throw std::runtime_error("vertex without two arrivals and two departures");
        g.pairing[v] = vp;
    }
    return g;
}

// Closed curve whose interlacement graph (under straight pairings) is the
// cycle of length 2k+1: chord i occupies word positions 2i-1 and 2i+2.
inline xplanar::XGraph chord_cycle_family(int k) {
    const int n = 4 * k + 2;
    std::vector<std::string> word(n);
    for (int i = 1; i <= 2 * k + 1; ++i) {
        word[(2 * i - 1) % n] = std::to_string(i);
        word[(2 * i + 2) % n] = std::to_string(i);
    }
    return with_straight_pairings(xplanar::from_gauss_code(word));
}

}  // namespace testsupport
