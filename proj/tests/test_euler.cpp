#include <catch2/catch_amalgamated.hpp>

#include <xplanar/euler.hpp>

#include <fstream>
#include <sstream>

using namespace xplanar;

namespace {

XGraph load(const std::string& name) {
    std::ifstream in(std::string(XPLANAR_DATA_DIR) + "/" + name);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_xgraph(ss.str());
}

ClosedWalk walk(std::initializer_list<int> signed_edges) {
    ClosedWalk w;
    for (int se : signed_edges) w.steps.push_back(OrientedEdge{std::abs(se), se >= 0});
    return w;
}

}  // namespace

TEST_CASE("tour of fig8-loop") {
    const XGraph g = load("fig8-loop.xg");
    const ClosedWalk t = turning_euler_tour(g);
    CHECK(t.steps == walk({+0, +1}).steps);
    CHECK(is_turning_euler_tour(t, g));
    CHECK(self_crossing_vertices(t, g) == std::vector<int>{0});
}

TEST_CASE("tour of fig8-pass") {
    const XGraph g = load("fig8-pass.xg");
    const ClosedWalk t = turning_euler_tour(g);
    CHECK(t.steps == walk({+0, -1}).steps);
    CHECK(is_turning_euler_tour(t, g));
    CHECK(self_crossing_vertices(t, g).empty());
}

TEST_CASE("tour of trefoil-shadow") {
    const XGraph g = load("trefoil-shadow.xg");
    const ClosedWalk t = turning_euler_tour(g);
    CHECK(t.steps == walk({+0, -3, -5, -1, +4, +2}).steps);
    CHECK(is_turning_euler_tour(t, g));
    CHECK(self_crossing_vertices(t, g).empty());
}

TEST_CASE("tour of trefoil-x uses a spliced excursion") {
    const XGraph g = load("trefoil-x.xg");
    const ClosedWalk t = turning_euler_tour(g);
    CHECK(t.steps == walk({+0, +4, -1, -3, -5, +2}).steps);
    CHECK(is_turning_euler_tour(t, g));
    CHECK(self_crossing_vertices(t, g) == std::vector<int>{2});
}

TEST_CASE("tour of trefoil-straight") {
    const XGraph g = load("trefoil-straight.xg");
    const ClosedWalk t = turning_euler_tour(g);
    CHECK(t.steps == walk({+0, +1, +2, +3, +4, +5}).steps);
    CHECK(self_crossing_vertices(t, g).empty());
}

TEST_CASE("tour construction is deterministic") {
    const XGraph g = load("trefoil-x.xg");
    CHECK(turning_euler_tour(g).steps == turning_euler_tour(g).steps);
}

TEST_CASE("tour requires a connected graph") {
    const XGraph g = parse_xgraph(
        "xgraph 2 4\n"
        "e 0 0 0\n"
        "e 1 0 0\n"
        "e 2 1 1\n"
        "e 3 1 1\n"
        "p 0 0.s 1.t | 0.t 1.s\n"
        "p 1 2.s 3.t | 2.t 3.s\n");
    CHECK_THROWS_AS(turning_euler_tour(g), std::invalid_argument);
}

TEST_CASE("tour rejects invalid graphs") {
    XGraph g;
    g.vertex_count = 1;
    g.edges = {Edge{0, 0}};
    g.pairing.resize(1);
    g.pairing[0].pair[0] = {Dart{0, EdgeEnd::s}};
    g.pairing[0].pair[1] = {Dart{0, EdgeEnd::t}};
    CHECK_THROWS_AS(turning_euler_tour(g), std::invalid_argument);
}

TEST_CASE("is_turning_euler_tour rejects non-tours") {
    const XGraph g = load("trefoil-shadow.xg");
    CHECK_FALSE(is_turning_euler_tour(walk({+0, -3}), g));  // not Euler
    const XGraph pass = load("fig8-pass.xg");
    CHECK_FALSE(is_turning_euler_tour(walk({+0, +1}), pass));  // straight pass at v0
    CHECK(is_turning_euler_tour(walk({+0, -1}), pass));
}

TEST_CASE("pass positions") {
    const XGraph g = load("trefoil-straight.xg");
    const ClosedWalk t = turning_euler_tour(g);
    const auto pos = vertex_pass_positions(t, g);
    CHECK(pos[0] == std::array<int, 2>{2, 5});
    CHECK(pos[1] == std::array<int, 2>{0, 3});
    CHECK(pos[2] == std::array<int, 2>{1, 4});
    CHECK_THROWS_AS(vertex_pass_positions(walk({+0, -3}), g), std::invalid_argument);
}

TEST_CASE("split at a self-crossing certifies non-planarity") {
    SECTION("fig8-loop") {
        const XGraph g = load("fig8-loop.xg");
        const auto [w1, w2] = split_at_self_crossing(turning_euler_tour(g), 0, g);
        CHECK(w1.steps == walk({+1}).steps);
        CHECK(w2.steps == walk({+0}).steps);
        const auto r = verify_forbidden_pair(w1, w2, g);
        CHECK(r.valid);
        CHECK(r.crossing == std::vector<int>{0});
    }
    SECTION("trefoil-x") {
        const XGraph g = load("trefoil-x.xg");
        const auto [w1, w2] = split_at_self_crossing(turning_euler_tour(g), 2, g);
        CHECK(w1.steps == walk({-1, -3, -5}).steps);
        CHECK(w2.steps == walk({+2, +0, +4}).steps);
        const auto r = verify_forbidden_pair(w1, w2, g);
        CHECK(r.valid);
        CHECK(r.crossing == std::vector<int>{2});
    }
    SECTION("rejects a touching vertex") {
        const XGraph g = load("trefoil-x.xg");
        CHECK_THROWS_AS(split_at_self_crossing(turning_euler_tour(g), 0, g), std::invalid_argument);
    }
}

TEST_CASE("split walks partition the tour") {
    const XGraph g = load("trefoil-x.xg");
    const ClosedWalk t = turning_euler_tour(g);
    const auto [w1, w2] = split_at_self_crossing(t, 2, g);
    CHECK(w1.steps.size() + w2.steps.size() == t.steps.size());
    CHECK_FALSE(walk_violation(w1, g).has_value());
    CHECK_FALSE(walk_violation(w2, g).has_value());
}
