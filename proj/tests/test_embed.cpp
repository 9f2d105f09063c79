#include <catch2/catch_amalgamated.hpp>

#include <xplanar/embed.hpp>

#include "support.hpp"

using namespace xplanar;
using testsupport::chord_cycle_family;
using testsupport::load;

namespace {

std::array<Dart, 4> order4(std::initializer_list<Dart> ds) {
    std::array<Dart, 4> o{};
    std::copy(ds.begin(), ds.end(), o.begin());
    return o;
}

}  // namespace

TEST_CASE("embedding of fig8-pass") {
    const XGraph g = load("fig8-pass.xg");
    const PlaneEmbedding e = plane_embedding(turning_euler_tour(g), g);
    CHECK(e.chord_side == std::vector<int>{0});
    CHECK(e.rotation.order[0] ==
          order4({Dart{0, EdgeEnd::t}, Dart{1, EdgeEnd::t}, Dart{1, EdgeEnd::s}, Dart{0, EdgeEnd::s}}));
    REQUIRE(e.faces.size() == 3);
    CHECK(e.faces[0] == std::vector<Dart>{Dart{0, EdgeEnd::s}, Dart{1, EdgeEnd::t}});
    CHECK(e.faces[1] == std::vector<Dart>{Dart{0, EdgeEnd::t}});
    CHECK(e.faces[2] == std::vector<Dart>{Dart{1, EdgeEnd::s}});
}

TEST_CASE("embedding of the trefoil shadow") {
    const XGraph g = load("trefoil-shadow.xg");
    const PlaneEmbedding e = plane_embedding(turning_euler_tour(g), g);
    CHECK(e.chord_side == std::vector<int>{0, 1, 0});
    CHECK(e.rotation.order[0] ==
          order4({Dart{3, EdgeEnd::s}, Dart{5, EdgeEnd::t}, Dart{2, EdgeEnd::t}, Dart{0, EdgeEnd::s}}));
    CHECK(e.rotation.order[1] ==
          order4({Dart{0, EdgeEnd::t}, Dart{4, EdgeEnd::s}, Dart{1, EdgeEnd::s}, Dart{3, EdgeEnd::t}}));
    CHECK(e.rotation.order[2] ==
          order4({Dart{5, EdgeEnd::s}, Dart{1, EdgeEnd::t}, Dart{4, EdgeEnd::t}, Dart{2, EdgeEnd::s}}));
    REQUIRE(e.faces.size() == 5);
    CHECK(e.faces[0] ==
          std::vector<Dart>{Dart{0, EdgeEnd::s}, Dart{4, EdgeEnd::s}, Dart{2, EdgeEnd::s}});
    CHECK(e.faces[1] == std::vector<Dart>{Dart{0, EdgeEnd::t}, Dart{3, EdgeEnd::s}});
    CHECK(e.faces[2] == std::vector<Dart>{Dart{1, EdgeEnd::s}, Dart{4, EdgeEnd::t}});
    CHECK(e.faces[3] ==
          std::vector<Dart>{Dart{1, EdgeEnd::t}, Dart{3, EdgeEnd::t}, Dart{5, EdgeEnd::t}});
    CHECK(e.faces[4] == std::vector<Dart>{Dart{2, EdgeEnd::t}, Dart{5, EdgeEnd::s}});
}

TEST_CASE("embedding of simple realizable curves") {
    SECTION("two separate kinks") {
        const XGraph g = from_gauss_code("a a b b");
        const PlaneEmbedding e = plane_embedding(turning_euler_tour(g), g);
        CHECK(g.vertex_count - g.edge_count() + static_cast<int>(e.faces.size()) == 2);
    }
    SECTION("nested kinks") {
        const XGraph g = from_gauss_code("a b b a");
        const PlaneEmbedding e = plane_embedding(turning_euler_tour(g), g);
        CHECK(g.vertex_count - g.edge_count() + static_cast<int>(e.faces.size()) == 2);
    }
}

TEST_CASE("embedding rejects unsuitable tours") {
    SECTION("self-crossing tour") {
        const XGraph g = load("fig8-loop.xg");
        CHECK_THROWS_AS(plane_embedding(turning_euler_tour(g), g), std::invalid_argument);
    }
    SECTION("odd interlacement") {
        const XGraph g = load("trefoil-straight.xg");
        CHECK_THROWS_AS(plane_embedding(turning_euler_tour(g), g), std::invalid_argument);
    }
    SECTION("interlaced two-letter word") {
        // "a b a b" cannot close up in the plane: an odd number of symbols
        // separates the two a's.  The greedy tour exposes this by crossing
        // itself at b, and the split is a valid certificate.
        const XGraph g = from_gauss_code("a b a b");
        const ClosedWalk tour = turning_euler_tour(g);
        CHECK_THROWS_AS(plane_embedding(tour, g), std::invalid_argument);
        REQUIRE(self_crossing_vertices(tour, g) == std::vector<int>{1});
        const auto [w1, w2] = split_at_self_crossing(tour, 1, g);
        CHECK(verify_forbidden_pair(w1, w2, g).valid);
        CHECK(crossing_vertices(w1, w2, g) == std::vector<int>{1});
    }
    SECTION("not a tour") {
        const XGraph g = load("trefoil-shadow.xg");
        ClosedWalk w;
        w.steps = {OrientedEdge{0, true}, OrientedEdge{3, false}};
        CHECK_THROWS_AS(plane_embedding(w, g), std::invalid_argument);
    }
}

TEST_CASE("face orbits partition the darts for any rotation") {
    // Both pair-alternating rotations of fig8-loop leave one face: a torus
    // drawing (V - E + F = 0), never a plane one.
    const XGraph g = load("fig8-loop.xg");
    const std::array<Dart, 4> r1 =
        order4({Dart{0, EdgeEnd::s}, Dart{1, EdgeEnd::s}, Dart{0, EdgeEnd::t}, Dart{1, EdgeEnd::t}});
    const std::array<Dart, 4> r2 =
        order4({Dart{0, EdgeEnd::s}, Dart{1, EdgeEnd::t}, Dart{0, EdgeEnd::t}, Dart{1, EdgeEnd::s}});
    for (const auto& o : {r1, r2}) {
        RotationSystem rot;
        rot.order = {o};
        CHECK(rotation_alternates(rot, g));
        const auto faces = trace_faces(rot, g);
        CHECK(faces.size() == 1);
        CHECK(faces[0].size() == 4);
    }
}

TEST_CASE("face count parity matches E - V on connected graphs") {
    for (int k = 1; k <= 3; ++k) {
        const XGraph g = chord_cycle_family(k);
        const ClosedWalk tour = turning_euler_tour(g);
        const std::vector<Pass> ps = passes(tour, g);
        const auto pos = vertex_pass_positions(tour, g);
        // Any inside/outside assignment alternates; only proper 2-colorings
        // of the interlacement graph reach F = E - V + 2.
        for (int bits = 0; bits < (1 << g.vertex_count); ++bits) {
            RotationSystem rot;
            rot.order.resize(g.vertex_count);
            for (int v = 0; v < g.vertex_count; ++v) {
                const Pass& a = ps[pos[v][0]];
                const Pass& b = ps[pos[v][1]];
                rot.order[v] = (bits >> v) & 1 ? std::array<Dart, 4>{a.in, b.out, b.in, a.out}
                                               : std::array<Dart, 4>{a.in, a.out, b.in, b.out};
            }
            REQUIRE(rotation_alternates(rot, g));
            const int f = static_cast<int>(trace_faces(rot, g).size());
            const int excess = g.edge_count() - g.vertex_count;
            CHECK((f - excess) % 2 == 0);
            CHECK(f <= excess + 2);
        }
    }
}

TEST_CASE("rotation_alternates detects grouped pairs") {
    const XGraph g = load("fig8-pass.xg");
    RotationSystem rot;
    rot.order = {order4(
        {Dart{0, EdgeEnd::s}, Dart{1, EdgeEnd::t}, Dart{0, EdgeEnd::t}, Dart{1, EdgeEnd::s}})};
    // (0,s) and (1,t) share a pair here, so they may not be adjacent.
    CHECK_FALSE(rotation_alternates(rot, g));
}

TEST_CASE("svg rendering is structural and stable") {
    const XGraph g = load("trefoil-shadow.xg");
    const ClosedWalk tour = turning_euler_tour(g);
    const std::string svg = render_svg(tour, g);
    CHECK(svg == render_svg(tour, g));
    CHECK(svg.find("<svg") == 0);
    CHECK(std::count(svg.begin(), svg.end(), '\n') > 10);

    const auto count = [](const std::string& hay, const std::string& needle) {
        std::size_t n = 0;
        for (std::size_t p = hay.find(needle); p != std::string::npos; p = hay.find(needle, p + 1))
            ++n;
        return n;
    };
    CHECK(count(svg, "<line") == 2);   // inside chords: vertices 0 and 2
    CHECK(count(svg, "<path") == 1);   // outside chord: vertex 1
    CHECK(count(svg, "<text") == 6);   // one label per pass
    CHECK(count(svg, "<circle") == 7); // tour circle plus 6 pass dots

    const XGraph odd = load("trefoil-straight.xg");
    const std::string gray = render_svg(turning_euler_tour(odd), odd);
    CHECK(count(gray, "<line") == 3);  // no 2-coloring: all chords drawn flat
    CHECK(gray.find("#888888") != std::string::npos);
    CHECK(gray.find("<path") == std::string::npos);
}
