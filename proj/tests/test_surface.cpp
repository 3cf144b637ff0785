#include <random>
#include <sstream>

#include "doctest.h"
#include "topocode/families.hpp"
#include "topocode/surface.hpp"

using namespace topocode;

namespace {

// Single vertex with one loop: the sphere when untwisted, the projective
// plane when twisted.
CellEmbedding loop_map(bool twist) {
    return trace_faces(EmbeddedGraph(1, {Edge{0, 0, twist}}, {{0, 1}}));
}

// Two vertices joined by one edge: a sphere map whose edge is not a loop.
CellEmbedding path_map() {
    return trace_faces(EmbeddedGraph(2, {Edge{0, 1, false}}, {{0}, {1}}));
}

// One vertex, two interleaved loops: the standard one-square torus map.
CellEmbedding one_vertex_torus() {
    return trace_faces(EmbeddedGraph(1, {Edge{0, 0, false}, Edge{0, 0, false}}, {{0, 2, 1, 3}}));
}

// d x d torus grid built directly from index arithmetic, independent of the
// family generators.
CellEmbedding handmade_torus_grid(int d) {
    const auto vertex = [d](int x, int y) {
        return static_cast<VertexId>(((x % d + d) % d) * d + ((y % d + d) % d));
    };
    std::vector<Edge> edges(2 * d * d);
    const auto east = [&](int x, int y) { return 2 * (x * d + y); };
    const auto north = [&](int x, int y) { return 2 * (x * d + y) + 1; };
    for (int x = 0; x < d; ++x) {
        for (int y = 0; y < d; ++y) {
            edges[east(x, y)] = Edge{vertex(x, y), vertex(x + 1, y), false};
            edges[north(x, y)] = Edge{vertex(x, y), vertex(x, y + 1), false};
        }
    }
    std::vector<std::vector<Dart>> rotations(d * d);
    for (int x = 0; x < d; ++x) {
        for (int y = 0; y < d; ++y) {
            rotations[vertex(x, y)] = {
                make_dart(east(x, y), 0),
                make_dart(north(x, y), 0),
                make_dart(east((x - 1 + d) % d, y), 1),
                make_dart(north(x, (y - 1 + d) % d), 1),
            };
        }
    }
    return trace_faces(EmbeddedGraph(d * d, std::move(edges), std::move(rotations)));
}

// Subdivide edge e with a new degree-2 vertex; chi must not change.
CellEmbedding subdivide_edge(const CellEmbedding& c, EdgeId e) {
    const EmbeddedGraph& g = c.graph();
    const Edge old = g.edge(e);
    const VertexId mid = g.vertex_count();
    std::vector<Edge> edges = g.edges();
    edges[e] = Edge{old.a, mid, old.twist};
    const EdgeId tail = static_cast<EdgeId>(edges.size());
    edges.push_back(Edge{mid, old.b, false});

    std::vector<std::vector<Dart>> rotations = g.rotations();
    for (auto& rot : rotations) {
        for (Dart& dart : rot) {
            if (dart == make_dart(e, 1)) {
                dart = make_dart(tail, 1);
            }
        }
    }
    rotations.push_back({make_dart(e, 1), make_dart(tail, 0)});
    return trace_faces(EmbeddedGraph(mid + 1, std::move(edges), std::move(rotations)));
}

}  // namespace

TEST_CASE("loop maps") {
    const CellEmbedding sphere = loop_map(false);
    CHECK(sphere.face_count() == 2);
    CHECK(sphere.euler_characteristic() == 2);
    CHECK(sphere.graph().is_orientable());
    CHECK(sphere.surface_info().genus() == 0);

    const CellEmbedding projective = loop_map(true);
    CHECK(projective.face_count() == 1);
    CHECK(projective.euler_characteristic() == 1);
    CHECK_FALSE(projective.graph().is_orientable());
    CHECK(projective.surface_info().genus() == 1);  // one crosscap
}

TEST_CASE("one-vertex torus") {
    const CellEmbedding torus = one_vertex_torus();
    CHECK(torus.face_count() == 1);
    CHECK(torus.euler_characteristic() == 0);
    CHECK(torus.graph().is_orientable());
    CHECK(torus.surface_info().genus() == 1);
}

TEST_CASE("3x3 torus grid traces to nine squares") {
    const CellEmbedding grid = handmade_torus_grid(3);
    CHECK(grid.graph().vertex_count() == 9);
    CHECK(grid.graph().edge_count() == 18);
    CHECK(grid.face_count() == 9);
    CHECK(grid.euler_characteristic() == 0);
    for (std::size_t f = 0; f < grid.face_count(); ++f) {
        CHECK(grid.face_degree(f) == 4);
    }
}

TEST_CASE("trace rejects disconnected graphs") {
    // Two vertices, each with its own loop.
    CHECK_THROWS_AS(trace_faces(EmbeddedGraph(2, {Edge{0, 0, false}, Edge{1, 1, false}},
                                              {{0, 1}, {2, 3}})),
                    std::domain_error);
}

TEST_CASE("embedded graph validation") {
    CHECK_THROWS_AS(EmbeddedGraph(1, {Edge{0, 1, false}}, {{0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(EmbeddedGraph(1, {Edge{0, 0, false}}, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(EmbeddedGraph(2, {Edge{0, 1, false}}, {{0, 1}, {}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(EmbeddedGraph(1, {Edge{0, 0, false}}, {{0}}), std::invalid_argument);
}

TEST_CASE("dual of the sphere loop map is the two-vertex path") {
    const CellEmbedding dual = dual_embedding(loop_map(false));
    CHECK(dual.graph().vertex_count() == 2);
    CHECK(dual.graph().edge_count() == 1);
    CHECK(dual.euler_characteristic() == 2);
    CHECK(dual.face_count() == 1);
}

TEST_CASE("projective plane is self-dual") {
    const CellEmbedding dual = dual_embedding(loop_map(true));
    CHECK(dual.graph().vertex_count() == 1);
    CHECK(dual.euler_characteristic() == 1);
    CHECK_FALSE(dual.graph().is_orientable());
}

TEST_CASE("kitaev lattice is self-dual") {
    const CellEmbedding grid = handmade_torus_grid(3);
    const CellEmbedding dual = dual_embedding(grid);
    CHECK(dual.euler_characteristic() == 0);
    CHECK(dual.graph().vertex_count() == 9);
    CHECK(graphs_isomorphic(grid.graph(), dual.graph()));
}

TEST_CASE("optimal d=3 lattice is a self-dual K5") {
    const CellEmbedding k5 = optimal_toric(3);
    const CellEmbedding dual = dual_embedding(k5);
    CHECK(dual.euler_characteristic() == 0);
    CHECK(graphs_isomorphic(k5.graph(), dual.graph()));
}

TEST_CASE("dual involution returns the primal graph") {
    const CellEmbedding cases[] = {loop_map(false), loop_map(true), one_vertex_torus(),
                                   handmade_torus_grid(3), optimal_toric(3)};
    for (const CellEmbedding& c : cases) {
        const CellEmbedding dd = dual_embedding(dual_embedding(c));
        CHECK(isomorphic_with_edge_identity(c.graph(), dd.graph()));
        CHECK(dd.euler_characteristic() == c.euler_characteristic());
    }
}

TEST_CASE("dual is refused on surfaces with boundary") {
    const CellEmbedding sphere = loop_map(false);
    const CellEmbedding open = sphere.with_open_faces({0});
    CHECK_THROWS_AS(dual_embedding(open), std::domain_error);
}

TEST_CASE("chi is invariant under refinement") {
    std::mt19937 rng(41);
    CellEmbedding cases[] = {loop_map(true), one_vertex_torus(), handmade_torus_grid(3)};
    for (CellEmbedding& c : cases) {
        const int chi = c.euler_characteristic();
        const bool orientable = c.graph().is_orientable();
        CellEmbedding current = c;
        for (int step = 0; step < 4; ++step) {
            const EdgeId e = rng() % current.graph().edge_count();
            current = (step % 2 == 0)
                          ? subdivide_edge(current, e)
                          : trace_faces(insert_parallel_edge(current.graph(), e));
            CHECK(current.euler_characteristic() == chi);
            CHECK(current.graph().is_orientable() == orientable);
        }
    }
}

TEST_CASE("connected sum of spheres is a sphere") {
    const CellEmbedding sum = connected_sum(path_map(), 0, path_map(), 0);
    CHECK(sum.euler_characteristic() == 2);
    CHECK(sum.graph().edge_count() == 2);
    CHECK(sum.graph().vertex_count() == 2);
    CHECK(sum.face_count() == 2);
    CHECK(sum.graph().is_orientable());
    CHECK(sum.surface_info().genus() == 0);
}

TEST_CASE("connected sum of two tori has genus two") {
    const CellEmbedding torus = optimal_toric(3);
    const CellEmbedding sum = connected_sum(torus, 0, torus, 0);
    CHECK(sum.euler_characteristic() == -2);
    CHECK(sum.graph().edge_count() == 20);
    CHECK(sum.graph().vertex_count() == 8);
    CHECK(sum.face_count() == 10);
    CHECK(sum.graph().is_orientable());
    CHECK(sum.surface_info().genus() == 2);
}

TEST_CASE("connected sum argument checks") {
    const CellEmbedding sphere = loop_map(false);
    CHECK_THROWS_AS(connected_sum(sphere, 5, sphere, 0), std::invalid_argument);
    const CellEmbedding open = sphere.with_open_faces({0});
    CHECK_THROWS_AS(connected_sum(open, 0, sphere, 0), std::domain_error);
}

TEST_CASE("connected sum mixing torus and sphere") {
    const CellEmbedding sum = connected_sum(one_vertex_torus(), 1, loop_map(false), 0);
    CHECK(sum.euler_characteristic() == 0);
    CHECK(sum.graph().is_orientable());
    CHECK(sum.graph().edge_count() == 3);
}

TEST_CASE("serialize/parse round trip") {
    const CellEmbedding cases[] = {loop_map(true), one_vertex_torus(), optimal_toric(3),
                                   planar_holed(1, 2)};
    for (const CellEmbedding& c : cases) {
        const std::string text = serialize_embedding(c, {{"family", "unit-test"}});
        const ParsedEmbedding parsed = parse_embedding(text);
        CHECK(parsed.embedding == c);
        CHECK(parsed.metadata.at("family") == "unit-test");
        CHECK(serialize_embedding(parsed.embedding, parsed.metadata) == text);
    }
}

TEST_CASE("parser reports line numbers") {
    const auto check_error = [](const std::string& text, std::size_t line) {
        try {
            parse_embedding(text);
            FAIL("expected a parse error");
        } catch (const parse_error& e) {
            CHECK(e.line() == line);
        }
    };
    check_error("vertices 1\nedge 0 0 2\n", 2);                       // endpoint out of range
    check_error("vertices 1\nedge 0 0 0\nrotation 0: 0.a 0.a\n", 3);  // duplicate dart
    check_error("vertices 1\nedge 0 0 0\nrotation 0: 0.a 3.b\n", 3);  // dart out of range
    check_error("vertices 2\nedge 0 0 1\nedge 2 0 1\n", 3);           // id out of sequence
    check_error("vertices 1\nedge 0 0 0\nrotation 0: 0.a 0.b\nopen-faces: 9\n", 4);
    check_error("vertices 1\nbogus\n", 2);
    // missing rotation for vertex 1
    CHECK_THROWS_AS(parse_embedding("vertices 2\nedge 0 0 1\nrotation 0: 0.a\n"), parse_error);
}

TEST_CASE("surface info text") {
    CHECK(loop_map(false).surface_info().to_string() == "chi=2 orientable=yes genus=0");
    const CellEmbedding d4 = planar_holed(4, 3);
    const SurfaceInfo info = d4.surface_info();
    CHECK(info.chi == -3);
    CHECK(info.boundary_components == 5);
    REQUIRE(info.planar_holes().has_value());
    CHECK(*info.planar_holes() == 4);
}
