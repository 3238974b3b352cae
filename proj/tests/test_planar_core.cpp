#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "oracles.hpp"
#include "planeham/catalog.hpp"
#include "planeham/error.hpp"
#include "planeham/planar_core.hpp"

#include <algorithm>
#include <numeric>

using namespace planeham;

namespace {

PlaneGraph cycle_graph(int n)
{
    std::vector<std::vector<VertexId>> rot(n);
    for (int i = 0; i < n; ++i) rot[i] = {(i + 1) % n, (i + n - 1) % n};
    return build_plane_graph(rot);
}

int euler(const PlaneGraph& g) { return g.num_vertices() - g.num_edges() + g.num_faces(); }

std::vector<EdgeId> face_cycle(const PlaneGraph& g, FaceId f) { return g.face_edges(f); }

}  // namespace

TEST_CASE("build_plane_graph counts")
{
    const auto k4 = catalog("k4").graph;
    CHECK(k4.num_vertices() == 4);
    CHECK(k4.num_edges() == 6);
    CHECK(k4.num_faces() == 4);
    CHECK(euler(k4) == 2);

    const auto cube = catalog("cube").graph;
    CHECK(cube.num_faces() == 6);
    for (FaceId f = 0; f < cube.num_faces(); ++f) CHECK(cube.face_length(f) == 4);

    const auto h = catalog("figure2_h").graph;
    CHECK(h.num_vertices() == 13);
    CHECK(h.num_edges() == 33);
    CHECK(h.num_faces() == 22);
    for (FaceId f = 0; f < h.num_faces(); ++f) CHECK(h.face_length(f) == 3);
    CHECK(h.face_vertices(h.outer_face()).size() == 3);
}

TEST_CASE("build_plane_graph rejects bad input")
{
    // 1 lists 0 but 0 does not list 1
    CHECK_THROWS_AS(build_plane_graph(std::vector<std::vector<VertexId>>{{2}, {0, 2}, {0, 1}}), Error);
    // two separate edges
    CHECK_THROWS_AS(build_plane_graph(std::vector<std::vector<VertexId>>{{1}, {0}, {3}, {2}}), Error);
    // K4 with a non-planar rotation (swap at one vertex gives genus 1)
    CHECK_THROWS_AS(build_plane_graph(std::vector<std::vector<VertexId>>{{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}}),
                    Error);
}

TEST_CASE("trace_faces")
{
    const auto c4 = cycle_graph(4);
    const auto faces = trace_faces(c4);
    CHECK(faces.size() == 2);
    for (const auto& f : faces) CHECK(f.length() == 4);

    for (const auto& name : catalog_names()) {
        const auto g = catalog(name).graph;
        int total = 0;
        std::vector<int> seen(g.num_darts(), 0);
        for (const auto& f : trace_faces(g)) {
            total += f.length();
            for (DartId d : f.boundary) ++seen[d];
        }
        CHECK(total == 2 * g.num_edges());
        CHECK(std::all_of(seen.begin(), seen.end(), [](int s) { return s == 1; }));
        CHECK(euler(g) == 2);
    }
}

TEST_CASE("dual")
{
    const auto k4 = catalog("k4").graph;
    CHECK(isomorphic(dual(k4), k4));

    const auto cube = catalog("cube").graph;
    const auto oct = dual(cube);
    CHECK(oct.num_vertices() == 6);
    CHECK(oct.num_edges() == 12);
    CHECK(oct.num_faces() == 8);
    CHECK(isomorphic(oct, catalog("octahedron").graph));
    CHECK(isomorphic(dual(oct), cube));

    for (const auto& name : catalog_names()) {
        const auto g = catalog(name).graph;
        const auto d1 = dual(g);
        const auto dd = dual(d1);
        const auto rerooted = dd.with_outer_face(dual_face_of_vertex(d1, dd, g.outer_face()));
        CHECK_MESSAGE(isomorphic(rerooted, g, true), name);
        // double dual relabels each dart d to twin(d)
        for (VertexId v = 0; v < g.num_vertices(); ++v) {
            const FaceId dual_face = dual(g).face_of(PlaneGraph::twin(g.rotation(v).front()));
            std::vector<DartId> expected;
            for (DartId d : g.rotation(v)) expected.push_back(PlaneGraph::twin(d));
            const auto& got = dd.rotation(dual_face);
            REQUIRE(got.size() == expected.size());
            const auto it = std::find(got.begin(), got.end(), expected.front());
            REQUIRE(it != got.end());
            std::vector<DartId> rotated(it, got.end());
            rotated.insert(rotated.end(), got.begin(), it);
            CHECK(rotated == expected);
        }
    }
}

TEST_CASE("region_partition")
{
    const auto cube = catalog("cube").graph;
    for (FaceId f = 0; f < cube.num_faces(); ++f) {
        const auto rp = region_partition(cube, face_cycle(cube, f));
        if (f == cube.outer_face())
            CHECK(rp.exterior_vertices.empty());
        else
            CHECK(rp.interior_vertices.empty());
        CHECK(!rp.is_separating());
    }

    const auto h = catalog("figure2_h").graph;
    auto tri = [&](int a, int b, int c) {
        return std::vector<EdgeId>{h.edges_between(a, b).at(0), h.edges_between(b, c).at(0), h.edges_between(c, a).at(0)};
    };
    const auto rp = region_partition(h, tri(4, 5, 6));
    CHECK(rp.interior_vertices == std::vector<VertexId>{0});
    CHECK(rp.is_separating());
    const auto outer = region_partition(h, tri(1, 2, 3));
    CHECK(outer.interior_vertices.size() == 10);
    CHECK(std::find(outer.exterior_faces.begin(), outer.exterior_faces.end(), h.outer_face()) != outer.exterior_faces.end());

    CHECK_THROWS_AS(region_partition(cube, {0, 1}), Error);
}

TEST_CASE("region_partition agrees with the sweep oracle on all short cycles")
{
    for (const auto& name : {"cube", "octahedron", "triangular_prism", "pentagonal_prism", "figure2_h", "figure1_h0"}) {
        const auto g = catalog(name).graph;
        const int m = g.num_edges();
        // all 3- and 4-cycles
        int checked = 0;
        for (int a = 0; a < m; ++a)
            for (int b = a + 1; b < m; ++b)
                for (int c = b + 1; c < m; ++c) {
                    std::vector<EdgeId> cyc{a, b, c};
                    if (!cycle_vertex_order(g, cyc)) continue;
                    const auto rp = region_partition(g, cyc);
                    CHECK(rp.interior_vertices == oracle::interior_vertices(g, cyc));
                    CHECK(rp.interior_vertices.size() + rp.exterior_vertices.size() + rp.cycle_vertices.size() ==
                          static_cast<std::size_t>(g.num_vertices()));
                    ++checked;
                }
        for (int a = 0; a < m; ++a)
            for (int b = a + 1; b < m; ++b)
                for (int c = b + 1; c < m; ++c)
                    for (int d = c + 1; d < m; ++d) {
                        std::vector<EdgeId> q{a, b, c, d};
                        if (!cycle_vertex_order(g, q)) continue;
                        const auto rq = region_partition(g, q);
                        CHECK(rq.interior_vertices == oracle::interior_vertices(g, q));
                        ++checked;
                    }
        CHECK(checked > 0);
    }
}

TEST_CASE("cyclic edge connectivity")
{
    CHECK(cyclic_edge_connectivity(catalog("triangular_prism").graph) == 3);
    CHECK(cyclic_edge_connectivity(catalog("cube").graph) == 4);
    CHECK(cyclic_edge_connectivity(catalog("pentagonal_prism").graph) == 4);
    CHECK_THROWS_AS(cyclic_edge_connectivity(catalog("k4").graph), Error);
    for (const auto& name : {"triangular_prism", "cube", "pentagonal_prism", "hexagonal_prism"}) {
        const auto g = catalog(name).graph;
        CHECK_MESSAGE(cyclic_edge_connectivity(g) == oracle::cyclic_edge_connectivity(g), name);
    }
    for (const auto& g : oracle::read_planar_code_file(oracle::data_path("cubic_3conn_le12.pc"))) {
        if (!has_two_disjoint_cycles(g)) continue;
        CHECK(cyclic_edge_connectivity(g) == oracle::cyclic_edge_connectivity(g));
    }
}

TEST_CASE("vertex connectivity")
{
    CHECK(vertex_connectivity(catalog("k4").graph) == 3);
    CHECK(vertex_connectivity(catalog("octahedron").graph) == 4);
    CHECK(vertex_connectivity(catalog("cube").graph) == 3);
    for (const auto& name : catalog_names()) {
        const auto g = catalog(name).graph;
        if (g.num_vertices() > 16) continue;
        CHECK_MESSAGE(vertex_connectivity(g) == oracle::vertex_connectivity(g), name);
    }
}

TEST_CASE("face colorings")
{
    const auto c4 = cycle_graph(4);
    const auto two = face_coloring(c4, FaceColoringMode::two_color);
    CHECK(two[c4.outer_face()] == 1);
    CHECK(two[1 - c4.outer_face()] == 2);

    const auto oct = catalog("octahedron").graph;
    const auto oc = face_coloring(oct, FaceColoringMode::two_color);
    CHECK(oracle::proper_face_coloring(oct, oc, 2));
    CHECK(std::count(oc.begin(), oc.end(), 1) == 4);

    const auto cube = catalog("cube").graph;
    const auto cc = face_coloring(cube, FaceColoringMode::three_color);
    CHECK(oracle::proper_face_coloring(cube, cc, 3));
    CHECK(cc[0] == 1);
    for (int c = 1; c <= 3; ++c) CHECK(std::count(cc.begin(), cc.end(), c) == 2);
    // opposite faces share no vertex
    for (FaceId a = 0; a < 6; ++a)
        for (FaceId b = a + 1; b < 6; ++b)
            if (cc[a] == cc[b]) {
                auto va = cube.face_vertices(a), vb = cube.face_vertices(b);
                std::sort(va.begin(), va.end());
                std::sort(vb.begin(), vb.end());
                std::vector<VertexId> common;
                std::set_intersection(va.begin(), va.end(), vb.begin(), vb.end(), std::back_inserter(common));
                CHECK(common.empty());
            }
    CHECK_THROWS_AS(face_coloring(catalog("k4").graph, FaceColoringMode::three_color), Error);
    CHECK_THROWS_AS(face_coloring(cube, FaceColoringMode::two_color), Error);
}

TEST_CASE("canonical code distinguishes and identifies")
{
    const auto cube = catalog("cube").graph;
    const auto prism4 = prism(4);
    CHECK(isomorphic(cube, prism4));
    CHECK(!isomorphic(catalog("pentagonal_prism").graph, dual(catalog("pentagonal_prism").graph)));
    CHECK(!isomorphic(catalog("octahedron").graph, cube));
    // respecting the outer face: prism with a square outside vs with a pentagon outside
    const auto p5 = catalog("pentagonal_prism").graph;
    FaceId square = -1;
    for (FaceId f = 0; f < p5.num_faces(); ++f)
        if (p5.face_length(f) == 4) square = f;
    CHECK(isomorphic(p5, p5.with_outer_face(square)));
    CHECK(!isomorphic(p5, p5.with_outer_face(square), true));
}

TEST_CASE("edit_graph contraction and deletion")
{
    const auto k4 = catalog("k4").graph;
    // contract two edges of a bounded triangle: third edge becomes a loop
    FaceId inner = k4.outer_face() == 0 ? 1 : 0;
    const auto es = k4.face_edges(inner);
    const auto s = edit_graph(k4, {}, {es[0], es[1]});
    CHECK(s.graph.num_vertices() == 2);
    CHECK(s.graph.num_edges() == 3);
    CHECK(s.deleted_loops == std::vector<EdgeId>{es[2]});
    CHECK(euler(s.graph) == 2);

    const auto cube = catalog("cube").graph;
    const auto r = edit_graph(cube, {cube.face_edges(cube.outer_face())}, {});
    CHECK(r.graph.num_vertices() == 8);
    CHECK(euler(r.graph) == 2);
    CHECK_THROWS_AS(edit_graph(cube, {}, cube.face_edges(0)), Error);
}
