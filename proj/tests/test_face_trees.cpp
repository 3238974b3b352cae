#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "planeham/catalog.hpp"
#include "planeham/error.hpp"
#include "planeham/face_trees.hpp"
#include "planeham/planar_core.hpp"
#include "planeham/transforms.hpp"
#include "planeham/triangles.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

using namespace planeham;

namespace {

PlaneGraph bundle(int k)
{
    NeighborRotations rot(2);
    for (int i = 0; i < k; ++i) {
        rot[0].push_back({1, i});
        rot[1].push_back({0, k - 1 - i});
    }
    return build_plane_graph(rot);
}

PlaneGraph by_outer_length(const PlaneGraph& g, int len)
{
    for (FaceId f = 0; f < g.num_faces(); ++f)
        if (g.face_length(f) == len) return g.with_outer_face(f);
    return g;
}

// two triangles sharing vertex 0
PlaneGraph bowtie()
{
    std::vector<std::pair<double, double>> c{{0, 0}, {-2, 1}, {-2, -1}, {2, -1}, {2, 1}};
    std::vector<std::vector<VertexId>> nbrs(5);
    for (auto [a, b] : std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}}) {
        nbrs[a].push_back(b);
        nbrs[b].push_back(a);
    }
    for (int v = 0; v < 5; ++v)
        std::sort(nbrs[v].begin(), nbrs[v].end(), [&](int x, int y) {
            return std::atan2(c[x].second - c[v].second, c[x].first - c[v].first) <
                   std::atan2(c[y].second - c[v].second, c[y].first - c[v].first);
        });
    return by_outer_length(build_plane_graph(nbrs), 6);
}

PlaneGraph cycle_graph(int n)
{
    std::vector<std::vector<VertexId>> nbrs(n);
    for (int i = 0; i < n; ++i) nbrs[i] = {(i + 1) % n, (i + n - 1) % n};
    return build_plane_graph(nbrs);
}

std::vector<PlaneGraph> corpus(const char* file) { return oracle::read_planar_code_file(oracle::data_path(file)); }

}  // namespace

TEST_CASE("validate_face_tree on the four-edge digon bundle")
{
    const auto h = contract_factor(catalog("cube").graph,
                                   enumerate_facial_two_factors(catalog("cube").graph).front())
                       .h;
    REQUIRE(h.num_vertices() == 2);
    REQUIRE(h.num_edges() == 4);
    std::vector<FaceId> bounded;
    for (FaceId f = 0; f < h.num_faces(); ++f)
        if (!h.is_outer(f)) bounded.push_back(f);
    REQUIRE(bounded.size() == 3);

    const FaceTree one{{bounded[0]}, {0, 1}, {}};
    CHECK(validate_face_tree(h, one).empty());
    CHECK(oracle::is_face_tree(h, one));

    const auto empty = validate_face_tree(h, FaceTree{{}, {0, 1}, {}});
    REQUIRE(!empty.empty());
    CHECK(std::any_of(empty.begin(), empty.end(),
                      [](const auto& v) { return v.kind == FaceTreeViolation::Kind::uncovered_vertex; }));

    // two bounded digons: both vertices on both faces, a cycle in R
    const FaceTree two{{bounded[0], bounded[2]}, {0, 1}, {}};
    CHECK(!is_face_tree(h, two));
    CHECK(!oracle::is_face_tree(h, two));

    const auto outer = validate_face_tree(h, FaceTree{{h.outer_face()}, {0, 1}, {}});
    CHECK(outer.front().kind == FaceTreeViolation::Kind::outer_face);
    const auto part = validate_face_tree(h, FaceTree{{bounded[0]}, {0}, {}});
    CHECK(part.front().kind == FaceTreeViolation::Kind::bad_partition);
}

TEST_CASE("exhaustive search: 13-vertex drawing has neither kind of tree")
{
    const auto h = catalog("figure2_h").graph;
    CHECK(!brute_force_face_tree(h, true));
    CHECK(!brute_force_face_tree(h, false));
    CHECK_THROWS_AS(brute_force_face_tree(h, true, 10), Error);
}

TEST_CASE("exhaustive search agrees with the definition")
{
    const auto oct = catalog("octahedron").graph;
    CHECK(!brute_force_face_tree(oct, true));
    const auto q = brute_force_face_tree(oct, false);
    REQUIRE(q);
    CHECK(!q->quasi.empty());
    CHECK(oracle::is_face_tree(oct, *q));

    const auto b = brute_force_face_tree(bundle(4), true);
    REQUIRE(b);
    CHECK(b->faces.size() == 1);

    for (const auto& h : corpus("triangulations_odd_le9.pc")) {
        const auto t = brute_force_face_tree(h, true);
        if (t) CHECK(oracle::is_face_tree(h, *t));
        if (check_invariant_property(h).holds) CHECK(t.has_value());
    }
}

TEST_CASE("odd mode on odd triangulations")
{
    int built = 0;
    for (const auto& h : corpus("triangulations_odd_le9.pc")) {
        if (!check_invariant_property(h).holds) {
            CHECK_THROWS_AS(build_face_tree(h, FaceTreeMode::odd), Error);
            continue;
        }
        const auto b = build_face_tree(h, FaceTreeMode::odd);
        CHECK(oracle::is_face_tree(h, b.tree));
        CHECK(b.tree.is_spanning());
        CHECK(static_cast<int>(b.steps.size()) == (h.num_vertices() - 3) / 2);
        CHECK(static_cast<int>(b.tree.faces.size()) == (h.num_vertices() - 1) / 2);
        for (const auto& s : b.steps) {
            CHECK(s.after.num_vertices() == s.before.num_vertices() - 2);
            CHECK(check_invariant_property(s.after, s.scope_after).holds);
            CHECK(h.face_length(s.original_face) == 3);
        }
        ++built;
    }
    CHECK(built > 0);
    CHECK_THROWS_AS(build_face_tree(catalog("figure2_h").graph, FaceTreeMode::odd), Error);
    CHECK_THROWS_AS(build_face_tree(catalog("octahedron").graph, FaceTreeMode::odd), Error);
}

TEST_CASE("even mode through a degree-4 vertex")
{
    const auto oct = catalog("octahedron").graph;
    const auto b = build_face_tree(oct, FaceTreeMode::even_degree4);
    CHECK(oracle::is_face_tree(oct, b.tree));
    CHECK(b.tree.quasi == std::vector<VertexId>{b.quasi_vertex});
    CHECK(b.tree.faces.size() == 3);
    CHECK(!b.exceptional_k4);

    int built = 0;
    for (const auto& h : corpus("eulerian_4conn_le12.pc")) {
        const auto r = build_face_tree(h, FaceTreeMode::even_degree4);
        CHECK(oracle::is_face_tree(h, r.tree));
        CHECK(r.tree.quasi.size() == 1);
        ++built;
    }
    CHECK(built > 0);
}

TEST_CASE("even mode: the K4 exception")
{
    const auto k4 = catalog("k4").graph;
    // K4 has no degree-4 vertex; doubling an interior spoke gives one
    CHECK_THROWS_AS(build_face_tree(k4, FaceTreeMode::even_degree4), Error);

    // outer 0 1 2, interior 3 joined twice to 0 with the digon split by nothing
    NeighborRotations rot(4);
    // counterclockwise positions: 0 (0,0), 1 (10,0), 2 (5,9), 3 (5,3)
    rot[0] = {{1, -1}, {3, 0}, {3, 1}, {2, -1}};
    rot[1] = {{2, -1}, {3, -1}, {0, -1}};
    rot[2] = {{0, -1}, {3, -1}, {1, -1}};
    rot[3] = {{1, -1}, {2, -1}, {0, 1}, {0, 0}};
    const auto h = build_plane_graph(rot, std::vector<VertexId>{0, 1, 2});
    REQUIRE(h.degree(3) == 4);
    const auto b = build_face_tree(h, FaceTreeMode::even_degree4);
    CHECK(b.exceptional_k4);
    CHECK(b.quasi_vertex == 3);
    CHECK(oracle::is_face_tree(h, b.tree));
}

TEST_CASE("even interior mode")
{
    const auto nested = fixtures::nested_bipyramids();
    REQUIRE(nested.num_vertices() == 11);
    REQUIRE(nested.num_edges() == 27);
    const auto nl = build_triangle_lattice(nested);
    REQUIRE(nl.triangles.size() == 2);
    CHECK(check_invariant_property(nested).holds);
    const auto nb = build_face_tree(nested, FaceTreeMode::even_interior);
    CHECK(oracle::is_face_tree(nested, nb.tree));
    CHECK(nb.steps.size() == 4);

    int built = 0, nontrivial = 0;
    auto graphs = corpus("triangulations_odd_le9.pc");
    graphs.push_back(nested);
    for (const auto& h : graphs) {
        const auto lat = build_triangle_lattice(h);
        const bool even = std::all_of(lat.triangles.begin(), lat.triangles.end(),
                                      [](const SepCycle& t) { return t.interior_vertex_count() % 2 == 0; });
        if (!even) {
            CHECK_THROWS_AS(build_face_tree(h, FaceTreeMode::even_interior), Error);
            continue;
        }
        const auto b = build_face_tree(h, FaceTreeMode::even_interior);
        CHECK(oracle::is_face_tree(h, b.tree));
        ++built;
        nontrivial += lat.triangles.size() > 1;
    }
    CHECK(built > 0);
    MESSAGE("even-interior graphs: " << built << ", with separating triangles: " << nontrivial);
}

TEST_CASE("A-trail bridge on small graphs")
{
    const auto b4 = bundle(4);
    const FaceTree t = *brute_force_face_tree(b4, true);
    const auto a = face_tree_to_a_trail(b4, t);
    CHECK(a.trail.size() == 2);
    CHECK(is_a_trail(b4, a.trail, false));
    CHECK(a_trail_to_face_tree(b4, a.trail) == t);

    const auto c4 = cycle_graph(4);
    const auto ac = find_a_trail(c4);
    REQUIRE(ac);
    CHECK(ac->trail.size() == 4);
    const auto tc = a_trail_to_face_tree(c4, ac->trail);
    CHECK(tc.faces.size() == 1);
    CHECK(!c4.is_outer(tc.faces[0]));
    CHECK(oracle::is_face_tree(c4, tc));

    const auto bt = bowtie();
    const auto ab = find_a_trail(bt);
    REQUIRE(ab);
    CHECK(is_a_trail(bt, ab->trail, true));
    CHECK(ab->splitting[0] == 2);
    const auto tb = a_trail_to_face_tree(bt, ab->trail);
    CHECK(tb.faces.size() == 2);
    CHECK(tb.quasi.empty());
    CHECK(oracle::is_face_tree(bt, tb));
    CHECK(same_closed_trail(face_tree_to_a_trail(bt, tb).trail, ab->trail));

    const auto oct = catalog("octahedron").graph;
    const auto bo = build_face_tree(oct, FaceTreeMode::even_degree4).tree;
    const auto ao = face_tree_to_a_trail(oct, bo);
    CHECK(ao.trail.size() == 9);
    CHECK(ao.splitting[bo.quasi[0]] == 1);
    CHECK(a_trail_to_face_tree(oct, ao.trail) == bo);

    CHECK_THROWS_AS(find_a_trail(catalog("k4").graph), Error);
    CHECK_THROWS_AS(face_tree_to_a_trail(b4, FaceTree{{}, {0, 1}, {}}), Error);
}

TEST_CASE("A-trail bridge on eulerian 4-connected triangulations")
{
    for (const auto& h : corpus("eulerian_4conn_le12.pc")) {
        const auto a = find_a_trail(h);
        REQUIRE(a);
        CHECK(is_a_trail(h, a->trail, true));
        const auto t = a_trail_to_face_tree(h, a->trail);
        CHECK(oracle::is_face_tree(h, t));
        for (VertexId v = 0; v < h.num_vertices(); ++v) {
            const bool q = std::binary_search(t.quasi.begin(), t.quasi.end(), v);
            CHECK(a->splitting[v] == (q ? 1 : 2));
        }
        const auto back = face_tree_to_a_trail(h, t);
        CHECK(same_closed_trail(back.trail, a->trail));
        CHECK(back.splitting == a->splitting);

        const auto built = build_face_tree(h, FaceTreeMode::even_degree4).tree;
        const auto via = face_tree_to_a_trail(h, built);
        CHECK(a_trail_to_face_tree(h, via.trail) == built);
    }
}
