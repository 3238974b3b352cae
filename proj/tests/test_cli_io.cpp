#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "oracles.hpp"
#include "planeham/batch.hpp"
#include "planeham/catalog.hpp"
#include "planeham/error.hpp"
#include "planeham/io.hpp"
#include "planeham/planar_core.hpp"
#include "planeham/render.hpp"

#include <algorithm>

using namespace planeham;

namespace {

std::vector<std::vector<VertexId>> neighbour_lists(const PlaneGraph& g)
{
    std::vector<std::vector<VertexId>> out(g.num_vertices());
    for (VertexId v = 0; v < g.num_vertices(); ++v)
        for (DartId d : g.rotation(v)) out[v].push_back(g.target(d));
    return out;
}

int count(const std::string& s, const std::string& what)
{
    int n = 0;
    for (auto p = s.find(what); p != std::string::npos; p = s.find(what, p + 1)) ++n;
    return n;
}

PlaneGraph bundle(int k)
{
    NeighborRotations rot(2);
    for (int i = 0; i < k; ++i) {
        rot[0].push_back({1, i});
        rot[1].push_back({0, k - 1 - i});
    }
    return build_plane_graph(rot);
}

ErrorKind kind_of(auto&& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::invalid_input;
}

}  // namespace

TEST_CASE("text format round trip")
{
    for (const auto& name : catalog_names()) {
        const auto g = catalog(name).graph;
        const auto back = parse_text_graph(write_text_graph(g));
        CHECK(neighbour_lists(back) == neighbour_lists(g));
        CHECK(back.face_vertices(back.outer_face()) == g.face_vertices(g.outer_face()));
        CHECK(isomorphic(back, g, true));
    }
    const auto b = bundle(4).with_outer_face(2);
    const auto text = write_text_graph(b);
    CHECK(text.find('@') != std::string::npos);
    const auto back = parse_text_graph(text);
    CHECK(back.num_edges() == 4);
    CHECK(back.face_darts(back.outer_face()) == b.face_darts(b.outer_face()));

    const auto k4 = parse_text_graph("# tetrahedron\n0: 1 3 2\n1: 2 3 0\n2: 0 3 1\n3: 0 1 2\nouter: 0 2 1\n");
    CHECK(k4.num_faces() == 4);
    CHECK(kind_of([] { parse_text_graph("0 1 2\n"); }) == ErrorKind::format);
    CHECK(kind_of([] { parse_text_graph("0: 1\n1: 7\n"); }) == ErrorKind::format);
    CHECK(kind_of([] { parse_text_graph("0: 1 1\n1: 0\n"); }) == ErrorKind::format);
    CHECK(kind_of([] { parse_text_graph("0: 1\n1: 0\nouter: 0 5\n"); }) == ErrorKind::format);
}

TEST_CASE("planar_code decoding")
{
    // K4 written by hand: clockwise lists, 1-based
    std::string bytes = ">>planar_code<<";
    for (int x : {4, 2, 3, 4, 0, 1, 4, 3, 0, 1, 2, 4, 0, 1, 3, 2, 0}) bytes.push_back(static_cast<char>(x));
    const auto k4 = decode_planar_code(bytes);
    REQUIRE(k4.size() == 1);
    CHECK(k4[0].num_vertices() == 4);
    CHECK(k4[0].num_faces() == 4);
    CHECK(isomorphic(k4[0], catalog("k4").graph));
    CHECK(neighbour_lists(k4[0])[0] == std::vector<VertexId>{3, 2, 1});

    CHECK(decode_planar_code(">>planar_code<<").empty());
    CHECK(decode_planar_code(">>planar_code le<<").empty());
    try {
        decode_planar_code(bytes.substr(0, bytes.size() - 3));
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::format);
        CHECK(std::string(e.what()).find("byte 29") != std::string::npos);
    }
    CHECK(kind_of([] { decode_planar_code(">>graph6<<"); }) == ErrorKind::format);
    std::string bad = ">>planar_code<<";
    for (int x : {3, 2, 9, 0}) bad.push_back(static_cast<char>(x));
    CHECK(kind_of([&] { decode_planar_code(bad); }) == ErrorKind::format);
}

TEST_CASE("planar_code encode and decode agree")
{
    std::vector<PlaneGraph> all;
    for (const auto& name : catalog_names())
        if (catalog(name).graph.is_simple()) all.push_back(catalog(name).graph);
    all.push_back(prism(130));
    const auto bytes = encode_planar_code(all);
    const auto back = decode_planar_code(bytes);
    REQUIRE(back.size() == all.size());
    for (std::size_t i = 0; i < all.size(); ++i) CHECK(neighbour_lists(back[i]) == neighbour_lists(all[i]));
    CHECK(bytes.find(std::string(1, '\0') + std::string(1, static_cast<char>(4)) + std::string(1, '\1')) !=
          std::string::npos);

    for (const char* file : {"triangulations_odd_le9.pc", "cubic_3conn_le12.pc"}) {
        const auto ours = decode_planar_code(read_file(oracle::data_path(file)));
        const auto theirs = oracle::read_planar_code_file(oracle::data_path(file));
        REQUIRE(ours.size() == theirs.size());
        for (std::size_t i = 0; i < ours.size(); ++i) CHECK(neighbour_lists(ours[i]) == neighbour_lists(theirs[i]));
        CHECK(encode_planar_code(ours) == read_file(oracle::data_path(file)));
    }
    CHECK(load_graphs("catalog:cube").front().num_vertices() == 8);
    CHECK(kind_of([] { load_graph("catalog:dodecahedron"); }) == ErrorKind::format);
    CHECK(kind_of([] { load_graph("/nonexistent/file.txt"); }) == ErrorKind::format);
}

TEST_CASE("certificates re-verify from their text")
{
    const auto g = catalog("octahedron").graph;
    for (DartId d = 0; d < g.num_darts(); ++d) CHECK(parse_dart_ref(g, dart_ref(g, d)) == d);

    const auto b = run_one(catalog("cube").graph, "cube", Strategy::faces, {});
    REQUIRE(!b.failure_kind);
    const auto text = write_certificate(b);
    const auto back = read_certificate(text);
    CHECK(back.input_id == "cube");
    CHECK(back.strategy == "faces");
    CHECK(verify_certificate(back).ok);
    CHECK(back.cycle->size() == 24);

    // drop one dart from the cycle line
    auto cut = text;
    const auto at = cut.find("cycle 24\n");
    REQUIRE(at != std::string::npos);
    cut.replace(at, 9, "cycle 23\n");
    const auto line_end = cut.find('\n', at + 9);
    const auto last_space = cut.rfind(' ', line_end);
    cut.erase(last_space, line_end - last_space);
    CHECK(!verify_certificate(read_certificate(cut)).ok);

    CertificateBundle ft;
    ft.input_id = "octahedron quasi tree";
    ft.strategy = "even_degree4";
    ft.graph = g;
    ft.face_tree = build_face_tree(g, FaceTreeMode::even_degree4).tree;
    const auto fback = read_certificate(write_certificate(ft));
    CHECK(verify_certificate(fback).ok);
    CHECK(fback.face_tree->quasi == ft.face_tree->quasi);

    const auto failed = run_one(catalog("k4").graph, "k4", Strategy::faces, {});
    REQUIRE(failed.failure_kind);
    CHECK(*failed.failure_kind == ErrorKind::hypothesis);
    const auto fb = read_certificate(write_certificate(failed));
    CHECK(fb.failure == failed.failure);
    CHECK(!verify_certificate(fb).ok);
    CHECK(kind_of([] { read_certificate("nonsense\n"); }) == ErrorKind::format);
}

TEST_CASE("edge list and face tree files")
{
    const auto g = catalog("octahedron").graph;
    CHECK(parse_edge_list(g, "0 3 5 # comment\n") == std::vector<EdgeId>{0, 3, 5});
    CHECK(parse_edge_list(g, dart_ref(g, 7)) == std::vector<EdgeId>{3});
    const auto t = parse_face_tree(g, "faces: 1 2\nquasi: 4\n");
    CHECK(t.faces == std::vector<FaceId>{1, 2});
    CHECK(t.proper == std::vector<VertexId>{0, 1, 2, 3, 5});
    CHECK(kind_of([&] { parse_face_tree(g, "trees: 1\n"); }) == ErrorKind::format);
}

TEST_CASE("svg rendering")
{
    const auto cube = catalog("cube").graph;
    const auto c = brute_force_hamiltonian(cube);
    REQUIRE(c);
    RenderOptions opt;
    opt.highlight_edges = c->edges;
    const auto svg = render_svg(cube, opt);
    CHECK(uses_convex_layout(cube));
    CHECK(count(svg, "class=\"vertex\"") == 8);
    CHECK(count(svg, "class=\"edge hl\"") == 8);
    CHECK(count(svg, "class=\"edge\"") == 4);
    CHECK(svg == render_svg(cube, opt));

    const auto f2 = render_svg(catalog("figure2_h").graph);
    CHECK(count(f2, "<polygon") == 22);

    // bounded faces of a convex drawing have positive area
    const auto pos = layout(cube);
    for (FaceId f = 0; f < cube.num_faces(); ++f) {
        if (cube.is_outer(f)) continue;
        double area = 0;
        const auto vs = cube.face_vertices(f);
        for (std::size_t i = 0; i < vs.size(); ++i) {
            const auto [x1, y1] = pos[vs[i]];
            const auto [x2, y2] = pos[vs[(i + 1) % vs.size()]];
            area += x1 * y2 - x2 * y1;
        }
        CHECK(area > 0);
    }
    // multigraph falls back to layers and still draws every edge
    const auto b = render_svg(bundle(4));
    CHECK(!uses_convex_layout(bundle(4)));
    CHECK(count(b, "data-edge=") == 4);
}

TEST_CASE("batch keeps input order and matches serial runs")
{
    const auto graphs = decode_planar_code(read_file(oracle::data_path("bipartite_cyc4_le16.pc")));
    std::vector<PlaneGraph> inputs(graphs.begin(), graphs.end());
    inputs.push_back(catalog("k4").graph);
    std::vector<std::string> ids;
    for (std::size_t i = 0; i < inputs.size(); ++i) ids.push_back("g" + std::to_string(i));
    const auto serial = run_batch(inputs, ids, Strategy::faces, 1);
    const auto parallel = run_batch(inputs, ids, Strategy::faces, 4);
    REQUIRE(serial.size() == inputs.size());
    for (std::size_t i = 0; i < inputs.size(); ++i) {
        CHECK(parallel[i].input_id == ids[i]);
        CHECK(parallel[i].cycle == serial[i].cycle);
        CHECK(parallel[i].failure == serial[i].failure);
    }
    CHECK(serial.back().failure_kind == ErrorKind::hypothesis);
    std::string report;
    for (const auto& b : parallel) report += write_certificate(b);
    const auto back = read_certificates(report);
    REQUIRE(back.size() == inputs.size());
    for (std::size_t i = 0; i + 1 < back.size(); ++i) CHECK(verify_certificate(back[i]).ok);
}
