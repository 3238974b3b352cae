#include "planeham/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "planeham/error.hpp"
#include "planeham/transforms.hpp"

namespace planeham {

PlaneGraph graph_from_drawing(const std::vector<std::pair<double, double>>& coords,
                              const std::vector<std::pair<int, int>>& edges,
                              const std::vector<VertexId>& outer_boundary)
{
    const int n = static_cast<int>(coords.size());
    std::vector<std::vector<VertexId>> nbrs(n);
    for (auto [a, b] : edges) {
        nbrs[a].push_back(b);
        nbrs[b].push_back(a);
    }
    for (int v = 0; v < n; ++v) {
        auto angle = [&](int w) {
            return std::atan2(coords[w].second - coords[v].second, coords[w].first - coords[v].first);
        };
        std::sort(nbrs[v].begin(), nbrs[v].end(), [&](int a, int b) { return angle(a) < angle(b); });
    }
    return build_plane_graph(nbrs, outer_boundary);
}

namespace {

std::vector<std::pair<double, double>> ring(int n, double radius, double phase)
{
    std::vector<std::pair<double, double>> pts;
    for (int i = 0; i < n; ++i) {
        const double a = phase + 2 * std::numbers::pi * i / n;
        pts.emplace_back(radius * std::cos(a), radius * std::sin(a));
    }
    return pts;
}

PlaneGraph k4()
{
    return graph_from_drawing({{0, 0}, {10, 0}, {5, 8.66}, {5, 2.9}}, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {1, 3}, {2, 3}},
                              {0, 1, 2});
}

PlaneGraph cube()
{
    return graph_from_drawing({{0, 0}, {10, 0}, {10, 10}, {0, 10}, {3, 3}, {7, 3}, {7, 7}, {3, 7}},
                              {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5}, {5, 6}, {6, 7}, {7, 4}, {0, 4}, {1, 5}, {2, 6}, {3, 7}},
                              {0, 1, 2, 3});
}

PlaneGraph octahedron()
{
    auto pts = ring(3, 10, std::numbers::pi / 2);
    for (auto p : ring(3, 3, -std::numbers::pi / 2)) pts.push_back(p);
    // outer 0,1,2; inner 3,4,5 with 3 opposite 0
    std::vector<std::pair<int, int>> e{{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (i != j) e.emplace_back(i, 3 + j);
    return graph_from_drawing(pts, e, {0, 1, 2});
}

std::vector<std::pair<double, double>> figure1_coords()
{
    return {{0, 0},       {-5, 5},      {20, 41.9},   {22.1, 39},   {12.5, 25},   {8.5, 19},  {-1, 5},
            {1, 3},       {20, 3},      {22.1, 5.9},  {18.7, 9.9},  {20, 14.5},   {15, 14.8}, {11.6, 18.9},
            {13.6, 21.9}, {33.4, 21.9}, {34.4, 20.4}, {35.3, 19},   {24.9, 5.9},  {27, 3},    {46, 3},
            {48, 5},      {38.5, 19},   {34.5, 25},   {24.9, 39},   {27, 41.9},   {52, 5},    {47, 0}};
}

PlaneGraph figure1_g0()
{
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 28; ++i) e.emplace_back(i, (i + 1) % 28);
    const std::vector<std::pair<int, int>> chords{{25, 2},  {7, 0},   {6, 1},  {20, 27}, {21, 26}, {8, 19},  {18, 9},
                                                  {3, 24},  {22, 17}, {15, 23}, {10, 12}, {5, 13}, {4, 14}, {11, 16}};
    e.insert(e.end(), chords.begin(), chords.end());
    return graph_from_drawing(figure1_coords(), e, {0, 27, 26, 25, 2, 1});
}

PlaneGraph figure1_h0()
{
    // u1..u7 -> 0..6
    const std::vector<std::pair<double, double>> pts{{0, 0},     {20, 34.6}, {16, 13.6}, {20, 7.05},
                                                     {18, 10.325}, {24, 13.6}, {40, 0}};
    auto u = [](int i) { return i - 1; };
    const std::vector<std::pair<int, int>> e{{u(1), u(7)}, {u(1), u(2)}, {u(1), u(4)}, {u(1), u(3)}, {u(7), u(2)},
                                             {u(7), u(4)}, {u(7), u(6)}, {u(2), u(3)}, {u(2), u(6)}, {u(4), u(5)},
                                             {u(5), u(3)}, {u(4), u(6)}, {u(3), u(6)}, {u(5), u(6)}};
    return graph_from_drawing(pts, e, {u(1), u(7), u(2)});
}

PlaneGraph figure2_h()
{
    std::vector<std::pair<double, double>> pts(13);
    pts[1] = {0, 0};
    pts[3] = {40, 0};
    pts[2] = {20, 34.6};
    pts[4] = {20, 7.05};
    pts[6] = {24, 13.6};
    pts[5] = {16, 13.6};
    pts[12] = {20, 3.52};
    pts[10] = {27, 15.5};
    pts[8] = {13, 15.5};
    pts[0] = {20, 11.4};
    pts[7] = {12, 6.8};
    pts[11] = {28, 6.8};
    pts[9] = {20, 21};
    const std::vector<std::pair<int, int>> e{
        {1, 3}, {1, 2},  {1, 4},  {1, 5},  {1, 12}, {12, 3}, {12, 4}, {1, 7}, {7, 4}, {7, 5}, {1, 8},
        {8, 5}, {8, 2},  {3, 2},  {3, 4},  {3, 6},  {3, 11}, {11, 4}, {11, 6}, {3, 10}, {10, 6}, {10, 2},
        {2, 5}, {2, 6},  {2, 9},  {9, 6},  {9, 5},  {4, 5},  {4, 6},  {5, 6},  {0, 4},  {0, 6},  {0, 5}};
    return graph_from_drawing(pts, e, {1, 2, 3});
}

}  // namespace

PlaneGraph prism(int n)
{
    if (n < 3) fail(ErrorKind::invalid_input, "prism needs n >= 3");
    auto pts = ring(n, 10, 0);
    for (auto p : ring(n, 5, 0)) pts.push_back(p);
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) {
        e.emplace_back(i, (i + 1) % n);
        e.emplace_back(n + i, n + (i + 1) % n);
        e.emplace_back(i, n + i);
    }
    std::vector<VertexId> outer(n);
    for (int i = 0; i < n; ++i) outer[i] = i;
    return graph_from_drawing(pts, e, outer);
}

std::vector<std::vector<VertexId>> figure1_q0_vertex_sets()
{
    return {{0, 1, 6, 7}, {2, 3, 24, 25}, {4, 5, 13, 14}, {8, 9, 18, 19}, {10, 11, 12}, {15, 16, 17, 22, 23}, {20, 21, 26, 27}};
}

std::vector<EdgeId> figure1_c0_edges(const PlaneGraph& g0)
{
    std::vector<EdgeId> c;
    for (int i = 0; i < 28; ++i) c.push_back(g0.edges_between(i, (i + 1) % 28).at(0));
    return c;
}

std::vector<std::string> catalog_names()
{
    return {"k4",           "cube",       "octahedron", "triangular_prism", "pentagonal_prism", "hexagonal_prism",
            "truncated_octahedron", "figure1_g0", "figure1_h0", "figure2_h"};
}

CatalogEntry catalog(const std::string& name)
{
    if (name == "k4") return {name, k4(), "tetrahedron"};
    if (name == "cube") return {name, cube(), "square inside square"};
    if (name == "octahedron") return {name, octahedron(), "triangle inside rotated triangle"};
    if (name == "triangular_prism") return {name, prism(3), "a_i = i, b_i = 3 + i"};
    if (name == "pentagonal_prism") return {name, prism(5), "a_i = i, b_i = 5 + i"};
    if (name == "hexagonal_prism") return {name, prism(6), "a_i = i, b_i = 6 + i"};
    if (name == "truncated_octahedron") return {name, truncate(octahedron()), "truncation of the octahedron"};
    if (name == "figure1_g0")
        return {name, figure1_g0(), "v_i = i; C0 = v0 v1 ... v27; outer face v0 v27 v26 v25 v2 v1 outside C0"};
    if (name == "figure1_h0") return {name, figure1_h0(), "u_i = i - 1; outer face u1 u7 u2"};
    if (name == "figure2_h") return {name, figure2_h(), "v_i = i; outer face v1 v2 v3"};
    fail(ErrorKind::invalid_input, "unknown catalog entry '" + name + "'");
}

}  // namespace planeham
