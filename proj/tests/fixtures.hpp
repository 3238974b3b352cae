#pragma once

// Hand-built fixtures shared by the unit tests and the acceptance run.

#include <utility>
#include <vector>

#include "planeham/catalog.hpp"

namespace fixtures {

using namespace planeham;

// Pentagonal bipyramid with a second copy glued into one of its bounded
// faces: 11 vertices, one separating triangle with 4 vertices inside.
inline PlaneGraph nested_bipyramids()
{
    // N r0 r1 r2 r3 r4 S
    std::vector<std::pair<double, double>> p{{0, 20}, {-20, -10}, {20, -10}, {8, 0}, {0, 6}, {-8, 0}, {0, -4}};
    std::vector<std::pair<int, int>> base{{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}};
    for (int r = 1; r <= 5; ++r) {
        base.emplace_back(0, r);
        base.emplace_back(6, r);
    }
    auto coords = p;
    auto edges = base;
    // copy's outer face N r0 r1 lands on S r1 r2
    const std::vector<int> m{6, 2, 3, 7, 8, 9, 10};
    auto affine = [&](std::pair<double, double> w) {
        const auto [x0, y0] = p[0];
        const auto [x1, y1] = p[1];
        const auto [x2, y2] = p[2];
        const double det = (x1 - x0) * (y2 - y0) - (x2 - x0) * (y1 - y0);
        const double b1 = ((w.first - x0) * (y2 - y0) - (x2 - x0) * (w.second - y0)) / det;
        const double b2 = ((x1 - x0) * (w.second - y0) - (w.first - x0) * (y1 - y0)) / det;
        const double b0 = 1 - b1 - b2;
        return std::pair<double, double>{b0 * p[6].first + b1 * p[2].first + b2 * p[3].first,
                                         b0 * p[6].second + b1 * p[2].second + b2 * p[3].second};
    };
    for (int i = 3; i < 7; ++i) coords.push_back(affine(p[i]));
    for (auto [a, b] : base)
        if (a > 2 || b > 2) edges.emplace_back(m[a], m[b]);
    return graph_from_drawing(coords, edges, {0, 1, 2});
}

}  // namespace fixtures
