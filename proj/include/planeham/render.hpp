#pragma once

#include <string>
#include <utility>
#include <vector>

#include "planeham/plane_graph.hpp"

namespace planeham {

struct RenderOptions {
    std::vector<EdgeId> highlight_edges;
    std::vector<FaceId> highlight_faces;
    double size = 600;
    bool labels = true;
};

/// Barycentric layout with the outer face on a regular polygon when g is
/// simple and 3-connected with a simple outer boundary; otherwise BFS layers.
std::vector<std::pair<double, double>> layout(const PlaneGraph& g);
bool uses_convex_layout(const PlaneGraph& g);

/// SVG 1.1 document: one polygon per face (outer included), one element per
/// edge, one circle per vertex. Output is deterministic.
std::string render_svg(const PlaneGraph& g, const RenderOptions& opt = {});

}  // namespace planeham
