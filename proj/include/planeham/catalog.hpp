#pragma once

#include <string>
#include <utility>
#include <vector>

#include "planeham/plane_graph.hpp"

namespace planeham {

struct CatalogEntry {
    std::string name;
    PlaneGraph graph;
    std::string notes;
};

/// Fixture by name; throws invalid_input for unknown names.
CatalogEntry catalog(const std::string& name);
std::vector<std::string> catalog_names();

/// Straight-line drawing to rotation system: neighbors sorted by angle.
PlaneGraph graph_from_drawing(const std::vector<std::pair<double, double>>& coords,
                              const std::vector<std::pair<int, int>>& edges,
                              const std::vector<VertexId>& outer_boundary);

/// Vertex sets of the seven factor faces drawn in the 28-vertex fixture.
std::vector<std::vector<VertexId>> figure1_q0_vertex_sets();
/// The drawn Hamiltonian cycle v0 v1 ... v27 v0 as edge ids of figure1_g0.
std::vector<EdgeId> figure1_c0_edges(const PlaneGraph& g0);

/// n-prism: a_i = i and b_i = n + i (0-based), a_i b_i rungs, outer ring a.
PlaneGraph prism(int n);

}  // namespace planeham
