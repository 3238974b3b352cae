#pragma once

#include <utility>
#include <vector>

#include "planeham/plane_graph.hpp"

namespace planeham {

/// Abstract simple undirected graph with sorted adjacency lists.
struct SimpleGraph {
    std::vector<std::vector<int>> adj;

    SimpleGraph() = default;
    explicit SimpleGraph(int n) : adj(n) {}

    int num_vertices() const { return static_cast<int>(adj.size()); }
    int num_edges() const;
    /// Adds uv unless it is a loop or already present.
    void add_edge(int u, int v);
    bool adjacent(int u, int v) const;
    std::vector<std::pair<int, int>> edges() const;
    bool is_connected() const;
    bool is_tree() const { return is_connected() && num_edges() == num_vertices() - 1; }
    bool is_bipartite() const;
};

/// Underlying simple graph of a plane multigraph (loops and parallels dropped).
SimpleGraph underlying_simple(const PlaneGraph& g);

/// Minimum number of vertices whose removal disconnects the graph, computed
/// by unit-capacity max-flow between non-adjacent pairs; |V| - 1 for complete
/// graphs. Requires a connected graph on at least two vertices.
int vertex_connectivity(const SimpleGraph& g);

/// Number of internally vertex-disjoint s-t paths for non-adjacent s, t.
int local_vertex_connectivity(const SimpleGraph& g, int s, int t, int stop_at = -1);

}  // namespace planeham
