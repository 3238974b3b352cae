#pragma once

#include <optional>
#include <vector>

#include "planeham/plane_graph.hpp"
#include "planeham/simple_graph.hpp"

namespace planeham {

// ---------------------------------------------------------------------------
// Duality

/// Dual map: dual vertex f is primal face f and dual dart d crosses primal
/// dart d, so edge ids coincide. The rotation at dual vertex f is the
/// boundary of face f. The faces of the dual are in bijection with primal
/// vertices; the dual's outer face is the one for the smallest vertex on the
/// primal outer face.
PlaneGraph dual(const PlaneGraph& g);

/// Face of dual(g) that corresponds to primal vertex v.
FaceId dual_face_of_vertex(const PlaneGraph& g, const PlaneGraph& dual_graph, VertexId v);

// ---------------------------------------------------------------------------
// Cycles and regions

struct RegionPartition {
    std::vector<EdgeId> cycle;
    std::vector<VertexId> cycle_vertices;
    std::vector<VertexId> interior_vertices;
    std::vector<VertexId> exterior_vertices;
    std::vector<FaceId> interior_faces;
    std::vector<FaceId> exterior_faces;

    bool is_separating() const { return !interior_vertices.empty() && !exterior_vertices.empty(); }
};

/// Vertices of `edges` if they form a single simple cycle (digons allowed),
/// in traversal order; nullopt otherwise.
std::optional<std::vector<VertexId>> cycle_vertex_order(const PlaneGraph& g, const std::vector<EdgeId>& edges);

/// Splits faces and vertices by a cycle. The side holding the outer face is
/// the exterior.
RegionPartition region_partition(const PlaneGraph& g, const std::vector<EdgeId>& cycle);

// ---------------------------------------------------------------------------
// Connectivity measures

/// True when some two vertex-disjoint cycles exist.
bool has_two_disjoint_cycles(const PlaneGraph& g);

/// Cyclic edge-connectivity of a cubic graph by exhaustive search over edge
/// subsets of size at most `max_cut`. Requires |V| >= 6 and two disjoint
/// cycles; other inputs are rejected rather than assigned a value.
int cyclic_edge_connectivity(const PlaneGraph& g, int max_cut = 5);

/// Vertex connectivity of the underlying simple graph.
int vertex_connectivity(const PlaneGraph& g);

// ---------------------------------------------------------------------------
// Face colorings

enum class FaceColoringMode { two_color, three_color };

/// Proper face coloring with colors 1..2 or 1..3. Two-coloring puts the outer
/// face in color 1; three-coloring numbers the classes by their smallest face.
std::vector<int> face_coloring(const PlaneGraph& g, FaceColoringMode mode);

bool is_proper_face_coloring(const PlaneGraph& g, const std::vector<int>& colors);

// ---------------------------------------------------------------------------
// Isomorphism of plane maps

/// Minimal BFS code over every starting dart and both orientations. Two maps
/// are isomorphic (allowing reflection) iff their codes are equal. With
/// `respect_outer` the outer face is part of the structure.
std::vector<int> canonical_code(const PlaneGraph& g, bool respect_outer);

bool isomorphic(const PlaneGraph& a, const PlaneGraph& b, bool respect_outer = false);

// ---------------------------------------------------------------------------
// Surgery shared by the contraction-based constructions

/// Result of deleting and contracting edges, with maps back to the input.
struct Surgery {
    PlaneGraph graph;
    std::vector<VertexId> old_to_new_vertex;  // -1 for removed vertices
    std::vector<EdgeId> new_to_old_edge;
    std::vector<EdgeId> old_to_new_edge;      // -1 for removed edges
    std::vector<EdgeId> deleted_loops;        // old ids of edges that became loops
};

/// Deletes `removed` edges, drops vertices left isolated, then contracts the
/// forest `contracted` and deletes the loops this creates. Throws if the
/// contracted set contains a cycle or the result is disconnected.
Surgery edit_graph(const PlaneGraph& g, const std::vector<EdgeId>& removed, const std::vector<EdgeId>& contracted);

}  // namespace planeham
