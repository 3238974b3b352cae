#pragma once

#include <array>
#include <optional>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "planeham/planar_core.hpp"
#include "planeham/plane_graph.hpp"

namespace planeham {

enum class SepKind { digon, triangle };

/// A 2- or 3-cycle with at least one vertex inside. For the outer face the
/// inside is everything else.
struct SepCycle {
    SepKind kind = SepKind::triangle;
    std::vector<EdgeId> edges;               // class representatives, ascending
    std::vector<VertexId> vertices;          // ascending
    std::vector<VertexId> interior_vertices; // ascending
    std::vector<FaceId> interior_faces;      // ascending
    bool is_outer_face = false;

    int interior_vertex_count() const { return static_cast<int>(interior_vertices.size()); }
};

struct TriangleLattice {
    std::vector<SepCycle> triangles;
    std::vector<SepCycle> digons;
    /// (i, j) with triangles[i] strictly below triangles[j].
    std::vector<std::pair<int, int>> order;
    /// direct_successors[j]: the triangles covered by triangles[j].
    std::vector<std::vector<int>> direct_successors;
    /// Edge -> smallest edge of its parallel class (edges bounding empty digons).
    std::vector<EdgeId> edge_class;

    bool below(int i, int j) const;
    /// Index of the triangle through these three edges (any class member), if
    /// that triangle has an interior vertex.
    std::optional<int> find_triangle(const std::vector<EdgeId>& edges) const;

    std::vector<boost::dynamic_bitset<>> vertex_sets;  // per triangle
    std::vector<boost::dynamic_bitset<>> face_sets;    // per triangle
};

TriangleLattice build_triangle_lattice(const PlaneGraph& h);

struct InvariantWitness {
    enum class Kind { too_many_successors, digon_inside } kind = Kind::too_many_successors;
    int triangle = -1;             // index into the lattice
    std::vector<int> successors;   // for too_many_successors
    int digon = -1;                // for digon_inside
};

struct InvariantReport {
    bool holds = true;
    std::optional<InvariantWitness> witness;
    TriangleLattice lattice;
};

/// Whole-graph check: every triangle, the outer face included when it is a
/// triangle. Witness search visits larger interiors first.
InvariantReport check_invariant_property(const PlaneGraph& h);
/// Scope check: the triangle through `triangle_edges` and every triangle
/// inside it. Throws invalid_input if the edges are not a triangle of h.
InvariantReport check_invariant_property(const PlaneGraph& h, const std::vector<EdgeId>& triangle_edges);

/// Edges of a 3-cycle on the given vertices, one per pair, smallest ids.
std::optional<std::vector<EdgeId>> triangle_edges(const PlaneGraph& h, VertexId a, VertexId b, VertexId c);

struct TriangleContraction {
    PlaneGraph graph;
    FaceId face = -1;                 // contracted face of the input
    std::array<VertexId, 3> triple{}; // its vertices
    VertexId merged = -1;             // their image
    Surgery surgery;
};

/// Merges the three vertices of a bounded triangular face; loops are deleted.
TriangleContraction contract_triangle(const PlaneGraph& h, FaceId t);

struct TriangleSelection {
    FaceId face = -1;
    TriangleContraction contraction;
    std::vector<EdgeId> scope_after;  // the scope triangle's edges in the contracted graph
    int candidates_tried = 0;
};

/// A bounded triangular face inside the scope triangle sharing at most one
/// vertex with it, whose contraction keeps the scope's invariant property
/// (re-checked). Requires the invariant property on the scope and at least
/// two interior vertices.
TriangleSelection select_contractible_triangle(const PlaneGraph& h, const std::vector<EdgeId>& scope);

struct Degree4Reduction {
    PlaneGraph graph;
    VertexId v0 = -1;
    std::array<FaceId, 2> triangles{};  // faces v0v4v5 and v0v6v7 of the input
    Surgery surgery;
};

/// Removes degree-4 vertex v0 and identifies v4 with v5 and v6 with v7, where
/// the faces are face_of(rotation(v0)[pairing]) and face_of(rotation(v0)[pairing + 2]).
/// Every hypothesis is checked and named; the result is re-checked for the
/// invariant property.
Degree4Reduction degree4_reduction(const PlaneGraph& h, VertexId v0, int pairing);

/// The pairing (0 or 1) whose two faces avoid the outer face's edges, if any.
std::optional<int> degree4_pairing(const PlaneGraph& h, VertexId v0);

}  // namespace planeham
