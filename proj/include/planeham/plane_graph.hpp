#pragma once

#include <optional>
#include <utility>
#include <vector>

namespace planeham {

using VertexId = int;
using EdgeId = int;
using DartId = int;
using FaceId = int;

/// A face of a plane graph, traced with the face on the left of every dart.
struct Face {
    FaceId id = -1;
    std::vector<DartId> boundary;
    int length() const { return static_cast<int>(boundary.size()); }
    bool is_outer = false;
};

/// Connected plane multigraph stored as a rotation system.
///
/// Edge e owns the two darts 2e and 2e+1, so twin(d) = d ^ 1. Each vertex
/// keeps its darts in counterclockwise order. Faces are traced with the face
/// on the left of each dart: face_next(d) = rot_prev(twin(d)). Under this
/// convention bounded faces run counterclockwise and the outer face clockwise.
///
/// Instances are immutable after construction; every constructor validates the
/// twin involution, the rotation partition, connectivity and Euler's formula.
class PlaneGraph {
public:
    PlaneGraph() = default;

    /// Builds from dart rotations. Darts 0..2E-1 must each appear exactly once.
    /// The outer face is the face left of `outer_dart`, or the default choice
    /// (longest face, ties by smallest dart id) when absent.
    static PlaneGraph from_darts(int num_vertices, std::vector<std::vector<DartId>> rotations,
                                 std::optional<DartId> outer_dart = std::nullopt);

    int num_vertices() const { return static_cast<int>(rotation_.size()); }
    int num_edges() const { return static_cast<int>(origin_.size() / 2); }
    int num_darts() const { return static_cast<int>(origin_.size()); }
    int num_faces() const { return static_cast<int>(faces_.size()); }

    static DartId twin(DartId d) { return d ^ 1; }
    static EdgeId edge_of(DartId d) { return d >> 1; }

    VertexId origin(DartId d) const { return origin_[d]; }
    VertexId target(DartId d) const { return origin_[twin(d)]; }
    std::pair<VertexId, VertexId> endpoints(EdgeId e) const { return {origin_[2 * e], origin_[2 * e + 1]}; }
    VertexId other_end(EdgeId e, VertexId v) const;

    const std::vector<DartId>& rotation(VertexId v) const { return rotation_[v]; }
    int degree(VertexId v) const { return static_cast<int>(rotation_[v].size()); }
    int rotation_index(DartId d) const { return rot_pos_[d]; }
    DartId rot_next(DartId d) const;
    DartId rot_prev(DartId d) const;
    DartId face_next(DartId d) const { return rot_prev(twin(d)); }

    FaceId face_of(DartId d) const { return dart_face_[d]; }
    const std::vector<DartId>& face_darts(FaceId f) const { return faces_[f]; }
    int face_length(FaceId f) const { return static_cast<int>(faces_[f].size()); }
    std::vector<VertexId> face_vertices(FaceId f) const;
    std::vector<EdgeId> face_edges(FaceId f) const;
    FaceId outer_face() const { return outer_; }
    bool is_outer(FaceId f) const { return f == outer_; }

    /// Same rotation system with a different outer face. Face ids are unchanged.
    PlaneGraph with_outer_face(FaceId f) const;

    bool has_loops() const;
    bool has_parallel_edges() const;
    bool is_simple() const { return !has_loops() && !has_parallel_edges(); }
    bool is_cubic() const;
    int min_degree() const;
    int max_degree() const;
    bool is_bipartite() const;
    bool is_eulerian() const;

    /// Face incident to vertex v, vertex-index-sorted and deduplicated.
    std::vector<FaceId> faces_at(VertexId v) const;
    /// Edges between u and v.
    std::vector<EdgeId> edges_between(VertexId u, VertexId v) const;
    /// Face whose cyclic vertex sequence equals `cycle` in either direction.
    std::optional<FaceId> find_face(const std::vector<VertexId>& cycle) const;

private:
    void trace();
    void validate() const;

    std::vector<VertexId> origin_;
    std::vector<std::vector<DartId>> rotation_;
    std::vector<int> rot_pos_;
    std::vector<std::vector<DartId>> faces_;
    std::vector<FaceId> dart_face_;
    FaceId outer_ = -1;
};

/// Per-vertex counterclockwise neighbor lists, the user-facing input form.
/// An entry may carry a tag; equal tags on (u, v) and (v, u) pin which
/// occurrences form one edge when u and v are joined by parallel edges.
struct RotationEntry {
    VertexId neighbor = -1;
    int tag = -1;
};
using NeighborRotations = std::vector<std::vector<RotationEntry>>;

NeighborRotations untagged(const std::vector<std::vector<VertexId>>& lists);

/// Validated construction from neighbor lists. Edge ids follow the first
/// occurrence scanning vertices in ascending order, so the builder is
/// deterministic. `outer_boundary`, when given, names the outer face by its
/// cyclic vertex sequence.
PlaneGraph build_plane_graph(const NeighborRotations& rotations,
                             const std::optional<std::vector<VertexId>>& outer_boundary = std::nullopt);
PlaneGraph build_plane_graph(const std::vector<std::vector<VertexId>>& rotations,
                             const std::optional<std::vector<VertexId>>& outer_boundary = std::nullopt);

/// Neighbor lists of g, tagged with edge ids on parallel edges so that
/// build_plane_graph reproduces g's rotation system exactly.
NeighborRotations to_neighbor_rotations(const PlaneGraph& g);

std::vector<Face> trace_faces(const PlaneGraph& g);

}  // namespace planeham
