#pragma once

#include <optional>
#include <string>
#include <vector>

#include "planeham/plane_graph.hpp"

namespace planeham {

/// A set T of bounded faces with the vertex split into proper (U) and quasi.
struct FaceTree {
    std::vector<FaceId> faces;     // ascending
    std::vector<VertexId> proper;  // ascending
    std::vector<VertexId> quasi;   // ascending

    bool is_spanning() const { return quasi.empty(); }
    bool operator==(const FaceTree&) const = default;
};

struct FaceTreeViolation {
    enum class Kind {
        missing_face,
        outer_face,
        bad_partition,
        shared_edge,
        uncovered_vertex,
        degree_mismatch,
        radial_cycle,
        radial_disconnected,
    };
    Kind kind;
    std::vector<int> witness;  // faces, edge, or vertices depending on kind
    std::string message;
};

std::vector<FaceTreeViolation> validate_face_tree(const PlaneGraph& h, const FaceTree& t);
bool is_face_tree(const PlaneGraph& h, const FaceTree& t);

enum class FaceTreeMode { odd, even_degree4, even_interior };

/// One triangle contraction made while building.
struct BuildStep {
    PlaneGraph before;
    std::vector<EdgeId> scope;        // triangle of `before` the step worked in
    FaceId face = -1;                 // contracted face of `before`
    PlaneGraph after;
    std::vector<EdgeId> scope_after;  // same triangle in `after`
    FaceId original_face = -1;        // the face of the input graph it maps back to
};

struct FaceTreeBuild {
    FaceTree tree;
    std::vector<BuildStep> steps;
    VertexId quasi_vertex = -1;  // even_degree4 only
    bool exceptional_k4 = false;
};

/// Constructs a (quasi) spanning tree of triangular faces by repeated
/// triangle contraction. Preconditions of the mode are checked first and
/// named in the hypothesis error; the result is validated before return.
FaceTreeBuild build_face_tree(const PlaneGraph& h, FaceTreeMode mode);

/// Exhaustive search over edge-disjoint sets of bounded faces. Throws a guard
/// error when h has more than `guard` bounded faces.
std::optional<FaceTree> brute_force_face_tree(const PlaneGraph& h, bool require_spanning, int guard = 24);

/// Closed trail as a dart sequence plus the splitting (1 or 2) it induces at
/// every vertex.
struct ATrail {
    std::vector<DartId> trail;
    std::vector<int> splitting;
};

/// Closed trail whose consecutive edges are rotation neighbors in the
/// subgraph formed by its own edges. With `all_edges`, it must use every edge.
bool is_a_trail(const PlaneGraph& h, const std::vector<DartId>& trail, bool all_edges);

/// Same closed trail up to the starting dart and direction.
bool same_closed_trail(const std::vector<DartId>& a, const std::vector<DartId>& b);

/// The A-trail of the subgraph H_T. Requires a valid FaceTree.
ATrail face_tree_to_a_trail(const PlaneGraph& h, const FaceTree& t);

/// Faces of color 2 under the 2-face-coloring of the trail's subgraph (outer
/// face color 1); quasi vertices are those where the trail turns inside
/// color-2 faces.
FaceTree a_trail_to_face_tree(const PlaneGraph& h, const std::vector<DartId>& trail);

/// Backtracking over the two non-crossing transition systems at each vertex.
std::optional<ATrail> find_a_trail(const PlaneGraph& h);

}  // namespace planeham
