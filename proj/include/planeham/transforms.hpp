#pragma once

#include <optional>
#include <vector>

#include "planeham/plane_graph.hpp"
#include "planeham/simple_graph.hpp"

namespace planeham {

/// A set of vertex-disjoint facial cycles covering every vertex.
struct FacialTwoFactor {
    std::vector<FaceId> cycles;            // face ids, ascending
    std::vector<int> vertex_cover_map;     // vertex -> index into cycles
};

/// Validates `faces` as a facial 2-factor of g. Throws invalid_input naming
/// the first offending face or vertex.
FacialTwoFactor make_facial_two_factor(const PlaneGraph& g, std::vector<FaceId> faces);
bool is_facial_two_factor(const PlaneGraph& g, const std::vector<FaceId>& faces);

/// Tr(g) with bookkeeping. Corner vertex c of Tr(g) sits at the origin of
/// dart c of g; edges 0..E-1 of Tr(g) are the old edges (same dart ids).
struct Truncation {
    PlaneGraph graph;
    std::vector<FaceId> vertex_cycle;    // g-vertex -> face C_v of Tr(g)
    std::vector<FaceId> face_of_face;    // g-face -> the matching face of Tr(g)
};

/// Every vertex replaced by a cycle through its edge-ends. Requires minimum
/// degree 3.
PlaneGraph truncate(const PlaneGraph& g);
Truncation truncate_detailed(const PlaneGraph& g, int min_degree = 3);

struct Leapfrog {
    PlaneGraph graph;
    FacialTwoFactor q;                        // cycles for the faces of the base graph
    std::vector<FaceId> q_face_of_base_face;  // base face -> face of Lf
    std::vector<FaceId> face_of_base_vertex;  // base vertex -> face of Lf (the hexagon in the cubic case)
};

/// Lf(g) = Tr(dual(g)). Requires at least two edges.
Leapfrog leapfrog(const PlaneGraph& g);

/// Radial graph on vertices 0..V-1 followed by faces. The restricted form
/// keeps only the listed vertices and faces; node ids then follow the order
/// of `vertices` then `faces`.
struct RadialGraph {
    SimpleGraph graph;
    std::vector<VertexId> vertices;  // node -> vertex, for the first |vertices| nodes
    std::vector<FaceId> faces;       // node - |vertices| -> face
};
RadialGraph radial_graph(const PlaneGraph& h);
RadialGraph radial_graph(const PlaneGraph& h, const std::vector<VertexId>& vertices, const std::vector<FaceId>& faces);
/// The same graph embedded: node ids as in radial_graph(h), one edge per
/// corner (edge d joins origin(d) to face_of(d)). Every face is a 4-cycle.
PlaneGraph radial_embedding(const PlaneGraph& h);

/// Bookkeeping between g and H = g/Q.
struct ContractionMap {
    std::vector<VertexId> forward;         // g-vertex -> H-vertex
    std::vector<FaceId> q_face;            // H-vertex -> Q face of g
    std::vector<EdgeId> edge_to_g;         // H-edge -> g-edge (darts keep parity)
    std::vector<EdgeId> edge_from_g;       // g-edge -> H-edge, -1 for Q edges and loops
    std::vector<FaceId> face_to_g;         // H-face -> Qc face of g
    std::vector<FaceId> face_from_g;       // g-face -> H-face, -1 for Q faces
    std::vector<EdgeId> deleted_loops;     // g-edges that became loops

    DartId dart_to_g(DartId h_dart) const { return 2 * edge_to_g[h_dart >> 1] + (h_dart & 1); }
    DartId dart_from_g(DartId g_dart) const
    {
        const EdgeId e = edge_from_g[g_dart >> 1];
        return e < 0 ? -1 : 2 * e + (g_dart & 1);
    }
};

struct Contraction {
    PlaneGraph h;
    ContractionMap map;
};

/// Contracts every Q face of cubic g to one vertex. H-vertex i is q.cycles[i].
/// The outer face of g must be a Qc face (see reroot_to_qc).
Contraction contract_factor(const PlaneGraph& g, const FacialTwoFactor& q);

/// Same graph with its outer face moved off Q when needed: the Qc face across
/// the first edge of the old outer face. Returns nullopt when no change.
std::optional<PlaneGraph> reroot_to_qc(const PlaneGraph& g, const FacialTwoFactor& q);

/// All facial 2-factors by exact cover, ordered lexicographically by face ids.
std::vector<FacialTwoFactor> enumerate_facial_two_factors(const PlaneGraph& g, std::size_t limit = 100000);

struct LeapfrogRecognition {
    PlaneGraph base;
    FacialTwoFactor q;
};

/// First facial 2-factor whose complementary faces are all hexagons and whose
/// reconstructed base graph leapfrogs back to g.
std::optional<LeapfrogRecognition> recognize_leapfrog(const PlaneGraph& g);

}  // namespace planeham
