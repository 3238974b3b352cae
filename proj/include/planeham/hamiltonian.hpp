#pragma once

#include <optional>
#include <string>
#include <vector>

#include "planeham/face_trees.hpp"
#include "planeham/plane_graph.hpp"
#include "planeham/transforms.hpp"

namespace planeham {

/// A Hamiltonian cycle with its face sides.
struct HamCycle {
    std::vector<EdgeId> edges;  // in cyclic order
    std::vector<FaceId> interior_faces;
    std::vector<FaceId> exterior_faces;
};

struct HamVerification {
    bool ok = false;
    std::string violation;
    std::vector<VertexId> unvisited;
    std::optional<HamCycle> cycle;  // set when ok
};

/// Edges may come in any order. Never throws for bad cycles.
HamVerification verify_hamiltonian(const PlaneGraph& g, const std::vector<EdgeId>& edges);
/// Same, throwing a verification error on failure.
HamCycle require_hamiltonian(const PlaneGraph& g, const std::vector<EdgeId>& edges);

/// Backtracking from vertex 0, darts tried in ascending id order, with degree
/// and reachability pruning. Throws a guard error when |V| > guard.
std::optional<HamCycle> brute_force_hamiltonian(const PlaneGraph& g, int guard = 32);

/// Cycle of g from a face tree of H = g/Q: the edges on exactly one of the
/// selected faces (Q faces of proper vertices, Qc faces of T). The
/// face-side conditions are re-checked from the cycle before return.
HamCycle lift_face_tree(const PlaneGraph& g, const Contraction& c, const FaceTree& t);

/// Same cycle assembled by following the A-trail of H_T through each Q face.
std::vector<EdgeId> lift_face_tree_atrail(const PlaneGraph& g, const Contraction& c, const FaceTree& t);

struct Projection {
    std::optional<FaceTree> tree;
    std::string violation;
    EdgeId shared_edge = -1;  // g edge between two interior Qc faces, if that is the failure
    std::vector<FaceTreeViolation> tree_violations;
};

/// U = H vertices whose Q face is inside the cycle, T = H faces whose Qc
/// face is inside. Requires a Hamiltonian cycle.
Projection project_hamiltonian(const PlaneGraph& g, const Contraction& c, const std::vector<EdgeId>& cycle);

/// Independent set S of size (n+2)/4 whose complement induces a tree.
struct PayanCertificate {
    std::vector<VertexId> s;
    std::vector<EdgeId> tree_edges;
};

/// Exhaustive search in lexicographic order. Requires cubic, n = 2 mod 4,
/// n <= guard and cyclic edge-connectivity >= 4.
PayanCertificate payan_set(const PlaneGraph& g0, int guard = 22);
/// Re-checks independence, size and the tree from scratch.
bool is_payan_certificate(const PlaneGraph& g0, const PayanCertificate& cert);

struct PayanCycle {
    Leapfrog lf;
    PayanCertificate certificate;
    HamCycle cycle;
};

/// Boundary of the union of the hexagons of Lf(g0) for vertices outside S.
PayanCycle leapfrog_ham_payan(const PlaneGraph& g0, int guard = 22);

enum class Strategy { faces, payan, brute };

struct PipelineReport {
    Strategy strategy = Strategy::faces;
    std::vector<std::string> notes;
    std::optional<FacialTwoFactor> q;
    std::optional<PlaneGraph> h;
    std::optional<FaceTreeMode> mode;
    std::optional<FaceTree> face_tree;
    int lattice_triangles = 0;
    std::optional<PayanCertificate> payan;
    bool rerooted = false;
};

struct PipelineResult {
    PlaneGraph graph;  // Lf(g0), re-rooted when needed
    HamCycle cycle;
    PipelineReport report;
};

struct PipelineOptions {
    int payan_guard = 22;
    int brute_guard = 32;
};

/// Hamiltonian cycle of Lf(g0). Every returned cycle has passed
/// verify_hamiltonian.
PipelineResult hamiltonian_pipeline(const PlaneGraph& g0, Strategy strategy, const PipelineOptions& opt = {});

struct CyclicCheck {
    int k1 = 0;  // cyclic edge-connectivity of g0
    int k2 = 0;  // vertex connectivity of Lf(g0)/Q
    bool equal = false;
};

CyclicCheck lemma_cyclic_check(const PlaneGraph& g0);

std::string to_string(Strategy s);
std::optional<Strategy> parse_strategy(const std::string& s);

}  // namespace planeham
