#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "planeham/error.hpp"
#include "planeham/face_trees.hpp"
#include "planeham/hamiltonian.hpp"
#include "planeham/plane_graph.hpp"

namespace planeham {

// ---------------------------------------------------------------------------
// Text rotation format
//
//   # comment
//   0: 1 2 3          counterclockwise neighbours of vertex 0
//   1: 0 3@7 3@8      "@tag" pins parallel edges (same tag at both ends)
//   outer: 0 1 2      outer face by its boundary, or "outer: 4:1" by a dart
//
// Vertex lines may come in any order but must cover 0..n-1.

PlaneGraph parse_text_graph(const std::string& text);
std::string write_text_graph(const PlaneGraph& g);

// ---------------------------------------------------------------------------
// planar_code

/// Decodes a planar_code stream (header, then per graph n and clockwise
/// 1-based neighbour lists ended by 0; a leading 0 byte switches the record
/// to 2-byte little-endian values). Errors name the byte offset.
std::vector<PlaneGraph> decode_planar_code(const std::string& bytes);
/// One-byte records when n <= 255, else the 2-byte form.
std::string encode_planar_code(const std::vector<PlaneGraph>& graphs);

/// "catalog:NAME", a planar_code file (detected by header) or a text file.
std::vector<PlaneGraph> load_graphs(const std::string& source);
/// First graph of load_graphs.
PlaneGraph load_graph(const std::string& source);
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& data);

// ---------------------------------------------------------------------------
// Dart references that do not depend on edge numbering

/// "v:i" is rotation(v)[i].
std::string dart_ref(const PlaneGraph& g, DartId d);
DartId parse_dart_ref(const PlaneGraph& g, const std::string& ref);

// ---------------------------------------------------------------------------
// Certificates

struct CertificateBundle {
    std::string input_id;
    std::string strategy;
    PlaneGraph graph;                    // the graph the certificate lives on
    std::optional<std::vector<EdgeId>> cycle;
    std::optional<FaceTree> face_tree;
    std::optional<ErrorKind> failure_kind;
    std::string failure;
    double elapsed_ms = 0;
};

/// Line-oriented: header, key lines, the embedded graph, then the cycle as
/// a dart sequence and the face tree with faces named by one of their darts.
std::string write_certificate(const CertificateBundle& b);
/// Parses one bundle; with several bundles in a stream use read_certificates.
CertificateBundle read_certificate(const std::string& text);
std::vector<CertificateBundle> read_certificates(const std::string& text);

struct CertificateCheck {
    bool ok = false;
    std::string message;
};

/// Re-checks the stored cycle and face tree against the stored graph only.
CertificateCheck verify_certificate(const CertificateBundle& b);

/// Cycle file: whitespace-separated darts "v:i" or bare edge ids.
std::vector<EdgeId> parse_edge_list(const PlaneGraph& g, const std::string& text);
/// Face-tree file: "faces:", "proper:" and "quasi:" lines; faces as darts
/// "v:i" or bare face ids.
FaceTree parse_face_tree(const PlaneGraph& g, const std::string& text);

}  // namespace planeham
