#include "planeham/transforms.hpp"

#include <algorithm>

#include "planeham/error.hpp"
#include "planeham/planar_core.hpp"

namespace planeham {

namespace {

bool simple_boundary(const PlaneGraph& g, FaceId f)
{
    auto vs = g.face_vertices(f);
    std::sort(vs.begin(), vs.end());
    return std::adjacent_find(vs.begin(), vs.end()) == vs.end();
}

}  // namespace

FacialTwoFactor make_facial_two_factor(const PlaneGraph& g, std::vector<FaceId> faces)
{
    std::sort(faces.begin(), faces.end());
    FacialTwoFactor q;
    q.vertex_cover_map.assign(g.num_vertices(), -1);
    for (std::size_t i = 0; i < faces.size(); ++i) {
        const FaceId f = faces[i];
        if (f < 0 || f >= g.num_faces()) fail(ErrorKind::invalid_input, "face " + std::to_string(f) + " does not exist");
        if (!simple_boundary(g, f))
            fail(ErrorKind::invalid_input, "face " + std::to_string(f) + " is not bounded by a simple cycle");
        for (VertexId v : g.face_vertices(f)) {
            if (q.vertex_cover_map[v] >= 0)
                fail(ErrorKind::invalid_input, "vertex " + std::to_string(v) + " lies on two factor faces");
            q.vertex_cover_map[v] = static_cast<int>(i);
        }
    }
    for (VertexId v = 0; v < g.num_vertices(); ++v)
        if (q.vertex_cover_map[v] < 0)
            fail(ErrorKind::invalid_input, "vertex " + std::to_string(v) + " is not covered by the factor");
    q.cycles = std::move(faces);
    return q;
}

bool is_facial_two_factor(const PlaneGraph& g, const std::vector<FaceId>& faces)
{
    try {
        make_facial_two_factor(g, faces);
        return true;
    } catch (const Error&) {
        return false;
    }
}

// ---------------------------------------------------------------------------
// Truncation and leapfrog

Truncation truncate_detailed(const PlaneGraph& g, int min_degree)
{
    if (g.num_edges() == 0) fail(ErrorKind::invalid_input, "truncation of an edgeless graph");
    for (VertexId v = 0; v < g.num_vertices(); ++v)
        if (g.degree(v) < min_degree)
            fail(ErrorKind::invalid_input,
                 "vertex " + std::to_string(v) + " has degree " + std::to_string(g.degree(v)) + " < " +
                     std::to_string(min_degree));

    const int corners = g.num_darts();
    const int legacy = g.num_edges();
    // cycle edge for the angle between dart d and rot_next(d) has even dart d -> rot_next(d)
    std::vector<EdgeId> angle_edge(corners, -1);
    EdgeId next_edge = legacy;
    for (VertexId v = 0; v < g.num_vertices(); ++v)
        for (DartId d : g.rotation(v)) angle_edge[d] = next_edge++;

    std::vector<std::vector<DartId>> rot(corners);
    for (DartId c = 0; c < corners; ++c) {
        const DartId toward_next = 2 * angle_edge[c];
        const DartId toward_prev = 2 * angle_edge[g.rot_prev(c)] + 1;
        rot[c] = {c, toward_next, toward_prev};
    }

    Truncation t;
    t.graph = PlaneGraph::from_darts(corners, std::move(rot), g.face_darts(g.outer_face()).front());
    t.vertex_cycle.resize(g.num_vertices());
    for (VertexId v = 0; v < g.num_vertices(); ++v)
        t.vertex_cycle[v] = t.graph.face_of(2 * angle_edge[g.rotation(v).front()]);
    t.face_of_face.resize(g.num_faces());
    for (FaceId f = 0; f < g.num_faces(); ++f) t.face_of_face[f] = t.graph.face_of(g.face_darts(f).front());
    return t;
}

PlaneGraph truncate(const PlaneGraph& g) { return truncate_detailed(g, 3).graph; }

Leapfrog leapfrog(const PlaneGraph& g)
{
    if (g.num_edges() < 2) fail(ErrorKind::invalid_input, "leapfrog needs at least two edges");
    const PlaneGraph d = dual(g);
    Truncation t = truncate_detailed(d, 2);
    Leapfrog lf;
    lf.q_face_of_base_face = t.vertex_cycle;
    lf.face_of_base_vertex.resize(g.num_vertices());
    for (VertexId v = 0; v < g.num_vertices(); ++v)
        lf.face_of_base_vertex[v] = t.graph.face_of(PlaneGraph::twin(g.rotation(v).front()));
    lf.q = make_facial_two_factor(t.graph, t.vertex_cycle);
    lf.graph = std::move(t.graph);
    return lf;
}

// ---------------------------------------------------------------------------
// Radial graphs

RadialGraph radial_graph(const PlaneGraph& h)
{
    std::vector<VertexId> vs(h.num_vertices());
    std::vector<FaceId> fs(h.num_faces());
    for (int i = 0; i < h.num_vertices(); ++i) vs[i] = i;
    for (int i = 0; i < h.num_faces(); ++i) fs[i] = i;
    return radial_graph(h, vs, fs);
}

PlaneGraph radial_embedding(const PlaneGraph& h)
{
    const int n = h.num_vertices();
    std::vector<std::vector<DartId>> rot(n + h.num_faces());
    // face_of(d) sits between d and rot_next(d), and a face's corners come in
    // boundary order, so both rotations stay counterclockwise
    for (VertexId v = 0; v < n; ++v)
        for (DartId d : h.rotation(v)) rot[v].push_back(2 * d);
    for (FaceId f = 0; f < h.num_faces(); ++f)
        for (DartId d : h.face_darts(f)) rot[n + f].push_back(2 * d + 1);
    return PlaneGraph::from_darts(n + h.num_faces(), std::move(rot));
}

RadialGraph radial_graph(const PlaneGraph& h, const std::vector<VertexId>& vertices, const std::vector<FaceId>& faces)
{
    std::vector<int> vnode(h.num_vertices(), -1);
    RadialGraph r;
    r.vertices = vertices;
    r.faces = faces;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        const VertexId v = vertices[i];
        if (v < 0 || v >= h.num_vertices()) fail(ErrorKind::invalid_input, "vertex " + std::to_string(v) + " not in graph");
        if (vnode[v] >= 0) fail(ErrorKind::invalid_input, "vertex " + std::to_string(v) + " listed twice");
        vnode[v] = static_cast<int>(i);
    }
    const int offset = static_cast<int>(vertices.size());
    r.graph = SimpleGraph(offset + static_cast<int>(faces.size()));
    std::vector<char> seen_face(h.num_faces(), 0);
    for (std::size_t j = 0; j < faces.size(); ++j) {
        const FaceId f = faces[j];
        if (f < 0 || f >= h.num_faces()) fail(ErrorKind::invalid_input, "face " + std::to_string(f) + " not in graph");
        if (seen_face[f]) fail(ErrorKind::invalid_input, "face " + std::to_string(f) + " listed twice");
        seen_face[f] = 1;
        for (VertexId v : h.face_vertices(f))
            if (vnode[v] >= 0) r.graph.add_edge(vnode[v], offset + static_cast<int>(j));
    }
    return r;
}

// ---------------------------------------------------------------------------
// Contraction of a facial 2-factor

std::optional<PlaneGraph> reroot_to_qc(const PlaneGraph& g, const FacialTwoFactor& q)
{
    if (!std::binary_search(q.cycles.begin(), q.cycles.end(), g.outer_face())) return std::nullopt;
    const DartId d = g.face_darts(g.outer_face()).front();
    return g.with_outer_face(g.face_of(PlaneGraph::twin(d)));
}

Contraction contract_factor(const PlaneGraph& g, const FacialTwoFactor& q)
{
    if (!g.is_cubic()) fail(ErrorKind::invalid_input, "contraction of a facial 2-factor needs a cubic graph");
    if (!is_facial_two_factor(g, q.cycles)) fail(ErrorKind::invalid_input, "not a facial 2-factor of the graph");
    if (std::binary_search(q.cycles.begin(), q.cycles.end(), g.outer_face()))
        fail(ErrorKind::hypothesis, "outer face is a factor face; re-root to a complementary face first");

    const int m = g.num_edges();
    std::vector<char> q_edge(m, 0);
    for (FaceId f : q.cycles)
        for (EdgeId e : g.face_edges(f)) q_edge[e] = 1;

    Contraction c;
    ContractionMap& map = c.map;
    map.forward.resize(g.num_vertices());
    for (VertexId v = 0; v < g.num_vertices(); ++v) map.forward[v] = q.vertex_cover_map[v];
    map.q_face = q.cycles;
    map.edge_from_g.assign(m, -1);
    for (EdgeId e = 0; e < m; ++e) {
        if (q_edge[e]) continue;
        const auto [a, b] = g.endpoints(e);
        if (map.forward[a] == map.forward[b]) {
            map.deleted_loops.push_back(e);
            continue;
        }
        map.edge_from_g[e] = static_cast<EdgeId>(map.edge_to_g.size());
        map.edge_to_g.push_back(e);
    }

    auto leaving = [&](VertexId x) {
        for (DartId d : g.rotation(x))
            if (!q_edge[PlaneGraph::edge_of(d)]) return d;
        fail(ErrorKind::invalid_input, "vertex " + std::to_string(x) + " has no edge leaving its factor face");
    };

    std::vector<std::vector<DartId>> rot(q.cycles.size());
    for (std::size_t i = 0; i < q.cycles.size(); ++i)
        for (DartId d : g.face_darts(q.cycles[i])) {
            const DartId l = leaving(g.origin(d));
            if (map.edge_from_g[PlaneGraph::edge_of(l)] >= 0) rot[i].push_back(map.dart_from_g(l));
        }

    std::optional<DartId> outer;
    for (DartId d : g.face_darts(g.outer_face()))
        if (map.dart_from_g(d) >= 0) {
            outer = map.dart_from_g(d);
            break;
        }
    c.h = PlaneGraph::from_darts(static_cast<int>(q.cycles.size()), std::move(rot), outer);

    map.face_to_g.assign(c.h.num_faces(), -1);
    map.face_from_g.assign(g.num_faces(), -1);
    for (FaceId f = 0; f < c.h.num_faces(); ++f) map.face_to_g[f] = g.face_of(map.dart_to_g(c.h.face_darts(f).front()));
    for (FaceId f = 0; f < g.num_faces(); ++f) {
        if (std::binary_search(q.cycles.begin(), q.cycles.end(), f)) continue;
        for (DartId d : g.face_darts(f))
            if (map.dart_from_g(d) >= 0) {
                map.face_from_g[f] = c.h.face_of(map.dart_from_g(d));
                break;
            }
    }
    return c;
}

// ---------------------------------------------------------------------------
// Enumeration and recognition

std::vector<FacialTwoFactor> enumerate_facial_two_factors(const PlaneGraph& g, std::size_t limit)
{
    const int n = g.num_vertices();
    std::vector<std::vector<FaceId>> faces_at(n);
    std::vector<std::vector<VertexId>> verts(g.num_faces());
    for (FaceId f = 0; f < g.num_faces(); ++f) {
        if (!simple_boundary(g, f)) continue;
        verts[f] = g.face_vertices(f);
        for (VertexId v : verts[f]) faces_at[v].push_back(f);
    }
    for (auto& fs : faces_at) std::sort(fs.begin(), fs.end());

    std::vector<FacialTwoFactor> out;
    std::vector<char> covered(n, 0);
    std::vector<FaceId> chosen;
    auto search = [&](auto&& self) -> void {
        if (out.size() >= limit) return;
        VertexId v = 0;
        while (v < n && covered[v]) ++v;
        if (v == n) {
            out.push_back(make_facial_two_factor(g, chosen));
            return;
        }
        for (FaceId f : faces_at[v]) {
            if (std::any_of(verts[f].begin(), verts[f].end(), [&](VertexId x) { return covered[x]; })) continue;
            for (VertexId x : verts[f]) covered[x] = 1;
            chosen.push_back(f);
            self(self);
            chosen.pop_back();
            for (VertexId x : verts[f]) covered[x] = 0;
        }
    };
    search(search);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.cycles < b.cycles; });
    return out;
}

std::optional<LeapfrogRecognition> recognize_leapfrog(const PlaneGraph& g)
{
    if (!g.is_cubic()) fail(ErrorKind::invalid_input, "leapfrog recognition needs a cubic graph");
    for (const FacialTwoFactor& q : enumerate_facial_two_factors(g)) {
        bool hexagons = true;
        for (FaceId f = 0; f < g.num_faces() && hexagons; ++f)
            if (!std::binary_search(q.cycles.begin(), q.cycles.end(), f) && g.face_length(f) != 6) hexagons = false;
        if (!hexagons) continue;
        const auto rerooted = reroot_to_qc(g, q);
        const PlaneGraph& rooted = rerooted ? *rerooted : g;
        try {
            const Contraction c = contract_factor(rooted, q);
            if (!c.map.deleted_loops.empty()) continue;
            PlaneGraph base = dual(c.h);
            if (base.num_edges() < 2) continue;
            if (!isomorphic(leapfrog(base).graph, g)) continue;
            return LeapfrogRecognition{std::move(base), q};
        } catch (const Error&) {
            continue;
        }
    }
    return std::nullopt;
}

}  // namespace planeham
