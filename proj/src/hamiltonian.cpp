#include "planeham/hamiltonian.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "planeham/error.hpp"
#include "planeham/planar_core.hpp"
#include "planeham/triangles.hpp"

namespace planeham {

// ---------------------------------------------------------------------------
// Verification

HamVerification verify_hamiltonian(const PlaneGraph& g, const std::vector<EdgeId>& edges)
{
    HamVerification r;
    if (edges.empty()) {
        r.violation = "empty edge sequence";
        for (VertexId v = 0; v < g.num_vertices(); ++v) r.unvisited.push_back(v);
        return r;
    }
    std::vector<int> deg(g.num_vertices(), 0);
    std::vector<char> seen(g.num_edges(), 0);
    for (EdgeId e : edges) {
        if (e < 0 || e >= g.num_edges()) {
            r.violation = "edge " + std::to_string(e) + " does not exist";
            return r;
        }
        if (seen[e]) {
            r.violation = "edge " + std::to_string(e) + " repeated";
            return r;
        }
        seen[e] = 1;
        const auto [a, b] = g.endpoints(e);
        if (a == b) {
            r.violation = "edge " + std::to_string(e) + " is a loop";
            return r;
        }
        ++deg[a];
        ++deg[b];
    }
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        if (deg[v] > 2) {
            r.violation = "vertex " + std::to_string(v) + " meets " + std::to_string(deg[v]) + " cycle edges";
            return r;
        }
        if (deg[v] == 0) r.unvisited.push_back(v);
    }
    if (!r.unvisited.empty()) {
        r.violation = std::to_string(r.unvisited.size()) + " vertices unvisited";
        return r;
    }
    if (!cycle_vertex_order(g, edges)) {
        r.violation = "edges do not form a single cycle";
        return r;
    }

    // cyclic order starting from the first given edge
    std::vector<std::vector<EdgeId>> incident(g.num_vertices());
    for (EdgeId e : edges) {
        incident[g.endpoints(e).first].push_back(e);
        incident[g.endpoints(e).second].push_back(e);
    }
    HamCycle c;
    EdgeId e = edges.front();
    VertexId v = g.endpoints(e).second;
    do {
        c.edges.push_back(e);
        e = incident[v][0] == e ? incident[v][1] : incident[v][0];
        v = g.other_end(e, v);
    } while (e != edges.front());

    const RegionPartition rp = region_partition(g, c.edges);
    c.interior_faces = rp.interior_faces;
    c.exterior_faces = rp.exterior_faces;
    r.ok = true;
    r.cycle = std::move(c);
    return r;
}

HamCycle require_hamiltonian(const PlaneGraph& g, const std::vector<EdgeId>& edges)
{
    auto r = verify_hamiltonian(g, edges);
    if (!r.ok) fail(ErrorKind::verification, "not a Hamiltonian cycle: " + r.violation);
    return std::move(*r.cycle);
}

std::optional<HamCycle> brute_force_hamiltonian(const PlaneGraph& g, int guard)
{
    const int n = g.num_vertices();
    if (n > guard)
        fail(ErrorKind::guard, std::to_string(n) + " vertices exceed the search guard of " + std::to_string(guard));
    if (n < 2) return std::nullopt;

    std::vector<std::vector<DartId>> out(n);
    std::vector<std::vector<VertexId>> nbrs(n);
    for (VertexId v = 0; v < n; ++v) {
        out[v] = g.rotation(v);
        std::sort(out[v].begin(), out[v].end());
        for (DartId d : out[v])
            if (g.target(d) != v) nbrs[v].push_back(g.target(d));
        std::sort(nbrs[v].begin(), nbrs[v].end());
        nbrs[v].erase(std::unique(nbrs[v].begin(), nbrs[v].end()), nbrs[v].end());
    }

    std::vector<char> visited(n, 0);
    std::vector<EdgeId> path;
    visited[0] = 1;

    // every unvisited vertex keeps two usable neighbours and is reachable from cur
    auto feasible = [&](VertexId cur) {
        std::vector<char> reach(n, 0);
        std::vector<VertexId> stack{cur};
        reach[cur] = 1;
        bool back_to_start = false;
        int reached = 0;
        while (!stack.empty()) {
            const VertexId x = stack.back();
            stack.pop_back();
            for (VertexId y : nbrs[x]) {
                if (y == 0 && x != cur) back_to_start = true;
                if (visited[y] || reach[y]) continue;
                reach[y] = 1;
                ++reached;
                stack.push_back(y);
            }
        }
        int unvisited = 0;
        for (VertexId v = 0; v < n; ++v) {
            if (visited[v]) continue;
            ++unvisited;
            int usable = 0;
            for (VertexId y : nbrs[v])
                if (!visited[y] || y == 0 || y == cur) ++usable;
            if (usable < 2) return false;
        }
        return reached == unvisited && (unvisited == 0 || back_to_start);
    };

    auto dfs = [&](auto&& self, VertexId cur, int depth) -> bool {
        if (depth == n) {
            for (DartId d : out[cur])
                if (g.target(d) == 0 && PlaneGraph::edge_of(d) != path.front()) {
                    path.push_back(PlaneGraph::edge_of(d));
                    return true;
                }
            return false;
        }
        for (DartId d : out[cur]) {
            const VertexId w = g.target(d);
            if (visited[w]) continue;
            visited[w] = 1;
            path.push_back(PlaneGraph::edge_of(d));
            if (feasible(w) && self(self, w, depth + 1)) return true;
            path.pop_back();
            visited[w] = 0;
        }
        return false;
    };
    if (!dfs(dfs, 0, 1)) return std::nullopt;
    return require_hamiltonian(g, path);
}

// ---------------------------------------------------------------------------
// Lift and projection

namespace {

void require_tree(const Contraction& c, const FaceTree& t)
{
    for (FaceId f : t.faces)
        if (f == c.h.outer_face()) fail(ErrorKind::hypothesis, "outer face of H is in T");
    const auto v = validate_face_tree(c.h, t);
    if (!v.empty()) fail(ErrorKind::invalid_input, "not a face tree of H: " + v[0].message);
}

// The conclusions about face sides, read off the cycle alone.
void check_face_sides(const PlaneGraph& g, const Contraction& c, const FaceTree& t, const HamCycle& hc)
{
    std::vector<char> inside(g.num_faces(), 0);
    for (FaceId f : hc.interior_faces) inside[f] = 1;
    for (VertexId v : t.proper)
        if (!inside[c.map.q_face[v]])
            fail(ErrorKind::verification, "Q face of proper vertex " + std::to_string(v) + " is outside the cycle");
    for (VertexId v : t.quasi)
        if (inside[c.map.q_face[v]])
            fail(ErrorKind::verification, "Q face of quasi vertex " + std::to_string(v) + " is inside the cycle");
    if (inside[g.outer_face()]) fail(ErrorKind::verification, "outer face is inside the cycle");
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        const FaceId a = g.face_of(2 * e), b = g.face_of(2 * e + 1);
        if (a != b && inside[a] && inside[b] && c.map.face_from_g[a] >= 0 && c.map.face_from_g[b] >= 0)
            fail(ErrorKind::verification, "interior complementary faces share edge " + std::to_string(e));
    }
}

std::vector<EdgeId> boundary_edges(const PlaneGraph& g, const std::vector<FaceId>& faces)
{
    std::vector<int> count(g.num_edges(), 0);
    for (FaceId f : faces)
        for (EdgeId e : g.face_edges(f)) ++count[e];
    std::vector<EdgeId> out;
    for (EdgeId e = 0; e < g.num_edges(); ++e)
        if (count[e] == 1) out.push_back(e);
    return out;
}

}  // namespace

HamCycle lift_face_tree(const PlaneGraph& g, const Contraction& c, const FaceTree& t)
{
    require_tree(c, t);
    std::vector<FaceId> selected;
    for (VertexId v : t.proper) selected.push_back(c.map.q_face[v]);
    for (FaceId f : t.faces) selected.push_back(c.map.face_to_g[f]);
    HamCycle hc = require_hamiltonian(g, boundary_edges(g, selected));
    check_face_sides(g, c, t, hc);
    return hc;
}

std::vector<EdgeId> lift_face_tree_atrail(const PlaneGraph& g, const Contraction& c, const FaceTree& t)
{
    require_tree(c, t);
    const PlaneGraph& h = c.h;
    const ATrail a = face_tree_to_a_trail(h, t);
    std::vector<char> in_t(h.num_faces(), 0), quasi(h.num_vertices(), 0);
    for (FaceId f : t.faces) in_t[f] = 1;
    for (VertexId v : t.quasi) quasi[v] = 1;

    std::vector<EdgeId> out;
    for (std::size_t i = 0; i < a.trail.size(); ++i) {
        const DartId p = a.trail[i];
        const DartId d = a.trail[(i + 1) % a.trail.size()];
        const VertexId x = h.target(p);
        const DartId gp = c.map.dart_to_g(p);
        const VertexId from = g.target(gp), to = g.origin(c.map.dart_to_g(d));
        out.push_back(PlaneGraph::edge_of(gp));

        // leaving with the face left of p on the left runs against the Q face
        const bool left_in_t = in_t[h.face_of(p)];
        const bool forward = quasi[x] ? !left_in_t : left_in_t;
        const auto& qd = g.face_darts(c.map.q_face[x]);
        const int len = static_cast<int>(qd.size());
        int j = 0;
        while (j < len && g.origin(qd[j]) != from) ++j;
        if (j == len) fail(ErrorKind::verification, "trail dart does not land on its Q face");
        VertexId cur = from;
        for (int steps = 0; cur != to; ++steps) {
            if (steps >= len) fail(ErrorKind::verification, "Q face walk does not reach the next trail dart");
            if (forward) {
                out.push_back(PlaneGraph::edge_of(qd[j]));
                cur = g.target(qd[j]);
                j = (j + 1) % len;
            } else {
                j = (j + len - 1) % len;
                out.push_back(PlaneGraph::edge_of(qd[j]));
                cur = g.origin(qd[j]);
            }
        }
    }
    return out;
}

Projection project_hamiltonian(const PlaneGraph& g, const Contraction& c, const std::vector<EdgeId>& cycle)
{
    const auto ver = verify_hamiltonian(g, cycle);
    if (!ver.ok) fail(ErrorKind::invalid_input, "not a Hamiltonian cycle: " + ver.violation);
    if (c.map.face_from_g[g.outer_face()] < 0) fail(ErrorKind::hypothesis, "outer face of G is a Q face");

    std::vector<char> inside(g.num_faces(), 0);
    for (FaceId f : ver.cycle->interior_faces) inside[f] = 1;
    Projection r;
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        const FaceId a = g.face_of(2 * e), b = g.face_of(2 * e + 1);
        if (a != b && inside[a] && inside[b] && c.map.face_from_g[a] >= 0 && c.map.face_from_g[b] >= 0) {
            const auto [u, v] = g.endpoints(e);
            r.shared_edge = e;
            r.violation = "interior complementary faces " + std::to_string(a) + " and " + std::to_string(b) +
                          " share edge " + std::to_string(u) + "-" + std::to_string(v);
            return r;
        }
    }
    FaceTree t;
    for (FaceId f = 0; f < g.num_faces(); ++f)
        if (inside[f] && c.map.face_from_g[f] >= 0) t.faces.push_back(c.map.face_from_g[f]);
    std::sort(t.faces.begin(), t.faces.end());
    for (VertexId v = 0; v < c.h.num_vertices(); ++v) (inside[c.map.q_face[v]] ? t.proper : t.quasi).push_back(v);
    r.tree_violations = validate_face_tree(c.h, t);
    if (!r.tree_violations.empty()) {
        r.violation = r.tree_violations.front().message;
        return r;
    }
    r.tree = std::move(t);
    return r;
}

// ---------------------------------------------------------------------------
// Payan route

bool is_payan_certificate(const PlaneGraph& g0, const PayanCertificate& cert)
{
    const int n = g0.num_vertices();
    if (n % 4 != 2 || static_cast<int>(cert.s.size()) != (n + 2) / 4) return false;
    std::vector<char> in_s(n, 0);
    for (VertexId v : cert.s) {
        if (v < 0 || v >= n || in_s[v]) return false;
        in_s[v] = 1;
    }
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::set<EdgeId> listed(cert.tree_edges.begin(), cert.tree_edges.end());
    int inner = 0;
    for (EdgeId e = 0; e < g0.num_edges(); ++e) {
        const auto [a, b] = g0.endpoints(e);
        if (in_s[a] && in_s[b]) return false;
        if (in_s[a] || in_s[b]) continue;
        if (!listed.count(e)) return false;
        ++inner;
        if (find(a) == find(b)) return false;
        parent[find(a)] = find(b);
    }
    if (inner != static_cast<int>(listed.size())) return false;
    return inner == n - static_cast<int>(cert.s.size()) - 1;
}

PayanCertificate payan_set(const PlaneGraph& g0, int guard)
{
    const int n = g0.num_vertices();
    if (!g0.is_cubic()) fail(ErrorKind::invalid_input, "payan set needs a cubic graph");
    if (n % 4 != 2) fail(ErrorKind::hypothesis, "n = " + std::to_string(n) + " is not 2 mod 4");
    if (n > guard)
        fail(ErrorKind::guard, std::to_string(n) + " vertices exceed the search guard of " + std::to_string(guard));
    if (cyclic_edge_connectivity(g0) < 4) fail(ErrorKind::hypothesis, "graph is not cyclically 4-edge-connected");

    const int k = (n + 2) / 4;
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        PayanCertificate cert;
        cert.s.assign(idx.begin(), idx.end());
        std::vector<char> in_s(n, 0);
        for (VertexId v : cert.s) in_s[v] = 1;
        for (EdgeId e = 0; e < g0.num_edges(); ++e) {
            const auto [a, b] = g0.endpoints(e);
            if (!in_s[a] && !in_s[b]) cert.tree_edges.push_back(e);
        }
        if (is_payan_certificate(g0, cert)) return cert;
        int pos = k - 1;
        while (pos >= 0 && idx[pos] == n - k + pos) --pos;
        if (pos < 0) break;
        ++idx[pos];
        for (int j = pos + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    fail(ErrorKind::verification, "no independent set with a tree complement found; this input needs investigation");
}

PayanCycle leapfrog_ham_payan(const PlaneGraph& g0, int guard)
{
    PayanCertificate cert = payan_set(g0, guard);
    Leapfrog lf = leapfrog(g0);
    std::vector<char> in_s(g0.num_vertices(), 0);
    for (VertexId v : cert.s) in_s[v] = 1;
    std::vector<FaceId> hexagons;
    for (VertexId v = 0; v < g0.num_vertices(); ++v)
        if (!in_s[v]) hexagons.push_back(lf.face_of_base_vertex[v]);
    HamCycle c = require_hamiltonian(lf.graph, boundary_edges(lf.graph, hexagons));
    return PayanCycle{std::move(lf), std::move(cert), std::move(c)};
}

// ---------------------------------------------------------------------------
// Pipeline

std::string to_string(Strategy s)
{
    switch (s) {
    case Strategy::faces: return "faces";
    case Strategy::payan: return "payan";
    case Strategy::brute: return "brute";
    }
    return "?";
}

std::optional<Strategy> parse_strategy(const std::string& s)
{
    if (s == "faces") return Strategy::faces;
    if (s == "payan") return Strategy::payan;
    if (s == "brute") return Strategy::brute;
    return std::nullopt;
}

PipelineResult hamiltonian_pipeline(const PlaneGraph& g0, Strategy strategy, const PipelineOptions& opt)
{
    PipelineReport rep;
    rep.strategy = strategy;

    if (strategy == Strategy::payan) {
        PayanCycle pc = leapfrog_ham_payan(g0, opt.payan_guard);
        rep.payan = pc.certificate;
        rep.q = pc.lf.q;
        rep.notes.push_back("independent set of size " + std::to_string(pc.certificate.s.size()) +
                            " with tree complement");
        return PipelineResult{std::move(pc.lf.graph), std::move(pc.cycle), std::move(rep)};
    }

    if (strategy == Strategy::brute) {
        Leapfrog lf = leapfrog(g0);
        auto c = brute_force_hamiltonian(lf.graph, opt.brute_guard);
        if (!c) fail(ErrorKind::hypothesis, "leapfrog has no Hamiltonian cycle");
        rep.q = lf.q;
        rep.notes.push_back("backtracking search");
        return PipelineResult{std::move(lf.graph), std::move(*c), std::move(rep)};
    }

    if (!g0.is_cubic()) fail(ErrorKind::hypothesis, "input is not cubic");
    if (!g0.is_bipartite()) fail(ErrorKind::hypothesis, "input is not bipartite");
    const int kc = cyclic_edge_connectivity(g0);
    if (kc < 4) fail(ErrorKind::hypothesis, "cyclic edge-connectivity " + std::to_string(kc) + " is below 4");
    rep.notes.push_back("cubic, bipartite, cyclic edge-connectivity " + std::to_string(kc));

    Leapfrog lf = leapfrog(g0);
    PlaneGraph g = lf.graph;
    if (auto r = reroot_to_qc(g, lf.q)) {
        g = std::move(*r);
        rep.rerooted = true;
        rep.notes.push_back("outer face moved to face " + std::to_string(g.outer_face()));
    }
    const Contraction c = contract_factor(g, lf.q);
    rep.q = lf.q;
    rep.h = c.h;
    rep.lattice_triangles = static_cast<int>(build_triangle_lattice(c.h).triangles.size());
    rep.mode = c.h.num_vertices() % 2 == 1 ? FaceTreeMode::odd : FaceTreeMode::even_degree4;
    const FaceTreeBuild b = build_face_tree(c.h, *rep.mode);
    rep.face_tree = b.tree;
    HamCycle hc = lift_face_tree(g, c, b.tree);
    return PipelineResult{std::move(g), std::move(hc), std::move(rep)};
}

CyclicCheck lemma_cyclic_check(const PlaneGraph& g0)
{
    CyclicCheck r;
    r.k1 = cyclic_edge_connectivity(g0);
    const Leapfrog lf = leapfrog(g0);
    const auto rooted = reroot_to_qc(lf.graph, lf.q);
    const Contraction c = contract_factor(rooted ? *rooted : lf.graph, lf.q);
    r.k2 = vertex_connectivity(c.h);
    r.equal = r.k1 == r.k2;
    return r;
}

}  // namespace planeham
