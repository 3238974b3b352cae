#include "planeham/planar_core.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "planeham/error.hpp"

namespace planeham {

// ---------------------------------------------------------------------------
// Duality

PlaneGraph dual(const PlaneGraph& g)
{
    if (g.num_edges() == 0) fail(ErrorKind::invalid_input, "dual of an edgeless graph");
    std::vector<std::vector<DartId>> rot(g.num_faces());
    for (FaceId f = 0; f < g.num_faces(); ++f) rot[f] = g.face_darts(f);

    const auto outer_vertices = g.face_vertices(g.outer_face());
    const VertexId anchor = *std::min_element(outer_vertices.begin(), outer_vertices.end());
    // dual faces are the orbits of darts sharing a primal target vertex
    return PlaneGraph::from_darts(g.num_faces(), std::move(rot), PlaneGraph::twin(g.rotation(anchor).front()));
}

FaceId dual_face_of_vertex(const PlaneGraph& g, const PlaneGraph& dual_graph, VertexId v)
{
    return dual_graph.face_of(PlaneGraph::twin(g.rotation(v).front()));
}

// ---------------------------------------------------------------------------
// Cycles and regions

std::optional<std::vector<VertexId>> cycle_vertex_order(const PlaneGraph& g, const std::vector<EdgeId>& edges)
{
    if (edges.empty()) return std::nullopt;
    std::vector<EdgeId> sorted = edges;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return std::nullopt;

    std::vector<std::vector<EdgeId>> incident(g.num_vertices());
    for (EdgeId e : edges) {
        if (e < 0 || e >= g.num_edges()) return std::nullopt;
        const auto [a, b] = g.endpoints(e);
        if (a == b) return std::nullopt;
        incident[a].push_back(e);
        incident[b].push_back(e);
    }
    for (const auto& inc : incident)
        if (!inc.empty() && inc.size() != 2) return std::nullopt;

    std::vector<VertexId> order;
    const VertexId start = g.endpoints(edges.front()).first;
    VertexId v = start;
    EdgeId e = edges.front();
    do {
        order.push_back(v);
        v = g.other_end(e, v);
        e = incident[v][0] == e ? incident[v][1] : incident[v][0];
    } while (v != start);
    if (order.size() != edges.size()) return std::nullopt;
    return order;
}

RegionPartition region_partition(const PlaneGraph& g, const std::vector<EdgeId>& cycle)
{
    const auto order = cycle_vertex_order(g, cycle);
    if (!order) fail(ErrorKind::invalid_input, "edge sequence is not a cycle");

    std::vector<char> on_cycle_edge(g.num_edges(), 0);
    for (EdgeId e : cycle) on_cycle_edge[e] = 1;

    std::vector<char> exterior(g.num_faces(), 0);
    std::vector<FaceId> stack{g.outer_face()};
    exterior[g.outer_face()] = 1;
    while (!stack.empty()) {
        const FaceId f = stack.back();
        stack.pop_back();
        for (DartId d : g.face_darts(f)) {
            if (on_cycle_edge[PlaneGraph::edge_of(d)]) continue;
            const FaceId h = g.face_of(PlaneGraph::twin(d));
            if (!exterior[h]) {
                exterior[h] = 1;
                stack.push_back(h);
            }
        }
    }

    RegionPartition rp;
    rp.cycle = cycle;
    rp.cycle_vertices = *order;
    std::sort(rp.cycle_vertices.begin(), rp.cycle_vertices.end());
    for (FaceId f = 0; f < g.num_faces(); ++f) (exterior[f] ? rp.exterior_faces : rp.interior_faces).push_back(f);
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        if (std::binary_search(rp.cycle_vertices.begin(), rp.cycle_vertices.end(), v)) continue;
        (exterior[g.face_of(g.rotation(v).front())] ? rp.exterior_vertices : rp.interior_vertices).push_back(v);
    }
    return rp;
}

// ---------------------------------------------------------------------------
// Connectivity measures

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x)
    {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(int a, int b)
    {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[std::max(a, b)] = std::min(a, b);
        return true;
    }
};

// Number of components of g - removed (over vertices) that contain a cycle.
int cyclic_components(const PlaneGraph& g, const std::vector<char>& removed, std::vector<char>* vertex_mask = nullptr)
{
    const int n = g.num_vertices();
    UnionFind uf(n);
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        if (removed[e]) continue;
        const auto [a, b] = g.endpoints(e);
        if (vertex_mask && (!(*vertex_mask)[a] || !(*vertex_mask)[b])) continue;
        uf.unite(a, b);
    }
    std::vector<int> verts(n, 0), edges(n, 0);
    for (VertexId v = 0; v < n; ++v)
        if (!vertex_mask || (*vertex_mask)[v]) ++verts[uf.find(v)];
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        if (removed[e]) continue;
        const auto [a, b] = g.endpoints(e);
        if (vertex_mask && (!(*vertex_mask)[a] || !(*vertex_mask)[b])) continue;
        ++edges[uf.find(a)];
    }
    int count = 0;
    for (VertexId v = 0; v < n; ++v)
        if (verts[v] > 0 && edges[v] >= verts[v]) ++count;
    return count;
}

bool remainder_has_cycle(const PlaneGraph& g, const std::vector<VertexId>& cycle_vertices)
{
    std::vector<char> mask(g.num_vertices(), 1);
    for (VertexId v : cycle_vertices) mask[v] = 0;
    std::vector<char> none(g.num_edges(), 0);
    return cyclic_components(g, none, &mask) > 0;
}

}  // namespace

bool has_two_disjoint_cycles(const PlaneGraph& g)
{
    // face boundaries are cycles in 2-connected graphs and usually settle it
    for (FaceId f = 0; f < g.num_faces(); ++f) {
        auto vs = g.face_vertices(f);
        std::sort(vs.begin(), vs.end());
        if (std::adjacent_find(vs.begin(), vs.end()) != vs.end()) continue;
        if (remainder_has_cycle(g, vs)) return true;
    }
    // exhaustive: every simple cycle, rooted at its smallest vertex
    const int n = g.num_vertices();
    std::vector<char> on_path(n, 0);
    std::vector<VertexId> path;
    bool found = false;
    auto dfs = [&](auto&& self, VertexId root, VertexId v, EdgeId via) -> void {
        if (found) return;
        for (DartId d : g.rotation(v)) {
            const EdgeId e = PlaneGraph::edge_of(d);
            if (e == via) continue;
            const VertexId w = g.target(d);
            if (w == root && path.size() >= 2) {
                if (remainder_has_cycle(g, path)) {
                    found = true;
                    return;
                }
            } else if (w > root && !on_path[w]) {
                on_path[w] = 1;
                path.push_back(w);
                self(self, root, w, e);
                path.pop_back();
                on_path[w] = 0;
                if (found) return;
            }
        }
    };
    for (VertexId root = 0; root < n && !found; ++root) {
        on_path[root] = 1;
        path = {root};
        dfs(dfs, root, root, -1);
        on_path[root] = 0;
    }
    return found;
}

int cyclic_edge_connectivity(const PlaneGraph& g, int max_cut)
{
    if (!g.is_cubic()) fail(ErrorKind::invalid_input, "cyclic edge-connectivity is defined here for cubic graphs only");
    if (g.num_vertices() < 6 || !has_two_disjoint_cycles(g))
        fail(ErrorKind::hypothesis,
             "ineligible for cyclic edge-connectivity: graph has no two vertex-disjoint cycles; the "
             "'two non-trivial components' branch is left undefined and is not evaluated");

    const int m = g.num_edges();
    std::vector<char> removed(m, 0);
    for (int k = 1; k <= std::min(max_cut, m); ++k) {
        std::vector<int> idx(k);
        std::iota(idx.begin(), idx.end(), 0);
        while (true) {
            for (int i : idx) removed[i] = 1;
            const bool cut = cyclic_components(g, removed) >= 2;
            for (int i : idx) removed[i] = 0;
            if (cut) return k;
            int pos = k - 1;
            while (pos >= 0 && idx[pos] == m - k + pos) --pos;
            if (pos < 0) break;
            ++idx[pos];
            for (int j = pos + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    fail(ErrorKind::invalid_input, "no cyclic edge cut of size <= " + std::to_string(max_cut) + " exists");
}

int vertex_connectivity(const PlaneGraph& g) { return vertex_connectivity(underlying_simple(g)); }

// ---------------------------------------------------------------------------
// Face colorings

bool is_proper_face_coloring(const PlaneGraph& g, const std::vector<int>& colors)
{
    if (static_cast<int>(colors.size()) != g.num_faces()) return false;
    for (EdgeId e = 0; e < g.num_edges(); ++e)
        if (colors[g.face_of(2 * e)] == colors[g.face_of(2 * e + 1)]) return false;
    return true;
}

std::vector<int> face_coloring(const PlaneGraph& g, FaceColoringMode mode)
{
    std::vector<int> color(g.num_faces(), 0);
    if (mode == FaceColoringMode::two_color) {
        if (!g.is_eulerian()) fail(ErrorKind::hypothesis, "2-face-coloring requires all vertex degrees even");
        color[g.outer_face()] = 1;
        std::vector<FaceId> stack{g.outer_face()};
        while (!stack.empty()) {
            const FaceId f = stack.back();
            stack.pop_back();
            for (DartId d : g.face_darts(f)) {
                const FaceId h = g.face_of(PlaneGraph::twin(d));
                if (color[h] == 0) {
                    color[h] = 3 - color[f];
                    stack.push_back(h);
                } else if (color[h] == color[f]) {
                    fail(ErrorKind::hypothesis, "faces " + std::to_string(f) + " and " + std::to_string(h) +
                                                    " share an edge and cannot be 2-colored");
                }
            }
        }
        return color;
    }

    if (!g.is_cubic() || !g.is_bipartite())
        fail(ErrorKind::hypothesis, "3-face-coloring requires a cubic bipartite graph");
    for (VertexId v = 0; v < g.num_vertices(); ++v)
        if (g.faces_at(v).size() != 3)
            fail(ErrorKind::hypothesis, "a face meets itself at vertex " + std::to_string(v));
    const DartId d0 = g.face_darts(g.outer_face()).front();
    color[g.outer_face()] = 1;
    color[g.face_of(PlaneGraph::twin(d0))] = 2;
    bool changed = true;
    while (changed) {
        changed = false;
        for (VertexId v = 0; v < g.num_vertices(); ++v) {
            const auto fs = g.faces_at(v);
            int known = 0, sum = 0, missing = -1;
            for (FaceId f : fs) {
                if (color[f]) {
                    ++known;
                    sum += color[f];
                } else {
                    missing = f;
                }
            }
            if (known == 2) {
                color[missing] = 6 - sum;
                changed = true;
            }
        }
    }
    if (std::count(color.begin(), color.end(), 0) != 0 || !is_proper_face_coloring(g, color))
        fail(ErrorKind::hypothesis, "no proper 3-face-coloring found");
    // canonical class order: by smallest face id in the class
    std::vector<int> relabel(4, 0);
    int next = 1;
    for (FaceId f = 0; f < g.num_faces(); ++f)
        if (relabel[color[f]] == 0) relabel[color[f]] = next++;
    for (auto& c : color) c = relabel[c];
    return color;
}

// ---------------------------------------------------------------------------
// Isomorphism

namespace {

std::vector<int> code_from(const PlaneGraph& g, DartId start, bool mirror, bool respect_outer)
{
    const int n = g.num_vertices();
    std::vector<int> number(n, -1), entry(n, -1);
    std::vector<VertexId> order;
    order.reserve(n);
    std::vector<int> code{n, g.num_edges()};
    code.reserve(2 + n + 3 * g.num_darts());

    auto step = [&](DartId d) { return mirror ? g.rot_prev(d) : g.rot_next(d); };
    auto rel_pos = [&](DartId d, DartId base) {
        const int deg = g.degree(g.origin(d));
        const int diff = g.rotation_index(d) - g.rotation_index(base);
        return (((mirror ? -diff : diff) % deg) + deg) % deg;
    };

    const VertexId root = g.origin(start);
    number[root] = 0;
    entry[root] = start;
    order.push_back(root);
    for (std::size_t i = 0; i < order.size(); ++i) {
        const VertexId v = order[i];
        code.push_back(g.degree(v));
        DartId d = entry[v];
        for (int k = 0; k < g.degree(v); ++k, d = step(d)) {
            const VertexId w = g.target(d);
            if (number[w] < 0) {
                number[w] = static_cast<int>(order.size());
                entry[w] = PlaneGraph::twin(d);
                order.push_back(w);
            }
            code.push_back(number[w]);
            code.push_back(rel_pos(PlaneGraph::twin(d), entry[w]));
            if (respect_outer) {
                const FaceId left = mirror ? g.face_of(PlaneGraph::twin(d)) : g.face_of(d);
                code.push_back(left == g.outer_face() ? 1 : 0);
            }
        }
    }
    return code;
}

}  // namespace

std::vector<int> canonical_code(const PlaneGraph& g, bool respect_outer)
{
    std::vector<int> best;
    for (DartId d = 0; d < g.num_darts(); ++d)
        for (bool mirror : {false, true}) {
            auto c = code_from(g, d, mirror, respect_outer);
            if (best.empty() || c < best) best = std::move(c);
        }
    if (g.num_darts() == 0) best = {g.num_vertices(), 0};
    return best;
}

bool isomorphic(const PlaneGraph& a, const PlaneGraph& b, bool respect_outer)
{
    if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) return false;
    return canonical_code(a, respect_outer) == canonical_code(b, respect_outer);
}

// ---------------------------------------------------------------------------
// Surgery

Surgery edit_graph(const PlaneGraph& g, const std::vector<EdgeId>& removed, const std::vector<EdgeId>& contracted)
{
    const int n = g.num_vertices();
    const int m = g.num_edges();
    enum : char { keep = 0, drop = 1, shrink = 2 };
    std::vector<char> status(m, keep);
    for (EdgeId e : removed) status[e] = drop;
    for (EdgeId e : contracted) {
        if (status[e] == drop) fail(ErrorKind::invalid_input, "edge both removed and contracted");
        status[e] = shrink;
    }

    std::vector<char> alive(n, 0);
    for (EdgeId e = 0; e < m; ++e)
        if (status[e] != drop) {
            alive[g.endpoints(e).first] = 1;
            alive[g.endpoints(e).second] = 1;
        }
    if (m == 0) alive.assign(n, 1);

    UnionFind uf(n);
    for (EdgeId e = 0; e < m; ++e)
        if (status[e] == shrink && !uf.unite(g.endpoints(e).first, g.endpoints(e).second))
            fail(ErrorKind::invalid_input, "contracted edge set contains a cycle at edge " + std::to_string(e));

    Surgery s;
    s.old_to_new_vertex.assign(n, -1);
    std::vector<VertexId> group_id(n, -1);
    int groups = 0;
    for (VertexId v = 0; v < n; ++v) {
        if (!alive[v]) continue;
        const int r = uf.find(v);
        if (group_id[r] < 0) group_id[r] = groups++;
        s.old_to_new_vertex[v] = group_id[r];
    }

    std::vector<char> loop(m, 0);
    for (EdgeId e = 0; e < m; ++e) {
        if (status[e] != keep) continue;
        const auto [a, b] = g.endpoints(e);
        if (s.old_to_new_vertex[a] == s.old_to_new_vertex[b]) {
            loop[e] = 1;
            s.deleted_loops.push_back(e);
        }
    }

    s.old_to_new_edge.assign(m, -1);
    for (EdgeId e = 0; e < m; ++e)
        if (status[e] == keep && !loop[e]) {
            s.old_to_new_edge[e] = static_cast<EdgeId>(s.new_to_old_edge.size());
            s.new_to_old_edge.push_back(e);
        }

    auto next_alive = [&](DartId d) {
        DartId x = g.rot_next(d);
        while (status[PlaneGraph::edge_of(x)] == drop) x = g.rot_next(x);
        return x;
    };
    auto new_dart = [&](DartId d) { return 2 * s.old_to_new_edge[PlaneGraph::edge_of(d)] + (d & 1); };

    std::vector<std::vector<DartId>> rot(groups);
    std::vector<char> group_done(groups, 0);
    for (VertexId v = 0; v < n; ++v) {
        if (!alive[v]) continue;
        const int gid = s.old_to_new_vertex[v];
        if (group_done[gid]) continue;
        group_done[gid] = 1;
        // first kept dart around the group's smallest vertex, searching the
        // group's vertices in ascending order
        DartId start = -1;
        for (VertexId u = v; u < n && start < 0; ++u) {
            if (s.old_to_new_vertex[u] != gid) continue;
            for (DartId d : g.rotation(u))
                if (status[PlaneGraph::edge_of(d)] == keep) {
                    start = d;
                    break;
                }
        }
        if (start < 0) continue;  // isolated group; only valid when it is the whole graph
        DartId cur = start;
        do {
            if (!loop[PlaneGraph::edge_of(cur)]) rot[gid].push_back(new_dart(cur));
            DartId x = next_alive(cur);
            while (status[PlaneGraph::edge_of(x)] == shrink) x = next_alive(PlaneGraph::twin(x));
            cur = x;
        } while (cur != start);
    }

    std::optional<DartId> outer;
    for (DartId d : g.face_darts(g.outer_face()))
        if (s.old_to_new_edge[PlaneGraph::edge_of(d)] >= 0) {
            outer = new_dart(d);
            break;
        }
    s.graph = PlaneGraph::from_darts(groups, std::move(rot), outer);
    return s;
}

}  // namespace planeham
