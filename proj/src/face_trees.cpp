#include "planeham/face_trees.hpp"

#include <algorithm>
#include <numeric>

#include "planeham/error.hpp"
#include "planeham/planar_core.hpp"
#include "planeham/simple_graph.hpp"
#include "planeham/transforms.hpp"
#include "planeham/triangles.hpp"

namespace planeham {

namespace {

std::vector<VertexId> distinct_vertices(const PlaneGraph& h, FaceId f)
{
    auto vs = h.face_vertices(f);
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return vs;
}

std::string join(const std::vector<int>& xs)
{
    std::string s;
    for (int x : xs) s += (s.empty() ? "" : " ") + std::to_string(x);
    return s;
}

// Rotation restricted to the edges marked in `keep`.
struct SubRotation {
    std::vector<DartId> next, prev;
    std::vector<int> degree;

    SubRotation(const PlaneGraph& h, const std::vector<char>& keep)
        : next(h.num_darts(), -1), prev(h.num_darts(), -1), degree(h.num_vertices(), 0)
    {
        for (VertexId v = 0; v < h.num_vertices(); ++v) {
            std::vector<DartId> r;
            for (DartId d : h.rotation(v))
                if (keep[PlaneGraph::edge_of(d)]) r.push_back(d);
            degree[v] = static_cast<int>(r.size());
            for (std::size_t i = 0; i < r.size(); ++i) {
                next[r[i]] = r[(i + 1) % r.size()];
                prev[r[i]] = r[(i + r.size() - 1) % r.size()];
            }
        }
    }
};

}  // namespace

// ---------------------------------------------------------------------------
// Validation

std::vector<FaceTreeViolation> validate_face_tree(const PlaneGraph& h, const FaceTree& t)
{
    using K = FaceTreeViolation::Kind;
    std::vector<FaceTreeViolation> out;
    const int n = h.num_vertices();

    for (FaceId f : t.faces) {
        if (f < 0 || f >= h.num_faces())
            out.push_back({K::missing_face, {f}, "face " + std::to_string(f) + " does not exist"});
        else if (h.is_outer(f))
            out.push_back({K::outer_face, {f}, "outer face " + std::to_string(f) + " is in T"});
    }
    if (std::any_of(out.begin(), out.end(), [](const auto& v) { return v.kind == K::missing_face; })) return out;
    {
        auto fs = t.faces;
        std::sort(fs.begin(), fs.end());
        if (std::adjacent_find(fs.begin(), fs.end()) != fs.end())
            out.push_back({K::missing_face, {}, "a face is listed twice"});
    }

    std::vector<int> role(n, 0);
    bool partition_ok = true;
    for (VertexId v : t.proper) {
        if (v < 0 || v >= n || role[v]) partition_ok = false;
        else role[v] = 1;
    }
    for (VertexId v : t.quasi) {
        if (v < 0 || v >= n || role[v]) partition_ok = false;
        else role[v] = 2;
    }
    std::vector<int> missing;
    for (VertexId v = 0; v < n; ++v)
        if (!role[v]) missing.push_back(v);
    if (!partition_ok || !missing.empty()) {
        out.push_back({K::bad_partition, missing, "proper and quasi vertices do not partition V"});
        return out;
    }

    std::vector<FaceId> owner(h.num_edges(), -1);
    for (FaceId f : t.faces)
        for (EdgeId e : h.face_edges(f)) {
            if (owner[e] >= 0)
                out.push_back({K::shared_edge, {e, owner[e], f},
                               "faces " + std::to_string(owner[e]) + " and " + std::to_string(f) + " share edge " +
                                   std::to_string(e)});
            owner[e] = f;
        }

    std::vector<int> count(n, 0);
    for (FaceId f : t.faces)
        for (VertexId v : distinct_vertices(h, f)) ++count[v];
    std::vector<int> uncovered;
    for (VertexId v = 0; v < n; ++v)
        if (count[v] == 0) uncovered.push_back(v);
    if (!uncovered.empty())
        out.push_back({K::uncovered_vertex, uncovered, "vertices not covered by T: " + join(uncovered)});

    for (VertexId v : t.quasi)
        if (h.degree(v) % 2 != 0 || 2 * count[v] != h.degree(v))
            out.push_back({K::degree_mismatch, {v, count[v], h.degree(v)},
                           "quasi vertex " + std::to_string(v) + " lies on " + std::to_string(count[v]) +
                               " faces of T but has degree " + std::to_string(h.degree(v))});

    const RadialGraph r = radial_graph(h, t.proper, t.faces);
    const int nodes = r.graph.num_vertices();
    if (nodes > 0) {
        if (!r.graph.is_connected())
            out.push_back({K::radial_disconnected, {}, "restricted radial graph is disconnected"});
        else if (r.graph.num_edges() != nodes - 1)
            out.push_back({K::radial_cycle, {}, "restricted radial graph has a cycle"});
    }
    return out;
}

bool is_face_tree(const PlaneGraph& h, const FaceTree& t) { return validate_face_tree(h, t).empty(); }

// ---------------------------------------------------------------------------
// Construction by triangle contraction

namespace {

FaceId map_face_back(const PlaneGraph& cur, FaceId f, const std::vector<EdgeId>& to_orig, const PlaneGraph& orig)
{
    std::vector<EdgeId> mapped;
    for (EdgeId e : cur.face_edges(f)) mapped.push_back(to_orig[e]);
    std::sort(mapped.begin(), mapped.end());
    const DartId d = cur.face_darts(f).front();
    const FaceId of = orig.face_of(2 * to_orig[PlaneGraph::edge_of(d)] + (d & 1));
    auto oe = orig.face_edges(of);
    std::sort(oe.begin(), oe.end());
    if (oe != mapped)
        fail(ErrorKind::verification, "contracted face does not correspond to a face of the input graph");
    return of;
}

bool triangle_with_three_vertices(const PlaneGraph& g, FaceId f)
{
    return g.face_length(f) == 3 && distinct_vertices(g, f).size() == 3;
}

void require_triangular_outer(const PlaneGraph& g)
{
    if (!triangle_with_three_vertices(g, g.outer_face()))
        fail(ErrorKind::hypothesis, "outer face is not a triangle on three vertices");
}

// One selection and contraction inside `scope`; updates the graph, the scope
// and the edge map in place and returns the face of `orig` used.
FaceId contract_step(PlaneGraph& cur, std::vector<EdgeId>& scope, std::vector<EdgeId>& to_orig,
                     const PlaneGraph& orig, std::vector<BuildStep>& steps)
{
    TriangleSelection sel = select_contractible_triangle(cur, scope);
    BuildStep step;
    step.before = cur;
    step.scope = scope;
    step.face = sel.face;
    step.original_face = map_face_back(cur, sel.face, to_orig, orig);
    std::vector<EdgeId> next_map;
    for (EdgeId e : sel.contraction.surgery.new_to_old_edge) next_map.push_back(to_orig[e]);
    to_orig = std::move(next_map);
    cur = sel.contraction.graph;
    scope = sel.scope_after;
    step.after = cur;
    step.scope_after = scope;
    steps.push_back(std::move(step));
    return steps.back().original_face;
}

// Contract inside the outer triangle until three vertices remain, then add the
// last bounded face on all three. Returns faces of `orig`.
std::vector<FaceId> run_odd(PlaneGraph cur, std::vector<EdgeId> to_orig, const PlaneGraph& orig,
                            std::vector<BuildStep>& steps)
{
    require_triangular_outer(cur);
    if (cur.num_vertices() % 2 == 0) fail(ErrorKind::hypothesis, "odd mode needs an odd number of vertices");
    const auto report = check_invariant_property(cur);
    if (!report.holds) fail(ErrorKind::hypothesis, "graph lacks the invariant property");

    std::vector<FaceId> out;
    while (cur.num_vertices() > 3) {
        auto scope = cur.face_edges(cur.outer_face());
        out.push_back(contract_step(cur, scope, to_orig, orig, steps));
    }
    FaceId last = -1;
    for (FaceId f = 0; f < cur.num_faces() && last < 0; ++f)
        if (!cur.is_outer(f) && triangle_with_three_vertices(cur, f)) last = f;
    if (last < 0) fail(ErrorKind::verification, "no bounded face spans the three remaining vertices");
    out.push_back(map_face_back(cur, last, to_orig, orig));
    return out;
}

FaceTree finish(const PlaneGraph& h, std::vector<FaceId> faces, std::vector<VertexId> quasi)
{
    FaceTree t;
    std::sort(faces.begin(), faces.end());
    t.faces = std::move(faces);
    t.quasi = std::move(quasi);
    for (VertexId v = 0; v < h.num_vertices(); ++v)
        if (std::find(t.quasi.begin(), t.quasi.end(), v) == t.quasi.end()) t.proper.push_back(v);
    const auto violations = validate_face_tree(h, t);
    if (!violations.empty()) fail(ErrorKind::verification, "constructed face set fails validation: " + violations[0].message);
    return t;
}

std::vector<EdgeId> identity_edges(const PlaneGraph& g)
{
    std::vector<EdgeId> id(g.num_edges());
    std::iota(id.begin(), id.end(), 0);
    return id;
}

bool on_outer_face(const PlaneGraph& h, VertexId v)
{
    const auto vs = h.face_vertices(h.outer_face());
    return std::find(vs.begin(), vs.end(), v) != vs.end();
}

}  // namespace

FaceTreeBuild build_face_tree(const PlaneGraph& h, FaceTreeMode mode)
{
    if (h.num_vertices() < 2) fail(ErrorKind::invalid_input, "a single-vertex graph has no tree of bounded faces");
    require_triangular_outer(h);
    FaceTreeBuild b;

    if (mode == FaceTreeMode::odd) {
        b.tree = finish(h, run_odd(h, identity_edges(h), h, b.steps), {});
        return b;
    }

    if (mode == FaceTreeMode::even_degree4) {
        if (h.num_vertices() % 2 != 0) fail(ErrorKind::hypothesis, "even mode needs an even number of vertices");
        if (h.num_vertices() == 4) {
            // K4 spans H with a doubled edge at v0: two triangles at v0 suffice
            for (VertexId v0 = 0; v0 < 4; ++v0) {
                if (h.degree(v0) != 4 || on_outer_face(h, v0)) continue;
                std::vector<FaceId> tri;
                for (FaceId f : h.faces_at(v0))
                    if (!h.is_outer(f) && triangle_with_three_vertices(h, f)) tri.push_back(f);
                for (std::size_t i = 0; i < tri.size(); ++i)
                    for (std::size_t j = i + 1; j < tri.size(); ++j) {
                        FaceTree t{{tri[i], tri[j]}, {}, {v0}};
                        for (VertexId v = 0; v < 4; ++v)
                            if (v != v0) t.proper.push_back(v);
                        if (is_face_tree(h, t)) {
                            b.tree = t;
                            b.quasi_vertex = v0;
                            b.exceptional_k4 = true;
                            return b;
                        }
                    }
            }
            fail(ErrorKind::hypothesis, "four-vertex graph without a usable degree-4 interior vertex");
        }
        if (vertex_connectivity(h) < 4) fail(ErrorKind::hypothesis, "graph is not 4-connected");
        for (VertexId v0 = 0; v0 < h.num_vertices(); ++v0) {
            if (h.degree(v0) != 4 || on_outer_face(h, v0)) continue;
            const auto pairing = degree4_pairing(h, v0);
            if (!pairing) continue;
            const Degree4Reduction red = degree4_reduction(h, v0, *pairing);
            auto faces = run_odd(red.graph, red.surgery.new_to_old_edge, h, b.steps);
            faces.push_back(red.triangles[0]);
            faces.push_back(red.triangles[1]);
            b.tree = finish(h, std::move(faces), {v0});
            b.quasi_vertex = v0;
            return b;
        }
        fail(ErrorKind::hypothesis, "no interior vertex of degree 4 with two usable opposite triangles");
    }

    // even_interior
    {
        const TriangleLattice lat = build_triangle_lattice(h);
        for (std::size_t i = 0; i < lat.triangles.size(); ++i) {
            if (lat.triangles[i].interior_vertex_count() % 2 != 0)
                fail(ErrorKind::hypothesis, "a triangle has an odd number of interior vertices");
        }
        for (std::size_t j = 0; j < lat.triangles.size(); ++j)
            for (int i : lat.direct_successors[j])
                for (const SepCycle& d : lat.digons)
                    if (std::includes(lat.triangles[i].interior_vertices.begin(), lat.triangles[i].interior_vertices.end(),
                                      d.interior_vertices.begin(), d.interior_vertices.end()))
                        fail(ErrorKind::hypothesis, "a direct successor contains a separating digon");
    }
    PlaneGraph cur = h;
    std::vector<EdgeId> to_orig = identity_edges(h);
    std::vector<FaceId> faces;
    while (true) {
        const TriangleLattice lat = build_triangle_lattice(cur);
        int sink = -1;
        for (std::size_t i = 0; i < lat.triangles.size() && sink < 0; ++i)
            if (!lat.triangles[i].is_outer_face && lat.direct_successors[i].empty()) sink = static_cast<int>(i);
        if (sink < 0) break;
        // empty the chosen triangle; intermediate graphs may hold odd triangles inside it
        std::vector<EdgeId> scope = lat.triangles[sink].edges;
        while (true) {
            const TriangleLattice inner = build_triangle_lattice(cur);
            const auto idx = inner.find_triangle(scope);
            if (!idx || inner.triangles[*idx].interior_vertex_count() < 2) break;
            faces.push_back(contract_step(cur, scope, to_orig, h, b.steps));
        }
    }
    auto rest = run_odd(cur, to_orig, h, b.steps);
    faces.insert(faces.end(), rest.begin(), rest.end());
    b.tree = finish(h, std::move(faces), {});
    return b;
}

// ---------------------------------------------------------------------------
// Exhaustive oracle

std::optional<FaceTree> brute_force_face_tree(const PlaneGraph& h, bool require_spanning, int guard)
{
    const int n = h.num_vertices();
    std::vector<FaceId> bounded;
    for (FaceId f = 0; f < h.num_faces(); ++f)
        if (!h.is_outer(f)) bounded.push_back(f);
    if (static_cast<int>(bounded.size()) > guard)
        fail(ErrorKind::guard, std::to_string(bounded.size()) + " bounded faces exceed the search guard of " +
                                   std::to_string(guard));

    std::vector<std::vector<EdgeId>> fedges;
    std::vector<std::vector<VertexId>> fverts;
    std::vector<char> usable;
    std::vector<int> last_index(n, -1);
    for (std::size_t i = 0; i < bounded.size(); ++i) {
        auto es = h.face_edges(bounded[i]);
        std::sort(es.begin(), es.end());
        usable.push_back(std::adjacent_find(es.begin(), es.end()) == es.end());
        fedges.push_back(es);
        fverts.push_back(distinct_vertices(h, bounded[i]));
        if (usable.back())
            for (VertexId v : fverts.back()) last_index[v] = static_cast<int>(i);
    }

    std::vector<char> edge_used(h.num_edges(), 0);
    std::vector<int> count(n, 0);
    std::vector<int> chosen;
    std::optional<FaceTree> found;

    auto evaluate = [&]() {
        FaceTree t;
        for (int i : chosen) t.faces.push_back(bounded[i]);
        int incidences = 0;
        for (int i : chosen) incidences += static_cast<int>(fverts[i].size());
        // sum over quasi x of (deg/2 - 1) must balance the radial edge count
        const int excess = incidences - n - static_cast<int>(chosen.size()) + 1;
        auto try_quasi = [&](const std::vector<VertexId>& quasi) {
            t.quasi = quasi;
            t.proper.clear();
            for (VertexId v = 0; v < n; ++v)
                if (!std::binary_search(quasi.begin(), quasi.end(), v)) t.proper.push_back(v);
            if (is_face_tree(h, t)) found = t;
            return found.has_value();
        };
        if (excess == 0 && try_quasi({})) return;
        if (require_spanning || excess <= 0) return;
        std::vector<VertexId> eligible;
        for (VertexId v = 0; v < n; ++v)
            if (h.degree(v) >= 4 && h.degree(v) % 2 == 0 && 2 * count[v] == h.degree(v)) eligible.push_back(v);
        const int k = static_cast<int>(eligible.size());
        for (int size = 1; size <= k && !found; ++size) {
            std::vector<int> idx(size);
            std::iota(idx.begin(), idx.end(), 0);
            while (true) {
                int weight = 0;
                for (int i : idx) weight += h.degree(eligible[i]) / 2 - 1;
                if (weight == excess) {
                    std::vector<VertexId> q;
                    for (int i : idx) q.push_back(eligible[i]);
                    if (try_quasi(q)) return;
                }
                int pos = size - 1;
                while (pos >= 0 && idx[pos] == k - size + pos) --pos;
                if (pos < 0) break;
                ++idx[pos];
                for (int j = pos + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
            }
        }
    };

    auto dfs = [&](auto&& self, int i) -> void {
        if (found) return;
        for (VertexId v = 0; v < n; ++v)
            if (count[v] == 0 && last_index[v] < i) return;
        if (i == static_cast<int>(bounded.size())) {
            evaluate();
            return;
        }
        if (usable[i] && std::none_of(fedges[i].begin(), fedges[i].end(), [&](EdgeId e) { return edge_used[e]; })) {
            for (EdgeId e : fedges[i]) edge_used[e] = 1;
            for (VertexId v : fverts[i]) ++count[v];
            chosen.push_back(i);
            self(self, i + 1);
            chosen.pop_back();
            for (VertexId v : fverts[i]) --count[v];
            for (EdgeId e : fedges[i]) edge_used[e] = 0;
            if (found) return;
        }
        self(self, i + 1);
    };
    dfs(dfs, 0);
    return found;
}

// ---------------------------------------------------------------------------
// A-trails

bool is_a_trail(const PlaneGraph& h, const std::vector<DartId>& trail, bool all_edges)
{
    if (trail.empty()) return false;
    std::vector<char> used(h.num_edges(), 0);
    for (DartId d : trail) {
        if (d < 0 || d >= h.num_darts()) return false;
        if (used[PlaneGraph::edge_of(d)]) return false;
        used[PlaneGraph::edge_of(d)] = 1;
    }
    if (all_edges && static_cast<int>(trail.size()) != h.num_edges()) return false;
    const SubRotation sub(h, used);
    for (std::size_t i = 0; i < trail.size(); ++i) {
        const DartId p = trail[i];
        const DartId d = trail[(i + 1) % trail.size()];
        if (h.target(p) != h.origin(d)) return false;
        const DartId q = PlaneGraph::twin(p);
        if (d != sub.next[q] && d != sub.prev[q]) return false;
    }
    return true;
}

bool same_closed_trail(const std::vector<DartId>& a, const std::vector<DartId>& b)
{
    if (a.size() != b.size()) return false;
    if (a.empty()) return true;
    std::vector<DartId> rev;
    for (auto it = b.rbegin(); it != b.rend(); ++it) rev.push_back(PlaneGraph::twin(*it));
    for (const std::vector<DartId>* cand : {&b, static_cast<const std::vector<DartId>*>(&rev)}) {
        const auto it = std::find(cand->begin(), cand->end(), a.front());
        if (it == cand->end()) continue;
        std::vector<DartId> rotated(it, cand->end());
        rotated.insert(rotated.end(), cand->begin(), it);
        if (rotated == a) return true;
    }
    return false;
}

ATrail face_tree_to_a_trail(const PlaneGraph& h, const FaceTree& t)
{
    const auto violations = validate_face_tree(h, t);
    if (!violations.empty()) fail(ErrorKind::invalid_input, "not a valid face tree: " + violations[0].message);
    if (t.faces.empty()) fail(ErrorKind::invalid_input, "empty face tree");

    std::vector<char> in_t(h.num_faces(), 0), edge_in(h.num_edges(), 0), quasi(h.num_vertices(), 0);
    for (FaceId f : t.faces) {
        in_t[f] = 1;
        for (EdgeId e : h.face_edges(f)) edge_in[e] = 1;
    }
    for (VertexId v : t.quasi) quasi[v] = 1;
    const SubRotation sub(h, edge_in);

    ATrail a;
    const DartId start = h.face_darts(t.faces.front()).front();
    DartId p = start;
    do {
        a.trail.push_back(p);
        if (static_cast<int>(a.trail.size()) > h.num_edges()) fail(ErrorKind::verification, "face-tree walk does not close");
        const VertexId x = h.target(p);
        const DartId q = PlaneGraph::twin(p);
        const bool inside = in_t[h.face_of(p)];
        if (quasi[x])
            p = inside ? h.rot_prev(q) : h.rot_next(q);
        else
            p = inside ? sub.next[q] : sub.prev[q];
    } while (p != start);

    const int covered = static_cast<int>(std::count(edge_in.begin(), edge_in.end(), 1));
    if (static_cast<int>(a.trail.size()) != covered || !is_a_trail(h, a.trail, false))
        fail(ErrorKind::verification, "face-tree walk misses edges of H_T");
    a.splitting.assign(h.num_vertices(), 2);
    for (VertexId v : t.quasi) a.splitting[v] = 1;
    return a;
}

FaceTree a_trail_to_face_tree(const PlaneGraph& h, const std::vector<DartId>& trail)
{
    if (!is_a_trail(h, trail, false)) fail(ErrorKind::invalid_input, "not an A-trail of its subgraph");
    std::vector<char> used(h.num_edges(), 0);
    for (DartId d : trail) used[PlaneGraph::edge_of(d)] = 1;
    std::vector<EdgeId> removed;
    for (EdgeId e = 0; e < h.num_edges(); ++e)
        if (!used[e]) removed.push_back(e);
    const Surgery s = edit_graph(h, removed, {});
    const PlaneGraph& l = s.graph;
    auto to_l = [&](DartId d) { return 2 * s.old_to_new_edge[PlaneGraph::edge_of(d)] + (d & 1); };
    auto to_h = [&](DartId d) { return 2 * s.new_to_old_edge[PlaneGraph::edge_of(d)] + (d & 1); };
    const auto color = face_coloring(l, FaceColoringMode::two_color);

    FaceTree t;
    for (FaceId f = 0; f < l.num_faces(); ++f) {
        if (color[f] != 2) continue;
        const auto& ld = l.face_darts(f);
        const FaceId hf = h.face_of(to_h(ld.front()));
        bool same = h.face_length(hf) == static_cast<int>(ld.size());
        for (DartId d : ld) same = same && h.face_of(to_h(d)) == hf;
        if (!same) fail(ErrorKind::invalid_input, "a color-2 region of the trail is not a face of the graph");
        t.faces.push_back(hf);
    }
    std::sort(t.faces.begin(), t.faces.end());

    std::vector<int> split(h.num_vertices(), 0);
    for (std::size_t i = 0; i < trail.size(); ++i) {
        const DartId p = trail[i];
        const DartId d = trail[(i + 1) % trail.size()];
        const VertexId x = h.target(p);
        const DartId lq = to_l(PlaneGraph::twin(p));
        const DartId ld = to_l(d);
        if (l.degree(s.old_to_new_vertex[x]) <= 2) {
            split[x] = 2;
            continue;
        }
        const FaceId angle = (ld == l.rot_next(lq)) ? l.face_of(lq) : l.face_of(ld);
        const int k = color[angle] == 2 ? 1 : 2;
        if (split[x] != 0 && split[x] != k) fail(ErrorKind::invalid_input, "trail splits vertex " + std::to_string(x) + " inconsistently");
        split[x] = k;
    }
    for (VertexId v = 0; v < h.num_vertices(); ++v) (split[v] == 1 ? t.quasi : t.proper).push_back(v);
    return t;
}

std::optional<ATrail> find_a_trail(const PlaneGraph& h)
{
    if (!h.is_eulerian()) fail(ErrorKind::invalid_input, "A-trails need all vertex degrees even");
    const int n = h.num_vertices();
    const int m = h.num_edges();

    // union-find over edges with rollback; open = unpaired dart ends
    std::vector<int> parent(m), size(m, 1), open(m, 2);
    std::iota(parent.begin(), parent.end(), 0);
    struct Undo {
        int child, root, open_root;
    };
    std::vector<Undo> history;
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x];
        return x;
    };
    // returns false when a closed component misses edges
    auto join = [&](int a, int b) {
        int ra = find(a), rb = find(b);
        if (ra == rb) {
            history.push_back({-1, ra, open[ra]});
            open[ra] -= 2;
            return !(open[ra] == 0 && size[ra] < m);
        }
        if (size[ra] < size[rb]) std::swap(ra, rb);
        history.push_back({rb, ra, open[ra]});
        parent[rb] = ra;
        size[ra] += size[rb];
        open[ra] += open[rb] - 2;
        return !(open[ra] == 0 && size[ra] < m);
    };
    auto rollback = [&](std::size_t mark) {
        while (history.size() > mark) {
            const Undo u = history.back();
            history.pop_back();
            if (u.child >= 0) {
                parent[u.child] = u.child;
                size[u.root] -= size[u.child];
            }
            open[u.root] = u.open_root;
        }
    };

    std::vector<int> choice(n, 0);
    auto search = [&](auto&& self, VertexId v) -> bool {
        if (v == n) return true;
        const auto& rot = h.rotation(v);
        const int deg = static_cast<int>(rot.size());
        const int options = deg == 2 ? 1 : 2;
        for (int c = 0; c < options; ++c) {
            const std::size_t mark = history.size();
            bool ok = true;
            for (int i = 0; i < deg / 2 && ok; ++i)
                ok = join(PlaneGraph::edge_of(rot[(c + 2 * i) % deg]), PlaneGraph::edge_of(rot[(c + 2 * i + 1) % deg]));
            if (ok) {
                choice[v] = c;
                if (self(self, v + 1)) return true;
            }
            rollback(mark);
        }
        return false;
    };
    if (!search(search, 0)) return std::nullopt;

    std::vector<DartId> partner(h.num_darts(), -1);
    for (VertexId v = 0; v < n; ++v) {
        const auto& rot = h.rotation(v);
        const int deg = static_cast<int>(rot.size());
        for (int i = 0; i < deg / 2; ++i) {
            const DartId a = rot[(choice[v] + 2 * i) % deg], b = rot[(choice[v] + 2 * i + 1) % deg];
            partner[a] = b;
            partner[b] = a;
        }
    }
    ATrail out;
    DartId p = 0;
    do {
        out.trail.push_back(p);
        p = partner[PlaneGraph::twin(p)];
    } while (p != 0);
    if (static_cast<int>(out.trail.size()) != m || !is_a_trail(h, out.trail, true))
        fail(ErrorKind::verification, "assembled transitions do not form an A-trail");

    const auto color = face_coloring(h, FaceColoringMode::two_color);
    out.splitting.assign(n, 2);
    for (VertexId v = 0; v < n; ++v) {
        if (h.degree(v) <= 2) continue;
        out.splitting[v] = color[h.face_of(h.rotation(v)[choice[v]])] == 2 ? 1 : 2;
    }
    return out;
}

}  // namespace planeham
