#include "planeham/triangles.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "planeham/error.hpp"

namespace planeham {

namespace {

boost::dynamic_bitset<> to_bits(const std::vector<int>& items, int size)
{
    boost::dynamic_bitset<> b(size);
    for (int x : items) b.set(x);
    return b;
}

struct ClassUnion {
    std::vector<int> parent;
    explicit ClassUnion(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x)
    {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b)
    {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

SepCycle make_sep(const PlaneGraph& h, SepKind kind, std::vector<EdgeId> edges, const RegionPartition& rp)
{
    SepCycle s;
    s.kind = kind;
    std::sort(edges.begin(), edges.end());
    s.edges = std::move(edges);
    s.vertices = rp.cycle_vertices;
    s.interior_vertices = rp.interior_vertices;
    s.interior_faces = rp.interior_faces;
    if (kind == SepKind::triangle && h.face_length(h.outer_face()) == 3) {
        auto outer = h.face_edges(h.outer_face());
        std::sort(outer.begin(), outer.end());
        s.is_outer_face = outer == s.edges;
    }
    return s;
}

std::vector<EdgeId> class_reps(const PlaneGraph& h, const std::vector<EdgeId>& edge_class, VertexId a, VertexId b)
{
    std::vector<EdgeId> reps;
    for (EdgeId e : h.edges_between(a, b)) reps.push_back(edge_class[e]);
    std::sort(reps.begin(), reps.end());
    reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
    return reps;
}

}  // namespace

bool TriangleLattice::below(int i, int j) const
{
    if (i == j) return false;
    return vertex_sets[i].is_subset_of(vertex_sets[j]) && face_sets[i].is_proper_subset_of(face_sets[j]);
}

std::optional<int> TriangleLattice::find_triangle(const std::vector<EdgeId>& edges) const
{
    if (edges.size() != 3) return std::nullopt;
    std::vector<EdgeId> reps;
    for (EdgeId e : edges) {
        if (e < 0 || e >= static_cast<EdgeId>(edge_class.size())) return std::nullopt;
        reps.push_back(edge_class[e]);
    }
    std::sort(reps.begin(), reps.end());
    for (std::size_t i = 0; i < triangles.size(); ++i)
        if (triangles[i].edges == reps) return static_cast<int>(i);
    return std::nullopt;
}

TriangleLattice build_triangle_lattice(const PlaneGraph& h)
{
    const int n = h.num_vertices();
    const int m = h.num_edges();
    TriangleLattice lat;

    // parallel edges bounding an empty digon are one edge
    ClassUnion uf(m);
    for (VertexId a = 0; a < n; ++a)
        for (VertexId b = a + 1; b < n; ++b) {
            const auto es = h.edges_between(a, b);
            for (std::size_t i = 0; i < es.size(); ++i)
                for (std::size_t j = i + 1; j < es.size(); ++j)
                    if (region_partition(h, {es[i], es[j]}).interior_vertices.empty()) uf.unite(es[i], es[j]);
        }
    lat.edge_class.resize(m);
    for (EdgeId e = 0; e < m; ++e) lat.edge_class[e] = uf.find(e);

    std::vector<std::vector<VertexId>> nbrs(n);
    for (EdgeId e = 0; e < m; ++e) {
        const auto [a, b] = h.endpoints(e);
        if (a == b) continue;
        nbrs[a].push_back(b);
        nbrs[b].push_back(a);
    }
    for (auto& l : nbrs) {
        std::sort(l.begin(), l.end());
        l.erase(std::unique(l.begin(), l.end()), l.end());
    }

    for (VertexId a = 0; a < n; ++a)
        for (VertexId b : nbrs[a]) {
            if (b <= a) continue;
            const auto ab = class_reps(h, lat.edge_class, a, b);
            for (std::size_t i = 0; i < ab.size(); ++i)
                for (std::size_t j = i + 1; j < ab.size(); ++j) {
                    const auto rp = region_partition(h, {ab[i], ab[j]});
                    if (!rp.interior_vertices.empty()) lat.digons.push_back(make_sep(h, SepKind::digon, {ab[i], ab[j]}, rp));
                }
            for (VertexId c : nbrs[b]) {
                if (c <= b || !std::binary_search(nbrs[a].begin(), nbrs[a].end(), c)) continue;
                const auto bc = class_reps(h, lat.edge_class, b, c);
                const auto ca = class_reps(h, lat.edge_class, c, a);
                for (EdgeId x : ab)
                    for (EdgeId y : bc)
                        for (EdgeId z : ca) {
                            const auto rp = region_partition(h, {x, y, z});
                            if (!rp.interior_vertices.empty())
                                lat.triangles.push_back(make_sep(h, SepKind::triangle, {x, y, z}, rp));
                        }
            }
        }

    const int t = static_cast<int>(lat.triangles.size());
    for (const auto& s : lat.triangles) {
        lat.vertex_sets.push_back(to_bits(s.interior_vertices, n));
        lat.face_sets.push_back(to_bits(s.interior_faces, h.num_faces()));
    }
    for (int i = 0; i < t; ++i)
        for (int j = 0; j < t; ++j)
            if (lat.below(i, j)) lat.order.emplace_back(i, j);
    lat.direct_successors.assign(t, {});
    for (auto [i, j] : lat.order) {
        bool covered = true;
        for (int k = 0; k < t && covered; ++k)
            if (lat.below(i, k) && lat.below(k, j)) covered = false;
        if (covered) lat.direct_successors[j].push_back(i);
    }
    return lat;
}

namespace {

InvariantReport check_triangles(TriangleLattice lat, std::vector<int> scope)
{
    std::stable_sort(scope.begin(), scope.end(), [&](int a, int b) {
        return lat.triangles[a].interior_vertex_count() > lat.triangles[b].interior_vertex_count();
    });
    InvariantReport r;
    for (int i : scope) {
        if (lat.direct_successors[i].size() > 2) {
            r.holds = false;
            r.witness = InvariantWitness{InvariantWitness::Kind::too_many_successors, i, lat.direct_successors[i], -1};
            break;
        }
        const auto& inside = lat.vertex_sets[i];
        for (std::size_t d = 0; d < lat.digons.size(); ++d) {
            const auto dv = to_bits(lat.digons[d].interior_vertices, static_cast<int>(inside.size()));
            if (dv.is_subset_of(inside)) {
                r.holds = false;
                r.witness = InvariantWitness{InvariantWitness::Kind::digon_inside, i, {}, static_cast<int>(d)};
                break;
            }
        }
        if (!r.holds) break;
    }
    r.lattice = std::move(lat);
    return r;
}

}  // namespace

InvariantReport check_invariant_property(const PlaneGraph& h)
{
    TriangleLattice lat = build_triangle_lattice(h);
    std::vector<int> scope(lat.triangles.size());
    std::iota(scope.begin(), scope.end(), 0);
    return check_triangles(std::move(lat), std::move(scope));
}

InvariantReport check_invariant_property(const PlaneGraph& h, const std::vector<EdgeId>& tri)
{
    const auto order = cycle_vertex_order(h, tri);
    if (!order || order->size() != 3) fail(ErrorKind::invalid_input, "scope edges are not a triangle");
    TriangleLattice lat = build_triangle_lattice(h);
    const auto idx = lat.find_triangle(tri);
    if (!idx) {
        InvariantReport r;
        r.lattice = std::move(lat);
        return r;
    }
    std::vector<int> scope{*idx};
    for (int i = 0; i < static_cast<int>(lat.triangles.size()); ++i)
        if (lat.below(i, *idx)) scope.push_back(i);
    return check_triangles(std::move(lat), std::move(scope));
}

std::optional<std::vector<EdgeId>> triangle_edges(const PlaneGraph& h, VertexId a, VertexId b, VertexId c)
{
    std::vector<EdgeId> out;
    for (auto [x, y] : {std::pair{a, b}, std::pair{b, c}, std::pair{c, a}}) {
        const auto es = h.edges_between(x, y);
        if (es.empty()) return std::nullopt;
        out.push_back(es.front());
    }
    return out;
}

TriangleContraction contract_triangle(const PlaneGraph& h, FaceId t)
{
    if (t < 0 || t >= h.num_faces()) fail(ErrorKind::invalid_input, "face " + std::to_string(t) + " does not exist");
    if (h.is_outer(t)) fail(ErrorKind::invalid_input, "cannot contract the outer face");
    if (h.face_length(t) != 3) fail(ErrorKind::invalid_input, "face " + std::to_string(t) + " is not a triangle");
    const auto vs = h.face_vertices(t);
    if (vs[0] == vs[1] || vs[1] == vs[2] || vs[0] == vs[2])
        fail(ErrorKind::invalid_input, "face " + std::to_string(t) + " repeats a vertex");
    const auto es = h.face_edges(t);
    TriangleContraction c;
    c.surgery = edit_graph(h, {}, {es[0], es[1]});
    c.graph = c.surgery.graph;
    c.face = t;
    c.triple = {vs[0], vs[1], vs[2]};
    c.merged = c.surgery.old_to_new_vertex[vs[0]];
    return c;
}

TriangleSelection select_contractible_triangle(const PlaneGraph& h, const std::vector<EdgeId>& scope)
{
    const auto report = check_invariant_property(h, scope);
    const TriangleLattice& lat = report.lattice;
    const auto idx = lat.find_triangle(scope);
    if (!idx || lat.triangles[*idx].interior_vertex_count() < 2)
        fail(ErrorKind::hypothesis, "scope triangle has fewer than two interior vertices");
    if (!report.holds) fail(ErrorKind::hypothesis, "scope triangle lacks the invariant property");

    const SepCycle& T = lat.triangles[*idx];
    const auto& inside_faces = lat.face_sets[*idx];
    auto on_T = [&](VertexId v) { return std::binary_search(T.vertices.begin(), T.vertices.end(), v); };

    std::vector<FaceId> order;
    // sinks of the lattice restricted to the scope, i.e. separating triangles
    // in the scope with nothing below them
    std::vector<int> sinks;
    for (int i = 0; i < static_cast<int>(lat.triangles.size()); ++i)
        if ((i == *idx || lat.below(i, *idx)) && lat.direct_successors[i].empty()) sinks.push_back(i);
    for (int s : sinks) {
        const SepCycle& S = lat.triangles[s];
        if (S.interior_vertex_count() < 2) continue;
        auto inside = [&](VertexId v) { return lat.vertex_sets[s].test(v); };
        std::vector<FaceId> preferred, rest;
        for (VertexId v1 : S.vertices)
            for (DartId d : h.rotation(v1)) {
                const DartId e = h.rot_next(d);
                if (!inside(h.target(d)) || !inside(h.target(e))) continue;
                const VertexId before = h.target(h.rot_prev(d));
                const bool corner_first =
                    before != v1 && std::binary_search(S.vertices.begin(), S.vertices.end(), before);
                (corner_first ? preferred : rest).push_back(h.face_of(d));
            }
        order.insert(order.end(), preferred.begin(), preferred.end());
        order.insert(order.end(), rest.begin(), rest.end());
    }
    for (int s : sinks) {
        const SepCycle& S = lat.triangles[s];
        if (S.interior_vertex_count() != 1) continue;
        for (DartId d : h.rotation(S.interior_vertices.front())) order.push_back(h.face_of(d));
    }
    for (FaceId f = 0; f < h.num_faces(); ++f) order.push_back(f);

    std::vector<char> tried(h.num_faces(), 0);
    TriangleSelection sel;
    for (FaceId f : order) {
        if (tried[f]) continue;
        tried[f] = 1;
        if (h.is_outer(f) || h.face_length(f) != 3 || !inside_faces.test(f)) continue;
        const auto vs = h.face_vertices(f);
        if (vs[0] == vs[1] || vs[1] == vs[2] || vs[0] == vs[2]) continue;
        if (std::count_if(vs.begin(), vs.end(), on_T) > 1) continue;
        ++sel.candidates_tried;
        TriangleContraction c = contract_triangle(h, f);
        std::vector<EdgeId> after;
        for (EdgeId e : T.edges) after.push_back(c.surgery.old_to_new_edge[e]);
        if (std::find(after.begin(), after.end(), -1) != after.end()) continue;
        if (!check_invariant_property(c.graph, after).holds) continue;
        sel.face = f;
        sel.contraction = std::move(c);
        sel.scope_after = std::move(after);
        return sel;
    }
    fail(ErrorKind::verification, "no contractible triangular face keeps the invariant property");
}

std::optional<int> degree4_pairing(const PlaneGraph& h, VertexId v0)
{
    if (h.degree(v0) != 4) return std::nullopt;
    auto outer = h.face_edges(h.outer_face());
    std::sort(outer.begin(), outer.end());
    for (int p = 0; p < 2; ++p) {
        const FaceId f1 = h.face_of(h.rotation(v0)[p]);
        const FaceId f2 = h.face_of(h.rotation(v0)[p + 2]);
        if (f1 == f2 || h.face_length(f1) != 3 || h.face_length(f2) != 3) continue;
        if (h.is_outer(f1) || h.is_outer(f2)) continue;
        auto e1 = h.face_edges(f1), e2 = h.face_edges(f2);
        std::sort(e1.begin(), e1.end());
        std::sort(e2.begin(), e2.end());
        std::vector<EdgeId> common;
        std::set_intersection(e1.begin(), e1.end(), e2.begin(), e2.end(), std::back_inserter(common));
        std::set_intersection(e1.begin(), e1.end(), outer.begin(), outer.end(), std::back_inserter(common));
        std::set_intersection(e2.begin(), e2.end(), outer.begin(), outer.end(), std::back_inserter(common));
        if (common.empty()) return p;
    }
    return std::nullopt;
}

Degree4Reduction degree4_reduction(const PlaneGraph& h, VertexId v0, int pairing)
{
    if (v0 < 0 || v0 >= h.num_vertices()) fail(ErrorKind::invalid_input, "vertex does not exist");
    if (pairing != 0 && pairing != 1) fail(ErrorKind::invalid_input, "pairing must be 0 or 1");
    if (h.face_length(h.outer_face()) != 3) fail(ErrorKind::hypothesis, "outer face is not a triangle");
    for (FaceId f = 0; f < h.num_faces(); ++f)
        if (h.face_length(f) > 3)
            fail(ErrorKind::hypothesis, "face " + std::to_string(f) + " is neither a digon nor a triangle");
    if (h.degree(v0) != 4) fail(ErrorKind::hypothesis, "vertex " + std::to_string(v0) + " does not have degree 4");
    const auto outer_vs = h.face_vertices(h.outer_face());
    if (std::find(outer_vs.begin(), outer_vs.end(), v0) != outer_vs.end())
        fail(ErrorKind::hypothesis, "vertex " + std::to_string(v0) + " lies on the outer face");
    if (vertex_connectivity(h) < 4) fail(ErrorKind::hypothesis, "graph is not 4-connected");

    const auto& rot = h.rotation(v0);
    std::array<VertexId, 4> nb{};
    for (int i = 0; i < 4; ++i) nb[i] = h.target(rot[(pairing + i) % 4]);
    std::set<VertexId> distinct(nb.begin(), nb.end());
    if (distinct.size() != 4 || distinct.count(v0)) fail(ErrorKind::hypothesis, "neighbors of v0 are not distinct");
    const FaceId f1 = h.face_of(rot[pairing]);
    const FaceId f2 = h.face_of(rot[pairing + 2]);
    {
        auto outer = h.face_edges(h.outer_face());
        auto e1 = h.face_edges(f1), e2 = h.face_edges(f2);
        std::sort(outer.begin(), outer.end());
        std::sort(e1.begin(), e1.end());
        std::sort(e2.begin(), e2.end());
        std::vector<EdgeId> common;
        std::set_intersection(e1.begin(), e1.end(), e2.begin(), e2.end(), std::back_inserter(common));
        if (!common.empty()) fail(ErrorKind::hypothesis, "the two triangles at v0 share an edge");
        std::set_intersection(e1.begin(), e1.end(), outer.begin(), outer.end(), std::back_inserter(common));
        std::set_intersection(e2.begin(), e2.end(), outer.begin(), outer.end(), std::back_inserter(common));
        if (!common.empty()) fail(ErrorKind::hypothesis, "a triangle at v0 shares an edge with the outer face");
    }
    if (h.face_length(f1) != 3 || h.face_length(f2) != 3) fail(ErrorKind::hypothesis, "faces at v0 are not triangles");

    auto far_edge = [&](FaceId f) {
        for (EdgeId e : h.face_edges(f)) {
            const auto [a, b] = h.endpoints(e);
            if (a != v0 && b != v0) return e;
        }
        fail(ErrorKind::hypothesis, "triangle at v0 has no edge opposite v0");
    };
    std::vector<EdgeId> removed;
    for (DartId d : rot) removed.push_back(PlaneGraph::edge_of(d));

    Degree4Reduction r;
    r.surgery = edit_graph(h, removed, {far_edge(f1), far_edge(f2)});
    r.graph = r.surgery.graph;
    r.v0 = v0;
    r.triangles = {f1, f2};
    if (!check_invariant_property(r.graph).holds)
        fail(ErrorKind::verification, "reduced graph lacks the invariant property");
    return r;
}

}  // namespace planeham
