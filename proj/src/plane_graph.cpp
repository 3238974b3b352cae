#include "planeham/plane_graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "planeham/error.hpp"

namespace planeham {

PlaneGraph PlaneGraph::from_darts(int num_vertices, std::vector<std::vector<DartId>> rotations,
                                  std::optional<DartId> outer_dart)
{
    if (num_vertices < 1 || static_cast<int>(rotations.size()) != num_vertices)
        fail(ErrorKind::invalid_input, "rotation count does not match vertex count");

    PlaneGraph g;
    int darts = 0;
    for (const auto& r : rotations) darts += static_cast<int>(r.size());
    if (darts % 2 != 0) fail(ErrorKind::invalid_input, "odd number of darts");

    g.origin_.assign(darts, -1);
    g.rot_pos_.assign(darts, -1);
    for (int v = 0; v < num_vertices; ++v) {
        for (int i = 0; i < static_cast<int>(rotations[v].size()); ++i) {
            const DartId d = rotations[v][i];
            if (d < 0 || d >= darts)
                fail(ErrorKind::invalid_input, "dart " + std::to_string(d) + " out of range at vertex " + std::to_string(v));
            if (g.origin_[d] != -1)
                fail(ErrorKind::invalid_input, "dart " + std::to_string(d) + " appears twice (vertices " +
                                                   std::to_string(g.origin_[d]) + " and " + std::to_string(v) + ")");
            g.origin_[d] = v;
            g.rot_pos_[d] = i;
        }
    }
    g.rotation_ = std::move(rotations);
    g.validate();
    g.trace();

    if (outer_dart) {
        if (*outer_dart < 0 || *outer_dart >= darts) fail(ErrorKind::invalid_input, "outer dart out of range");
        g.outer_ = g.dart_face_[*outer_dart];
    } else {
        // longest face; faces are traced in ascending dart order, so the first
        // longest face also holds the smallest dart among the ties
        g.outer_ = 0;
        for (int f = 1; f < g.num_faces(); ++f)
            if (g.face_length(f) > g.face_length(g.outer_)) g.outer_ = f;
    }
    return g;
}

void PlaneGraph::validate() const
{
    const int n = num_vertices();
    // connectivity
    std::vector<char> seen(n, 0);
    std::vector<VertexId> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        const VertexId v = stack.back();
        stack.pop_back();
        for (DartId d : rotation_[v]) {
            const VertexId w = target(d);
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    if (reached != n) {
        const auto it = std::find(seen.begin(), seen.end(), 0);
        fail(ErrorKind::invalid_input,
             "graph is disconnected: vertex " + std::to_string(it - seen.begin()) + " unreachable from vertex 0");
    }
}

void PlaneGraph::trace()
{
    const int darts = num_darts();
    dart_face_.assign(darts, -1);
    faces_.clear();
    for (DartId start = 0; start < darts; ++start) {
        if (dart_face_[start] != -1) continue;
        const FaceId f = static_cast<FaceId>(faces_.size());
        faces_.emplace_back();
        DartId d = start;
        do {
            dart_face_[d] = f;
            faces_[f].push_back(d);
            d = face_next(d);
        } while (d != start);
    }
    const int euler = num_vertices() - num_edges() + num_faces();
    if (num_edges() == 0) {
        // a single isolated vertex has one face
        faces_.clear();
        faces_.emplace_back();
    }
    if (num_edges() > 0 && euler != 2) {
        std::ostringstream os;
        os << "rotation system is not planar: V - E + F = " << num_vertices() << " - " << num_edges() << " + "
           << num_faces() << " = " << euler;
        fail(ErrorKind::invalid_input, os.str());
    }
}

VertexId PlaneGraph::other_end(EdgeId e, VertexId v) const
{
    const auto [a, b] = endpoints(e);
    return a == v ? b : a;
}

DartId PlaneGraph::rot_next(DartId d) const
{
    const auto& r = rotation_[origin_[d]];
    const int i = rot_pos_[d] + 1;
    return r[i == static_cast<int>(r.size()) ? 0 : i];
}

DartId PlaneGraph::rot_prev(DartId d) const
{
    const auto& r = rotation_[origin_[d]];
    const int i = rot_pos_[d];
    return r[i == 0 ? r.size() - 1 : i - 1];
}

std::vector<VertexId> PlaneGraph::face_vertices(FaceId f) const
{
    std::vector<VertexId> out;
    out.reserve(faces_[f].size());
    for (DartId d : faces_[f]) out.push_back(origin_[d]);
    return out;
}

std::vector<EdgeId> PlaneGraph::face_edges(FaceId f) const
{
    std::vector<EdgeId> out;
    out.reserve(faces_[f].size());
    for (DartId d : faces_[f]) out.push_back(edge_of(d));
    return out;
}

PlaneGraph PlaneGraph::with_outer_face(FaceId f) const
{
    if (f < 0 || f >= num_faces()) fail(ErrorKind::invalid_input, "face id out of range");
    PlaneGraph g = *this;
    g.outer_ = f;
    return g;
}

bool PlaneGraph::has_loops() const
{
    for (EdgeId e = 0; e < num_edges(); ++e)
        if (origin_[2 * e] == origin_[2 * e + 1]) return true;
    return false;
}

bool PlaneGraph::has_parallel_edges() const
{
    std::vector<std::pair<int, int>> ends;
    ends.reserve(num_edges());
    for (EdgeId e = 0; e < num_edges(); ++e) {
        auto [a, b] = endpoints(e);
        ends.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(ends.begin(), ends.end());
    return std::adjacent_find(ends.begin(), ends.end()) != ends.end();
}

bool PlaneGraph::is_cubic() const
{
    for (const auto& r : rotation_)
        if (r.size() != 3) return false;
    return true;
}

int PlaneGraph::min_degree() const
{
    int m = degree(0);
    for (VertexId v = 1; v < num_vertices(); ++v) m = std::min(m, degree(v));
    return m;
}

int PlaneGraph::max_degree() const
{
    int m = degree(0);
    for (VertexId v = 1; v < num_vertices(); ++v) m = std::max(m, degree(v));
    return m;
}

bool PlaneGraph::is_bipartite() const
{
    std::vector<int> side(num_vertices(), -1);
    std::vector<VertexId> stack{0};
    side[0] = 0;
    while (!stack.empty()) {
        const VertexId v = stack.back();
        stack.pop_back();
        for (DartId d : rotation_[v]) {
            const VertexId w = target(d);
            if (side[w] == -1) {
                side[w] = 1 - side[v];
                stack.push_back(w);
            } else if (side[w] == side[v]) {
                return false;
            }
        }
    }
    return true;
}

bool PlaneGraph::is_eulerian() const
{
    for (const auto& r : rotation_)
        if (r.size() % 2 != 0) return false;
    return true;
}

std::vector<FaceId> PlaneGraph::faces_at(VertexId v) const
{
    std::vector<FaceId> out;
    for (DartId d : rotation_[v]) out.push_back(dart_face_[d]);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<EdgeId> PlaneGraph::edges_between(VertexId u, VertexId v) const
{
    std::vector<EdgeId> out;
    for (DartId d : rotation_[u])
        if (target(d) == v) out.push_back(edge_of(d));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::optional<FaceId> PlaneGraph::find_face(const std::vector<VertexId>& cycle) const
{
    const int k = static_cast<int>(cycle.size());
    for (FaceId f = 0; f < num_faces(); ++f) {
        if (face_length(f) != k) continue;
        const auto fv = face_vertices(f);
        for (int shift = 0; shift < k; ++shift) {
            bool fwd = true, bwd = true;
            for (int i = 0; i < k && (fwd || bwd); ++i) {
                if (fv[(shift + i) % k] != cycle[i]) fwd = false;
                if (fv[((shift - i) % k + k) % k] != cycle[i]) bwd = false;
            }
            if (fwd || bwd) return f;
        }
    }
    return std::nullopt;
}

NeighborRotations untagged(const std::vector<std::vector<VertexId>>& lists)
{
    NeighborRotations out(lists.size());
    for (std::size_t v = 0; v < lists.size(); ++v)
        for (VertexId w : lists[v]) out[v].push_back({w, -1});
    return out;
}

namespace {

struct PairSlots {
    VertexId u = -1, v = -1;   // u < v
    std::vector<int> at_u;     // positions in u's list naming v
    std::vector<int> at_v;     // positions in v's list naming u
};

}  // namespace

PlaneGraph build_plane_graph(const NeighborRotations& rotations,
                             const std::optional<std::vector<VertexId>>& outer_boundary)
{
    const int n = static_cast<int>(rotations.size());
    if (n == 0) fail(ErrorKind::invalid_input, "empty rotation system");

    std::map<std::pair<VertexId, VertexId>, PairSlots> pairs;
    for (VertexId u = 0; u < n; ++u) {
        for (int i = 0; i < static_cast<int>(rotations[u].size()); ++i) {
            const VertexId w = rotations[u][i].neighbor;
            if (w < 0 || w >= n)
                fail(ErrorKind::invalid_input,
                     "vertex " + std::to_string(u) + " names unknown neighbor " + std::to_string(w));
            if (w == u) fail(ErrorKind::invalid_input, "loop at vertex " + std::to_string(u));
            auto& p = pairs[{std::min(u, w), std::max(u, w)}];
            p.u = std::min(u, w);
            p.v = std::max(u, w);
            (u == p.u ? p.at_u : p.at_v).push_back(i);
        }
    }
    for (const auto& [key, p] : pairs) {
        if (p.at_u.size() != p.at_v.size()) {
            std::ostringstream os;
            os << "inconsistent rotations: vertex " << p.u << " lists " << p.v << " " << p.at_u.size()
               << " time(s) but vertex " << p.v << " lists " << p.u << " " << p.at_v.size() << " time(s)";
            fail(ErrorKind::invalid_input, os.str());
        }
    }

    // Edge ids by first occurrence scanning vertices in ascending order.
    // The smaller endpoint always owns the even dart.
    std::vector<std::vector<DartId>> rot(n);
    for (VertexId v = 0; v < n; ++v) rot[v].assign(rotations[v].size(), -1);

    std::vector<const PairSlots*> ambiguous;
    std::map<const PairSlots*, std::vector<int>> edge_ids;  // edge id per slot of at_u
    int next_edge = 0;
    for (VertexId u = 0; u < n; ++u) {
        for (int i = 0; i < static_cast<int>(rotations[u].size()); ++i) {
            const VertexId w = rotations[u][i].neighbor;
            if (w < u) continue;
            auto& p = pairs.at({u, w});
            auto& ids = edge_ids[&p];
            if (ids.empty()) ids.assign(p.at_u.size(), -1);
            const int slot = static_cast<int>(std::find(p.at_u.begin(), p.at_u.end(), i) - p.at_u.begin());
            ids[slot] = next_edge++;
            rot[u][i] = 2 * ids[slot];
        }
    }

    // Pair the v-side slots. Tagged occurrences pair by tag; untagged bundles
    // of k parallel edges appear reversed at the other end, leaving k cyclic
    // shifts to try.
    struct Choice {
        const PairSlots* p;
        int k;
    };
    std::vector<Choice> choices;
    for (const auto& [key, p] : pairs) {
        const auto& ids = edge_ids.at(&p);
        const int k = static_cast<int>(p.at_u.size());
        bool tagged = true;
        for (int s : p.at_u) tagged = tagged && rotations[p.u][s].tag >= 0;
        for (int s : p.at_v) tagged = tagged && rotations[p.v][s].tag >= 0;
        if (k == 1) {
            rot[p.v][p.at_v[0]] = 2 * ids[0] + 1;
        } else if (tagged) {
            for (int a = 0; a < k; ++a) {
                const int tag = rotations[p.u][p.at_u[a]].tag;
                int match = -1;
                for (int b = 0; b < k; ++b)
                    if (rotations[p.v][p.at_v[b]].tag == tag) match = b;
                if (match < 0)
                    fail(ErrorKind::invalid_input, "unmatched edge tag " + std::to_string(tag) + " between " +
                                                       std::to_string(p.u) + " and " + std::to_string(p.v));
                rot[p.v][p.at_v[match]] = 2 * ids[a] + 1;
            }
        } else {
            choices.push_back({&p, k});
        }
    }

    auto apply = [&](const std::vector<int>& shifts) {
        for (std::size_t c = 0; c < choices.size(); ++c) {
            const auto& p = *choices[c].p;
            const auto& ids = edge_ids.at(&p);
            const int k = choices[c].k;
            for (int a = 0; a < k; ++a) rot[p.v][p.at_v[((shifts[c] - a) % k + k) % k]] = 2 * ids[a] + 1;
        }
    };

    std::vector<int> shifts(choices.size(), 0);
    long long combos = 1;
    for (const auto& c : choices) combos = std::min<long long>(combos * c.k, 1LL << 20);
    std::optional<PlaneGraph> built;
    std::string last_error;
    for (long long attempt = 0; attempt < combos; ++attempt) {
        apply(shifts);
        try {
            built = PlaneGraph::from_darts(n, rot);
            break;
        } catch (const Error& e) {
            last_error = e.what();
            if (choices.empty()) throw;
        }
        for (std::size_t c = 0; c < choices.size(); ++c) {
            if (++shifts[c] < choices[c].k) break;
            shifts[c] = 0;
        }
    }
    if (!built) fail(ErrorKind::invalid_input, "no planar pairing of parallel edges: " + last_error);

    if (outer_boundary) {
        const auto f = built->find_face(*outer_boundary);
        if (!f) fail(ErrorKind::invalid_input, "outer boundary does not match any face");
        return built->with_outer_face(*f);
    }
    return *built;
}

PlaneGraph build_plane_graph(const std::vector<std::vector<VertexId>>& rotations,
                             const std::optional<std::vector<VertexId>>& outer_boundary)
{
    return build_plane_graph(untagged(rotations), outer_boundary);
}

NeighborRotations to_neighbor_rotations(const PlaneGraph& g)
{
    NeighborRotations out(g.num_vertices());
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        for (DartId d : g.rotation(v)) {
            const VertexId w = g.target(d);
            const bool parallel = g.edges_between(v, w).size() > 1;
            out[v].push_back({w, parallel ? PlaneGraph::edge_of(d) : -1});
        }
    }
    return out;
}

std::vector<Face> trace_faces(const PlaneGraph& g)
{
    std::vector<Face> out;
    out.reserve(g.num_faces());
    for (FaceId f = 0; f < g.num_faces(); ++f) out.push_back({f, g.face_darts(f), g.is_outer(f)});
    return out;
}

}  // namespace planeham
