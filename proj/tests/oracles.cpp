#include "oracles.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iterator>
#include <numeric>
#include <set>
#include <stdexcept>

namespace oracle {

namespace {

std::vector<std::vector<VertexId>> adjacency(const PlaneGraph& g)
{
    std::vector<std::vector<VertexId>> adj(g.num_vertices());
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        const auto [a, b] = g.endpoints(e);
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    return adj;
}

// induced subgraph on mask contains a cycle (multigraph aware)
bool induces_cycle(const PlaneGraph& g, std::uint64_t mask)
{
    std::vector<int> parent(g.num_vertices());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        const auto [a, b] = g.endpoints(e);
        if (!((mask >> a) & 1) || !((mask >> b) & 1)) continue;
        const int ra = find(a), rb = find(b);
        if (ra == rb) return true;
        parent[ra] = rb;
    }
    return false;
}

bool connected_without(const std::vector<std::vector<VertexId>>& adj, const std::vector<char>& gone)
{
    const int n = static_cast<int>(adj.size());
    int start = -1, total = 0;
    for (int v = 0; v < n; ++v)
        if (!gone[v]) {
            ++total;
            if (start < 0) start = v;
        }
    if (total <= 1) return true;
    std::vector<char> seen(n, 0);
    std::vector<int> stack{start};
    seen[start] = 1;
    int count = 1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int w : adj[v])
            if (!gone[w] && !seen[w]) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
    }
    return count == total;
}

}  // namespace

int cyclic_edge_connectivity(const PlaneGraph& g)
{
    const int n = g.num_vertices();
    if (n > 30) throw std::runtime_error("oracle too large");
    int best = -1;
    // vertex 0 always on side A
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); mask += 2) {
        const std::uint64_t full = (std::uint64_t{1} << n) - 1;
        const std::uint64_t other = full & ~mask;
        if (other == 0) continue;
        int cut = 0;
        for (EdgeId e = 0; e < g.num_edges(); ++e) {
            const auto [a, b] = g.endpoints(e);
            if (((mask >> a) & 1) != ((mask >> b) & 1)) ++cut;
        }
        if (best >= 0 && cut >= best) continue;
        if (induces_cycle(g, mask) && induces_cycle(g, other)) best = cut;
    }
    return best;
}

int vertex_connectivity(const PlaneGraph& g)
{
    const int n = g.num_vertices();
    const auto adj = adjacency(g);
    for (int k = 0; k <= n - 2; ++k) {
        std::vector<int> idx(k);
        std::iota(idx.begin(), idx.end(), 0);
        while (true) {
            std::vector<char> gone(n, 0);
            for (int i : idx) gone[i] = 1;
            if (!connected_without(adj, gone)) return k;
            int pos = k - 1;
            while (pos >= 0 && idx[pos] == n - k + pos) --pos;
            if (pos < 0) break;
            ++idx[pos];
            for (int j = pos + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return n - 1;
}

bool is_hamiltonian_cycle(const PlaneGraph& g, const std::vector<EdgeId>& edges)
{
    const int n = g.num_vertices();
    if (static_cast<int>(edges.size()) != n) return false;
    std::vector<int> deg(n, 0);
    std::vector<std::vector<VertexId>> adj(n);
    for (EdgeId e : edges) {
        if (e < 0 || e >= g.num_edges()) return false;
        const auto [a, b] = g.endpoints(e);
        if (a == b) return false;
        ++deg[a];
        ++deg[b];
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    if (std::any_of(deg.begin(), deg.end(), [](int d) { return d != 2; })) return false;
    std::vector<char> gone(n, 0);
    return connected_without(adj, gone);
}

bool has_hamiltonian_cycle(const PlaneGraph& g)
{
    const int n = g.num_vertices();
    const auto adj = adjacency(g);
    std::vector<char> used(n, 0);
    used[0] = 1;
    std::function<bool(int, int)> dfs = [&](int v, int depth) {
        if (depth == n) return std::find(adj[v].begin(), adj[v].end(), 0) != adj[v].end();
        for (int w : adj[v])
            if (!used[w]) {
                used[w] = 1;
                if (dfs(w, depth + 1)) return true;
                used[w] = 0;
            }
        return false;
    };
    return n >= 3 && dfs(0, 1);
}

std::vector<VertexId> interior_vertices(const PlaneGraph& g, const std::vector<EdgeId>& cycle)
{
    // walk the cycle
    const int n = g.num_vertices();
    std::vector<std::vector<EdgeId>> inc(n);
    std::vector<char> on_edge(g.num_edges(), 0), on_vertex(n, 0);
    for (EdgeId e : cycle) {
        on_edge[e] = 1;
        const auto [a, b] = g.endpoints(e);
        inc[a].push_back(e);
        inc[b].push_back(e);
        on_vertex[a] = on_vertex[b] = 1;
    }
    std::vector<std::pair<int, int>> steps;  // (out dart, in dart) per cycle vertex
    VertexId v = g.endpoints(cycle.front()).first;
    const VertexId start = v;
    EdgeId e = cycle.front();
    EdgeId prev_e = inc[v][0] == e ? inc[v][1] : inc[v][0];
    do {
        const int out = g.origin(2 * e) == v ? 2 * e : 2 * e + 1;
        const int in = g.origin(2 * prev_e) == v ? 2 * prev_e : 2 * prev_e + 1;
        steps.emplace_back(out, in);
        v = g.target(out);
        prev_e = e;
        e = inc[v][0] == e ? inc[v][1] : inc[v][0];
    } while (v != start);

    std::vector<int> side(n, -1);  // 0 left, 1 right
    std::vector<char> dart_side(g.num_darts(), -1);
    auto sweep = [&](int from, int to, int s) {
        for (int d = g.rot_next(from); d != to; d = g.rot_next(d)) {
            dart_side[d] = static_cast<char>(s);
            const VertexId w = g.target(d);
            if (!on_vertex[w] && side[w] < 0) {
                side[w] = s;
                std::vector<VertexId> stack{w};
                while (!stack.empty()) {
                    const VertexId x = stack.back();
                    stack.pop_back();
                    for (int dd : g.rotation(x)) {
                        const VertexId y = g.target(dd);
                        if (!on_vertex[y] && side[y] < 0) {
                            side[y] = s;
                            stack.push_back(y);
                        }
                    }
                }
            }
        }
    };
    for (auto [out, in] : steps) {
        sweep(out, in, 0);
        sweep(in, out, 1);
    }
    int outer_side = -1;
    for (int d : g.face_darts(g.outer_face())) {
        if (on_edge[d >> 1]) continue;
        const VertexId o = g.origin(d);
        outer_side = on_vertex[o] ? dart_side[d] : side[o];
        break;
    }
    if (outer_side < 0) {
        const int d = g.face_darts(g.outer_face()).front();
        bool forward = false;
        for (auto [out, in] : steps)
            if (out == d) forward = true;
        outer_side = forward ? 0 : 1;
    }
    std::vector<VertexId> out;
    for (VertexId x = 0; x < n; ++x)
        if (!on_vertex[x] && side[x] == 1 - outer_side) out.push_back(x);
    return out;
}

bool proper_face_coloring(const PlaneGraph& g, const std::vector<int>& colors, int num_colors)
{
    if (static_cast<int>(colors.size()) != g.num_faces()) return false;
    for (int c : colors)
        if (c < 1 || c > num_colors) return false;
    for (int d = 0; d < g.num_darts(); ++d)
        if (colors[g.face_of(d)] == colors[g.face_of(d ^ 1)]) return false;
    return true;
}

std::vector<int> face_length_profile(const PlaneGraph& g)
{
    std::vector<int> out;
    for (FaceId f = 0; f < g.num_faces(); ++f) out.push_back(g.face_length(f));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> degree_profile(const PlaneGraph& g)
{
    std::vector<int> out;
    for (VertexId v = 0; v < g.num_vertices(); ++v) out.push_back(g.degree(v));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<PlaneGraph> read_planar_code_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    const std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    const std::string header = ">>planar_code<<";
    if (bytes.size() < header.size() || !std::equal(header.begin(), header.end(), bytes.begin()))
        throw std::runtime_error("bad header");
    std::size_t pos = header.size();
    std::vector<PlaneGraph> out;
    while (pos < bytes.size()) {
        const int n = bytes[pos++];
        std::vector<std::vector<VertexId>> rot(n);
        for (int v = 0; v < n; ++v) {
            while (bytes.at(pos) != 0) rot[v].push_back(bytes[pos++] - 1);
            ++pos;
            std::reverse(rot[v].begin(), rot[v].end());
        }
        out.push_back(planeham::build_plane_graph(rot));
    }
    return out;
}

std::string data_path(const std::string& file) { return std::string(PLANEHAM_TEST_DATA) + "/" + file; }

}  // namespace oracle

namespace oracle {

std::vector<FaceId> faces_with_vertices(const PlaneGraph& g, std::vector<std::vector<VertexId>> sets)
{
    std::vector<FaceId> out;
    for (auto& s : sets) {
        std::sort(s.begin(), s.end());
        for (FaceId f = 0; f < g.num_faces(); ++f) {
            auto vs = g.face_vertices(f);
            std::sort(vs.begin(), vs.end());
            if (vs == s) out.push_back(f);
        }
    }
    return out;
}

}  // namespace oracle

namespace oracle {

bool is_face_tree(const PlaneGraph& h, const std::vector<FaceId>& faces, const std::vector<VertexId>& proper,
                  const std::vector<VertexId>& quasi)
{
    const int n = h.num_vertices();
    std::vector<int> role(n, 0);
    for (VertexId v : proper) role[v] += 1;
    for (VertexId v : quasi) role[v] += 2;
    for (int r : role)
        if (r != 1 && r != 2) return false;
    std::vector<int> edge_count(h.num_edges(), 0);
    std::vector<std::set<VertexId>> on(faces.size());
    std::vector<int> faces_at(n, 0);
    for (std::size_t i = 0; i < faces.size(); ++i) {
        if (h.is_outer(faces[i])) return false;
        for (DartId d : h.face_darts(faces[i])) {
            if (++edge_count[d >> 1] > 1) return false;
            on[i].insert(h.origin(d));
        }
        for (VertexId v : on[i]) ++faces_at[v];
    }
    for (VertexId v = 0; v < n; ++v) {
        if (faces_at[v] == 0) return false;
        if (role[v] == 2 && 2 * faces_at[v] != h.degree(v)) return false;
    }
    const int nf = static_cast<int>(faces.size());
    std::vector<int> parent(n + nf);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    int nodes = nf, edges = 0;
    for (VertexId v = 0; v < n; ++v) nodes += role[v] == 1;
    for (int i = 0; i < nf; ++i)
        for (VertexId v : on[i]) {
            if (role[v] != 1) continue;
            ++edges;
            const int a = find(v), b = find(n + i);
            if (a == b) return false;
            parent[a] = b;
        }
    return edges == nodes - 1;
}

}  // namespace oracle
