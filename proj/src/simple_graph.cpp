#include "planeham/simple_graph.hpp"

#include <algorithm>
#include <queue>

#include "planeham/error.hpp"

namespace planeham {

int SimpleGraph::num_edges() const
{
    int twice = 0;
    for (const auto& a : adj) twice += static_cast<int>(a.size());
    return twice / 2;
}

void SimpleGraph::add_edge(int u, int v)
{
    if (u == v || adjacent(u, v)) return;
    adj[u].insert(std::lower_bound(adj[u].begin(), adj[u].end(), v), v);
    adj[v].insert(std::lower_bound(adj[v].begin(), adj[v].end(), u), u);
}

bool SimpleGraph::adjacent(int u, int v) const { return std::binary_search(adj[u].begin(), adj[u].end(), v); }

std::vector<std::pair<int, int>> SimpleGraph::edges() const
{
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < num_vertices(); ++u)
        for (int v : adj[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

bool SimpleGraph::is_connected() const
{
    if (adj.empty()) return false;
    std::vector<char> seen(adj.size(), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    std::size_t count = 1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int w : adj[v])
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
    }
    return count == adj.size();
}

bool SimpleGraph::is_bipartite() const
{
    std::vector<int> side(adj.size(), -1);
    for (int s = 0; s < num_vertices(); ++s) {
        if (side[s] != -1) continue;
        side[s] = 0;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            for (int w : adj[v]) {
                if (side[w] == -1) {
                    side[w] = 1 - side[v];
                    stack.push_back(w);
                } else if (side[w] == side[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

SimpleGraph underlying_simple(const PlaneGraph& g)
{
    SimpleGraph s(g.num_vertices());
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        const auto [a, b] = g.endpoints(e);
        s.add_edge(a, b);
    }
    return s;
}

int local_vertex_connectivity(const SimpleGraph& g, int s, int t, int stop_at)
{
    // split v into v_in = 2v and v_out = 2v+1 with unit capacity between them
    const int n = g.num_vertices();
    const int nodes = 2 * n;
    struct Arc {
        int to, cap, rev;
    };
    std::vector<std::vector<Arc>> net(nodes);
    auto add = [&](int a, int b, int cap) {
        net[a].push_back({b, cap, static_cast<int>(net[b].size())});
        net[b].push_back({a, 0, static_cast<int>(net[a].size()) - 1});
    };
    const int big = n + 1;
    for (int v = 0; v < n; ++v) add(2 * v, 2 * v + 1, (v == s || v == t) ? big : 1);
    for (int u = 0; u < n; ++u)
        for (int v : g.adj[u]) add(2 * u + 1, 2 * v, big);

    const int source = 2 * s + 1, sink = 2 * t;
    int flow = 0;
    while (stop_at < 0 || flow < stop_at) {
        std::vector<std::pair<int, int>> pred(nodes, {-1, -1});
        std::queue<int> q;
        q.push(source);
        pred[source] = {source, -1};
        while (!q.empty() && pred[sink].first == -1) {
            const int x = q.front();
            q.pop();
            for (int i = 0; i < static_cast<int>(net[x].size()); ++i) {
                const Arc& a = net[x][i];
                if (a.cap > 0 && pred[a.to].first == -1) {
                    pred[a.to] = {x, i};
                    q.push(a.to);
                }
            }
        }
        if (pred[sink].first == -1) break;
        for (int y = sink; y != source;) {
            auto [x, i] = pred[y];
            Arc& a = net[x][i];
            a.cap -= 1;
            net[a.to][a.rev].cap += 1;
            y = x;
        }
        ++flow;
    }
    return flow;
}

int vertex_connectivity(const SimpleGraph& g)
{
    const int n = g.num_vertices();
    if (n < 2) fail(ErrorKind::invalid_input, "vertex connectivity needs at least two vertices");
    if (!g.is_connected()) return 0;
    int best = n - 1;
    for (int s = 0; s < n; ++s)
        for (int t = s + 1; t < n; ++t)
            if (!g.adjacent(s, t)) best = std::min(best, local_vertex_connectivity(g, s, t, best));
    return best;
}

}  // namespace planeham
