#include "planeham/render.hpp"

#include <Eigen/Sparse>
#include <Eigen/SparseLU>

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <sstream>

#include "planeham/planar_core.hpp"

namespace planeham {

bool uses_convex_layout(const PlaneGraph& g)
{
    if (g.num_vertices() < 4 || !g.is_simple()) return false;
    auto outer = g.face_vertices(g.outer_face());
    std::sort(outer.begin(), outer.end());
    if (std::adjacent_find(outer.begin(), outer.end()) != outer.end()) return false;
    return vertex_connectivity(g) >= 3;
}

namespace {

std::vector<std::pair<double, double>> tutte_layout(const PlaneGraph& g)
{
    const int n = g.num_vertices();
    std::vector<std::pair<double, double>> pos(n);
    std::vector<int> index(n, -1);
    const auto outer = g.face_vertices(g.outer_face());
    const int k = static_cast<int>(outer.size());
    std::vector<char> fixed(n, 0);
    for (int i = 0; i < k; ++i) {
        // outer boundary runs clockwise under the face-left convention
        const double a = std::numbers::pi / 2 - 2 * std::numbers::pi * i / k;
        pos[outer[i]] = {std::cos(a), std::sin(a)};
        fixed[outer[i]] = 1;
    }
    int m = 0;
    for (VertexId v = 0; v < n; ++v)
        if (!fixed[v]) index[v] = m++;
    if (m == 0) return pos;

    Eigen::SparseMatrix<double> lap(m, m);
    Eigen::VectorXd bx = Eigen::VectorXd::Zero(m), by = Eigen::VectorXd::Zero(m);
    std::vector<Eigen::Triplet<double>> trip;
    for (VertexId v = 0; v < n; ++v) {
        if (fixed[v]) continue;
        const int r = index[v];
        trip.emplace_back(r, r, g.degree(v));
        for (DartId d : g.rotation(v)) {
            const VertexId w = g.target(d);
            if (fixed[w]) {
                bx[r] += pos[w].first;
                by[r] += pos[w].second;
            } else {
                trip.emplace_back(r, index[w], -1.0);
            }
        }
    }
    lap.setFromTriplets(trip.begin(), trip.end());
    Eigen::SparseLU<Eigen::SparseMatrix<double>> solver;
    solver.compute(lap);
    const Eigen::VectorXd x = solver.solve(bx), y = solver.solve(by);
    for (VertexId v = 0; v < n; ++v)
        if (!fixed[v]) pos[v] = {x[index[v]], y[index[v]]};
    return pos;
}

std::vector<std::pair<double, double>> layered_layout(const PlaneGraph& g)
{
    const int n = g.num_vertices();
    std::vector<int> layer(n, -1);
    std::vector<std::vector<VertexId>> layers;
    std::vector<VertexId> queue{g.face_vertices(g.outer_face()).front()};
    layer[queue[0]] = 0;
    for (std::size_t i = 0; i < queue.size(); ++i) {
        const VertexId v = queue[i];
        if (static_cast<int>(layers.size()) <= layer[v]) layers.emplace_back();
        layers[layer[v]].push_back(v);
        for (DartId d : g.rotation(v)) {
            const VertexId w = g.target(d);
            if (layer[w] < 0) {
                layer[w] = layer[v] + 1;
                queue.push_back(w);
            }
        }
    }
    std::vector<std::pair<double, double>> pos(n);
    const double depth = std::max<double>(1, static_cast<double>(layers.size()) - 1);
    for (std::size_t l = 0; l < layers.size(); ++l) {
        const double w = static_cast<double>(layers[l].size());
        for (std::size_t i = 0; i < layers[l].size(); ++i)
            pos[layers[l][i]] = {w == 1 ? 0.0 : -1 + 2 * i / (w - 1), 1 - 2 * l / depth};
    }
    return pos;
}

std::string num(double x)
{
    std::ostringstream s;
    s.setf(std::ios::fixed);
    s.precision(2);
    s << (std::abs(x) < 0.005 ? 0.0 : x);
    return s.str();
}

}  // namespace

std::vector<std::pair<double, double>> layout(const PlaneGraph& g)
{
    return uses_convex_layout(g) ? tutte_layout(g) : layered_layout(g);
}

std::string render_svg(const PlaneGraph& g, const RenderOptions& opt)
{
    const auto unit = layout(g);
    const double margin = 30, half = opt.size / 2 - margin;
    std::vector<std::pair<double, double>> p;
    for (auto [x, y] : unit) p.emplace_back(opt.size / 2 + half * x, opt.size / 2 - half * y);

    std::vector<char> hl_edge(g.num_edges(), 0), hl_face(g.num_faces(), 0);
    for (EdgeId e : opt.highlight_edges)
        if (e >= 0 && e < g.num_edges()) hl_edge[e] = 1;
    for (FaceId f : opt.highlight_faces)
        if (f >= 0 && f < g.num_faces()) hl_face[f] = 1;

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(opt.size) << "\" height=\""
        << num(opt.size) << "\" viewBox=\"0 0 " << num(opt.size) << ' ' << num(opt.size) << "\">\n"
        << "<g class=\"faces\">\n";
    for (FaceId f = 0; f < g.num_faces(); ++f) {
        out << "<polygon class=\"face" << (hl_face[f] ? " hl" : "") << (g.is_outer(f) ? " outer" : "")
            << "\" data-face=\"" << f << "\" fill=\"" << (hl_face[f] ? "#f6d365" : "none") << "\" points=\"";
        bool first = true;
        for (VertexId v : g.face_vertices(f)) {
            out << (first ? "" : " ") << num(p[v].first) << ',' << num(p[v].second);
            first = false;
        }
        out << "\"/>\n";
    }
    out << "</g>\n<g class=\"edges\">\n";
    std::map<std::pair<VertexId, VertexId>, int> seen;
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        const auto [a, b] = g.endpoints(e);
        const auto key = std::minmax(a, b);
        const int k = seen[key]++;
        const char* stroke = hl_edge[e] ? "#d62728" : "#333333";
        const char* width = hl_edge[e] ? "3" : "1.2";
        const std::string cls = hl_edge[e] ? "edge hl" : "edge";
        if (a == b) {
            const double r = 12 + 6 * k;
            out << "<circle class=\"" << cls << "\" data-edge=\"" << e << "\" cx=\"" << num(p[a].first) << "\" cy=\""
                << num(p[a].second - r) << "\" r=\"" << num(r) << "\" fill=\"none\" stroke=\"" << stroke
                << "\" stroke-width=\"" << width << "\"/>\n";
        } else if (k == 0) {
            out << "<line class=\"" << cls << "\" data-edge=\"" << e << "\" x1=\"" << num(p[a].first) << "\" y1=\""
                << num(p[a].second) << "\" x2=\"" << num(p[b].first) << "\" y2=\"" << num(p[b].second)
                << "\" stroke=\"" << stroke << "\" stroke-width=\"" << width << "\"/>\n";
        } else {
            // parallel copies bow out alternately to each side
            const auto [u, w] = key;
            const double dx = p[w].first - p[u].first, dy = p[w].second - p[u].second;
            const double len = std::max(1e-9, std::hypot(dx, dy));
            const double off = 18.0 * ((k + 1) / 2) * (k % 2 ? 1 : -1);
            const double cx = (p[u].first + p[w].first) / 2 - dy / len * off;
            const double cy = (p[u].second + p[w].second) / 2 + dx / len * off;
            out << "<path class=\"" << cls << "\" data-edge=\"" << e << "\" d=\"M " << num(p[u].first) << ' '
                << num(p[u].second) << " Q " << num(cx) << ' ' << num(cy) << ' ' << num(p[w].first) << ' '
                << num(p[w].second) << "\" fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\"" << width
                << "\"/>\n";
        }
    }
    out << "</g>\n<g class=\"vertices\">\n";
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        out << "<circle class=\"vertex\" data-vertex=\"" << v << "\" cx=\"" << num(p[v].first) << "\" cy=\""
            << num(p[v].second) << "\" r=\"5\" fill=\"#1f77b4\"/>\n";
        if (opt.labels)
            out << "<text x=\"" << num(p[v].first + 7) << "\" y=\"" << num(p[v].second - 7)
                << "\" font-size=\"11\" font-family=\"sans-serif\">" << v << "</text>\n";
    }
    out << "</g>\n</svg>\n";
    return out.str();
}

}  // namespace planeham
