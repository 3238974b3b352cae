#include "planeham/io.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>

#include "planeham/catalog.hpp"
#include "planeham/error.hpp"

namespace planeham {

namespace {

std::string trim(const std::string& s)
{
    const auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> tokens(const std::string& s)
{
    std::istringstream in(s);
    std::vector<std::string> out;
    for (std::string t; in >> t;) out.push_back(t);
    return out;
}

int parse_int(const std::string& s, const std::string& where)
{
    try {
        std::size_t used = 0;
        const int v = std::stoi(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        fail(ErrorKind::format, "expected an integer, got '" + s + "' " + where);
    }
}

std::vector<int> parse_ints(const std::vector<std::string>& toks, std::size_t from, const std::string& where)
{
    std::vector<int> out;
    for (std::size_t i = from; i < toks.size(); ++i) out.push_back(parse_int(toks[i], where));
    return out;
}

std::string line_ref(int line) { return "on line " + std::to_string(line); }

}  // namespace

// ---------------------------------------------------------------------------
// Text format

PlaneGraph parse_text_graph(const std::string& text)
{
    std::map<int, std::vector<RotationEntry>> lists;
    std::optional<std::string> outer;
    int outer_line = 0;
    std::istringstream in(text);
    int lineno = 0;
    for (std::string raw; std::getline(in, raw);) {
        ++lineno;
        std::string line = trim(raw.substr(0, raw.find('#')));
        if (line.empty()) continue;
        const auto colon = line.find(':');
        if (colon == std::string::npos) fail(ErrorKind::format, "missing ':' " + line_ref(lineno));
        const std::string key = trim(line.substr(0, colon));
        const std::string rest = line.substr(colon + 1);
        if (key == "outer") {
            outer = trim(rest);
            outer_line = lineno;
            continue;
        }
        const int v = parse_int(key, line_ref(lineno));
        if (v < 0) fail(ErrorKind::format, "negative vertex id " + line_ref(lineno));
        if (lists.count(v)) fail(ErrorKind::format, "vertex " + std::to_string(v) + " listed twice " + line_ref(lineno));
        auto& entries = lists[v];
        for (const auto& tok : tokens(rest)) {
            const auto at = tok.find('@');
            RotationEntry e;
            e.neighbor = parse_int(tok.substr(0, at), line_ref(lineno));
            if (at != std::string::npos) e.tag = parse_int(tok.substr(at + 1), line_ref(lineno));
            entries.push_back(e);
        }
    }
    if (lists.empty()) fail(ErrorKind::format, "no vertex lines");
    const int n = static_cast<int>(lists.size());
    if (lists.rbegin()->first != n - 1) fail(ErrorKind::format, "vertex ids must be 0.." + std::to_string(n - 1));
    NeighborRotations rot(n);
    for (auto& [v, entries] : lists) {
        for (const auto& e : entries)
            if (e.neighbor < 0 || e.neighbor >= n)
                fail(ErrorKind::format, "vertex " + std::to_string(v) + " lists unknown neighbour " + std::to_string(e.neighbor));
        rot[v] = std::move(entries);
    }

    try {
        if (!outer) return build_plane_graph(rot);
        const auto toks = tokens(*outer);
        if (toks.size() == 1 && toks[0].find(':') != std::string::npos) {
            const PlaneGraph g = build_plane_graph(rot);
            return g.with_outer_face(g.face_of(parse_dart_ref(g, toks[0])));
        }
        return build_plane_graph(rot, parse_ints(toks, 0, line_ref(outer_line)));
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::invalid_input) fail(ErrorKind::format, std::string("bad rotation system: ") + e.what());
        throw;
    }
}

std::string write_text_graph(const PlaneGraph& g)
{
    std::ostringstream out;
    const NeighborRotations rot = to_neighbor_rotations(g);
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        out << v << ":";
        for (const auto& e : rot[v]) {
            out << ' ' << e.neighbor;
            if (e.tag >= 0) out << '@' << e.tag;
        }
        out << '\n';
    }
    const auto vs = g.face_vertices(g.outer_face());
    const auto found = g.find_face(vs);
    out << "outer:";
    if (found && *found == g.outer_face())
        for (VertexId v : vs) out << ' ' << v;
    else
        out << ' ' << dart_ref(g, g.face_darts(g.outer_face()).front());
    out << '\n';
    return out.str();
}

// ---------------------------------------------------------------------------
// planar_code

std::vector<PlaneGraph> decode_planar_code(const std::string& bytes)
{
    const std::string magic = ">>planar_code";
    if (bytes.compare(0, magic.size(), magic) != 0) fail(ErrorKind::format, "bad header at byte 0: expected >>planar_code<<");
    const auto close = bytes.find("<<", magic.size());
    if (close == std::string::npos) fail(ErrorKind::format, "unterminated header at byte 0");
    const std::string variant = trim(bytes.substr(magic.size(), close - magic.size()));
    if (!variant.empty() && variant != "le" && variant != "be")
        fail(ErrorKind::format, "unknown header variant '" + variant + "' at byte " + std::to_string(magic.size()));
    const bool big_endian = variant == "be";

    std::size_t pos = close + 2;
    auto byte_at = [&](std::size_t p) { return static_cast<unsigned>(static_cast<unsigned char>(bytes[p])); };
    std::vector<PlaneGraph> out;
    while (pos < bytes.size()) {
        const std::size_t start = pos;
        bool wide = false;
        if (byte_at(pos) == 0) {
            wide = true;
            ++pos;
        }
        auto read = [&]() -> unsigned {
            if (wide) {
                if (pos + 2 > bytes.size()) fail(ErrorKind::format, "truncated record at byte " + std::to_string(pos));
                const unsigned a = byte_at(pos), b = byte_at(pos + 1);
                pos += 2;
                return big_endian ? (a << 8 | b) : (b << 8 | a);
            }
            if (pos >= bytes.size()) fail(ErrorKind::format, "truncated record at byte " + std::to_string(pos));
            return byte_at(pos++);
        };
        const int n = static_cast<int>(read());
        if (n == 0) fail(ErrorKind::format, "graph with no vertices at byte " + std::to_string(start));
        std::vector<std::vector<VertexId>> rot(n);
        for (int v = 0; v < n; ++v) {
            while (true) {
                const std::size_t at = pos;
                const unsigned w = read();
                if (w == 0) break;
                if (static_cast<int>(w) > n)
                    fail(ErrorKind::format, "neighbour " + std::to_string(w) + " out of range at byte " + std::to_string(at));
                rot[v].push_back(static_cast<VertexId>(w) - 1);
            }
            std::reverse(rot[v].begin(), rot[v].end());
        }
        try {
            out.push_back(build_plane_graph(rot));
        } catch (const Error& e) {
            fail(ErrorKind::format, "rotation inconsistency in graph at byte " + std::to_string(start) + ": " + e.what());
        }
    }
    return out;
}

std::string encode_planar_code(const std::vector<PlaneGraph>& graphs)
{
    std::string out = ">>planar_code<<";
    for (const auto& g : graphs) {
        const int n = g.num_vertices();
        const bool wide = n > 255;
        auto put = [&](unsigned x) {
            if (wide) {
                out.push_back(static_cast<char>(x & 0xff));
                out.push_back(static_cast<char>(x >> 8));
            } else {
                out.push_back(static_cast<char>(x));
            }
        };
        if (wide) out.push_back('\0');
        put(static_cast<unsigned>(n));
        for (VertexId v = 0; v < n; ++v) {
            const auto& r = g.rotation(v);
            for (auto it = r.rbegin(); it != r.rend(); ++it) put(static_cast<unsigned>(g.target(*it) + 1));
            put(0);
        }
    }
    return out;
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorKind::format, "cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& data)
{
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << data)) fail(ErrorKind::format, "cannot write " + path);
}

std::vector<PlaneGraph> load_graphs(const std::string& source)
{
    const std::string prefix = "catalog:";
    if (source.rfind(prefix, 0) == 0) {
        try {
            return {catalog(source.substr(prefix.size())).graph};
        } catch (const Error& e) {
            fail(ErrorKind::format, e.what());
        }
    }
    const std::string data = read_file(source);
    if (data.rfind(">>planar_code", 0) == 0) return decode_planar_code(data);
    return {parse_text_graph(data)};
}

PlaneGraph load_graph(const std::string& source)
{
    auto gs = load_graphs(source);
    if (gs.empty()) fail(ErrorKind::format, source + " holds no graph");
    return std::move(gs.front());
}

// ---------------------------------------------------------------------------
// Dart references

std::string dart_ref(const PlaneGraph& g, DartId d)
{
    return std::to_string(g.origin(d)) + ":" + std::to_string(g.rotation_index(d));
}

DartId parse_dart_ref(const PlaneGraph& g, const std::string& ref)
{
    const auto colon = ref.find(':');
    if (colon == std::string::npos) fail(ErrorKind::format, "dart reference '" + ref + "' lacks ':'");
    const int v = parse_int(ref.substr(0, colon), "in dart reference");
    const int i = parse_int(ref.substr(colon + 1), "in dart reference");
    if (v < 0 || v >= g.num_vertices() || i < 0 || i >= g.degree(v))
        fail(ErrorKind::format, "dart reference '" + ref + "' out of range");
    return g.rotation(v)[i];
}

// ---------------------------------------------------------------------------
// Certificates

std::vector<EdgeId> parse_edge_list(const PlaneGraph& g, const std::string& text)
{
    std::vector<EdgeId> out;
    std::istringstream in(text);
    for (std::string raw; std::getline(in, raw);)
        for (const auto& t : tokens(raw.substr(0, raw.find('#')))) {
            if (t.find(':') != std::string::npos) {
                out.push_back(PlaneGraph::edge_of(parse_dart_ref(g, t)));
            } else {
                const int e = parse_int(t, "in edge list");
                if (e < 0 || e >= g.num_edges()) fail(ErrorKind::format, "edge " + t + " out of range");
                out.push_back(e);
            }
        }
    return out;
}

FaceTree parse_face_tree(const PlaneGraph& g, const std::string& text)
{
    FaceTree t;
    bool has_proper = false;
    std::istringstream in(text);
    int lineno = 0;
    for (std::string raw; std::getline(in, raw);) {
        ++lineno;
        const std::string line = trim(raw.substr(0, raw.find('#')));
        if (line.empty()) continue;
        const auto colon = line.find(':');
        const std::string key = colon == std::string::npos ? "" : trim(line.substr(0, colon));
        const auto toks = tokens(line.substr(colon + 1));
        if (key == "faces") {
            for (const auto& tok : toks) {
                if (tok.find(':') != std::string::npos) {
                    t.faces.push_back(g.face_of(parse_dart_ref(g, tok)));
                } else {
                    const int f = parse_int(tok, line_ref(lineno));
                    if (f < 0 || f >= g.num_faces()) fail(ErrorKind::format, "face " + tok + " out of range");
                    t.faces.push_back(f);
                }
            }
        } else if (key == "proper") {
            has_proper = true;
            t.proper = parse_ints(toks, 0, line_ref(lineno));
        } else if (key == "quasi") {
            t.quasi = parse_ints(toks, 0, line_ref(lineno));
        } else {
            fail(ErrorKind::format, "expected faces:, proper: or quasi: " + line_ref(lineno));
        }
    }
    std::sort(t.faces.begin(), t.faces.end());
    std::sort(t.quasi.begin(), t.quasi.end());
    if (!has_proper)
        for (VertexId v = 0; v < g.num_vertices(); ++v)
            if (!std::binary_search(t.quasi.begin(), t.quasi.end(), v)) t.proper.push_back(v);
    std::sort(t.proper.begin(), t.proper.end());
    return t;
}

namespace {

const char* kind_name(ErrorKind k)
{
    switch (k) {
    case ErrorKind::invalid_input: return "invalid_input";
    case ErrorKind::hypothesis: return "hypothesis";
    case ErrorKind::verification: return "verification";
    case ErrorKind::format: return "format";
    case ErrorKind::guard: return "guard";
    }
    return "?";
}

ErrorKind kind_from(const std::string& s)
{
    for (ErrorKind k : {ErrorKind::invalid_input, ErrorKind::hypothesis, ErrorKind::verification, ErrorKind::format,
                        ErrorKind::guard})
        if (s == kind_name(k)) return k;
    fail(ErrorKind::format, "unknown failure kind '" + s + "'");
}

const std::string kMagic = "planeham-certificate 1";

}  // namespace

std::string write_certificate(const CertificateBundle& b)
{
    std::ostringstream out;
    out << kMagic << '\n';
    out << "input " << b.input_id << '\n';
    out << "strategy " << b.strategy << '\n';
    if (b.failure_kind)
        out << "status failed " << kind_name(*b.failure_kind) << '\n' << "failure " << b.failure << '\n';
    else
        out << "status ok\n";
    out << "elapsed_ms " << std::fixed << std::setprecision(3) << b.elapsed_ms << '\n';
    const std::string graph = write_text_graph(b.graph);
    out << "graph " << std::count(graph.begin(), graph.end(), '\n') << '\n' << graph;
    if (b.cycle) {
        out << "cycle " << b.cycle->size() << '\n';
        for (std::size_t i = 0; i < b.cycle->size(); ++i)
            out << (i ? " " : "") << dart_ref(b.graph, 2 * (*b.cycle)[i]);
        out << '\n';
    }
    if (b.face_tree) {
        out << "facetree\n" << "faces:";
        for (FaceId f : b.face_tree->faces) out << ' ' << dart_ref(b.graph, b.graph.face_darts(f).front());
        out << "\nproper:";
        for (VertexId v : b.face_tree->proper) out << ' ' << v;
        out << "\nquasi:";
        for (VertexId v : b.face_tree->quasi) out << ' ' << v;
        out << '\n';
    }
    out << "end\n";
    return out.str();
}

std::vector<CertificateBundle> read_certificates(const std::string& text)
{
    std::vector<std::string> lines;
    {
        std::istringstream in(text);
        for (std::string l; std::getline(in, l);) lines.push_back(l);
    }
    std::vector<CertificateBundle> out;
    std::size_t i = 0;
    auto where = [&]() { return "on certificate line " + std::to_string(i + 1); };
    auto next = [&]() -> const std::string& {
        if (i >= lines.size()) fail(ErrorKind::format, "certificate truncated");
        return lines[i++];
    };
    auto keyed = [&](const std::string& key) {
        const std::string& l = next();
        if (l.rfind(key + " ", 0) != 0 && l != key) fail(ErrorKind::format, "expected '" + key + "' " + where());
        return l.size() > key.size() ? l.substr(key.size() + 1) : std::string();
    };
    while (i < lines.size()) {
        if (trim(lines[i]).empty()) {
            ++i;
            continue;
        }
        if (next() != kMagic) fail(ErrorKind::format, "bad certificate header " + where());
        CertificateBundle b;
        b.input_id = keyed("input");
        b.strategy = keyed("strategy");
        const auto status = tokens(keyed("status"));
        if (status.empty()) fail(ErrorKind::format, "empty status " + where());
        if (status[0] == "failed") {
            if (status.size() < 2) fail(ErrorKind::format, "failure without kind " + where());
            b.failure_kind = kind_from(status[1]);
            b.failure = keyed("failure");
        } else if (status[0] != "ok") {
            fail(ErrorKind::format, "unknown status " + where());
        }
        try {
            b.elapsed_ms = std::stod(keyed("elapsed_ms"));
        } catch (const std::invalid_argument&) {
            fail(ErrorKind::format, "bad elapsed_ms " + where());
        }
        const int glines = parse_int(keyed("graph"), where());
        std::string graph;
        for (int k = 0; k < glines; ++k) graph += next() + "\n";
        b.graph = parse_text_graph(graph);
        while (true) {
            const std::string l = next();
            if (l == "end") break;
            if (l.rfind("cycle ", 0) == 0) {
                const int k = parse_int(l.substr(6), where());
                auto edges = parse_edge_list(b.graph, next());
                if (static_cast<int>(edges.size()) != k) fail(ErrorKind::format, "cycle length mismatch " + where());
                b.cycle = std::move(edges);
            } else if (l == "facetree") {
                std::string body;
                for (int k = 0; k < 3; ++k) body += next() + "\n";
                b.face_tree = parse_face_tree(b.graph, body);
            } else {
                fail(ErrorKind::format, "unexpected line " + where());
            }
        }
        out.push_back(std::move(b));
    }
    return out;
}

CertificateBundle read_certificate(const std::string& text)
{
    auto all = read_certificates(text);
    if (all.size() != 1) fail(ErrorKind::format, "expected exactly one certificate, found " + std::to_string(all.size()));
    return std::move(all.front());
}

CertificateCheck verify_certificate(const CertificateBundle& b)
{
    if (b.failure_kind) return {false, "bundle records a failure: " + b.failure};
    if (!b.cycle && !b.face_tree) return {false, "bundle holds no certificate"};
    if (b.cycle) {
        const auto v = verify_hamiltonian(b.graph, *b.cycle);
        if (!v.ok) return {false, "cycle: " + v.violation};
    }
    if (b.face_tree) {
        const auto v = validate_face_tree(b.graph, *b.face_tree);
        if (!v.empty()) return {false, "face tree: " + v.front().message};
    }
    return {true, "verified"};
}

}  // namespace planeham
