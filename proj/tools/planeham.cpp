// Command-line front end. Exit codes: 0 ok, 1 hypothesis or guard,
// 2 verification failure, 3 I/O, format or usage error.

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "planeham/batch.hpp"
#include "planeham/catalog.hpp"
#include "planeham/error.hpp"
#include "planeham/face_trees.hpp"
#include "planeham/hamiltonian.hpp"
#include "planeham/io.hpp"
#include "planeham/planar_core.hpp"
#include "planeham/render.hpp"
#include "planeham/transforms.hpp"
#include "planeham/triangles.hpp"

using namespace planeham;

namespace {

enum Exit { ok = 0, hypothesis = 1, verification = 2, io = 3 };

int exit_code(ErrorKind k)
{
    switch (k) {
    case ErrorKind::verification: return verification;
    case ErrorKind::format: return io;
    default: return hypothesis;
    }
}

template <class T>
std::string join(const std::vector<T>& xs)
{
    std::ostringstream s;
    for (std::size_t i = 0; i < xs.size(); ++i) s << (i ? " " : "") << xs[i];
    return s.str();
}

void emit(const std::string& text, const std::string& out)
{
    if (out.empty() || out == "-")
        std::cout << text;
    else
        write_file(out, text);
}

std::string face_tree_text(const FaceTree& t)
{
    return "faces: " + join(t.faces) + "\nproper: " + join(t.proper) + "\nquasi: " + join(t.quasi) + "\n";
}

PlaneGraph pick(const std::string& source, int index)
{
    const auto all = load_graphs(source);
    if (index < 0 || index >= static_cast<int>(all.size()))
        fail(ErrorKind::format, source + " holds " + std::to_string(all.size()) + " graphs, no index " +
                                    std::to_string(index));
    return all[index];
}

int cmd_info(const PlaneGraph& g)
{
    std::cout << "vertices " << g.num_vertices() << "\nedges " << g.num_edges() << "\nfaces " << g.num_faces()
              << "\ndegree " << g.min_degree() << ".." << g.max_degree() << "\nouter "
              << join(g.face_vertices(g.outer_face())) << "\nsimple " << g.is_simple() << "\ncubic " << g.is_cubic()
              << "\nbipartite " << g.is_bipartite() << "\neulerian " << g.is_eulerian()
              << "\nvertex_connectivity " << vertex_connectivity(g) << '\n';
    if (g.is_cubic() && g.num_vertices() >= 6 && has_two_disjoint_cycles(g))
        std::cout << "cyclic_edge_connectivity " << cyclic_edge_connectivity(g) << '\n';
    if (g.is_cubic())
        if (const auto r = recognize_leapfrog(g))
            std::cout << "leapfrog_of " << r->base.num_vertices() << " vertices\n";
    return ok;
}

PlaneGraph reduce(const PlaneGraph& g, const std::vector<FaceId>& faces)
{
    if (!g.is_cubic()) fail(ErrorKind::hypothesis, "reduce needs a cubic graph");
    FacialTwoFactor q;
    if (!faces.empty()) {
        q = make_facial_two_factor(g, faces);
    } else if (const auto r = recognize_leapfrog(g)) {
        q = r->q;
    } else {
        const auto all = enumerate_facial_two_factors(g, 1);
        if (all.empty()) fail(ErrorKind::hypothesis, "no facial 2-factor");
        q = all.front();
    }
    const auto moved = reroot_to_qc(g, q);
    return contract_factor(moved ? *moved : g, q).h;
}

int cmd_transform(const PlaneGraph& g, const std::string& op, const std::vector<FaceId>& faces, const std::string& out)
{
    PlaneGraph r;
    if (op == "lf")
        r = leapfrog(g).graph;
    else if (op == "dual")
        r = dual(g);
    else if (op == "truncate")
        r = truncate(g);
    else if (op == "radial")
        r = radial_embedding(g);
    else
        r = reduce(g, faces);
    emit(write_text_graph(r), out);
    return ok;
}

int cmd_ham(const PlaneGraph& g, const std::string& source, Strategy s, int guard, const std::string& out)
{
    PipelineOptions opt;
    if (guard > 0) opt.payan_guard = opt.brute_guard = guard;
    const auto b = run_one(g, source, s, opt);
    emit(write_certificate(b), out);
    if (b.failure_kind) {
        std::cerr << "failed: " << b.failure << '\n';
        return exit_code(*b.failure_kind);
    }
    std::cerr << "hamiltonian cycle of Lf with " << b.cycle->size() << " edges\n";
    return ok;
}

int cmd_check(const PlaneGraph& g, bool invariant, const std::string& facetree, bool atrail, const std::string& cycle)
{
    int status = ok;
    if (invariant) {
        const auto r = check_invariant_property(g);
        if (r.holds) {
            std::cout << "invariant holds over " << r.lattice.triangles.size() << " triangles\n";
        } else {
            const auto& w = *r.witness;
            std::cout << "invariant fails at triangle " << join(r.lattice.triangles[w.triangle].vertices) << ": ";
            if (w.kind == InvariantWitness::Kind::too_many_successors)
                std::cout << w.successors.size() << " direct successors\n";
            else
                std::cout << "separating digon on edges " << join(r.lattice.digons[w.digon].edges) << '\n';
            status = hypothesis;
        }
    }
    if (!facetree.empty()) {
        const auto t = parse_face_tree(g, read_file(facetree));
        const auto v = validate_face_tree(g, t);
        for (const auto& x : v) std::cout << "face tree: " << x.message << '\n';
        if (v.empty())
            std::cout << (t.quasi.empty() ? "spanning" : "quasi spanning") << " tree of " << t.faces.size()
                      << " faces\n";
        else
            status = verification;
    }
    if (atrail) {
        const auto a = find_a_trail(g);
        if (!a) {
            std::cout << "no A-trail\n";
            if (status == ok) status = hypothesis;
        } else {
            std::vector<std::string> refs;
            for (DartId d : a->trail) refs.push_back(dart_ref(g, d));
            const auto t = a_trail_to_face_tree(g, a->trail);
            std::cout << "atrail: " << join(refs) << '\n' << face_tree_text(t);
            if (!is_face_tree(g, t)) status = verification;
        }
    }
    if (!cycle.empty()) {
        const auto v = verify_hamiltonian(g, parse_edge_list(g, read_file(cycle)));
        if (v.ok) {
            std::cout << "hamiltonian cycle, " << v.cycle->interior_faces.size() << " faces inside\n";
        } else {
            std::cout << "not hamiltonian: " << v.violation << '\n';
            status = verification;
        }
    }
    return status;
}

int cmd_kappa(const PlaneGraph& g, bool cyclic, bool vertex)
{
    if (!cyclic && !vertex) vertex = true;
    if (vertex) std::cout << "vertex " << vertex_connectivity(g) << '\n';
    if (cyclic) std::cout << "cyclic_edge " << cyclic_edge_connectivity(g) << '\n';
    return ok;
}

int cmd_render(const PlaneGraph& g, const std::string& out, const std::string& highlight,
               const std::string& faces)
{
    RenderOptions opt;
    if (!highlight.empty()) opt.highlight_edges = parse_edge_list(g, read_file(highlight));
    if (!faces.empty()) opt.highlight_faces = parse_face_tree(g, read_file(faces)).faces;
    emit(render_svg(g, opt), out);
    return ok;
}

int cmd_batch(const std::string& in, Strategy s, int jobs, int guard, const std::string& report)
{
    const auto graphs = load_graphs(in);
    std::vector<std::string> ids;
    for (std::size_t i = 0; i < graphs.size(); ++i) ids.push_back(in + "#" + std::to_string(i));
    PipelineOptions opt;
    if (guard > 0) opt.payan_guard = opt.brute_guard = guard;
    const auto results = run_batch(graphs, ids, s, jobs, opt);
    std::string text;
    int solved = 0, defects = 0;
    for (const auto& b : results) {
        text += write_certificate(b);
        if (!b.failure_kind)
            ++solved;
        else if (*b.failure_kind == ErrorKind::verification)
            ++defects;
    }
    emit(text, report);
    std::cerr << solved << " of " << results.size() << " solved, " << defects << " verification failures\n";
    return defects ? verification : ok;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Hamiltonian cycles of leapfrog graphs via spanning trees of faces"};
    app.require_subcommand(1);
    int index = 0;
    std::string source;
    auto add_input = [&](CLI::App* sub) {
        sub->add_option("input", source, "text graph, planar_code file or catalog:NAME")->required();
        sub->add_option("--index", index, "graph index inside a multi-graph file");
    };

    auto* info = app.add_subcommand("info", "summary of a plane graph");
    add_input(info);

    std::string op, out;
    std::vector<FaceId> faces;
    auto* transform = app.add_subcommand("transform", "lf, dual, truncate, radial or reduce (G/Q)");
    add_input(transform);
    transform->add_option("--op", op)->required()->check(CLI::IsMember({"lf", "dual", "truncate", "radial", "reduce"}));
    transform->add_option("--faces", faces, "Q faces for reduce; default from leapfrog recognition");
    transform->add_option("--out", out, "output text graph");

    std::string strategy = "faces";
    int guard = 0;
    auto* ham = app.add_subcommand("ham", "Hamiltonian cycle of Lf(input) as a certificate");
    add_input(ham);
    ham->add_option("--strategy", strategy)->check(CLI::IsMember({"faces", "payan", "brute"}));
    ham->add_option("--guard", guard, "size limit for exhaustive searches");
    ham->add_option("--out", out, "certificate file");

    bool invariant = false, atrail = false;
    std::string facetree, cycle, certificate;
    auto* check = app.add_subcommand("check", "checks on the input graph or a certificate");
    check->add_option("input", source, "text graph, planar_code file or catalog:NAME");
    check->add_option("--index", index);
    check->add_flag("--invariant", invariant, "separating triangle property");
    check->add_option("--facetree", facetree, "face tree file to validate");
    check->add_flag("--atrail", atrail, "search an A-trail and derive its face tree");
    check->add_option("--cycle", cycle, "edge list to verify as a Hamiltonian cycle");
    check->add_option("--certificate", certificate, "certificate file to re-verify");

    bool cyclic = false, vertex = false;
    auto* kappa = app.add_subcommand("kappa", "connectivity");
    add_input(kappa);
    kappa->add_flag("--cyclic", cyclic, "cyclic edge-connectivity (cubic)");
    kappa->add_flag("--vertex", vertex, "vertex connectivity");

    std::string highlight, highlight_faces;
    auto* render = app.add_subcommand("render", "SVG drawing");
    add_input(render);
    render->add_option("--out", out)->required();
    render->add_option("--highlight", highlight, "edge list file");
    render->add_option("--highlight-faces", highlight_faces, "face tree file");

    std::string in;
    int jobs = 1;
    auto* batch = app.add_subcommand("batch", "pipeline over every graph of a file");
    batch->add_option("--in", in)->required();
    batch->add_option("--strategy", strategy)->check(CLI::IsMember({"faces", "payan", "brute"}));
    batch->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
    batch->add_option("--guard", guard);
    std::string report;
    batch->add_option("--report", report, "concatenated certificates")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? ok : io;
    }

    try {
        if (*batch) {
            const auto s = parse_strategy(strategy);
            return cmd_batch(in, *s, jobs, guard, report);
        }
        if (*check && !certificate.empty()) {
            int status = ok;
            for (const auto& b : read_certificates(read_file(certificate))) {
                const auto c = verify_certificate(b);
                std::cout << b.input_id << ": " << (c.ok ? "ok" : "FAILED " + c.message) << '\n';
                if (!c.ok) status = b.failure_kind ? std::max<int>(status, exit_code(*b.failure_kind)) : verification;
            }
            if (source.empty()) return status;
            const int rest = cmd_check(pick(source, index), invariant, facetree, atrail, cycle);
            return std::max(status, rest);
        }
        if (source.empty()) throw CLI::RequiredError("input");
        const auto g = pick(source, index);
        if (*info) return cmd_info(g);
        if (*transform) return cmd_transform(g, op, faces, out);
        if (*ham) return cmd_ham(g, source, *parse_strategy(strategy), guard, out);
        if (*check) return cmd_check(g, invariant, facetree, atrail, cycle);
        if (*kappa) return cmd_kappa(g, cyclic, vertex);
        if (*render) return cmd_render(g, out, highlight, highlight_faces);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code(e.kind());
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return io;
    }
    return ok;
}
