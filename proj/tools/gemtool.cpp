#include "gem/canonical.hpp"
#include "gem/enumerate.hpp"
#include "gem/io.hpp"
#include "gem/reduce.hpp"
#include "gem/surfaces.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <set>

using namespace gem;

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;
constexpr int kInvalid = 3;

ColoredGraph load_graph(const std::string& path) { return parse_graph(read_file(path)); }

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty() || out_path == "-")
        std::cout << content;
    else
        write_file(out_path, content);
}

int cmd_validate(const std::string& file) {
    const ColoredGraph g = load_graph(file);
    std::cout << "valid, n=" << g.vertex_count() << '\n';
    return kOk;
}

int cmd_info(const std::string& file) {
    const ColoredGraph g = load_graph(file);
    const int n = g.vertex_count();
    std::cout << "n=" << n << '\n';
    const bool contracted = is_contracted(g);
    std::cout << "contracted: " << (contracted ? "yes" : "no") << '\n';
    std::cout << "cycles:";
    for (const auto& [i, j] : {std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 2}})
        std::cout << " {" << i << ',' << j << "}=" << cycle_count(g, i, j);
    std::cout << '\n';
    if (!is_connected(g)) {
        std::cout << "connected: no\n";
        std::cout << (contracted ? "contracted" : "not contracted") << " disconnected\n";
        return kOk;
    }
    const bool bipartite = is_bipartite(g).has_value();
    const int chi = complex_stats(g).euler_characteristic;
    std::cout << "bipartite: " << (bipartite ? "yes" : "no") << '\n';
    std::cout << "χ=" << chi << '\n';
    std::string summary = std::string(contracted ? "contracted" : "not contracted") + " " +
                          (bipartite ? "bipartite" : "non-bipartite") + " χ=" + std::to_string(chi);
    if (contracted) {
        const CanonicalForm form = canonical_of(n, bipartite);
        const SurfaceClass surface = classify_surface(g);
        std::cout << "form: " << to_string(form) << '\n';
        std::cout << "surface: " << to_string(surface) << '\n';
        summary += " " + to_string(form) + " " + to_string(surface);
    }
    std::cout << summary << '\n';
    return kOk;
}

int cmd_reduce(const std::string& file, const std::string& out) {
    const ColoredGraph g = load_graph(file);
    if (!is_contracted(g)) {
        std::cerr << "error: graph is not contracted\n";
        return kNegative;
    }
    const Reduction r = reduce(g);
    emit(out, write_trace(r.certificate));
    std::cerr << to_string(r.form) << ": " << r.certificate.step_count() << " steps in "
              << r.certificate.section_count() << " sections\n";
    return kOk;
}

int cmd_verify(const std::string& file, const std::string& trace_file) {
    const ColoredGraph g = load_graph(file);
    const Certificate cert = parse_trace(read_file(trace_file));
    try {
        const VerifiedCertificate v = verify_certificate(g, cert);
        if (v.conclusion)
            std::cout << "verified: " << to_string(*v.conclusion) << '\n';
        else
            std::cout << "verified: " << fingerprint(v.final_graph) << '\n';
        return kOk;
    } catch (const CertificateError& e) {
        std::cout << "verification failed: " << e.what() << '\n';
        return kNegative;
    }
}

int cmd_apply(const std::string& file, const std::string& trace_file, const std::string& out) {
    const ColoredGraph g = load_graph(file);
    const Certificate cert = parse_trace(read_file(trace_file));
    try {
        emit(out, write_graph(verify_certificate(g, cert).final_graph));
        return kOk;
    } catch (const CertificateError& e) {
        std::cerr << "verification failed: " << e.what() << '\n';
        return kNegative;
    }
}

int cmd_gen(const std::string& family, int m, const std::string& out) {
    CanonicalForm form;
    if (family == "L") {
        form = CanonicalForm::L();
    } else if (family == "P" || family == "T") {
        if (m < 1) {
            std::cerr << "error: " << family << " needs m >= 1\n";
            return kUsage;
        }
        form = family == "P" ? CanonicalForm::P(m) : CanonicalForm::T(m);
    } else {
        std::cerr << "error: family must be L, P or T\n";
        return kUsage;
    }
    emit(out, write_graph(realize(form)));
    return kOk;
}

int cmd_enum(int n, int bound, const std::string& out_dir) {
    Catalog cat;
    try {
        cat = enumerate_contracted(n, bound);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    std::set<std::string> forms;
    for (const auto& e : cat.classes) forms.insert(to_string(e.form));
    std::string form_list;
    for (const auto& f : forms) form_list += (form_list.empty() ? "" : ",") + f;

    if (!out_dir.empty()) {
        namespace fs = std::filesystem;
        fs::create_directories(out_dir);
        int k = 0;
        for (const auto& e : cat.classes) {
            const std::string name = "n" + std::to_string(n) + "_class" + std::to_string(++k) + ".gem";
            write_file((fs::path(out_dir) / name).string(), write_graph(e.graph));
        }
        write_file((fs::path(out_dir) / "summary.tsv").string(),
                   "n\tclasses\tbipartite\tcanonical_forms\n" + std::to_string(n) + "\t" +
                       std::to_string(cat.classes.size()) + "\t" + std::to_string(cat.bipartite_count()) + "\t" +
                       form_list + "\n");
    }
    std::cout << cat.classes.size() << (cat.classes.size() == 1 ? " class, " : " classes, ") << cat.bipartite_count()
              << " bipartite\n";
    return kOk;
}

int cmd_iso(const std::string& a, const std::string& b) {
    const ColoredGraph g = load_graph(a);
    const ColoredGraph h = load_graph(b);
    const auto map = are_isomorphic(g, h);
    if (!map) {
        std::cout << "non-isomorphic\n";
        return kNegative;
    }
    std::cout << "isomorphic:";
    for (Vertex v = 1; v <= g.vertex_count(); ++v) std::cout << ' ' << v << "->" << (*map)[v - 1];
    std::cout << '\n';
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Colored graph crystallizations of closed surfaces"};
    app.require_subcommand(1);
    int result = kOk;
    std::string file, file2, out, family, out_dir;
    int m = 0, n = 0, bound = kDefaultEnumerationBound;

    auto* validate = app.add_subcommand("validate", "Parse and validate a graph file");
    validate->add_option("file", file)->required();
    validate->callback([&] { result = cmd_validate(file); });

    auto* info = app.add_subcommand("info", "Print invariants, canonical form and surface");
    info->add_option("file", file)->required();
    info->callback([&] { result = cmd_info(file); });

    auto* red = app.add_subcommand("reduce", "Reduce a contracted graph and write its certificate");
    red->add_option("file", file)->required();
    red->add_option("-o,--output", out, "Trace file (default stdout)");
    red->callback([&] { result = cmd_reduce(file, out); });

    auto* verify = app.add_subcommand("verify", "Replay a trace against a graph");
    verify->add_option("file", file)->required();
    verify->add_option("trace", file2)->required();
    verify->callback([&] { result = cmd_verify(file, file2); });

    auto* apply = app.add_subcommand("apply", "Replay a trace and write the final graph");
    apply->add_option("file", file)->required();
    apply->add_option("trace", file2)->required();
    apply->add_option("-o,--output", out, "Graph file (default stdout)");
    apply->callback([&] { result = cmd_apply(file, file2, out); });

    auto* gen = app.add_subcommand("gen", "Write the generator L, P(m) or T(m)");
    gen->add_option("family", family)->required();
    gen->add_option("m", m);
    gen->add_option("-o,--output", out, "Graph file (default stdout)");
    gen->callback([&] { result = cmd_gen(family, m, out); });

    auto* en = app.add_subcommand("enum", "Enumerate contracted graphs on n vertices");
    en->add_option("n", n)->required();
    en->add_option("--bound", bound, "Largest n allowed")->capture_default_str();
    en->add_option("--out-dir", out_dir, "Write one file per class plus summary.tsv");
    en->callback([&] { result = cmd_enum(n, bound, out_dir); });

    auto* iso = app.add_subcommand("iso", "Test two graph files for isomorphism");
    iso->add_option("a", file)->required();
    iso->add_option("b", file2)->required();
    iso->callback([&] { result = cmd_iso(file, file2); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInvalid;
    } catch (const GraphError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInvalid;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInvalid;
    }
    return result;
}
