#include "zk/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <optional>

#include "zk/classifier.hpp"
#include "zk/errors.hpp"
#include "zk/hochster.hpp"
#include "zk/io.hpp"
#include "zk/report.hpp"

namespace zk {

namespace {

std::string vector_text(const std::vector<long>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? " " : "") + std::to_string(v[i]);
    return out;
}

std::string labels_text(const SimplicialComplex& k, VertexSet s) {
    std::string out = "{";
    bool first = true;
    s.for_each([&](int v) {
        out += (first ? "" : ",") + std::to_string(k.labels()[static_cast<std::size_t>(v)]);
        first = false;
    });
    return out + "}";
}

// Input errors map to the usage exit code.
bool is_input_error(const Error& e) {
    static const char* const kinds[] = {"ParseError", "SchemaError", "VertexOutOfRange", "EmptyFacetList",
                                        "GhostVertex", "BadParameters", "TooFewVertices"};
    return std::any_of(std::begin(kinds), std::end(kinds), [&](const char* k) { return e.kind() == k; });
}

int cmd_check(const std::string& file, std::ostream& out, std::ostream& err) {
    const SimplicialComplex k = load_complex(file);
    Classification c;
    c.hypotheses = verify_hypotheses(k);
    const Report r = make_report(std::filesystem::path(file).filename().string(), k, 2, c, {}, std::nullopt);
    out << render_hypotheses(r);
    for (const std::string& f : c.hypotheses.failures) err << "error: " << f << "\n";
    return c.hypotheses.passed() ? kExitOk : kExitVerdict;
}

int cmd_decompose(const std::string& file, int disc_k, const std::string& format, bool timings, bool skip_oracle,
                  std::ostream& out, std::ostream& err) {
    const SimplicialComplex k = load_complex(file);
    Classification c = classify(k, disc_k);

    const auto start = std::chrono::steady_clock::now();
    const std::vector<long> betti = zk_betti(k, disc_k);
    std::optional<OracleComparison> oracle;
    if (!skip_oracle && c.verdict == Verdict::Certified) oracle = compare_oracles(k, disc_k);
    c.timings.push_back({"oracle", std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()});

    bool ok = c.verdict == Verdict::Certified;
    if (ok) {
        const CrossCheckReport x = cross_check(*c.decomposition, *c.table);
        if (!x.passed()) {
            ok = false;
            c.diagnostic = "CrossCheckFailed: betti " + std::string(x.betti_match ? "ok" : "mismatch") +
                           ", duality " + (x.duality_symmetric ? "ok" : "broken") + ", euler " +
                           (x.euler_ok ? "ok" : "nonzero") + ", spheres " + std::to_string(x.skeleton_spheres) +
                           " vs " + std::to_string(x.factor_spheres);
        }
        if (oracle && !oracle->agree()) {
            ok = false;
            c.diagnostic += std::string(c.diagnostic.empty() ? "" : "; ") + "OracleDisagreement: " +
                            std::to_string(oracle->mismatches.size()) + " component mismatches";
        }
    }

    Report r = make_report(std::filesystem::path(file).filename().string(), k, disc_k, c, betti, oracle);
    r.certified = ok;
    if (format == "json") {
        out << to_json(r).dump(2) << "\n";
    } else {
        out << render_text(r, timings);
    }
    if (!ok) err << "error: " << (c.diagnostic.empty() ? r.verdict : c.diagnostic) << "\n";
    return ok ? kExitOk : kExitVerdict;
}

int cmd_betti(const std::string& file, int disc_k, std::ostream& out) {
    const SimplicialComplex k = load_complex(file);
    out << vector_text(zk_betti(k, disc_k)) << "\n";
    return kExitOk;
}

int cmd_oracle(const std::string& file, int disc_k, std::ostream& out, std::ostream& err) {
    const SimplicialComplex k = load_complex(file);
    const OracleComparison o = compare_oracles(k, disc_k);
    out << "hochster: " << vector_text(o.hochster_betti) << "\n";
    out << "koszul:   " << vector_text(o.koszul_betti) << "\n";
    for (const ComponentMismatch& x : o.mismatches) {
        out << "  mismatch I=" << labels_text(k, x.subset) << " degree " << x.degree << ": koszul " << x.koszul_rank
            << ", homology " << x.homology_rank << "\n";
    }
    out << (o.agree() ? "agree" : "disagree") << "\n";
    if (!o.agree()) err << "error: OracleDisagreement: Hochster and Koszul cohomology differ\n";
    return o.agree() ? kExitOk : kExitVerdict;
}

int write_complex(const SimplicialComplex& k, const std::string& path, std::ostream& out) {
    const std::string text = emit_facet_list(k);
    if (path.empty()) {
        out << text;
        return kExitOk;
    }
    std::ofstream file(path);
    if (!file || !(file << text)) throw ParseError(0, "cannot write " + path);
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Classify moment-angle manifolds of triangulated spheres", "zkclass"};
    app.require_subcommand(1);

    std::string file;
    int disc_k = 2;
    std::string format = "text";
    bool timings = false;
    bool skip_oracle = false;

    auto* check = app.add_subcommand("check", "Screen the hypotheses on a triangulation");
    check->add_option("file", file, "Facet list or JSON file")->required();

    auto* decompose = app.add_subcommand("decompose", "Run the full classification pipeline");
    decompose->add_option("file", file, "Facet list or JSON file")->required();
    decompose->add_option("--disc", disc_k, "Disc dimension k of (D^k, S^{k-1})")->check(CLI::Range(2, 64));
    decompose->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
    decompose->add_flag("--timings", timings, "Print per-stage timings in text output");
    decompose->add_flag("--skip-oracle", skip_oracle, "Skip the Koszul cross-validation");

    auto* betti = app.add_subcommand("betti", "Print the Betti numbers of the polyhedral product");
    betti->add_option("file", file, "Facet list or JSON file")->required();
    betti->add_option("--disc", disc_k, "Disc dimension k")->check(CLI::Range(2, 64));

    auto* oracle = app.add_subcommand("oracle", "Compare Hochster and Koszul cohomology");
    oracle->add_option("file", file, "Facet list or JSON file")->required();
    oracle->add_option("--disc", disc_k, "Disc dimension k")->check(CLI::Range(2, 64));

    int vertices = 0;
    int dim = 0;
    std::string output;
    auto* gen = app.add_subcommand("gen", "Generate a standard triangulation");
    gen->require_subcommand(1);
    auto* polygon = gen->add_subcommand("polygon", "Boundary of the m-gon");
    polygon->add_option("--vertices", vertices, "Number of vertices m")->required();
    polygon->add_option("-o,--output", output, "Output file (default: stdout)");
    auto* cyclic = gen->add_subcommand("cyclic", "Boundary of the cyclic polytope C(m, d)");
    cyclic->add_option("--vertices", vertices, "Number of vertices m")->required();
    cyclic->add_option("--dim", dim, "Polytope dimension d (even)")->required();
    cyclic->add_option("-o,--output", output, "Output file (default: stdout)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    try {
        if (check->parsed()) return cmd_check(file, out, err);
        if (decompose->parsed()) return cmd_decompose(file, disc_k, format, timings, skip_oracle, out, err);
        if (betti->parsed()) return cmd_betti(file, disc_k, out);
        if (oracle->parsed()) return cmd_oracle(file, disc_k, out, err);
        if (polygon->parsed()) return write_complex(gen_polygon(vertices), output, out);
        if (cyclic->parsed()) return write_complex(gen_cyclic_boundary(vertices, dim), output, out);
    } catch (const Error& e) {
        err << "error: " << e.kind() << ": " << e.what() << "\n";
        return is_input_error(e) ? kExitUsage : kExitVerdict;
    }
    err << "error: no command\n";
    return kExitUsage;
}

}  // namespace zk
