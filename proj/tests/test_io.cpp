#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "support.hpp"
#include "zk/cli.hpp"
#include "zk/errors.hpp"
#include "zk/hochster.hpp"
#include "zk/io.hpp"
#include "zk/report.hpp"

using namespace zk;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string corpus_path(const std::string& name) { return (test::corpus_dir() / name).string(); }

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

// Independent Gale evenness: for every pair of non-members, count members between them.
std::vector<std::vector<int>> gale_brute(int m, int d) {
    std::vector<std::vector<int>> out;
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
        if (__builtin_popcount(mask) != d) continue;
        bool ok = true;
        for (int i = 0; i < m && ok; ++i)
            for (int j = i + 1; j < m && ok; ++j) {
                if ((mask >> i & 1) || (mask >> j & 1)) continue;
                int between = 0;
                for (int t = i + 1; t < j; ++t) between += mask >> t & 1;
                ok = between % 2 == 0;
            }
        if (!ok) continue;
        std::vector<int> f;
        for (int i = 0; i < m; ++i)
            if (mask >> i & 1) f.push_back(i + 1);
        out.push_back(f);
    }
    return out;
}

}  // namespace

TEST_CASE("facet list parsing") {
    const SimplicialComplex p = parse_facet_list("1 2\n2 3\n3 4\n4 5\n1 5");
    CHECK(p == gen_polygon(5));
    const SimplicialComplex s = parse_facet_list("# comment\n1 2 3\n1 2 4\n1 3 4\n2 3 4");
    CHECK(s == gen_simplex_boundary(4));
    CHECK(parse_facet_list("\n  1 2 # trailing\n\n2 3\n1 3\n") == gen_cyclic_boundary(3, 2));

    try {
        parse_facet_list("1 2\n2 x");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
    CHECK_THROWS_AS(parse_facet_list("vertices: 3\n1 4\n"), VertexOutOfRange);
    CHECK_THROWS_AS(parse_facet_list("0 1\n"), VertexOutOfRange);
    CHECK_THROWS_AS(parse_facet_list("# nothing\n"), EmptyFacetList);
    CHECK_THROWS_AS(parse_facet_list("vertices 4\n1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_facet_list("vertices: 6\n1 2\n2 3\n1 3\n"), GhostVertex);
}

TEST_CASE("JSON parsing") {
    CHECK(parse_json(R"({"vertices":5,"facets":[[1,2],[2,3],[3,4],[4,5],[1,5]]})") == gen_polygon(5));
    CHECK_THROWS_AS(parse_json(R"({"vertices":4,"facets":[]})"), EmptyFacetList);
    CHECK_THROWS_AS(parse_json(R"({"facets":[[1,2]]})"), SchemaError);
    CHECK_THROWS_AS(parse_json(R"({"vertices":"4","facets":[[1,2]]})"), SchemaError);
    CHECK_THROWS_AS(parse_json(R"({"vertices":4,"facets":[[1,"a"]]})"), SchemaError);
    CHECK_THROWS_AS(parse_json(R"({"vertices":2,"facets":[[1,3]]})"), VertexOutOfRange);
    CHECK_THROWS_AS(parse_json("[1,2"), SchemaError);
    CHECK(parse_complex(R"(  {"vertices":3,"facets":[[1,2],[2,3],[1,3]]})") == parse_complex("1 2\n2 3\n1 3\n"));
}

TEST_CASE("parse then emit then parse is the identity") {
    for (const auto& path : test::corpus_files()) {
        const SimplicialComplex k = load_complex(path.string());
        const std::string text = emit_facet_list(k);
        CHECK(parse_facet_list(text) == k);
        CHECK(emit_facet_list(parse_facet_list(text)) == text);
    }
}

TEST_CASE("generators") {
    CHECK(gen_polygon(4).minimal_non_faces().size() == 2);
    CHECK_THROWS_AS(gen_polygon(3), TooFewVertices);
    for (int m = 4; m <= 12; ++m) CHECK(gen_polygon(m) == gen_cyclic_boundary(m, 2));

    CHECK(gen_cyclic_boundary(6, 4).facets().size() == 9);
    CHECK(gen_cyclic_boundary(5, 4) == gen_simplex_boundary(5));
    for (int m = 5; m <= 12; ++m)
        for (int d : {2, 4, 6})
            if (m >= d + 1) CHECK(gen_cyclic_boundary(m, d) == build_complex(m, gale_brute(m, d)));

    CHECK_THROWS_AS(gen_cyclic_boundary(8, 3), BadParameters);
    CHECK_THROWS_AS(gen_cyclic_boundary(4, 4), BadParameters);
    CHECK_THROWS_AS(gen_cyclic_boundary(8, 0), BadParameters);
}

TEST_CASE("generated families pass screening") {
    for (int m = 4; m <= 10; ++m) {
        const SimplicialComplex k = gen_polygon(m);
        CHECK(k.is_pure_pseudomanifold(1));
        CHECK(verify_hypotheses(k).passed());
    }
    for (int m = 5; m <= 10; ++m) {
        const SimplicialComplex k = gen_cyclic_boundary(m, 4);
        CHECK(k.is_pure_pseudomanifold(3));
        CHECK(verify_hypotheses(k).passed());
    }
    for (int m = 7; m <= 9; ++m) {
        const HypothesisReport h = verify_hypotheses(gen_cyclic_boundary(m, 6));
        CHECK(h.homology_sphere);
        CHECK(h.links_homology_spheres);
        CHECK(h.passed());
    }
}

TEST_CASE("content hash depends only on the complex") {
    CHECK(content_hash(gen_polygon(5)) == content_hash(parse_facet_list("1 5\n4 5\n3 4\n2 3\n1 2\n")));
    CHECK(content_hash(gen_polygon(5)) != content_hash(gen_polygon(6)));
    CHECK(content_hash(gen_polygon(5)).size() == 16);
}

TEST_CASE("report JSON round-trips losslessly") {
    for (const std::string name : {"polygon_6.txt", "rp2_6.txt", "cyclic_7_4.txt"}) {
        const SimplicialComplex k = test::corpus(name);
        const Classification c = classify(k, 2);
        std::optional<OracleComparison> o;
        if (c.verdict == Verdict::Certified) o = compare_oracles(k, 2);
        const Report r = make_report(name, k, 2, c, zk_betti(k, 2), o);
        const nlohmann::json j = to_json(r);
        CHECK(j["schema_version"] == kReportSchemaVersion);
        CHECK(report_from_json(j) == r);
        CHECK(report_from_json(nlohmann::json::parse(j.dump())) == r);
    }
    nlohmann::json bad = to_json(make_report("x", gen_polygon(5), 2, classify(gen_polygon(5), 2), {}, std::nullopt));
    bad["schema_version"] = 99;
    CHECK_THROWS_AS(report_from_json(bad), SchemaError);
    bad.erase("schema_version");
    CHECK_THROWS_AS(report_from_json(bad), SchemaError);
}

TEST_CASE("cli decompose") {
    const CliResult p5 = cli({"decompose", corpus_path("polygon_5.txt")});
    CHECK(p5.code == kExitOk);
    CHECK(contains(p5.out, "#5 (S^3 x S^4)"));
    CHECK(contains(p5.out, "dim 7"));
    CHECK(p5.err.empty());
    CHECK_FALSE(contains(p5.out, "time "));

    const CliResult k3 = cli({"decompose", corpus_path("polygon_5.txt"), "--disc", "3"});
    CHECK(contains(k3.out, "#5 (S^5 x S^7)"));
    CHECK(contains(k3.out, "dim 12"));

    const CliResult timed = cli({"decompose", corpus_path("polygon_5.txt"), "--timings"});
    CHECK(contains(timed.out, "time hochster"));

    const CliResult json = cli({"decompose", corpus_path("polygon_6.txt"), "--format", "json"});
    REQUIRE(json.code == kExitOk);
    const Report r = report_from_json(nlohmann::json::parse(json.out));
    CHECK(r.connected_sum == "#9 (S^3 x S^5) # #8 (S^4 x S^4)");
    CHECK(r.certified);
    REQUIRE(r.oracle);
    CHECK(r.oracle->agree);
}

TEST_CASE("cli failures use exit codes and the diagnostic stream") {
    const CliResult s2 = cli({"check", corpus_path("simplex_boundary_4.txt")});
    CHECK(s2.code == kExitVerdict);
    CHECK(contains(s2.err, "even sphere dimension"));

    const CliResult rp2 = cli({"decompose", corpus_path("rp2_6.txt")});
    CHECK(rp2.code == kExitVerdict);
    CHECK(contains(rp2.err, "NotHomologySphere"));
    CHECK(contains(rp2.err, "H1=Z/2"));

    const auto dir = std::filesystem::temp_directory_path() / "zk_io_test";
    std::filesystem::create_directories(dir);
    const std::string bad = (dir / "bad.txt").string();
    std::ofstream(bad) << "1 2\n2 x\n";
    const CliResult parse = cli({"check", bad});
    CHECK(parse.code == kExitUsage);
    CHECK(contains(parse.err, "line 2"));
    CHECK(parse.out.empty());

    CHECK(cli({"check", (dir / "missing.txt").string()}).code == kExitUsage);
    CHECK(cli({}).code == kExitUsage);
    CHECK(cli({"frobnicate"}).code == kExitUsage);
    CHECK(cli({"decompose", corpus_path("polygon_5.txt"), "--disc", "1"}).code == kExitUsage);
    CHECK(cli({"decompose", corpus_path("polygon_5.txt"), "--format", "xml"}).code == kExitUsage);
    CHECK(cli({"gen", "polygon", "--vertices", "3"}).code == kExitUsage);
    CHECK(cli({"--help"}).code == kExitOk);
}

TEST_CASE("cli gen, betti and oracle") {
    const CliResult g = cli({"gen", "cyclic", "--vertices", "6", "--dim", "4"});
    CHECK(g.code == kExitOk);
    CHECK(parse_facet_list(g.out) == gen_cyclic_boundary(6, 4));

    const auto file = (std::filesystem::temp_directory_path() / "zk_io_test_p7.txt").string();
    CHECK(cli({"gen", "polygon", "--vertices", "7", "-o", file}).code == kExitOk);
    CHECK(load_complex(file) == gen_polygon(7));

    const CliResult b = cli({"betti", corpus_path("polygon_5.txt")});
    CHECK(b.out == "1 0 0 5 5 0 0 1\n");

    const CliResult o = cli({"oracle", corpus_path("cyclic_6_4.txt"), "--disc", "3"});
    CHECK(o.code == kExitOk);
    CHECK(contains(o.out, "agree"));
}
