#include <doctest.h>

#include <random>

#include "support.hpp"
#include "zk/errors.hpp"
#include "zk/hochster.hpp"

using namespace zk;

namespace {

// Polygon tables from union-find alone: K_I is a graph, H̃_0 has rank
// components - 1 and only I = [m] carries H̃_1.
std::vector<long> polygon_betti_brute(const SimplicialComplex& k) {
    const int m = k.vertex_count();
    std::vector<long> betti(static_cast<std::size_t>(m + 3), 0);
    betti[0] = 1;
    betti[static_cast<std::size_t>(m + 2)] = 1;
    for (int size = 2; size < m; ++size) {
        for_each_k_subset(k.vertices(), size, [&](VertexSet s) {
            betti[static_cast<std::size_t>(1 + size)] += test::components_within(k, s) - 1;
        });
    }
    return betti;
}

}  // namespace

TEST_CASE("pentagon decomposition table") {
    const SimplicialComplex k = test::corpus("polygon_5.txt");
    const DecompositionTable t = wedge_summands(k, 2, false);
    CHECK(t.sphere_count() == 10);
    CHECK(t.by_dimension() == std::map<int, long>{{3, 5}, {4, 5}});
    CHECK(t.torsion.empty());
    REQUIRE(t.n);
    CHECK(*t.n == 0);
    CHECK(t.summands.front().subset == VertexSet::from_labels({1, 3}, 5));

    const DecompositionTable full = wedge_summands(k, 2, true);
    CHECK(full.sphere_count() == 11);
    CHECK(zk_betti(k, 2) == std::vector<long>{1, 0, 0, 5, 5, 0, 0, 1});
    CHECK(zk_betti(k, 3) == std::vector<long>{1, 0, 0, 0, 0, 5, 0, 5, 0, 0, 0, 0, 1});
    CHECK_THROWS_AS(wedge_summands(k, 1, true), BadParameters);
}

TEST_CASE("non-face enumeration is size-then-lex") {
    const SimplicialComplex k = test::corpus("polygon_4.txt");
    const std::vector<VertexSet> nf = nonface_subsets(k);
    const std::vector<VertexSet> expected{VertexSet::from_labels({1, 3}, 4), VertexSet::from_labels({2, 4}, 4),
                                          VertexSet::from_labels({1, 2, 3}, 4), VertexSet::from_labels({1, 2, 4}, 4),
                                          VertexSet::from_labels({1, 3, 4}, 4), VertexSet::from_labels({2, 3, 4}, 4),
                                          VertexSet::from_labels({1, 2, 3, 4}, 4)};
    CHECK(nf == expected);
}

TEST_CASE("polygon tables match union-find enumeration") {
    for (int m = 4; m <= 9; ++m) {
        const SimplicialComplex k = test::corpus("polygon_" + std::to_string(m) + ".txt");
        CAPTURE(m);
        CHECK(zk_betti(k, 2) == polygon_betti_brute(k));
    }
}

TEST_CASE("torsion is carried, not dropped") {
    const DecompositionTable t = wedge_summands(test::corpus("rp2_6.txt"), 2, true);
    REQUIRE(t.torsion.size() == 1);
    CHECK(t.torsion[0].subset == VertexSet::range(6));
    CHECK(t.torsion[0].degree == 1);
    CHECK(t.torsion[0].divisors == std::vector<BigInt>{2});
}

TEST_CASE("wedge hypothesis") {
    const auto passes = [](const std::string& name, int n) {
        return check_wedge_hypothesis(test::corpus(name), n).passed;
    };
    CHECK(passes("polygon_5.txt", 0));
    CHECK(passes("polygon_9.txt", 0));
    for (int m = 5; m <= 9; ++m) CHECK(passes("cyclic_" + std::to_string(m) + "_4.txt", 1));

    // Two disjoint edges: not a sphere, so I = [4] is reported.
    const WedgeHypothesisReport r = check_wedge_hypothesis(build_complex(4, {{1, 2}, {3, 4}}), 0);
    CHECK_FALSE(r.passed);
    CHECK_FALSE(r.top_ok);
    REQUIRE(r.offenders.size() == 1);
    CHECK(r.offenders[0].subset == VertexSet::range(4));

    // The octahedron is a 2-sphere; with n = 0 its square links sit in H̃_1.
    const SimplicialComplex oct = build_complex(
        6, {{1, 3, 5}, {1, 3, 6}, {1, 4, 5}, {1, 4, 6}, {2, 3, 5}, {2, 3, 6}, {2, 4, 5}, {2, 4, 6}});
    CHECK_FALSE(check_wedge_hypothesis(oct, 0).passed);
}

TEST_CASE("summand table is natural under vertex deletion") {
    std::mt19937_64 rng(31);
    for (const auto& path : test::corpus_files()) {
        const SimplicialComplex k = load_complex(path.string());
        for (int trial = 0; trial < 3; ++trial) {
            const int i = static_cast<int>(rng() % static_cast<unsigned>(k.vertex_count()));
            const SimplicialComplex del = k.vertex_deletion(i);
            const VertexSet rest = k.vertices() - VertexSet::singleton(i);
            for (int disc : {2, 3}) {
                std::vector<WedgeSummand> restricted;
                for (const WedgeSummand& s : wedge_summands(k, disc, true).summands) {
                    if (s.subset.contains(i)) continue;
                    WedgeSummand c = s;
                    c.subset = compress(s.subset, rest);
                    restricted.push_back(c);
                }
                CAPTURE(path.filename().string());
                CAPTURE(i);
                CHECK(wedge_summands(del, disc, true).summands == restricted);
            }
        }
    }
}

TEST_CASE("worker count does not change the table") {
    const SimplicialComplex k = test::corpus("cyclic_8_4.txt");
    const DecompositionTable a = wedge_summands(k, 2, true);
    setenv("ZK_WORKERS", "3", 1);
    const DecompositionTable b = wedge_summands(k, 2, true);
    unsetenv("ZK_WORKERS");
    CHECK(a.summands == b.summands);
}
