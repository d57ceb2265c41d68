#include <doctest.h>

#include <random>

#include "support.hpp"
#include "zk/errors.hpp"
#include "zk/homology.hpp"
#include "zk/koszul.hpp"
#include "zk/smith.hpp"

using namespace zk;

namespace {

VertexSet L(std::initializer_list<int> labels, int m) { return VertexSet::from_labels(labels, m); }

CochainClass add(const CochainClass& a, const CochainClass& b) {
    if (a.coefficients.empty()) return b;
    if (b.coefficients.empty()) return a;
    CochainClass out = a;
    for (std::size_t i = 0; i < out.coefficients.size(); ++i) out.coefficients[i] += b.coefficients[i];
    return out;
}

bool same_cochain(const CochainClass& a, const CochainClass& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    return a.degree == b.degree && a.multidegree == b.multidegree && a.coefficients == b.coefficients;
}

CochainClass random_cochain(const KoszulAlgebra& alg, VertexSet I, int t, std::mt19937_64& rng) {
    const std::size_t n = alg.basis(I, t).size();
    CochainClass c{t, I, std::vector<BigInt>(n, 0)};
    for (BigInt& x : c.coefficients) x = static_cast<long>(rng() % 7) - 3;
    return c;
}

// True when c is d of something in its component.
bool is_coboundary(const KoszulAlgebra& alg, const CochainClass& c) {
    if (c.is_zero()) return true;
    const IntegerMatrix d = alg.differential_matrix(c.multidegree, c.degree - 1);
    IntegerMatrix augmented(d.rows(), d.cols() + 1);
    for (std::size_t r = 0; r < d.rows(); ++r) {
        for (std::size_t col = 0; col < d.cols(); ++col) augmented(r, col) = d(r, col);
        augmented(r, d.cols()) = c.coefficients[r];
    }
    const SmithForm with = smith_normal_form(augmented);
    const SmithForm without = smith_normal_form(d);
    // Same rank and same invariant factors means c lies in the integral image.
    return with.diagonal == without.diagonal;
}

}  // namespace

TEST_CASE("basis examples") {
    const SimplicialComplex k = test::corpus("polygon_5.txt");
    const KoszulAlgebra alg(k, 2);
    const auto b13 = alg.basis(L({1, 3}, 5), 2);
    REQUIRE(b13.size() == 1);
    CHECK(b13[0].sigma == L({1, 3}, 5));
    CHECK(b13[0].tau.empty());

    const auto b12 = alg.basis(L({1, 2}, 5), 4);
    REQUIRE(b12.size() == 1);
    CHECK(b12[0].tau == L({1, 2}, 5));

    const auto unit = alg.basis(VertexSet{}, 0);
    REQUIRE(unit.size() == 1);
    CHECK(unit[0].sigma.empty());
    CHECK(unit[0].tau.empty());

    CHECK(alg.basis(L({1, 3}, 5), 4).empty());  // {1,3} is not a face
    CHECK(alg.basis(L({1, 3}, 5), 3).size() == 2);
}

TEST_CASE("differential examples") {
    const SimplicialComplex k = test::corpus("polygon_5.txt");
    const KoszulAlgebra alg(k, 2);
    const auto d1 = alg.differential(KoszulMonomial{L({1}, 5), {}});
    REQUIRE(d1.size() == 1);
    CHECK(d1[0].first == 1);
    CHECK(d1[0].second.tau == L({1}, 5));

    // d(u1 u3) = v1 u3 - u1 v3 = u3 v1 - u1 v3 in canonical order (v even for k = 2).
    const auto d13 = alg.differential(KoszulMonomial{L({1, 3}, 5), {}});
    REQUIRE(d13.size() == 2);
    CHECK(d13[0].first == 1);
    CHECK(d13[0].second.sigma == L({3}, 5));
    CHECK(d13[0].second.tau == L({1}, 5));
    CHECK(d13[1].first == -1);
    CHECK(d13[1].second.sigma == L({1}, 5));
    CHECK(d13[1].second.tau == L({3}, 5));

    // Terms leaving K vanish: d(v1 u2 ... ) with {1,3} a non-face.
    CHECK(alg.differential(KoszulMonomial{L({3}, 5), L({1}, 5)}).empty());
    CHECK(alg.differential(KoszulMonomial{{}, L({1, 2}, 5)}).empty());
}

TEST_CASE("d squares to zero on every monomial") {
    for (const auto& path : test::corpus_files()) {
        const SimplicialComplex k = load_complex(path.string());
        if (k.vertex_count() > 7) continue;
        for (int disc : {2, 3, 4}) {
            const KoszulAlgebra alg(k, disc);
            for (int size = 0; size <= k.vertex_count(); ++size) {
                for_each_k_subset(k.vertices(), size, [&](VertexSet I) {
                    const int t0 = (disc - 1) * size;
                    for (int t = t0; t <= t0 + size; ++t) {
                        const IntegerMatrix d0 = alg.differential_matrix(I, t);
                        const IntegerMatrix d1 = alg.differential_matrix(I, t + 1);
                        if (d0.empty() || d1.empty()) continue;
                        CHECK((d1 * d0).is_zero());
                    }
                });
            }
        }
    }
}

TEST_CASE("component cohomology is shifted reduced homology of the full subcomplex") {
    for (const std::string name : {"polygon_6.txt", "cyclic_7_4.txt", "rp2_6.txt", "simplex_boundary_4.txt"}) {
        const SimplicialComplex k = test::corpus(name);
        for (int disc : {2, 3}) {
            const KoszulAlgebra alg(k, disc);
            for (int size = 0; size <= k.vertex_count(); ++size) {
                for_each_k_subset(k.vertices(), size, [&](VertexSet I) {
                    const ComponentCohomology c = alg.component_cohomology(I);
                    const HomologyProfile h = reduced_homology(k.full_subcomplex(I));
                    const int shift = (disc - 1) * size + 1;
                    for (int t = c.first_degree; t <= c.last_degree(); ++t) {
                        CAPTURE(name);
                        CAPTURE(I.to_string());
                        CHECK(c.rank_at(t) == h.betti(t - shift));
                        CHECK(c.torsion_at(t) == h.torsion(t - shift - 1));
                    }
                });
            }
        }
    }
}

TEST_CASE("ring cohomology totals") {
    const SimplicialComplex p5 = test::corpus("polygon_5.txt");
    const KoszulAlgebra pent(p5, 2);
    const RingCohomology r = pent.cohomology();
    CHECK(r.betti == std::vector<long>{1, 0, 0, 5, 5, 0, 0, 1});
    CHECK(r.components.size() == 32);
    CHECK(pent.component_cohomology(L({1, 3}, 5)).rank_at(3) == 1);

    const SimplicialComplex s4 = test::corpus("simplex_boundary_5.txt");
    const KoszulAlgebra simplex(s4, 2);
    CHECK(simplex.cohomology().betti == std::vector<long>{1, 0, 0, 0, 0, 0, 0, 0, 0, 1});
}

TEST_CASE("product: unit, Leibniz, graded commutativity, associativity") {
    std::mt19937_64 rng(41);
    for (const std::string name : {"polygon_6.txt", "cyclic_6_4.txt"}) {
        const SimplicialComplex k = test::corpus(name);
        const int m = k.vertex_count();
        for (int disc : {2, 3}) {
            const KoszulAlgebra alg(k, disc);
            for (int trial = 0; trial < 150; ++trial) {
                // Three random disjoint multidegrees.
                VertexSet parts[3];
                for (int v = 0; v < m; ++v) {
                    const int p = static_cast<int>(rng() % 4);
                    if (p < 3) parts[p].insert(v);
                }
                CochainClass c[3];
                for (int i = 0; i < 3; ++i) {
                    const int t = (disc - 1) * parts[i].size() + static_cast<int>(rng() % (parts[i].size() + 1));
                    c[i] = random_cochain(alg, parts[i], t, rng);
                }
                const CochainClass& a = c[0];
                const CochainClass& b = c[1];

                CHECK(same_cochain(alg.cup(alg.unit(), a).product, a));
                CHECK(same_cochain(alg.cup(a, alg.unit()).product, a));

                const CochainClass ab = alg.cup(a, b).product;
                const CochainClass ba = alg.cup(b, a).product;
                CHECK(same_cochain(ab, (a.degree * b.degree) % 2 == 0 ? ba : -ba));

                const CochainClass lhs = alg.cup(ab, c[2]).product;
                const CochainClass rhs = alg.cup(a, alg.cup(b, c[2]).product).product;
                CHECK(same_cochain(lhs, rhs));

                // d(ab) = d(a) b + (-1)^|a| a d(b)
                const CochainClass left = alg.differential(ab);
                const CochainClass t1 = alg.cup(alg.differential(a), b).product;
                CochainClass t2 = alg.cup(a, alg.differential(b)).product;
                if (a.degree % 2 != 0) t2 = -t2;
                CHECK(same_cochain(left, add(t1, t2)));
            }
        }
    }
}

TEST_CASE("overlapping multidegrees multiply to zero with a flag") {
    const SimplicialComplex k = test::corpus("polygon_5.txt");
    const KoszulAlgebra alg(k, 2);
    const CochainClass a = alg.monomial({L({1, 3}, 5), {}});
    const CupResult r = alg.cup(a, alg.monomial({L({3}, 5), {}}));
    CHECK(r.multidegree_overlap);
    CHECK(r.product.is_zero());
}

TEST_CASE("pentagon products into the top class") {
    const SimplicialComplex k = test::corpus("polygon_5.txt");
    const KoszulAlgebra alg(k, 2);
    const TopForm top = alg.top_form();
    CHECK(top.degree() == 7);

    const auto x = alg.cocycle_basis(L({1, 3}, 5), 3);
    const auto y = alg.cocycle_basis(L({2, 4, 5}, 5), 4);
    REQUIRE(x.size() == 1);
    REQUIRE(y.size() == 1);
    const CochainClass xy = alg.cup(x[0], y[0]).product;
    CHECK(abs(top.evaluate(xy)) == 1);
    CHECK(top.evaluate(-xy) == -top.evaluate(xy));

    // {1,3} with {2,4}: lands in multidegree {1,2,3,4}, a coboundary there.
    const auto z = alg.cocycle_basis(L({2, 4}, 5), 3);
    REQUIRE(z.size() == 1);
    const CochainClass xz = alg.cup(x[0], z[0]).product;
    CHECK(xz.multidegree == L({1, 2, 3, 4}, 5));
    CHECK(is_coboundary(alg, xz));
    CHECK_THROWS_AS(top.evaluate(xz), NotTopDegree);

    // Orientation: positive on the first monomial it does not kill.
    const auto& phi = top.functional();
    const auto first = std::find_if(phi.begin(), phi.end(), [](const BigInt& c) { return c != 0; });
    REQUIRE(first != phi.end());
    CHECK(*first == 1);
    CHECK(top.evaluate(CochainClass{7, k.vertices(), std::vector<BigInt>(phi.size(), 0)}) == 0);
}

TEST_CASE("top form requires a rank one top component") {
    const SimplicialComplex rp2 = test::corpus("rp2_6.txt");
    const SimplicialComplex pent = test::corpus("polygon_5.txt");
    CHECK_THROWS_AS(KoszulAlgebra(rp2, 2).top_form(), TopRankNotOne);
    CHECK_THROWS_AS(KoszulAlgebra(pent, 1), BadParameters);
}

TEST_CASE("reorder sign follows generator parity") {
    // k = 2: u odd, v even.
    CHECK(reorder_sign({false, false}, {1, 0}, 2) == -1);
    CHECK(reorder_sign({true, false}, {0, 1}, 2) == 1);
    // k = 3: u even, v odd.
    CHECK(reorder_sign({false, false}, {1, 0}, 3) == 1);
    CHECK(reorder_sign({true, true}, {1, 0}, 3) == -1);
}
