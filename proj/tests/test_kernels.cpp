#include <doctest.h>

#include <random>

#include "zk/kernels.hpp"

using namespace zk;
using namespace zk::kernels;

namespace {

VertexSet random_set(std::mt19937_64& rng, int m, double density) {
    std::bernoulli_distribution coin(density);
    VertexSet s;
    for (int v = 0; v < m; ++v)
        if (coin(rng)) s.insert(v);
    return s;
}

bool naive_any_superset(const std::vector<VertexSet>& sets, VertexSet q) {
    for (const VertexSet& s : sets)
        if (q.is_subset_of(s)) return true;
    return false;
}

bool naive_any_subset(const std::vector<VertexSet>& sets, VertexSet q) {
    for (const VertexSet& s : sets)
        if (s.is_subset_of(q)) return true;
    return false;
}

std::size_t naive_count(const std::vector<VertexSet>& sets, VertexSet q) {
    std::size_t n = 0;
    for (const VertexSet& s : sets) n += q.is_subset_of(s);
    return n;
}

}  // namespace

TEST_CASE("scalar kernels match naive loops") {
    std::mt19937_64 rng(7);
    const KernelTable& t = table_for(Isa::Scalar);
    for (int trial = 0; trial < 300; ++trial) {
        const int m = trial % 2 ? 20 : 128;
        std::vector<VertexSet> sets;
        const int n = trial % 41;
        for (int i = 0; i < n; ++i) sets.push_back(random_set(rng, m, 0.6));
        const MaskArray arr(sets);
        const VertexSet q = random_set(rng, m, trial % 3 == 0 ? 0.1 : 0.5);
        CHECK(t.any_superset(arr.lo().data(), arr.hi().data(), arr.size(), q.lo(), q.hi()) ==
              naive_any_superset(sets, q));
        CHECK(t.any_subset(arr.lo().data(), arr.hi().data(), arr.size(), q.lo(), q.hi()) ==
              naive_any_subset(sets, q));
        CHECK(t.count_supersets(arr.lo().data(), arr.hi().data(), arr.size(), q.lo(), q.hi()) ==
              naive_count(sets, q));
    }
}

TEST_CASE("avx2 kernels agree with scalar reference") {
    if (!isa_supported(Isa::Avx2)) {
        MESSAGE("AVX2 not available; equivalence test skipped");
        return;
    }
    std::mt19937_64 rng(11);
    const KernelTable& s = table_for(Isa::Scalar);
    const KernelTable& v = table_for(Isa::Avx2);
    for (int trial = 0; trial < 2000; ++trial) {
        const int m = 1 + trial % 128;
        std::vector<VertexSet> sets;
        const int n = trial % 67;  // covers every tail length mod 4
        for (int i = 0; i < n; ++i) sets.push_back(random_set(rng, m, 0.7));
        // Plant exact hits so both outcomes occur.
        VertexSet q = random_set(rng, m, trial % 2 ? 0.05 : 0.8);
        if (trial % 5 == 0 && !sets.empty()) q = sets[static_cast<std::size_t>(trial) % sets.size()];
        const MaskArray arr(sets);
        const auto* lo = arr.lo().data();
        const auto* hi = arr.hi().data();
        CHECK(s.any_superset(lo, hi, arr.size(), q.lo(), q.hi()) == v.any_superset(lo, hi, arr.size(), q.lo(), q.hi()));
        CHECK(s.any_subset(lo, hi, arr.size(), q.lo(), q.hi()) == v.any_subset(lo, hi, arr.size(), q.lo(), q.hi()));
        CHECK(s.count_supersets(lo, hi, arr.size(), q.lo(), q.hi()) ==
              v.count_supersets(lo, hi, arr.size(), q.lo(), q.hi()));
    }
}

TEST_CASE("empty array and empty query") {
    const MaskArray none;
    CHECK_FALSE(any_superset(none, VertexSet{}));
    CHECK_FALSE(any_subset(none, VertexSet{}));
    CHECK(count_supersets(none, VertexSet{}) == 0);

    const std::vector<VertexSet> sets{VertexSet::from_indices({1, 2}), VertexSet::from_indices({100})};
    const MaskArray arr(sets);
    CHECK(any_superset(arr, VertexSet{}));
    CHECK(count_supersets(arr, VertexSet{}) == 2);
    CHECK(any_subset(arr, VertexSet::from_indices({100, 101})));
    CHECK_FALSE(any_subset(arr, VertexSet::from_indices({1, 101})));
}

TEST_CASE("forcing the scalar path") {
    const Isa before = active_isa();
    force_isa(Isa::Scalar);
    CHECK(active_isa() == Isa::Scalar);
    CHECK(std::string(isa_name(Isa::Scalar)) == "scalar");
    force_isa(before);
    CHECK(active_isa() == before);
}
