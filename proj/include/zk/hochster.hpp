#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zk/homology.hpp"
#include "zk/simplicial_complex.hpp"

namespace zk {

/// Every non-face I of K in size-then-lexicographic order. ∅ never appears.
std::vector<VertexSet> nonface_subsets(const SimplicialComplex& k);

/// Reduced homology of every full subcomplex K_I over the non-faces I,
/// computed once (in parallel) and shared by every table built from it.
class SubsetHomology {
public:
    explicit SubsetHomology(const SimplicialComplex& k);
    explicit SubsetHomology(SimplicialComplex&&) = delete;

    const SimplicialComplex& complex() const { return *complex_; }
    const std::vector<VertexSet>& nonfaces() const { return nonfaces_; }
    /// Homology of K_I; zero profile when I is a face.
    const HomologyProfile& of(VertexSet subset) const;

private:
    const SimplicialComplex* complex_;
    std::vector<VertexSet> nonfaces_;
    std::map<VertexSet, HomologyProfile> by_subset_;
    HomologyProfile acyclic_;
};

/// One sphere-wedge summand Σ^{1+(k-1)|I|} of a free class of H̃_j(K_I).
struct WedgeSummand {
    VertexSet subset;
    int degree = 0;
    int sphere_dim = 0;
    long multiplicity = 0;
    int disc_k = 2;

    friend bool operator==(const WedgeSummand&, const WedgeSummand&) = default;
};

struct TorsionRecord {
    VertexSet subset;
    int degree = 0;
    std::vector<BigInt> divisors;
};

struct DecompositionTable {
    int m = 0;
    int disc_k = 2;
    bool include_top = true;
    /// Half-dimension parameter when dim K = 2n+1.
    std::optional<int> n;
    std::vector<WedgeSummand> summands;
    std::vector<TorsionRecord> torsion;

    /// Total multiplicity: the number of spheres in the wedge.
    long sphere_count() const;
    /// Multiplicity per sphere dimension.
    std::map<int, long> by_dimension() const;
};

/// Σ(D^k,S^{k-1})^K splits as a wedge over non-faces I of
/// Σ^{2+(k-1)|I|}|K_I|; one summand per (I, j) with H̃_j(K_I) free part
/// nonzero. With include_top = false the I = [m] summand is dropped.
DecompositionTable wedge_summands(const SubsetHomology& homology, int disc_k, bool include_top);
DecompositionTable wedge_summands(const SimplicialComplex& k, int disc_k, bool include_top);

/// Betti numbers of (D^k,S^{k-1})^K, indexed by degree.
std::vector<long> zk_betti(const SubsetHomology& homology, int disc_k);
std::vector<long> zk_betti(const SimplicialComplex& k, int disc_k);

struct WedgeOffender {
    VertexSet subset;
    HomologyProfile profile;
    std::string reason;
};

struct WedgeHypothesisReport {
    bool passed = false;
    int n = 0;
    std::vector<WedgeOffender> offenders;
    /// H̃_*(K_{[m]}) is that of S^{2n+1}.
    bool top_ok = false;
    /// Every summand has sphere_dim = n + 1 + (k-1)|I| (checked on pass).
    bool degree_law_ok = false;
};

/// Every non-face I ≠ [m] has H̃_*(K_I) torsion-free and concentrated in
/// degree n; K itself must carry the homology of S^{2n+1}.
WedgeHypothesisReport check_wedge_hypothesis(const SubsetHomology& homology, int n, int disc_k = 2);
WedgeHypothesisReport check_wedge_hypothesis(const SimplicialComplex& k, int n, int disc_k = 2);

}  // namespace zk
