#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zk/hochster.hpp"
#include "zk/homology.hpp"
#include "zk/koszul.hpp"
#include "zk/simplicial_complex.hpp"

namespace zk {

/// Printed in every report: "sphere" below means homology-screened.
inline constexpr const char* kScreeningCaveat =
    "sphere recognition is screened by homology only (pure pseudomanifold, integral homology sphere, "
    "vertex links integral homology spheres)";
inline constexpr const char* kEvenDimensionCaveat =
    "even sphere dimension; the connected-sum classification does not apply "
    "(punctured homotopy type unknown in general)";

struct HypothesisReport {
    int m = 0;
    int sphere_dim = -1;
    /// Set when sphere_dim = 2n+1.
    std::optional<int> n;
    bool pure_pseudomanifold = false;
    bool homology_sphere = false;
    bool links_homology_spheres = false;
    int neighbourliness = -1;
    bool neighbourly_enough = false;
    HomologyProfile homology;
    /// Labels of vertices whose link fails screening.
    std::vector<int> bad_links;
    /// Named diagnostics, one per failed check.
    std::vector<std::string> failures;
    std::vector<std::string> caveats;

    bool passed() const { return failures.empty(); }
};

HypothesisReport verify_hypotheses(const SimplicialComplex& k);

struct PairingBlock {
    /// Canonical side: |I| < |J|, ties broken lexicographically.
    VertexSet left;
    VertexSet right;
    long rank_left = 0;
    long rank_right = 0;
    /// matrix(a, b) = top coefficient of x_a ∪ x̄_b.
    IntegerMatrix matrix;
    /// |det| when square.
    BigInt abs_det = 0;
    bool unimodular = false;
    int p = 0;
    int q = 0;
};

/// True when I is the representative of the pair {I, [m] \ I}.
bool is_canonical_side(VertexSet subset, int m);

/// Cup-product pairings into the top class, sharing one algebra and orientation.
class PairingContext {
public:
    /// Throws TopRankNotOne if the top component is not Z.
    PairingContext(const SimplicialComplex& k, int disc_k, int n);
    PairingContext(SimplicialComplex&&, int, int) = delete;

    const KoszulAlgebra& algebra() const { return algebra_; }
    const TopForm& top() const { return top_; }
    int n() const { return n_; }

    /// Block for the pair {I, [m] \ I}; I is canonicalized first. Throws
    /// TorsionPresent or RankMismatch.
    PairingBlock block(VertexSet subset) const;

private:
    const SimplicialComplex* complex_;
    int disc_k_;
    int n_;
    KoszulAlgebra algebra_;
    TopForm top_;
};

/// Checks the hypotheses first; throws HypothesesNotVerified if they fail.
PairingBlock pairing_block(const SimplicialComplex& k, VertexSet subset, int disc_k);

struct SphereProductFactor {
    int p = 0;
    int q = 0;
    long count = 0;
    friend bool operator==(const SphereProductFactor&, const SphereProductFactor&) = default;
};

struct ConnectedSumDecomposition {
    int dimension = 0;
    int n = 0;
    int disc_k = 2;
    /// Sorted by (p, q), one entry per distinct pair of dimensions.
    std::vector<SphereProductFactor> factors;

    bool trivial_sphere() const { return factors.empty(); }
    /// 1 in degrees 0 and D, plus count in degrees p and q per factor.
    std::vector<long> betti() const;
    /// "#5 (S^3 x S^4)" terms joined by " # ", or "S^D".
    std::string to_string() const;

    friend bool operator==(const ConnectedSumDecomposition&, const ConnectedSumDecomposition&) = default;
};

enum class Verdict {
    Certified,
    HypothesesFailed,
    WedgeHypothesisFailed,
    RankMismatch,
    NonUnimodular,
};

std::string verdict_name(Verdict v);

struct StageTiming {
    std::string stage;
    double seconds = 0;
};

struct Classification {
    Verdict verdict = Verdict::HypothesesFailed;
    HypothesisReport hypotheses;
    std::optional<WedgeHypothesisReport> wedge;
    /// Punctured table (I = [m] dropped) when hypotheses passed.
    std::optional<DecompositionTable> table;
    std::vector<PairingBlock> blocks;
    /// Certified when verdict is Certified; otherwise putative, if any.
    std::optional<ConnectedSumDecomposition> decomposition;
    std::string diagnostic;
    std::vector<StageTiming> timings;
};

/// Report-valued pipeline: never throws on mathematical failure.
Classification classify(const SimplicialComplex& k, int disc_k);

/// Throws HypothesesNotVerified, TheoremHypothesisViolated, RankMismatch or
/// NonUnimodularPairing instead of returning a non-certified verdict.
ConnectedSumDecomposition connected_sum(const SimplicialComplex& k, int disc_k);

struct CrossCheckReport {
    bool betti_match = false;
    bool duality_symmetric = false;
    /// Alternating sum is zero when D is odd; vacuous otherwise.
    bool euler_ok = false;
    long skeleton_spheres = 0;
    long factor_spheres = 0;
    bool sphere_count_match = false;

    bool passed() const { return betti_match && duality_symmetric && euler_ok && sphere_count_match; }
};

/// `table` must be the punctured table for the same (K, k).
CrossCheckReport cross_check(const ConnectedSumDecomposition& decomposition, const DecompositionTable& table);

struct ComponentMismatch {
    VertexSet subset;
    int degree = 0;
    long koszul_rank = 0;
    long homology_rank = 0;
};

/// Koszul ring cohomology against the Hochster sum over full subcomplexes.
struct OracleComparison {
    int disc_k = 2;
    std::vector<long> hochster_betti;
    std::vector<long> koszul_betti;
    std::vector<ComponentMismatch> mismatches;

    bool agree() const { return mismatches.empty() && hochster_betti == koszul_betti; }
};

OracleComparison compare_oracles(const SimplicialComplex& k, int disc_k);

}  // namespace zk
