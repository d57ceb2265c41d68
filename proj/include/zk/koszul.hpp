#pragma once

// Cochain algebra of the polyhedral product (D^k, S^{k-1})^K.
//
// Generators u_i (degree k-1) and v_i (degree k), one pair per vertex, with
// d u_i = v_i and d v_i = 0. A basis monomial u_σ v_τ has σ ∩ τ = ∅ and
// τ ∈ K; it lives in multidegree σ ∪ τ and degree (k-1)|σ| + k|τ|. The
// differential preserves multidegree, so each multidegree is an independent
// finite cochain complex.
//
// Sign convention: a monomial is the word u_σ v_τ with both parts ascending.
// Every sign comes from reorder_sign(), which sorts a word of generators into
// that form using graded commutativity of the generator degrees.

#include <map>
#include <vector>

#include "zk/integer_matrix.hpp"
#include "zk/simplicial_complex.hpp"

namespace zk {

struct KoszulMonomial {
    VertexSet sigma;  // exterior (u) part
    VertexSet tau;    // face (v) part

    VertexSet multidegree() const { return sigma | tau; }
    int degree(int disc_k) const { return (disc_k - 1) * sigma.size() + disc_k * tau.size(); }
    friend bool operator==(const KoszulMonomial&, const KoszulMonomial&) = default;
};

/// Integer combination of the basis monomials of one (degree, multidegree).
/// An empty coefficient vector is the zero class.
struct CochainClass {
    int degree = 0;
    VertexSet multidegree;
    std::vector<BigInt> coefficients;

    bool is_zero() const;
    CochainClass operator-() const;
};

struct CupResult {
    CochainClass product;
    /// Inputs shared a vertex; the product is zero.
    bool multidegree_overlap = false;
};

/// Cohomology of one multidegree component, degree by degree.
struct ComponentCohomology {
    VertexSet multidegree;
    int first_degree = 0;  // (k-1)|I|
    std::vector<long> free_rank;
    std::vector<std::vector<BigInt>> torsion;

    long rank_at(int t) const;
    const std::vector<BigInt>& torsion_at(int t) const;
    int last_degree() const { return first_degree + static_cast<int>(free_rank.size()) - 1; }
};

struct RingCohomology {
    int disc_k = 2;
    std::vector<ComponentCohomology> components;  // one per subset of [m], size-then-lex order
    /// Total free rank per degree.
    std::vector<long> betti;
};

/// Linear functional on the top component that reads off the coordinate of
/// a top-degree class against the oriented generator.
class TopForm {
public:
    TopForm(int degree, VertexSet multidegree, std::vector<BigInt> functional)
        : degree_(degree), multidegree_(multidegree), functional_(std::move(functional)) {}

    int degree() const { return degree_; }
    const std::vector<BigInt>& functional() const { return functional_; }
    /// Throws NotTopDegree for classes outside the top component.
    BigInt evaluate(const CochainClass& c) const;

private:
    int degree_;
    VertexSet multidegree_;
    std::vector<BigInt> functional_;
};

/// Sign (+1/-1) of sorting a word of generators into canonical u-then-v,
/// ascending form. `is_v[i]` selects v_{vertex[i]} over u_{vertex[i]}.
int reorder_sign(const std::vector<bool>& is_v, const std::vector<int>& vertex, int disc_k);

class KoszulAlgebra {
public:
    KoszulAlgebra(const SimplicialComplex& k, int disc_k);
    KoszulAlgebra(SimplicialComplex&&, int) = delete;

    const SimplicialComplex& complex() const { return *complex_; }
    int disc_k() const { return disc_k_; }

    /// Monomials of degree t in multidegree I, ordered by τ lexicographically.
    std::vector<KoszulMonomial> basis(VertexSet multidegree, int t) const;

    CochainClass unit() const;
    CochainClass monomial(const KoszulMonomial& mono, long coefficient = 1) const;

    /// d on basis monomials: list of (coefficient, monomial).
    std::vector<std::pair<int, KoszulMonomial>> differential(const KoszulMonomial& mono) const;
    CochainClass differential(const CochainClass& c) const;
    /// Matrix of d: C^t_I -> C^{t+1}_I.
    IntegerMatrix differential_matrix(VertexSet multidegree, int t) const;

    /// ±u_{σ∪σ'}v_{τ∪τ'} or zero.
    std::pair<int, KoszulMonomial> multiply(const KoszulMonomial& a, const KoszulMonomial& b) const;
    CupResult cup(const CochainClass& a, const CochainClass& b) const;

    ComponentCohomology component_cohomology(VertexSet multidegree) const;
    /// All 2^m components, computed in parallel.
    RingCohomology cohomology() const;

    /// Cocycles whose classes form an integral basis of H^t in multidegree I.
    std::vector<CochainClass> cocycle_basis(VertexSet multidegree, int t) const;

    /// Top degree of the [m] component: (k-1)m + dim K + 1.
    int top_degree() const;
    /// Throws TopRankNotOne unless the top component is Z in degree top_degree().
    TopForm top_form() const;

private:
    // Faces of K contained in I, grouped by cardinality, each group in lex order.
    std::vector<std::vector<VertexSet>> faces_within(VertexSet multidegree) const;
    std::size_t index_of(const std::vector<KoszulMonomial>& basis, const KoszulMonomial& mono) const;

    const SimplicialComplex* complex_;
    int disc_k_;
};

}  // namespace zk
