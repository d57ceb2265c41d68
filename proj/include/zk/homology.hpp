#pragma once

#include <string>
#include <vector>

#include "zk/integer_matrix.hpp"
#include "zk/simplicial_complex.hpp"
#include "zk/smith.hpp"

namespace zk {

/// Reduced integral homology, degrees -1 .. top. Degree -1 is nonzero only
/// for the empty complex {∅}, where H̃_{-1} = Z.
class HomologyProfile {
public:
    HomologyProfile() = default;
    explicit HomologyProfile(int top_degree)
        : betti_(static_cast<std::size_t>(top_degree + 2)),
          torsion_(static_cast<std::size_t>(top_degree + 2)) {}

    int top_degree() const { return static_cast<int>(betti_.size()) - 2; }

    long betti(int j) const {
        return in_range(j) ? betti_[static_cast<std::size_t>(j + 1)] : 0;
    }
    const std::vector<BigInt>& torsion(int j) const {
        static const std::vector<BigInt> kNone;
        return in_range(j) ? torsion_[static_cast<std::size_t>(j + 1)] : kNone;
    }
    void set(int j, long betti, std::vector<BigInt> torsion) {
        betti_[static_cast<std::size_t>(j + 1)] = betti;
        torsion_[static_cast<std::size_t>(j + 1)] = std::move(torsion);
    }

    bool is_zero() const;
    bool torsion_free() const;
    long total_rank() const;
    /// Degrees carrying free rank.
    std::vector<int> free_degrees() const;

    /// "H0=Z^2 H1=Z/2" style summary; "0" when acyclic.
    std::string to_string() const;

    friend bool operator==(const HomologyProfile& a, const HomologyProfile& b);

private:
    bool in_range(int j) const { return j >= -1 && j + 1 < static_cast<int>(betti_.size()); }

    std::vector<long> betti_;
    std::vector<std::vector<BigInt>> torsion_;
};

/// ∂_j from j-faces to (j-1)-faces in lexicographic face order. ∂_0 maps
/// every vertex to the augmentation generator. The face of σ omitting its
/// i-th vertex (0-based) carries sign (-1)^i.
SparseIntegerMatrix boundary_matrix(const SimplicialComplex& k, int j);

/// Overload reusing precomputed face lists (faces[j+1] = j-faces).
SparseIntegerMatrix boundary_matrix(const std::vector<VertexSet>& faces,
                                    const std::vector<VertexSet>& lower_faces);

HomologyProfile reduced_homology(const SimplicialComplex& k);

/// Integral basis of the free part of H^j of a cochain complex
/// C^{j-1} --d_prev--> C^j --d_next--> C^{j+1}, returned as columns of cocycle
/// vectors in C^j. Throws TorsionPresent if H^j has torsion.
IntegerMatrix cohomology_basis(const IntegerMatrix& d_prev, const IntegerMatrix& d_next);

/// Cocycle representatives for H̃^j(K) indexed by the lexicographic j-faces.
struct CocycleBasis {
    int degree = 0;
    std::vector<VertexSet> faces;
    std::vector<std::vector<BigInt>> representatives;
};

CocycleBasis cocycle_basis(const SimplicialComplex& k, int j);

/// Integral basis of the kernel of `a` (as columns).
IntegerMatrix integer_kernel(const IntegerMatrix& a);

}  // namespace zk
