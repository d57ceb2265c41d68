#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "zk/kernels.hpp"
#include "zk/vertex_set.hpp"

namespace zk {

struct BuildOptions {
    /// Permit vertices of [m] that lie in no facet.
    bool allow_ghost_vertices = false;
};

/// A finite simplicial complex on the internal vertex set {0, ..., m-1},
/// stored as its antichain of facets. Immutable after construction.
///
/// `labels()` maps internal indices to the external 1-based vertex names;
/// for complexes built from input these are 1..m, for full subcomplexes and
/// links they are the names of the surviving vertices in the parent.
class SimplicialComplex {
public:
    /// Reduces `facets` to its inclusion-maximal antichain in canonical
    /// (lexicographic) order. Throws EmptyFacetList, VertexOutOfRange,
    /// GhostVertex.
    static SimplicialComplex build(int m, std::vector<VertexSet> facets, BuildOptions options = {});

    /// The empty complex {∅} on zero vertices.
    static SimplicialComplex void_complex();

    int vertex_count() const { return m_; }
    /// Max facet cardinality minus one; -1 for {∅}.
    int dim() const { return dim_; }
    const std::vector<VertexSet>& facets() const { return facets_; }
    const std::vector<int>& labels() const { return labels_; }
    VertexSet vertices() const { return VertexSet::range(m_); }

    bool is_face(VertexSet sigma) const;
    /// Re-indexed onto the members of I in ascending order; labels follow.
    SimplicialComplex full_subcomplex(VertexSet subset) const;
    SimplicialComplex vertex_deletion(int vertex) const;
    /// Link of a vertex, re-indexed onto its own vertex set.
    SimplicialComplex link(int vertex) const;

    /// All faces of dimension j (cardinality j+1), in lexicographic order.
    /// j = -1 yields the empty face.
    std::vector<VertexSet> faces_of_dim(int j) const;
    /// (f_{-1}, f_0, ..., f_dim).
    std::vector<std::size_t> f_vector() const;

    const std::vector<VertexSet>& minimal_non_faces() const { return minimal_non_faces_; }
    bool is_non_face(VertexSet subset) const;

    bool is_l_neighbourly(int l) const;
    /// Largest l with every (l+1)-subset a face; -1 when a vertex is missing.
    int max_neighbourliness() const;
    bool is_pure_pseudomanifold(int d) const;

    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
        return a.m_ == b.m_ && a.facets_ == b.facets_ && a.labels_ == b.labels_;
    }

private:
    SimplicialComplex(int m, std::vector<VertexSet> facets, std::vector<int> labels);

    void compute_minimal_non_faces();

    int m_ = 0;
    int dim_ = -1;
    std::vector<VertexSet> facets_;
    std::vector<int> labels_;
    kernels::MaskArray facet_masks_;
    std::vector<VertexSet> minimal_non_faces_;
    kernels::MaskArray non_face_masks_;
};

/// External entry point: 1-based facet lists to a complex on [m].
SimplicialComplex build_complex(int m, const std::vector<std::vector<int>>& facets,
                                BuildOptions options = {});

}  // namespace zk
