#pragma once

#include <optional>
#include <vector>

#include "zk/integer_matrix.hpp"

namespace zk {

/// Unimodular transforms with U·A·V = S, plus their inverses.
struct SmithTransforms {
    IntegerMatrix u;
    IntegerMatrix v;
    IntegerMatrix u_inverse;
    IntegerMatrix v_inverse;
};

struct SmithForm {
    /// Positive invariant factors d_1 | d_2 | ... | d_r.
    std::vector<BigInt> diagonal;
    std::optional<SmithTransforms> transforms;

    std::size_t rank() const { return diagonal.size(); }
    /// Invariant factors greater than one.
    std::vector<BigInt> torsion() const;
};

/// Smith normal form of a dense matrix. Pivots are chosen by smallest
/// absolute value, ties broken by fewest nonzeros in the pivot column.
SmithForm smith_normal_form(const IntegerMatrix& a, bool with_transforms = false);

/// Sparse front end: routes to the dense routine when transforms are
/// requested or the matrix fits in kDenseThreshold x kDenseThreshold,
/// otherwise to sparse elimination.
SmithForm smith_normal_form(const SparseIntegerMatrix& a, bool with_transforms = false);

inline constexpr std::size_t kDenseThreshold = 64;

/// Invariant factors by sparse elimination (no transforms). Pivots minimise
/// absolute value, then the Markowitz fill product.
std::vector<BigInt> invariant_factors_sparse(const SparseIntegerMatrix& a);

/// Normalises a list of nonzero diagonal entries into a divisibility chain.
std::vector<BigInt> normalize_diagonal(std::vector<BigInt> entries);

}  // namespace zk
