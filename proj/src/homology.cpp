#include "zk/homology.hpp"

#include <algorithm>
#include <unordered_map>

#include "zk/errors.hpp"

namespace zk {

bool operator==(const HomologyProfile& a, const HomologyProfile& b) {
    const int top = std::max(a.top_degree(), b.top_degree());
    for (int j = -1; j <= top; ++j) {
        if (a.betti(j) != b.betti(j) || a.torsion(j) != b.torsion(j)) return false;
    }
    return true;
}

bool HomologyProfile::is_zero() const {
    for (int j = -1; j <= top_degree(); ++j)
        if (betti(j) != 0 || !torsion(j).empty()) return false;
    return true;
}

bool HomologyProfile::torsion_free() const {
    for (const auto& t : torsion_)
        if (!t.empty()) return false;
    return true;
}

long HomologyProfile::total_rank() const {
    long total = 0;
    for (long b : betti_) total += b;
    return total;
}

std::vector<int> HomologyProfile::free_degrees() const {
    std::vector<int> out;
    for (int j = -1; j <= top_degree(); ++j)
        if (betti(j) != 0) out.push_back(j);
    return out;
}

std::string HomologyProfile::to_string() const {
    std::string out;
    for (int j = -1; j <= top_degree(); ++j) {
        if (betti(j) == 0 && torsion(j).empty()) continue;
        if (!out.empty()) out += ' ';
        out += "H" + std::to_string(j) + "=";
        std::string group;
        if (betti(j) == 1) group = "Z";
        else if (betti(j) > 1) group = "Z^" + std::to_string(betti(j));
        for (const BigInt& t : torsion(j)) group += (group.empty() ? "" : "+") + ("Z/" + t.get_str());
        out += group;
    }
    return out.empty() ? "0" : out;
}

SparseIntegerMatrix boundary_matrix(const std::vector<VertexSet>& faces,
                                    const std::vector<VertexSet>& lower_faces) {
    std::unordered_map<VertexSet, std::size_t> index;
    index.reserve(lower_faces.size());
    for (std::size_t i = 0; i < lower_faces.size(); ++i) index.emplace(lower_faces[i], i);

    SparseIntegerMatrix d(lower_faces.size(), faces.size());
    std::vector<std::pair<std::size_t, int>> column;
    for (std::size_t c = 0; c < faces.size(); ++c) {
        column.clear();
        int position = 0;
        faces[c].for_each([&](int v) {
            const VertexSet facet = faces[c] - VertexSet::singleton(v);
            column.emplace_back(index.at(facet), position % 2 == 0 ? 1 : -1);
            ++position;
        });
        std::sort(column.begin(), column.end());
        for (const auto& [r, s] : column) d.push(r, c, s);
    }
    return d;
}

SparseIntegerMatrix boundary_matrix(const SimplicialComplex& k, int j) {
    if (j < 0 || j > k.dim() + 1) {
        throw DegreeOutOfRange("boundary degree " + std::to_string(j) + " outside 0.." +
                               std::to_string(k.dim() + 1));
    }
    return boundary_matrix(k.faces_of_dim(j), k.faces_of_dim(j - 1));
}

HomologyProfile reduced_homology(const SimplicialComplex& k) {
    const int top = k.dim();
    std::vector<std::vector<VertexSet>> faces;
    for (int j = -1; j <= top; ++j) faces.push_back(k.faces_of_dim(j));
    auto faces_at = [&](int j) -> const std::vector<VertexSet>& { return faces[static_cast<std::size_t>(j + 1)]; };

    // smith[j] = SNF of ∂_j for j = 0..top; ∂_{top+1} = 0.
    std::vector<SmithForm> smith;
    for (int j = 0; j <= top; ++j) smith.push_back(smith_normal_form(boundary_matrix(faces_at(j), faces_at(j - 1))));
    auto rank_of = [&](int j) -> long {
        return (j >= 0 && j <= top) ? static_cast<long>(smith[static_cast<std::size_t>(j)].rank()) : 0;
    };

    HomologyProfile profile(top);
    for (int j = -1; j <= top; ++j) {
        const long cells = static_cast<long>(faces_at(j).size());
        std::vector<BigInt> torsion;
        if (j + 1 <= top) torsion = smith[static_cast<std::size_t>(j + 1)].torsion();
        profile.set(j, cells - rank_of(j) - rank_of(j + 1), std::move(torsion));
    }
    return profile;
}

IntegerMatrix integer_kernel(const IntegerMatrix& a) {
    const SmithForm snf = smith_normal_form(a, true);
    return snf.transforms->v.column_range(snf.rank(), a.cols());
}

IntegerMatrix cohomology_basis(const IntegerMatrix& d_prev, const IntegerMatrix& d_next) {
    const std::size_t n = d_next.cols();
    const SmithForm next = smith_normal_form(d_next, true);
    const std::size_t r = next.rank();
    const IntegerMatrix cycles = next.transforms->v.column_range(r, n);

    // Coboundaries in the coordinates of the cocycle basis.
    const IntegerMatrix coords = (next.transforms->v_inverse * d_prev).row_range(r, n);
    const SmithForm quotient = smith_normal_form(coords, true);
    for (const BigInt& d : quotient.diagonal) {
        if (d != 1) throw TorsionPresent("cohomology has torsion (invariant factor " + d.get_str() + ")");
    }
    const IntegerMatrix complement =
        quotient.transforms->u_inverse.column_range(quotient.rank(), coords.rows());
    return cycles * complement;
}

CocycleBasis cocycle_basis(const SimplicialComplex& k, int j) {
    if (j < -1 || j > k.dim()) {
        throw DegreeOutOfRange("cochain degree " + std::to_string(j) + " outside -1.." +
                               std::to_string(k.dim()));
    }
    const std::vector<VertexSet> lower = k.faces_of_dim(j - 1);
    const std::vector<VertexSet> here = k.faces_of_dim(j);
    const std::vector<VertexSet> upper = k.faces_of_dim(j + 1);
    // δ^{j-1} = ∂_j^T and δ^j = ∂_{j+1}^T.
    const IntegerMatrix d_prev = j >= 0 ? boundary_matrix(here, lower).to_dense().transpose()
                                        : IntegerMatrix(here.size(), 0);
    const IntegerMatrix d_next = boundary_matrix(upper, here).to_dense().transpose();

    const IntegerMatrix basis = cohomology_basis(d_prev, d_next);
    CocycleBasis out;
    out.degree = j;
    out.faces = here;
    for (std::size_t c = 0; c < basis.cols(); ++c) out.representatives.push_back(basis.column(c));
    return out;
}

}  // namespace zk
