#include "zk/hochster.hpp"

#include <algorithm>

#include "zk/errors.hpp"
#include "zk/parallel.hpp"

namespace zk {

std::vector<VertexSet> nonface_subsets(const SimplicialComplex& k) {
    std::vector<VertexSet> out;
    const VertexSet all = k.vertices();
    for (int size = 1; size <= k.vertex_count(); ++size) {
        for_each_k_subset(all, size, [&](VertexSet s) {
            if (k.is_non_face(s)) out.push_back(s);
        });
    }
    return out;
}

SubsetHomology::SubsetHomology(const SimplicialComplex& k)
    : complex_(&k), nonfaces_(nonface_subsets(k)), acyclic_(-1) {
    std::vector<HomologyProfile> profiles = parallel_map<HomologyProfile>(
        nonfaces_.size(), [&](std::size_t i) { return reduced_homology(k.full_subcomplex(nonfaces_[i])); });
    for (std::size_t i = 0; i < nonfaces_.size(); ++i) by_subset_.emplace(nonfaces_[i], std::move(profiles[i]));
}

const HomologyProfile& SubsetHomology::of(VertexSet subset) const {
    const auto it = by_subset_.find(subset);
    return it == by_subset_.end() ? acyclic_ : it->second;
}

long DecompositionTable::sphere_count() const {
    long total = 0;
    for (const WedgeSummand& s : summands) total += s.multiplicity;
    return total;
}

std::map<int, long> DecompositionTable::by_dimension() const {
    std::map<int, long> out;
    for (const WedgeSummand& s : summands) out[s.sphere_dim] += s.multiplicity;
    return out;
}

DecompositionTable wedge_summands(const SubsetHomology& homology, int disc_k, bool include_top) {
    if (disc_k < 2) throw BadParameters("disc dimension k must be at least 2");
    const SimplicialComplex& k = homology.complex();
    DecompositionTable table;
    table.m = k.vertex_count();
    table.disc_k = disc_k;
    table.include_top = include_top;
    if (k.dim() >= 1 && k.dim() % 2 == 1) table.n = (k.dim() - 1) / 2;

    const VertexSet all = k.vertices();
    for (const VertexSet& subset : homology.nonfaces()) {
        if (!include_top && subset == all) continue;
        const HomologyProfile& h = homology.of(subset);
        for (int j = -1; j <= h.top_degree(); ++j) {
            if (h.betti(j) > 0) {
                table.summands.push_back(
                    {subset, j, j + 1 + (disc_k - 1) * subset.size(), h.betti(j), disc_k});
            }
            if (!h.torsion(j).empty()) table.torsion.push_back({subset, j, h.torsion(j)});
        }
    }
    return table;
}

DecompositionTable wedge_summands(const SimplicialComplex& k, int disc_k, bool include_top) {
    return wedge_summands(SubsetHomology(k), disc_k, include_top);
}

std::vector<long> zk_betti(const SubsetHomology& homology, int disc_k) {
    const DecompositionTable table = wedge_summands(homology, disc_k, true);
    int top = 0;
    for (const WedgeSummand& s : table.summands) top = std::max(top, s.sphere_dim);
    std::vector<long> betti(static_cast<std::size_t>(top + 1), 0);
    betti[0] = 1;
    for (const WedgeSummand& s : table.summands) betti[static_cast<std::size_t>(s.sphere_dim)] += s.multiplicity;
    return betti;
}

std::vector<long> zk_betti(const SimplicialComplex& k, int disc_k) {
    return zk_betti(SubsetHomology(k), disc_k);
}

WedgeHypothesisReport check_wedge_hypothesis(const SubsetHomology& homology, int n, int disc_k) {
    const SimplicialComplex& k = homology.complex();
    const VertexSet all = k.vertices();
    WedgeHypothesisReport report;
    report.n = n;

    for (const VertexSet& subset : homology.nonfaces()) {
        if (subset == all) continue;
        const HomologyProfile& h = homology.of(subset);
        if (!h.torsion_free()) {
            report.offenders.push_back({subset, h, "torsion"});
            continue;
        }
        const std::vector<int> degrees = h.free_degrees();
        if (std::any_of(degrees.begin(), degrees.end(), [&](int j) { return j != n; })) {
            report.offenders.push_back({subset, h, "homology outside degree " + std::to_string(n)});
        }
    }

    const int sphere_dim = 2 * n + 1;
    const HomologyProfile& top = homology.of(all);
    report.top_ok = k.is_non_face(all) && top.torsion_free() && top.total_rank() == 1 &&
                    top.betti(sphere_dim) == 1;
    if (!report.top_ok) {
        report.offenders.push_back(
            {all, top, "top class missing: K lacks the homology of S^" + std::to_string(sphere_dim)});
    }

    report.passed = report.offenders.empty();
    if (report.passed) {
        const DecompositionTable table = wedge_summands(homology, disc_k, false);
        report.degree_law_ok = std::all_of(table.summands.begin(), table.summands.end(), [&](const WedgeSummand& s) {
            return s.sphere_dim == n + 1 + (disc_k - 1) * s.subset.size();
        });
        report.passed = report.degree_law_ok;
    }
    return report;
}

WedgeHypothesisReport check_wedge_hypothesis(const SimplicialComplex& k, int n, int disc_k) {
    return check_wedge_hypothesis(SubsetHomology(k), n, disc_k);
}

}  // namespace zk
