#include "zk/simplicial_complex.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "zk/errors.hpp"

namespace zk {

namespace {

// Inclusion-maximal members of `sets`, lexicographically sorted.
std::vector<VertexSet> maximal_antichain(std::vector<VertexSet> sets) {
    std::sort(sets.begin(), sets.end(),
              [](const VertexSet& a, const VertexSet& b) { return a.size() > b.size(); });
    std::vector<VertexSet> kept;
    kernels::MaskArray kept_masks;
    for (const VertexSet& s : sets) {
        if (!kernels::any_superset(kept_masks, s)) {
            kept.push_back(s);
            kept_masks.push_back(s);
        }
    }
    std::sort(kept.begin(), kept.end());
    return kept;
}

struct DisjointSets {
    std::vector<std::size_t> parent;
    explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace

SimplicialComplex::SimplicialComplex(int m, std::vector<VertexSet> facets, std::vector<int> labels)
    : m_(m), facets_(std::move(facets)), labels_(std::move(labels)) {
    if (facets_.empty()) facets_.push_back(VertexSet{});
    dim_ = -1;
    for (const VertexSet& f : facets_) dim_ = std::max(dim_, f.size() - 1);
    facet_masks_ = kernels::MaskArray(facets_);
    compute_minimal_non_faces();
}

SimplicialComplex SimplicialComplex::build(int m, std::vector<VertexSet> facets, BuildOptions options) {
    if (m < 1 || m > kMaxVertices) {
        throw VertexOutOfRange("vertex count " + std::to_string(m) + " outside 1.." +
                               std::to_string(kMaxVertices));
    }
    if (facets.empty()) throw EmptyFacetList("a complex needs at least one facet");
    const VertexSet all = VertexSet::range(m);
    VertexSet covered;
    for (const VertexSet& f : facets) {
        if (f.empty()) throw EmptyFacetList("facets must be nonempty");
        if (!f.is_subset_of(all)) {
            throw VertexOutOfRange("facet " + f.to_string() + " has a vertex outside 1.." +
                                   std::to_string(m));
        }
        covered = covered | f;
    }
    if (!options.allow_ghost_vertices && covered != all) {
        throw GhostVertex("vertices " + (all - covered).to_string() + " lie in no facet");
    }
    std::vector<int> labels(static_cast<std::size_t>(m));
    std::iota(labels.begin(), labels.end(), 1);
    return SimplicialComplex(m, maximal_antichain(std::move(facets)), std::move(labels));
}

SimplicialComplex SimplicialComplex::void_complex() { return SimplicialComplex(0, {}, {}); }

bool SimplicialComplex::is_face(VertexSet sigma) const {
    if (!sigma.is_subset_of(vertices())) {
        throw VertexOutOfRange("subset " + sigma.to_string() + " not contained in the vertex set");
    }
    return kernels::any_superset(facet_masks_, sigma);
}

bool SimplicialComplex::is_non_face(VertexSet subset) const {
    return kernels::any_subset(non_face_masks_, subset);
}

SimplicialComplex SimplicialComplex::full_subcomplex(VertexSet subset) const {
    if (!subset.is_subset_of(vertices())) {
        throw VertexOutOfRange("subset " + subset.to_string() + " not contained in the vertex set");
    }
    std::vector<VertexSet> restricted;
    restricted.reserve(facets_.size());
    for (const VertexSet& f : facets_) {
        const VertexSet r = f & subset;
        if (!r.empty()) restricted.push_back(compress(r, subset));
    }
    std::vector<int> labels;
    subset.for_each([&](int v) { labels.push_back(labels_[static_cast<std::size_t>(v)]); });
    return SimplicialComplex(subset.size(), maximal_antichain(std::move(restricted)),
                             std::move(labels));
}

SimplicialComplex SimplicialComplex::vertex_deletion(int vertex) const {
    if (vertex < 0 || vertex >= m_) {
        throw VertexOutOfRange("vertex index " + std::to_string(vertex) + " outside the complex");
    }
    return full_subcomplex(vertices() - VertexSet::singleton(vertex));
}

SimplicialComplex SimplicialComplex::link(int vertex) const {
    if (vertex < 0 || vertex >= m_) {
        throw VertexOutOfRange("vertex index " + std::to_string(vertex) + " outside the complex");
    }
    const VertexSet v = VertexSet::singleton(vertex);
    std::vector<VertexSet> star;
    VertexSet support;
    for (const VertexSet& f : facets_) {
        if (f.contains(vertex)) {
            star.push_back(f - v);
            support = support | (f - v);
        }
    }
    std::vector<VertexSet> facets;
    for (const VertexSet& s : star) {
        if (!s.empty()) facets.push_back(compress(s, support));
    }
    std::vector<int> labels;
    support.for_each([&](int u) { labels.push_back(labels_[static_cast<std::size_t>(u)]); });
    return SimplicialComplex(support.size(), maximal_antichain(std::move(facets)), std::move(labels));
}

std::vector<VertexSet> SimplicialComplex::faces_of_dim(int j) const {
    if (j < -1 || j > dim_) return {};
    if (j == -1) return {VertexSet{}};
    std::unordered_set<VertexSet> seen;
    for (const VertexSet& f : facets_) {
        for_each_k_subset(f, j + 1, [&](VertexSet s) { seen.insert(s); });
    }
    std::vector<VertexSet> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::size_t> SimplicialComplex::f_vector() const {
    std::vector<std::size_t> out;
    for (int j = -1; j <= dim_; ++j) out.push_back(faces_of_dim(j).size());
    return out;
}

void SimplicialComplex::compute_minimal_non_faces() {
    // Every minimal non-face N splits as (face N - max(N)) + max(N).
    minimal_non_faces_.clear();
    for (int j = -1; j <= dim_; ++j) {
        for (const VertexSet& face : faces_of_dim(j)) {
            for (int v = face.max() + 1; v < m_; ++v) {
                const VertexSet candidate = face | VertexSet::singleton(v);
                if (kernels::any_superset(facet_masks_, candidate)) continue;
                bool minimal = true;
                candidate.for_each([&](int w) {
                    if (minimal && w != v &&
                        !kernels::any_superset(facet_masks_, candidate - VertexSet::singleton(w))) {
                        minimal = false;
                    }
                });
                if (minimal) minimal_non_faces_.push_back(candidate);
            }
        }
    }
    std::sort(minimal_non_faces_.begin(), minimal_non_faces_.end(),
              [](const VertexSet& a, const VertexSet& b) {
                  return a.size() != b.size() ? a.size() < b.size() : a < b;
              });
    non_face_masks_ = kernels::MaskArray(minimal_non_faces_);
}

bool SimplicialComplex::is_l_neighbourly(int l) const {
    if (l < 0) return true;
    if (l + 1 > m_) return true;
    for (const VertexSet& n : minimal_non_faces_) {
        if (n.size() <= l + 1) return false;
    }
    return true;
}

int SimplicialComplex::max_neighbourliness() const {
    if (minimal_non_faces_.empty()) return m_ - 1;
    return minimal_non_faces_.front().size() - 2;
}

bool SimplicialComplex::is_pure_pseudomanifold(int d) const {
    if (d < 0) return false;
    for (const VertexSet& f : facets_) {
        if (f.size() != d + 1) return false;
    }
    DisjointSets components(facets_.size());
    std::unordered_map<VertexSet, std::size_t> first_owner;
    for (std::size_t i = 0; i < facets_.size(); ++i) {
        bool ok = true;
        facets_[i].for_each([&](int v) {
            if (!ok) return;
            const VertexSet ridge = facets_[i] - VertexSet::singleton(v);
            if (kernels::count_supersets(facet_masks_, ridge) != 2) {
                ok = false;
                return;
            }
            auto [it, inserted] = first_owner.emplace(ridge, i);
            if (!inserted) components.unite(it->second, i);
        });
        if (!ok) return false;
    }
    const std::size_t root = components.find(0);
    for (std::size_t i = 1; i < facets_.size(); ++i) {
        if (components.find(i) != root) return false;
    }
    return true;
}

SimplicialComplex build_complex(int m, const std::vector<std::vector<int>>& facets,
                                BuildOptions options) {
    if (m < 1 || m > kMaxVertices) {
        throw VertexOutOfRange("vertex count " + std::to_string(m) + " outside 1.." +
                               std::to_string(kMaxVertices));
    }
    std::vector<VertexSet> sets;
    sets.reserve(facets.size());
    for (const auto& f : facets) {
        if (f.empty()) throw EmptyFacetList("facets must be nonempty");
        sets.push_back(VertexSet::from_labels(f, m));
    }
    return SimplicialComplex::build(m, std::move(sets), options);
}

}  // namespace zk
