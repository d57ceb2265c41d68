#pragma once

// Shared test helpers. The oracles here deliberately avoid the library's
// face enumeration, boundary matrices and Smith normal form.

#include <algorithm>
#include <filesystem>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "zk/io.hpp"
#include "zk/simplicial_complex.hpp"

namespace zk::test {

inline std::filesystem::path corpus_dir() { return ZK_CORPUS_DIR; }

inline SimplicialComplex corpus(const std::string& name) { return load_complex((corpus_dir() / name).string()); }

/// Every bundled and external corpus file, sorted by path.
inline std::vector<std::filesystem::path> corpus_files() {
    std::vector<std::filesystem::path> out;
    for (const auto& dir : {corpus_dir(), corpus_dir() / "external"}) {
        if (!std::filesystem::exists(dir)) continue;
        for (const auto& e : std::filesystem::directory_iterator(dir)) {
            const auto ext = e.path().extension();
            if (e.is_regular_file() && (ext == ".txt" || ext == ".json")) out.push_back(e.path());
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Faces as sorted 0-based index lists, by brute force over facet subsets.
inline std::vector<std::set<std::vector<int>>> faces_by_size(const SimplicialComplex& k) {
    std::vector<std::set<std::vector<int>>> out(static_cast<std::size_t>(k.dim() + 2));
    for (const VertexSet& f : k.facets()) {
        const std::vector<int> members = f.indices();
        const std::size_t n = members.size();
        for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
            std::vector<int> face;
            for (std::size_t i = 0; i < n; ++i)
                if (mask >> i & 1) face.push_back(members[i]);
            out[face.size()].insert(face);
        }
    }
    return out;
}

/// Rank over F_p by Gaussian elimination.
inline long rank_mod_p(std::vector<std::vector<long>> a, long p) {
    long rank = 0;
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    for (auto& row : a)
        for (long& x : row) x = ((x % p) + p) % p;
    auto inverse = [p](long x) {
        long r = 1, e = p - 2;
        for (long b = x; e; e >>= 1, b = b * b % p)
            if (e & 1) r = r * b % p;
        return r;
    };
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && a[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[r]);
        const long inv = inverse(a[r][c]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            const long f = a[i][c] * inv % p;
            for (std::size_t j = c; j < cols; ++j) a[i][j] = ((a[i][j] - f * a[r][j]) % p + p) % p;
        }
        ++r;
        ++rank;
    }
    return rank;
}

/// Reduced Betti numbers over F_p, degrees -1..dim (index j+1).
inline std::vector<long> reduced_betti_mod_p(const SimplicialComplex& k, long p) {
    const auto faces = faces_by_size(k);
    const int top = k.dim();
    std::vector<long> rank_d(static_cast<std::size_t>(top + 3), 0);  // rank of ∂ from size s to size s-1
    for (int s = 1; s <= top + 1; ++s) {
        const std::vector<std::vector<int>> upper(faces[s].begin(), faces[s].end());
        const std::vector<std::vector<int>> lower(faces[s - 1].begin(), faces[s - 1].end());
        std::vector<std::vector<long>> m(lower.size(), std::vector<long>(upper.size(), 0));
        for (std::size_t c = 0; c < upper.size(); ++c) {
            for (std::size_t i = 0; i < upper[c].size(); ++i) {
                std::vector<int> face = upper[c];
                face.erase(face.begin() + static_cast<long>(i));
                const auto row = std::lower_bound(lower.begin(), lower.end(), face) - lower.begin();
                m[static_cast<std::size_t>(row)][c] = i % 2 == 0 ? 1 : -1;
            }
        }
        rank_d[static_cast<std::size_t>(s)] = rank_mod_p(m, p);
    }
    std::vector<long> betti;
    for (int s = 0; s <= top + 1; ++s) {
        const long cells = static_cast<long>(faces[s].size());
        betti.push_back(cells - rank_d[static_cast<std::size_t>(s)] - rank_d[static_cast<std::size_t>(s + 1)]);
    }
    return betti;
}

/// Connected components of the 1-skeleton restricted to `subset` (union-find).
inline int components_within(const SimplicialComplex& k, VertexSet subset) {
    std::vector<int> parent(static_cast<std::size_t>(k.vertex_count()));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] =
                                                            parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        return x;
    };
    for (const VertexSet& f : k.facets()) {
        const std::vector<int> members = (f & subset).indices();
        for (std::size_t i = 1; i < members.size(); ++i)
            parent[static_cast<std::size_t>(find(members[i]))] = find(members[0]);
    }
    std::set<int> roots;
    subset.for_each([&](int v) { roots.insert(find(v)); });
    return static_cast<int>(roots.size());
}

inline long binomial(long n, long r) {
    if (r < 0 || r > n) return 0;
    long out = 1;
    for (long i = 1; i <= r; ++i) out = out * (n - r + i) / i;
    return out;
}

}  // namespace zk::test
