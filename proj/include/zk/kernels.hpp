#pragma once

// Data-parallel scans over arrays of vertex masks. Every face test, non-face
// test and ridge count in the pipeline funnels through these three kernels.
//
// Each kernel has a scalar reference implementation and, on x86-64, an AVX2
// implementation selected at runtime from CPUID. Setting ZK_SIMD=scalar in the
// environment forces the reference path.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "zk/kernels_raw.hpp"
#include "zk/vertex_set.hpp"

namespace zk::kernels {

/// Structure-of-arrays mask storage: word 0 of every mask, then word 1.
class MaskArray {
public:
    MaskArray() = default;
    explicit MaskArray(std::span<const VertexSet> sets) {
        lo_.reserve(sets.size());
        hi_.reserve(sets.size());
        for (const VertexSet& s : sets) push_back(s);
    }

    void push_back(const VertexSet& s) {
        lo_.push_back(s.lo());
        hi_.push_back(s.hi());
    }
    std::size_t size() const { return lo_.size(); }
    bool empty() const { return lo_.empty(); }
    VertexSet operator[](std::size_t i) const { return {lo_[i], hi_[i]}; }

    std::span<const std::uint64_t> lo() const { return lo_; }
    std::span<const std::uint64_t> hi() const { return hi_; }

private:
    std::vector<std::uint64_t> lo_;
    std::vector<std::uint64_t> hi_;
};

enum class Isa { Scalar, Avx2 };

/// Raw kernel signatures: (lo words, hi words, count, query lo, query hi).
struct KernelTable {
    bool (*any_superset)(const std::uint64_t*, const std::uint64_t*, std::size_t,
                         std::uint64_t, std::uint64_t);
    bool (*any_subset)(const std::uint64_t*, const std::uint64_t*, std::size_t,
                       std::uint64_t, std::uint64_t);
    std::size_t (*count_supersets)(const std::uint64_t*, const std::uint64_t*, std::size_t,
                                   std::uint64_t, std::uint64_t);
};

const KernelTable& table_for(Isa isa);
bool isa_supported(Isa isa);
Isa active_isa();
const char* isa_name(Isa isa);

/// Overrides runtime selection (tests and benchmarking). Unsupported ISAs
/// are ignored.
void force_isa(Isa isa);

/// True iff some mask in `sets` contains `query`.
inline bool any_superset(const MaskArray& sets, VertexSet query) {
    return table_for(active_isa())
        .any_superset(sets.lo().data(), sets.hi().data(), sets.size(), query.lo(), query.hi());
}

/// True iff some mask in `sets` is contained in `query`.
inline bool any_subset(const MaskArray& sets, VertexSet query) {
    return table_for(active_isa())
        .any_subset(sets.lo().data(), sets.hi().data(), sets.size(), query.lo(), query.hi());
}

/// Number of masks in `sets` that contain `query`.
inline std::size_t count_supersets(const MaskArray& sets, VertexSet query) {
    return table_for(active_isa())
        .count_supersets(sets.lo().data(), sets.hi().data(), sets.size(), query.lo(), query.hi());
}

}  // namespace zk::kernels
