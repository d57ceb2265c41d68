#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace zk {

/// Hard cap on the number of vertices of any complex.
inline constexpr int kMaxVertices = 128;

/// A subset of the vertex set, stored as a 128-bit mask over 0-based
/// internal indices. External (1-based) labels only enter and leave through
/// `from_labels` / `to_labels`.
class VertexSet {
public:
    constexpr VertexSet() = default;
    constexpr VertexSet(std::uint64_t lo, std::uint64_t hi) : lo_(lo), hi_(hi) {}

    static VertexSet from_indices(std::span<const int> indices);
    static VertexSet from_indices(std::initializer_list<int> indices) {
        return from_indices(std::span<const int>(indices.begin(), indices.size()));
    }
    /// 1-based labels to internal indices; throws VertexOutOfRange outside 1..m.
    static VertexSet from_labels(std::span<const int> labels, int m);
    static VertexSet from_labels(std::initializer_list<int> labels, int m) {
        return from_labels(std::span<const int>(labels.begin(), labels.size()), m);
    }

    /// {0, ..., count-1}
    static constexpr VertexSet range(int count) {
        if (count <= 0) return {};
        if (count >= 128) return {~0ULL, ~0ULL};
        if (count >= 64) return {~0ULL, count == 64 ? 0ULL : (~0ULL >> (128 - count))};
        return {~0ULL >> (64 - count), 0};
    }
    static constexpr VertexSet singleton(int v) {
        return v < 64 ? VertexSet{1ULL << v, 0} : VertexSet{0, 1ULL << (v - 64)};
    }

    constexpr bool contains(int v) const {
        return v < 64 ? ((lo_ >> v) & 1ULL) != 0 : ((hi_ >> (v - 64)) & 1ULL) != 0;
    }
    constexpr void insert(int v) { *this = *this | singleton(v); }
    constexpr void erase(int v) { *this = *this - singleton(v); }

    constexpr int size() const { return std::popcount(lo_) + std::popcount(hi_); }
    constexpr bool empty() const { return (lo_ | hi_) == 0; }

    constexpr bool is_subset_of(const VertexSet& o) const {
        return (lo_ & ~o.lo_) == 0 && (hi_ & ~o.hi_) == 0;
    }
    constexpr bool intersects(const VertexSet& o) const {
        return ((lo_ & o.lo_) | (hi_ & o.hi_)) != 0;
    }

    friend constexpr VertexSet operator|(VertexSet a, VertexSet b) {
        return {a.lo_ | b.lo_, a.hi_ | b.hi_};
    }
    friend constexpr VertexSet operator&(VertexSet a, VertexSet b) {
        return {a.lo_ & b.lo_, a.hi_ & b.hi_};
    }
    /// Set difference.
    friend constexpr VertexSet operator-(VertexSet a, VertexSet b) {
        return {a.lo_ & ~b.lo_, a.hi_ & ~b.hi_};
    }
    friend constexpr bool operator==(VertexSet a, VertexSet b) = default;

    /// Lexicographic order of the ascending member lists ({1,2} < {1,2,3} < {1,3}).
    friend std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b);

    constexpr VertexSet complement_in(int m) const { return range(m) - *this; }

    /// Smallest / largest member; -1 when empty.
    constexpr int min() const {
        if (lo_) return std::countr_zero(lo_);
        if (hi_) return 64 + std::countr_zero(hi_);
        return -1;
    }
    constexpr int max() const {
        if (hi_) return 127 - std::countl_zero(hi_);
        if (lo_) return 63 - std::countl_zero(lo_);
        return -1;
    }

    /// Number of members strictly below v.
    constexpr int rank_of(int v) const {
        if (v <= 0) return 0;
        if (v < 64) return std::popcount(lo_ & ((1ULL << v) - 1));
        if (v == 64) return std::popcount(lo_);
        return std::popcount(lo_) + std::popcount(hi_ & ((1ULL << (v - 64)) - 1));
    }

    template <class F>
    constexpr void for_each(F&& f) const {
        for (std::uint64_t w = lo_; w; w &= w - 1) f(std::countr_zero(w));
        for (std::uint64_t w = hi_; w; w &= w - 1) f(64 + std::countr_zero(w));
    }

    std::vector<int> indices() const;
    /// 1-based labels, ascending.
    std::vector<int> to_labels() const;
    /// "{1,3,5}" in 1-based labels.
    std::string to_string() const;

    constexpr std::uint64_t lo() const { return lo_; }
    constexpr std::uint64_t hi() const { return hi_; }

private:
    std::uint64_t lo_ = 0;
    std::uint64_t hi_ = 0;
};

/// Re-expresses `s` (a subset of `within`) in the coordinates of `within`:
/// the i-th smallest member of `within` becomes index i.
VertexSet compress(VertexSet s, VertexSet within);
/// Inverse of `compress`.
VertexSet expand(VertexSet s, VertexSet within);

/// Calls f on every size-`k` subset of `ground`, in lexicographic order.
template <class F>
void for_each_k_subset(VertexSet ground, int k, F&& f) {
    std::vector<int> members = ground.indices();
    const int n = static_cast<int>(members.size());
    if (k < 0 || k > n) return;
    if (k == 0) {
        f(VertexSet{});
        return;
    }
    std::vector<int> pos(k);
    for (int i = 0; i < k; ++i) pos[i] = i;
    while (true) {
        VertexSet s;
        for (int p : pos) s.insert(members[p]);
        f(s);
        int i = k - 1;
        while (i >= 0 && pos[i] == n - k + i) --i;
        if (i < 0) return;
        ++pos[i];
        for (int j = i + 1; j < k; ++j) pos[j] = pos[j - 1] + 1;
    }
}

struct VertexSetHash {
    std::size_t operator()(const VertexSet& s) const noexcept {
        std::uint64_t h = s.lo() * 0x9E3779B97F4A7C15ULL;
        h ^= s.hi() + 0x632BE59BD9B4E019ULL + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h);
    }
};

}  // namespace zk

template <>
struct std::hash<zk::VertexSet> : zk::VertexSetHash {};
