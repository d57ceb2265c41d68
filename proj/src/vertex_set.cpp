#include "zk/vertex_set.hpp"

#include "zk/errors.hpp"

namespace zk {

VertexSet VertexSet::from_indices(std::span<const int> indices) {
    VertexSet s;
    for (int v : indices) {
        if (v < 0 || v >= kMaxVertices) {
            throw VertexOutOfRange("vertex index " + std::to_string(v) + " outside 0.." +
                                   std::to_string(kMaxVertices - 1));
        }
        s.insert(v);
    }
    return s;
}

VertexSet VertexSet::from_labels(std::span<const int> labels, int m) {
    if (m < 0 || m > kMaxVertices) {
        throw VertexOutOfRange("vertex count " + std::to_string(m) + " exceeds the cap of " +
                               std::to_string(kMaxVertices));
    }
    VertexSet s;
    for (int label : labels) {
        if (label < 1 || label > m) {
            throw VertexOutOfRange("vertex " + std::to_string(label) + " outside 1.." +
                                   std::to_string(m));
        }
        s.insert(label - 1);
    }
    return s;
}

std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b) {
    if (a == b) return std::strong_ordering::equal;
    const VertexSet diff = (a - b) | (b - a);
    const int first = diff.min();
    // Both share every member below `first`; exactly one contains `first`.
    const bool in_a = a.contains(first);
    const VertexSet& other = in_a ? b : a;
    const VertexSet above = other - VertexSet::range(first + 1);
    // `other` stops before `first` => it is a proper prefix and sorts first.
    const bool a_smaller = in_a ? !above.empty() : above.empty();
    return a_smaller ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::vector<int> VertexSet::indices() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for_each([&](int v) { out.push_back(v); });
    return out;
}

std::vector<int> VertexSet::to_labels() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for_each([&](int v) { out.push_back(v + 1); });
    return out;
}

std::string VertexSet::to_string() const {
    std::string out = "{";
    bool first = true;
    for_each([&](int v) {
        if (!first) out += ',';
        out += std::to_string(v + 1);
        first = false;
    });
    out += '}';
    return out;
}

VertexSet compress(VertexSet s, VertexSet within) {
    VertexSet out;
    s.for_each([&](int v) { out.insert(within.rank_of(v)); });
    return out;
}

VertexSet expand(VertexSet s, VertexSet within) {
    const std::vector<int> members = within.indices();
    VertexSet out;
    s.for_each([&](int i) { out.insert(members[static_cast<std::size_t>(i)]); });
    return out;
}

}  // namespace zk
