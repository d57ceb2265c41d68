#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace zk {

/// Worker count: ZK_WORKERS if set to a positive integer, otherwise the
/// hardware concurrency (at least 1).
unsigned worker_count();

/// Runs body(i) for i in [0, n) across worker_count() threads. Indices are
/// claimed dynamically; callers write results into slot i so the merged
/// output does not depend on scheduling. The first exception thrown by any
/// body is rethrown after all workers join.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

template <class T, class F>
std::vector<T> parallel_map(std::size_t n, F&& f) {
    std::vector<T> out(n);
    parallel_for(n, [&](std::size_t i) { out[i] = f(i); });
    return out;
}

}  // namespace zk
