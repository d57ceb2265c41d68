#include "zk/kernels_raw.hpp"

namespace zk::kernels::scalar {

bool any_superset(const std::uint64_t* lo, const std::uint64_t* hi, std::size_t n,
                  std::uint64_t qlo, std::uint64_t qhi) {
    for (std::size_t i = 0; i < n; ++i) {
        if (((qlo & ~lo[i]) | (qhi & ~hi[i])) == 0) return true;
    }
    return false;
}

bool any_subset(const std::uint64_t* lo, const std::uint64_t* hi, std::size_t n,
                std::uint64_t qlo, std::uint64_t qhi) {
    for (std::size_t i = 0; i < n; ++i) {
        if (((lo[i] & ~qlo) | (hi[i] & ~qhi)) == 0) return true;
    }
    return false;
}

std::size_t count_supersets(const std::uint64_t* lo, const std::uint64_t* hi, std::size_t n,
                            std::uint64_t qlo, std::uint64_t qhi) {
    std::size_t count = 0;
    for (std::size_t i = 0; i < n; ++i) {
        count += ((qlo & ~lo[i]) | (qhi & ~hi[i])) == 0 ? 1 : 0;
    }
    return count;
}

}  // namespace zk::kernels::scalar
