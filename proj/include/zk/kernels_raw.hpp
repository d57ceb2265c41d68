#pragma once

// Raw kernel entry points. Kept free of any other project header so the
// AVX2 translation unit instantiates no shared inline code.

#include <cstddef>
#include <cstdint>

namespace zk::kernels {

namespace scalar {
bool any_superset(const std::uint64_t* lo, const std::uint64_t* hi, std::size_t n,
                  std::uint64_t qlo, std::uint64_t qhi);
bool any_subset(const std::uint64_t* lo, const std::uint64_t* hi, std::size_t n,
                std::uint64_t qlo, std::uint64_t qhi);
std::size_t count_supersets(const std::uint64_t* lo, const std::uint64_t* hi, std::size_t n,
                            std::uint64_t qlo, std::uint64_t qhi);
}  // namespace scalar

#if defined(ZK_HAVE_AVX2_KERNELS)
namespace avx2 {
bool any_superset(const std::uint64_t* lo, const std::uint64_t* hi, std::size_t n,
                  std::uint64_t qlo, std::uint64_t qhi);
bool any_subset(const std::uint64_t* lo, const std::uint64_t* hi, std::size_t n,
                std::uint64_t qlo, std::uint64_t qhi);
std::size_t count_supersets(const std::uint64_t* lo, const std::uint64_t* hi, std::size_t n,
                            std::uint64_t qlo, std::uint64_t qhi);
}  // namespace avx2
#endif

}  // namespace zk::kernels
