// Compiled with -mavx2; only reached when CPUID reports AVX2.
#include <immintrin.h>


#include "zk/kernels_raw.hpp"

namespace zk::kernels::avx2 {

namespace {

// Lane mask (4 bits) of masks i..i+3 whose "uncovered" words are both zero.
// For supersets the uncovered part is query & ~set, for subsets set & ~query.
template <bool kSuperset>
inline unsigned covered_lanes(const std::uint64_t* lo, const std::uint64_t* hi,
                              __m256i qlo, __m256i qhi) {
    const __m256i slo = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(lo));
    const __m256i shi = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(hi));
    __m256i rest;
    if constexpr (kSuperset) {
        // andnot(a, b) = ~a & b
        rest = _mm256_or_si256(_mm256_andnot_si256(slo, qlo), _mm256_andnot_si256(shi, qhi));
    } else {
        rest = _mm256_or_si256(_mm256_andnot_si256(qlo, slo), _mm256_andnot_si256(qhi, shi));
    }
    const __m256i zero = _mm256_cmpeq_epi64(rest, _mm256_setzero_si256());
    return static_cast<unsigned>(_mm256_movemask_pd(_mm256_castsi256_pd(zero)));
}

}  // namespace

bool any_superset(const std::uint64_t* lo, const std::uint64_t* hi, std::size_t n,
                  std::uint64_t qlo, std::uint64_t qhi) {
    const __m256i vlo = _mm256_set1_epi64x(static_cast<long long>(qlo));
    const __m256i vhi = _mm256_set1_epi64x(static_cast<long long>(qhi));
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        if (covered_lanes<true>(lo + i, hi + i, vlo, vhi) != 0) return true;
    }
    return scalar::any_superset(lo + i, hi + i, n - i, qlo, qhi);
}

bool any_subset(const std::uint64_t* lo, const std::uint64_t* hi, std::size_t n,
                std::uint64_t qlo, std::uint64_t qhi) {
    const __m256i vlo = _mm256_set1_epi64x(static_cast<long long>(qlo));
    const __m256i vhi = _mm256_set1_epi64x(static_cast<long long>(qhi));
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        if (covered_lanes<false>(lo + i, hi + i, vlo, vhi) != 0) return true;
    }
    return scalar::any_subset(lo + i, hi + i, n - i, qlo, qhi);
}

std::size_t count_supersets(const std::uint64_t* lo, const std::uint64_t* hi, std::size_t n,
                            std::uint64_t qlo, std::uint64_t qhi) {
    const __m256i vlo = _mm256_set1_epi64x(static_cast<long long>(qlo));
    const __m256i vhi = _mm256_set1_epi64x(static_cast<long long>(qhi));
    std::size_t count = 0;
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        count += static_cast<std::size_t>(__builtin_popcount(covered_lanes<true>(lo + i, hi + i, vlo, vhi)));
    }
    return count + scalar::count_supersets(lo + i, hi + i, n - i, qlo, qhi);
}

}  // namespace zk::kernels::avx2
