#include <atomic>
#include <cstdlib>
#include <string_view>

#include "zk/kernels.hpp"

namespace zk::kernels {

namespace {

constexpr KernelTable kScalar{&scalar::any_superset, &scalar::any_subset,
                              &scalar::count_supersets};
#if defined(ZK_HAVE_AVX2_KERNELS)
constexpr KernelTable kAvx2{&avx2::any_superset, &avx2::any_subset, &avx2::count_supersets};
#endif

Isa detect() {
    if (const char* env = std::getenv("ZK_SIMD"); env && std::string_view(env) == "scalar") {
        return Isa::Scalar;
    }
    return isa_supported(Isa::Avx2) ? Isa::Avx2 : Isa::Scalar;
}

std::atomic<Isa>& selected() {
    static std::atomic<Isa> isa{detect()};
    return isa;
}

}  // namespace

bool isa_supported(Isa isa) {
    switch (isa) {
        case Isa::Scalar:
            return true;
        case Isa::Avx2:
#if defined(ZK_HAVE_AVX2_KERNELS)
            return __builtin_cpu_supports("avx2");
#else
            return false;
#endif
    }
    return false;
}

const KernelTable& table_for(Isa isa) {
#if defined(ZK_HAVE_AVX2_KERNELS)
    if (isa == Isa::Avx2) return kAvx2;
#endif
    (void)isa;
    return kScalar;
}

Isa active_isa() { return selected().load(std::memory_order_relaxed); }

void force_isa(Isa isa) {
    if (isa_supported(isa)) selected().store(isa, std::memory_order_relaxed);
}

const char* isa_name(Isa isa) {
    switch (isa) {
        case Isa::Scalar:
            return "scalar";
        case Isa::Avx2:
            return "avx2";
    }
    return "unknown";
}

}  // namespace zk::kernels
