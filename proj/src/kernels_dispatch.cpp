#include <cstdlib>
#include <string_view>

#include "wavent/kernels.hpp"

namespace wavent::kernels {

#if defined(WAVENT_HAVE_AVX2)
const KernelTable& avx2_kernels_impl();
#endif

const KernelTable* avx2_kernels() {
#if defined(WAVENT_HAVE_AVX2)
  static const bool supported = [] {
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  }();
  return supported ? &avx2_kernels_impl() : nullptr;
#else
  return nullptr;
#endif
}

const KernelTable& active_kernels() {
  static const KernelTable& table = []() -> const KernelTable& {
    const char* forced = std::getenv("WAVENT_KERNELS");
    if (forced != nullptr && std::string_view(forced) == "scalar") return scalar_kernels();
    if (const KernelTable* simd = avx2_kernels()) return *simd;
    return scalar_kernels();
  }();
  return table;
}

}  // namespace wavent::kernels
