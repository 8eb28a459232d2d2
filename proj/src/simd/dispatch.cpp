#include <cstdlib>
#include <string_view>

#include "eqdeg/simd.hpp"

namespace eqdeg::simd {

#if defined(EQDEG_HAVE_AVX2)
const Kernels& avx2_kernel_table();
#endif
#if defined(EQDEG_HAVE_NEON)
const Kernels& neon_kernel_table();
#endif

const Kernels* avx2_kernels() {
#if defined(EQDEG_HAVE_AVX2)
  static const bool ok = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
  return ok ? &avx2_kernel_table() : nullptr;
#else
  return nullptr;
#endif
}

const Kernels* neon_kernels() {
#if defined(EQDEG_HAVE_NEON)
  return &neon_kernel_table();  // mandatory on aarch64
#else
  return nullptr;
#endif
}

std::vector<const Kernels*> available() {
  std::vector<const Kernels*> out{&scalar_kernels()};
  if (auto* k = avx2_kernels()) out.push_back(k);
  if (auto* k = neon_kernels()) out.push_back(k);
  return out;
}

const Kernels& active() {
  static const Kernels* chosen = [] {
    const char* env = std::getenv("EQDEG_SIMD");
    if (env && std::string_view(env) == "scalar") return &scalar_kernels();
    if (auto* k = avx2_kernels()) return k;
    if (auto* k = neon_kernels()) return k;
    return &scalar_kernels();
  }();
  return *chosen;
}

}  // namespace eqdeg::simd
