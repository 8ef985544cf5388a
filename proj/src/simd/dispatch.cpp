#include <cstdlib>
#include <cstring>

#include "plategoal/simd.hpp"

namespace plategoal::simd {

#ifdef PLATEGOAL_HAVE_AVX2
const Kernels& avx2_kernels_impl();
#endif

const Kernels* avx2_kernels() {
#ifdef PLATEGOAL_HAVE_AVX2
  static const bool usable = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  return usable ? &avx2_kernels_impl() : nullptr;
#else
  return nullptr;
#endif
}

const Kernels& active() {
  static const Kernels* chosen = [] {
    const char* env = std::getenv("PLATEGOAL_SIMD");
    if (env && std::strcmp(env, "scalar") == 0) return &scalar_kernels();
    const Kernels* k = avx2_kernels();
    return k ? k : &scalar_kernels();
  }();
  return *chosen;
}

const char* isa_name(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return "scalar";
    case Isa::avx2:
      return "avx2";
  }
  return "unknown";
}

}  // namespace plategoal::simd
