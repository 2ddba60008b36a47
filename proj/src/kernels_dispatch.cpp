#include "kernels_internal.hpp"

namespace svineq::kernels {

const KernelTable* avx2() {
#if defined(SVINEQ_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  static const bool supported = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  return supported ? &detail::avx2_table() : nullptr;
#else
  return nullptr;
#endif
}

const KernelTable& active() {
  static const KernelTable& chosen = avx2() != nullptr ? *avx2() : scalar();
  return chosen;
}

}  // namespace svineq::kernels
