#include "locc/kernels.hpp"

namespace locc::kernels {

#if defined(LOCC_HAVE_AVX2_KERNELS)
namespace detail {
const KernelSet& avx2_unchecked();
}

const KernelSet* avx2() {
  static const bool supported = __builtin_cpu_supports("avx2");
  return supported ? &detail::avx2_unchecked() : nullptr;
}
#else
const KernelSet* avx2() { return nullptr; }
#endif

const KernelSet& active() {
  static const KernelSet& chosen = avx2() != nullptr ? *avx2() : scalar();
  return chosen;
}

}  // namespace locc::kernels
