#include <cstdlib>
#include <string_view>

#include "coinduct/kernels.hpp"

namespace coinduct::kernels {

namespace {

bool cpu_has_avx2() {
#if defined(COINDUCT_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

bool scalar_forced() {
  const char* env = std::getenv("COINDUCT_KERNELS");
  return env != nullptr && std::string_view(env) == "scalar";
}

}  // namespace

const KernelSet& scalar_kernels() {
  static const KernelSet set{Isa::scalar, "scalar", &scalar::der_batch, &scalar::conf_batch,
                             &scalar::closed_meet, &scalar::consistent_join};
  return set;
}

const KernelSet* avx2_kernels() {
#if defined(COINDUCT_HAVE_AVX2)
  static const KernelSet set{Isa::avx2, "avx2", &avx2::der_batch, &avx2::conf_batch,
                             &avx2::closed_meet, &avx2::consistent_join};
  static const bool supported = cpu_has_avx2();
  return supported ? &set : nullptr;
#else
  return nullptr;
#endif
}

const KernelSet& active_kernels() {
  static const KernelSet& chosen = [] () -> const KernelSet& {
    if (!scalar_forced()) {
      if (const auto* fast = avx2_kernels()) return *fast;
    }
    return scalar_kernels();
  }();
  return chosen;
}

}  // namespace coinduct::kernels
