#include <atomic>
#include <cstdlib>

#include "aisemi/simd/kernels.hpp"

namespace aisemi::simd {

#if defined(AISEMI_HAVE_AVX2_TU)
namespace detail {
const KernelSet& avx2_kernel_set();
}
#endif

namespace {

const KernelSet* initial_kernels() {
  if (const char* forced = std::getenv("AISEMI_KERNELS")) {
    std::string_view name(forced);
    if (name == "scalar") {
      return &scalar_kernels();
    }
    if (name == "avx2" && avx2_kernels() != nullptr) {
      return avx2_kernels();
    }
  }
  if (const KernelSet* best = avx2_kernels()) {
    return best;
  }
  return &scalar_kernels();
}

std::atomic<const KernelSet*>& active_slot() {
  static std::atomic<const KernelSet*> slot{initial_kernels()};
  return slot;
}

}  // namespace

const KernelSet* avx2_kernels() {
#if defined(AISEMI_HAVE_AVX2_TU)
  static const bool supported = __builtin_cpu_supports("avx2");
  return supported ? &detail::avx2_kernel_set() : nullptr;
#else
  return nullptr;
#endif
}

const KernelSet& active_kernels() { return *active_slot().load(); }

std::vector<const KernelSet*> available_kernels() {
  std::vector<const KernelSet*> sets{&scalar_kernels()};
  if (const KernelSet* avx2 = avx2_kernels()) {
    sets.push_back(avx2);
  }
  return sets;
}

bool select_kernels(std::string_view name) {
  for (const KernelSet* set : available_kernels()) {
    if (set->name == name) {
      active_slot().store(set);
      return true;
    }
  }
  return false;
}

}  // namespace aisemi::simd
