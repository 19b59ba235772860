#include "aisemi/simd/kernels.hpp"

namespace aisemi::simd {
namespace {

void gather_u32(const std::uint32_t* table, std::uint32_t n,
                const std::uint32_t* a, const std::uint32_t* b,
                std::uint32_t* out, std::size_t count) {
  for (std::size_t i = 0; i < count; ++i) {
    out[i] = table[a[i] * n + b[i]];
  }
}

void gather_u8(const std::uint32_t* table, std::uint32_t n,
               const std::uint8_t* a, const std::uint8_t* b, std::uint8_t* out,
               std::size_t count) {
  for (std::size_t i = 0; i < count; ++i) {
    out[i] = static_cast<std::uint8_t>(table[a[i] * n + b[i]]);
  }
}

std::size_t first_mismatch_u32(const std::uint32_t* a, const std::uint32_t* b,
                               std::size_t count) {
  for (std::size_t i = 0; i < count; ++i) {
    if (a[i] != b[i]) {
      return i;
    }
  }
  return count;
}

bool all_related_u8(const std::uint32_t* relation, std::uint32_t n,
                    const std::uint8_t* a, const std::uint8_t* b,
                    std::size_t count) {
  for (std::size_t i = 0; i < count; ++i) {
    if (relation[a[i] * n + b[i]] == 0) {
      return false;
    }
  }
  return true;
}

}  // namespace

const KernelSet& scalar_kernels() {
  static const KernelSet set{"scalar", gather_u32, gather_u8,
                             first_mismatch_u32, all_related_u8};
  return set;
}

}  // namespace aisemi::simd
