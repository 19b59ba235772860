#pragma once

// Data-parallel inner loops shared by the brute-force satisfaction scan and
// the evaluation-vector engine.  Every kernel has a portable scalar version
// and, on x86-64, an AVX2 version; the active set is picked once at startup
// from CPUID and can be overridden with AISEMI_KERNELS=scalar|avx2.
//
// Tables are row-major n*n arrays of uint32 element indices, so the value of
// (i op j) sits at table[i * n + j].

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

namespace aisemi::simd {

struct KernelSet {
  std::string_view name;

  // out[i] = table[a[i] * n + b[i]]; out may alias a or b.
  void (*gather_u32)(const std::uint32_t* table, std::uint32_t n,
                     const std::uint32_t* a, const std::uint32_t* b,
                     std::uint32_t* out, std::size_t count);

  // Byte-packed variant of gather_u32 (requires n <= 256).
  void (*gather_u8)(const std::uint32_t* table, std::uint32_t n,
                    const std::uint8_t* a, const std::uint8_t* b,
                    std::uint8_t* out, std::size_t count);

  // Index of the first i with a[i] != b[i], or count if none.
  std::size_t (*first_mismatch_u32)(const std::uint32_t* a,
                                    const std::uint32_t* b, std::size_t count);

  // True iff relation[a[i] * n + b[i]] != 0 for every i.
  bool (*all_related_u8)(const std::uint32_t* relation, std::uint32_t n,
                         const std::uint8_t* a, const std::uint8_t* b,
                         std::size_t count);
};

const KernelSet& scalar_kernels();

// nullptr when the binary or the CPU lacks AVX2.
const KernelSet* avx2_kernels();

const KernelSet& active_kernels();

// Every kernel set usable on this machine, scalar first.
std::vector<const KernelSet*> available_kernels();

// Selects the active set by name; returns false if unavailable.
bool select_kernels(std::string_view name);

}  // namespace aisemi::simd
