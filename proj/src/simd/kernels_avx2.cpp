// Compiled with -mavx2; only reached after a CPUID check in dispatch.cpp.

#include <immintrin.h>

#include "aisemi/simd/kernels.hpp"

namespace aisemi::simd {
namespace {

inline __m256i table_index(__m256i a, __m256i b, __m256i n) {
  return _mm256_add_epi32(_mm256_mullo_epi32(a, n), b);
}

void gather_u32(const std::uint32_t* table, std::uint32_t n,
                const std::uint32_t* a, const std::uint32_t* b,
                std::uint32_t* out, std::size_t count) {
  const auto* base = reinterpret_cast<const int*>(table);
  const __m256i vn = _mm256_set1_epi32(static_cast<int>(n));
  std::size_t i = 0;
  for (; i + 8 <= count; i += 8) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    __m256i v = _mm256_i32gather_epi32(base, table_index(va, vb, vn), 4);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), v);
  }
  for (; i < count; ++i) {
    out[i] = table[a[i] * n + b[i]];
  }
}

inline __m256i gather8_from_bytes(const int* base, __m256i vn,
                                  const std::uint8_t* a,
                                  const std::uint8_t* b) {
  __m256i va = _mm256_cvtepu8_epi32(
      _mm_loadl_epi64(reinterpret_cast<const __m128i*>(a)));
  __m256i vb = _mm256_cvtepu8_epi32(
      _mm_loadl_epi64(reinterpret_cast<const __m128i*>(b)));
  return _mm256_i32gather_epi32(base, table_index(va, vb, vn), 4);
}

void gather_u8(const std::uint32_t* table, std::uint32_t n,
               const std::uint8_t* a, const std::uint8_t* b, std::uint8_t* out,
               std::size_t count) {
  const auto* base = reinterpret_cast<const int*>(table);
  const __m256i vn = _mm256_set1_epi32(static_cast<int>(n));
  std::size_t i = 0;
  for (; i + 16 <= count; i += 16) {
    __m256i lo = gather8_from_bytes(base, vn, a + i, b + i);
    __m256i hi = gather8_from_bytes(base, vn, a + i + 8, b + i + 8);
    // packus works per 128-bit lane; the permutes restore element order.
    __m256i words = _mm256_permute4x64_epi64(_mm256_packus_epi32(lo, hi),
                                             _MM_SHUFFLE(3, 1, 2, 0));
    __m256i bytes = _mm256_permute4x64_epi64(
        _mm256_packus_epi16(words, words), _MM_SHUFFLE(3, 1, 2, 0));
    _mm_storeu_si128(reinterpret_cast<__m128i*>(out + i),
                     _mm256_castsi256_si128(bytes));
  }
  for (; i < count; ++i) {
    out[i] = static_cast<std::uint8_t>(table[a[i] * n + b[i]]);
  }
}

std::size_t first_mismatch_u32(const std::uint32_t* a, const std::uint32_t* b,
                               std::size_t count) {
  std::size_t i = 0;
  for (; i + 8 <= count; i += 8) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    int equal = _mm256_movemask_ps(
        _mm256_castsi256_ps(_mm256_cmpeq_epi32(va, vb)));
    if (equal != 0xFF) {
      return i + static_cast<std::size_t>(__builtin_ctz(~equal & 0xFF));
    }
  }
  for (; i < count; ++i) {
    if (a[i] != b[i]) {
      return i;
    }
  }
  return count;
}

bool all_related_u8(const std::uint32_t* relation, std::uint32_t n,
                    const std::uint8_t* a, const std::uint8_t* b,
                    std::size_t count) {
  const auto* base = reinterpret_cast<const int*>(relation);
  const __m256i vn = _mm256_set1_epi32(static_cast<int>(n));
  const __m256i zero = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 8 <= count; i += 8) {
    __m256i v = gather8_from_bytes(base, vn, a + i, b + i);
    if (!_mm256_testz_si256(_mm256_cmpeq_epi32(v, zero),
                            _mm256_set1_epi32(-1))) {
      return false;
    }
  }
  for (; i < count; ++i) {
    if (relation[a[i] * n + b[i]] == 0) {
      return false;
    }
  }
  return true;
}

}  // namespace

namespace detail {
const KernelSet& avx2_kernel_set() {
  static const KernelSet set{"avx2", gather_u32, gather_u8, first_mismatch_u32,
                             all_related_u8};
  return set;
}
}  // namespace detail

}  // namespace aisemi::simd
