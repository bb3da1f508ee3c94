// Compiled with -mavx2; only reached after a CPUID check in dispatch.cpp.
#include <immintrin.h>

#include "semireg/simd/kernels.hpp"

namespace semireg::simd {
namespace {

void compose_avx2(const Point* a, const Point* b, Point* out, std::size_t n) {
  std::size_t i = 0;
  const int* table = reinterpret_cast<const int*>(b);
  for (; i + 8 <= n; i += 8) {
    __m256i idx = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i v = _mm256_i32gather_epi32(table, idx, 4);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), v);
  }
  for (; i < n; ++i) out[i] = b[a[i]];
}

inline __m256i lane_iota(std::size_t base) {
  const __m256i step = _mm256_setr_epi32(0, 1, 2, 3, 4, 5, 6, 7);
  return _mm256_add_epi32(_mm256_set1_epi32(static_cast<int>(base)), step);
}

std::size_t count_fixed_avx2(const Point* a, std::size_t n) {
  std::size_t i = 0, c = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i eq = _mm256_cmpeq_epi32(v, lane_iota(i));
    c += static_cast<std::size_t>(
        __builtin_popcount(_mm256_movemask_ps(_mm256_castsi256_ps(eq))));
  }
  for (; i < n; ++i) c += (a[i] == i);
  return c;
}

std::size_t first_moved_avx2(const Point* a, std::size_t n) {
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i eq = _mm256_cmpeq_epi32(v, lane_iota(i));
    int mask = _mm256_movemask_ps(_mm256_castsi256_ps(eq));
    if (mask != 0xff) return i + static_cast<std::size_t>(__builtin_ctz(~mask & 0xff));
  }
  for (; i < n; ++i)
    if (a[i] != i) return i;
  return n;
}

bool equal_avx2(const Point* a, const Point* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i y = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    __m256i ne = _mm256_xor_si256(x, y);
    if (!_mm256_testz_si256(ne, ne)) return false;
  }
  for (; i < n; ++i)
    if (a[i] != b[i]) return false;
  return true;
}

}  // namespace

const KernelTable& avx2_table() {
  static const KernelTable table{"avx2", compose_avx2, count_fixed_avx2,
                                 first_moved_avx2, equal_avx2};
  return table;
}

}  // namespace semireg::simd
