#pragma once
// Inner loops of the permutation engine.
//
// Every kernel has a portable scalar reference and, where the instruction set
// helps, an AVX2 variant. The variant is picked once at startup from CPUID;
// SEMIREG_SIMD=scalar in the environment forces the reference path.

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace semireg::simd {

using Point = std::uint32_t;

struct KernelTable {
  std::string_view name;
  /// out[i] = b[a[i]] (apply a, then b).
  void (*compose)(const Point* a, const Point* b, Point* out, std::size_t n);
  /// Number of i with a[i] == i.
  std::size_t (*count_fixed)(const Point* a, std::size_t n);
  /// Smallest i with a[i] != i, or n when a is the identity.
  std::size_t (*first_moved)(const Point* a, std::size_t n);
  bool (*equal)(const Point* a, const Point* b, std::size_t n);
};

const KernelTable& scalar_kernels();
/// nullptr when the binary was built without AVX2 support or the CPU lacks it.
const KernelTable* avx2_kernels();

/// The table selected for this process.
const KernelTable& active();

/// out[a[i]] = i. Scatter, so there is no vector variant.
void invert(const Point* a, Point* out, std::size_t n);

}  // namespace semireg::simd
