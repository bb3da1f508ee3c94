#include "semireg/simd/kernels.hpp"

namespace semireg::simd {
namespace {

void compose_scalar(const Point* a, const Point* b, Point* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = b[a[i]];
}

std::size_t count_fixed_scalar(const Point* a, std::size_t n) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < n; ++i) c += (a[i] == i);
  return c;
}

std::size_t first_moved_scalar(const Point* a, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    if (a[i] != i) return i;
  return n;
}

bool equal_scalar(const Point* a, const Point* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    if (a[i] != b[i]) return false;
  return true;
}

}  // namespace

const KernelTable& scalar_kernels() {
  static const KernelTable table{"scalar", compose_scalar, count_fixed_scalar,
                                 first_moved_scalar, equal_scalar};
  return table;
}

void invert(const Point* a, Point* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[a[i]] = static_cast<Point>(i);
}

}  // namespace semireg::simd
