#include <bit>

#include "eqdeg/simd.hpp"

namespace eqdeg::simd {
namespace {

bool is_subset(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
  for (std::size_t i = 0; i < words; ++i)
    if (a[i] & ~b[i]) return false;
  return true;
}

std::size_t and_count(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < words; ++i) c += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
  return c;
}

double masked_sum(const double* v, const std::uint64_t* mask, std::size_t n) {
  double acc[4] = {0.0, 0.0, 0.0, 0.0};
  for (std::size_t i = 0; i < n; ++i) {
    bool on = (mask[i >> 6] >> (i & 63)) & 1u;
    acc[i & 3] += on ? v[i] : 0.0;
  }
  return (acc[0] + acc[1]) + (acc[2] + acc[3]);
}

}  // namespace

const Kernels& scalar_kernels() {
  static const Kernels k{Isa::Scalar, "scalar", is_subset, and_count, masked_sum};
  return k;
}

}  // namespace eqdeg::simd
