// Built only for aarch64 targets.
#include <arm_neon.h>

#include "eqdeg/simd.hpp"

namespace eqdeg::simd {
namespace {

bool is_subset(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
  std::size_t i = 0;
  for (; i + 2 <= words; i += 2) {
    uint64x2_t x = vbicq_u64(vld1q_u64(a + i), vld1q_u64(b + i));
    if (vgetq_lane_u64(x, 0) | vgetq_lane_u64(x, 1)) return false;
  }
  for (; i < words; ++i)
    if (a[i] & ~b[i]) return false;
  return true;
}

std::size_t and_count(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
  std::size_t c = 0, i = 0;
  for (; i + 2 <= words; i += 2) {
    uint8x16_t x = vreinterpretq_u8_u64(vandq_u64(vld1q_u64(a + i), vld1q_u64(b + i)));
    c += vaddvq_u8(vcntq_u8(x));
  }
  for (; i < words; ++i) c += static_cast<std::size_t>(__builtin_popcountll(a[i] & b[i]));
  return c;
}

// Two 2-lane accumulators hold lanes {0,1} and {2,3} of the scalar layout.
double masked_sum(const double* v, const std::uint64_t* mask, std::size_t n) {
  float64x2_t lo = vdupq_n_f64(0.0), hi = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    auto nib = (mask[i >> 6] >> (i & 63)) & 0xF;
    uint64x2_t m01 = {(nib & 1) ? ~0ull : 0ull, (nib & 2) ? ~0ull : 0ull};
    uint64x2_t m23 = {(nib & 4) ? ~0ull : 0ull, (nib & 8) ? ~0ull : 0ull};
    lo = vaddq_f64(lo, vreinterpretq_f64_u64(vandq_u64(vreinterpretq_u64_f64(vld1q_f64(v + i)), m01)));
    hi = vaddq_f64(hi, vreinterpretq_f64_u64(vandq_u64(vreinterpretq_u64_f64(vld1q_f64(v + i + 2)), m23)));
  }
  double lane[4] = {vgetq_lane_f64(lo, 0), vgetq_lane_f64(lo, 1), vgetq_lane_f64(hi, 0),
                    vgetq_lane_f64(hi, 1)};
  for (; i < n; ++i) {
    bool on = (mask[i >> 6] >> (i & 63)) & 1u;
    lane[i & 3] += on ? v[i] : 0.0;
  }
  return (lane[0] + lane[1]) + (lane[2] + lane[3]);
}

}  // namespace

const Kernels& neon_kernel_table() {
  static const Kernels k{Isa::Neon, "neon", is_subset, and_count, masked_sum};
  return k;
}

}  // namespace eqdeg::simd
