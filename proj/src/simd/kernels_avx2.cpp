// Compiled with -mavx2 -mpopcnt; only reached after a runtime CPU check.
#include <immintrin.h>

#include "eqdeg/simd.hpp"

namespace eqdeg::simd {
namespace {

bool is_subset(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    __m256i outside = _mm256_andnot_si256(vb, va);  // bits of a missing from b
    if (!_mm256_testz_si256(outside, outside)) return false;
  }
  for (; i < words; ++i)
    if (a[i] & ~b[i]) return false;
  return true;
}

std::size_t and_count(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
  std::size_t c = 0, i = 0;
  alignas(32) std::uint64_t lanes[4];
  for (; i + 4 <= words; i += 4) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), _mm256_and_si256(va, vb));
    c += _mm_popcnt_u64(lanes[0]) + _mm_popcnt_u64(lanes[1]) + _mm_popcnt_u64(lanes[2]) +
         _mm_popcnt_u64(lanes[3]);
  }
  for (; i < words; ++i) c += _mm_popcnt_u64(a[i] & b[i]);
  return c;
}

double masked_sum(const double* v, const std::uint64_t* mask, std::size_t n) {
  const __m256i bits = _mm256_setr_epi64x(1, 2, 4, 8);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    auto nib = static_cast<long long>((mask[i >> 6] >> (i & 63)) & 0xF);
    __m256i sel = _mm256_cmpeq_epi64(_mm256_and_si256(_mm256_set1_epi64x(nib), bits), bits);
    __m256d x = _mm256_and_pd(_mm256_loadu_pd(v + i), _mm256_castsi256_pd(sel));
    acc = _mm256_add_pd(acc, x);
  }
  alignas(32) double lane[4];
  _mm256_store_pd(lane, acc);
  for (; i < n; ++i) {
    bool on = (mask[i >> 6] >> (i & 63)) & 1u;
    lane[i & 3] += on ? v[i] : 0.0;
  }
  return (lane[0] + lane[1]) + (lane[2] + lane[3]);
}

}  // namespace

const Kernels& avx2_kernel_table() {
  static const Kernels k{Isa::Avx2, "avx2", is_subset, and_count, masked_sum};
  return k;
}

}  // namespace eqdeg::simd
