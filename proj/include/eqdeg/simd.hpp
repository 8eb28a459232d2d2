#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

// Bitset and masked-reduction kernels used by the lattice and character code.
// Every variant must produce bit-identical results to the scalar one; the
// masked sum keeps four lane accumulators and reduces them as (0+1)+(2+3) in
// all variants so that floating-point results agree exactly.
namespace eqdeg::simd {

enum class Isa { Scalar, Avx2, Neon };

struct Kernels {
  Isa isa;
  const char* name;
  bool (*is_subset)(const std::uint64_t* a, const std::uint64_t* b, std::size_t words);
  std::size_t (*and_count)(const std::uint64_t* a, const std::uint64_t* b, std::size_t words);
  double (*masked_sum)(const double* values, const std::uint64_t* mask, std::size_t n);
};

const Kernels& scalar_kernels();
const Kernels* avx2_kernels();  // nullptr when not compiled in or unsupported by the CPU
const Kernels* neon_kernels();

// Best supported variant; EQDEG_SIMD=scalar forces the reference kernels.
const Kernels& active();
std::vector<const Kernels*> available();

}  // namespace eqdeg::simd
