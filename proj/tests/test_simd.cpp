#include <doctest.h>

#include <cstdlib>
#include <random>

#include "eqdeg/lattice.hpp"
#include "eqdeg/simd.hpp"

using namespace eqdeg;

TEST_CASE("simd variants agree with the scalar kernels") {
  const auto& ref = simd::scalar_kernels();
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> val(-3.0, 3.0);
  for (const auto* k : simd::available()) {
    CAPTURE(k->name);
    for (std::size_t words : {1, 2, 3, 5, 8, 13}) {
      for (int trial = 0; trial < 200; ++trial) {
        std::vector<std::uint64_t> a(words), b(words);
        for (std::size_t w = 0; w < words; ++w) {
          a[w] = rng();
          b[w] = rng();
          if (trial % 3 == 0) a[w] &= b[w];  // make subsets common
        }
        CHECK(k->is_subset(a.data(), b.data(), words) == ref.is_subset(a.data(), b.data(), words));
        CHECK(k->and_count(a.data(), b.data(), words) == ref.and_count(a.data(), b.data(), words));
        const std::size_t n = words * 64 - (trial % 64);
        std::vector<double> v(n);
        for (auto& x : v) x = val(rng);
        // bit-identical, not just close
        CHECK(k->masked_sum(v.data(), a.data(), n) == ref.masked_sum(v.data(), a.data(), n));
      }
    }
  }
}

TEST_CASE("scalar reference is the first available variant") {
  auto all = simd::available();
  REQUIRE_FALSE(all.empty());
  CHECK(all.front()->isa == simd::Isa::Scalar);
}
