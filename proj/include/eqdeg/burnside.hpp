#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "eqdeg/lattice.hpp"

namespace eqdeg {

using Integer = boost::multiprecision::cpp_int;

// Sparse integer combination of subgroup classes; zero entries are never stored.
class BurnsideElement {
 public:
  BurnsideElement() = default;
  static BurnsideElement generator(std::size_t id, Integer coeff = 1);

  Integer coefficient(std::size_t id) const;
  void add(std::size_t id, const Integer& v);
  const std::map<std::size_t, Integer>& terms() const { return c_; }
  bool is_zero() const { return c_.empty(); }

  BurnsideElement& operator+=(const BurnsideElement& o);
  BurnsideElement& operator-=(const BurnsideElement& o);
  BurnsideElement operator-() const;
  friend BurnsideElement operator+(BurnsideElement a, const BurnsideElement& b) { return a += b; }
  friend BurnsideElement operator-(BurnsideElement a, const BurnsideElement& b) { return a -= b; }
  friend BurnsideElement operator*(const Integer& s, const BurnsideElement& a);
  bool operator==(const BurnsideElement& o) const { return c_ == o.c_; }

 private:
  std::map<std::size_t, Integer> c_;
};

class BurnsideRing {
 public:
  explicit BurnsideRing(const SubgroupLattice& lattice) : lat_(&lattice) {}

  const SubgroupLattice& lattice() const { return *lat_; }
  BurnsideElement unit() const { return BurnsideElement::generator(lat_->top()); }
  BurnsideElement generator_product(std::size_t h, std::size_t k) const;
  BurnsideElement multiply(const BurnsideElement& a, const BurnsideElement& b) const;
  BurnsideElement power(const BurnsideElement& a, unsigned long n) const;

  // "-(D_3xD_3) + 2(Z_1xZ_1)" in canonical class order; "0" for zero.
  std::string render(const BurnsideElement& a) const;
  // Builds an element from (name, coefficient) pairs; unknown names throw.
  BurnsideElement from_names(const std::vector<std::pair<std::string, long>>& terms) const;

 private:
  using Sparse = std::vector<std::pair<std::size_t, long long>>;
  Sparse compute_product(std::size_t h, std::size_t k) const;

  const SubgroupLattice* lat_;
  mutable std::shared_mutex mu_;
  mutable std::unordered_map<std::uint64_t, Sparse> memo_;
};

// Generator product by counting orbits on G/H x G/K directly.
BurnsideElement multiply_oracle(const SubgroupLattice& lattice, std::size_t h, std::size_t k);

}  // namespace eqdeg
