#pragma once

#include <map>
#include <mutex>

#include "eqdeg/burnside.hpp"
#include "eqdeg/rep.hpp"

namespace eqdeg {

// n_H = (d_H - sum_{(K)>(H)} n_K n(H,K) |W(K)|) / |W(H)|, top-down. d_H is the
// Brouwer degree of the restriction to the H-fixed subspace, supplied per class.
BurnsideElement degree_from_fixed_point_degrees(const std::vector<long>& brouwer,
                                                const SubgroupLattice& lat);

// deg_V = G-deg(-id, B(V)); d_H = (-1)^{dim V^H}.
BurnsideElement basic_degree(const std::vector<double>& character, const SubgroupLattice& lat);

// Closed forms for V_i^- over D_m x Z_2; lat must be the lattice of
// direct_product(make_dihedral(m), make_sign_group()). Test oracle only.
BurnsideElement closed_form_basic_degree(int m, int i, const SubgroupLattice& lat);

class DegreeEngine {
 public:
  DegreeEngine(const BurnsideRing& ring, const IrrepTable& irreps) : ring_(&ring), irreps_(&irreps) {}

  const BurnsideRing& ring() const { return *ring_; }
  const IrrepTable& irreps() const { return *irreps_; }
  BurnsideElement basic(const IrrepLabel& label) const;
  // Product of basic degrees raised to the given multiplicities.
  BurnsideElement linear_degree(const std::map<IrrepLabel, unsigned long>& mult) const;

 private:
  const BurnsideRing* ring_;
  const IrrepTable* irreps_;
  mutable std::mutex mu_;
  mutable std::map<IrrepLabel, BurnsideElement> memo_;
};

}  // namespace eqdeg
