#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

#include "eqdeg/lattice.hpp"
#include "eqdeg/symmetry.hpp"

namespace eqdeg {

// Orthogonal representation given by one matrix per group element.
struct Representation {
  int dim = 0;
  std::vector<Eigen::MatrixXd> matrices;
  std::vector<double> character;
};

Representation from_matrices(std::vector<Eigen::MatrixXd> matrices);

// <chi_a, chi_b> = (1/|G|) sum_g chi_a(g) chi_b(g); characters are real.
double inner_product(const std::vector<double>& a, const std::vector<double>& b);

// Index set of D_n irreducibles: 0, the 2-dim 1..ceil(n/2)-1, s, and for even
// n also s+1 and s+2, with s = floor((n+1)/2).
int dihedral_s(int n);
int dihedral_s_star(int n);  // largest index: s or s+2
bool dihedral_index_valid(int n, int i);
int dihedral_irrep_dim(int n, int i);

// Irreducible i of D_n over make_dihedral(n) ids.
Representation dihedral_irrep(int n, int i);
std::vector<Representation> dihedral_irreps(int n);

// Real irreducibles of an arbitrary small group from the eigenspaces of a
// random symmetric element of the commutant of its regular representation.
std::vector<Representation> numeric_irreps(const FiniteGroup& g, std::uint64_t seed = 1);

// Irreducibles of Gamma: dihedral/cyclic frames use the closed forms,
// anything else goes through numeric_irreps. Index 0 is always trivial.
std::vector<Representation> gamma_irreps(const FiniteGroup& gamma, std::uint64_t seed = 1);

struct IrrepLabel {
  int i = 0;
  int l = 0;
  int sign = -1;  // +1 or -1
  bool operator==(const IrrepLabel&) const = default;
  auto operator<=>(const IrrepLabel&) const = default;
};

struct IrreducibleRep {
  IrrepLabel label;
  std::string name;  // V_{i,l}^- (V_i^- when Gamma is trivial)
  Representation rep;
  double norm = 1.0;  // <chi,chi>; 2 or 4 for complex/quaternionic type
};

class IrrepTable {
 public:
  static IrrepTable build(const SymmetryGroup& g, std::uint64_t seed = 1);

  const SymmetryGroup& symmetry() const { return *sym_; }
  const std::vector<IrreducibleRep>& all() const { return irreps_; }
  const IrreducibleRep& get(const IrrepLabel& label) const;
  const std::vector<Representation>& gamma() const { return gamma_; }
  std::size_t size() const { return irreps_.size(); }
  std::string name(const IrrepLabel& label) const;

 private:
  const SymmetryGroup* sym_ = nullptr;
  std::vector<Representation> gamma_;
  std::vector<IrreducibleRep> irreps_;
};

// round((1/|H|) sum_{h in H} chi(h)); throws when not within 1e-6 of an integer.
int fixed_point_dim(const std::vector<double>& character, const Subgroup& h);
std::vector<int> fixed_point_dims(const std::vector<double>& character, const SubgroupLattice& lat);

// (H) is an orbit type iff dim V^H exceeds dim V^K for every class (K) > (H).
std::vector<std::size_t> orbit_types(const std::vector<double>& character,
                                     const SubgroupLattice& lat);
// Maximal orbit types of V minus the origin.
std::vector<std::size_t> maximal_orbit_types(const std::vector<double>& character,
                                             const SubgroupLattice& lat);

// Isotropy classes seen at random vectors of V and of each V^H. The zero
// vector contributes (G), matching orbit_types.
std::vector<std::size_t> isotropy_oracle(const Representation& rep, const SubgroupLattice& lat,
                                         int trials, std::uint64_t seed);

struct FoldResult {
  std::vector<std::pair<int, int>> components;  // (D_m index i, count)
};

// Restriction of the O(2) frequency-j representation to D_m.
FoldResult fold_frequency(int j, int m);

}  // namespace eqdeg
