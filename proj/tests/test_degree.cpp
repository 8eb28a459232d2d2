#include <doctest.h>

#include "eqdeg/degree.hpp"
#include "eqdeg/symmetry.hpp"

using namespace eqdeg;

TEST_CASE("recurrence basic degrees equal the closed forms") {
  for (int m : {1, 2, 3, 4, 5, 6, 8, 12}) {
    auto g = direct_product(make_dihedral(m), make_sign_group());
    auto lat = SubgroupLattice::build(g);
    BurnsideRing ring(lat);
    auto sym = make_symmetry_group(make_trivial_group(), std::nullopt, m, Layout::GammaFirst);
    auto table = IrrepTable::build(sym);
    for (int i = 0; i <= dihedral_s_star(m); ++i) {
      if (!dihedral_index_valid(m, i)) continue;
      CAPTURE(m);
      CAPTURE(i);
      // the symmetry group for trivial Gamma is D_m x Z_2 with the same ids
      const auto& chi = table.get({i, 0, -1}).rep.character;
      const auto computed = basic_degree(chi, lat);
      CHECK(ring.render(computed) == ring.render(closed_form_basic_degree(m, i, lat)));
      CHECK(ring.multiply(computed, computed) == ring.unit());
    }
  }
}

TEST_CASE("basic degrees are involutions in the product groups") {
  auto pg = dihedral_permutation_group(3);
  for (auto [m, layout] : {std::pair{3, Layout::GammaFirst}, std::pair{4, Layout::DmFirst}}) {
    auto sym = make_symmetry_group(pg.group, pg.action, m, layout);
    auto lat = SubgroupLattice::build(sym.group);
    BurnsideRing ring(lat);
    auto table = IrrepTable::build(sym);
    DegreeEngine engine(ring, table);
    for (const auto& ir : table.all()) {
      if (ir.label == IrrepLabel{0, 0, 1}) continue;
      CAPTURE(ir.name);
      const auto d = engine.basic(ir.label);
      CHECK(ring.multiply(d, d) == ring.unit());
    }
  }
}

TEST_CASE("degree of a direct sum is the product") {
  auto pg = dihedral_permutation_group(3);
  auto sym = make_symmetry_group(pg.group, pg.action, 3, Layout::GammaFirst);
  auto lat = SubgroupLattice::build(sym.group);
  BurnsideRing ring(lat);
  auto table = IrrepTable::build(sym);
  DegreeEngine engine(ring, table);
  const auto& all = table.all();
  for (std::size_t a = 0; a < all.size(); a += 2)
    for (std::size_t b = 1; b < all.size(); b += 3) {
      std::vector<double> chi(sym.order());
      for (std::size_t g = 0; g < chi.size(); ++g)
        chi[g] = all[a].rep.character[g] + all[b].rep.character[g];
      CAPTURE(all[a].name);
      CAPTURE(all[b].name);
      CHECK(basic_degree(chi, lat) == ring.multiply(engine.basic(all[a].label), engine.basic(all[b].label)));
    }
}

TEST_CASE("nonlinear hook with caller-supplied Brouwer degrees") {
  auto lat = SubgroupLattice::build(direct_product(make_dihedral(3), make_sign_group()));
  BurnsideRing ring(lat);
  // degree 1 on every fixed subspace is the unit
  CHECK(degree_from_fixed_point_degrees(std::vector<long>(lat.size(), 1), lat) == ring.unit());
  std::vector<long> zero(lat.size(), 0);
  CHECK(degree_from_fixed_point_degrees(zero, lat).is_zero());
}
