#include <doctest.h>

#include <algorithm>
#include <set>

#include "eqdeg/config.hpp"
#include "eqdeg/rep.hpp"
#include "eqdeg/symmetry.hpp"

using namespace eqdeg;

namespace {

SymmetryGroup d3_d3(Layout layout = Layout::GammaFirst) {
  auto pg = dihedral_permutation_group(3);
  return make_symmetry_group(pg.group, pg.action, 3, layout);
}

bool homomorphism(const FiniteGroup& g, const Representation& r) {
  for (ElementId a = 0; a < g.order(); ++a)
    for (ElementId b = 0; b < g.order(); ++b)
      if ((r.matrices[a] * r.matrices[b] - r.matrices[g.mul(a, b)]).cwiseAbs().maxCoeff() > 1e-9)
        return false;
  return true;
}

}  // namespace

TEST_CASE("dihedral irreducibles") {
  for (int n : {1, 2, 3, 4, 5, 6, 8, 12}) {
    CAPTURE(n);
    auto g = make_dihedral(n);
    const auto irr = dihedral_irreps(n);
    int sum_sq = 0;
    for (std::size_t a = 0; a < irr.size(); ++a) {
      CHECK(homomorphism(*g, irr[a]));
      sum_sq += irr[a].dim * irr[a].dim;
      for (std::size_t b = 0; b < irr.size(); ++b)
        CHECK(inner_product(irr[a].character, irr[b].character) == doctest::Approx(a == b ? 1.0 : 0.0));
    }
    CHECK(sum_sq == 2 * n);
  }
}

TEST_CASE("numeric decomposition matches the dihedral closed forms") {
  for (int n : {3, 4, 5, 6}) {
    CAPTURE(n);
    auto g = make_dihedral(n);
    auto numeric = numeric_irreps(*g, 3);
    auto exact = dihedral_irreps(n);
    REQUIRE(numeric.size() == exact.size());
    for (const auto& e : exact) {
      const bool found = std::any_of(numeric.begin(), numeric.end(), [&](const Representation& r) {
        return std::abs(inner_product(r.character, e.character) - 1.0) < 1e-9;
      });
      CHECK(found);
    }
    for (const auto& r : numeric) CHECK(homomorphism(*g, r));
  }
}

TEST_CASE("numeric decomposition of a non-dihedral Gamma") {
  // S_4 on four points: 5 irreducibles, dims 1,1,2,3,3
  auto s4 = make_permutation_group(4, {{2, 3, 4, 1}, {2, 1, 3, 4}});
  auto irr = numeric_irreps(*s4.group, 5);
  std::multiset<int> dims;
  for (const auto& r : irr) dims.insert(r.dim);
  CHECK(dims == std::multiset<int>{1, 1, 2, 3, 3});
}

TEST_CASE("irreducible counts of the product groups") {
  auto sym3 = d3_d3();
  CHECK(IrrepTable::build(sym3).size() == 18);
  auto pg = dihedral_permutation_group(3);
  auto sym4 = make_symmetry_group(pg.group, pg.action, 4, Layout::DmFirst);
  auto t4 = IrrepTable::build(sym4);
  CHECK(t4.size() == 30);
  for (const auto& a : t4.all()) {
    CHECK(homomorphism(*sym4.group, a.rep));
    CHECK(inner_product(a.rep.character, a.rep.character) == doctest::Approx(1.0));
  }
}

TEST_CASE("orbit types agree with the isotropy oracle on every irreducible of D3xD3xZ2") {
  auto sym = d3_d3();
  auto lat = SubgroupLattice::build(sym.group);
  auto table = IrrepTable::build(sym);
  std::vector<double> sum(sym.order(), 0.0);
  for (const auto& ir : table.all()) {
    CAPTURE(ir.name);
    auto expected = orbit_types(ir.rep.character, lat);
    auto sampled = isotropy_oracle(ir.rep, lat, 400, 17);
    std::sort(sampled.begin(), sampled.end());
    CHECK(sampled == expected);
  }
  // the E-character of the worked example: l = 0, 1 with every D_3 index
  std::vector<Eigen::MatrixXd> mats(sym.order());
  for (const auto& ir : table.all()) {
    if (ir.label.sign > 0 || ir.label.l == 2) continue;
    for (ElementId g = 0; g < sym.order(); ++g) {
      const auto& b = ir.rep.matrices[g];
      Eigen::MatrixXd big = Eigen::MatrixXd::Zero(mats[g].rows() + b.rows(), mats[g].cols() + b.cols());
      big.topLeftCorner(mats[g].rows(), mats[g].cols()) = mats[g];
      big.bottomRightCorner(b.rows(), b.cols()) = b;
      mats[g] = big;
    }
  }
  auto rep = from_matrices(mats);
  auto sampled = isotropy_oracle(rep, lat, 600, 23);
  std::sort(sampled.begin(), sampled.end());
  CHECK(sampled == orbit_types(rep.character, lat));
}

TEST_CASE("fold of frequency j to D_m") {
  CHECK(fold_frequency(0, 3).components == std::vector<std::pair<int, int>>{{0, 1}});
  CHECK(fold_frequency(3, 3).components == std::vector<std::pair<int, int>>{{0, 1}, {2, 1}});
  CHECK(fold_frequency(4, 3).components == std::vector<std::pair<int, int>>{{1, 1}});
  CHECK(fold_frequency(2, 4).components == std::vector<std::pair<int, int>>{{3, 1}, {4, 1}});
  // characters: restriction of the O(2) frequency-j representation
  for (int m : {3, 4, 5, 6, 8}) {
    auto irr = dihedral_irreps(m);
    std::vector<int> idx;
    for (int i = 0; i <= dihedral_s_star(m); ++i)
      if (dihedral_index_valid(m, i)) idx.push_back(i);
    for (int j = 0; j <= 3 * m; ++j) {
      CAPTURE(m);
      CAPTURE(j);
      std::vector<double> chi(2 * m, 0.0);
      for (const auto& [i, c] : fold_frequency(j, m).components) {
        const auto pos = std::find(idx.begin(), idx.end(), i) - idx.begin();
        for (int g = 0; g < 2 * m; ++g) chi[g] += c * irr[pos].character[g];
      }
      for (int a = 0; a < m; ++a) {
        // rotation gamma^a acts on frequency j by angle 2 pi a j / m; reflections
        // have trace 0 except at j = 0, where O(2) acts trivially on R
        const double rot = j == 0 ? 1.0 : 2.0 * std::cos(2.0 * M_PI * a * j / m);
        CHECK(chi[a] == doctest::Approx(rot).epsilon(1e-9));
        CHECK(chi[a + m] == doctest::Approx(j == 0 ? 1.0 : 0.0).epsilon(1e-9));
      }
    }
  }
}
