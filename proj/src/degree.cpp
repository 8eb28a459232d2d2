#include "eqdeg/degree.hpp"

#include <numeric>

#include "eqdeg/error.hpp"

namespace eqdeg {

BurnsideElement degree_from_fixed_point_degrees(const std::vector<long>& brouwer,
                                                const SubgroupLattice& lat) {
  if (brouwer.size() != lat.size())
    throw Error(ErrorKind::InvalidParameter, "one Brouwer degree per subgroup class expected");
  std::vector<Integer> n(lat.size());
  for (std::size_t h = lat.size(); h-- > 0;) {
    Integer v = brouwer[h];
    for (std::size_t k = h + 1; k < lat.size(); ++k)
      if (n[k] != 0 && lat.leq(h, k))
        v -= n[k] * lat.n_count(h, k) * static_cast<long>(lat.cls(k).weyl_order);
    const auto w = static_cast<long>(lat.cls(h).weyl_order);
    if (v % w != 0)
      throw Error(ErrorKind::NumericConsistency, "inexact division in degree recurrence");
    n[h] = v / w;
  }
  BurnsideElement out;
  for (std::size_t h = 0; h < lat.size(); ++h) out.add(h, n[h]);
  return out;
}

BurnsideElement basic_degree(const std::vector<double>& character, const SubgroupLattice& lat) {
  const auto dims = fixed_point_dims(character, lat);
  std::vector<long> d(dims.size());
  for (std::size_t h = 0; h < dims.size(); ++h) d[h] = dims[h] % 2 ? -1 : 1;
  return degree_from_fixed_point_degrees(d, lat);
}

BurnsideElement closed_form_basic_degree(int m, int i, const SubgroupLattice& lat) {
  if (!dihedral_index_valid(m, i))
    throw Error(ErrorKind::InvalidParameter, "invalid irrep index " + std::to_string(i) +
                                                 " for m=" + std::to_string(m));
  const int s = dihedral_s(m);
  auto d = [](int n) { return "D_" + std::to_string(n); };
  auto z = [](int n) { return "Z_" + std::to_string(n); };
  BurnsideElement out = BurnsideElement::generator(lat.top());
  auto sub = [&](const std::string& name, long c) { out.add(lat.find_required(name), c); };
  if (i == 0) {
    sub(d(m), -1);
  } else if (i == s) {
    sub(d(m) + "^z", -1);
  } else if (i == s + 1) {
    sub(d(m) + "^d", -1);
  } else if (i == s + 2) {
    sub(d(m) + "^hd", -1);
  } else {
    const int h = std::gcd(m, i);
    const int q = m / h;
    if (q % 2 == 1) {
      sub(d(h), -1);
      sub(d(h) + "^z", -1);
      sub(z(h), 1);
    } else if (q % 4 == 2) {
      sub(d(2 * h) + "^d", -1);
      sub(d(2 * h) + "^hd", -1);
      sub(z(2 * h) + "^d", 1);
    } else {
      sub(d(2 * h) + "^d", -1);
      sub("t" + d(2 * h) + "^d", -1);
      sub(z(2 * h) + "^d", 1);
    }
  }
  return out;
}

BurnsideElement DegreeEngine::basic(const IrrepLabel& label) const {
  {
    std::lock_guard lock(mu_);
    auto it = memo_.find(label);
    if (it != memo_.end()) return it->second;
  }
  auto value = basic_degree(irreps_->get(label).rep.character, ring_->lattice());
  std::lock_guard lock(mu_);
  return memo_.emplace(label, std::move(value)).first->second;
}

BurnsideElement DegreeEngine::linear_degree(const std::map<IrrepLabel, unsigned long>& mult) const {
  BurnsideElement out = ring_->unit();
  for (const auto& [label, k] : mult)
    if (k) out = ring_->multiply(out, ring_->power(basic(label), k));
  return out;
}

}  // namespace eqdeg
