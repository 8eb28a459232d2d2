#include "eqdeg/rep.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <set>
#include <unsupported/Eigen/KroneckerProduct>

#include "eqdeg/error.hpp"
#include "eqdeg/simd.hpp"

namespace eqdeg {

Representation from_matrices(std::vector<Eigen::MatrixXd> matrices) {
  Representation r;
  r.dim = matrices.empty() ? 0 : static_cast<int>(matrices.front().rows());
  r.character.reserve(matrices.size());
  for (const auto& mat : matrices) r.character.push_back(mat.trace());
  r.matrices = std::move(matrices);
  return r;
}

double inner_product(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s / static_cast<double>(a.size());
}

int dihedral_s(int n) { return (n + 1) / 2; }
int dihedral_s_star(int n) { return n % 2 == 0 ? dihedral_s(n) + 2 : dihedral_s(n); }

bool dihedral_index_valid(int n, int i) {
  if (i < 0 || i > dihedral_s_star(n)) return false;
  return i == 0 || i >= dihedral_s(n) || 2 * i < n;
}

int dihedral_irrep_dim(int n, int i) {
  if (!dihedral_index_valid(n, i))
    throw Error(ErrorKind::InvalidParameter, "no D_" + std::to_string(n) + " irrep with index " +
                                                 std::to_string(i));
  return (i == 0 || i >= dihedral_s(n)) ? 1 : 2;
}

Representation dihedral_irrep(int n, int i) {
  const int dim = dihedral_irrep_dim(n, i);
  const int s = dihedral_s(n);
  std::vector<Eigen::MatrixXd> mats;
  for (int x = 0; x < 2 * n; ++x) {
    const int a = x % n, b = x / n;
    Eigen::MatrixXd mat(dim, dim);
    if (dim == 2) {
      const double t = 2.0 * std::numbers::pi * i * a / n;
      Eigen::Matrix2d rot;
      rot << std::cos(t), -std::sin(t), std::sin(t), std::cos(t);
      Eigen::Matrix2d flip = Eigen::Matrix2d::Identity();
      if (b) flip(1, 1) = -1;
      mat = rot * flip;
    } else {
      int g = 1, k = 1;  // images of gamma and kappa
      if (i == s) k = -1;
      if (i == s + 1) g = -1;
      if (i == s + 2) g = k = -1;
      mat(0, 0) = (a % 2 && g < 0 ? -1.0 : 1.0) * (b && k < 0 ? -1.0 : 1.0);
    }
    mats.push_back(std::move(mat));
  }
  return from_matrices(std::move(mats));
}

std::vector<Representation> dihedral_irreps(int n) {
  std::vector<Representation> out;
  for (int i = 0; i <= dihedral_s_star(n); ++i)
    if (dihedral_index_valid(n, i)) out.push_back(dihedral_irrep(n, i));
  return out;
}

namespace {

std::vector<Representation> cyclic_irreps(const DihedralFrame& f) {
  const int n = f.n;
  std::vector<Representation> out;
  for (int i = 0; 2 * i <= n; ++i) {
    const bool two = i > 0 && 2 * i < n;
    std::vector<Eigen::MatrixXd> mats;
    for (std::size_t x = 0; x < f.rot.size(); ++x) {
      const double t = 2.0 * std::numbers::pi * i * f.rot[x] / n;
      Eigen::MatrixXd mat(two ? 2 : 1, two ? 2 : 1);
      if (two) mat << std::cos(t), -std::sin(t), std::sin(t), std::cos(t);
      else mat(0, 0) = std::cos(t);  // exactly +-1 up to rounding
      if (!two) mat(0, 0) = std::round(mat(0, 0));
      mats.push_back(std::move(mat));
    }
    out.push_back(from_matrices(std::move(mats)));
  }
  return out;
}

std::vector<Representation> framed_dihedral_irreps(const DihedralFrame& f) {
  std::vector<Representation> out;
  for (const auto& base : dihedral_irreps(f.n)) {
    std::vector<Eigen::MatrixXd> mats;
    for (std::size_t x = 0; x < f.rot.size(); ++x)
      mats.push_back(base.matrices[f.rot[x] + f.n * f.refl[x]]);
    out.push_back(from_matrices(std::move(mats)));
  }
  return out;
}

}  // namespace

std::vector<Representation> numeric_irreps(const FiniteGroup& g, std::uint64_t seed) {
  const int n = static_cast<int>(g.order());
  std::vector<Eigen::MatrixXd> reg(n, Eigen::MatrixXd::Zero(n, n));
  for (int x = 0; x < n; ++x)
    for (int h = 0; h < n; ++h) reg[x](static_cast<int>(g.mul(x, h)), h) = 1.0;
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  Eigen::MatrixXd x(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c <= r; ++c) x(r, c) = x(c, r) = normal(rng);
  Eigen::MatrixXd avg = Eigen::MatrixXd::Zero(n, n);
  for (int e = 0; e < n; ++e) avg += reg[e] * x * reg[e].transpose();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(avg);
  const auto& vals = es.eigenvalues();
  const double scale = std::max(1.0, vals.cwiseAbs().maxCoeff());
  std::vector<Representation> found;
  for (int start = 0; start < n;) {
    int end = start + 1;
    while (end < n && vals(end) - vals(end - 1) < 1e-8 * scale) ++end;
    Eigen::MatrixXd q = es.eigenvectors().middleCols(start, end - start);
    std::vector<Eigen::MatrixXd> mats;
    for (int e = 0; e < n; ++e) mats.push_back(q.transpose() * reg[e] * q);
    auto rep = from_matrices(std::move(mats));
    bool dup = std::any_of(found.begin(), found.end(), [&](const Representation& o) {
      if (o.dim != rep.dim) return false;
      for (int e = 0; e < n; ++e)
        if (std::abs(o.character[e] - rep.character[e]) > 1e-6) return false;
      return true;
    });
    if (!dup) found.push_back(std::move(rep));
    start = end;
  }
  double total = 0;
  for (const auto& r : found) {
    const double norm = inner_product(r.character, r.character);
    if (std::abs(norm - std::round(norm)) > 1e-6 || std::round(norm) < 1)
      throw Error(ErrorKind::NumericConsistency, "numeric irrep has non-integral norm");
    total += r.dim * r.dim / std::round(norm);
  }
  if (std::abs(total - n) > 1e-6)
    throw Error(ErrorKind::UnsupportedGroup, "numeric irreducible decomposition incomplete");
  auto key = [](const Representation& r) {
    std::vector<long long> k{r.dim};
    for (double c : r.character) k.push_back(-std::llround(c * 1e6));
    return k;
  };
  std::sort(found.begin(), found.end(),
            [&](const Representation& a, const Representation& b) { return key(a) < key(b); });
  return found;
}

std::vector<Representation> gamma_irreps(const FiniteGroup& gamma, std::uint64_t seed) {
  const auto& frame = gamma.structure().frame;
  if (frame) return frame->cyclic ? cyclic_irreps(*frame) : framed_dihedral_irreps(*frame);
  return numeric_irreps(gamma, seed);
}

IrrepTable IrrepTable::build(const SymmetryGroup& g, std::uint64_t seed) {
  IrrepTable t;
  t.sym_ = &g;
  t.gamma_ = gamma_irreps(*g.gamma, seed);
  const auto dm = dihedral_irreps(g.m);
  std::vector<int> dm_index;
  for (int i = 0; i <= dihedral_s_star(g.m); ++i)
    if (dihedral_index_valid(g.m, i)) dm_index.push_back(i);
  for (int sign : {1, -1})
    for (std::size_t l = 0; l < t.gamma_.size(); ++l)
      for (std::size_t a = 0; a < dm.size(); ++a) {
        IrreducibleRep ir;
        ir.label = {dm_index[a], static_cast<int>(l), sign};
        std::vector<Eigen::MatrixXd> mats;
        for (const auto& p : g.parts) {
          Eigen::MatrixXd k = Eigen::kroneckerProduct(t.gamma_[l].matrices[p.gamma],
                                                      dm[a].matrices[p.dm]);
          if (sign < 0 && p.sign == 1) k = -k;
          mats.push_back(std::move(k));
        }
        ir.rep = from_matrices(std::move(mats));
        ir.norm = std::round(inner_product(ir.rep.character, ir.rep.character));
        t.irreps_.push_back(std::move(ir));
      }
  for (auto& ir : t.irreps_) ir.name = t.name(ir.label);
  return t;
}

const IrreducibleRep& IrrepTable::get(const IrrepLabel& label) const {
  for (const auto& ir : irreps_)
    if (ir.label == label) return ir;
  throw Error(ErrorKind::InvalidParameter, "no irreducible with label " + name(label));
}

std::string IrrepTable::name(const IrrepLabel& label) const {
  const std::string sup = label.sign < 0 ? "^-" : "^+";
  if (gamma_.size() == 1) return "V_" + std::to_string(label.i) + sup;
  return "V_{" + std::to_string(label.i) + "," + std::to_string(label.l) + "}" + sup;
}

int fixed_point_dim(const std::vector<double>& character, const Subgroup& h) {
  const double avg =
      simd::active().masked_sum(character.data(), h.words().data(), character.size()) /
      static_cast<double>(h.count());
  const double r = std::round(avg);
  if (std::abs(avg - r) > 1e-6)
    throw Error(ErrorKind::NumericConsistency, "fixed-point dimension is not integral");
  return static_cast<int>(r);
}

std::vector<int> fixed_point_dims(const std::vector<double>& character, const SubgroupLattice& lat) {
  std::vector<int> d(lat.size());
  for (std::size_t h = 0; h < lat.size(); ++h)
    d[h] = fixed_point_dim(character, lat.cls(h).representative);
  return d;
}

std::vector<std::size_t> orbit_types(const std::vector<double>& character,
                                     const SubgroupLattice& lat) {
  const auto dims = fixed_point_dims(character, lat);
  std::vector<std::size_t> out;
  for (std::size_t h = 0; h < lat.size(); ++h) {
    bool ok = true;
    for (std::size_t k = h + 1; k < lat.size() && ok; ++k)
      if (lat.leq(h, k) && dims[k] >= dims[h]) ok = false;
    if (ok) out.push_back(h);
  }
  return out;
}

std::vector<std::size_t> maximal_orbit_types(const std::vector<double>& character,
                                             const SubgroupLattice& lat) {
  const auto dims = fixed_point_dims(character, lat);
  std::vector<std::size_t> types;
  for (auto h : orbit_types(character, lat))
    if (dims[h] > 0) types.push_back(h);
  std::vector<std::size_t> out;
  for (auto h : types) {
    bool maximal = std::none_of(types.begin(), types.end(),
                                [&](std::size_t k) { return k != h && lat.leq(h, k); });
    if (maximal) out.push_back(h);
  }
  return out;
}

std::vector<std::size_t> isotropy_oracle(const Representation& rep, const SubgroupLattice& lat,
                                         int trials, std::uint64_t seed) {
  const FiniteGroup& g = lat.group();
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  std::set<std::size_t> seen{lat.top()};
  auto stabilizer_class = [&](const Eigen::VectorXd& w) {
    const double tol = 1e-9 * std::max(1.0, w.norm());
    Subgroup s(g.order());
    for (ElementId x = 0; x < g.order(); ++x)
      if ((rep.matrices[x] * w - w).norm() <= tol) s.insert(x);
    return lat.classify(s);
  };
  for (std::size_t h = 0; h < lat.size(); ++h) {
    Eigen::MatrixXd proj = Eigen::MatrixXd::Zero(rep.dim, rep.dim);
    const auto members = lat.cls(h).representative.elements();
    for (auto x : members) proj += rep.matrices[x];
    proj /= static_cast<double>(members.size());
    for (int t = 0; t < trials; ++t) {
      Eigen::VectorXd v(rep.dim);
      for (int i = 0; i < rep.dim; ++i) v(i) = normal(rng);
      Eigen::VectorXd w = proj * v;
      if (w.norm() < 1e-9) break;
      seen.insert(stabilizer_class(w / w.norm()));
    }
  }
  return {seen.begin(), seen.end()};
}

FoldResult fold_frequency(int j, int m) {
  if (j < 0 || m < 1) throw Error(ErrorKind::InvalidParameter, "fold needs j >= 0 and m >= 1");
  const int s = dihedral_s(m);
  FoldResult f;
  if (j == 0) {
    f.components = {{0, 1}};
    return f;
  }
  const int alpha = j % m;
  if (alpha == 0) f.components = {{0, 1}, {s, 1}};
  else if (m % 2 == 0 && 2 * alpha == m) f.components = {{s + 1, 1}, {s + 2, 1}};
  else f.components = {{2 * alpha <= m ? alpha : m - alpha, 1}};
  return f;
}

}  // namespace eqdeg
