#include "eqdeg/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "eqdeg/error.hpp"

namespace eqdeg {

Problem::Problem(const ProblemConfig& cfg, GammaData gamma, SymmetryGroup sym, std::uint64_t seed)
    : cfg_(cfg),
      gamma_(std::move(gamma)),
      sym_(std::move(sym)),
      lat_(SubgroupLattice::build(sym_.group, cfg.order_cap)),
      ring_(lat_),
      irreps_(IrrepTable::build(sym_, seed)),
      engine_(ring_, irreps_) {
  Subgroup dm(sym_.order());
  for (ElementId d = 0; d < sym_.dm->order(); ++d) dm.insert(sym_.compose(0, d, 0));
  dm_class_ = lat_.classify(dm);
}

std::unique_ptr<Problem> Problem::create(const ProblemConfig& cfg, std::uint64_t seed) {
  auto gamma = build_gamma(cfg);
  validate_config(cfg, gamma);
  auto sym = make_symmetry_group(gamma.group, gamma.action, cfg.m, cfg.layout, cfg.order_cap);
  return std::unique_ptr<Problem>(new Problem(cfg, std::move(gamma), std::move(sym), seed));
}

int isotypic_multiplicity_in_eigenspace(const Eigen::MatrixXd& a, double mu,
                                        const PermutationAction& action,
                                        const Representation& irrep, double tol) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a);
  const double scale = std::max(1.0, std::abs(mu));
  std::vector<int> cols;
  for (int c = 0; c < a.rows(); ++c)
    if (std::abs(es.eigenvalues()(c) - mu) <= tol * scale) cols.push_back(c);
  if (cols.empty()) throw Error(ErrorKind::InvalidParameter, "mu is not an eigenvalue of A");
  Eigen::MatrixXd q(a.rows(), static_cast<int>(cols.size()));
  for (std::size_t c = 0; c < cols.size(); ++c) q.col(static_cast<int>(c)) = es.eigenvectors().col(cols[c]);
  const Eigen::MatrixXd proj = q * q.transpose();
  double sum = 0;
  for (std::size_t g = 0; g < action.images.size(); ++g)
    sum += irrep.character[g] * (proj * permutation_matrix(action.images[g])).trace();
  const double norm = inner_product(irrep.character, irrep.character);
  const double val = sum / static_cast<double>(action.images.size()) / norm;
  const double r = std::round(val);
  if (std::abs(val - r) > 1e-6)
    throw Error(ErrorKind::NumericConsistency, "non-integral isotypic multiplicity");
  return static_cast<int>(r);
}

SpectralTable matrix_spectrum(const ProblemConfig& cfg, const GammaData& gamma,
                              const std::vector<Representation>& gamma_irreps) {
  SpectralTable t;
  t.m = cfg.m;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(cfg.a);
  const auto& vals = es.eigenvalues();
  const int k = static_cast<int>(vals.size());
  std::vector<std::pair<int, int>> clusters;  // [begin, end)
  for (int b = 0; b < k;) {
    int e = b + 1;
    while (e < k) {
      const double gap = vals(e) - vals(e - 1);
      const double scale = std::max(1.0, std::abs(vals(e)));
      if (gap <= kClusterTolerance * scale) {
        ++e;
        continue;
      }
      if (gap < 10 * kClusterTolerance * scale)
        throw Error(ErrorKind::DegenerateInput, "eigenvalues " + std::to_string(vals(e - 1)) +
                                                    " and " + std::to_string(vals(e)) +
                                                    " are too close to separate or merge");
      break;
    }
    clusters.emplace_back(b, e);
    b = e;
  }
  if (cfg.spectrum) {
    std::vector<double> numeric;
    for (const auto& s : *cfg.spectrum) {
      EigenvalueEntry entry;
      entry.exact = s.mu;
      entry.mu = static_cast<double>(s.mu.numerator()) / static_cast<double>(s.mu.denominator());
      entry.isotypic = s.isotypic;
      if (entry.isotypic.size() != gamma_irreps.size())
        throw Error(ErrorKind::Config, "spectrum entry needs one multiplicity per Gamma irreducible");
      for (std::size_t l = 0; l < gamma_irreps.size(); ++l) {
        if (entry.isotypic[l] < 0) throw Error(ErrorKind::Config, "negative isotypic multiplicity");
        entry.multiplicity += entry.isotypic[l] * gamma_irreps[l].dim;
      }
      for (int c = 0; c < entry.multiplicity; ++c) numeric.push_back(entry.mu);
      t.eigenvalues.push_back(std::move(entry));
    }
    std::sort(numeric.begin(), numeric.end());
    bool agree = static_cast<int>(numeric.size()) == k;
    for (int c = 0; agree && c < k; ++c)
      agree = std::abs(numeric[c] - vals(c)) <= 1e-6 * std::max(1.0, std::abs(vals(c)));
    if (!agree) throw Error(ErrorKind::DegenerateInput, "supplied spectrum does not match A");
    std::sort(t.eigenvalues.begin(), t.eigenvalues.end(),
              [](const EigenvalueEntry& a, const EigenvalueEntry& b) { return a.mu < b.mu; });
    return t;
  }
  for (auto [b, e] : clusters) {
    EigenvalueEntry entry;
    entry.mu = vals.segment(b, e - b).mean();
    entry.multiplicity = e - b;
    Eigen::MatrixXd q = es.eigenvectors().middleCols(b, e - b);
    const Eigen::MatrixXd proj = q * q.transpose();
    int total = 0;
    for (const auto& irrep : gamma_irreps) {
      double sum = 0;
      for (std::size_t g = 0; g < gamma.action->images.size(); ++g)
        sum += irrep.character[g] * (proj * permutation_matrix(gamma.action->images[g])).trace();
      const double val = sum / static_cast<double>(gamma.action->images.size()) /
                         inner_product(irrep.character, irrep.character);
      const double r = std::round(val);
      if (std::abs(val - r) > 1e-6)
        throw Error(ErrorKind::NumericConsistency, "non-integral isotypic multiplicity");
      entry.isotypic.push_back(static_cast<int>(r));
      total += static_cast<int>(r) * irrep.dim;
    }
    if (total != entry.multiplicity)
      throw Error(ErrorKind::NumericConsistency, "isotypic multiplicities do not add up");
    t.eigenvalues.push_back(std::move(entry));
  }
  return t;
}

void check_nondegeneracy(const SpectralTable& t, double tol) {
  const int m = t.m;
  double maxabs = 0;
  for (const auto& e : t.eigenvalues) maxabs = std::max(maxabs, std::abs(e.mu));
  for (const auto& e : t.eigenvalues)
    for (int j = 0; static_cast<double>(j) * j <= m * m * maxabs + 1; ++j) {
      bool zero;
      if (e.exact) zero = (Rational(j * j, m * m) + *e.exact).numerator() == 0;
      else zero = std::abs(static_cast<double>(j) * j / (m * m) + e.mu) <= tol;
      if (zero)
        throw Error(ErrorKind::Nondegeneracy,
                    "(A5) violated: j^2/m^2 + mu = 0 for j=" + std::to_string(j) +
                        ", mu=" + std::to_string(e.mu) + ", m=" + std::to_string(m));
    }
}

double lambda_value(int j, double mu, int m) {
  return 1.0 + static_cast<double>(m) * m * (mu - 1.0) / (static_cast<double>(j) * j + m * m);
}

Rational lambda_value(int j, const Rational& mu, int m) {
  return Rational(1) + Rational(static_cast<long long>(m) * m) * (mu - 1) /
                           Rational(static_cast<long long>(j) * j + static_cast<long long>(m) * m);
}

int j_max(double mu, int m, double tol) {
  if (mu >= 0) throw Error(ErrorKind::InvalidParameter, "j_max needs mu < 0");
  const double x = -mu * m * m;
  int j = static_cast<int>(std::floor(std::sqrt(x)));
  while (static_cast<double>(j + 1) * (j + 1) <= x) ++j;
  while (j > 0 && static_cast<double>(j) * j >= x) --j;
  const double band = tol * m * m;
  if (std::abs(x - static_cast<double>(j) * j) <= band ||
      std::abs(x - static_cast<double>(j + 1) * (j + 1)) <= band)
    throw Error(ErrorKind::DegenerateInput, "mu=" + std::to_string(mu) +
                                                " lies on a frequency boundary for m=" +
                                                std::to_string(m));
  return j;
}

int j_max(const Rational& mu, int m) {
  if (mu.numerator() >= 0) throw Error(ErrorKind::InvalidParameter, "j_max needs mu < 0");
  const Rational x = -mu * Rational(static_cast<long long>(m) * m);
  int j = static_cast<int>(std::floor(std::sqrt(boost::rational_cast<double>(x))));
  while (Rational(static_cast<long long>(j + 1) * (j + 1)) <= x) ++j;
  while (j > 0 && Rational(static_cast<long long>(j) * j) >= x) --j;
  if (x == Rational(static_cast<long long>(j) * j) ||
      x == Rational(static_cast<long long>(j + 1) * (j + 1)))
    throw Error(ErrorKind::DegenerateInput, "mu lies on a frequency boundary");
  return j;
}

void fill_negative_spectrum(SpectralTable& t, double tol) {
  t.negative.clear();
  t.jmax.clear();
  for (std::size_t u = 0; u < t.eigenvalues.size(); ++u) {
    const auto& e = t.eigenvalues[u];
    if (e.mu >= 0) continue;
    const int jm = e.exact ? j_max(*e.exact, t.m) : j_max(e.mu, t.m, tol);
    t.jmax[u] = jm;
    for (int j = 0; j <= jm; ++j) {
      NegativeLambda n;
      n.j = j;
      n.mu_index = u;
      if (e.exact) {
        n.exact = lambda_value(j, *e.exact, t.m);
        n.lambda = boost::rational_cast<double>(*n.exact);
      } else {
        n.lambda = lambda_value(j, e.mu, t.m);
      }
      t.negative.push_back(n);
    }
  }
}

void count_beta_eta_rho(SpectralTable& t) {
  const int m = t.m;
  const int s = dihedral_s(m);
  std::vector<int> indices;
  for (int i = 0; i <= dihedral_s_star(m); ++i)
    if (dihedral_index_valid(m, i)) indices.push_back(i);
  t.beta.clear();
  t.eta.clear();
  t.rho.clear();
  for (int i : indices) t.eta[i] = 0;
  for (const auto& [u, jm] : t.jmax) {
    const long mult = t.eigenvalues[u].multiplicity;
    const long q = jm / m;
    const int alpha = jm % m;
    for (int i : indices) {
      long b;
      if (i == 0) b = (q + 1) * mult;
      else if (i == s) b = q * mult;
      else if (i > s) b = (2 * alpha < m ? q : q + 1) * mult;
      else if (alpha < i) b = 2 * q * mult;
      else if (alpha < m - i) b = (2 * q + 1) * mult;
      else b = 2 * (q + 1) * mult;
      t.beta[{i, u}] = b;
      t.eta[i] += b;
    }
  }
  for (int i : indices) {
    if (i == 0 || i >= s) {
      t.rho[i] = t.eta[i];
      continue;
    }
    long r = 0;
    for (int i2 : indices)
      if (i2 > 0 && i2 < s && 2 * i2 < m && std::gcd(i2, m) == std::gcd(i, m)) r += t.eta[i2];
    t.rho[i] = r;
  }
}

std::map<IrrepLabel, unsigned long> eigenspace_content(int j, const EigenvalueEntry& e, int m) {
  std::map<IrrepLabel, unsigned long> out;
  for (const auto& [i, count] : fold_frequency(j, m).components)
    for (std::size_t l = 0; l < e.isotypic.size(); ++l)
      if (e.isotypic[l] > 0)
        out[IrrepLabel{i, static_cast<int>(l), -1}] +=
            static_cast<unsigned long>(e.isotypic[l]) * count;
  return out;
}

BurnsideElement eigenspace_degree(int j, const EigenvalueEntry& e, const Problem& p) {
  return p.degrees().linear_degree(eigenspace_content(j, e, p.m()));
}

std::vector<IrrepLabel> ambient_labels(const Problem& p, const SpectralTable& t, AmbientMode mode) {
  std::set<IrrepLabel> labels;
  const int m = p.m();
  const int ngamma = static_cast<int>(p.irreps().gamma().size());
  if (mode == AmbientMode::Crossing) {
    for (const auto& n : t.negative)
      for (const auto& [label, mult] : eigenspace_content(n.j, t.eigenvalues[n.mu_index], m))
        labels.insert(label);
    return {labels.begin(), labels.end()};
  }
  std::vector<bool> present(ngamma, mode == AmbientMode::AllGamma);
  for (const auto& e : t.eigenvalues)
    for (int l = 0; l < ngamma; ++l)
      if (e.isotypic[l] > 0) present[l] = true;
  for (int l = 0; l < ngamma; ++l)
    if (present[l])
      for (int i = 0; i <= dihedral_s_star(m); ++i)
        if (dihedral_index_valid(m, i)) labels.insert({i, l, -1});
  return {labels.begin(), labels.end()};
}

std::vector<double> character_sum(const Problem& p, const std::vector<IrrepLabel>& labels) {
  std::vector<double> chi(p.symmetry().order(), 0.0);
  for (const auto& label : labels) {
    const auto& c = p.irreps().get(label).rep.character;
    for (std::size_t g = 0; g < chi.size(); ++g) chi[g] += c[g];
  }
  return chi;
}

std::vector<SolutionGuarantee> interpret(const BurnsideElement& degree, const Problem& p,
                                         const std::vector<std::size_t>& maximal) {
  const auto& lat = p.lattice();
  const auto& sym = p.symmetry();
  std::vector<SolutionGuarantee> out;
  for (const auto& [h, coeff] : degree.terms()) {
    SolutionGuarantee sg;
    sg.orbit_type = h;
    sg.name = lat.cls(h).name;
    sg.coefficient = coeff;
    sg.orbit_size = sym.order() / lat.cls(h).order;
    sg.maximal = std::find(maximal.begin(), maximal.end(), h) != maximal.end();
    sg.nonconstant = !lat.leq(p.dm_class(), h);
    const auto& rep = lat.cls(h).representative;
    for (ElementId d = 1; d < sym.dm->order() && !sg.minimal_period_exceeds_base; ++d)
      if (rep.contains(sym.compose(0, d, 1))) sg.minimal_period_exceeds_base = true;
    out.push_back(std::move(sg));
  }
  return out;
}

std::string to_string(AmbientMode mode) {
  switch (mode) {
    case AmbientMode::Present: return "present";
    case AmbientMode::Crossing: return "crossing";
    case AmbientMode::AllGamma: return "all-gamma";
  }
  return "present";
}

AmbientMode parse_ambient_mode(const std::string& text) {
  if (text == "present") return AmbientMode::Present;
  if (text == "crossing") return AmbientMode::Crossing;
  if (text == "all-gamma") return AmbientMode::AllGamma;
  throw Error(ErrorKind::InvalidParameter, "ambient mode must be present, crossing or all-gamma");
}

DegreeReport existence_degree(const Problem& p, AmbientMode mode) {
  DegreeReport r;
  r.mode = mode;
  r.table = matrix_spectrum(p.config(), p.gamma(), p.irreps().gamma());
  check_nondegeneracy(r.table, p.config().tolerance);
  fill_negative_spectrum(r.table, p.config().tolerance);
  count_beta_eta_rho(r.table);
  // Multiplicities add up over all (j, mu) first; the product is then a single
  // power per irreducible, which equals the ordered product by commutativity.
  std::map<IrrepLabel, unsigned long> total;
  for (const auto& n : r.table.negative)
    for (const auto& [label, mult] : eigenspace_content(n.j, r.table.eigenvalues[n.mu_index], p.m()))
      total[label] += mult;
  r.linear_part = p.degrees().linear_degree(total);
  r.degree = p.ring().unit() - r.linear_part;
  r.ambient = ambient_labels(p, r.table, mode);
  r.maximal_orbit_types = maximal_orbit_types(character_sum(p, r.ambient), p.lattice());
  r.guarantees = interpret(r.degree, p, r.maximal_orbit_types);
  for (const auto& g : r.guarantees)
    if (g.maximal) r.total_solutions += g.orbit_size;
  return r;
}

std::vector<ParityPrediction> parity_predictions(const SpectralTable& t) {
  const int m = t.m;
  const int s = dihedral_s(m);
  auto rho = [&](int i) {
    auto it = t.rho.find(i);
    return it == t.rho.end() ? 0L : it->second;
  };
  auto d = [](int n) { return "D_" + std::to_string(n); };
  std::vector<ParityPrediction> out;
  auto add = [&](std::string rule, int i, bool all, std::vector<std::string> names) {
    if (rho(i) % 2 == 0) return;
    out.push_back({std::move(rule), i, rho(i), all, std::move(names)});
  };
  add("rho_0", 0, true, {d(m)});
  add("rho_s", s, true, {d(m) + "^z"});
  int rest = m, e0 = 0;
  while (rest % 2 == 0) {
    rest /= 2;
    ++e0;
  }
  for (int p = 3; p <= rest; p += 2) {
    if (rest % p) continue;
    while (rest % p == 0) rest /= p;
    add("rho_m/p", m / p, false, {d(m / p) + "^z", d(m) + "^z"});
  }
  if (e0 > 0) {
    add("rho_s+1", s + 1, true, {d(m) + "^d"});
    add("rho_s+2", s + 2, true, {d(m) + "^hd"});
  }
  for (int k = 2; k <= e0; ++k) {
    const int two_h = m >> (k - 1);
    add("rho_m/2^k", m >> k, true, {d(two_h) + "^d", "t" + d(two_h) + "^d"});
  }
  return out;
}

}  // namespace eqdeg
