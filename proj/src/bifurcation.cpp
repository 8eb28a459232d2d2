#include "eqdeg/bifurcation.hpp"

#include <algorithm>
#include <cmath>

#include "eqdeg/error.hpp"

namespace eqdeg {

double critical_value(int j, double mu, int m) {
  return (static_cast<double>(j) * j + static_cast<double>(m) * m * mu) / (static_cast<double>(m) * m);
}

Rational critical_value(int j, const Rational& mu, int m) {
  const long long mm = static_cast<long long>(m) * m;
  return (Rational(static_cast<long long>(j) * j) + mu * mm) / Rational(mm);
}

std::vector<CriticalPoint> critical_points_below(const SpectralTable& t, double hi, double tol) {
  std::vector<CriticalPoint> raw;
  const int m = t.m;
  for (std::size_t u = 0; u < t.eigenvalues.size(); ++u) {
    const auto& e = t.eigenvalues[u];
    if (hi <= e.mu) continue;
    const int top = static_cast<int>(std::ceil(m * std::sqrt(hi - e.mu))) + 1;
    for (int j = 0; j <= top; ++j) {
      CriticalPoint c;
      if (e.exact) {
        c.exact = critical_value(j, *e.exact, m);
        c.alpha = boost::rational_cast<double>(*c.exact);
      } else {
        c.alpha = critical_value(j, e.mu, m);
      }
      if (c.alpha >= hi) break;
      c.crossings.push_back({j, u});
      c.crossing_multiplicities = eigenspace_content(j, e, m);
      raw.push_back(std::move(c));
    }
  }
  std::sort(raw.begin(), raw.end(),
            [](const CriticalPoint& a, const CriticalPoint& b) { return a.alpha < b.alpha; });
  std::vector<CriticalPoint> merged;
  for (auto& c : raw) {
    if (!merged.empty()) {
      auto& last = merged.back();
      const bool same = (c.exact && last.exact) ? *c.exact == *last.exact
                                                : std::abs(c.alpha - last.alpha) <= tol;
      if (same) {
        last.simple = false;
        last.crossings.push_back(c.crossings.front());
        for (const auto& [label, mult] : c.crossing_multiplicities)
          last.crossing_multiplicities[label] += mult;
        continue;
      }
    }
    merged.push_back(std::move(c));
  }
  return merged;
}

std::pair<double, double> default_window(const SpectralTable& t) {
  if (t.eigenvalues.empty()) return {-1.0, 0.0};
  return {t.eigenvalues.front().mu - 1.0, 0.0};
}

std::vector<CriticalPoint> critical_set(const SpectralTable& t, std::pair<double, double> window,
                                        double tol) {
  auto all = critical_points_below(t, window.second, tol);
  std::erase_if(all, [&](const CriticalPoint& c) { return c.alpha < window.first; });
  return all;
}

BurnsideElement local_invariant(const CriticalPoint& at, const std::vector<CriticalPoint>& before,
                                const Problem& p) {
  std::map<IrrepLabel, unsigned long> prefix;
  for (const auto& c : before) {
    if (c.alpha >= at.alpha) break;
    for (const auto& [label, mult] : c.crossing_multiplicities) prefix[label] += mult;
  }
  const auto& ring = p.ring();
  const auto core = ring.unit() - p.degrees().linear_degree(at.crossing_multiplicities);
  return ring.multiply(p.degrees().linear_degree(prefix), core);
}

BifurcationReport bifurcation_report(const Problem& p, std::optional<std::pair<double, double>> window,
                                     bool strict) {
  BifurcationReport r;
  r.table = matrix_spectrum(p.config(), p.gamma(), p.irreps().gamma());
  const auto& table = r.table;
  for (const auto& e : table.eigenvalues)
    if (e.exact ? e.exact->numerator() == 0 : std::abs(e.mu) <= p.config().tolerance)
      throw Error(ErrorKind::InvalidParameter, "A must be non-singular for the bifurcation problem");
  r.window = window ? *window : (p.config().window ? *p.config().window : default_window(table));
  if (!(r.window.first < r.window.second))
    throw Error(ErrorKind::InvalidParameter, "bifurcation window must satisfy lo < hi");
  const double tol = p.config().tolerance;
  const auto all = critical_points_below(table, r.window.second, tol);
  const auto maximal = maximal_orbit_types(
      character_sum(p, ambient_labels(p, table, AmbientMode::Present)), p.lattice());
  for (const auto& c : all) {
    if (c.alpha < r.window.first) continue;
    if (strict && !c.simple)
      throw Error(ErrorKind::AmbiguousCrossing,
                  "critical value " + std::to_string(c.alpha) + " is shared by several (j, mu)");
    BifurcationInvariant inv;
    inv.at = c;
    inv.omega = local_invariant(c, all, p);
    inv.nonzero = !inv.omega.is_zero();
    if (c.crossing_multiplicities.size() == 1) {
      const auto& [label, mult] = *c.crossing_multiplicities.begin();
      const auto& deg = p.degrees().basic(label);
      inv.odd_shortcut_applies = mult % 2 == 1 && deg != p.ring().unit();
      if (inv.odd_shortcut_applies && !inv.nonzero)
        throw Error(ErrorKind::InternalConsistency,
                    "odd crossing multiplicity with a vanishing local invariant");
    }
    inv.branch_types = interpret(inv.omega, p, maximal);
    r.points.push_back(std::move(inv));
  }
  return r;
}

}  // namespace eqdeg
