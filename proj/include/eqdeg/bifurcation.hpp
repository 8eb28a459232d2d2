#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eqdeg/spectral.hpp"

namespace eqdeg {

struct Crossing {
  int j = 0;
  std::size_t mu_index = 0;
};

struct CriticalPoint {
  double alpha = 0;
  std::optional<Rational> exact;
  std::vector<Crossing> crossings;  // more than one when values coincide
  std::map<IrrepLabel, unsigned long> crossing_multiplicities;
  bool simple = true;
};

struct BifurcationInvariant {
  CriticalPoint at;
  BurnsideElement omega;
  bool nonzero = false;
  bool odd_shortcut_applies = false;  // single irreducible crossed an odd number of times
  std::vector<SolutionGuarantee> branch_types;  // nonzero terms of omega
};

struct BifurcationReport {
  SpectralTable table;
  std::pair<double, double> window;
  std::vector<BifurcationInvariant> points;
};

// alpha_{j,mu} = (j^2 + m^2 mu) / m^2
double critical_value(int j, double mu, int m);
Rational critical_value(int j, const Rational& mu, int m);

// All critical values below hi (every one of them, so prefixes are complete),
// merged when they coincide within tol.
std::vector<CriticalPoint> critical_points_below(const SpectralTable& t, double hi, double tol);

std::pair<double, double> default_window(const SpectralTable& t);

std::vector<CriticalPoint> critical_set(const SpectralTable& t, std::pair<double, double> window,
                                        double tol);

// prefix o ((G) - this point's product), prefix taken over every critical
// point strictly below `at`.
BurnsideElement local_invariant(const CriticalPoint& at, const std::vector<CriticalPoint>& before,
                                const Problem& p);

BifurcationReport bifurcation_report(const Problem& p,
                                     std::optional<std::pair<double, double>> window = std::nullopt,
                                     bool strict = false);

}  // namespace eqdeg
