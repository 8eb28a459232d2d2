#pragma once

#include <Eigen/Dense>
#include <boost/rational.hpp>
#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "eqdeg/symmetry.hpp"

namespace eqdeg {

using Rational = boost::rational<long long>;

// "3", "-1/2", "0.25" or a JSON number.
Rational parse_rational(const std::string& text);
double parse_real(const nlohmann::json& value);

struct GammaSpec {
  std::string type = "trivial";  // trivial | dihedral | permutation
  int n = 0;                     // dihedral
  std::vector<std::string> generators;  // permutation, cycle notation
};

// Exact eigen data supplied instead of a numerical decomposition: mu and its
// multiplicity in each Gamma-irreducible (in gamma_irreps order).
struct SuppliedEigenvalue {
  Rational mu;
  std::vector<int> isotypic;
};

struct ProblemConfig {
  int m = 0;
  int k = 0;
  GammaSpec gamma;
  Eigen::MatrixXd a;
  double tolerance = 1e-9;
  bool nagumo_assumed = false;
  Layout layout = Layout::GammaFirst;
  std::size_t order_cap = kDefaultOrderCap;
  std::optional<std::vector<SuppliedEigenvalue>> spectrum;
  std::optional<std::pair<double, double>> window;  // bifurcation window [lo, hi)
};

// Structural parsing only; throws Error(Config) on malformed input.
ProblemConfig parse_config(const nlohmann::json& raw);
ProblemConfig load_config(const std::string& path);

struct GammaData {
  GroupPtr group;
  std::optional<PermutationAction> action;
};

// Builds Gamma and its action on R^k.
GammaData build_gamma(const ProblemConfig& cfg);

// Semantic checks: m >= 2, shape, symmetry of A (A5), Gamma-equivariance (A4).
// Throws Error with kind InvalidParameter / SymmetryViolation naming the assumption.
void validate_config(const ProblemConfig& cfg, const GammaData& gamma);

Eigen::MatrixXd permutation_matrix(const std::vector<int>& images);

}  // namespace eqdeg
