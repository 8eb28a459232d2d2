#pragma once

#include <map>
#include <memory>
#include <optional>

#include "eqdeg/config.hpp"
#include "eqdeg/degree.hpp"

namespace eqdeg {

// Everything derived from the symmetry part of a configuration. Built once;
// members refer to each other, so instances are never moved.
class Problem {
 public:
  static std::unique_ptr<Problem> create(const ProblemConfig& cfg, std::uint64_t seed = 1);
  Problem(const Problem&) = delete;
  Problem& operator=(const Problem&) = delete;

  const ProblemConfig& config() const { return cfg_; }
  const GammaData& gamma() const { return gamma_; }
  const SymmetryGroup& symmetry() const { return sym_; }
  const SubgroupLattice& lattice() const { return lat_; }
  const BurnsideRing& ring() const { return ring_; }
  const IrrepTable& irreps() const { return irreps_; }
  const DegreeEngine& degrees() const { return engine_; }
  int m() const { return cfg_.m; }

  // Class of the embedded {e} x D_m x {+1}.
  std::size_t dm_class() const { return dm_class_; }

 private:
  Problem(const ProblemConfig& cfg, GammaData gamma, SymmetryGroup sym, std::uint64_t seed);

  ProblemConfig cfg_;
  GammaData gamma_;
  SymmetryGroup sym_;
  SubgroupLattice lat_;
  BurnsideRing ring_;
  IrrepTable irreps_;
  DegreeEngine engine_;
  std::size_t dm_class_ = 0;
};

struct EigenvalueEntry {
  double mu = 0;
  std::optional<Rational> exact;
  int multiplicity = 0;
  std::vector<int> isotypic;  // per Gamma irreducible
};

struct NegativeLambda {
  int j = 0;
  std::size_t mu_index = 0;
  double lambda = 0;
  std::optional<Rational> exact;
};

struct SpectralTable {
  int m = 0;
  std::vector<EigenvalueEntry> eigenvalues;  // ascending
  std::vector<NegativeLambda> negative;      // grouped by eigenvalue, j ascending
  std::map<std::size_t, int> jmax;           // eigenvalue index -> j_mu, for mu < 0
  std::map<std::pair<int, std::size_t>, long> beta;  // (i, eigenvalue index)
  std::map<int, long> eta, rho;
};

inline constexpr double kClusterTolerance = 1e-7;

// Eigenvalues with Gamma-isotypic multiplicities; uses the supplied exact
// spectrum when present (after checking it against A).
SpectralTable matrix_spectrum(const ProblemConfig& cfg, const GammaData& gamma,
                              const std::vector<Representation>& gamma_irreps);

// (1/|Gamma|) sum chi_l(g) tr(P_mu sigma(g)) / <chi_l, chi_l> for the
// eigenvalue mu of A.
int isotypic_multiplicity_in_eigenspace(const Eigen::MatrixXd& a, double mu,
                                        const PermutationAction& action,
                                        const Representation& irrep, double tol = kClusterTolerance);

void check_nondegeneracy(const SpectralTable& table, double tol);

double lambda_value(int j, double mu, int m);
Rational lambda_value(int j, const Rational& mu, int m);
int j_max(double mu, int m, double tol);
int j_max(const Rational& mu, int m);

void fill_negative_spectrum(SpectralTable& table, double tol);
void count_beta_eta_rho(SpectralTable& table);

// Irreducibles V_{i,l}^- crossed by lambda_{j,mu}, with multiplicities.
std::map<IrrepLabel, unsigned long> eigenspace_content(int j, const EigenvalueEntry& e, int m);
BurnsideElement eigenspace_degree(int j, const EigenvalueEntry& e, const Problem& p);

struct SolutionGuarantee {
  std::size_t orbit_type = 0;
  std::string name;
  Integer coefficient;
  std::size_t orbit_size = 0;
  bool maximal = false;
  bool nonconstant = false;
  bool minimal_period_exceeds_base = false;
};

// Which V_{i,l}^- make up the character used for maximal orbit types.
enum class AmbientMode {
  Present,   // every D_m index i, every Gamma-irreducible l occurring in R^k
  Crossing,  // only labels crossed by some negative lambda
  AllGamma,  // every D_m index and every Gamma-irreducible
};

std::string to_string(AmbientMode mode);
AmbientMode parse_ambient_mode(const std::string& text);

struct DegreeReport {
  SpectralTable table;
  BurnsideElement linear_part;  // G-deg(A, B(E))
  BurnsideElement degree;       // (G) - linear_part
  std::vector<IrrepLabel> ambient;  // irreducibles summed into the E-character
  std::vector<std::size_t> maximal_orbit_types;
  std::vector<SolutionGuarantee> guarantees;
  std::size_t total_solutions = 0;  // sum of orbit sizes over nonzero maximal types
  AmbientMode mode = AmbientMode::Present;
};

std::vector<IrrepLabel> ambient_labels(const Problem& p, const SpectralTable& t, AmbientMode mode);
std::vector<double> character_sum(const Problem& p, const std::vector<IrrepLabel>& labels);

DegreeReport existence_degree(const Problem& p, AmbientMode mode = AmbientMode::Present);

std::vector<SolutionGuarantee> interpret(const BurnsideElement& degree, const Problem& p,
                                         const std::vector<std::size_t>& maximal);

struct ParityPrediction {
  std::string rule;  // "rho_0", "rho_s", "rho_m/p", "rho_s+1", "rho_s+2", "rho_m/2^k"
  int index = 0;     // the i of rho_i
  long rho = 0;
  bool require_all = true;  // false: at least one of names
  std::vector<std::string> names;
};

// Orbit types forced by the parities of rho_i; Gamma must be trivial.
std::vector<ParityPrediction> parity_predictions(const SpectralTable& t);

}  // namespace eqdeg
