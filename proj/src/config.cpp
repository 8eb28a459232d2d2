#include "eqdeg/config.hpp"

#include <cmath>
#include <fstream>

#include "eqdeg/error.hpp"

namespace eqdeg {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorKind::Config, what); }

}  // namespace

Rational parse_rational(const std::string& text) {
  try {
    auto slash = text.find('/');
    if (slash != std::string::npos)
      return Rational(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
    auto dot = text.find('.');
    if (dot == std::string::npos) return Rational(std::stoll(text));
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    long long den = 1;
    for (std::size_t i = dot + 1; i < text.size(); ++i) den *= 10;
    return Rational(std::stoll(digits), den);
  } catch (const std::exception&) {
    malformed("cannot parse number '" + text + "'");
  }
}

double parse_real(const nlohmann::json& v) {
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) {
    Rational r = parse_rational(v.get<std::string>());
    return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
  }
  malformed("expected a number or a rational string");
}

ProblemConfig parse_config(const nlohmann::json& raw) {
  if (!raw.is_object()) malformed("configuration must be a JSON object");
  ProblemConfig cfg;
  try {
    cfg.m = raw.at("m").get<int>();
    const auto& a = raw.at("A");
    if (!a.is_array() || a.empty()) malformed("A must be a non-empty array of rows");
    const int rows = static_cast<int>(a.size());
    cfg.k = raw.contains("k") ? raw.at("k").get<int>() : rows;
    cfg.a.resize(rows, rows);
    for (int r = 0; r < rows; ++r) {
      if (!a[r].is_array() || static_cast<int>(a[r].size()) != rows)
        malformed("A must be square");
      for (int c = 0; c < rows; ++c) cfg.a(r, c) = parse_real(a[r][c]);
    }
    if (raw.contains("gamma")) {
      const auto& g = raw.at("gamma");
      cfg.gamma.type = g.at("type").get<std::string>();
      if (cfg.gamma.type == "dihedral") cfg.gamma.n = g.at("n").get<int>();
      else if (cfg.gamma.type == "permutation")
        cfg.gamma.generators = g.at("generators").get<std::vector<std::string>>();
      else if (cfg.gamma.type != "trivial")
        malformed("gamma.type must be trivial, dihedral or permutation");
    }
    if (raw.contains("tolerance")) cfg.tolerance = raw.at("tolerance").get<double>();
    if (raw.contains("nagumo_assumed")) cfg.nagumo_assumed = raw.at("nagumo_assumed").get<bool>();
    if (raw.contains("layout")) cfg.layout = parse_layout(raw.at("layout").get<std::string>());
    if (raw.contains("order_cap")) cfg.order_cap = raw.at("order_cap").get<std::size_t>();
    if (raw.contains("spectrum")) {
      std::vector<SuppliedEigenvalue> spec;
      for (const auto& e : raw.at("spectrum")) {
        SuppliedEigenvalue s;
        const auto& mu = e.at("mu");
        s.mu = mu.is_string() ? parse_rational(mu.get<std::string>())
                              : parse_rational(std::to_string(mu.get<long long>()));
        s.isotypic = e.at("isotypic").get<std::vector<int>>();
        spec.push_back(std::move(s));
      }
      cfg.spectrum = std::move(spec);
    }
    if (raw.contains("window")) {
      const auto& w = raw.at("window");
      cfg.window = std::make_pair(parse_real(w.at(0)), parse_real(w.at(1)));
    }
  } catch (const nlohmann::json::exception& e) {
    malformed(std::string("malformed configuration: ") + e.what());
  }
  if (cfg.tolerance <= 0) malformed("tolerance must be positive");
  return cfg;
}

ProblemConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) malformed("cannot open configuration file " + path);
  nlohmann::json raw;
  try {
    in >> raw;
  } catch (const nlohmann::json::exception& e) {
    malformed(std::string("invalid JSON: ") + e.what());
  }
  return parse_config(raw);
}

GammaData build_gamma(const ProblemConfig& cfg) {
  GammaData out;
  if (cfg.gamma.type == "trivial") {
    out.group = make_trivial_group();
    PermutationAction act;
    act.degree = cfg.k;
    act.images.emplace_back(cfg.k);
    for (int i = 0; i < cfg.k; ++i) act.images[0][i] = i;
    out.action = std::move(act);
  } else if (cfg.gamma.type == "dihedral") {
    if (cfg.gamma.n != cfg.k)
      throw Error(ErrorKind::InvalidParameter, "dihedral gamma acts on k = n coordinates");
    auto pg = dihedral_permutation_group(cfg.gamma.n);
    out.group = pg.group;
    out.action = std::move(pg.action);
  } else {
    std::vector<std::vector<int>> gens;
    for (const auto& text : cfg.gamma.generators) gens.push_back(parse_cycles(text, cfg.k));
    auto pg = make_permutation_group(cfg.k, gens, cfg.order_cap);
    out.group = pg.group;
    out.action = std::move(pg.action);
  }
  return out;
}

Eigen::MatrixXd permutation_matrix(const std::vector<int>& images) {
  const int k = static_cast<int>(images.size());
  Eigen::MatrixXd p = Eigen::MatrixXd::Zero(k, k);
  for (int i = 0; i < k; ++i) p(images[i], i) = 1.0;  // e_i -> e_{sigma(i)}
  return p;
}

void validate_config(const ProblemConfig& cfg, const GammaData& gamma) {
  if (cfg.m < 2) throw Error(ErrorKind::InvalidParameter, "m must be an integer >= 2");
  if (cfg.k != cfg.a.rows())
    throw Error(ErrorKind::InvalidParameter, "k does not match the shape of A");
  const double scale = std::max(1.0, cfg.a.cwiseAbs().maxCoeff());
  if ((cfg.a - cfg.a.transpose()).cwiseAbs().maxCoeff() > cfg.tolerance * scale)
    throw Error(ErrorKind::SymmetryViolation, "(A5) violated: A is not a symmetric matrix");
  for (const auto& img : gamma.action->images) {
    Eigen::MatrixXd p = permutation_matrix(img);
    if ((cfg.a * p - p * cfg.a).cwiseAbs().maxCoeff() > cfg.tolerance * scale)
      throw Error(ErrorKind::SymmetryViolation,
                  "(A4)/(B5) violated: A does not commute with the permutation " + cycle_label(img));
  }
}

}  // namespace eqdeg
