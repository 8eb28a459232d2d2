// eqdeg: equivariant degree computations for reversible second order systems
// with dihedral time symmetry. See README.md for the config format.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "eqdeg/bifurcation.hpp"
#include "eqdeg/error.hpp"
#include "eqdeg/report.hpp"

namespace {

int exit_code(eqdeg::ErrorKind k) {
  switch (k) {
    case eqdeg::ErrorKind::Config: return 1;
    case eqdeg::ErrorKind::SymmetryViolation:
    case eqdeg::ErrorKind::Nondegeneracy:
    case eqdeg::ErrorKind::SizeLimit:
    case eqdeg::ErrorKind::InvalidParameter:
    case eqdeg::ErrorKind::DegenerateInput:
    case eqdeg::ErrorKind::UnsupportedGroup:
    case eqdeg::ErrorKind::AmbiguousCrossing: return 2;
    default: return 3;
  }
}

std::optional<std::pair<double, double>> parse_window(const std::string& text) {
  if (text.empty()) return std::nullopt;
  const auto comma = text.find(',');
  if (comma == std::string::npos)
    throw eqdeg::Error(eqdeg::ErrorKind::InvalidParameter, "window must be written lo,hi");
  return std::make_pair(eqdeg::parse_real(text.substr(0, comma)), eqdeg::parse_real(text.substr(comma + 1)));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"equivariant degree and bifurcation invariants"};
  app.require_subcommand(1, 1);

  std::string config_path, format = "text", ambient = "present", window, lhs, rhs;
  std::uint64_t seed = 1;
  bool strict = false;

  auto common = [&](CLI::App* sub) {
    sub->add_option("config", config_path, "problem configuration (JSON)")->required();
    sub->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--seed", seed, "seed for numeric irreducibles");
  };
  auto* info = app.add_subcommand("group-info", "subgroup classes and irreducibles of G");
  common(info);
  auto* basic = app.add_subcommand("basic-degrees", "basic degree of every irreducible");
  common(basic);
  auto* mul = app.add_subcommand("burnside-mul", "product of two generators of A(G)");
  common(mul);
  mul->add_option("lhs", lhs, "class name")->required();
  mul->add_option("rhs", rhs, "class name")->required();
  auto* exist = app.add_subcommand("existence", "existence degree and solution guarantees");
  common(exist);
  exist->add_option("--ambient", ambient, "present, crossing or all-gamma")
      ->check(CLI::IsMember({"present", "crossing", "all-gamma"}));
  auto* bif = app.add_subcommand("bifurcation", "critical values and local invariants");
  common(bif);
  bif->add_option("--window", window, "alpha window lo,hi");
  bif->add_flag("--strict", strict, "reject coincident critical values");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    const auto cfg = eqdeg::load_config(config_path);
    const auto problem = eqdeg::Problem::create(cfg, seed);
    eqdeg::Json doc;
    if (info->parsed()) doc = eqdeg::group_info_json(*problem);
    else if (basic->parsed()) doc = eqdeg::basic_degrees_json(*problem);
    else if (mul->parsed()) doc = eqdeg::burnside_mul_json(*problem, lhs, rhs);
    else if (exist->parsed())
      doc = eqdeg::existence_json(*problem,
                                  eqdeg::existence_degree(*problem, eqdeg::parse_ambient_mode(ambient)));
    else
      doc = eqdeg::bifurcation_json(*problem,
                                    eqdeg::bifurcation_report(*problem, parse_window(window), strict));
    if (format == "json") std::cout << doc.dump(2) << "\n";
    else std::cout << eqdeg::render_text(doc);
    return 0;
  } catch (const eqdeg::Error& e) {
    std::cerr << "error (" << eqdeg::to_string(e.kind()) << "): " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
