#include "eqdeg/report.hpp"

#include <cstdio>
#include <iomanip>
#include <sstream>

#include "eqdeg/error.hpp"

namespace eqdeg {

namespace {

std::string rational_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Json coefficient_json(const Integer& c) {
  if (c >= std::numeric_limits<long long>::min() && c <= std::numeric_limits<long long>::max())
    return static_cast<long long>(c);
  return c.str();
}

Json group_header(const Problem& p) {
  const auto& sym = p.symmetry();
  Json j;
  j["m"] = p.m();
  j["layout"] = to_string(sym.layout);
  j["order"] = sym.order();
  j["gamma_order"] = sym.gamma->order();
  j["classes"] = p.lattice().size();
  j["irreducibles"] = p.irreps().size();
  return j;
}

Json irrep_label_json(const Problem& p, const IrrepLabel& l, unsigned long mult) {
  return Json{{"irrep", p.irreps().name(l)}, {"multiplicity", mult}};
}

Json spectrum_json(const SpectralTable& t) {
  Json eig = Json::array();
  for (const auto& e : t.eigenvalues) {
    Json x{{"mu", round12(e.mu)}, {"multiplicity", e.multiplicity}, {"isotypic", e.isotypic}};
    if (e.exact) x["exact"] = rational_string(*e.exact);
    eig.push_back(std::move(x));
  }
  return eig;
}

std::string pad(std::string s, std::size_t w) {
  if (s.size() < w) s.append(w - s.size(), ' ');
  return s;
}

std::string number_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v.get<double>());
  return buf;
}

std::string element_text(const Json& terms) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms) {
    std::string c = number_text(t["coefficient"]);
    const bool neg = c.front() == '-';
    if (neg) c.erase(0, 1);
    if (first) out += neg ? "-" : "";
    else out += neg ? " - " : " + ";
    if (c != "1") out += c;
    out += "(" + t["name"].get<std::string>() + ")";
    first = false;
  }
  return out;
}

// Fixed-width table: header row then rows, columns sized to content.
std::string table(const std::vector<std::string>& head, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> w(head.size());
  for (std::size_t c = 0; c < head.size(); ++c) w[c] = head[c].size();
  for (const auto& r : rows)
    for (std::size_t c = 0; c < r.size(); ++c) w[c] = std::max(w[c], r[c].size());
  std::ostringstream os;
  auto line = [&](const std::vector<std::string>& r) {
    std::string s;
    for (std::size_t c = 0; c < r.size(); ++c) s += "  " + pad(r[c], c + 1 < r.size() ? w[c] : 0);
    os << s << "\n";
  };
  line(head);
  for (const auto& r : rows) line(r);
  return os.str();
}

void header_text(std::ostringstream& os, const Json& g) {
  os << "group: order " << g["order"].get<long long>() << ", m = " << g["m"].get<int>()
     << ", |Gamma| = " << g["gamma_order"].get<long long>() << ", layout "
     << g["layout"].get<std::string>() << "\n"
     << "conjugacy classes of subgroups: " << g["classes"].get<long long>()
     << ", irreducible representations: " << g["irreducibles"].get<long long>() << "\n";
}

std::string group_info_text(const Json& d) {
  std::ostringstream os;
  header_text(os, d["group"]);
  os << "\nclasses\n";
  std::vector<std::vector<std::string>> rows;
  for (const auto& c : d["lattice"])
    rows.push_back({number_text(c["id"]), c["name"].get<std::string>(), number_text(c["order"]),
                    number_text(c["conjugates"]), number_text(c["weyl_order"])});
  os << table({"#", "name", "order", "conjugates", "|W|"}, rows);
  os << "\nirreducibles\n";
  rows.clear();
  for (const auto& r : d["irreps"]) rows.push_back({r["name"].get<std::string>(), number_text(r["dim"])});
  os << table({"name", "dim"}, rows);
  return os.str();
}

std::string basic_degrees_text(const Json& d) {
  std::ostringstream os;
  header_text(os, d["group"]);
  for (const auto& b : d["degrees"])
    os << "\ndeg " << b["irrep"].get<std::string>() << " = " << element_text(b["degree"]) << "\n";
  return os.str();
}

std::string burnside_mul_text(const Json& d) {
  std::ostringstream os;
  header_text(os, d["group"]);
  os << "\n(" << d["lhs"].get<std::string>() << ") * (" << d["rhs"].get<std::string>() << ") = "
     << element_text(d["product"]) << "\n";
  return os.str();
}

std::string spectrum_text(const Json& eig) {
  std::vector<std::vector<std::string>> rows;
  for (const auto& e : eig) {
    std::string iso;
    for (const auto& v : e["isotypic"]) iso += (iso.empty() ? "" : ",") + number_text(v);
    rows.push_back({number_text(e["mu"]), e.contains("exact") ? e["exact"].get<std::string>() : "",
                    number_text(e["multiplicity"]), "[" + iso + "]"});
  }
  return table({"mu", "exact", "mult", "Gamma-isotypic"}, rows);
}

std::string existence_text(const Json& d) {
  std::ostringstream os;
  header_text(os, d["group"]);
  os << "\neigenvalues of A\n" << spectrum_text(d["spectrum"]);
  os << "\nnegative spectrum\n";
  std::vector<std::vector<std::string>> rows;
  for (const auto& n : d["negative"]) {
    std::string content;
    for (const auto& c : n["content"])
      content += (content.empty() ? "" : " + ") +
                 (c["multiplicity"].get<long long>() == 1 ? "" : number_text(c["multiplicity"])) +
                 c["irrep"].get<std::string>();
    rows.push_back({number_text(n["j"]), number_text(n["mu"]), number_text(n["lambda"]),
                    n.contains("exact") ? n["exact"].get<std::string>() : "", content});
  }
  os << table({"j", "mu", "lambda", "exact", "eigenspace"}, rows);
  if (d.contains("rho")) {
    os << "\n";
    rows.clear();
    for (const auto& [i, v] : d["eta"].items())
      rows.push_back({i, number_text(v), number_text(d["rho"][i])});
    os << table({"i", "eta", "rho"}, rows);
  }
  os << "\nproduct factors\n";
  for (const auto& f : d["factors"])
    os << "  " << f["irrep"].get<std::string>() << " x" << number_text(f["multiplicity"]) << "\n";
  os << "\ndegree = " << element_text(d["degree"]) << "\n";
  os << "nonzero terms: " << d["degree"].size() << "\n";
  os << "\nmaximal orbit types (ambient: " << d["ambient_mode"].get<std::string>() << ")\n";
  rows.clear();
  for (const auto& g : d["maximal"])
    rows.push_back({g["name"].get<std::string>(), number_text(g["coefficient"]), number_text(g["orbit_size"]),
                    number_text(g["nonconstant"]), number_text(g["minimal_period_exceeds_base"])});
  os << table({"orbit type", "coeff", "orbit size", "nonconstant", "period > 2pi"}, rows);
  os << "\nguaranteed: at least " << number_text(d["total_solutions"]) << " different "
     << number_text(d["period_over_pi"]) << "pi-periodic solutions\n";
  if (d.contains("parity_predictions") && !d["parity_predictions"].empty()) {
    os << "\nparity predictions\n";
    for (const auto& p : d["parity_predictions"]) {
      std::string names;
      for (const auto& n : p["names"]) names += (names.empty() ? "" : ", ") + n.get<std::string>();
      os << "  " << p["rule"].get<std::string>() << " = " << number_text(p["rho"]) << " odd: "
         << (p["require_all"].get<bool>() ? "all of " : "one of ") << names << "\n";
    }
  }
  return os.str();
}

std::string bifurcation_text(const Json& d) {
  std::ostringstream os;
  header_text(os, d["group"]);
  os << "\neigenvalues of A\n" << spectrum_text(d["spectrum"]);
  os << "\nwindow [" << number_text(d["window"][0]) << ", " << number_text(d["window"][1]) << ")\n";
  for (const auto& p : d["points"]) {
    os << "\nalpha = " << number_text(p["alpha"]);
    if (p.contains("exact")) os << " (" << p["exact"].get<std::string>() << ")";
    os << "  crossings:";
    for (const auto& c : p["crossings"]) os << " (j=" << number_text(c["j"]) << ", mu=" << number_text(c["mu"]) << ")";
    if (!p["simple"].get<bool>()) os << "  [coincident]";
    os << "\n  crossed:";
    for (const auto& c : p["crossed"])
      os << " " << c["irrep"].get<std::string>() << " x" << number_text(c["multiplicity"]);
    os << "\n  omega = " << element_text(p["omega"]) << "\n";
    os << "  nonzero: " << number_text(p["nonzero"]) << ", odd-multiplicity shortcut: "
       << number_text(p["odd_shortcut"]) << "\n";
    if (p["nonzero"].get<bool>()) {
      std::string maxes;
      for (const auto& b : p["branch_types"])
        if (b["maximal"].get<bool>()) maxes += (maxes.empty() ? "" : ", ") + b["name"].get<std::string>();
      os << "  bifurcation point of non-trivial periodic solutions";
      if (!maxes.empty()) os << "; maximal branch symmetries: " << maxes;
      os << "\n";
    }
  }
  return os.str();
}

}  // namespace

double round12(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::strtod(buf, nullptr);
}

Json element_json(const BurnsideRing& ring, const BurnsideElement& a) {
  Json out = Json::array();
  for (const auto& [id, c] : a.terms())
    out.push_back(Json{{"name", ring.lattice().cls(id).name}, {"coefficient", coefficient_json(c)}});
  return out;
}

BurnsideElement element_from_json(const BurnsideRing& ring, const Json& j) {
  BurnsideElement out;
  for (const auto& t : j) {
    const auto id = ring.lattice().find_required(t.at("name").get<std::string>());
    const auto& c = t.at("coefficient");
    out.add(id, c.is_string() ? Integer(c.get<std::string>()) : Integer(c.get<long long>()));
  }
  return out;
}

Json group_info_json(const Problem& p) {
  Json d;
  d["verb"] = "group-info";
  d["group"] = group_header(p);
  const auto& lat = p.lattice();
  Json classes = Json::array();
  for (std::size_t h = 0; h < lat.size(); ++h) {
    const auto& c = lat.cls(h);
    classes.push_back(Json{{"id", h + 1},
                           {"name", c.name},
                           {"order", c.order},
                           {"conjugates", c.conjugates.size()},
                           {"weyl_order", c.weyl_order},
                           {"profile", c.profile}});
  }
  d["lattice"] = std::move(classes);
  Json irr = Json::array();
  for (const auto& r : p.irreps().all()) {
    std::vector<double> chi;
    for (double x : r.rep.character) chi.push_back(round12(x));
    irr.push_back(Json{{"name", r.name}, {"dim", r.rep.dim}, {"character", chi}});
  }
  d["irreps"] = std::move(irr);
  return d;
}

Json basic_degrees_json(const Problem& p) {
  Json d;
  d["verb"] = "basic-degrees";
  d["group"] = group_header(p);
  Json list = Json::array();
  for (const auto& r : p.irreps().all()) {
    if (r.label.i == 0 && r.label.l == 0 && r.label.sign == 1) continue;  // trivial
    list.push_back(Json{{"irrep", r.name}, {"degree", element_json(p.ring(), p.degrees().basic(r.label))}});
  }
  d["degrees"] = std::move(list);
  return d;
}

Json burnside_mul_json(const Problem& p, const std::string& lhs, const std::string& rhs) {
  const auto& lat = p.lattice();
  const auto h = lat.find(lhs);
  const auto k = lat.find(rhs);
  if (!h) throw Error(ErrorKind::InvalidParameter, "unknown subgroup class '" + lhs + "'");
  if (!k) throw Error(ErrorKind::InvalidParameter, "unknown subgroup class '" + rhs + "'");
  Json d;
  d["verb"] = "burnside-mul";
  d["group"] = group_header(p);
  d["lhs"] = lhs;
  d["rhs"] = rhs;
  d["product"] = element_json(p.ring(), p.ring().generator_product(*h, *k));
  return d;
}

Json existence_json(const Problem& p, const DegreeReport& r) {
  Json d;
  d["verb"] = "existence";
  d["group"] = group_header(p);
  d["spectrum"] = spectrum_json(r.table);
  Json neg = Json::array();
  std::map<IrrepLabel, unsigned long> factors;
  for (const auto& n : r.table.negative) {
    const auto& e = r.table.eigenvalues[n.mu_index];
    Json x{{"j", n.j}, {"mu", round12(e.mu)}, {"lambda", round12(n.lambda)}};
    if (n.exact) x["exact"] = rational_string(*n.exact);
    Json content = Json::array();
    for (const auto& [label, mult] : eigenspace_content(n.j, e, p.m())) {
      content.push_back(irrep_label_json(p, label, mult));
      factors[label] += mult;
    }
    x["content"] = std::move(content);
    neg.push_back(std::move(x));
  }
  d["negative"] = std::move(neg);
  if (!r.table.rho.empty()) {
    Json eta, rho;
    for (const auto& [i, v] : r.table.eta) eta[std::to_string(i)] = v;
    for (const auto& [i, v] : r.table.rho) rho[std::to_string(i)] = v;
    d["eta"] = std::move(eta);
    d["rho"] = std::move(rho);
  }
  Json fac = Json::array();
  for (const auto& [label, mult] : factors) fac.push_back(irrep_label_json(p, label, mult));
  d["factors"] = std::move(fac);
  d["degree"] = element_json(p.ring(), r.degree);
  d["ambient_mode"] = to_string(r.mode);
  Json amb = Json::array();
  for (const auto& l : r.ambient) amb.push_back(p.irreps().name(l));
  d["ambient"] = std::move(amb);
  Json maxes = Json::array();
  for (std::size_t h : r.maximal_orbit_types) {
    const auto& cls = p.lattice().cls(h);
    SolutionGuarantee g;
    for (const auto& x : r.guarantees)
      if (x.orbit_type == h) g = x;
    maxes.push_back(Json{{"name", cls.name},
                         {"coefficient", coefficient_json(r.degree.coefficient(h))},
                         {"orbit_size", p.symmetry().order() / cls.order},
                         {"nonconstant", !p.lattice().leq(p.dm_class(), h)},
                         {"minimal_period_exceeds_base", g.orbit_type == h && g.minimal_period_exceeds_base}});
  }
  d["maximal"] = std::move(maxes);
  d["total_solutions"] = r.total_solutions;
  d["period_over_pi"] = 2 * p.m();
  if (p.symmetry().gamma->order() == 1) {
    Json preds = Json::array();
    for (const auto& pr : parity_predictions(r.table))
      preds.push_back(Json{{"rule", pr.rule}, {"index", pr.index}, {"rho", pr.rho},
                           {"require_all", pr.require_all}, {"names", pr.names}});
    d["parity_predictions"] = std::move(preds);
  }
  return d;
}

Json bifurcation_json(const Problem& p, const BifurcationReport& r) {
  Json d;
  d["verb"] = "bifurcation";
  d["group"] = group_header(p);
  d["spectrum"] = spectrum_json(r.table);
  d["window"] = {round12(r.window.first), round12(r.window.second)};
  const auto& table = r.table;
  Json pts = Json::array();
  for (const auto& b : r.points) {
    Json x{{"alpha", round12(b.at.alpha)}};
    if (b.at.exact) x["exact"] = rational_string(*b.at.exact);
    Json cr = Json::array();
    for (const auto& c : b.at.crossings)
      cr.push_back(Json{{"j", c.j}, {"mu", round12(table.eigenvalues[c.mu_index].mu)}});
    x["crossings"] = std::move(cr);
    x["simple"] = b.at.simple;
    Json crossed = Json::array();
    for (const auto& [label, mult] : b.at.crossing_multiplicities) crossed.push_back(irrep_label_json(p, label, mult));
    x["crossed"] = std::move(crossed);
    x["omega"] = element_json(p.ring(), b.omega);
    x["nonzero"] = b.nonzero;
    x["odd_shortcut"] = b.odd_shortcut_applies;
    Json br = Json::array();
    for (const auto& g : b.branch_types)
      br.push_back(Json{{"name", g.name}, {"coefficient", coefficient_json(g.coefficient)},
                        {"maximal", g.maximal}, {"orbit_size", g.orbit_size}});
    x["branch_types"] = std::move(br);
    pts.push_back(std::move(x));
  }
  d["points"] = std::move(pts);
  return d;
}

std::string render_text(const Json& doc) {
  const auto verb = doc.at("verb").get<std::string>();
  if (verb == "group-info") return group_info_text(doc);
  if (verb == "basic-degrees") return basic_degrees_text(doc);
  if (verb == "burnside-mul") return burnside_mul_text(doc);
  if (verb == "existence") return existence_text(doc);
  if (verb == "bifurcation") return bifurcation_text(doc);
  throw Error(ErrorKind::InvalidParameter, "unknown report verb " + verb);
}

}  // namespace eqdeg
