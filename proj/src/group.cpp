#include "eqdeg/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "eqdeg/error.hpp"

namespace eqdeg {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidParameter: return "invalid-parameter";
    case ErrorKind::SizeLimit: return "size-limit";
    case ErrorKind::InternalConsistency: return "internal-consistency";
    case ErrorKind::NumericConsistency: return "numeric-consistency";
    case ErrorKind::SymmetryViolation: return "symmetry-violation";
    case ErrorKind::Nondegeneracy: return "nondegeneracy";
    case ErrorKind::DegenerateInput: return "degenerate-input";
    case ErrorKind::UnsupportedGroup: return "unsupported-group";
    case ErrorKind::AmbiguousCrossing: return "ambiguous-crossing";
    case ErrorKind::Config: return "config";
  }
  return "unknown";
}

FiniteGroup::FiniteGroup(std::vector<ElementId> table, std::vector<std::string> labels,
                         GroupStructure structure)
    : n_(labels.size()),
      table_(std::move(table)),
      labels_(std::move(labels)),
      structure_(std::move(structure)) {
  if (table_.size() != n_ * n_)
    throw Error(ErrorKind::InternalConsistency, "multiplication table has wrong size");
  bool found = false;
  for (ElementId e = 0; e < n_ && !found; ++e) {
    bool ok = true;
    for (ElementId g = 0; g < n_ && ok; ++g) ok = mul(e, g) == g && mul(g, e) == g;
    if (ok) {
      identity_ = e;
      found = true;
    }
  }
  if (!found) throw Error(ErrorKind::InternalConsistency, "no identity element");
  inverse_.assign(n_, 0);
  orders_.assign(n_, 0);
  for (ElementId g = 0; g < n_; ++g) {
    for (ElementId h = 0; h < n_; ++h)
      if (mul(g, h) == identity_) inverse_[g] = h;
    ElementId x = g;
    int k = 1;
    while (x != identity_) {
      x = mul(x, g);
      ++k;
    }
    orders_[g] = k;
  }
}

ElementId FiniteGroup::left_of(ElementId g) const {
  return static_cast<ElementId>(g / structure_.right->order());
}
ElementId FiniteGroup::right_of(ElementId g) const {
  return static_cast<ElementId>(g % structure_.right->order());
}
ElementId FiniteGroup::pair(ElementId a, ElementId b) const {
  return static_cast<ElementId>(a * structure_.right->order() + b);
}

bool FiniteGroup::is_abelian() const {
  for (ElementId a = 0; a < n_; ++a)
    for (ElementId b = a + 1; b < n_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

bool FiniteGroup::verify_axioms() const {
  for (ElementId g = 0; g < n_; ++g) {
    if (mul(inv(g), g) != identity_ || mul(g, inv(g)) != identity_) return false;
    std::vector<bool> row(n_, false);
    for (ElementId h = 0; h < n_; ++h) {
      ElementId x = mul(g, h);
      if (x >= n_ || row[x]) return false;
      row[x] = true;
    }
  }
  for (ElementId a = 0; a < n_; ++a)
    for (ElementId b = 0; b < n_; ++b) {
      ElementId ab = mul(a, b);
      for (ElementId c = 0; c < n_; ++c)
        if (mul(ab, c) != mul(a, mul(b, c))) return false;
    }
  return true;
}

namespace {

std::string power_label(const char* sym, int a) {
  if (a == 0) return "";
  if (a == 1) return sym;
  return std::string(sym) + "^" + std::to_string(a);
}

DihedralFrame cyclic_frame(int n) {
  DihedralFrame f;
  f.n = n;
  f.cyclic = true;
  f.rot.resize(n);
  std::iota(f.rot.begin(), f.rot.end(), 0);
  f.refl.assign(n, 0);
  return f;
}

// Recognise a cyclic or dihedral group from its table; ids are arbitrary.
std::optional<DihedralFrame> detect_frame(const FiniteGroup& g) {
  const auto n = static_cast<int>(g.order());
  auto powers = [&](ElementId x) {
    std::vector<ElementId> p{g.identity()};
    for (ElementId y = x; y != g.identity(); y = g.mul(y, x)) p.push_back(y);
    return p;
  };
  for (ElementId x = 0; x < g.order(); ++x) {
    if (g.element_order(x) != n) continue;
    DihedralFrame f;
    f.n = n;
    f.cyclic = true;
    f.rot.assign(n, 0);
    f.refl.assign(n, 0);
    auto p = powers(x);
    for (int a = 0; a < n; ++a) f.rot[p[a]] = a;
    return f;
  }
  if (n % 2 != 0) return std::nullopt;
  const int half = n / 2;
  for (ElementId r = 0; r < g.order(); ++r) {
    if (g.element_order(r) != half) continue;
    auto p = powers(r);
    std::vector<bool> in_rot(g.order(), false);
    for (auto y : p) in_rot[y] = true;
    for (ElementId s = 0; s < g.order(); ++s) {
      if (in_rot[s] || g.element_order(s) != 2) continue;
      if (g.mul(g.mul(s, r), s) != g.inv(r)) continue;
      DihedralFrame f;
      f.n = half;
      f.cyclic = false;
      f.rot.assign(n, 0);
      f.refl.assign(n, 0);
      for (int a = 0; a < half; ++a) {
        f.rot[p[a]] = a;
        ElementId y = g.mul(p[a], s);
        f.rot[y] = a;
        f.refl[y] = 1;
      }
      return f;
    }
  }
  return std::nullopt;
}

void check_cap(std::size_t order, std::size_t cap) {
  if (order > cap)
    throw Error(ErrorKind::SizeLimit, "group order " + std::to_string(order) +
                                          " exceeds cap " + std::to_string(cap));
}

}  // namespace

GroupPtr make_trivial_group() {
  GroupStructure s;
  s.kind = GroupKind::Trivial;
  s.n = 1;
  s.frame = cyclic_frame(1);
  return std::make_shared<FiniteGroup>(std::vector<ElementId>{0}, std::vector<std::string>{"e"},
                                       std::move(s));
}

GroupPtr make_cyclic(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidParameter, "cyclic order must be positive");
  std::vector<ElementId> t(static_cast<std::size_t>(n) * n);
  std::vector<std::string> labels(n);
  for (int a = 0; a < n; ++a) {
    labels[a] = a == 0 ? "e" : power_label("c", a);
    for (int b = 0; b < n; ++b) t[a * n + b] = static_cast<ElementId>((a + b) % n);
  }
  GroupStructure s;
  s.kind = n == 1 ? GroupKind::Trivial : GroupKind::Cyclic;
  s.n = n;
  s.frame = cyclic_frame(n);
  return std::make_shared<FiniteGroup>(std::move(t), std::move(labels), std::move(s));
}

GroupPtr make_dihedral(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidParameter, "dihedral parameter must be positive");
  // id = a + n*b  <->  gamma^a kappa^b, with kappa gamma = gamma^-1 kappa.
  const int order = 2 * n;
  std::vector<ElementId> t(static_cast<std::size_t>(order) * order);
  std::vector<std::string> labels(order);
  DihedralFrame f;
  f.n = n;
  f.cyclic = false;
  f.rot.resize(order);
  f.refl.resize(order);
  for (int x = 0; x < order; ++x) {
    int a = x % n, b = x / n;
    f.rot[x] = a;
    f.refl[x] = b;
    std::string l = power_label("γ", a) + (b ? "κ" : "");
    labels[x] = l.empty() ? "e" : l;
    for (int y = 0; y < order; ++y) {
      int c = y % n, d = y / n;
      int rot = b ? (a - c) % n : (a + c) % n;
      if (rot < 0) rot += n;
      t[x * order + y] = static_cast<ElementId>(rot + n * ((b + d) % 2));
    }
  }
  GroupStructure s;
  s.kind = GroupKind::Dihedral;
  s.n = n;
  s.frame = std::move(f);
  return std::make_shared<FiniteGroup>(std::move(t), std::move(labels), std::move(s));
}

GroupPtr make_sign_group() {
  GroupStructure s;
  s.kind = GroupKind::Sign;
  s.n = 2;
  s.frame = cyclic_frame(2);
  return std::make_shared<FiniteGroup>(std::vector<ElementId>{0, 1, 1, 0},
                                       std::vector<std::string>{"+1", "-1"}, std::move(s));
}

std::string cycle_label(const std::vector<int>& p) {
  std::string out;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == static_cast<int>(i)) continue;
    out += "(";
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) out += ",";
      out += std::to_string(j + 1);
      first = false;
      j = static_cast<std::size_t>(p[j]);
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

std::vector<int> parse_cycles(const std::string& text, int k) {
  std::vector<int> img(k);
  std::iota(img.begin(), img.end(), 1);
  std::vector<bool> used(k + 1, false);
  std::size_t i = 0;
  auto fail = [&](const std::string& why) {
    throw Error(ErrorKind::Config, "bad permutation '" + text + "': " + why);
  };
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    if (text[i] != '(') fail("expected '('");
    ++i;
    std::vector<int> cyc;
    while (i < text.size() && text[i] != ')') {
      if (text[i] == ',' || std::isspace(static_cast<unsigned char>(text[i]))) {
        ++i;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) fail("unexpected character");
      int v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        v = v * 10 + (text[i++] - '0');
      if (v < 1 || v > k) fail("point out of range");
      if (used[v]) fail("point repeated");
      used[v] = true;
      cyc.push_back(v);
    }
    if (i >= text.size()) fail("unclosed cycle");
    ++i;
    for (std::size_t c = 0; c < cyc.size(); ++c) img[cyc[c] - 1] = cyc[(c + 1) % cyc.size()];
  }
  return img;
}

PermutationGroup make_permutation_group(int k, const std::vector<std::vector<int>>& generators,
                                        std::size_t cap) {
  if (k < 1) throw Error(ErrorKind::InvalidParameter, "permutation degree must be positive");
  using Perm = std::vector<int>;
  std::vector<Perm> gens;
  for (const auto& g : generators) {
    if (static_cast<int>(g.size()) != k)
      throw Error(ErrorKind::InvalidParameter, "generator has wrong degree");
    Perm p(k);
    std::vector<bool> hit(k, false);
    for (int i = 0; i < k; ++i) {
      int v = g[i] - 1;
      if (v < 0 || v >= k || hit[v])
        throw Error(ErrorKind::InvalidParameter, "generator is not a bijection");
      hit[v] = true;
      p[i] = v;
    }
    gens.push_back(std::move(p));
  }
  // p*q means "apply q, then p", so image(gh) = image(g) o image(h).
  auto compose = [k](const Perm& p, const Perm& q) {
    Perm r(k);
    for (int i = 0; i < k; ++i) r[i] = p[q[i]];
    return r;
  };
  Perm id(k);
  std::iota(id.begin(), id.end(), 0);
  std::vector<Perm> elems{id};
  std::map<Perm, ElementId> index{{id, 0}};
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (const auto& g : gens) {
      Perm x = compose(elems[head], g);
      if (index.emplace(x, static_cast<ElementId>(elems.size())).second) {
        elems.push_back(std::move(x));
        check_cap(elems.size(), cap);
      }
    }
  }
  const std::size_t n = elems.size();
  std::vector<ElementId> t(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a * n + b] = index.at(compose(elems[a], elems[b]));
  std::vector<std::string> labels(n);
  for (std::size_t a = 0; a < n; ++a) labels[a] = a == 0 ? "e" : cycle_label(elems[a]);
  GroupStructure s;
  s.kind = n == 1 ? GroupKind::Trivial : GroupKind::Permutation;
  s.n = k;
  s.images = elems;
  auto group = std::make_shared<FiniteGroup>(t, labels, s);
  if (auto f = detect_frame(*group)) {
    s.frame = std::move(f);
    group = std::make_shared<FiniteGroup>(std::move(t), std::move(labels), std::move(s));
  }
  return {group, PermutationAction{k, std::move(elems)}};
}

PermutationGroup dihedral_permutation_group(int n) {
  if (n < 3) throw Error(ErrorKind::InvalidParameter, "dihedral action needs n >= 3");
  auto g = make_dihedral(n);
  PermutationAction act;
  act.degree = n;
  act.images.resize(g->order());
  for (int x = 0; x < static_cast<int>(g->order()); ++x) {
    int a = x % n, b = x / n;
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) {
      int j = b ? (n - i) % n : i;  // kappa first: i -> -i
      img[i] = (j + a) % n;
    }
    act.images[x] = std::move(img);
  }
  return {g, std::move(act)};
}

GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b, std::size_t cap) {
  const std::size_t na = a->order(), nb = b->order(), n = na * nb;
  check_cap(n, cap);
  std::vector<ElementId> t(n * n);
  std::vector<std::string> labels(n);
  for (std::size_t x = 0; x < n; ++x) {
    auto xa = static_cast<ElementId>(x / nb), xb = static_cast<ElementId>(x % nb);
    const auto& lb = b->label(xb);
    std::string inner = b->kind() == GroupKind::Product ? lb.substr(1, lb.size() - 2) : lb;
    labels[x] = "(" + a->label(xa) + ", " + inner + ")";
    for (std::size_t y = 0; y < n; ++y) {
      auto ya = static_cast<ElementId>(y / nb), yb = static_cast<ElementId>(y % nb);
      t[x * n + y] = static_cast<ElementId>(a->mul(xa, ya) * nb + b->mul(xb, yb));
    }
  }
  GroupStructure s;
  s.kind = GroupKind::Product;
  s.left = a;
  s.right = b;
  return std::make_shared<FiniteGroup>(std::move(t), std::move(labels), std::move(s));
}

}  // namespace eqdeg
