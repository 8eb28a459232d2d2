// Subgroup names.
//
//   cyclic/dihedral groups   Z_d, D_d, tD_d (tilde: reflections of odd index
//                            when n/d is even)
//   K x Z_2 (sign factor)    K^p   contains (e,-1)
//                            K     no twist
//                            K^z   kernel is the rotation part of K
//                            K^d   K cyclic, or kernel dihedral with the
//                                  even-index reflections mapped to +1
//                            K^hd  kernel dihedral, even-index reflections
//                                  mapped to -1 (only when n/|rot K| is odd)
//   A x B (Goursat)          PAxPB when H = PA x PB, otherwise
//                            PA^{NA}x_{Q}^{NB}PB with Q = PA/NA and trivial
//                            kernels omitted
#include <algorithm>

#include "eqdeg/lattice.hpp"

namespace eqdeg {
namespace {

struct FramedInfo {
  std::string name;
  int rotations = 0;
  bool reflections = false;
};

FramedInfo framed_name(const DihedralFrame& f, const std::vector<ElementId>& els) {
  FramedInfo info;
  int min_refl_rot = -1;
  for (auto x : els) {
    if (f.refl[x]) {
      info.reflections = true;
      if (min_refl_rot < 0 || f.rot[x] < min_refl_rot) min_refl_rot = f.rot[x];
    } else {
      ++info.rotations;
    }
  }
  if (!info.reflections) {
    info.name = "Z_" + std::to_string(info.rotations);
    return info;
  }
  const int r = f.n / info.rotations;
  const bool tilde = r % 2 == 0 && min_refl_rot % 2 == 1;
  info.name = (tilde ? "tD_" : "D_") + std::to_string(info.rotations);
  return info;
}

std::string generic_name(const FiniteGroup& g, const std::vector<ElementId>& els) {
  std::vector<int> orders;
  for (auto x : els) orders.push_back(g.element_order(x));
  std::sort(orders.begin(), orders.end());
  std::string s = "G_" + std::to_string(els.size()) + "[";
  for (std::size_t i = 0; i < orders.size(); ++i) s += (i ? "," : "") + std::to_string(orders[i]);
  return s + "]";
}

std::string name_of(const FiniteGroup& g, const std::vector<ElementId>& els);

ElementSet as_set(const FiniteGroup& g, const std::vector<ElementId>& els) {
  ElementSet s(g.order());
  for (auto x : els) s.insert(x);
  return s;
}

// Name of the quotient P/N for N normal in P, both inside g.
std::string quotient_name(const FiniteGroup& g, const std::vector<ElementId>& p,
                          const ElementSet& n) {
  const std::size_t q = p.size() / n.count();
  if (q == 1) return "Z_1";
  auto qorder = [&](ElementId x) {
    std::size_t k = 1;
    for (ElementId y = x; !n.contains(y); y = g.mul(y, x)) ++k;
    return k;
  };
  auto same = [&](ElementId a, ElementId b) { return n.contains(g.mul(g.inv(a), b)); };
  for (auto x : p)
    if (qorder(x) == q) return "Z_" + std::to_string(q);
  if (q % 2 == 0) {
    for (auto x : p) {
      if (qorder(x) != q / 2) continue;
      std::vector<ElementId> pow{g.identity()};
      for (ElementId y = x; pow.size() < q / 2; y = g.mul(y, x)) pow.push_back(y);
      for (auto y : p) {
        bool inside = std::any_of(pow.begin(), pow.end(), [&](ElementId z) { return same(y, z); });
        if (inside || qorder(y) != 2) continue;
        if (same(g.mul(g.mul(y, x), g.inv(y)), g.inv(x))) return "D_" + std::to_string(q / 2);
      }
    }
  }
  return "G_" + std::to_string(q);
}

std::string sign_product_name(const FiniteGroup& g, const std::vector<ElementId>& els) {
  const FiniteGroup& a = *g.structure().left;
  std::vector<ElementId> k, n;
  bool has_neg = false;
  for (auto x : els) {
    ElementId xa = g.left_of(x);
    if (g.right_of(x) == 0) n.push_back(xa);
    else if (xa == a.identity()) has_neg = true;
    k.push_back(xa);
  }
  std::sort(k.begin(), k.end());
  k.erase(std::unique(k.begin(), k.end()), k.end());
  std::string base = name_of(a, k);
  if (has_neg) return base + "^p";
  if (n.size() == k.size()) return base;
  const auto& frame = a.structure().frame;
  if (!frame) return base + "^{" + name_of(a, n) + "}";
  auto kinfo = framed_name(*frame, k);
  auto ninfo = framed_name(*frame, n);
  if (!kinfo.reflections) return base + "^d";
  if (!ninfo.reflections) return base + "^z";
  const int r = frame->n / kinfo.rotations;
  if (r % 2 == 0) return base + "^d";
  for (auto x : k)
    if (frame->refl[x] && frame->rot[x] % 2 == 0)
      return std::find(n.begin(), n.end(), x) != n.end() ? base + "^d" : base + "^hd";
  return base + "^d";
}

std::string goursat_name(const FiniteGroup& g, const std::vector<ElementId>& els) {
  const FiniteGroup& a = *g.structure().left;
  const FiniteGroup& b = *g.structure().right;
  std::vector<ElementId> pa, pb, na, nb;
  for (auto x : els) {
    ElementId xa = g.left_of(x), xb = g.right_of(x);
    pa.push_back(xa);
    pb.push_back(xb);
    if (xb == b.identity()) na.push_back(xa);
    if (xa == a.identity()) nb.push_back(xb);
  }
  for (auto* v : {&pa, &pb}) {
    std::sort(v->begin(), v->end());
    v->erase(std::unique(v->begin(), v->end()), v->end());
  }
  if (na.size() == pa.size()) return name_of(a, pa) + "x" + name_of(b, pb);
  std::string out = name_of(a, pa);
  if (na.size() > 1) out += "^{" + name_of(a, na) + "}";
  out += "x_{" + quotient_name(a, pa, as_set(a, na)) + "}";
  if (nb.size() > 1) out += "^{" + name_of(b, nb) + "}";
  return out + name_of(b, pb);
}

std::string name_of(const FiniteGroup& g, const std::vector<ElementId>& els) {
  const auto& s = g.structure();
  if (s.frame) return framed_name(*s.frame, els).name;
  if (s.kind == GroupKind::Product) {
    if (s.right->kind() == GroupKind::Sign) return sign_product_name(g, els);
    return goursat_name(g, els);
  }
  return generic_name(g, els);
}

}  // namespace

std::string canonical_name(const FiniteGroup& g, const Subgroup& h) {
  return name_of(g, h.elements());
}

}  // namespace eqdeg
