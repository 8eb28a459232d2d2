#include "eqdeg/symmetry.hpp"

#include "eqdeg/error.hpp"

namespace eqdeg {

const char* to_string(Layout layout) {
  return layout == Layout::GammaFirst ? "gamma_first" : "dm_first";
}

Layout parse_layout(const std::string& text) {
  if (text == "gamma_first") return Layout::GammaFirst;
  if (text == "dm_first") return Layout::DmFirst;
  throw Error(ErrorKind::Config, "unknown layout '" + text + "' (expected gamma_first or dm_first)");
}

ElementId SymmetryGroup::compose(ElementId g, ElementId d, ElementId s) const {
  if (gamma->order() == 1) return group->pair(d, s);
  const FiniteGroup& inner = *group->structure().right;
  if (layout == Layout::GammaFirst) return group->pair(g, inner.pair(d, s));
  return group->pair(d, inner.pair(g, s));
}

SymmetryGroup make_symmetry_group(GroupPtr gamma, std::optional<PermutationAction> action, int m,
                                  Layout layout, std::size_t cap) {
  if (m < 1) throw Error(ErrorKind::InvalidParameter, "m must be positive");
  SymmetryGroup s;
  s.m = m;
  s.layout = layout;
  s.gamma = std::move(gamma);
  s.dm = make_dihedral(m);
  s.sign = make_sign_group();
  s.action = std::move(action);
  const std::size_t total = s.gamma->order() * s.dm->order() * 2;
  if (total > cap)
    throw Error(ErrorKind::SizeLimit, "group order " + std::to_string(total) + " exceeds cap " +
                                          std::to_string(cap));
  s.parts.resize(total);
  if (s.gamma->order() == 1) {
    // No Gamma factor at all, so names read D_m x Z_2 directly.
    s.group = direct_product(s.dm, s.sign, cap);
    for (ElementId x = 0; x < total; ++x)
      s.parts[x] = {0, s.group->left_of(x), s.group->right_of(x)};
    return s;
  }
  if (layout == Layout::GammaFirst)
    s.group = direct_product(s.gamma, direct_product(s.dm, s.sign, cap), cap);
  else
    s.group = direct_product(s.dm, direct_product(s.gamma, s.sign, cap), cap);
  const FiniteGroup& inner = *s.group->structure().right;
  for (ElementId x = 0; x < s.group->order(); ++x) {
    ElementId outer = s.group->left_of(x), rest = s.group->right_of(x);
    ElementId mid = inner.left_of(rest), sg = inner.right_of(rest);
    s.parts[x] = layout == Layout::GammaFirst ? SymmetryGroup::Parts{outer, mid, sg}
                                              : SymmetryGroup::Parts{mid, outer, sg};
  }
  return s;
}

}  // namespace eqdeg
