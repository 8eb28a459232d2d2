#pragma once

#include <optional>

#include "eqdeg/group.hpp"

namespace eqdeg {

// Factor order inside G. Both realise Gamma x D_m x Z_2; they differ only in
// which factor the amalgamated names put on the left.
enum class Layout { GammaFirst, DmFirst };

const char* to_string(Layout layout);
Layout parse_layout(const std::string& text);

struct SymmetryGroup {
  struct Parts {
    ElementId gamma, dm, sign;  // sign: 0 is +1, 1 is -1
  };

  int m = 0;
  Layout layout = Layout::GammaFirst;
  GroupPtr gamma, dm, sign, group;
  std::optional<PermutationAction> action;  // Gamma acting on R^k
  std::vector<Parts> parts;                 // indexed by element of group

  ElementId compose(ElementId gamma_el, ElementId dm_el, ElementId sign_el) const;
  std::size_t order() const { return group->order(); }
};

SymmetryGroup make_symmetry_group(GroupPtr gamma, std::optional<PermutationAction> action, int m,
                                  Layout layout, std::size_t cap = kDefaultOrderCap);

}  // namespace eqdeg
