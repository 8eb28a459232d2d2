#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace eqdeg {

using ElementId = std::uint32_t;

inline constexpr std::size_t kDefaultOrderCap = 400;

enum class GroupKind { Trivial, Cyclic, Dihedral, Sign, Permutation, Product };

class FiniteGroup;

// Coordinates of every element as rot^a * refl^b. Present for cyclic and
// dihedral groups and for permutation groups recognised as one of those.
// The naming code relies only on this frame, never on how ids were assigned.
struct DihedralFrame {
  int n = 1;
  bool cyclic = true;
  std::vector<int> rot;
  std::vector<int> refl;
};

struct GroupStructure {
  GroupKind kind = GroupKind::Trivial;
  int n = 0;  // cyclic / dihedral parameter, permutation degree
  std::vector<std::vector<int>> images;  // permutation images, 0-based
  std::shared_ptr<const FiniteGroup> left, right;
  std::optional<DihedralFrame> frame;
};

class FiniteGroup {
 public:
  FiniteGroup(std::vector<ElementId> table, std::vector<std::string> labels,
              GroupStructure structure);

  std::size_t order() const { return n_; }
  ElementId identity() const { return identity_; }
  ElementId mul(ElementId a, ElementId b) const { return table_[a * n_ + b]; }
  ElementId inv(ElementId a) const { return inverse_[a]; }
  ElementId conj(ElementId g, ElementId h) const { return mul(mul(g, h), inverse_[g]); }
  int element_order(ElementId a) const { return orders_[a]; }
  const std::string& label(ElementId a) const { return labels_[a]; }
  const GroupStructure& structure() const { return structure_; }
  GroupKind kind() const { return structure_.kind; }

  // Products only: id = a * |right| + b.
  ElementId left_of(ElementId g) const;
  ElementId right_of(ElementId g) const;
  ElementId pair(ElementId a, ElementId b) const;

  bool is_abelian() const;
  // Exhaustive check of the group axioms; returns false on the first failure.
  bool verify_axioms() const;

 private:
  std::size_t n_;
  std::vector<ElementId> table_;
  std::vector<ElementId> inverse_;
  std::vector<int> orders_;
  std::vector<std::string> labels_;
  ElementId identity_ = 0;
  GroupStructure structure_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

struct PermutationAction {
  int degree = 0;
  std::vector<std::vector<int>> images;  // per element, 0-based, g maps i to images[g][i]
};

GroupPtr make_trivial_group();
GroupPtr make_cyclic(int n);
GroupPtr make_dihedral(int n);
GroupPtr make_sign_group();

struct PermutationGroup {
  GroupPtr group;
  PermutationAction action;
};

// Generators are 1-based images: gens[g][i-1] is the image of i.
PermutationGroup make_permutation_group(int k, const std::vector<std::vector<int>>& generators,
                                        std::size_t cap = kDefaultOrderCap);

// Standard action of D_n on n points: rotation i -> i+1, reflection fixes point 1.
PermutationGroup dihedral_permutation_group(int n);

GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b,
                        std::size_t cap = kDefaultOrderCap);

// Parses "(1,2,3)(4,5)" or "(1 2 3)" cycle notation into 1-based images.
std::vector<int> parse_cycles(const std::string& text, int k);

std::string cycle_label(const std::vector<int>& zero_based);

}  // namespace eqdeg
