#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "eqdeg/group.hpp"

namespace eqdeg {

// Membership bitset over the element ids of one group.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}

  std::size_t universe() const { return universe_; }
  bool contains(ElementId g) const { return (words_[g >> 6] >> (g & 63)) & 1u; }
  void insert(ElementId g) { words_[g >> 6] |= std::uint64_t{1} << (g & 63); }
  std::size_t count() const;
  bool is_subset_of(const ElementSet& other) const;
  std::size_t intersection_count(const ElementSet& other) const;
  std::vector<ElementId> elements() const;
  const std::vector<std::uint64_t>& words() const { return words_; }

  bool operator==(const ElementSet& o) const { return words_ == o.words_; }
  bool operator<(const ElementSet& o) const;  // canonical: compare from element 0 upward

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const noexcept;
};

using Subgroup = ElementSet;

Subgroup generate(const FiniteGroup& g, const std::vector<ElementId>& gens);
Subgroup conjugate(const FiniteGroup& g, const Subgroup& h, ElementId by);
Subgroup normalizer(const FiniteGroup& g, const Subgroup& h);
bool is_subgroup(const FiniteGroup& g, const ElementSet& s);
std::vector<int> order_profile(const FiniteGroup& g, const Subgroup& h);

// Every subgroup, in discovery order (no duplicates).
std::vector<Subgroup> enumerate_subgroups(const FiniteGroup& g, std::size_t cap = kDefaultOrderCap);

// Deterministic conjugacy-invariant name; see naming.cpp for the grammar.
std::string canonical_name(const FiniteGroup& g, const Subgroup& h);

struct ConjugacyClass {
  std::size_t id = 0;
  std::string name;
  std::size_t order = 0;
  std::vector<int> profile;  // sorted element orders
  Subgroup representative;
  std::vector<Subgroup> conjugates;
  Subgroup normalizer;
  std::size_t weyl_order = 0;
};

class SubgroupLattice {
 public:
  static SubgroupLattice build(GroupPtr g, std::size_t cap = kDefaultOrderCap);

  const FiniteGroup& group() const { return *group_; }
  const GroupPtr& group_ptr() const { return group_; }
  std::size_t size() const { return classes_.size(); }
  const ConjugacyClass& cls(std::size_t id) const { return classes_[id]; }
  const std::vector<ConjugacyClass>& classes() const { return classes_; }

  // (L) <= (H)
  bool leq(std::size_t l, std::size_t h) const { return n_count(l, h) > 0; }
  // Number of conjugates of H's representative class that contain rep(L).
  long n_count(std::size_t l, std::size_t h) const { return n_[l * classes_.size() + h]; }
  // Classes (H) > (L) with nothing strictly between.
  const std::vector<std::size_t>& covers(std::size_t l) const { return covers_[l]; }

  std::size_t bottom() const { return 0; }
  std::size_t top() const { return classes_.size() - 1; }
  std::size_t classify(const Subgroup& h) const;
  std::optional<std::size_t> find(std::string_view name) const;
  std::size_t find_required(std::string_view name) const;
  std::size_t total_subgroups() const { return by_set_.size(); }

 private:
  GroupPtr group_;
  std::vector<ConjugacyClass> classes_;
  std::vector<long> n_;
  std::vector<std::vector<std::size_t>> covers_;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> by_set_;
};

}  // namespace eqdeg
