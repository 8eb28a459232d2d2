#include "eqdeg/lattice.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <unordered_set>

#include "eqdeg/error.hpp"
#include "eqdeg/simd.hpp"

namespace eqdeg {

std::size_t ElementSet::count() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool ElementSet::is_subset_of(const ElementSet& o) const {
  return simd::active().is_subset(words_.data(), o.words_.data(), words_.size());
}

std::size_t ElementSet::intersection_count(const ElementSet& o) const {
  return simd::active().and_count(words_.data(), o.words_.data(), words_.size());
}

std::vector<ElementId> ElementSet::elements() const {
  std::vector<ElementId> out;
  for (std::size_t w = 0; w < words_.size(); ++w)
    for (auto bits = words_[w]; bits; bits &= bits - 1)
      out.push_back(static_cast<ElementId>(w * 64 + std::countr_zero(bits)));
  return out;
}

bool ElementSet::operator<(const ElementSet& o) const { return words_ < o.words_; }

std::size_t ElementSetHash::operator()(const ElementSet& s) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto w : s.words()) {
    h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

Subgroup generate(const FiniteGroup& g, const std::vector<ElementId>& gens) {
  Subgroup s(g.order());
  std::vector<ElementId> queue{g.identity()};
  s.insert(g.identity());
  for (std::size_t head = 0; head < queue.size(); ++head) {
    ElementId x = queue[head];
    for (auto y : gens) {
      ElementId z = g.mul(x, y);
      if (!s.contains(z)) {
        s.insert(z);
        queue.push_back(z);
      }
    }
  }
  return s;
}

Subgroup conjugate(const FiniteGroup& g, const Subgroup& h, ElementId by) {
  Subgroup out(g.order());
  for (auto x : h.elements()) out.insert(g.conj(by, x));
  return out;
}

Subgroup normalizer(const FiniteGroup& g, const Subgroup& h) {
  Subgroup n(g.order());
  for (ElementId x = 0; x < g.order(); ++x)
    if (conjugate(g, h, x) == h) n.insert(x);
  return n;
}

bool is_subgroup(const FiniteGroup& g, const ElementSet& s) {
  auto el = s.elements();
  if (!s.contains(g.identity())) return false;
  for (auto a : el)
    for (auto b : el)
      if (!s.contains(g.mul(a, g.inv(b)))) return false;
  return true;
}

std::vector<int> order_profile(const FiniteGroup& g, const Subgroup& h) {
  std::vector<int> p;
  for (auto x : h.elements()) p.push_back(g.element_order(x));
  std::sort(p.begin(), p.end());
  return p;
}

std::vector<Subgroup> enumerate_subgroups(const FiniteGroup& g, std::size_t cap) {
  if (g.order() > cap)
    throw Error(ErrorKind::SizeLimit, "group order " + std::to_string(g.order()) +
                                          " exceeds cap " + std::to_string(cap));
  struct Entry {
    Subgroup set;
    std::vector<ElementId> gens;
  };
  std::vector<Entry> found;
  std::unordered_set<ElementSet, ElementSetHash> seen;
  Subgroup trivial(g.order());
  trivial.insert(g.identity());
  found.push_back({trivial, {}});
  seen.insert(trivial);
  // Extend each known subgroup S by one element per left coset of S outside S;
  // <S, g> = <S, gs> for s in S, so one representative per coset suffices.
  for (std::size_t head = 0; head < found.size(); ++head) {
    const Subgroup s = found[head].set;
    const auto gens = found[head].gens;
    const auto members = s.elements();
    ElementSet done = s;
    for (ElementId x = 0; x < g.order(); ++x) {
      if (done.contains(x)) continue;
      for (auto y : members) done.insert(g.mul(x, y));
      auto next_gens = gens;
      next_gens.push_back(x);
      Subgroup t = generate(g, next_gens);
      if (seen.insert(t).second) found.push_back({std::move(t), std::move(next_gens)});
    }
  }
  std::vector<Subgroup> out;
  out.reserve(found.size());
  for (auto& e : found) out.push_back(std::move(e.set));
  return out;
}

SubgroupLattice SubgroupLattice::build(GroupPtr gp, std::size_t cap) {
  const FiniteGroup& g = *gp;
  auto all = enumerate_subgroups(g, cap);
  std::unordered_set<ElementSet, ElementSetHash> assigned;
  std::vector<ConjugacyClass> classes;
  for (const auto& h : all) {
    if (assigned.count(h)) continue;
    ConjugacyClass c;
    std::set<ElementSet> conj;
    for (ElementId x = 0; x < g.order(); ++x) conj.insert(conjugate(g, h, x));
    c.conjugates.assign(conj.begin(), conj.end());
    for (const auto& k : c.conjugates) assigned.insert(k);
    c.representative = c.conjugates.front();
    c.order = h.count();
    c.profile = order_profile(g, h);
    c.normalizer = normalizer(g, c.representative);
    if (c.normalizer.count() * c.conjugates.size() != g.order())
      throw Error(ErrorKind::InternalConsistency, "orbit-stabilizer failure for subgroup class");
    c.weyl_order = c.normalizer.count() / c.order;
    c.name = canonical_name(g, c.representative);
    classes.push_back(std::move(c));
  }
  std::sort(classes.begin(), classes.end(), [](const ConjugacyClass& a, const ConjugacyClass& b) {
    if (a.order != b.order) return a.order < b.order;
    if (a.profile != b.profile) return a.profile < b.profile;
    if (a.name != b.name) return a.name < b.name;
    return a.representative < b.representative;
  });
  std::map<std::string, int> seen_names;
  for (auto& c : classes) {
    int k = ++seen_names[c.name];
    if (k > 1) c.name += "#" + std::to_string(k);
  }

  SubgroupLattice lat;
  lat.group_ = std::move(gp);
  const std::size_t n = classes.size();
  for (std::size_t i = 0; i < n; ++i) {
    classes[i].id = i;
    for (const auto& k : classes[i].conjugates) lat.by_set_.emplace(k, i);
  }
  lat.n_.assign(n * n, 0);
  for (std::size_t h = 0; h < n; ++h)
    for (const auto& conj : classes[h].conjugates)
      for (std::size_t l = 0; l <= h; ++l) {
        if (conj.count() % classes[l].order != 0) continue;
        if (classes[l].representative.is_subset_of(conj)) ++lat.n_[l * n + h];
      }
  lat.covers_.assign(n, {});
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t h = l + 1; h < n; ++h) {
      if (!lat.n_[l * n + h]) continue;
      bool direct = true;
      for (std::size_t m = l + 1; m < h && direct; ++m)
        if (lat.n_[l * n + m] && lat.n_[m * n + h]) direct = false;
      if (direct) lat.covers_[l].push_back(h);
    }
  lat.classes_ = std::move(classes);
  return lat;
}

std::size_t SubgroupLattice::classify(const Subgroup& h) const {
  auto it = by_set_.find(h);
  if (it == by_set_.end()) throw Error(ErrorKind::InternalConsistency, "set is not a subgroup");
  return it->second;
}

std::optional<std::size_t> SubgroupLattice::find(std::string_view name) const {
  for (const auto& c : classes_)
    if (c.name == name) return c.id;
  return std::nullopt;
}

std::size_t SubgroupLattice::find_required(std::string_view name) const {
  if (auto id = find(name)) return *id;
  throw Error(ErrorKind::InvalidParameter, "no subgroup class named " + std::string(name));
}

}  // namespace eqdeg
