#include "eqdeg/burnside.hpp"

#include <mutex>

#include "eqdeg/error.hpp"

namespace eqdeg {

BurnsideElement BurnsideElement::generator(std::size_t id, Integer coeff) {
  BurnsideElement e;
  e.add(id, coeff);
  return e;
}

Integer BurnsideElement::coefficient(std::size_t id) const {
  auto it = c_.find(id);
  return it == c_.end() ? Integer(0) : it->second;
}

void BurnsideElement::add(std::size_t id, const Integer& v) {
  if (v == 0) return;
  auto [it, fresh] = c_.emplace(id, v);
  if (!fresh) {
    it->second += v;
    if (it->second == 0) c_.erase(it);
  }
}

BurnsideElement& BurnsideElement::operator+=(const BurnsideElement& o) {
  for (const auto& [id, v] : o.c_) add(id, v);
  return *this;
}

BurnsideElement& BurnsideElement::operator-=(const BurnsideElement& o) {
  for (const auto& [id, v] : o.c_) add(id, -v);
  return *this;
}

BurnsideElement BurnsideElement::operator-() const {
  BurnsideElement r;
  for (const auto& [id, v] : c_) r.c_.emplace(id, -v);
  return r;
}

BurnsideElement operator*(const Integer& s, const BurnsideElement& a) {
  BurnsideElement r;
  if (s == 0) return r;
  for (const auto& [id, v] : a.terms()) r.add(id, s * v);
  return r;
}

// m_L = [n(L,H)|W(H)| n(L,K)|W(K)| - sum_{L' > L} m_L' n(L,L')|W(L')|] / |W(L)|,
// evaluated from the top of the common down-set.
BurnsideRing::Sparse BurnsideRing::compute_product(std::size_t h, std::size_t k) const {
  const auto& lat = *lat_;
  const long long wh = static_cast<long long>(lat.cls(h).weyl_order);
  const long long wk = static_cast<long long>(lat.cls(k).weyl_order);
  std::vector<std::size_t> cand;
  for (std::size_t l = 0; l <= std::min(h, k); ++l)
    if (lat.leq(l, h) && lat.leq(l, k)) cand.push_back(l);
  std::vector<long long> m(cand.size(), 0);
  for (std::size_t a = cand.size(); a-- > 0;) {
    const std::size_t l = cand[a];
    long long v = lat.n_count(l, h) * wh * lat.n_count(l, k) * wk;
    for (std::size_t b = a + 1; b < cand.size(); ++b) {
      if (!m[b]) continue;
      const std::size_t lt = cand[b];
      v -= m[b] * lat.n_count(l, lt) * static_cast<long long>(lat.cls(lt).weyl_order);
    }
    const auto wl = static_cast<long long>(lat.cls(l).weyl_order);
    if (v % wl != 0)
      throw Error(ErrorKind::InternalConsistency, "inexact division in Burnside recurrence");
    m[a] = v / wl;
  }
  Sparse out;
  for (std::size_t a = 0; a < cand.size(); ++a)
    if (m[a]) out.emplace_back(cand[a], m[a]);
  return out;
}

BurnsideElement BurnsideRing::generator_product(std::size_t h, std::size_t k) const {
  if (h > k) std::swap(h, k);
  const std::uint64_t key = (static_cast<std::uint64_t>(h) << 32) | k;
  const Sparse* found = nullptr;
  {
    std::shared_lock lock(mu_);
    auto it = memo_.find(key);
    if (it != memo_.end()) found = &it->second;
  }
  if (!found) {
    Sparse fresh = compute_product(h, k);
    std::unique_lock lock(mu_);
    found = &memo_.emplace(key, std::move(fresh)).first->second;
  }
  BurnsideElement r;
  for (const auto& [id, v] : *found) r.add(id, v);
  return r;
}

BurnsideElement BurnsideRing::multiply(const BurnsideElement& a, const BurnsideElement& b) const {
  BurnsideElement r;
  for (const auto& [h, x] : a.terms())
    for (const auto& [k, y] : b.terms()) {
      const Integer xy = x * y;
      const BurnsideElement prod = generator_product(h, k);
      for (const auto& [l, v] : prod.terms()) r.add(l, xy * v);
    }
  return r;
}

BurnsideElement BurnsideRing::power(const BurnsideElement& a, unsigned long n) const {
  BurnsideElement result = unit(), base = a;
  while (n) {
    if (n & 1) result = multiply(result, base);
    n >>= 1;
    if (n) base = multiply(base, base);
  }
  return result;
}

std::string BurnsideRing::render(const BurnsideElement& a) const {
  if (a.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [id, v] : a.terms()) {
    const bool neg = v < 0;
    const Integer mag = neg ? Integer(-v) : v;
    if (first) out += neg ? "-" : "";
    else out += neg ? " - " : " + ";
    if (mag != 1) out += mag.str();
    out += "(" + lat_->cls(id).name + ")";
    first = false;
  }
  return out;
}

BurnsideElement BurnsideRing::from_names(
    const std::vector<std::pair<std::string, long>>& terms) const {
  BurnsideElement r;
  for (const auto& [name, c] : terms) r.add(lat_->find_required(name), c);
  return r;
}

BurnsideElement multiply_oracle(const SubgroupLattice& lat, std::size_t h, std::size_t k) {
  const FiniteGroup& g = lat.group();
  const std::size_t n = g.order();
  // Left cosets xH labelled by index; coset_of[x] gives the label of xH.
  auto cosets = [&](const Subgroup& s) {
    std::vector<int> coset_of(n, -1);
    std::vector<ElementId> reps;
    const auto members = s.elements();
    for (ElementId x = 0; x < n; ++x) {
      if (coset_of[x] >= 0) continue;
      for (auto y : members) coset_of[g.mul(x, y)] = static_cast<int>(reps.size());
      reps.push_back(x);
    }
    return std::make_pair(coset_of, reps);
  };
  auto [ch, rh] = cosets(lat.cls(h).representative);
  auto [ck, rk] = cosets(lat.cls(k).representative);
  const std::size_t nh = rh.size(), nk = rk.size();
  std::vector<bool> visited(nh * nk, false);
  BurnsideElement r;
  for (std::size_t p = 0; p < nh * nk; ++p) {
    if (visited[p]) continue;
    const ElementId xh = rh[p / nk], xk = rk[p % nk];
    Subgroup stab(n);
    for (ElementId g0 = 0; g0 < n; ++g0) {
      const int a = ch[g.mul(g0, xh)], b = ck[g.mul(g0, xk)];
      visited[static_cast<std::size_t>(a) * nk + b] = true;
      if (static_cast<std::size_t>(a) == p / nk && static_cast<std::size_t>(b) == p % nk)
        stab.insert(g0);
    }
    r.add(lat.classify(stab), 1);
  }
  return r;
}

}  // namespace eqdeg
