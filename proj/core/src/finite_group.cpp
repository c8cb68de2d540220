#include "cunningham/finite_group.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

namespace cunningham {

std::size_t ElementSet::count() const {
  std::size_t c = 0;
  for (auto w : w_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

std::uint64_t ElementSet::hash() const {
  std::uint64_t h = 1469598103934665603ULL;
  for (auto w : w_) {
    h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

std::vector<std::uint32_t> ElementSet::members() const {
  std::vector<std::uint32_t> out;
  for (std::size_t b = 0; b < w_.size(); ++b) {
    std::uint64_t w = w_[b];
    while (w) {
      out.push_back(static_cast<std::uint32_t>(b * 64 + static_cast<std::size_t>(std::countr_zero(w))));
      w &= w - 1;
    }
  }
  return out;
}

bool ElementSet::subset_of(const ElementSet& o) const {
  for (std::size_t b = 0; b < w_.size(); ++b)
    if (w_[b] & ~o.w_[b]) return false;
  return true;
}

FiniteGroup::FiniteGroup(const GroupSpec& spec, std::vector<HolElement> elements, std::size_t table_cap)
    : spec_(&spec) {
  std::vector<std::pair<std::uint64_t, HolElement>> tmp;
  tmp.reserve(elements.size());
  for (auto& g : elements) tmp.emplace_back(spec.encode(g), g);
  std::sort(tmp.begin(), tmp.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  tmp.erase(std::unique(tmp.begin(), tmp.end(), [](const auto& a, const auto& b) { return a.first == b.first; }),
            tmp.end());
  for (auto& [c, g] : tmp) {
    codes_.push_back(c);
    elems_.push_back(g);
  }
  const std::size_t n = elems_.size();
  auto id = index_of(spec.hol_identity());
  if (id < 0) throw std::invalid_argument("FiniteGroup: identity missing");
  identity_ = static_cast<std::uint32_t>(id);
  if (n <= table_cap && n <= 65536) {
    table_.resize(n * n);
    for (std::uint32_t a = 0; a < n; ++a)
      for (std::uint32_t b = 0; b < n; ++b) {
        auto c = index_of(spec.hol_mul(elems_[a], elems_[b]));
        if (c < 0) throw std::invalid_argument("FiniteGroup: element list is not closed");
        table_[std::size_t{a} * n + b] = static_cast<std::uint16_t>(c);
      }
  }
  inv_.resize(n);
  order_.resize(n);
  for (std::uint32_t a = 0; a < n; ++a) {
    auto c = index_of(spec.hol_inv(elems_[a]));
    if (c < 0) throw std::invalid_argument("FiniteGroup: element list is not closed");
    inv_[a] = static_cast<std::uint32_t>(c);
    std::uint32_t x = a, o = 1;
    while (x != identity_) {
      x = mul(x, a);
      ++o;
    }
    order_[a] = o;
  }
}

FiniteGroup FiniteGroup::from_subgroup(const Subgroup& m, std::uint64_t cap, std::size_t table_cap) {
  return FiniteGroup(m.spec(), m.elements(cap), table_cap);
}

std::int64_t FiniteGroup::index_of_code(std::uint64_t c) const {
  auto it = std::lower_bound(codes_.begin(), codes_.end(), c);
  if (it == codes_.end() || *it != c) return -1;
  return it - codes_.begin();
}

std::int64_t FiniteGroup::index_of(const HolElement& g) const { return index_of_code(spec_->encode(g)); }

std::uint32_t FiniteGroup::mul(std::uint32_t a, std::uint32_t b) const {
  if (!table_.empty()) return table_[std::size_t{a} * elems_.size() + b];
  auto c = index_of(spec_->hol_mul(elems_[a], elems_[b]));
  if (c < 0) throw std::logic_error("FiniteGroup: product left the group");
  return static_cast<std::uint32_t>(c);
}

bool FiniteGroup::in_stabilizer(std::uint32_t a) const { return elems_[a].n == spec_->n_identity(); }

ElementSet FiniteGroup::stabilizer_set() const {
  ElementSet s(order());
  for (std::uint32_t a = 0; a < order(); ++a)
    if (in_stabilizer(a)) s.set(a);
  return s;
}

ElementSet FiniteGroup::generate(const std::vector<std::uint32_t>& gens) const {
  ElementSet s(order());
  std::vector<std::uint32_t> q{identity_};
  s.set(identity_);
  for (std::size_t i = 0; i < q.size(); ++i)
    for (auto g : gens) {
      auto y = mul(q[i], g);
      if (!s.test(y)) {
        s.set(y);
        q.push_back(y);
      }
    }
  return s;
}

std::vector<std::uint32_t> FiniteGroup::generators_of(const ElementSet& s) const {
  std::vector<std::uint32_t> gens;
  ElementSet cur = generate({});
  const std::size_t target = s.count();
  // Prefer high-order elements so that few generators suffice.
  auto mem = s.members();
  std::stable_sort(mem.begin(), mem.end(), [&](auto a, auto b) { return order_[a] > order_[b]; });
  for (auto x : mem) {
    if (cur.count() == target) break;
    if (cur.test(x)) continue;
    gens.push_back(x);
    cur = generate(gens);
  }
  return gens;
}

bool FiniteGroup::is_normal(const ElementSet& s) const {
  auto gens = generators_of(s);
  for (std::uint32_t g = 0; g < order(); ++g)
    for (auto x : gens)
      if (!s.test(mul(mul(g, x), inv_[g]))) return false;
  return true;
}

std::size_t FiniteGroup::orbit_size(const ElementSet& s) const {
  std::vector<std::uint8_t> hit(spec_->n(), 0);
  std::size_t c = 0;
  for (auto a : s.members()) {
    auto p = spec_->point_index(elems_[a].n);
    if (!hit[p]) {
      hit[p] = 1;
      ++c;
    }
  }
  return c;
}

bool FiniteGroup::is_transitive(const ElementSet& s) const { return orbit_size(s) == spec_->n(); }

std::vector<OracleSubgroup> all_subgroups(const FiniteGroup& g, std::uint64_t cap) {
  if (g.order() > cap) throw CapExceeded(g.order(), cap);
  const std::size_t n = g.order();
  std::vector<OracleSubgroup> result;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> seen;
  ElementSet triv(n);
  triv.set(g.identity());
  result.push_back({triv, {}});
  seen.emplace(triv, 0);
  std::vector<std::size_t> layer{0};
  while (!layer.empty()) {
    std::vector<std::size_t> next;
    for (auto ui : layer) {
      const ElementSet umem = result[ui].members;
      const std::vector<std::uint32_t> ugens = result[ui].gens;
      const auto uel = umem.members();
      ElementSet done = umem;
      for (std::uint32_t x = 0; x < n; ++x) {
        if (done.test(x)) continue;
        bool normalizes = true;
        for (auto u : ugens)
          if (!umem.test(g.mul(g.mul(x, u), g.inv(x)))) {
            normalizes = false;
            break;
          }
        if (!normalizes) continue;
        std::uint32_t y = x, idx = 1;
        while (!umem.test(y)) {
          y = g.mul(y, x);
          ++idx;
        }
        if (!is_prime(idx)) continue;
        ElementSet v(n);
        std::uint32_t pw = g.identity();
        for (std::uint32_t j = 0; j < idx; ++j) {
          for (auto u : uel) v.set(g.mul(u, pw));
          pw = g.mul(pw, x);
        }
        for (auto m : v.members()) done.set(m);
        if (seen.count(v)) continue;
        auto vg = ugens;
        vg.push_back(x);
        seen.emplace(v, result.size());
        next.push_back(result.size());
        result.push_back({std::move(v), std::move(vg)});
      }
    }
    layer = std::move(next);
  }
  return result;
}

}  // namespace cunningham
