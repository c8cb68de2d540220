#include "cunningham/subgroup.hpp"

#include <algorithm>
#include <functional>

namespace cunningham {

std::uint64_t aut_code(const GroupSpec& spec, const AutElement& a) { return spec.encode(spec.from_aut(a)); }

std::size_t orbit_size(const GroupSpec& spec, const std::vector<HolElement>& gens) {
  std::vector<std::uint8_t> seen(spec.n(), 0);
  std::vector<std::uint32_t> queue{0};
  seen[0] = 1;
  for (std::size_t idx = 0; idx < queue.size(); ++idx)
    for (const auto& g : gens) {
      std::uint32_t y = spec.act(g, queue[idx]);
      if (!seen[y]) {
        seen[y] = 1;
        queue.push_back(y);
      }
    }
  return queue.size();
}

std::vector<std::uint64_t> aut_closure(const GroupSpec& spec, const std::vector<AutElement>& gens) {
  std::vector<std::uint8_t> seen(spec.aut_order(), 0);
  std::vector<AutElement> elems{spec.aut_identity()};
  seen[aut_code(spec, elems[0])] = 1;
  std::vector<AutElement> used;
  for (const auto& g : gens) {
    if (seen[aut_code(spec, g)]) continue;
    used.push_back(g);
    for (std::size_t idx = 0; idx < elems.size(); ++idx) {
      for (const auto& h : used) {
        AutElement y = spec.aut_mul(elems[idx], h);
        auto c = aut_code(spec, y);
        if (!seen[c]) {
          seen[c] = 1;
          elems.push_back(y);
        }
      }
    }
  }
  std::vector<std::uint64_t> codes;
  codes.reserve(elems.size());
  for (const auto& e : elems) codes.push_back(aut_code(spec, e));
  std::sort(codes.begin(), codes.end());
  return codes;
}

Subgroup::Subgroup(const GroupSpec& spec, std::vector<HolElement> gens) : spec_(&spec), gens_(std::move(gens)) {
  const std::uint32_t n = static_cast<std::uint32_t>(spec.n());
  orbit_pos_.assign(n, -1);
  orbit_.push_back(0);
  orbit_pos_[0] = 0;
  transversal_.push_back(spec.hol_identity());
  for (std::size_t idx = 0; idx < orbit_.size(); ++idx) {
    for (const auto& g : gens_) {
      HolElement t = spec.hol_mul(g, transversal_[idx]);
      std::uint32_t y = spec.point_index(t.n);
      if (orbit_pos_[y] < 0) {
        orbit_pos_[y] = static_cast<std::int32_t>(orbit_.size());
        orbit_.push_back(y);
        transversal_.push_back(t);
      }
    }
  }
  // Schreier generators t_{gx}^{-1} g t_x generate the stabiliser.
  std::vector<AutElement> schreier;
  std::vector<std::uint8_t> have(spec.aut_order(), 0);
  for (std::size_t idx = 0; idx < orbit_.size(); ++idx) {
    for (const auto& g : gens_) {
      HolElement gt = spec.hol_mul(g, transversal_[idx]);
      const HolElement& ty = transversal_[orbit_pos_[spec.point_index(gt.n)]];
      HolElement s = spec.hol_mul(spec.hol_inv(ty), gt);
      auto c = aut_code(spec, s.a);
      if (!have[c]) {
        have[c] = 1;
        schreier.push_back(s.a);
      }
    }
  }
  stab_codes_ = aut_closure(spec, schreier);
}

const HolElement& Subgroup::transversal(std::uint32_t pt) const {
  if (pt >= orbit_pos_.size() || orbit_pos_[pt] < 0) throw std::out_of_range("point not in orbit");
  return transversal_[orbit_pos_[pt]];
}

bool Subgroup::contains(const HolElement& g) const {
  std::uint32_t x = spec_->point_index(g.n);
  if (orbit_pos_[x] < 0) return false;
  HolElement h = spec_->hol_mul(spec_->hol_inv(transversal_[orbit_pos_[x]]), g);
  return std::binary_search(stab_codes_.begin(), stab_codes_.end(), aut_code(*spec_, h.a));
}

bool Subgroup::contains_subgroup(const Subgroup& other) const {
  return std::all_of(other.gens_.begin(), other.gens_.end(), [&](const HolElement& g) { return contains(g); });
}

bool Subgroup::operator==(const Subgroup& other) const {
  return order() == other.order() && contains_subgroup(other);
}

std::vector<HolElement> Subgroup::stabilizer_elements() const {
  std::vector<HolElement> out;
  out.reserve(stab_codes_.size());
  for (auto c : stab_codes_) out.push_back(spec_->decode(c));
  return out;
}

std::vector<HolElement> Subgroup::elements(std::uint64_t cap) const {
  if (order() > cap) throw CapExceeded(order(), cap);
  auto stab = stabilizer_elements();
  std::vector<std::pair<std::uint64_t, HolElement>> tmp;
  tmp.reserve(order());
  for (const auto& t : transversal_)
    for (const auto& s : stab) {
      HolElement g = spec_->hol_mul(t, s);
      tmp.emplace_back(spec_->encode(g), g);
    }
  std::sort(tmp.begin(), tmp.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<HolElement> out;
  out.reserve(tmp.size());
  for (auto& [c, g] : tmp) out.push_back(g);
  return out;
}

std::vector<std::uint64_t> Subgroup::element_codes(std::uint64_t cap) const {
  if (order() > cap) throw CapExceeded(order(), cap);
  auto stab = stabilizer_elements();
  std::vector<std::uint64_t> out;
  out.reserve(order());
  for (const auto& t : transversal_)
    for (const auto& s : stab) out.push_back(spec_->encode(spec_->hol_mul(t, s)));
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t Subgroup::fingerprint() const {
  auto mix = [](std::uint64_t h, std::uint64_t v) {
    return h ^ (std::hash<std::uint64_t>{}(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
  };
  std::uint64_t h = mix(0, orbit_.size());
  for (auto c : stab_codes_) h = mix(h, c);
  // Least code in the coset over each generator point of N.
  auto stab = stabilizer_elements();
  for (unsigned j = 1; j <= spec_->length(); ++j) {
    std::uint32_t x = spec_->point_index(spec_->n_generator(j));
    if (orbit_pos_[x] < 0) {
      h = mix(h, 0xffffffffULL);
      continue;
    }
    std::uint64_t best = ~std::uint64_t{0};
    const HolElement& t = transversal_[orbit_pos_[x]];
    for (const auto& s : stab) best = std::min(best, spec_->encode(spec_->hol_mul(t, s)));
    h = mix(h, best);
  }
  return h;
}

}  // namespace cunningham
