#include "cunningham/iso.hpp"

#include <algorithm>
#include <map>

namespace cunningham {

namespace {

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  return h ^ (v * 0x9e3779b97f4a7c15ULL + 0x7f4a7c159e3779b9ULL + (h << 6) + (h >> 2));
}

// Hash of the multiset of cycle lengths of g acting on the points of N.
std::uint64_t cycle_type_hash(const GroupSpec& spec, const HolElement& g, std::vector<std::uint8_t>& seen) {
  const std::uint32_t pts = static_cast<std::uint32_t>(spec.n());
  seen.assign(pts, 0);
  std::map<std::uint32_t, std::uint32_t> lengths;
  for (std::uint32_t p = 0; p < pts; ++p) {
    if (seen[p]) continue;
    std::uint32_t len = 0;
    for (std::uint32_t q = p; !seen[q]; q = spec.act(g, q)) {
      seen[q] = 1;
      ++len;
    }
    ++lengths[len];
  }
  std::uint64_t h = 0;
  for (const auto& [len, cnt] : lengths) h = mix(mix(h, len), cnt);
  return h;
}

std::vector<std::uint64_t> invariants(const FiniteGroup& g, const std::vector<const ElementSet*>& sets,
                                      bool cycle_types) {
  const std::uint32_t n = static_cast<std::uint32_t>(g.order());
  std::vector<std::uint64_t> inv(n);
  std::vector<std::uint8_t> seen;
  for (std::uint32_t x = 0; x < n; ++x) {
    std::uint64_t h = mix(0, g.element_order(x));
    for (auto* s : sets) h = mix(h, s->test(x) ? 1 : 2);
    if (cycle_types) h = mix(h, cycle_type_hash(g.spec(), g.element(x), seen));
    inv[x] = h;
  }
  if (g.has_table()) {
    for (std::uint32_t x = 0; x < n; ++x) {
      std::uint64_t c = 0;
      for (std::uint32_t y = 0; y < n; ++y) c += g.mul(x, y) == g.mul(y, x);
      inv[x] = mix(inv[x], c);
    }
  }
  return inv;
}

class Search {
 public:
  Search(const FiniteGroup& a, const FiniteGroup& b, const IsoOptions& opt, bool count_all)
      : a_(a), b_(b), opt_(opt), count_all_(count_all) {}

  // Returns the number of isomorphisms found (stopping after one unless count_all).
  std::uint64_t run() {
    if (a_.order() != b_.order()) return 0;
    std::vector<const ElementSet*> sa, sb;
    for (const auto& c : opt_.constraints) {
      if (c.in_a.count() != c.in_b.count()) return 0;
      sa.push_back(&c.in_a);
      sb.push_back(&c.in_b);
    }
    inv_a_ = invariants(a_, sa, opt_.stabilizer_preserving);
    inv_b_ = invariants(b_, sb, opt_.stabilizer_preserving);
    auto ma = inv_a_, mb = inv_b_;
    std::sort(ma.begin(), ma.end());
    std::sort(mb.begin(), mb.end());
    if (ma != mb) return 0;
    std::map<std::uint64_t, std::vector<std::uint32_t>> by_inv;
    for (std::uint32_t y = 0; y < b_.order(); ++y) by_inv[inv_b_[y]].push_back(y);
    choose_generators(by_inv);
    for (auto g : gens_) cands_.push_back(by_inv[inv_a_[g]]);
    img_.assign(a_.order(), -1);
    used_.assign(b_.order(), 0);
    img_[a_.identity()] = b_.identity();
    used_[b_.identity()] = 1;
    mapped_.push_back(a_.identity());
    gen_img_.assign(gens_.size(), 0);
    if (count_all_) return count_group(0);
    recurse(0);
    return found_;
  }

  const std::vector<std::uint32_t>& result() const { return best_; }

 private:
  void choose_generators(std::map<std::uint64_t, std::vector<std::uint32_t>>& by_inv) {
    std::vector<std::uint32_t> order(a_.order());
    for (std::uint32_t x = 0; x < a_.order(); ++x) order[x] = x;
    std::stable_sort(order.begin(), order.end(), [&](auto x, auto y) {
      auto cx = by_inv[inv_a_[x]].size(), cy = by_inv[inv_a_[y]].size();
      if (cx != cy) return cx < cy;
      return a_.element_order(x) > a_.element_order(y);
    });
    ElementSet cur = a_.generate({});
    for (auto x : order) {
      if (cur.count() == a_.order()) break;
      if (cur.test(x)) continue;
      gens_.push_back(x);
      cur = a_.generate(gens_);
    }
  }

  bool member_ok(std::uint32_t x, std::uint32_t y) const {
    if (inv_a_[x] != inv_b_[y]) return false;
    for (const auto& c : opt_.constraints)
      if (c.in_a.test(x) != c.in_b.test(y)) return false;
    return true;
  }

  // Products and commutators with the already-chosen generator images must
  // carry matching invariants.
  bool relations_ok(std::size_t level, std::uint32_t c) const {
    const std::uint32_t g = gens_[level];
    for (std::size_t j = 0; j < level; ++j) {
      const std::uint32_t h = gens_[j], d = gen_img_[j];
      if (!member_ok(a_.mul(h, g), b_.mul(d, c)) || !member_ok(a_.mul(g, h), b_.mul(c, d))) return false;
      const std::uint32_t ca = a_.mul(a_.mul(h, g), a_.mul(a_.inv(h), a_.inv(g)));
      const std::uint32_t cb = b_.mul(b_.mul(d, c), b_.mul(b_.inv(d), b_.inv(c)));
      if (!member_ok(ca, cb)) return false;
    }
    return true;
  }

  // Extends the partial map over <gens_[0..level]>; returns false on conflict.
  bool extend(std::size_t level, std::vector<std::uint32_t>& log) {
    std::size_t start = 0;
    std::vector<std::uint32_t> queue = mapped_;
    while (start < queue.size()) {
      std::uint32_t x = queue[start++];
      for (std::size_t i = 0; i <= level; ++i) {
        std::uint32_t y = a_.mul(x, gens_[i]);
        std::uint32_t fy = b_.mul(static_cast<std::uint32_t>(img_[x]), gen_img_[i]);
        if (img_[y] >= 0) {
          if (static_cast<std::uint32_t>(img_[y]) != fy) return false;
          continue;
        }
        if (used_[fy] || !member_ok(y, fy)) return false;
        img_[y] = fy;
        used_[fy] = 1;
        log.push_back(y);
        queue.push_back(y);
      }
    }
    return true;
  }

  void undo(const std::vector<std::uint32_t>& log) {
    for (auto y : log) {
      used_[static_cast<std::uint32_t>(img_[y])] = 0;
      img_[y] = -1;
    }
  }

  // Tries gens_[level] -> c on top of the current partial map.
  bool try_image(std::size_t level, std::uint32_t c, std::vector<std::uint32_t>& log) {
    if (used_[c] || !relations_ok(level, c)) return false;
    gen_img_[level] = c;
    if (!extend(level, log)) {
      undo(log);
      log.clear();
      return false;
    }
    mapped_.insert(mapped_.end(), log.begin(), log.end());
    return true;
  }

  void drop_image(std::size_t before, std::vector<std::uint32_t>& log) {
    mapped_.resize(before);
    undo(log);
    log.clear();
  }

  // Orbit-stabiliser count: with gens_[0..level-1] fixed pointwise, the
  // automorphisms form a group whose order is the orbit size of gens_[level]
  // times the order of its stabiliser.
  std::uint64_t count_group(std::size_t level) {
    if (level == gens_.size()) return 1;
    const std::size_t before = mapped_.size();
    std::vector<std::uint32_t> log;
    std::uint64_t orbit = 0;
    for (auto c : cands_[level]) {
      if (!try_image(level, c, log)) continue;
      stop_ = false;
      recurse(level + 1);
      if (stop_) ++orbit;
      drop_image(before, log);
    }
    stop_ = false;
    if (orbit == 0 || !try_image(level, gens_[level], log)) return 0;
    const std::uint64_t rest = count_group(level + 1);
    drop_image(before, log);
    return orbit * rest;
  }

  void recurse(std::size_t level) {
    if (stop_) return;
    if (level == gens_.size()) {
      ++found_;
      if (best_.empty()) {
        best_.resize(a_.order());
        for (std::uint32_t x = 0; x < a_.order(); ++x) best_[x] = static_cast<std::uint32_t>(img_[x]);
      }
      stop_ = true;
      return;
    }
    for (auto c : cands_[level]) {
      if (used_[c] || !relations_ok(level, c)) continue;
      gen_img_[level] = c;
      std::vector<std::uint32_t> log;
      const std::size_t before = mapped_.size();
      if (extend(level, log)) {
        mapped_.insert(mapped_.end(), log.begin(), log.end());
        recurse(level + 1);
        mapped_.resize(before);
      }
      undo(log);
      if (stop_) return;
    }
  }

  const FiniteGroup& a_;
  const FiniteGroup& b_;
  const IsoOptions& opt_;
  bool count_all_;
  bool stop_ = false;
  std::uint64_t found_ = 0;
  std::vector<std::uint64_t> inv_a_, inv_b_;
  std::vector<std::uint32_t> gens_;
  std::vector<std::vector<std::uint32_t>> cands_;
  std::vector<std::int64_t> img_;
  std::vector<std::uint8_t> used_;
  std::vector<std::uint32_t> mapped_;
  std::vector<std::uint32_t> gen_img_;
  std::vector<std::uint32_t> best_;
};

void check_cap(const FiniteGroup& g, std::uint64_t cap) {
  if (g.order() > cap) throw TooLarge(g.order(), cap);
}

}  // namespace

std::optional<std::vector<std::uint32_t>> find_isomorphism(const FiniteGroup& a, const FiniteGroup& b,
                                                           const IsoOptions& opt) {
  check_cap(a, opt.cap);
  check_cap(b, opt.cap);
  Search s(a, b, opt, false);
  if (s.run() == 0) return std::nullopt;
  return s.result();
}

std::uint64_t count_automorphisms(const FiniteGroup& a, const IsoOptions& opt) {
  check_cap(a, opt.cap);
  Search s(a, a, opt, true);
  return s.run();
}

std::optional<std::vector<std::uint32_t>> perm_isomorphic(const FiniteGroup& a, const FiniteGroup& b,
                                                          std::uint64_t cap) {
  IsoOptions opt;
  opt.cap = cap;
  opt.constraints.push_back({a.stabilizer_set(), b.stabilizer_set()});
  opt.stabilizer_preserving = true;
  return find_isomorphism(a, b, opt);
}

bool abstract_isomorphic(const FiniteGroup& a, const FiniteGroup& b, std::uint64_t cap) {
  IsoOptions opt;
  opt.cap = cap;
  return find_isomorphism(a, b, opt).has_value();
}

std::uint64_t count_aut_fixing_stab(const FiniteGroup& m, std::uint64_t cap) {
  IsoOptions opt;
  opt.cap = cap;
  auto st = m.stabilizer_set();
  opt.constraints.push_back({st, st});
  opt.stabilizer_preserving = true;
  return count_automorphisms(m, opt);
}

bool is_normal_complement(const FiniteGroup& m, const ElementSet& k) {
  if (k.count() != m.spec().n()) return false;
  auto st = m.stabilizer_set();
  for (auto x : k.members())
    if (x != m.identity() && st.test(x)) return false;
  return m.is_normal(k);
}

bool has_normal_complement(const FiniteGroup& m, std::uint64_t cap) {
  for (const auto& s : all_subgroups(m, cap))
    if (is_normal_complement(m, s.members)) return true;
  return false;
}

}  // namespace cunningham
