#include "cunningham/algebra.hpp"

#include <algorithm>
#include <sstream>

namespace cunningham {

bool Shape::contains(unsigned i) const { return std::find(I.begin(), I.end(), i) != I.end(); }

Shape make_shape(const Chain& chain, std::vector<unsigned> I) {
  std::sort(I.begin(), I.end());
  const unsigned l = static_cast<unsigned>(chain.length());
  for (std::size_t a = 0; a < I.size(); ++a) {
    if (I[a] < 2 || I[a] > l)
      throw AlgebraError(AlgebraError::Kind::InvalidShape,
                         "index " + std::to_string(I[a]) + " outside {2.." + std::to_string(l) + "}");
    if (a > 0 && I[a] == I[a - 1])
      throw AlgebraError(AlgebraError::Kind::InvalidShape, "repeated index " + std::to_string(I[a]));
    if (a > 0 && I[a] == I[a - 1] + 1)
      throw AlgebraError(AlgebraError::Kind::InvalidShape, "consecutive indices " + std::to_string(I[a - 1]) +
                                                               "," + std::to_string(I[a]));
  }
  Shape s;
  s.l = l;
  s.I = std::move(I);
  s.m = chain.n();
  for (unsigned i : s.I) s.m /= chain.p(i - 1) * chain.p(i);
  return s;
}

std::vector<Shape> all_shapes(const Chain& chain) {
  std::vector<Shape> out;
  for (auto& I : valid_index_sets(static_cast<unsigned>(chain.length()))) out.push_back(make_shape(chain, I));
  return out;
}

std::string shape_to_string(const Shape& s) {
  std::ostringstream os;
  os << "I={";
  for (std::size_t a = 0; a < s.I.size(); ++a) os << (a ? "," : "") << s.I[a];
  os << '}';
  return os.str();
}

GroupSpec::GroupSpec(Chain chain, Shape shape) : chain_(std::move(chain)), shape_(std::move(shape)) {
  if (chain_.length() > kMaxLength)
    throw AlgebraError(AlgebraError::Kind::TooLong, "chains longer than " + std::to_string(kMaxLength) +
                                                        " are not supported");
  if (shape_.l != chain_.length())
    throw AlgebraError(AlgebraError::Kind::InvalidShape, "shape length does not match chain");
  shape_ = make_shape(chain_, shape_.I);
  build_tables();
  build_generators();
}

GroupSpec build_group(const Chain& chain, const Shape& shape) { return GroupSpec(chain, shape); }

void GroupSpec::build_tables() {
  const unsigned l = length();
  n_ = chain_.n();
  kpow_.assign(l + 1, {});
  geo_.assign(l + 1, {});
  radix_.clear();
  for (unsigned j = 1; j <= l; ++j) radix_.push_back(prime(j));
  aut_order_ = 1;
  for (unsigned j = 1; j <= l; ++j) {
    if (is_cyclic_position(j)) {
      radix_.push_back(prime(j) - 1);
      aut_order_ *= prime(j) - 1;
    } else if (is_pair_low(j)) {
      radix_.push_back(prime(j) - 1);
    } else {
      const std::uint64_t p = prime(j - 1), q = prime(j), kk = k(j);
      radix_.push_back(p);
      aut_order_ *= p * (p - 1);
      auto& kp = kpow_[j];
      auto& gs = geo_[j];
      kp.resize(q);
      gs.resize(q + 1);
      std::uint64_t cur = 1, sum = 0;
      for (std::uint64_t b = 0; b < q; ++b) {
        kp[b] = static_cast<std::uint32_t>(cur);
        gs[b] = static_cast<std::uint32_t>(sum);
        sum = (sum + cur) % p;
        cur = cur * kk % p;
      }
      gs[q] = static_cast<std::uint32_t>(sum);
    }
  }
  factors_.clear();
  for (unsigned j = 1; j <= l; ++j) {
    if (is_pair_low(j)) {
      factors_.push_back({{j, j + 1}, true});
      ++j;
    } else {
      factors_.push_back({{j}, false});
    }
  }
}

bool GroupSpec::n_valid(const NElement& a) const {
  for (unsigned j = 1; j <= kMaxLength; ++j) {
    if (j <= length() ? a[j - 1] >= prime(j) : a[j - 1] != 0) return false;
  }
  return true;
}

NElement GroupSpec::n_mul(const NElement& a, const NElement& b) const {
  NElement r{};
  const unsigned l = length();
  for (unsigned j = 1; j <= l; ++j) {
    const std::uint32_t p = prime32(j);
    if (is_pair_low(j)) {
      // sigma^a1 tau^a2 sigma^b1 tau^b2 = sigma^{a1 + b1 k^{a2}} tau^{a2+b2}
      const auto& kp = kpow_[j + 1];
      r[j - 1] = static_cast<std::uint32_t>((a[j - 1] + std::uint64_t{b[j - 1]} * kp[a[j]]) % p);
    } else {
      std::uint32_t v = a[j - 1] + b[j - 1];
      r[j - 1] = v >= p ? v - p : v;
    }
  }
  return r;
}

NElement GroupSpec::n_inv(const NElement& a) const {
  NElement r{};
  const unsigned l = length();
  for (unsigned j = 1; j <= l; ++j) {
    const std::uint32_t p = prime32(j);
    if (is_pair_low(j)) {
      const std::uint32_t q = prime32(j + 1);
      const std::uint32_t e = a[j] == 0 ? 0 : q - a[j];
      const std::uint64_t v = std::uint64_t{a[j - 1]} * kpow_[j + 1][e] % p;
      r[j - 1] = static_cast<std::uint32_t>(v == 0 ? 0 : p - v);
    } else {
      r[j - 1] = a[j - 1] == 0 ? 0 : p - a[j - 1];
    }
  }
  return r;
}

NElement GroupSpec::n_generator(unsigned i) const {
  NElement r{};
  r.at(i - 1) = 1;
  return r;
}

AutElement GroupSpec::aut_identity() const {
  AutElement a;
  for (unsigned j = 1; j <= length(); ++j) a.c[j - 1] = is_pair_high(j) ? 0 : 1;
  return a;
}

bool GroupSpec::aut_valid(const AutElement& a) const {
  for (unsigned j = 1; j <= kMaxLength; ++j) {
    if (j > length()) {
      if (a.c[j - 1] != 0) return false;
      continue;
    }
    if (is_pair_high(j)) {
      if (a.c[j - 1] >= prime(j - 1)) return false;
    } else if (a.c[j - 1] == 0 || a.c[j - 1] >= prime(j)) {
      return false;
    }
  }
  return true;
}

AutElement GroupSpec::aut_mul(const AutElement& a, const AutElement& b) const {
  AutElement r;
  const unsigned l = length();
  for (unsigned j = 1; j <= l; ++j) {
    if (is_pair_high(j)) {
      // (t,u) o (t',u') = (u t' + t, u u')
      const std::uint64_t p = prime(j - 1);
      r.c[j - 2] = static_cast<std::uint32_t>(std::uint64_t{a.c[j - 2]} * b.c[j - 2] % p);
      r.c[j - 1] = static_cast<std::uint32_t>((std::uint64_t{a.c[j - 2]} * b.c[j - 1] + a.c[j - 1]) % p);
    } else if (is_cyclic_position(j)) {
      r.c[j - 1] = static_cast<std::uint32_t>(std::uint64_t{a.c[j - 1]} * b.c[j - 1] % prime(j));
    }
  }
  return r;
}

AutElement GroupSpec::aut_inv(const AutElement& a) const {
  AutElement r;
  const unsigned l = length();
  for (unsigned j = 1; j <= l; ++j) {
    if (is_pair_high(j)) {
      const std::uint64_t p = prime(j - 1);
      const std::uint64_t ui = inverse_mod(a.c[j - 2], p);
      r.c[j - 2] = static_cast<std::uint32_t>(ui);
      r.c[j - 1] = static_cast<std::uint32_t>((p - ui * a.c[j - 1] % p) % p);
    } else if (is_cyclic_position(j)) {
      r.c[j - 1] = static_cast<std::uint32_t>(inverse_mod(a.c[j - 1], prime(j)));
    }
  }
  return r;
}

NElement GroupSpec::aut_apply(const AutElement& a, const NElement& x) const {
  NElement r{};
  const unsigned l = length();
  for (unsigned j = 1; j <= l; ++j) {
    if (is_pair_high(j)) {
      // (x1, x2) -> (u x1 + t (1 + k + ... + k^{x2-1}), x2)
      const std::uint64_t p = prime(j - 1);
      r[j - 2] = static_cast<std::uint32_t>(
          (std::uint64_t{a.c[j - 2]} * x[j - 2] + std::uint64_t{a.c[j - 1]} * geo_[j][x[j - 1]]) % p);
      r[j - 1] = x[j - 1];
    } else if (is_cyclic_position(j)) {
      r[j - 1] = static_cast<std::uint32_t>(std::uint64_t{a.c[j - 1]} * x[j - 1] % prime(j));
    }
  }
  return r;
}

AutElement GroupSpec::aut_unit(unsigned j, std::uint64_t u) const {
  if (!is_cyclic_position(j))
    throw AlgebraError(AlgebraError::Kind::ShapeMismatch, "position " + std::to_string(j) + " is not cyclic");
  AutElement a = aut_identity();
  a.c[j - 1] = static_cast<std::uint32_t>(u % prime(j));
  return a;
}

AutElement GroupSpec::aut_pair(unsigned i, std::uint64_t t, std::uint64_t u) const {
  if (!is_pair_high(i))
    throw AlgebraError(AlgebraError::Kind::ShapeMismatch, "position " + std::to_string(i) + " is not in I");
  const std::uint64_t p = prime(i - 1);
  AutElement a = aut_identity();
  a.c[i - 2] = static_cast<std::uint32_t>(u % p);
  a.c[i - 1] = static_cast<std::uint32_t>(t % p);
  return a;
}

HolElement GroupSpec::hol_mul(const HolElement& g, const HolElement& h) const {
  return {n_mul(g.n, aut_apply(g.a, h.n)), aut_mul(g.a, h.a)};
}

HolElement GroupSpec::hol_inv(const HolElement& g) const {
  AutElement ai = aut_inv(g.a);
  return {aut_apply(ai, n_inv(g.n)), ai};
}

HolElement GroupSpec::hol_pow(const HolElement& g, std::uint64_t e) const {
  HolElement r = hol_identity(), b = g;
  while (e) {
    if (e & 1) r = hol_mul(r, b);
    b = hol_mul(b, b);
    e >>= 1;
  }
  return r;
}

std::uint64_t GroupSpec::hol_element_order(const HolElement& g) const {
  const HolElement id = hol_identity();
  HolElement x = g;
  std::uint64_t ord = 1;
  while (!(x == id)) {
    x = hol_mul(x, g);
    ++ord;
  }
  return ord;
}

std::uint32_t GroupSpec::point_index(const NElement& x) const {
  std::uint64_t idx = 0;
  for (unsigned j = 1; j <= length(); ++j) idx = idx * prime(j) + x[j - 1];
  return static_cast<std::uint32_t>(idx);
}

NElement GroupSpec::point(std::uint32_t idx) const {
  NElement x{};
  for (unsigned j = length(); j >= 1; --j) {
    x[j - 1] = static_cast<std::uint32_t>(idx % prime(j));
    idx = static_cast<std::uint32_t>(idx / prime(j));
  }
  return x;
}

std::uint32_t GroupSpec::act(const HolElement& g, std::uint32_t pt) const {
  return point_index(n_mul(g.n, aut_apply(g.a, point(pt))));
}

Perm GroupSpec::to_perm(const HolElement& g) const {
  Perm p(n_);
  for (std::uint32_t x = 0; x < n_; ++x) p[x] = act(g, x);
  return p;
}

std::uint64_t GroupSpec::encode(const HolElement& g) const {
  const unsigned l = length();
  std::uint64_t code = 0;
  for (unsigned j = 1; j <= l; ++j) code = code * radix_[j - 1] + g.n[j - 1];
  for (unsigned j = 1; j <= l; ++j) {
    const std::uint64_t v = is_pair_high(j) ? g.a.c[j - 1] : g.a.c[j - 1] - 1;
    code = code * radix_[l + j - 1] + v;
  }
  return code;
}

HolElement GroupSpec::decode(std::uint64_t code) const {
  const unsigned l = length();
  HolElement g;
  for (unsigned j = l; j >= 1; --j) {
    const std::uint64_t r = radix_[l + j - 1];
    const std::uint64_t v = code % r;
    code /= r;
    g.a.c[j - 1] = static_cast<std::uint32_t>(is_pair_high(j) ? v : v + 1);
  }
  for (unsigned j = l; j >= 1; --j) {
    g.n[j - 1] = static_cast<std::uint32_t>(code % radix_[j - 1]);
    code /= radix_[j - 1];
  }
  return g;
}

void GroupSpec::build_generators() {
  named_.clear();
  named_index_.clear();
  auto add = [&](const std::string& name, const HolElement& g) {
    named_index_[name] = named_.size();
    named_.emplace_back(name, g);
  };
  const unsigned l = length();
  for (unsigned j = 1; j <= l; ++j) add("sigma" + std::to_string(j), from_n(n_generator(j)));
  for (unsigned j = 1; j <= l; ++j) {
    const std::uint64_t p = prime(j);
    if (is_cyclic_position(j)) {
      if (j < l) {
        add("alpha" + std::to_string(j), from_aut(aut_unit(j, smallest_of_order(prime(j + 1), p))));
        add("beta" + std::to_string(j), from_aut(aut_unit(j, p - 1)));
      } else {
        add("gamma", from_aut(aut_unit(j, smallest_of_order(std::uint64_t{1} << chain_.x, p))));
        add("delta", from_aut(aut_unit(j, smallest_of_order(chain_.s, p))));
      }
    } else if (is_pair_high(j)) {
      const std::string sfx = std::to_string(j);
      const std::uint64_t pl = prime(j - 1), kk = k(j);
      add("e1_" + sfx, from_n(n_generator(j - 1)));
      add("e2_" + sfx, {n_generator(j - 1), aut_pair(j, kk - 1, 1)});
      add("S_" + sfx, from_n(n_generator(j)));
      add("A_" + sfx, from_aut(aut_pair(j, 0, kk)));
      add("B_" + sfx, from_aut(aut_pair(j, 0, pl - 1)));
      add("theta_" + sfx, from_aut(aut_pair(j, 1, 1)));
    }
  }
}

const HolElement& GroupSpec::gen(const std::string& name) const {
  auto it = named_index_.find(name);
  if (it == named_index_.end()) throw std::out_of_range("no generator named " + name);
  return named_[it->second].second;
}

std::vector<HolElement> GroupSpec::hall_pi_subgroup() const {
  if (!shape_.cyclic())
    throw AlgebraError(AlgebraError::Kind::ShapeMismatch, "Hall subgroup is defined for the cyclic shape only");
  std::vector<HolElement> gens;
  for (unsigned j = 1; j <= length(); ++j) gens.push_back(gen("sigma" + std::to_string(j)));
  for (unsigned j = 1; j < length(); ++j) gens.push_back(gen("alpha" + std::to_string(j)));
  return gens;
}

std::uint64_t GroupSpec::hall_pi_order() const {
  std::uint64_t o = prime(1);
  for (unsigned j = 2; j <= length(); ++j) o *= prime(j) * prime(j);
  return o;
}

GroupSpec GroupSpec::factor_spec(std::size_t f) const {
  const Factor& fac = factors_.at(f);
  std::vector<std::uint64_t> ps;
  for (unsigned j : fac.positions) ps.push_back(prime(j));
  Chain c = validate_chain(ps);
  std::vector<unsigned> I;
  if (fac.pair) I.push_back(2);
  Shape s = make_shape(c, I);
  return GroupSpec(c, s);
}

HolElement GroupSpec::embed(std::size_t f, const HolElement& local) const {
  const Factor& fac = factors_.at(f);
  HolElement g = hol_identity();
  for (std::size_t a = 0; a < fac.positions.size(); ++a) {
    g.n[fac.positions[a] - 1] = local.n[a];
    g.a.c[fac.positions[a] - 1] = local.a.c[a];
  }
  return g;
}

HolElement GroupSpec::project(std::size_t f, const HolElement& g) const {
  const Factor& fac = factors_.at(f);
  HolElement local;
  for (std::size_t a = 0; a < fac.positions.size(); ++a) {
    local.n[a] = g.n[fac.positions[a] - 1];
    local.a.c[a] = g.a.c[fac.positions[a] - 1];
  }
  return local;
}

std::string GroupSpec::element_to_string(const HolElement& g) const {
  std::ostringstream os;
  os << "[(";
  for (unsigned j = 0; j < length(); ++j) os << (j ? "," : "") << g.n[j];
  os << "),(";
  for (unsigned j = 0; j < length(); ++j) os << (j ? "," : "") << g.a.c[j];
  os << ")]";
  return os.str();
}

std::string structure_label(const GroupSpec& spec) {
  if (spec.shape().cyclic()) return "C_" + std::to_string(spec.n());
  std::ostringstream os;
  bool first = true;
  for (const auto& f : spec.factors()) {
    if (!first) os << " × ";
    first = false;
    if (f.pair)
      os << "(C_" << spec.prime(f.positions[0]) << " ⋊ C_" << spec.prime(f.positions[1]) << ")";
    else
      os << "C_" << spec.prime(f.positions[0]);
  }
  return os.str();
}

}  // namespace cunningham
