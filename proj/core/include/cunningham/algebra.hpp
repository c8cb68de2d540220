#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cunningham/arith.hpp"

namespace cunningham {

inline constexpr std::size_t kMaxLength = 8;

class AlgebraError : public std::runtime_error {
 public:
  enum class Kind { InvalidShape, ShapeMismatch, TooLong };
  AlgebraError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

// Index set I of non-adjacent positions in {2..l}; position i in I makes
// sigma_i act on sigma_{i-1} by the k_i-th power.
struct Shape {
  unsigned l = 0;
  std::vector<unsigned> I;
  std::uint64_t m = 1;  // order of the cyclic cofactor

  bool cyclic() const { return I.empty(); }
  bool contains(unsigned i) const;
  bool operator==(const Shape& o) const { return l == o.l && I == o.I; }
};

Shape make_shape(const Chain& chain, std::vector<unsigned> I);
std::vector<Shape> all_shapes(const Chain& chain);
std::string shape_to_string(const Shape& s);

// Residues (r_1..r_l) of the normal form sigma_1^{r_1} ... sigma_l^{r_l}.
using NElement = std::array<std::uint32_t, kMaxLength>;

// Automorphism of N stored slot-wise, position j living in c[j-1]. A cyclic
// position j holds the unit u_j with sigma_j -> sigma_j^{u_j}. A pair i in I
// stores u at position i-1 and t at position i, meaning
// sigma_{i-1} -> sigma_{i-1}^u and sigma_i -> sigma_{i-1}^t sigma_i.
// Slots beyond l are zero.
struct AutElement {
  std::array<std::uint32_t, kMaxLength> c{};
  bool operator==(const AutElement& o) const { return c == o.c; }
  bool operator<(const AutElement& o) const { return c < o.c; }
};

struct HolElement {
  NElement n{};
  AutElement a;
  bool operator==(const HolElement& o) const { return n == o.n && a == o.a; }
  bool operator<(const HolElement& o) const {
    return n != o.n ? n < o.n : a < o.a;
  }
};

using Perm = std::vector<std::uint32_t>;

// One direct factor of Hol(N): a prime position or a pair {i-1, i}.
struct Factor {
  std::vector<unsigned> positions;  // 1-based chain positions, ascending
  bool pair = false;
};

class GroupSpec {
 public:
  GroupSpec(Chain chain, Shape shape);

  const Chain& chain() const { return chain_; }
  const Shape& shape() const { return shape_; }
  unsigned length() const { return shape_.l; }
  std::uint64_t prime(unsigned i) const { return chain_.p(i); }
  std::uint64_t n() const { return n_; }
  std::uint64_t aut_order() const { return aut_order_; }
  std::uint64_t hol_order() const { return n_ * aut_order_; }
  // Relation exponent for pair i in I.
  std::uint64_t k(unsigned i) const { return chain_.k_at(i); }
  bool is_pair_high(unsigned i) const { return shape_.contains(i); }
  bool is_pair_low(unsigned j) const { return shape_.contains(j + 1); }
  bool is_cyclic_position(unsigned j) const { return !is_pair_high(j) && !is_pair_low(j); }

  NElement n_identity() const { return NElement{}; }
  NElement n_mul(const NElement& a, const NElement& b) const;
  NElement n_inv(const NElement& a) const;
  NElement n_generator(unsigned i) const;
  bool n_valid(const NElement& a) const;

  AutElement aut_identity() const;
  AutElement aut_mul(const AutElement& a, const AutElement& b) const;  // a after b
  AutElement aut_inv(const AutElement& a) const;
  NElement aut_apply(const AutElement& a, const NElement& x) const;
  bool aut_valid(const AutElement& a) const;
  AutElement aut_unit(unsigned j, std::uint64_t u) const;  // cyclic position j
  AutElement aut_pair(unsigned i, std::uint64_t t, std::uint64_t u) const;  // pair i

  HolElement hol_identity() const { return {n_identity(), aut_identity()}; }
  HolElement hol_mul(const HolElement& g, const HolElement& h) const;
  HolElement hol_inv(const HolElement& g) const;
  HolElement hol_pow(const HolElement& g, std::uint64_t e) const;
  std::uint64_t hol_element_order(const HolElement& g) const;
  HolElement from_n(const NElement& x) const { return {x, aut_identity()}; }
  HolElement from_aut(const AutElement& a) const { return {n_identity(), a}; }

  std::uint32_t point_index(const NElement& x) const;
  NElement point(std::uint32_t idx) const;
  std::uint32_t act(const HolElement& g, std::uint32_t pt) const;
  Perm to_perm(const HolElement& g) const;

  // Dense bijection Hol(N) <-> [0, hol_order()).
  std::uint64_t encode(const HolElement& g) const;
  HolElement decode(std::uint64_t code) const;

  // Named generators, in a fixed order.
  const std::vector<std::pair<std::string, HolElement>>& named_generators() const { return named_; }
  const HolElement& gen(const std::string& name) const;
  bool has_gen(const std::string& name) const { return named_index_.count(name) != 0; }

  // Generators of the normal Hall subgroup <sigma_1..sigma_l, alpha_1..alpha_{l-1}>
  // of the cyclic holomorph.
  std::vector<HolElement> hall_pi_subgroup() const;
  std::uint64_t hall_pi_order() const;

  const std::vector<Factor>& factors() const { return factors_; }
  // Chain and shape of the standalone spec for factor f.
  GroupSpec factor_spec(std::size_t f) const;
  // Embeds an element of factor_spec(f) into Hol(N).
  HolElement embed(std::size_t f, const HolElement& local) const;
  HolElement project(std::size_t f, const HolElement& g) const;

  std::string element_to_string(const HolElement& g) const;

 private:
  std::uint32_t prime32(unsigned i) const { return static_cast<std::uint32_t>(chain_.p(i)); }
  void build_tables();
  void build_generators();

  Chain chain_;
  Shape shape_;
  std::uint64_t n_ = 1;
  std::uint64_t aut_order_ = 1;
  // Per pair i (indexed by i): powers of k_i and partial geometric sums mod p_{i-1}.
  std::vector<std::vector<std::uint32_t>> kpow_, geo_;
  std::vector<std::uint64_t> radix_;  // per slot: n radices then aut radices
  std::vector<Factor> factors_;
  std::vector<std::pair<std::string, HolElement>> named_;
  std::map<std::string, std::size_t> named_index_;
};

GroupSpec build_group(const Chain& chain, const Shape& shape);

// Structure label such as "(C_23 ⋊ C_11) × C_5".
std::string structure_label(const GroupSpec& spec);

}  // namespace cunningham
