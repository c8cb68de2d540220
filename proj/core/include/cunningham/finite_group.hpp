#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "cunningham/algebra.hpp"
#include "cunningham/subgroup.hpp"

namespace cunningham {

// Fixed-size bit set over the elements of a FiniteGroup.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}
  void set(std::size_t i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  bool test(std::size_t i) const { return w_[i >> 6] >> (i & 63) & 1; }
  std::size_t size() const { return n_; }
  std::size_t count() const;
  std::uint64_t hash() const;
  std::vector<std::uint32_t> members() const;
  bool subset_of(const ElementSet& o) const;
  bool operator==(const ElementSet& o) const { return w_ == o.w_; }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const { return static_cast<std::size_t>(s.hash()); }
};

// Explicit group on an element list of Hol(N), indexed 0..order-1 in code
// order. Products use a Cayley table when the order is at most table_cap.
class FiniteGroup {
 public:
  FiniteGroup(const GroupSpec& spec, std::vector<HolElement> elements, std::size_t table_cap = 4096);
  static FiniteGroup from_subgroup(const Subgroup& m, std::uint64_t cap, std::size_t table_cap = 4096);

  const GroupSpec& spec() const { return *spec_; }
  std::size_t order() const { return elems_.size(); }
  const HolElement& element(std::uint32_t i) const { return elems_[i]; }
  std::uint64_t code(std::uint32_t i) const { return codes_[i]; }
  // Index of g, or -1.
  std::int64_t index_of(const HolElement& g) const;
  std::int64_t index_of_code(std::uint64_t c) const;
  std::uint32_t identity() const { return identity_; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t inv(std::uint32_t a) const { return inv_[a]; }
  std::uint32_t element_order(std::uint32_t a) const { return order_[a]; }
  // True when the element fixes the identity point of N.
  bool in_stabilizer(std::uint32_t a) const;
  bool has_table() const { return !table_.empty(); }

  ElementSet stabilizer_set() const;
  // Subgroup generated by the given elements, by closure.
  ElementSet generate(const std::vector<std::uint32_t>& gens) const;
  // Greedy generating set of a subgroup given as a member set.
  std::vector<std::uint32_t> generators_of(const ElementSet& s) const;
  bool is_normal(const ElementSet& s) const;
  // Orbit of the identity point of N under the members.
  bool is_transitive(const ElementSet& s) const;
  std::size_t orbit_size(const ElementSet& s) const;

 private:
  const GroupSpec* spec_;
  std::vector<HolElement> elems_;
  std::vector<std::uint64_t> codes_;
  std::vector<std::uint16_t> table_;
  std::vector<std::uint32_t> inv_, order_;
  std::uint32_t identity_ = 0;
};

struct OracleSubgroup {
  ElementSet members;
  std::vector<std::uint32_t> gens;
};

// Every subgroup of g exactly once, by cyclic extension (valid for solvable g).
std::vector<OracleSubgroup> all_subgroups(const FiniteGroup& g, std::uint64_t cap);

}  // namespace cunningham
