#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "cunningham/finite_group.hpp"

namespace cunningham {

class TooLarge : public std::runtime_error {
 public:
  TooLarge(std::uint64_t order, std::uint64_t cap)
      : std::runtime_error("group of order " + std::to_string(order) + " exceeds the isomorphism cap " +
                           std::to_string(cap)) {}
};

// Require theta(in_a) = in_b.
struct IsoConstraint {
  ElementSet in_a;
  ElementSet in_b;
};

struct IsoOptions {
  std::vector<IsoConstraint> constraints;
  std::uint64_t cap = 10000;
  // Maps must preserve the identity-point stabiliser, so they are permutation
  // isomorphisms and element cycle types may be used as invariants.
  bool stabilizer_preserving = false;
};

// Isomorphism a -> b as an index map, or nullopt.
std::optional<std::vector<std::uint32_t>> find_isomorphism(const FiniteGroup& a, const FiniteGroup& b,
                                                           const IsoOptions& opt);
// Number of automorphisms of a satisfying the constraints (each with in_a == in_b).
std::uint64_t count_automorphisms(const FiniteGroup& a, const IsoOptions& opt);

// Isomorphism carrying the identity-point stabiliser of a onto that of b.
std::optional<std::vector<std::uint32_t>> perm_isomorphic(const FiniteGroup& a, const FiniteGroup& b,
                                                          std::uint64_t cap = 10000);
bool abstract_isomorphic(const FiniteGroup& a, const FiniteGroup& b, std::uint64_t cap = 10000);
// |Aut(M, M')| with M' the stabiliser of the identity point.
std::uint64_t count_aut_fixing_stab(const FiniteGroup& m, std::uint64_t cap = 10000);

// k is a normal subgroup of m of order n meeting the stabiliser trivially.
bool is_normal_complement(const FiniteGroup& m, const ElementSet& k);
// Exhaustive scan over all subgroups of m.
bool has_normal_complement(const FiniteGroup& m, std::uint64_t cap = 10000);

}  // namespace cunningham
