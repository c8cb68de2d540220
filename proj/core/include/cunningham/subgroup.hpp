#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "cunningham/algebra.hpp"

namespace cunningham {

class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(std::uint64_t order_lower_bound, std::uint64_t cap)
      : std::runtime_error("group order " + std::to_string(order_lower_bound) + " exceeds cap " +
                           std::to_string(cap)),
        bound_(order_lower_bound) {}
  std::uint64_t order_lower_bound() const { return bound_; }

 private:
  std::uint64_t bound_;
};

// Subgroup of Hol(N) stored as the orbit of the identity point with a
// transversal, plus its stabiliser, which lies inside Aut(N). Every subgroup of
// Hol(N) is described exactly by this data, so order and membership are exact
// at any size.
class Subgroup {
 public:
  Subgroup(const GroupSpec& spec, std::vector<HolElement> gens);

  const GroupSpec& spec() const { return *spec_; }
  const std::vector<HolElement>& generators() const { return gens_; }
  std::uint64_t order() const { return orbit_.size() * stab_codes_.size(); }
  bool is_transitive() const { return orbit_.size() == spec_->n(); }
  bool is_regular() const { return is_transitive() && stab_codes_.size() == 1; }
  bool contains(const HolElement& g) const;
  bool contains_subgroup(const Subgroup& other) const;
  bool operator==(const Subgroup& other) const;

  const std::vector<std::uint32_t>& orbit() const { return orbit_; }
  // Element mapping the identity point to pt; pt must lie in the orbit.
  const HolElement& transversal(std::uint32_t pt) const;
  // Point stabiliser of the identity, as sorted Aut(N) codes.
  const std::vector<std::uint64_t>& stabilizer_codes() const { return stab_codes_; }
  std::vector<HolElement> stabilizer_elements() const;

  // All elements, sorted by code. Throws CapExceeded when order() > cap.
  std::vector<HolElement> elements(std::uint64_t cap) const;
  std::vector<std::uint64_t> element_codes(std::uint64_t cap) const;

  // Cheap invariant: equal subgroups have equal fingerprints.
  std::uint64_t fingerprint() const;

 private:
  const GroupSpec* spec_;
  std::vector<HolElement> gens_;
  std::vector<std::uint32_t> orbit_;
  std::vector<std::int32_t> orbit_pos_;
  std::vector<HolElement> transversal_;
  std::vector<std::uint64_t> stab_codes_;
};

std::uint64_t aut_code(const GroupSpec& spec, const AutElement& a);

// Size of the orbit of the identity point; no stabiliser work.
std::size_t orbit_size(const GroupSpec& spec, const std::vector<HolElement>& gens);

// Closure of an explicit generating set within Aut(N), as sorted codes.
std::vector<std::uint64_t> aut_closure(const GroupSpec& spec, const std::vector<AutElement>& gens);

}  // namespace cunningham
