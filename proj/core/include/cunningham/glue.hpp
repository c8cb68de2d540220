#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "cunningham/algebra.hpp"

namespace cunningham {

// A transitive subgroup of one direct factor of Hol(N), in the factor's own spec.
struct FactorMember {
  std::vector<HolElement> gens;
  std::string class_id;
  std::string text;
  std::uint64_t order = 0;
  // Kernel of the largest quotient that is abelian of exponent dividing the
  // product of the shared primes.
  std::vector<HolElement> phi_gens;
  std::uint64_t phi_order = 0;
  // Shared prime d -> element generating the d-block of that quotient.
  std::map<std::uint64_t, HolElement> blocks;
};

struct GlueFactor {
  GroupSpec spec;
  std::vector<FactorMember> members;
};

// Two-factor decomposition of Hol(N) with per-member quotient data.
struct GlueData {
  std::vector<GlueFactor> factors;
  std::vector<std::uint64_t> shared_primes;
};

// Throws EnumerateError(UnsupportedShape) unless Hol(N) has exactly two
// direct factors, or when a shared quotient block is not cyclic of prime order.
GlueData glue_data(const GroupSpec& spec);

struct GluedMember {
  std::vector<HolElement> gens;
  std::size_t member[2] = {0, 0};
  std::vector<std::pair<std::uint64_t, std::uint64_t>> glue;  // (prime d, scalar c)
  std::uint64_t order = 0;
  std::string class_key;
  std::string text;
};

// Class key of a glued member: both factor classes plus the glued primes.
std::string glue_class_key(const std::string& cls0, const std::string& cls1, const std::vector<std::uint64_t>& glued);

// Streams every transitive subgroup of Hol(N) for a two-factor shape, ordered
// by first-factor member, second-factor member, then gluing parameters.
// Transitivity is checked by an orbit computation when n <= verify_points.
void for_each_glued_transitive(const GroupSpec& spec, const GlueData& data,
                               const std::function<void(const GluedMember&)>& fn,
                               std::uint64_t verify_points = 5000);

}  // namespace cunningham
