#pragma once

#include <random>
#include <vector>

#include "cunningham/algebra.hpp"

namespace testutil {

inline cunningham::GroupSpec spec_of(const std::vector<std::uint64_t>& primes, const std::vector<unsigned>& I) {
  auto c = cunningham::validate_chain(primes);
  return cunningham::build_group(c, cunningham::make_shape(c, I));
}

inline cunningham::HolElement random_element(const cunningham::GroupSpec& spec, std::mt19937_64& rng) {
  cunningham::HolElement g = spec.hol_identity();
  for (unsigned j = 1; j <= spec.length(); ++j) {
    g.n[j - 1] = static_cast<std::uint32_t>(rng() % spec.prime(j));
    if (spec.is_pair_high(j))
      g.a.c[j - 1] = static_cast<std::uint32_t>(rng() % spec.prime(j - 1));
    else
      g.a.c[j - 1] = static_cast<std::uint32_t>(1 + rng() % (spec.prime(j) - 1));
  }
  return g;
}

}  // namespace testutil
