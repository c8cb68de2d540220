#pragma once

#include <cstdint>
#include <vector>

#include "cunningham/finite_group.hpp"
#include "cunningham/subgroup.hpp"

namespace cunningham {

// Sorted element codes; the canonical identity of a subgroup.
using CodeSet = std::vector<std::uint64_t>;

Subgroup holomorph(const GroupSpec& spec);
std::vector<HolElement> all_named(const GroupSpec& spec);

struct OracleResult {
  std::size_t subgroup_count = 0;
  std::vector<CodeSet> transitive;  // sorted
};

// Brute force: every subgroup of Hol(N), filtered to the transitive ones.
OracleResult oracle_transitive_subgroups(const GroupSpec& spec, std::uint64_t cap);

FiniteGroup finite_group_of(const GroupSpec& spec, const CodeSet& codes, std::size_t table_cap = 4096);

// Partition by stabiliser-preserving isomorphism; returns a class id per group,
// ids numbered in order of first appearance.
std::vector<std::size_t> perm_iso_partition(const GroupSpec& spec, const std::vector<CodeSet>& groups,
                                            std::uint64_t iso_cap);

}  // namespace cunningham
