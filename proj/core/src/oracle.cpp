#include "cunningham/oracle.hpp"

#include <algorithm>
#include <map>
#include <memory>

#include "cunningham/iso.hpp"

namespace cunningham {

std::vector<HolElement> all_named(const GroupSpec& spec) {
  std::vector<HolElement> gens;
  for (const auto& [name, g] : spec.named_generators()) gens.push_back(g);
  return gens;
}

Subgroup holomorph(const GroupSpec& spec) { return Subgroup(spec, all_named(spec)); }

OracleResult oracle_transitive_subgroups(const GroupSpec& spec, std::uint64_t cap) {
  Subgroup hol = holomorph(spec);
  FiniteGroup g(spec, hol.elements(cap), 4096);
  auto subs = all_subgroups(g, cap);
  OracleResult r;
  r.subgroup_count = subs.size();
  for (const auto& s : subs) {
    if (s.members.count() % spec.n() != 0 || !g.is_transitive(s.members)) continue;
    CodeSet cs;
    for (auto x : s.members.members()) cs.push_back(g.code(x));
    r.transitive.push_back(std::move(cs));
  }
  std::sort(r.transitive.begin(), r.transitive.end());
  return r;
}

FiniteGroup finite_group_of(const GroupSpec& spec, const CodeSet& codes, std::size_t table_cap) {
  std::vector<HolElement> el;
  el.reserve(codes.size());
  for (auto c : codes) el.push_back(spec.decode(c));
  return FiniteGroup(spec, std::move(el), table_cap);
}

std::vector<std::size_t> perm_iso_partition(const GroupSpec& spec, const std::vector<CodeSet>& groups,
                                            std::uint64_t iso_cap) {
  std::vector<std::size_t> cls(groups.size());
  struct Rep {
    std::size_t id;
    std::unique_ptr<FiniteGroup> g;
  };
  std::map<std::pair<std::size_t, std::size_t>, std::vector<Rep>> buckets;
  std::size_t next = 0;
  for (std::size_t i = 0; i < groups.size(); ++i) {
    auto g = std::make_unique<FiniteGroup>(finite_group_of(spec, groups[i]));
    auto key = std::make_pair(g->order(), g->stabilizer_set().count());
    auto& reps = buckets[key];
    bool placed = false;
    for (auto& r : reps) {
      if (perm_isomorphic(*r.g, *g, iso_cap)) {
        cls[i] = r.id;
        placed = true;
        break;
      }
    }
    if (!placed) {
      cls[i] = next;
      reps.push_back({next++, std::move(g)});
    }
  }
  return cls;
}

}  // namespace cunningham
