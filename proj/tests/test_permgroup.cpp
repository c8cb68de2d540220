#include <gtest/gtest.h>

#include <random>
#include <set>

#include "cunningham/finite_group.hpp"
#include "cunningham/iso.hpp"
#include "cunningham/oracle.hpp"
#include "cunningham/subgroup.hpp"
#include "test_util.hpp"

using namespace cunningham;
using testutil::spec_of;

namespace {

FiniteGroup group_of(const GroupSpec& spec, const std::vector<HolElement>& gens) {
  return FiniteGroup::from_subgroup(Subgroup(spec, gens), 100000);
}

std::vector<HolElement> sigmas(const GroupSpec& spec) {
  std::vector<HolElement> g;
  for (unsigned j = 1; j <= spec.length(); ++j) g.push_back(spec.gen("sigma" + std::to_string(j)));
  return g;
}

}  // namespace

TEST(Permgroup, SubgroupCountsOfSmallGroups) {
  auto spec = spec_of({7, 3}, {});
  auto klein = group_of(spec, {spec.gen("beta1"), spec.gen("gamma")});
  EXPECT_EQ(klein.order(), 4u);
  EXPECT_EQ(all_subgroups(klein, 1000).size(), 5u);
  auto c6 = group_of(spec, {spec.hol_mul(spec.gen("alpha1"), spec.gen("beta1"))});
  EXPECT_EQ(c6.order(), 6u);
  EXPECT_EQ(all_subgroups(c6, 1000).size(), 4u);
  auto trivial = group_of(spec, {});
  EXPECT_EQ(trivial.order(), 1u);
  EXPECT_EQ(all_subgroups(trivial, 1000).size(), 1u);
  // (C_2)^3 inside Hol(C_1265).
  auto big = spec_of({23, 11, 5}, {});
  auto e8 = group_of(big, {big.gen("beta1"), big.gen("beta2"), big.hol_pow(big.gen("gamma"), 2)});
  EXPECT_EQ(all_subgroups(e8, 1000).size(), static_cast<std::size_t>(elem_abelian_2_total(3)));
}

TEST(Permgroup, ClosureAndTransitivity) {
  auto spec = spec_of({7, 3}, {});
  EXPECT_EQ(Subgroup(spec, {}).order(), 1u);
  Subgroup n(spec, sigmas(spec));
  EXPECT_TRUE(n.is_transitive());
  EXPECT_TRUE(n.is_regular());
  EXPECT_FALSE(Subgroup(spec, {spec.gen("alpha1")}).is_transitive());
  EXPECT_FALSE(Subgroup(spec, {spec.gen("sigma2"), spec.gen("alpha1")}).is_transitive());
  Subgroup hol = holomorph(spec);
  EXPECT_EQ(hol.stabilizer_codes().size(), spec.aut_order());
  EXPECT_THROW(hol.elements(100), CapExceeded);
  auto meta = spec_of({7, 3}, {2});
  EXPECT_EQ(holomorph(meta).order(), 882u);
}

TEST(Permgroup, MembershipMatchesElementSets) {
  auto spec = spec_of({7, 3}, {2});
  Subgroup m(spec, {spec.gen("e1_2"), spec.gen("S_2"), spec.gen("B_2")});
  auto codes = m.element_codes(10000);
  std::set<std::uint64_t> in(codes.begin(), codes.end());
  for (std::uint64_t c = 0; c < spec.hol_order(); ++c) EXPECT_EQ(m.contains(spec.decode(c)), in.count(c) == 1);
  EXPECT_EQ(codes.size(), m.order());
  Subgroup m2(spec, {spec.gen("B_2"), spec.gen("e1_2"), spec.gen("S_2"), spec.gen("e1_2")});
  EXPECT_TRUE(m == m2);
  EXPECT_EQ(m.fingerprint(), m2.fingerprint());
}

TEST(Permgroup, OracleOnCyclicHolomorph) {
  auto spec = spec_of({7, 3}, {});
  auto r = oracle_transitive_subgroups(spec, 50000);
  EXPECT_EQ(r.transitive.size(), 14u);
  for (const auto& cs : r.transitive) {
    auto g = finite_group_of(spec, cs);
    // Orbit-stabiliser.
    EXPECT_EQ(g.order(), spec.n() * g.stabilizer_set().count());
  }
  auto cls = perm_iso_partition(spec, r.transitive, 10000);
  EXPECT_EQ(std::set<std::size_t>(cls.begin(), cls.end()).size(), 12u);
}

TEST(Permgroup, AutomorphismCounts) {
  auto spec = spec_of({7, 3}, {});
  auto n = group_of(spec, sigmas(spec));
  EXPECT_EQ(count_aut_fixing_stab(n), 12u);
  auto meta = spec_of({7, 3}, {2});
  auto hol = FiniteGroup(meta, holomorph(meta).elements(10000));
  EXPECT_EQ(count_aut_fixing_stab(hol), 84u);
  auto pq = group_of(meta, {meta.gen("e1_2"), meta.gen("e2_2"), meta.gen("S_2"), meta.gen("A_2")});
  EXPECT_EQ(pq.order(), 441u);
  EXPECT_EQ(count_aut_fixing_stab(pq), 84u);
}

TEST(Permgroup, IsomorphismIsAnEquivalence) {
  auto spec = spec_of({7, 3}, {});
  auto r = oracle_transitive_subgroups(spec, 50000);
  std::vector<FiniteGroup> gs;
  for (const auto& cs : r.transitive) gs.push_back(finite_group_of(spec, cs));
  for (std::size_t a = 0; a < gs.size(); ++a) {
    EXPECT_TRUE(perm_isomorphic(gs[a], gs[a]).has_value());
    for (std::size_t b = a + 1; b < gs.size(); ++b)
      EXPECT_EQ(perm_isomorphic(gs[a], gs[b]).has_value(), perm_isomorphic(gs[b], gs[a]).has_value());
  }
}

TEST(Permgroup, NormalComplements) {
  auto spec = spec_of({7, 3}, {});
  auto r = oracle_transitive_subgroups(spec, 50000);
  for (const auto& cs : r.transitive) {
    auto g = finite_group_of(spec, cs);
    EXPECT_TRUE(has_normal_complement(g));
  }
  auto n = group_of(spec, sigmas(spec));
  EXPECT_TRUE(has_normal_complement(n));
}
