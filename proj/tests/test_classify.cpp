#include <gtest/gtest.h>

#include <map>
#include <set>

#include "cunningham/classify.hpp"
#include "cunningham/enumerate.hpp"
#include "cunningham/finite_group.hpp"
#include "cunningham/iso.hpp"
#include "cunningham/oracle.hpp"
#include "test_util.hpp"

using namespace cunningham;
using testutil::spec_of;

namespace {

const HgsClass& by_key(const Classification& c, const std::string& key) {
  for (const auto& k : c.classes)
    if (k.key == key) return k;
  throw std::out_of_range(key);
}

// Structured class of each oracle subgroup, paired with the oracle partition.
void expect_cyclic_partition_matches_oracle(const GroupSpec& spec) {
  std::map<CodeSet, std::string> structured;
  for_each_cyclic_transitive(spec, [&](const CyclicMember& m) {
    std::string key;
    for (auto i : m.params.I) key += std::to_string(i) + ",";
    structured[Subgroup(spec, m.gens).element_codes(1u << 20)] = key + m.A->key;
  });
  const auto oracle = oracle_transitive_subgroups(spec, 50000);
  const auto part = perm_iso_partition(spec, oracle.transitive, 10000);
  ASSERT_EQ(structured.size(), oracle.transitive.size());
  for (std::size_t i = 0; i < part.size(); ++i)
    for (std::size_t j = i + 1; j < part.size(); ++j)
      EXPECT_EQ(part[i] == part[j], structured.at(oracle.transitive[i]) == structured.at(oracle.transitive[j]));
  std::set<std::size_t> classes(part.begin(), part.end());
  EXPECT_EQ(classes.size(), classify_cyclic(spec).classes.size());
}

}  // namespace

TEST(Classify, ByottCount) {
  EXPECT_EQ(byott_count(42, 16, 42), 16u);
  EXPECT_EQ(byott_count(12, 14, 42), 4u);
  EXPECT_THROW(byott_count(5, 3, 7), NonIntegralCount);
}

TEST(Classify, CyclicN21) {
  auto spec = spec_of({7, 3}, {});
  auto c = classify_cyclic(spec);
  EXPECT_EQ(c.classes.size(), 12u);
  EXPECT_EQ(c.transitive_subgroups, 14);
  for (const auto& k : c.classes) {
    EXPECT_EQ(k.aut_source, AutSource::Both) << k.label;
    if (k.key.rfind("{2}", 0) == 0) EXPECT_EQ(k.class_size, 2u);
  }
  EXPECT_EQ(by_key(c, "{2}<>").hgs, 7u);
  EXPECT_EQ(by_key(c, "{2}<beta1>").hgs, 1u);
  EXPECT_EQ(by_key(c, "{}<>").hgs, 1u);
}

TEST(Classify, CyclicN55) {
  auto c = classify_cyclic(spec_of({11, 5}, {}));
  EXPECT_EQ(c.classes.size(), 18u);
  EXPECT_EQ(c.transitive_subgroups, 24);
}

TEST(Classify, CyclicPartitionMatchesOracleN21) { expect_cyclic_partition_matches_oracle(spec_of({7, 3}, {})); }

TEST(Classify, CyclicPartitionMatchesOracleN55) { expect_cyclic_partition_matches_oracle(spec_of({11, 5}, {})); }

TEST(Classify, CyclicRepresentativesHaveNormalComplement) {
  auto spec = spec_of({7, 3}, {});
  for (const auto& k : classify_cyclic(spec).classes) {
    auto g = FiniteGroup::from_subgroup(Subgroup(spec, k.representative), 10000);
    EXPECT_TRUE(has_normal_complement(g, 10000)) << k.label;
  }
}

TEST(Classify, CyclicClassesWithDistinctIAreNotIsomorphic) {
  auto spec = spec_of({7, 3}, {});
  auto c = classify_cyclic(spec);
  std::vector<std::pair<std::string, FiniteGroup>> reps;
  for (const auto& k : c.classes)
    reps.emplace_back(k.key.substr(0, k.key.find('<')), FiniteGroup::from_subgroup(Subgroup(spec, k.representative), 10000));
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = i + 1; j < reps.size(); ++j)
      if (reps[i].first != reps[j].first && reps[i].second.order() == reps[j].second.order())
        EXPECT_FALSE(abstract_isomorphic(reps[i].second, reps[j].second, 10000));
}

TEST(Classify, MetacyclicPairTable) {
  auto c = classify_metacyclic(spec_of({7, 3}, {2}));
  EXPECT_EQ(c.classes.size(), 3u + 9u);
  EXPECT_EQ(c.transitive_subgroups, 108);
  EXPECT_EQ(by_key(c, "pq.cyc").class_size, 14u);
  EXPECT_EQ(by_key(c, "pq.cyc").hgs, 4u);
  EXPECT_EQ(by_key(c, "p2q2").class_size, 1u);
  EXPECT_EQ(by_key(c, "p2q2").hgs, 2u);
  EXPECT_EQ(by_key(c, "pq.nonab").class_size, 16u);
  EXPECT_EQ(by_key(c, "2pq.nonab").aut_mm, 6u);
  for (const auto& k : c.classes) EXPECT_EQ(k.aut_source, AutSource::Both) << k.label;
}

TEST(Classify, MetacyclicPairTableP11) {
  auto c = classify_metacyclic(spec_of({11, 5}, {2}));
  EXPECT_EQ(c.classes.size(), 5u + 9u);
  for (const auto& k : c.classes) EXPECT_EQ(k.aut_source, AutSource::Both) << k.label;
}

TEST(Classify, ClassSizesSumToEnumeration) {
  auto spec = spec_of({11, 5}, {2});
  std::uint64_t members = 0;
  for (const auto& f : metacyclic_factor_transitive_subgroups(spec)) members += f.members.size();
  EXPECT_EQ(classify(spec).transitive_subgroups, members);
}

TEST(Classify, DiagonalTwoElementKillsTranslationTwist) {
  // beta1*gamma^2 inverts sigma1 and sigma3 together; it meets Aut(<sigma1>)
  // trivially yet still acts on sigma1, so y_1 = 0.
  auto spec = spec_of({23, 11, 5}, {});
  const auto b = spec.hol_mul(spec.gen("beta1"), spec.hol_pow(spec.gen("gamma"), 2));
  std::map<unsigned, int> y;
  EXPECT_EQ(hgs_count_cyclic(spec, {2}, {b}, &y), 1u);
  EXPECT_EQ(y.at(1), 0);
  EXPECT_EQ(hgs_count_cyclic(spec, {2}, {spec.gen("gamma")}, &y), 23u);
  EXPECT_EQ(y.at(1), 1);

  auto m = j_group_generators(spec, {{2}, {1}});
  m.push_back(b);
  const Subgroup sub(spec, m);
  ASSERT_EQ(sub.order(), 2530u);
  EXPECT_EQ(count_aut_fixing_stab(FiniteGroup::from_subgroup(sub, 10000), 10000), 88u);
}
