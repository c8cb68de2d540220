#include <gtest/gtest.h>

#include <algorithm>

#include "cunningham/arith.hpp"

using namespace cunningham;

namespace {

ArithError::Kind kind_of(const std::vector<std::uint64_t>& ps, std::size_t* index) {
  try {
    validate_chain(ps);
  } catch (const ArithError& e) {
    *index = e.index();
    return e.kind();
  }
  ADD_FAILURE() << "expected a chain error";
  return ArithError::Kind::Empty;
}

// Brute-force count of subgroups of (C_2)^l: subsets containing 0 closed under xor.
std::uint64_t brute_elem_abelian_total(unsigned l) {
  const unsigned size = 1u << l;
  std::uint64_t count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << size); ++mask) {
    if (!(mask & 1)) continue;
    bool closed = true;
    for (unsigned a = 0; a < size && closed; ++a)
      if (mask >> a & 1)
        for (unsigned b = 0; b < size; ++b)
          if ((mask >> b & 1) && !(mask >> (a ^ b) & 1)) {
            closed = false;
            break;
          }
    if (closed) ++count;
  }
  return count;
}

}  // namespace

TEST(Arith, ValidateChainDerivesInvariants) {
  auto c = validate_chain({7, 3});
  EXPECT_EQ(c.x, 1u);
  EXPECT_EQ(c.s, 1u);
  EXPECT_EQ(c.k, std::vector<std::uint64_t>{2});
  auto d = validate_chain({23, 11, 5});
  EXPECT_EQ(d.x, 2u);
  EXPECT_EQ(d.s, 1u);
  // 2^11 = 2048 = 89*23 + 1, so 2 is already of order 11 mod 23.
  EXPECT_EQ(d.k, (std::vector<std::uint64_t>{2, 3}));
  // Independent check: k_i is the least residue r > 1 with r^{p_i} = 1 mod p_{i-1}.
  for (std::size_t i = 1; i < d.primes.size(); ++i) {
    std::uint64_t r = 2;
    while (powmod(r, d.primes[i], d.primes[i - 1]) != 1) ++r;
    EXPECT_EQ(d.k[i - 1], r);
  }
  EXPECT_EQ(d.n(), 1265u);
}

TEST(Arith, ValidateChainErrors) {
  std::size_t idx = 0;
  EXPECT_EQ(kind_of({13, 5}, &idx), ArithError::Kind::ChainBroken);
  EXPECT_EQ(idx, 1u);
  EXPECT_EQ(kind_of({7, 4}, &idx), ArithError::Kind::NotPrime);
  EXPECT_EQ(idx, 2u);
  EXPECT_EQ(kind_of({5, 2}, &idx), ArithError::Kind::EvenPrime);
  EXPECT_EQ(idx, 2u);
  EXPECT_THROW(validate_chain({}), ArithError);
}

TEST(Arith, FindChains) {
  auto two = find_chains(2, 12);
  ASSERT_EQ(two.size(), 2u);
  EXPECT_EQ(two[0].primes, (std::vector<std::uint64_t>{7, 3}));
  EXPECT_EQ(two[1].primes, (std::vector<std::uint64_t>{11, 5}));
  auto three = find_chains(3, 30);
  ASSERT_EQ(three.size(), 1u);
  EXPECT_EQ(three[0].primes, (std::vector<std::uint64_t>{23, 11, 5}));
  auto one = find_chains(1, 4);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].primes, std::vector<std::uint64_t>{3});
  // Nothing below the bound is missed.
  auto found = find_chains(2, 200);
  for (std::uint64_t p = 3; p <= 200; ++p) {
    bool is_chain = is_prime(p) && is_prime((p - 1) / 2) && (p - 1) / 2 > 2;
    bool listed = std::any_of(found.begin(), found.end(), [&](const Chain& c) { return c.primes[0] == p; });
    EXPECT_EQ(is_chain, listed) << p;
  }
}

TEST(Arith, SmallFunctions) {
  EXPECT_EQ(two_adic_split(4).x, 2u);
  EXPECT_EQ(two_adic_split(4).s, 1u);
  EXPECT_EQ(two_adic_split(12).x, 2u);
  EXPECT_EQ(two_adic_split(12).s, 3u);
  EXPECT_EQ(two_adic_split(1).x, 0u);
  EXPECT_EQ(sigma0(1), 1u);
  EXPECT_EQ(sigma0(9), 3u);
  EXPECT_EQ(sigma0(12), 6u);
  EXPECT_EQ(multiplicative_order(2, 7), 3u);
  EXPECT_EQ(multiplicative_order(3, 11), 5u);
  EXPECT_THROW(multiplicative_order(7, 7), ArithError);
  EXPECT_EQ(inverse_mod(3, 7), 5u);
}

TEST(Arith, FibonacciAndShapes) {
  const int expect[] = {1, 2, 3, 5, 8, 13};
  for (unsigned l = 1; l <= 6; ++l) {
    EXPECT_EQ(fibonacci_groups(l), expect[l - 1]);
    EXPECT_EQ(valid_index_sets(l).size(), static_cast<std::size_t>(expect[l - 1]));
  }
  auto s4 = valid_index_sets(4);
  std::vector<std::vector<unsigned>> want{{}, {2}, {3}, {4}, {2, 4}};
  EXPECT_EQ(s4, want);
}

TEST(Arith, ElementaryAbelianCounts) {
  EXPECT_EQ(elem_abelian_2_total(0), 1);
  EXPECT_EQ(elem_abelian_2_total(2), 5);
  EXPECT_EQ(elem_abelian_2_total(3), 16);
  for (unsigned l = 0; l <= 4; ++l) EXPECT_EQ(elem_abelian_2_total(l), brute_elem_abelian_total(l)) << l;
  EXPECT_THROW(elem_abelian_2_subgroup_count(2, 3), ArithError);
}

TEST(Arith, SigmaAndClassPolynomials) {
  for (unsigned x = 0; x <= 5; ++x) {
    EXPECT_EQ(sigma_l(1, x), x + 1);
    EXPECT_EQ(sigma_l(2, x), 3 * x + 2);
  }
  EXPECT_EQ(cyclic_class_count(validate_chain({7, 3})), 12);
  EXPECT_EQ(cyclic_class_count(validate_chain({11, 5})), 18);
  EXPECT_EQ(cyclic_class_count(validate_chain({23, 11, 5})), 126);
  EXPECT_EQ(cyclic_class_count(validate_chain({47, 23, 11, 5})), 1121);
}
