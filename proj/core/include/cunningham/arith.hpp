#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace cunningham {

using BigInt = boost::multiprecision::cpp_int;

class ArithError : public std::runtime_error {
 public:
  enum class Kind { Empty, NotPrime, EvenPrime, ChainBroken, KOutOfRange, NotCoprime };
  ArithError(Kind kind, std::size_t index, const std::string& what)
      : std::runtime_error(what), kind_(kind), index_(index) {}
  Kind kind() const { return kind_; }
  // 1-based chain position for chain errors, 0 otherwise.
  std::size_t index() const { return index_; }

 private:
  Kind kind_;
  std::size_t index_;
};

// Validated Cunningham chain p_1 > ... > p_l with p_i = 2 p_{i+1} + 1.
// Accessors are 1-based to match the usual chain indexing.
struct Chain {
  std::vector<std::uint64_t> primes;
  unsigned x = 0;         // p_l - 1 = 2^x * s
  std::uint64_t s = 1;
  std::vector<std::uint64_t> k;  // k[i-2]: smallest residue of order p_i mod p_{i-1}

  std::size_t length() const { return primes.size(); }
  std::uint64_t p(std::size_t i) const { return primes.at(i - 1); }
  std::uint64_t k_at(std::size_t i) const { return k.at(i - 2); }
  std::uint64_t n() const;
  bool operator==(const Chain& o) const { return primes == o.primes; }
};

std::string to_string(const Chain& c);

bool is_prime(std::uint64_t m);
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m);
std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p);
std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t p);
// Smallest residue in [1, p) with the given multiplicative order mod prime p.
std::uint64_t smallest_of_order(std::uint64_t order, std::uint64_t p);
std::vector<std::uint64_t> prime_factors(std::uint64_t m);
std::vector<std::uint64_t> divisors(std::uint64_t m);

Chain validate_chain(const std::vector<std::uint64_t>& primes);
std::vector<Chain> find_chains(std::size_t length, std::uint64_t max_start);

struct TwoAdic {
  unsigned x;
  std::uint64_t s;
};
TwoAdic two_adic_split(std::uint64_t m);
std::uint64_t sigma0(std::uint64_t s);

BigInt fibonacci_groups(unsigned l);
BigInt elem_abelian_2_subgroup_count(unsigned l, unsigned k);
BigInt elem_abelian_2_total(unsigned l);
BigInt sigma_l(unsigned l, unsigned x);

// Index sets I in {2..l} with no two consecutive members, ordered by size then
// lexicographically.
std::vector<std::vector<unsigned>> valid_index_sets(unsigned l);

BigInt cyclic_class_count(unsigned l, unsigned x, std::uint64_t s);
BigInt cyclic_class_count(const Chain& chain);

// Class counts for metacyclic shapes with a closed form: l=2, I={2}: q+9;
// l=3, I={2}: s0(s)[x(27+3q)/2+q+9]; l=3, I={3}: 5r+49, where (p,q,r) is the
// chain. Throws std::invalid_argument for other shapes.
BigInt metacyclic_class_count(const Chain& chain, const std::vector<unsigned>& I);

}  // namespace cunningham
