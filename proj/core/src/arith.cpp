#include "cunningham/arith.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <tuple>

namespace cunningham {

std::uint64_t Chain::n() const {
  std::uint64_t r = 1;
  for (auto q : primes) r *= q;
  return r;
}

std::string to_string(const Chain& c) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < c.primes.size(); ++i) os << (i ? "," : "") << c.primes[i];
  os << ')';
  return os.str();
}

bool is_prime(std::uint64_t m) {
  if (m < 2) return false;
  if (m % 2 == 0) return m == 2;
  for (std::uint64_t d = 3; d * d <= m; d += 2)
    if (m % d == 0) return false;
  return true;
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  unsigned __int128 r = 1 % m, b = a % m;
  while (e) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return static_cast<std::uint64_t>(r);
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
  std::int64_t t = 0, nt = 1, r = static_cast<std::int64_t>(p), nr = static_cast<std::int64_t>(a % p);
  while (nr) {
    std::int64_t q = r / nr;
    std::tie(t, nt) = std::make_pair(nt, t - q * nt);
    std::tie(r, nr) = std::make_pair(nr, r - q * nr);
  }
  if (r != 1) throw ArithError(ArithError::Kind::NotCoprime, 0, "inverse_mod: not coprime");
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

std::vector<std::uint64_t> prime_factors(std::uint64_t m) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= m; ++d) {
    if (m % d) continue;
    out.push_back(d);
    while (m % d == 0) m /= d;
  }
  if (m > 1) out.push_back(m);
  return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t m) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 1; d * d <= m; ++d) {
    if (m % d) continue;
    out.push_back(d);
    if (d * d != m) out.push_back(m / d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t p) {
  if (p < 2 || std::gcd(a % p, p) != 1)
    throw ArithError(ArithError::Kind::NotCoprime, 0, "multiplicative_order: not coprime");
  if (p == 2) return 1;
  std::uint64_t ord = p - 1;  // p is prime by precondition
  for (auto f : prime_factors(p - 1))
    while (ord % f == 0 && powmod(a, ord / f, p) == 1) ord /= f;
  return ord;
}

std::uint64_t smallest_of_order(std::uint64_t order, std::uint64_t p) {
  for (std::uint64_t a = 1; a < p; ++a)
    if (multiplicative_order(a, p) == order) return a;
  throw std::invalid_argument("smallest_of_order: no residue of order " + std::to_string(order) +
                              " mod " + std::to_string(p));
}

Chain validate_chain(const std::vector<std::uint64_t>& primes) {
  if (primes.empty()) throw ArithError(ArithError::Kind::Empty, 0, "empty chain");
  for (std::size_t i = 0; i < primes.size(); ++i) {
    if (!is_prime(primes[i]))
      throw ArithError(ArithError::Kind::NotPrime, i + 1,
                       "entry " + std::to_string(i + 1) + " (" + std::to_string(primes[i]) + ") is not prime");
    if (primes[i] == 2)
      throw ArithError(ArithError::Kind::EvenPrime, i + 1,
                       "entry " + std::to_string(i + 1) + " is the even prime 2");
  }
  for (std::size_t i = 0; i + 1 < primes.size(); ++i)
    if (primes[i] != 2 * primes[i + 1] + 1)
      throw ArithError(ArithError::Kind::ChainBroken, i + 1,
                       "chain broken at " + std::to_string(i + 1) + ": " + std::to_string(primes[i]) +
                           " != 2*" + std::to_string(primes[i + 1]) + "+1");
  Chain c;
  c.primes = primes;
  auto [x, s] = two_adic_split(primes.back() - 1);
  c.x = x;
  c.s = s;
  for (std::size_t i = 1; i < primes.size(); ++i) c.k.push_back(smallest_of_order(primes[i], primes[i - 1]));
  return c;
}

std::vector<Chain> find_chains(std::size_t length, std::uint64_t max_start) {
  if (length == 0) throw std::invalid_argument("find_chains: length must be >= 1");
  std::vector<Chain> out;
  for (std::uint64_t p1 = 3; p1 <= max_start; p1 += 2) {
    std::vector<std::uint64_t> ps{p1};
    bool ok = is_prime(p1);
    while (ok && ps.size() < length) {
      std::uint64_t prev = ps.back();
      if (prev % 2 == 0 || prev < 3) { ok = false; break; }
      std::uint64_t next = (prev - 1) / 2;
      if (next < 3 || !is_prime(next)) { ok = false; break; }
      ps.push_back(next);
    }
    if (ok) out.push_back(validate_chain(ps));
  }
  return out;
}

TwoAdic two_adic_split(std::uint64_t m) {
  if (m == 0) throw std::invalid_argument("two_adic_split: m must be positive");
  unsigned x = 0;
  while (m % 2 == 0) { m /= 2; ++x; }
  return {x, m};
}

std::uint64_t sigma0(std::uint64_t s) {
  if (s == 0) throw std::invalid_argument("sigma0: s must be positive");
  return divisors(s).size();
}

BigInt fibonacci_groups(unsigned l) {
  if (l == 0) throw std::invalid_argument("fibonacci_groups: l must be >= 1");
  BigInt a = 1, b = 2;  // F(1), F(2)
  if (l == 1) return a;
  for (unsigned i = 2; i < l; ++i) {
    BigInt c = a + b;
    a = b;
    b = c;
  }
  return b;
}

BigInt elem_abelian_2_subgroup_count(unsigned l, unsigned k) {
  if (k > l) throw ArithError(ArithError::Kind::KOutOfRange, 0, "k > l");
  BigInt num = 1, den = 1;
  for (unsigned i = 1; i <= k; ++i) {
    num *= (BigInt(1) << (l - (i - 1))) - 1;
    den *= (BigInt(1) << i) - 1;
  }
  return num / den;
}

BigInt elem_abelian_2_total(unsigned l) {
  BigInt t = 0;
  for (unsigned k = 0; k <= l; ++k) t += elem_abelian_2_subgroup_count(l, k);
  return t;
}

BigInt sigma_l(unsigned l, unsigned x) {
  if (l == 0) throw std::invalid_argument("sigma_l: l must be >= 1");
  BigInt t = 0;
  for (unsigned k = 0; k + 1 <= l; ++k) {
    BigInt num = 1, den = 1;
    for (unsigned i = 1; i <= k; ++i) {
      num *= (BigInt(1) << (l - i)) - 1;
      den *= (BigInt(1) << i) - 1;
    }
    t += ((BigInt(1) << (l - (k + 1))) * x + 1) * (num / den);
  }
  return t;
}

std::vector<std::vector<unsigned>> valid_index_sets(unsigned l) {
  std::vector<std::vector<unsigned>> out;
  unsigned m = l >= 2 ? l - 1 : 0;  // candidates 2..l
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    std::vector<unsigned> I;
    bool ok = true;
    for (unsigned b = 0; b < m; ++b) {
      if (!(mask >> b & 1)) continue;
      if (b > 0 && (mask >> (b - 1) & 1)) ok = false;
      I.push_back(b + 2);
    }
    if (ok) out.push_back(I);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

BigInt cyclic_class_count(unsigned l, unsigned x, std::uint64_t s) {
  BigInt total = 0;
  const BigInt d = sigma0(s);
  for (const auto& I : valid_index_sets(l)) {
    unsigned u = static_cast<unsigned>(I.size());
    bool has_l = !I.empty() && I.back() == l;
    if (has_l)
      total += (BigInt(1) << (l - 2 * u)) * elem_abelian_2_total(l - u);
    else
      total += (BigInt(1) << (l - 1 - 2 * u)) * sigma_l(l - u, x) * d;
  }
  return total;
}

BigInt cyclic_class_count(const Chain& chain) {
  return cyclic_class_count(static_cast<unsigned>(chain.length()), chain.x, chain.s);
}

BigInt metacyclic_class_count(const Chain& chain, const std::vector<unsigned>& I) {
  const std::size_t l = chain.length();
  if (l == 2 && I == std::vector<unsigned>{2}) return BigInt(chain.p(2)) + 9;
  if (l == 3 && I == std::vector<unsigned>{2}) {
    const BigInt q = chain.p(2);
    return BigInt(sigma0(chain.s)) * (BigInt(chain.x) * (27 + 3 * q) / 2 + q + 9);
  }
  if (l == 3 && I == std::vector<unsigned>{3}) return 5 * BigInt(chain.p(3)) + 49;
  throw std::invalid_argument("no closed-form class count for this shape");
}

}  // namespace cunningham
