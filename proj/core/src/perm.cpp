#include "cunningham/perm.hpp"

#include <numeric>
#include <sstream>

namespace cunningham {

Perm perm_compose(const Perm& p, const Perm& q) {
  Perm r(q.size());
  for (std::size_t x = 0; x < q.size(); ++x) r[x] = p[q[x]];
  return r;
}

Perm perm_inverse(const Perm& p) {
  Perm r(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) r[p[x]] = static_cast<std::uint32_t>(x);
  return r;
}

Perm perm_identity(std::size_t n) {
  Perm r(n);
  std::iota(r.begin(), r.end(), 0u);
  return r;
}

bool perm_is_identity(const Perm& p) {
  for (std::size_t x = 0; x < p.size(); ++x)
    if (p[x] != x) return false;
  return true;
}

std::string perm_to_cycles(const Perm& p) {
  std::vector<bool> seen(p.size(), false);
  std::ostringstream os;
  bool any = false;
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (seen[x] || p[x] == x) continue;
    any = true;
    os << '(';
    std::size_t y = x;
    bool first = true;
    while (!seen[y]) {
      seen[y] = true;
      os << (first ? "" : " ") << y;
      first = false;
      y = p[y];
    }
    os << ')';
  }
  if (!any) return "()";
  return os.str();
}

}  // namespace cunningham
