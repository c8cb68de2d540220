#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cunningham/algebra.hpp"

namespace cunningham {

// (p * q)[x] = p[q[x]]: apply q first.
Perm perm_compose(const Perm& p, const Perm& q);
Perm perm_inverse(const Perm& p);
Perm perm_identity(std::size_t n);
bool perm_is_identity(const Perm& p);
// Disjoint cycles of point indices, fixed points omitted; "()" for the identity.
std::string perm_to_cycles(const Perm& p);

}  // namespace cunningham
