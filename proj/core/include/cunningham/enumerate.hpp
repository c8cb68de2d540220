#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cunningham/algebra.hpp"
#include "cunningham/subgroup.hpp"

namespace cunningham {

class EnumerateError : public std::runtime_error {
 public:
  enum class Kind { InvalidParams, UnsupportedShape, TemplateBug };
  EnumerateError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

// Index set I with one twist t_i in [1, p_i - 1] per i in I (same order as I).
struct JParams {
  std::vector<unsigned> I;
  std::vector<std::uint64_t> t;
};

// Generators sigma_j (j not in I) and [sigma_i, alpha_{i-1}^{t_i}] (i in I).
std::vector<HolElement> j_group_generators(const GroupSpec& spec, const JParams& params);
Subgroup j_group(const GroupSpec& spec, const JParams& params);

// Named generators of A_I: beta_j for j not in I and alpha_j when neither j nor
// j+1 is in I, with gamma and delta standing in for beta_l and alpha_l.
std::vector<std::pair<std::string, HolElement>> a_I_generators(const GroupSpec& spec, const std::vector<unsigned>& I);

// A subgroup of A_I: 2-part (explicit), odd part from delta and the alphas.
struct AbelianSubgroup {
  std::vector<HolElement> gens;
  std::vector<std::string> names;     // readable generator words
  std::vector<std::uint64_t> two_part;  // sorted Aut(N) codes of the 2-part
  std::uint64_t delta_order = 1;        // order of the delta-part
  std::vector<unsigned> alphas;         // positions j with alpha_j included
  std::uint64_t order = 1;
  std::string key;
};

// Every subgroup of A_I exactly once, in a fixed order.
std::vector<AbelianSubgroup> subgroups_of_abelian(const GroupSpec& spec, const std::vector<unsigned>& I);

struct CyclicMember {
  JParams params;
  std::size_t a_index = 0;  // into the subgroups_of_abelian list for params.I
  const AbelianSubgroup* A = nullptr;
  std::vector<HolElement> gens;
};

// Streams every transitive subgroup J_{I,t} x| A of the cyclic holomorph,
// valid I in shape order, then t lexicographic, then A. Each J_{I,t} is checked
// to be transitive before its subgroups are emitted.
void for_each_cyclic_transitive(const GroupSpec& spec, const std::function<void(const CyclicMember&)>& fn);

// Transitive subgroups of Hol(C_p x| C_q), grouped by template row.
struct FamilyMember {
  std::vector<HolElement> gens;
  std::string text;      // generator expression with parameters substituted
  std::string class_id;  // permutation-isomorphism class (see metacyclic_class_table)
};

struct TransitiveFamily {
  std::string id;
  std::string order_label;  // e.g. "2pq"
  std::string structure;
  std::string templ;
  std::vector<FamilyMember> members;
};

// Requires a two-prime spec with I = {2}.
std::vector<TransitiveFamily> metacyclic_factor_transitive_subgroups(const GroupSpec& pair_spec);

// Class data for Hol(C_p x| C_q) transitive subgroups, in table order.
// aut_mm and hgs are the derived values; the published_* fields carry the
// reference table, which differs in the p^2q and 2p^2q rows.
struct MetaClassInfo {
  std::string id;
  std::string order_label;
  std::string structure;
  std::uint64_t groups = 0;
  std::uint64_t aut_mm = 0;
  std::uint64_t hgs = 0;
  std::uint64_t published_aut_mm = 0;
  std::uint64_t published_hgs = 0;
};
std::vector<MetaClassInfo> metacyclic_class_table(std::uint64_t p, std::uint64_t q);

}  // namespace cunningham
