#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cunningham/algebra.hpp"
#include "cunningham/arith.hpp"

namespace cunningham {

class NonIntegralCount : public std::runtime_error {
 public:
  NonIntegralCount(std::uint64_t aut_mm, std::uint64_t class_size, std::uint64_t aut_n)
      : std::runtime_error("Byott quotient " + std::to_string(aut_mm) + "*" + std::to_string(class_size) + "/" +
                           std::to_string(aut_n) + " is not an integer") {}
};

class ClassifyError : public std::runtime_error {
 public:
  enum class Kind { UnknownFactorFamily, AutMismatch, CapExceeded };
  ClassifyError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

enum class AutSource { Structured, Backtracking, Both };
std::string to_string(AutSource s);

struct HgsClass {
  std::string key;
  std::string label;
  std::vector<HolElement> representative;
  std::string representative_text;
  std::uint64_t class_size = 0;
  std::uint64_t order = 0;  // |M|
  std::uint64_t aut_mm = 0;
  std::uint64_t hgs = 0;
  std::map<unsigned, int> y;  // cyclic type: position i-1 -> y_{i-1}
  AutSource aut_source = AutSource::Structured;
  std::optional<std::uint64_t> published_aut_mm;
  std::optional<std::uint64_t> published_hgs;
};

struct ClassifyOptions {
  // Backtracking cross-check for every class with |M| <= iso_cap (0 disables).
  std::uint64_t iso_cap = 10000;
  // Classes without a structured |Aut(M,M')| are backtracked up to this order.
  std::uint64_t glue_iso_cap = 30000;
};

struct Classification {
  Shape shape;
  std::string type_label;
  std::vector<HgsClass> classes;
  BigInt transitive_subgroups = 0;
  BigInt total_hgs = 0;
  // False when no published table covers this shape.
  bool published_reference = true;
};

// Byott's relation |Aut(M,M')| * e' / |Aut(N)|; throws NonIntegralCount.
std::uint64_t byott_count(std::uint64_t aut_mm, std::uint64_t class_size, std::uint64_t aut_n);

// prod_{i in I} p_{i-1}^{y_{i-1}}, with y_{i-1} = 1 iff A acts trivially on
// <sigma_{i-1}>. For A inside the product of the Aut(<sigma_j>) this differs
// from "A meets Aut(<sigma_{i-1}>) trivially" exactly when A has diagonal
// 2-elements such as beta_1 gamma^2.
std::uint64_t hgs_count_cyclic(const GroupSpec& spec, const std::vector<unsigned>& I,
                               const std::vector<HolElement>& a_gens, std::map<unsigned, int>* y = nullptr);

Classification classify_cyclic(const GroupSpec& spec, const ClassifyOptions& opt = {});
Classification classify_metacyclic(const GroupSpec& spec, const ClassifyOptions& opt = {});
Classification classify(const GroupSpec& spec, const ClassifyOptions& opt = {});

}  // namespace cunningham
