#include "cunningham/classify.hpp"

#include <algorithm>

#include "cunningham/enumerate.hpp"
#include "cunningham/finite_group.hpp"
#include "cunningham/glue.hpp"
#include "cunningham/iso.hpp"
#include "cunningham/subgroup.hpp"

namespace cunningham {

namespace {

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::uint64_t backtrack_aut(const GroupSpec& spec, const std::vector<HolElement>& gens, std::uint64_t cap) {
  Subgroup m(spec, gens);
  return count_aut_fixing_stab(FiniteGroup::from_subgroup(m, cap), cap);
}

// Fills aut_mm from the structured value and/or backtracking, then hgs.
void settle(const GroupSpec& spec, HgsClass& c, std::optional<std::uint64_t> structured, const ClassifyOptions& opt) {
  std::optional<std::uint64_t> bt;
  const std::uint64_t cap = structured ? opt.iso_cap : std::max(opt.iso_cap, opt.glue_iso_cap);
  if (cap > 0 && c.order <= cap) bt = backtrack_aut(spec, c.representative, cap);
  if (structured && bt && *structured != *bt)
    throw ClassifyError(ClassifyError::Kind::AutMismatch, c.label + ": structured |Aut(M,M')| = " +
                                                              std::to_string(*structured) + ", backtracking gives " +
                                                              std::to_string(*bt));
  if (!structured && !bt)
    throw ClassifyError(ClassifyError::Kind::CapExceeded,
                        c.label + ": |M| = " + std::to_string(c.order) + " exceeds the backtracking cap " +
                            std::to_string(cap));
  c.aut_mm = structured ? *structured : *bt;
  c.aut_source = structured && bt ? AutSource::Both : structured ? AutSource::Structured : AutSource::Backtracking;
  c.hgs = byott_count(c.aut_mm, c.class_size, spec.aut_order());
}

void total(Classification& out) {
  for (const auto& c : out.classes) {
    out.transitive_subgroups += c.class_size;
    out.total_hgs += c.hgs;
  }
}

std::string index_set_text(const std::vector<unsigned>& I) {
  std::vector<std::string> s;
  for (auto i : I) s.push_back(std::to_string(i));
  return "{" + join(s, ",") + "}";
}

struct FactorClassInfo {
  std::string label;
  std::uint64_t aut_mm = 0;
};

FactorClassInfo factor_class_info(const GroupSpec& fspec, const std::string& class_id) {
  if (fspec.length() == 2) {
    for (const auto& c : metacyclic_class_table(fspec.prime(1), fspec.prime(2)))
      if (c.id == class_id) return {c.structure, c.aut_mm};
    throw ClassifyError(ClassifyError::Kind::UnknownFactorFamily, "unknown metacyclic class " + class_id);
  }
  if (class_id.rfind("cyc.", 0) != 0)
    throw ClassifyError(ClassifyError::Kind::UnknownFactorFamily, "unknown cyclic class " + class_id);
  const std::uint64_t p = fspec.prime(1);
  const std::string d = class_id.substr(4);
  return {d == "1" ? "C_" + std::to_string(p) : "C_" + std::to_string(p) + " ⋊ C_" + d, p - 1};
}

}  // namespace

std::string to_string(AutSource s) {
  switch (s) {
    case AutSource::Structured:
      return "structured";
    case AutSource::Backtracking:
      return "backtracking";
    case AutSource::Both:
      return "structured+backtracking";
  }
  return "";
}

std::uint64_t byott_count(std::uint64_t aut_mm, std::uint64_t class_size, std::uint64_t aut_n) {
  const BigInt num = BigInt(aut_mm) * class_size;
  if (num % aut_n != 0) throw NonIntegralCount(aut_mm, class_size, aut_n);
  return static_cast<std::uint64_t>(num / aut_n);
}

std::uint64_t hgs_count_cyclic(const GroupSpec& spec, const std::vector<unsigned>& I,
                               const std::vector<HolElement>& a_gens, std::map<unsigned, int>* y) {
  std::uint64_t h = 1;
  for (unsigned i : I) {
    const bool trivial = std::all_of(a_gens.begin(), a_gens.end(), [&](const HolElement& g) { return g.a.c[i - 2] == 1; });
    const int yi = trivial ? 1 : 0;
    if (y) (*y)[i - 1] = yi;
    if (yi) h *= spec.prime(i - 1);
  }
  return h;
}

Classification classify_cyclic(const GroupSpec& spec, const ClassifyOptions& opt) {
  if (!spec.shape().cyclic()) throw EnumerateError(EnumerateError::Kind::UnsupportedShape, "cyclic spec required");
  Classification out;
  out.shape = spec.shape();
  out.type_label = structure_label(spec);
  for (const auto& I : valid_index_sets(spec.length())) {
    JParams params{I, std::vector<std::uint64_t>(I.size(), 1)};
    const auto j = j_group_generators(spec, params);
    if (orbit_size(spec, j) != spec.n())
      throw EnumerateError(EnumerateError::Kind::TemplateBug, "J_" + index_set_text(I) + " is not transitive");
    std::uint64_t size = 1;
    for (auto i : I) size *= spec.prime(i) - 1;
    for (const auto& a : subgroups_of_abelian(spec, I)) {
      HgsClass c;
      c.key = index_set_text(I) + a.key;
      c.label = (I.empty() ? "C_n" : "J_" + index_set_text(I)) + " ⋊ " + "⟨" + (a.names.empty() ? std::string("1") : join(a.names, ", ")) + "⟩";
      c.representative = j;
      c.representative.insert(c.representative.end(), a.gens.begin(), a.gens.end());
      c.representative_text = c.label + " with t=1";
      c.class_size = size;
      c.order = spec.n() * a.order;
      c.hgs = hgs_count_cyclic(spec, I, a.gens, &c.y);
      // Byott's relation read backwards from the HGS count.
      const BigInt num = BigInt(c.hgs) * spec.aut_order();
      if (num % size != 0) throw NonIntegralCount(c.hgs, spec.aut_order(), size);
      const std::uint64_t hgs = c.hgs;
      settle(spec, c, static_cast<std::uint64_t>(num / size), opt);
      if (c.hgs != hgs) throw ClassifyError(ClassifyError::Kind::AutMismatch, c.label + ": HGS count changed");
      out.classes.push_back(std::move(c));
    }
  }
  total(out);
  return out;
}

Classification classify_metacyclic(const GroupSpec& spec, const ClassifyOptions& opt) {
  if (spec.shape().cyclic()) throw EnumerateError(EnumerateError::Kind::UnsupportedShape, "metacyclic spec required");
  Classification out;
  out.shape = spec.shape();
  out.type_label = structure_label(spec);

  if (spec.factors().size() == 1) {
    std::map<std::string, std::pair<std::uint64_t, const FamilyMember*>> seen;
    const auto fams = metacyclic_factor_transitive_subgroups(spec);
    for (const auto& f : fams)
      for (const auto& m : f.members) {
        auto& s = seen[m.class_id];
        if (s.first++ == 0) s.second = &m;
      }
    for (const auto& info : metacyclic_class_table(spec.prime(1), spec.prime(2))) {
      const auto it = seen.find(info.id);
      if (it == seen.end() || it->second.first != info.groups)
        throw EnumerateError(EnumerateError::Kind::TemplateBug, "class " + info.id + " size mismatch");
      HgsClass c;
      c.key = info.id;
      c.label = info.structure;
      c.representative = it->second.second->gens;
      c.representative_text = it->second.second->text;
      c.class_size = info.groups;
      c.order = Subgroup(spec, c.representative).order();
      c.published_aut_mm = info.published_aut_mm;
      c.published_hgs = info.published_hgs;
      settle(spec, c, info.aut_mm, opt);
      out.classes.push_back(std::move(c));
    }
    total(out);
    return out;
  }

  const GlueData data = glue_data(spec);
  std::vector<std::string> order;
  std::map<std::string, HgsClass> by_key;
  std::map<std::string, std::optional<std::uint64_t>> structured;
  for_each_glued_transitive(spec, data, [&](const GluedMember& m) {
    auto [it, fresh] = by_key.try_emplace(m.class_key);
    HgsClass& c = it->second;
    ++c.class_size;
    if (!fresh) return;
    order.push_back(m.class_key);
    c.key = m.class_key;
    c.representative = m.gens;
    c.representative_text = m.text;
    c.order = m.order;
    std::vector<std::string> labels;
    std::uint64_t product = 1;
    for (std::size_t f = 0; f < 2; ++f) {
      const auto info = factor_class_info(data.factors[f].spec, data.factors[f].members[m.member[f]].class_id);
      labels.push_back(info.label);
      product *= info.aut_mm;
    }
    std::string sep = " × ";
    bool odd_glue = false;
    if (!m.glue.empty()) {
      std::vector<std::string> ds;
      for (const auto& [d, c_] : m.glue) {
        ds.push_back("C_" + std::to_string(d));
        odd_glue = odd_glue || d != 2;
      }
      sep = " ×_{" + join(ds, "×") + "} ";
    }
    c.label = "(" + labels[0] + ")" + sep + "(" + labels[1] + ")";
    // The factor product holds for direct and 2-glued classes; odd gluing
    // changes |Aut(M,M')| and is counted by backtracking.
    structured[m.class_key] = odd_glue ? std::nullopt : std::optional<std::uint64_t>(product);
  });
  for (const auto& key : order) {
    HgsClass& c = by_key.at(key);
    settle(spec, c, structured.at(key), opt);
    out.classes.push_back(std::move(c));
  }
  out.published_reference = spec.length() <= 3;
  total(out);
  return out;
}

Classification classify(const GroupSpec& spec, const ClassifyOptions& opt) {
  return spec.shape().cyclic() ? classify_cyclic(spec, opt) : classify_metacyclic(spec, opt);
}

}  // namespace cunningham
