#include "cunningham/glue.hpp"

#include <algorithm>
#include <sstream>

#include "cunningham/arith.hpp"
#include "cunningham/enumerate.hpp"
#include "cunningham/subgroup.hpp"

namespace cunningham {

namespace {

HolElement commutator(const GroupSpec& spec, const HolElement& a, const HolElement& b) {
  return spec.hol_mul(spec.hol_mul(a, b), spec.hol_mul(spec.hol_inv(a), spec.hol_inv(b)));
}

// Normal closure in <gens> of the seed elements.
std::vector<HolElement> normal_closure(const GroupSpec& spec, const std::vector<HolElement>& gens,
                                       std::vector<HolElement> seed) {
  std::vector<HolElement> k;
  const HolElement id = spec.hol_identity();
  for (const auto& s : seed)
    if (!(s == id)) k.push_back(s);
  if (k.empty()) return k;
  Subgroup cur(spec, k);
  for (bool grown = true; grown;) {
    grown = false;
    for (std::size_t i = 0; i < k.size(); ++i)
      for (const auto& g : gens) {
        HolElement c = spec.hol_mul(spec.hol_mul(g, k[i]), spec.hol_inv(g));
        if (cur.contains(c)) continue;
        k.push_back(c);
        cur = Subgroup(spec, k);
        grown = true;
      }
  }
  return k;
}

std::vector<FactorMember> raw_members(const GroupSpec& fspec) {
  std::vector<FactorMember> out;
  if (fspec.length() == 2) {
    for (const auto& fam : metacyclic_factor_transitive_subgroups(fspec))
      for (const auto& m : fam.members) {
        FactorMember f;
        f.gens = m.gens;
        f.class_id = m.class_id;
        f.text = m.text;
        out.push_back(std::move(f));
      }
    return out;
  }
  const HolElement sigma = fspec.gen("sigma1");
  for (const auto& a : subgroups_of_abelian(fspec, {})) {
    FactorMember m;
    m.gens.push_back(sigma);
    m.gens.insert(m.gens.end(), a.gens.begin(), a.gens.end());
    m.class_id = "cyc." + std::to_string(a.order);
    std::string t = "⟨sigma1";
    for (const auto& n : a.names) t += ", " + n;
    m.text = t + "⟩";
    out.push_back(std::move(m));
  }
  return out;
}

void fill_quotient(const GroupSpec& fspec, const std::vector<std::uint64_t>& primes, FactorMember& m) {
  std::uint64_t e = 1;
  for (auto d : primes) e *= d;
  m.order = Subgroup(fspec, m.gens).order();
  std::vector<HolElement> seed;
  for (std::size_t i = 0; i < m.gens.size(); ++i) {
    seed.push_back(fspec.hol_pow(m.gens[i], e));
    for (std::size_t j = i + 1; j < m.gens.size(); ++j) seed.push_back(commutator(fspec, m.gens[i], m.gens[j]));
  }
  m.phi_gens = normal_closure(fspec, m.gens, seed);
  const Subgroup phi(fspec, m.phi_gens.empty() ? std::vector<HolElement>{fspec.hol_identity()} : m.phi_gens);
  m.phi_order = phi.order();
  const std::uint64_t index = m.order / m.phi_order;
  if (e % index != 0)
    throw EnumerateError(EnumerateError::Kind::UnsupportedShape,
                         "shared quotient of " + m.text + " has order " + std::to_string(index) + ", not squarefree");
  for (auto d : primes) {
    if (index % d != 0) continue;
    const std::uint64_t rest = e / d;
    const std::uint64_t pw = rest * inverse_mod(rest % d, d);
    for (const auto& g : m.gens) {
      HolElement h = fspec.hol_pow(g, pw);
      if (!phi.contains(h)) {
        m.blocks.emplace(d, h);
        break;
      }
    }
    if (!m.blocks.count(d))
      throw EnumerateError(EnumerateError::Kind::TemplateBug, "no block generator for prime " + std::to_string(d));
  }
}

std::string glue_text(const std::string& a, const std::string& b,
                      const std::vector<std::pair<std::uint64_t, std::uint64_t>>& glue) {
  std::string t = a + " × " + b;
  for (const auto& [d, c] : glue) t += " glued mod " + std::to_string(d) + " (c=" + std::to_string(c) + ")";
  return t;
}

}  // namespace

GlueData glue_data(const GroupSpec& spec) {
  if (spec.factors().size() != 2)
    throw EnumerateError(EnumerateError::Kind::UnsupportedShape,
                         "gluing supports exactly two direct factors, got " + std::to_string(spec.factors().size()));
  GlueData data;
  for (std::size_t f = 0; f < 2; ++f) data.factors.push_back({spec.factor_spec(f), {}});
  const auto a = prime_factors(data.factors[0].spec.hol_order());
  const auto b = prime_factors(data.factors[1].spec.hol_order());
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(data.shared_primes));
  for (auto& fac : data.factors) {
    fac.members = raw_members(fac.spec);
    for (auto& m : fac.members) {
      fill_quotient(fac.spec, data.shared_primes, m);
      if (orbit_size(fac.spec, m.gens) != fac.spec.n())
        throw EnumerateError(EnumerateError::Kind::TemplateBug, "factor member not transitive: " + m.text);
    }
  }
  return data;
}

std::string glue_class_key(const std::string& cls0, const std::string& cls1, const std::vector<std::uint64_t>& glued) {
  std::ostringstream os;
  os << cls0 << "|" << cls1;
  for (auto d : glued) os << "|g" << d;
  return os.str();
}

void for_each_glued_transitive(const GroupSpec& spec, const GlueData& data,
                               const std::function<void(const GluedMember&)>& fn, std::uint64_t verify_points) {
  const auto& f0 = data.factors[0];
  const auto& f1 = data.factors[1];
  for (std::size_t i = 0; i < f0.members.size(); ++i) {
    const auto& m0 = f0.members[i];
    for (std::size_t j = 0; j < f1.members.size(); ++j) {
      const auto& m1 = f1.members[j];
      std::vector<std::uint64_t> both;
      for (auto d : data.shared_primes)
        if (m0.blocks.count(d) && m1.blocks.count(d)) both.push_back(d);
      // Per glued-candidate prime: scalar 0 means unglued, c >= 1 glues h0 with h1^c.
      std::vector<std::uint64_t> choice(both.size(), 0);
      for (;;) {
        GluedMember out;
        out.member[0] = i;
        out.member[1] = j;
        std::uint64_t quotient = 1;
        for (const auto& g : m0.phi_gens) out.gens.push_back(spec.embed(0, g));
        for (const auto& g : m1.phi_gens) out.gens.push_back(spec.embed(1, g));
        std::vector<std::uint64_t> glued;
        for (std::size_t b = 0; b < both.size(); ++b) {
          const std::uint64_t d = both[b];
          const HolElement h0 = spec.embed(0, m0.blocks.at(d));
          const HolElement h1 = spec.embed(1, m1.blocks.at(d));
          if (choice[b] == 0) {
            out.gens.push_back(h0);
            out.gens.push_back(h1);
            quotient *= d * d;
          } else {
            out.gens.push_back(spec.hol_mul(h0, spec.hol_pow(h1, choice[b])));
            out.glue.emplace_back(d, choice[b]);
            glued.push_back(d);
            quotient *= d;
          }
        }
        for (const auto& [d, h] : m0.blocks)
          if (!m1.blocks.count(d)) out.gens.push_back(spec.embed(0, h)), quotient *= d;
        for (const auto& [d, h] : m1.blocks)
          if (!m0.blocks.count(d)) out.gens.push_back(spec.embed(1, h)), quotient *= d;
        out.order = m0.phi_order * m1.phi_order * quotient;
        out.class_key = glue_class_key(m0.class_id, m1.class_id, glued);
        out.text = glue_text(m0.text, m1.text, out.glue);
        if (spec.n() <= verify_points && orbit_size(spec, out.gens) != spec.n())
          throw EnumerateError(EnumerateError::Kind::TemplateBug, "glued subgroup not transitive: " + out.text);
        fn(out);

        std::size_t b = 0;
        for (; b < both.size(); ++b) {
          if (++choice[b] < both[b]) break;
          choice[b] = 0;
        }
        if (b == both.size()) break;
      }
    }
  }
}

}  // namespace cunningham
