#include "cunningham/enumerate.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace cunningham {

namespace {

void require_cyclic(const GroupSpec& spec) {
  if (!spec.shape().cyclic())
    throw EnumerateError(EnumerateError::Kind::UnsupportedShape, "cyclic shape required");
}

bool in(const std::vector<unsigned>& I, unsigned i) { return std::find(I.begin(), I.end(), i) != I.end(); }

void check_index_set(const GroupSpec& spec, const std::vector<unsigned>& I) {
  const auto valid = valid_index_sets(spec.length());
  if (std::find(valid.begin(), valid.end(), I) == valid.end())
    throw EnumerateError(EnumerateError::Kind::InvalidParams, "invalid index set");
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (std::size_t a = 0; a < parts.size(); ++a) out += (a ? sep : "") + parts[a];
  return out;
}

// Word for a 2-part automorphism in terms of beta_j and gamma.
std::string two_part_word(const GroupSpec& spec, const AutElement& a) {
  std::vector<std::string> w;
  const unsigned l = spec.length();
  for (unsigned j = 1; j < l; ++j)
    if (a.c[j - 1] != 1) w.push_back("beta" + std::to_string(j));
  if (a.c[l - 1] != 1) {
    const HolElement& g = spec.gen("gamma");
    AutElement x = g.a;
    unsigned e = 1;
    while (x.c[l - 1] != a.c[l - 1]) {
      x = spec.aut_mul(x, g.a);
      ++e;
    }
    w.push_back(e == 1 ? "gamma" : "gamma^" + std::to_string(e));
  }
  return w.empty() ? "1" : join(w, "*");
}

}  // namespace

std::vector<HolElement> j_group_generators(const GroupSpec& spec, const JParams& params) {
  require_cyclic(spec);
  check_index_set(spec, params.I);
  if (params.t.size() != params.I.size())
    throw EnumerateError(EnumerateError::Kind::InvalidParams, "one twist per index required");
  std::vector<HolElement> gens;
  for (unsigned j = 1; j <= spec.length(); ++j) {
    auto it = std::find(params.I.begin(), params.I.end(), j);
    HolElement s = spec.gen("sigma" + std::to_string(j));
    if (it == params.I.end()) {
      gens.push_back(s);
      continue;
    }
    const std::uint64_t t = params.t[static_cast<std::size_t>(it - params.I.begin())];
    if (t < 1 || t >= spec.prime(j))
      throw EnumerateError(EnumerateError::Kind::InvalidParams,
                           "twist t_" + std::to_string(j) + " out of range [1, p_i - 1]");
    gens.push_back(spec.hol_mul(s, spec.hol_pow(spec.gen("alpha" + std::to_string(j - 1)), t)));
  }
  return gens;
}

Subgroup j_group(const GroupSpec& spec, const JParams& params) {
  return Subgroup(spec, j_group_generators(spec, params));
}

std::vector<std::pair<std::string, HolElement>> a_I_generators(const GroupSpec& spec, const std::vector<unsigned>& I) {
  require_cyclic(spec);
  check_index_set(spec, I);
  std::vector<std::pair<std::string, HolElement>> out;
  const unsigned l = spec.length();
  for (unsigned j = 1; j <= l; ++j) {
    if (in(I, j)) continue;
    const bool alpha_ok = !in(I, j + 1);
    if (j < l) {
      if (alpha_ok) out.emplace_back("alpha" + std::to_string(j), spec.gen("alpha" + std::to_string(j)));
      out.emplace_back("beta" + std::to_string(j), spec.gen("beta" + std::to_string(j)));
    } else {
      out.emplace_back("delta", spec.gen("delta"));
      out.emplace_back("gamma", spec.gen("gamma"));
    }
  }
  return out;
}

std::vector<AbelianSubgroup> subgroups_of_abelian(const GroupSpec& spec, const std::vector<unsigned>& I) {
  const auto named = a_I_generators(spec, I);
  std::vector<AutElement> two_gens;
  std::vector<unsigned> alpha_pos;
  bool has_delta = false;
  for (const auto& [name, g] : named) {
    if (name.rfind("beta", 0) == 0 || name == "gamma") two_gens.push_back(g.a);
    else if (name == "delta") has_delta = true;
    else alpha_pos.push_back(static_cast<unsigned>(std::stoul(name.substr(5))));
  }

  // 2-part: (C_2)^a, times C_{2^x} when gamma is present. Enumerated by closure.
  const auto universe = aut_closure(spec, two_gens);
  struct Two {
    std::vector<std::uint64_t> codes;
    std::vector<AutElement> gens;
  };
  std::set<std::vector<std::uint64_t>> seen;
  std::vector<Two> twos;
  twos.push_back({aut_closure(spec, {}), {}});
  seen.insert(twos[0].codes);
  for (std::size_t idx = 0; idx < twos.size(); ++idx) {
    for (auto c : universe) {
      if (std::binary_search(twos[idx].codes.begin(), twos[idx].codes.end(), c)) continue;
      auto gens = twos[idx].gens;
      gens.push_back(spec.decode(c).a);
      auto codes = aut_closure(spec, gens);
      if (seen.insert(codes).second) twos.push_back({codes, gens});
    }
  }
  std::sort(twos.begin(), twos.end(), [](const Two& a, const Two& b) {
    return a.codes.size() != b.codes.size() ? a.codes.size() < b.codes.size() : a.codes < b.codes;
  });
  // Canonical generators: greedy over the sorted member codes.
  for (auto& t : twos) {
    t.gens.clear();
    std::vector<std::uint64_t> cur = aut_closure(spec, {});
    for (auto c : t.codes) {
      if (std::binary_search(cur.begin(), cur.end(), c)) continue;
      t.gens.push_back(spec.decode(c).a);
      cur = aut_closure(spec, t.gens);
    }
  }

  const std::uint64_t s = spec.chain().s;
  const std::vector<std::uint64_t> ds = has_delta ? divisors(s) : std::vector<std::uint64_t>{1};
  std::vector<AbelianSubgroup> out;
  for (const auto& t : twos) {
    for (auto d : ds) {
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << alpha_pos.size()); ++mask) {
        AbelianSubgroup a;
        a.two_part = t.codes;
        a.order = t.codes.size();
        for (const auto& g : t.gens) {
          a.gens.push_back(spec.from_aut(g));
          a.names.push_back(two_part_word(spec, g));
        }
        a.delta_order = d;
        if (d > 1) {
          a.gens.push_back(spec.hol_pow(spec.gen("delta"), s / d));
          a.names.push_back(d == s ? "delta" : "delta^" + std::to_string(s / d));
          a.order *= d;
        }
        for (std::size_t b = 0; b < alpha_pos.size(); ++b) {
          if (!(mask >> b & 1)) continue;
          const unsigned j = alpha_pos[b];
          a.alphas.push_back(j);
          a.gens.push_back(spec.gen("alpha" + std::to_string(j)));
          a.names.push_back("alpha" + std::to_string(j));
          a.order *= spec.prime(j + 1);
        }
        a.key = "<" + join(a.names, ",") + ">";
        out.push_back(std::move(a));
      }
    }
  }
  return out;
}

void for_each_cyclic_transitive(const GroupSpec& spec, const std::function<void(const CyclicMember&)>& fn) {
  require_cyclic(spec);
  for (const auto& I : valid_index_sets(spec.length())) {
    const auto subs = subgroups_of_abelian(spec, I);
    JParams params{I, std::vector<std::uint64_t>(I.size(), 1)};
    while (true) {
      const auto jg = j_group_generators(spec, params);
      if (orbit_size(spec, jg) != spec.n())
        throw EnumerateError(EnumerateError::Kind::TemplateBug, "J_{I,t} is not transitive");
      for (std::size_t a = 0; a < subs.size(); ++a) {
        CyclicMember m;
        m.params = params;
        m.a_index = a;
        m.A = &subs[a];
        m.gens = jg;
        m.gens.insert(m.gens.end(), subs[a].gens.begin(), subs[a].gens.end());
        fn(m);
      }
      // Next twist vector, last index fastest.
      bool advanced = false;
      for (std::size_t pos = I.size(); pos-- > 0;) {
        if (++params.t[pos] < spec.prime(I[pos])) {
          advanced = true;
          break;
        }
        params.t[pos] = 1;
      }
      if (!advanced) break;
    }
  }
}

namespace {

struct PairGens {
  const GroupSpec& spec;
  std::uint64_t p, q, k;
  HolElement e1, e2, S, A, B;

  explicit PairGens(const GroupSpec& sp)
      : spec(sp),
        p(sp.prime(1)),
        q(sp.prime(2)),
        k(sp.k(2)),
        e1(sp.gen("e1_2")),
        e2(sp.gen("e2_2")),
        S(sp.gen("S_2")),
        A(sp.gen("A_2")),
        B(sp.gen("B_2")) {}

  HolElement mul(const HolElement& a, const HolElement& b) const { return spec.hol_mul(a, b); }
  HolElement pw(const HolElement& g, std::uint64_t e) const { return spec.hol_pow(g, e); }
  // S A^u with u read mod q.
  HolElement SA(std::uint64_t u) const { return mul(S, pw(A, u % q)); }
  // [c e_j, X] = e_j^c X, with c read mod p.
  HolElement br(const HolElement& ej, std::uint64_t c, const HolElement& X) const { return mul(pw(ej, c % p), X); }
  std::uint64_t kp(std::uint64_t e) const { return powmod(k, e % q, p); }
  // (1 - k^e) * lambda mod p.
  std::uint64_t one_minus(std::uint64_t e, std::uint64_t lambda) const {
    return (1 + p - kp(e)) % p * lambda % p;
  }
};

std::string params_text(std::initializer_list<std::pair<const char*, std::uint64_t>> ps) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [n, v] : ps) {
    os << (first ? " with " : ",") << n << "=" << v;
    first = false;
  }
  return os.str();
}

std::string pair_u_class(const char* prefix, std::uint64_t u, std::uint64_t q) {
  const std::uint64_t w = std::min(u, q - 1 - u);
  if (w == 0) return std::string(prefix) + ".0";
  if (w == (q - 1) / 2) return std::string(prefix) + ".half";
  return std::string(prefix) + ".u" + std::to_string(w);
}

}  // namespace

std::vector<TransitiveFamily> metacyclic_factor_transitive_subgroups(const GroupSpec& pair_spec) {
  if (pair_spec.length() != 2 || pair_spec.shape().I != std::vector<unsigned>{2})
    throw EnumerateError(EnumerateError::Kind::UnsupportedShape, "two-prime spec with I={2} required");
  const PairGens g(pair_spec);
  const std::uint64_t p = g.p, q = g.q;
  std::vector<TransitiveFamily> fams;
  auto family = [&](std::string id, std::string order, std::string structure, std::string templ) -> TransitiveFamily& {
    fams.push_back({std::move(id), std::move(order), std::move(structure), std::move(templ), {}});
    return fams.back();
  };
  auto add = [](TransitiveFamily& f, std::vector<HolElement> gens, std::string params, std::string cls) {
    f.members.push_back({std::move(gens), f.templ + params, std::move(cls)});
  };

  {
    auto& f = family("p2q2", "p^2q^2", "F_p^2 ⋊ (C_q × C_q)", "P ⋊ ⟨S, A⟩");
    add(f, {g.e1, g.e2, g.S, g.A}, "", "p2q2");
  }
  {
    auto& f = family("2p2q2", "2p^2q^2", "F_p^2 ⋊ (C_q × C_{2q})", "Hol(N)");
    add(f, {g.e1, g.e2, g.S, g.A, g.B}, "", "2p2q2");
  }
  {
    auto& f = family("p2q", "p^2q", "F_p^2 ⋊ C_q", "P ⋊ ⟨SA^u⟩");
    for (std::uint64_t u = 0; u < q; ++u) add(f, {g.e1, g.e2, g.SA(u)}, params_text({{"u", u}}), pair_u_class("p2q", u, q));
  }
  {
    auto& f = family("2p2q", "2p^2q", "F_p^2 ⋊ C_{2q}", "P ⋊ ⟨SA^u, B⟩");
    for (std::uint64_t u = 0; u < q; ++u)
      add(f, {g.e1, g.e2, g.SA(u), g.B}, params_text({{"u", u}}), pair_u_class("2p2q", u, q));
  }
  {
    auto& f = family("pq2.1", "pq^2", "C_q × (C_p ⋊ C_q)", "⟨e1, S, [λe2, A]⟩");
    for (std::uint64_t l = 0; l < p; ++l) add(f, {g.e1, g.S, g.br(g.e2, l, g.A)}, params_text({{"λ", l}}), "pq2");
    auto& h = family("pq2.2", "pq^2", "C_q × (C_p ⋊ C_q)", "⟨e2, [λe1, S], [λe1, A]⟩");
    for (std::uint64_t l = 0; l < p; ++l)
      add(h, {g.e2, g.br(g.e1, l, g.S), g.br(g.e1, l, g.A)}, params_text({{"λ", l}}), "pq2");
  }
  {
    auto& f = family("2pq2.1", "2pq^2", "C_q × (C_p ⋊ C_{2q})", "⟨e1, S, [λ(1-k)e2, A], [2λe2, B]⟩");
    for (std::uint64_t l = 0; l < p; ++l)
      add(f, {g.e1, g.S, g.br(g.e2, g.one_minus(1, l), g.A), g.br(g.e2, 2 * l, g.B)}, params_text({{"λ", l}}), "2pq2");
    // S and A share the eigenvalue k on e1, so both carry the coefficient λ(1-k).
    auto& h = family("2pq2.2", "2pq^2", "C_q × (C_p ⋊ C_{2q})", "⟨e2, [λ(1-k)e1, S], [λ(1-k)e1, A], [2λe1, B]⟩");
    for (std::uint64_t l = 0; l < p; ++l)
      add(h, {g.e2, g.br(g.e1, g.one_minus(1, l), g.S), g.br(g.e1, g.one_minus(1, l), g.A), g.br(g.e1, 2 * l, g.B)},
          params_text({{"λ", l}}), "2pq2");
  }
  {
    auto& a = family("pq.1", "pq", "C_p ⋊ C_q", "⟨e1, [λe2, SA^u]⟩");
    for (std::uint64_t u = 1; u + 2 <= q; ++u)
      for (std::uint64_t l = 0; l < p; ++l)
        add(a, {g.e1, g.br(g.e2, l, g.SA(u))}, params_text({{"u", u}, {"λ", l}}), "pq.nonab");
    auto& b = family("pq.2", "pq", "C_{pq}", "⟨e1, [λe2, SA^-1]⟩");
    for (std::uint64_t l = 0; l < p; ++l) add(b, {g.e1, g.br(g.e2, l, g.SA(q - 1))}, params_text({{"λ", l}}), "pq.cyc");
    auto& c = family("pq.3", "pq", "C_p ⋊ C_q", "⟨e1, S⟩");
    add(c, {g.e1, g.S}, "", "pq.nonab");
    auto& d = family("pq.4", "pq", "C_p ⋊ C_q", "⟨e2, [λe1, SA^u]⟩");
    for (std::uint64_t u = 1; u + 2 <= q; ++u)
      for (std::uint64_t l = 0; l < p; ++l)
        add(d, {g.e2, g.br(g.e1, l, g.SA(u))}, params_text({{"u", u}, {"λ", l}}), "pq.nonab");
    auto& e = family("pq.5", "pq", "C_{pq}", "⟨e2, [λe1, S]⟩");
    for (std::uint64_t l = 0; l < p; ++l) add(e, {g.e2, g.br(g.e1, l, g.S)}, params_text({{"λ", l}}), "pq.cyc");
    auto& f = family("pq.6", "pq", "C_p ⋊ C_q", "⟨e2, SA^-1⟩");
    add(f, {g.e2, g.SA(q - 1)}, "", "pq.nonab");
  }
  {
    auto& a = family("2pq.1", "2pq", "C_p ⋊ C_{2q}", "⟨e1, [λ(1-k^u)e2, SA^u], [2λe2, B]⟩");
    for (std::uint64_t u = 1; u + 2 <= q; ++u)
      for (std::uint64_t l = 0; l < p; ++l)
        add(a, {g.e1, g.br(g.e2, g.one_minus(u, l), g.SA(u)), g.br(g.e2, 2 * l, g.B)},
            params_text({{"u", u}, {"λ", l}}), "2pq.nonab");
    auto& b = family("2pq.2", "2pq", "D_{2p} × C_q", "⟨e1, [λ(1-k^-1)e2, SA^-1], [2λe2, B]⟩");
    for (std::uint64_t l = 0; l < p; ++l)
      add(b, {g.e1, g.br(g.e2, g.one_minus(q - 1, l), g.SA(q - 1)), g.br(g.e2, 2 * l, g.B)}, params_text({{"λ", l}}),
          "2pq.dih");
    auto& c = family("2pq.3", "2pq", "C_p ⋊ C_{2q}", "⟨e1, S, [λe2, B]⟩");
    for (std::uint64_t l = 0; l < p; ++l) add(c, {g.e1, g.S, g.br(g.e2, l, g.B)}, params_text({{"λ", l}}), "2pq.nonab");
    auto& d = family("2pq.4", "2pq", "C_p ⋊ C_{2q}", "⟨e2, [λ(1-k^(u+1))e1, SA^u], [2λe1, B]⟩");
    for (std::uint64_t u = 1; u + 2 <= q; ++u)
      for (std::uint64_t l = 0; l < p; ++l)
        add(d, {g.e2, g.br(g.e1, g.one_minus(u + 1, l), g.SA(u)), g.br(g.e1, 2 * l, g.B)},
            params_text({{"u", u}, {"λ", l}}), "2pq.nonab");
    auto& e = family("2pq.5", "2pq", "D_{2p} × C_q", "⟨e2, [λ(1-k)e1, S], [2λe1, B]⟩");
    for (std::uint64_t l = 0; l < p; ++l)
      add(e, {g.e2, g.br(g.e1, g.one_minus(1, l), g.S), g.br(g.e1, 2 * l, g.B)}, params_text({{"λ", l}}), "2pq.dih");
    // The published row reads <e1, SA^-1, [λe2, B]>, which is not closed at
    // order 2pq for λ != 0 and repeats the D_{2p} x C_q row at λ = 0.
    auto& f = family("2pq.6", "2pq", "C_p ⋊ C_{2q}", "⟨e2, SA^-1, [λe1, B]⟩");
    for (std::uint64_t l = 0; l < p; ++l)
      add(f, {g.e2, g.SA(q - 1), g.br(g.e1, l, g.B)}, params_text({{"λ", l}}), "2pq.nonab");
  }
  return fams;
}

std::vector<MetaClassInfo> metacyclic_class_table(std::uint64_t p, std::uint64_t q) {
  std::vector<MetaClassInfo> t;
  const std::uint64_t aut_n = p * (p - 1);
  auto row = [&](std::string id, std::string order, std::string structure, std::uint64_t groups, std::uint64_t aut,
                 std::uint64_t pub_aut, std::uint64_t pub_hgs) {
    t.push_back({std::move(id), std::move(order), std::move(structure), groups, aut, groups * aut / aut_n, pub_aut, pub_hgs});
  };
  const std::string half = std::to_string((q - 1) / 2);
  row("p2q2", "p^2q^2", "N ⋊ (C_p ⋊ C_q)", 1, 2 * aut_n, 2 * aut_n, 2);
  row("2p2q2", "2p^2q^2", "Hol(N)", 1, 2 * aut_n, 2 * aut_n, 2);
  row("p2q.0", "p^2q", "C_p × (C_p ⋊ C_q)", 2, aut_n, aut_n, 2 * p);
  for (std::uint64_t u = 1; 2 * u + 3 <= q; ++u)
    row("p2q.u" + std::to_string(u), "p^2q", "F_p^2 ⋊_" + std::to_string(u) + " C_q", 2, p * aut_n, p * aut_n, 2 * p);
  row("p2q.half", "p^2q", "F_p^2 ⋊_" + half + " C_q", 1, 2 * p * aut_n, 2 * p * aut_n, 2 * p);
  row("2p2q.0", "2p^2q", "(C_p × (C_p ⋊ C_q)) ⋊ C_2", 2, aut_n, p * aut_n, 2 * p);
  for (std::uint64_t u = 1; 2 * u + 3 <= q; ++u)
    row("2p2q.u" + std::to_string(u), "2p^2q", "F_p^2 ⋊_" + std::to_string(u) + " C_{2q}", 2, aut_n, p * aut_n, 2 * p);
  row("2p2q.half", "2p^2q", "F_p^2 ⋊_" + half + " C_{2q}", 1, 2 * aut_n, 2 * p * aut_n, 2 * p);
  row("pq2", "pq^2", "C_q × (C_p ⋊ C_q)", 2 * p, (p - 1) * (q - 1), (p - 1) * (q - 1), 2 * (q - 1));
  row("2pq2", "2pq^2", "C_q × (C_p ⋊ C_{2q})", 2 * p, (p - 1) * (q - 1), (p - 1) * (q - 1), 2 * (q - 1));
  row("pq.nonab", "pq", "C_p ⋊ C_q", 2 * p * (q - 2) + 2, aut_n, aut_n, 2 * p * (q - 2) + 2);
  row("pq.cyc", "pq", "C_{pq}", 2 * p, (p - 1) * (q - 1), (p - 1) * (q - 1), 2 * (q - 1));
  row("2pq.nonab", "2pq", "C_p ⋊ C_{2q}", 2 * p * (q - 1), p - 1, p - 1, 2 * (q - 1));
  row("2pq.dih", "2pq", "D_{2p} × C_q", 2 * p, (p - 1) * (q - 1), (p - 1) * (q - 1), 2 * (q - 1));
  return t;
}

}  // namespace cunningham
