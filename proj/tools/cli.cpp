#include "cli.hpp"

#include <chrono>
#include <cstdlib>
#include <functional>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "cunningham/classify.hpp"
#include "cunningham/enumerate.hpp"
#include "cunningham/glue.hpp"
#include "cunningham/oracle.hpp"
#include "cunningham/perm.hpp"
#include "cunningham/report.hpp"
#include "cunningham/subgroup.hpp"

namespace cunningham::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Caps {
  std::uint64_t oracle = 50000;
  std::uint64_t iso = 10000;
  std::uint64_t glue = 30000;
};

struct Options {
  std::vector<std::uint64_t> primes;
  std::string shape = "0";
  std::string format = "md";
  std::string level = "quick";
  std::string emit;
  bool oracle = false;
  std::size_t length = 0;
  std::uint64_t max_start = 0;
  std::optional<std::uint64_t> oracle_cap, iso_cap, glue_cap;
};

std::uint64_t env_cap(const char* name, std::uint64_t fallback) {
  const char* v = std::getenv(name);
  if (!v || !*v) return fallback;
  const std::string s(v);
  if (s.find_first_not_of("0123456789") != std::string::npos || s.size() > 19)
    throw UsageError(std::string(name) + " must be a non-negative integer");
  return std::stoull(s);
}

Caps resolve_caps(const Options& o) {
  Caps c;
  c.oracle = o.oracle_cap.value_or(env_cap("HGS_ORACLE_CAP", c.oracle));
  c.iso = o.iso_cap.value_or(env_cap("HGS_ISO_CAP", c.iso));
  c.glue = o.glue_cap.value_or(env_cap("HGS_GLUE_ISO_CAP", c.glue));
  return c;
}

Shape resolve_shape(const Chain& chain, const std::string& s) {
  if (s.rfind("I=", 0) == 0) {
    std::string body = s.substr(2);
    if (body.size() >= 2 && body.front() == '{' && body.back() == '}') body = body.substr(1, body.size() - 2);
    std::vector<unsigned> I;
    std::stringstream ss(body);
    for (std::string item; std::getline(ss, item, ',');) {
      if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos || item.size() > 3)
        throw UsageError("bad shape '" + s + "'");
      I.push_back(static_cast<unsigned>(std::stoul(item)));
    }
    return make_shape(chain, I);
  }
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || s.size() > 3)
    throw UsageError("bad shape '" + s + "' (use an index or I=2,4)");
  const auto shapes = all_shapes(chain);
  const std::size_t k = std::stoul(s);
  if (k >= shapes.size())
    throw UsageError("shape index " + s + " out of range; chain has " + std::to_string(shapes.size()) + " shapes");
  return shapes[k];
}

ClassifyOptions classify_options(const Caps& caps) { return {caps.iso, caps.glue}; }

struct Listed {
  std::vector<HolElement> gens;
  std::string text;
};

std::string index_set(const std::vector<unsigned>& I) {
  std::string s = "{";
  for (std::size_t a = 0; a < I.size(); ++a) s += (a ? "," : "") + std::to_string(I[a]);
  return s + "}";
}

// Structured transitive subgroups in the enumeration's fixed order.
void for_each_structured(const GroupSpec& spec, const std::function<void(const Listed&)>& fn) {
  if (spec.shape().cyclic()) {
    for_each_cyclic_transitive(spec, [&](const CyclicMember& m) {
      std::string t;
      for (std::size_t a = 0; a < m.params.t.size(); ++a) t += (a ? "," : "") + std::to_string(m.params.t[a]);
      std::string names;
      for (std::size_t a = 0; a < m.A->names.size(); ++a) names += (a ? ", " : "") + m.A->names[a];
      fn({m.gens, "J_" + index_set(m.params.I) + " t=(" + t + ") ⋊ ⟨" + (names.empty() ? "1" : names) + "⟩"});
    });
    return;
  }
  if (spec.factors().size() == 1) {
    for (const auto& fam : metacyclic_factor_transitive_subgroups(spec))
      for (const auto& m : fam.members) fn({m.gens, fam.id + ": " + m.text});
    return;
  }
  const GlueData data = glue_data(spec);
  for_each_glued_transitive(spec, data, [&](const GluedMember& m) { fn({m.gens, m.text}); });
}

class Progress {
 public:
  Progress(std::ostream& err, std::string what) : err_(err), what_(std::move(what)) {
    err_ << "[hgs] " << what_ << " ..." << std::endl;
  }
  ~Progress() {
    const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start_;
    err_ << "[hgs] " << what_ << " done in " << dt.count() << " s" << std::endl;
  }

 private:
  std::ostream& err_;
  std::string what_;
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

int cmd_chains(const Options& o, std::ostream& out) {
  if (o.length == 0) throw UsageError("--length must be positive");
  for (const auto& c : find_chains(o.length, o.max_start)) out << to_string(c) << "\n";
  return kOk;
}

int cmd_groups(const Options& o, std::ostream& out) {
  const Chain chain = validate_chain(o.primes);
  out << "index\tshape\tstructure\n";
  const auto shapes = all_shapes(chain);
  for (std::size_t k = 0; k < shapes.size(); ++k)
    out << k << "\t" << shape_to_string(shapes[k]) << "\t" << structure_label(build_group(chain, shapes[k])) << "\n";
  return kOk;
}

int cmd_enumerate(const Options& o, std::ostream& out, std::ostream& err) {
  const Chain chain = validate_chain(o.primes);
  const GroupSpec spec = build_group(chain, resolve_shape(chain, o.shape));
  const Caps caps = resolve_caps(o);
  if (o.oracle && spec.hol_order() > caps.oracle) {
    err << "error: |Hol(N)| = " << spec.hol_order() << " exceeds the oracle cap " << caps.oracle << "\n";
    return kCapExceeded;
  }
  std::set<CodeSet> structured;
  std::size_t count = 0;
  {
    Progress p(err, "enumerating " + shape_to_string(spec.shape()));
    for_each_structured(spec, [&](const Listed& m) {
      ++count;
      out << count << "\t" << m.text << "\n";
      if (o.emit == "generators")
        for (const auto& g : m.gens) out << "  " << perm_to_cycles(spec.to_perm(g)) << "\n";
      if (o.oracle) structured.insert(Subgroup(spec, m.gens).element_codes(caps.oracle));
    });
  }
  out << "transitive subgroups: " << count << "\n";
  if (!o.oracle) return kOk;
  OracleResult res;
  {
    Progress p(err, "oracle enumeration of Hol(N)");
    res = oracle_transitive_subgroups(spec, caps.oracle);
  }
  const bool equal = count == structured.size() && std::set<CodeSet>(res.transitive.begin(), res.transitive.end()) == structured;
  out << "structured/oracle set equality: structured " << count << ", oracle " << res.transitive.size() << ", "
      << (equal ? "equal" : "DIFFERENT") << "\n";
  return equal ? kOk : kCheckFailed;
}

ClassTable classify_table(const Chain& chain, const GroupSpec& spec, const Caps& caps, std::ostream& err) {
  Progress p(err, "classifying " + shape_to_string(spec.shape()));
  return {chain, shape_to_string(spec.shape()), structure_label(spec), classify(spec, classify_options(caps))};
}

int cmd_classify(const Options& o, std::ostream& out, std::ostream& err) {
  const Chain chain = validate_chain(o.primes);
  const GroupSpec spec = build_group(chain, resolve_shape(chain, o.shape));
  const Format fmt = parse_format(o.format);
  const ClassTable t = classify_table(chain, spec, resolve_caps(o), err);
  if (fmt == Format::Markdown) out << "## " << to_string(chain) << " type " << t.type_label << " (" << t.type << ")\n\n";
  out << emit_table(t, fmt);
  if (fmt == Format::Markdown) {
    for (const auto& c : t.classification.classes)
      if (c.published_aut_mm && (*c.published_aut_mm != c.aut_mm || *c.published_hgs != c.hgs))
        out << "\nNote: " << c.label << " is listed with |Aut(M,M')| = " << *c.published_aut_mm
            << " and # HGS = " << *c.published_hgs << " in the reference table.";
    if (!t.classification.published_reference) out << "\nNo published table covers this type; counts are unverified.";
    out << "\n";
  }
  return kOk;
}

int cmd_count(const Options& o, std::ostream& out, std::ostream& err) {
  const Chain chain = validate_chain(o.primes);
  const GroupSpec spec = build_group(chain, resolve_shape(chain, o.shape));
  const ClassTable t = classify_table(chain, spec, resolve_caps(o), err);
  out << t.classification.classes.size() << " classes\n"
      << t.classification.transitive_subgroups << " transitive subgroups\n"
      << t.classification.total_hgs << " Hopf-Galois structures\n";
  return kOk;
}

class Checks {
 public:
  explicit Checks(std::ostream& out) : out_(out) {}
  template <class T>
  void expect(const std::string& name, const T& expected, const T& got) {
    std::ostringstream e, g;
    e << expected;
    g << got;
    line(expected == got, name + ": expected " + e.str() + ", got " + g.str());
  }
  void line(bool ok, const std::string& text) {
    out_ << (ok ? "PASS  " : "FAIL  ") << text << "\n";
    ++(ok ? pass_ : fail_);
  }
  void skip(const std::string& text) {
    out_ << "SKIP  " << text << "\n";
    ++skip_;
  }
  void note(const std::string& text) { out_ << "NOTE  " << text << "\n"; }
  int finish(bool full) {
    out_ << pass_ << " passed, " << fail_ << " failed, " << skip_ << " skipped\n";
    if (fail_) return kCheckFailed;
    return full && skip_ ? kCapExceeded : kOk;
  }

 private:
  std::ostream& out_;
  int pass_ = 0, fail_ = 0, skip_ = 0;
};

void verify_shape(const Chain& chain, const Shape& shape, const Caps& caps, bool full, Checks& ck, std::ostream& err) {
  const GroupSpec spec = build_group(chain, shape);
  const std::string name = shape_to_string(shape);
  ClassifyOptions opt = classify_options(caps);
  if (!full) opt.iso_cap = 0;
  Classification c;
  try {
    Progress p(err, "classifying " + name);
    c = classify(spec, opt);
  } catch (const EnumerateError& e) {
    if (e.kind() != EnumerateError::Kind::UnsupportedShape) throw;
    ck.skip(name + " classification: " + e.what());
    return;
  } catch (const ClassifyError& e) {
    if (e.kind() != ClassifyError::Kind::CapExceeded) {
      ck.line(false, name + " classification: " + e.what());
      return;
    }
    ck.skip(name + " classification: " + e.what());
    return;
  } catch (const NonIntegralCount& e) {
    ck.line(false, name + " Byott quotient: " + e.what());
    return;
  }

  const std::size_t classes = c.classes.size();
  if (shape.cyclic()) {
    ck.expect<BigInt>("cyclic classes", cyclic_class_count(chain), classes);
  } else {
    try {
      ck.expect<BigInt>(name + " classes", metacyclic_class_count(chain, shape.I), classes);
    } catch (const std::invalid_argument&) {
      ck.note(name + " classes: " + std::to_string(classes) + " (no published count; unverified)");
    }
  }
  ck.line(true, name + " Byott quotients integral for " + std::to_string(classes) + " classes");
  std::size_t both = 0;
  for (const auto& k : c.classes) both += k.aut_source == AutSource::Both;
  if (both) ck.line(true, name + " |Aut(M,M')| structured and backtracking agree on " + std::to_string(both) + " classes");

  BigInt streamed = 0;
  for_each_structured(spec, [&](const Listed&) { ++streamed; });
  ck.expect<BigInt>(name + " class sizes sum to the enumeration count", streamed, c.transitive_subgroups);

  if (!full) return;
  if (spec.hol_order() > caps.oracle) {
    ck.skip(name + " oracle: |Hol(N)| = " + std::to_string(spec.hol_order()) + " exceeds the oracle cap " +
            std::to_string(caps.oracle));
    return;
  }
  std::set<CodeSet> structured;
  for_each_structured(spec, [&](const Listed& m) { structured.insert(Subgroup(spec, m.gens).element_codes(caps.oracle)); });
  OracleResult res;
  {
    Progress p(err, "oracle enumeration for " + name);
    res = oracle_transitive_subgroups(spec, caps.oracle);
  }
  ck.expect<std::size_t>(name + " oracle transitive subgroups", res.transitive.size(), structured.size());
  ck.line(std::set<CodeSet>(res.transitive.begin(), res.transitive.end()) == structured,
          name + " structured and oracle subgroup sets are equal");
  std::vector<std::size_t> part;
  {
    Progress p(err, "oracle isomorphism partition for " + name);
    part = perm_iso_partition(spec, res.transitive, caps.iso);
  }
  ck.expect<std::size_t>(name + " oracle permutation-isomorphism classes", std::set<std::size_t>(part.begin(), part.end()).size(),
                         classes);
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  const Chain chain = validate_chain(o.primes);
  const bool full = o.level == "full";
  const Caps caps = resolve_caps(o);
  Checks ck(out);
  out << "verify " << to_string(chain) << " level=" << o.level << "\n";
  const auto shapes = all_shapes(chain);
  ck.expect<BigInt>("group shapes", fibonacci_groups(static_cast<unsigned>(chain.length())), shapes.size());
  for (const auto& s : shapes) verify_shape(chain, s, caps, full, ck, err);
  return ck.finish(full);
}

void add_chain(CLI::App* sub, Options& o) {
  sub->add_option("primes", o.primes, "Cunningham chain p1 > p2 > ... with p_i = 2 p_{i+1} + 1")->required();
}

void add_caps(CLI::App* sub, Options& o) {
  sub->add_option("--oracle-cap", o.oracle_cap, "Largest |Hol(N)| for brute force (env HGS_ORACLE_CAP, default 50000)");
  sub->add_option("--iso-cap", o.iso_cap,
                  "Largest |M| for the backtracking cross-check, 0 disables (env HGS_ISO_CAP, default 10000)");
  sub->add_option("--glue-iso-cap", o.glue_cap,
                  "Largest |M| backtracked when no structured |Aut(M,M')| exists (env HGS_GLUE_ISO_CAP, default 30000)");
}

void add_shape(CLI::App* sub, Options& o) {
  sub->add_option("--shape", o.shape, "Shape index (enumeration order) or explicit I=2,4")->capture_default_str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Transitive subgroups and Hopf-Galois structure counts for groups of Cunningham-chain order", "hgs"};
  app.require_subcommand(1, 1);
  Options o;

  auto* chains = app.add_subcommand("chains", "List Cunningham chains");
  chains->add_option("--length", o.length, "Chain length")->required();
  chains->add_option("--max", o.max_start, "Largest first prime")->required();

  auto* groups = app.add_subcommand("groups", "List the groups of order p1...pl");
  add_chain(groups, o);

  auto* verify = app.add_subcommand("verify", "Run the closed-form and oracle checks for a chain");
  add_chain(verify, o);
  verify->add_option("--level", o.level, "quick or full")->check(CLI::IsMember({"quick", "full"}))->capture_default_str();
  add_caps(verify, o);

  auto* enumerate = app.add_subcommand("enumerate", "Stream the transitive subgroups of Hol(N)");
  add_chain(enumerate, o);
  add_shape(enumerate, o);
  enumerate->add_flag("--oracle", o.oracle, "Cross-check against brute-force enumeration");
  enumerate->add_option("--emit", o.emit, "Also print generators in cycle notation")
      ->check(CLI::IsMember({"generators"}));
  add_caps(enumerate, o);

  auto* classify_cmd = app.add_subcommand("classify", "Classify transitive subgroups and count Hopf-Galois structures");
  add_chain(classify_cmd, o);
  add_shape(classify_cmd, o);
  classify_cmd->add_option("--format", o.format, "json, csv or md")
      ->check(CLI::IsMember({"json", "csv", "md", "markdown"}))
      ->capture_default_str();
  add_caps(classify_cmd, o);

  auto* count = app.add_subcommand("count", "Print class, subgroup and Hopf-Galois structure totals");
  add_chain(count, o);
  add_shape(count, o);
  add_caps(count, o);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }

  try {
    if (chains->parsed()) return cmd_chains(o, out);
    if (groups->parsed()) return cmd_groups(o, out);
    if (verify->parsed()) return cmd_verify(o, out, err);
    if (enumerate->parsed()) return cmd_enumerate(o, out, err);
    if (classify_cmd->parsed()) return cmd_classify(o, out, err);
    if (count->parsed()) return cmd_count(o, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ArithError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const AlgebraError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const EnumerateError& e) {
    err << "error: " << e.what() << "\n";
    return e.kind() == EnumerateError::Kind::TemplateBug ? kCheckFailed : kUsage;
  } catch (const ClassifyError& e) {
    err << "error: " << e.what() << "\n";
    return e.kind() == ClassifyError::Kind::CapExceeded ? kCapExceeded : kCheckFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kCheckFailed;
  }
  return kUsage;
}

}  // namespace cunningham::cli
