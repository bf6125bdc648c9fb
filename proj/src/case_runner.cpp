#include <algorithm>
#include <chrono>
#include <functional>
#include <set>
#include <sstream>

#include "noether/case_verifier.hpp"
#include "noether/error.hpp"
#include "noether/expression.hpp"
#include "noether/lattice.hpp"
#include "noether/profile.hpp"
#include "noether/regular_module.hpp"

namespace noether {

std::string to_string(StepStatus s) {
  switch (s) {
    case StepStatus::Pass: return "pass";
    case StepStatus::Fail: return "fail";
    case StepStatus::UnknownStep: return "unknown-step";
    case StepStatus::Corrected: return "corrected";
  }
  return "?";
}

std::string to_string(StepType t) {
  switch (t) {
    case StepType::EigenvectorSum: return "eigenvector-sum";
    case StepType::Eigenvector: return "eigenvector";
    case StepType::Induce: return "induce";
    case StepType::Faithful: return "faithful";
    case StepType::Expect: return "expect";
    case StepType::Change: return "change";
    case StepType::Invariants: return "invariants";
    case StepType::Eliminate: return "eliminate";
    case StepType::LinearSplit: return "linear-split";
    case StepType::ScalarReduce: return "scalar-reduce";
    case StepType::Coefficient: return "coefficient";
    case StepType::DirectProduct: return "direct-product";
    case StepType::Rule: return "rule";
    case StepType::InducedSearch: return "induced-search";
  }
  return "?";
}

bool CaseReport::passed() const {
  if (steps.empty()) return false;
  for (const auto& s : steps)
    if (s.status == StepStatus::Fail) return false;
  return verdict.status != VerdictStatus::Unknown;
}

namespace {

using Fractions = std::vector<LaurentFraction>;

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\n");
  return s.substr(b, e - b + 1);
}

/// Splits at `sep` outside parentheses.
std::vector<std::string> split_top(const std::string& s, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == sep && depth == 0) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!trim(cur).empty()) out.push_back(trim(cur));
  return out;
}

std::pair<std::string, std::string> split_definition(const std::string& def) {
  const auto eq = def.find('=');
  if (eq == std::string::npos) return {trim(def), trim(def)};
  return {trim(def.substr(0, eq)), trim(def.substr(eq + 1))};
}

std::string replace_all(std::string s, const std::string& from, const std::string& to) {
  for (auto pos = s.find(from); pos != std::string::npos; pos = s.find(from, pos + to.size()))
    s.replace(pos, from.size(), to);
  return s;
}

CyclotomicInt constant_value(const std::string& text, int n) {
  const LaurentFraction f = parse_expression(text, {}, n);
  const auto mono = f.as_unit_monomial();
  if (!mono) throw Error(ErrorCode::ParseError, "'" + text + "' is not a root of unity");
  return mono->second;
}

RootExponent constant_root(const std::string& text, int n) {
  const auto r = constant_value(text, n).as_root_of_unity();
  if (!r) throw Error(ErrorCode::ParseError, "'" + text + "' is not a root of unity");
  return r->canonical();
}

std::string root_string(const RootExponent& r) {
  const RootExponent c = r.canonical();
  if (c.modulus == 1) return "1";
  if (c.modulus == 2) return "-1";
  return "zeta_" + std::to_string(c.modulus) + "^" + std::to_string(c.exponent);
}

/// Leading term under the lexicographic order of exponent vectors.
std::pair<Exponents, CyclotomicInt> leading(const LaurentPoly& p) { return *p.terms().rbegin(); }

/// Rewrites a fraction equal to a unit monomial as that monomial.
LaurentFraction simplify(const LaurentFraction& f, long long M) {
  if (f.as_unit_monomial() || f.is_zero()) return f;
  const auto [en, cn] = leading(f.numerator());
  const auto [ed, cd] = leading(f.denominator());
  Exponents e(en.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = en[i] - ed[i];
  for (long long k = 0; k < M; ++k) {
    const CyclotomicInt r = CyclotomicInt::zeta(M, k);
    const long long L = std::max({static_cast<long long>(cd.conductor()), static_cast<long long>(cn.conductor()), M});
    if (!(r.lifted(L) * cd.lifted(L) == cn.lifted(L))) continue;
    const LaurentFraction cand(LaurentPoly::monomial(e, r));
    if (cand == f) return cand;
    break;
  }
  return f;
}

LaurentFraction variable(int d, int i) { return LaurentFraction::variable(d, i); }

Fractions identity_map(int d) {
  Fractions out;
  for (int i = 0; i < d; ++i) out.push_back(variable(d, i));
  return out;
}

class Runner {
 public:
  Runner(Group g, int family, int n, FieldDescriptor field, CaseReport& report)
      : G_(std::move(g)),
        family_(family),
        n_(n),
        field_(std::move(field)),
        M_(std::max<long long>(4, n >= 3 ? (1LL << (n - 3)) : 1)),
        module_(G_, M_),
        report_(report) {
    symbols_ = {"s", "t", "l"};
  }

  /// Returns false when a step failed.
  bool run(const std::vector<ScriptStep>& steps, const std::string& prefix = "") {
    for (std::size_t i = 0; i < steps.size() && !stopped_; ++i) {
      const ScriptStep& s = steps[i];
      if (!s.only.empty() && std::count(s.only.begin(), s.only.end(), family_) == 0) continue;
      Outcome o = guarded(s);
      if (o.ok) {
        report_.steps.push_back({prefix + s.name, o.status, s.ref, o.diff});
        continue;
      }
      if (!s.corrected.empty()) {
        report_.steps.push_back({prefix + s.name, StepStatus::Corrected, s.ref,
                                 o.diff + "; replaced by the corrected steps below"});
        if (!run(s.corrected, "corrected: ")) return false;
        if (s.resume.empty()) return true;
        const auto it = std::find_if(steps.begin(), steps.end(),
                                     [&](const ScriptStep& t) { return t.name == s.resume; });
        if (it == steps.end()) throw Error(ErrorCode::ParseError, "unknown resume step " + s.resume);
        i = static_cast<std::size_t>(it - steps.begin()) - 1;
        continue;
      }
      report_.steps.push_back({prefix + s.name, StepStatus::Fail, s.ref, o.diff});
      return false;
    }
    return true;
  }

  bool has_verdict() const { return verdict_set_; }

 private:
  struct Outcome {
    bool ok = true;
    StepStatus status = StepStatus::Pass;
    std::string diff;
  };

  static Outcome fail(std::string why) { return {false, StepStatus::Fail, std::move(why)}; }
  static Outcome pass(std::string note = "") { return {true, StepStatus::Pass, std::move(note)}; }

  Outcome guarded(const ScriptStep& s) {
    try {
      return execute(s);
    } catch (const Error& e) {
      return fail(e.what());
    }
  }

  Outcome execute(const ScriptStep& s) {
    switch (s.type) {
      case StepType::EigenvectorSum: return eigenvector_sum(s);
      case StepType::Eigenvector: return eigenvector_step(s);
      case StepType::Induce: return induce(s);
      case StepType::Faithful: return faithful();
      case StepType::Expect: return expect(s);
      case StepType::Change: return change(s);
      case StepType::Invariants: return invariants(s);
      case StepType::Eliminate: return eliminate(s);
      case StepType::LinearSplit: return linear_split(s);
      case StepType::ScalarReduce: return scalar_reduce();
      case StepType::Coefficient: return coefficient(s);
      case StepType::DirectProduct: return direct_product(s);
      case StepType::Rule: return rule(s);
      case StepType::InducedSearch: return induced_search();
    }
    return fail("unknown step type");
  }

  int dim() const { return static_cast<int>(names_.size()); }

  std::uint32_t element(const std::string& word) const {
    return G_.evaluate(parse_word(word, symbols_, n_));
  }

  int var_index(const std::string& name) const {
    const auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) throw Error(ErrorCode::ParseError, "unknown variable " + name);
    return static_cast<int>(it - names_.begin());
  }

  LaurentFraction parse(const std::string& text, const std::vector<std::string>& vars) const {
    std::string t = text;
    for (const auto& [k, v] : report_.facts) t = replace_all(t, "{" + k + "}", "(" + v + ")");
    return parse_expression(t, vars, n_);
  }

  /// I_g[j] = g(x_j) for every element, by BFS: (s e)(x) = s(e(x)).
  std::vector<Fractions> element_actions(const std::vector<Fractions>& gens, int d) const {
    std::vector<Fractions> out(G_.order());
    std::vector<bool> seen(G_.order(), false);
    out[0] = identity_map(d);
    seen[0] = true;
    std::vector<std::uint32_t> queue{0};
    for (std::size_t q = 0; q < queue.size(); ++q) {
      const std::uint32_t e = queue[q];
      for (std::size_t k = 0; k < G_.generators().size(); ++k) {
        const std::uint32_t se = G_.mul(G_.generators()[k], e);
        if (seen[se]) continue;
        Fractions img;
        for (const auto& f : out[e]) img.push_back(simplify(fraction_substitute(f, gens[k]), M_));
        out[se] = std::move(img);
        seen[se] = true;
        queue.push_back(se);
      }
    }
    return out;
  }

  std::vector<std::uint32_t> kernel_on(const std::vector<Fractions>& actions,
                                       const std::vector<int>& vars) const {
    std::vector<std::uint32_t> K;
    const int d = dim();
    for (std::uint32_t g = 0; g < actions.size(); ++g) {
      bool trivial = true;
      for (int j : vars)
        if (!(actions[g][static_cast<std::size_t>(j)] == variable(d, j))) {
          trivial = false;
          break;
        }
      if (trivial) K.push_back(g);
    }
    return K;
  }

  Fractions image_of(const std::string& key) const {
    if (key == "s" || key == "t" || key == "l") {
      const auto k = static_cast<std::size_t>(key == "s" ? 0 : key == "t" ? 1 : 2);
      if (k < act_.size()) return act_[k];
    }
    return element_actions(act_, dim())[element(key)];
  }

  ActionAssignment current_assignment() const {
    ActionAssignment a{G_, {}, names_};
    for (std::size_t k = 0; k < act_.size(); ++k) {
      auto m = from_images(act_[k], M_);
      if (!m)
        throw Error(ErrorCode::NotMonomial,
                    "the action of " + G_.generator_names()[k] + " is not monomial over zeta_" +
                        std::to_string(M_));
      a.images.push_back(*m);
    }
    return a;
  }

  void set_assignment(const ActionAssignment& a) {
    names_ = a.variable_names;
    act_.clear();
    for (const auto& img : a.images) {
      Fractions f;
      for (const auto& v : variable_images(img.lifted(std::lcm(img.m, M_)))) f.push_back(simplify(v, M_));
      act_.push_back(std::move(f));
    }
    report_.assignments.push_back(a);
  }

  void snapshot() {
    try {
      report_.assignments.push_back(current_assignment());
    } catch (const Error&) {
      // non-monomial stages have no assignment snapshot
    }
  }

  std::string describe(const Fractions& f) const {
    std::ostringstream os;
    for (std::size_t j = 0; j < f.size(); ++j)
      os << (j ? ", " : "") << names_[j] << " -> " << f[j].to_string(names_);
    return os.str();
  }

  // ---- steps -------------------------------------------------------------

  Outcome eigenvector_sum(const ScriptStep& s) {
    if (s.args.size() < 3) throw Error(ErrorCode::ParseError, "eigenvector sum needs name, coefficient, word");
    struct Range {
      std::string var;
      long long lo, hi;
    };
    std::vector<Range> ranges;
    for (std::size_t i = 3; i < s.args.size(); ++i) {
      const auto [var, span] = split_definition(s.args[i]);
      const auto dots = span.find("..");
      ranges.push_back({var, parse_integer_expression(span.substr(0, dots), n_),
                        parse_integer_expression(span.substr(dots + 2), n_)});
    }
    RegVector v = module_.zero();
    std::vector<long long> idx(ranges.size());
    for (std::size_t r = 0; r < ranges.size(); ++r) idx[r] = ranges[r].lo;
    while (true) {
      std::string coeff = s.args[1], word = s.args[2];
      for (std::size_t r = 0; r < ranges.size(); ++r) {
        coeff = replace_all(coeff, "{" + ranges[r].var + "}", std::to_string(idx[r]));
        word = replace_all(word, "{" + ranges[r].var + "}", std::to_string(idx[r]));
      }
      const CyclotomicInt c = constant_value(coeff, n_).lifted(M_);
      const std::uint32_t g = element(word);
      v[g] += c;
      std::size_t r = 0;
      for (; r < ranges.size(); ++r) {
        if (++idx[r] <= ranges[r].hi) break;
        idx[r] = ranges[r].lo;
      }
      if (r == ranges.size()) break;
    }
    if (is_zero(v)) return fail(s.args[0] + " is the zero vector");
    std::vector<std::uint32_t> gens;
    std::vector<RootExponent> values;
    for (const auto& claim : s.args2) {
      const auto colon = claim.find(':');
      gens.push_back(element(trim(claim.substr(0, colon))));
      values.push_back(constant_root(trim(claim.substr(colon + 1)), n_));
    }
    require_eigenvector(module_, v, gens, values);
    vectors_[s.args[0]] = std::move(v);
    return pass();
  }

  Outcome eigenvector_step(const ScriptStep& s) {
    std::vector<std::uint32_t> gens;
    std::vector<RootExponent> values;
    for (const auto& claim : s.args2) {
      const auto colon = claim.find(':');
      gens.push_back(element(trim(claim.substr(0, colon))));
      values.push_back(constant_root(trim(claim.substr(colon + 1)), n_));
    }
    vectors_[s.args.at(0)] = eigenvector(module_, gens, values);
    return pass();
  }

  Outcome induce(const ScriptStep& s) {
    std::vector<RegVector> vecs;
    std::vector<std::string> names;
    for (const auto& def : s.args) {
      const auto [name, rhs] = split_definition(def);
      std::istringstream is(rhs);
      std::vector<std::string> toks;
      for (std::string t; is >> t;) toks.push_back(t);
      if (toks.empty()) throw Error(ErrorCode::ParseError, "empty definition " + def);
      const auto it = vectors_.find(toks.back());
      if (it == vectors_.end()) throw Error(ErrorCode::ParseError, "unknown vector " + toks.back());
      std::string word;
      for (std::size_t i = 0; i + 1 < toks.size(); ++i) word += toks[i] + " ";
      vecs.push_back(module_.act(element(word), it->second));
      names.push_back(name);
    }
    const auto mats = monomial_generator_matrices(module_, vecs);
    const int d = static_cast<int>(vecs.size());
    names_ = names;
    act_.clear();
    for (const auto& Mx : mats) {
      Fractions f;
      for (int j = 0; j < d; ++j)
        f.push_back(LaurentFraction(LaurentPoly::monomial(
            [&] {
              Exponents e(static_cast<std::size_t>(d), 0);
              e[static_cast<std::size_t>(Mx.target[static_cast<std::size_t>(j)])] = 1;
              return e;
            }(),
            CyclotomicInt::from_root(Mx.coeff[static_cast<std::size_t>(j)]))));
      act_.push_back(std::move(f));
    }
    linear_ = mats;
    snapshot();
    return pass();
  }

  Outcome faithful() {
    std::vector<int> all(static_cast<std::size_t>(dim()));
    for (int j = 0; j < dim(); ++j) all[static_cast<std::size_t>(j)] = j;
    const auto K = kernel_on(element_actions(act_, dim()), all);
    if (K.size() != 1)
      return fail("kernel of the action has order " + std::to_string(K.size()) + ", e.g. " +
                  G_.element_name(K[1]));
    return pass("kernel trivial on " + std::to_string(dim()) + " variables");
  }

  std::string compare_table(const std::string& text) const {
    std::vector<std::string> diff;
    std::map<std::string, Fractions> cache;
    for (const auto& e : parse_table(text)) {
      auto it = cache.find(e.key);
      if (it == cache.end()) it = cache.emplace(e.key, image_of(e.key)).first;
      const int j = var_index(e.variable);
      LaurentFraction expected(dim());
      try {
        expected = parse(e.image, names_);
      } catch (const Error& err) {
        diff.push_back(e.key + "(" + e.variable + "): cannot read '" + e.image + "' (" + err.what() + ")");
        continue;
      }
      const LaurentFraction& actual = it->second[static_cast<std::size_t>(j)];
      if (!(actual == expected))
        diff.push_back(e.key + "(" + e.variable + "): expected " + e.image + ", derived " +
                       actual.to_string(names_));
    }
    std::string out;
    for (const auto& d : diff) out += (out.empty() ? "" : "; ") + d;
    return out;
  }

  Outcome expect(const ScriptStep& s) {
    const std::string table = s.args.at(0);
    const std::string diff = compare_table(table);
    if (!diff.empty()) return fail(diff);
    // A table covering every generator and variable must itself be a group action.
    const auto entries = parse_table(table);
    std::set<std::pair<std::string, std::string>> covered;
    for (const auto& e : entries) covered.insert({e.key, e.variable});
    const std::vector<std::string> keys{"s", "t", "l"};
    bool complete = true;
    for (std::size_t k = 0; k < G_.generators().size(); ++k)
      for (const auto& v : names_)
        if (!covered.count({keys[k], v})) complete = false;
    if (complete) {
      std::string t = table;
      for (const auto& [k, v] : report_.facts) t = replace_all(t, "{" + k + "}", "(" + v + ")");
      try {
        const auto a = table_assignment(G_, t, names_, n_, M_);
        const auto hom = verify_homomorphism(a);
        for (const auto& r : hom.entries)
          if (!r.pass) return fail("the table violates " + r.relation + ": " + r.detail);
      } catch (const Error&) {
        // non-monomial tables are compared entrywise only
      }
    }
    if (!s.args2.empty()) {
      const std::string printed_diff = compare_table(s.args2.front());
      if (!printed_diff.empty())
        return {true, StepStatus::Corrected, "printed table differs: " + printed_diff};
    }
    return pass(std::to_string(entries.size()) + " entries match");
  }

  Outcome change(const ScriptStep& s) {
    const int d = dim();
    std::vector<std::string> new_names;
    std::vector<std::string> rhs;
    for (const auto& def : s.args) {
      auto [name, r] = split_definition(def);
      new_names.push_back(name);
      rhs.push_back(r);
    }
    if (static_cast<int>(new_names.size()) != d)
      return fail("expected " + std::to_string(d) + " new variables, got " + std::to_string(new_names.size()));
    Fractions defs;
    for (const auto& r : rhs) defs.push_back(parse(r, names_));
    Fractions inverse(static_cast<std::size_t>(d), LaurentFraction(d));
    if (!s.args2.empty()) {
      std::vector<bool> seen(static_cast<std::size_t>(d), false);
      for (const auto& def : s.args2) {
        const auto [old, r] = split_definition(def);
        const int i = var_index(old);
        inverse[static_cast<std::size_t>(i)] = parse(r, new_names);
        seen[static_cast<std::size_t>(i)] = true;
      }
      if (std::find(seen.begin(), seen.end(), false) != seen.end())
        return fail("inverse definitions do not cover every old variable");
    } else {
      IntMatrix B(d, d);
      for (int k = 0; k < d; ++k) {
        const auto mono = defs[static_cast<std::size_t>(k)].as_unit_monomial();
        if (!mono || !mono->second.is_one())
          return fail("definition of " + new_names[static_cast<std::size_t>(k)] +
                      " is not a monomial; an inverse must be supplied");
        for (int i = 0; i < d; ++i) B(i, k) = mono->first[static_cast<std::size_t>(i)];
      }
      if (!is_unimodular(B)) return fail("monomial change of variables is not unimodular");
      const IntMatrix Binv = unimodular_inverse(B);
      for (int i = 0; i < d; ++i) {
        Exponents e(static_cast<std::size_t>(d));
        for (int k = 0; k < d; ++k) e[static_cast<std::size_t>(k)] = static_cast<int>(Binv(k, i));
        inverse[static_cast<std::size_t>(i)] = LaurentFraction(LaurentPoly::monomial(e, CyclotomicInt(1)));
      }
    }
    for (int k = 0; k < d; ++k)
      if (!(simplify(fraction_substitute(defs[static_cast<std::size_t>(k)], inverse), M_) == variable(d, k)))
        return fail("definitions and inverse do not compose to the identity at " +
                    new_names[static_cast<std::size_t>(k)]);
    for (int i = 0; i < d; ++i)
      if (!(fraction_substitute(inverse[static_cast<std::size_t>(i)], defs) == variable(d, i)))
        return fail("inverse fails to recover " + names_[static_cast<std::size_t>(i)]);
    std::vector<Fractions> next;
    for (const auto& gen : act_) {
      Fractions f;
      for (const auto& def : defs) f.push_back(simplify(fraction_substitute(fraction_substitute(def, gen), inverse), M_));
      next.push_back(std::move(f));
    }
    names_ = new_names;
    act_ = std::move(next);
    snapshot();
    return pass();
  }

  IntMatrix exponent_columns(const Fractions& defs, const std::vector<std::string>& names) const {
    const int d = dim();
    IntMatrix B(d, static_cast<Eigen::Index>(defs.size()));
    for (std::size_t k = 0; k < defs.size(); ++k) {
      const auto mono = defs[k].as_unit_monomial();
      if (!mono || !mono->second.is_one())
        throw Error(ErrorCode::NotMonomial, names[k] + " is not a monomial with coefficient 1");
      for (int i = 0; i < d; ++i) B(i, static_cast<Eigen::Index>(k)) = mono->first[static_cast<std::size_t>(i)];
    }
    return B;
  }

  Outcome invariants(const ScriptStep& s) {
    const ActionAssignment a = current_assignment();
    std::vector<std::uint32_t> gens;
    for (const auto& w : s.args) gens.push_back(element(w));
    const auto H = G_.subgroup(gens);
    const auto res = invariant_sublattice(a, H);
    std::vector<std::string> names;
    Fractions defs;
    for (const auto& def : s.args2) {
      const auto [name, r] = split_definition(def);
      names.push_back(name);
      defs.push_back(parse(r, names_));
    }
    if (static_cast<int>(defs.size()) != dim()) return fail("the invariant field needs " + std::to_string(dim()) + " generators");
    const IntMatrix B = exponent_columns(defs, names);
    if (!same_lattice(B, res.basis)) {
      std::ostringstream os;
      os << "claimed generators span a different lattice; derived basis "
         << describe_lattice(res.basis) << ", claimed " << describe_lattice(B);
      return fail(os.str());
    }
    set_assignment(change_lattice_basis(a, B, names));
    return pass("invariant lattice of a subgroup of order " + std::to_string(H.size()) + " has index " +
                std::to_string(std::llabs(determinant(B))));
  }

  std::string describe_lattice(const IntMatrix& B) const {
    const auto cols = monomial_names(canonical_lattice_basis(B), names_);
    std::string out = "{";
    for (std::size_t i = 0; i < cols.size(); ++i) out += (i ? ", " : "") + cols[i];
    return out + "}";
  }

  /// f with the listed variables replaced by constants.
  LaurentFraction set_vars(const LaurentFraction& f, const std::map<int, long long>& values) const {
    Fractions images = identity_map(dim());
    for (const auto& [i, v] : values)
      images[static_cast<std::size_t>(i)] = LaurentFraction::constant(dim(), CyclotomicInt(v));
    return fraction_substitute(f, images);
  }

  /// Removes variables that no remaining image involves.
  void drop_variables(const std::vector<int>& dropped) {
    const int d = dim();
    std::vector<int> keep;
    for (int j = 0; j < d; ++j)
      if (std::find(dropped.begin(), dropped.end(), j) == dropped.end()) keep.push_back(j);
    const int nd = static_cast<int>(keep.size());
    Fractions images(static_cast<std::size_t>(d), LaurentFraction::constant(nd, CyclotomicInt(1)));
    for (int k = 0; k < nd; ++k) images[static_cast<std::size_t>(keep[static_cast<std::size_t>(k)])] = variable(nd, k);
    std::vector<Fractions> next;
    for (const auto& gen : act_) {
      Fractions f;
      for (int j : keep) f.push_back(simplify(fraction_substitute(gen[static_cast<std::size_t>(j)], images), M_));
      next.push_back(std::move(f));
    }
    std::vector<std::string> names;
    for (int j : keep) names.push_back(names_[static_cast<std::size_t>(j)]);
    names_ = names;
    act_ = std::move(next);
    snapshot();
  }

  bool independent_of(const LaurentFraction& f, const std::vector<int>& vars) const {
    std::map<int, long long> ones;
    for (int v : vars) ones[v] = 1;
    return set_vars(f, ones) == f;
  }

  Outcome eliminate(const ScriptStep& s) {
    const int var = var_index(s.args.at(0));
    for (std::size_t k = 0; k < act_.size(); ++k) {
      const std::string g = G_.generator_names()[k];
      for (int j = 0; j < dim(); ++j) {
        const LaurentFraction& f = act_[k][static_cast<std::size_t>(j)];
        if (j != var) {
          if (!independent_of(f, {var}))
            return fail(g + "(" + names_[static_cast<std::size_t>(j)] + ") involves " + s.args[0]);
          continue;
        }
        const LaurentFraction f0 = set_vars(f, {{var, 0}});
        const LaurentFraction slope = set_vars(f, {{var, 1}}) - f0;
        const LaurentFraction x = variable(dim(), var);
        if (slope.is_zero() || !((f - f0 - x * slope).is_zero()))
          return fail(g + "(" + s.args[0] + ") = " + f.to_string(names_) + " is not affine in " + s.args[0]);
      }
    }
    drop_variables({var});
    return pass();
  }

  Outcome linear_split(const ScriptStep& s) {
    std::vector<int> kept, dropped;
    for (const auto& v : s.args) kept.push_back(var_index(v));
    for (int j = 0; j < dim(); ++j)
      if (std::find(kept.begin(), kept.end(), j) == kept.end()) dropped.push_back(j);
    for (std::size_t k = 0; k < act_.size(); ++k) {
      const std::string g = G_.generator_names()[k];
      for (int j : kept)
        if (!independent_of(act_[k][static_cast<std::size_t>(j)], dropped))
          return fail(g + "(" + names_[static_cast<std::size_t>(j)] + ") involves a dropped variable");
      for (int j : dropped) {
        const LaurentFraction& f = act_[k][static_cast<std::size_t>(j)];
        std::map<int, long long> zero;
        for (int v : dropped) zero[v] = 0;
        const LaurentFraction f0 = set_vars(f, zero);
        LaurentFraction rest = f - f0;
        for (int v : dropped) {
          auto at = zero;
          at[v] = 1;
          rest = rest - variable(dim(), v) * (set_vars(f, at) - f0);
        }
        if (!rest.is_zero())
          return fail(g + "(" + names_[static_cast<std::size_t>(j)] + ") is not affine-linear in the dropped variables");
      }
    }
    const auto actions = element_actions(act_, dim());
    std::vector<int> all(static_cast<std::size_t>(dim()));
    for (int j = 0; j < dim(); ++j) all[static_cast<std::size_t>(j)] = j;
    const auto K_all = kernel_on(actions, all);
    const auto K_kept = kernel_on(actions, kept);
    if (K_all.size() != K_kept.size()) {
      std::uint32_t witness = 0;
      for (auto g : K_kept)
        if (!std::binary_search(K_all.begin(), K_all.end(), g)) {
          witness = g;
          break;
        }
      std::ostringstream os;
      os << "the action on the kept variables is not faithful: " << G_.element_name(witness)
         << " fixes them but acts as " << describe(actions[witness]);
      return fail(os.str());
    }
    drop_variables(dropped);
    return pass();
  }

  Outcome scalar_reduce() {
    const auto chain = reduce_to_injective(current_assignment());
    report_.facts["reduction_steps"] = std::to_string(chain.steps.size());
    for (const auto& st : chain.steps) report_.assignments.push_back(st.output);
    set_assignment(chain.result);
    return pass(std::to_string(chain.steps.size()) + " scalar-kernel step(s)");
  }

  Outcome coefficient(const ScriptStep& s) {
    const Fractions img = image_of(s.args.at(1));
    const int j = var_index(s.args.at(2));
    const LaurentFraction form = parse(s.args.at(3), names_);
    const LaurentFraction ratio = simplify(img[static_cast<std::size_t>(j)] / form, M_);
    const auto mono = ratio.as_unit_monomial();
    if (!mono || std::any_of(mono->first.begin(), mono->first.end(), [](int e) { return e != 0; }))
      return fail("image is not a constant multiple of " + s.args[3]);
    const auto root = mono->second.as_root_of_unity();
    if (!root) return fail("coefficient is not a root of unity");
    const std::string value = root_string(*root);
    report_.facts[s.args[0]] = value;
    for (const auto& clause : s.args2) {
      const auto colon = clause.find(':');
      const std::string cond = trim(clause.substr(0, colon));
      const bool at_least = cond.find(">=") != std::string::npos;
      const int bound = std::stoi(cond.substr(cond.find_first_of("0123456789")));
      if (at_least ? n_ >= bound : n_ == bound) {
        const RootExponent want = constant_root(trim(clause.substr(colon + 1)), n_);
        if (!(want == *root)) return fail(s.args[0] + " = " + value + ", claimed " + root_string(want));
        return pass(s.args[0] + " = " + value);
      }
    }
    return pass(s.args[0] + " = " + value + " (no claim for this n)");
  }

  Outcome direct_product(const ScriptStep& s) {
    std::vector<std::vector<std::uint32_t>> factors;
    for (const auto& part : s.args) {
      std::vector<std::uint32_t> gens;
      for (const auto& w : split_top(part, ',')) gens.push_back(element(w));
      factors.push_back(G_.subgroup(gens));
    }
    if (factors.size() != 2) return fail("two factors expected");
    const auto& A = factors[0];
    const auto& B = factors[1];
    std::vector<std::uint32_t> meet;
    std::set_intersection(A.begin(), A.end(), B.begin(), B.end(), std::back_inserter(meet));
    if (!G_.is_normal(A) || !G_.is_normal(B) || meet.size() != 1 || A.size() * B.size() != G_.order())
      return fail("not an internal direct product");
    Verdict v;
    v.status = VerdictStatus::Rational;
    v.note(rules::kDirectProduct, "|A| = " + std::to_string(A.size()) + ", |B| = " + std::to_string(B.size()));
    for (std::size_t f = 0; f < 2; ++f) {
      const Group F = subgroup_group(G_, factors[f]);
      const std::string label = f == 0 ? "A" : "B";
      if (F.order() >= 16 && !F.is_abelian()) {
        int nf = 0;
        while ((std::size_t{1} << nf) < F.order()) ++nf;
        const long long need = 1LL << (nf - 2);
        if ((std::size_t{1} << nf) != F.order() || max_element_order(F) < need || !field_.has_root(need) ||
            field_.characteristic == 2)
          return fail("factor " + label + " misses the hypotheses of the large-cyclic-subgroup theorem");
        v.note("non-abelian 2-group of order 2^m with an element of order >= 2^(m-2), zeta_{2^(m-2)} in k",
               "factor " + label + ": |" + label + "| = " + std::to_string(F.order()) + ", element of order " +
                   std::to_string(max_element_order(F)));
        continue;
      }
      const Verdict fv = classify_group(F, field_);
      if (fv.status != VerdictStatus::Rational) return fail("factor " + label + " is not known to be rational");
      for (const auto& e : fv.trace) v.note(e.rule, "factor " + label + ": " + e.detail);
    }
    set_verdict(v);
    return pass();
  }

  void set_verdict(Verdict v) {
    report_.verdict = std::move(v);
    verdict_set_ = true;
  }

  std::optional<Verdict> try_rule(const std::string& key) {
    Verdict v;
    v.status = VerdictStatus::Rational;
    if (key == "mgroup") {
      if (!linear_ || linear_->front().dim() != 4) return std::nullopt;
      Verdict r = classify_m_group(*linear_, field_);
      if (r.status != VerdictStatus::Rational) return std::nullopt;
      return r;
    }
    ActionAssignment a;
    try {
      a = current_assignment();
    } catch (const Error&) {
      return std::nullopt;
    }
    if (!verify_homomorphism(a).ok()) return std::nullopt;
    const int d = a.dim();
    if (key == "dim2") {
      if (d > 2) return std::nullopt;
      v.note(rules::kDimTwo, "monomial action on " + std::to_string(d) + " variable(s)");
      return v;
    }
    if (d != 3 || field_.characteristic == 2) return std::nullopt;
    if (key == "pattern") {
      const auto match = match_involution_pattern(a);
      if (!match) return std::nullopt;
      report_.facts["pattern_epsilon"] = std::to_string(match->epsilon);
      v.note(rules::kInvolutionPattern, "s = " + G_.element_name(match->s) + ", t = " +
                                            G_.element_name(match->t) + ", eps = " +
                                            std::to_string(match->epsilon));
      return v;
    }
    if (key == "sqrt") {
      if (!field_.has_sqrt_minus_one()) return std::nullopt;
      v.note(rules::kDimThreeSqrt, "sqrt(-1) in k");
      return v;
    }
    if (key == "purely") {
      for (const auto& img : a.images)
        if (!img.purely_monomial()) return std::nullopt;
      v.note(rules::kPurelyMonomial, "all coefficients are 1");
      return v;
    }
    if (key == "classify") {
      Verdict r = classify_monomial_action(a, field_);
      if (r.status != VerdictStatus::Rational) return std::nullopt;
      return r;
    }
    throw Error(ErrorCode::ParseError, "unknown rule " + key);
  }

  Outcome rule(const ScriptStep& s) {
    for (std::size_t i = 0; i < s.args.size(); ++i) {
      auto v = try_rule(s.args[i]);
      if (!v) continue;
      set_verdict(*v);
      if (i == 0) return pass("rule '" + s.args[0] + "' applies");
      return {true, StepStatus::Corrected,
              "rule '" + s.args[0] + "' does not apply to the derived action; '" + s.args[i] + "' does"};
    }
    std::string tried;
    for (const auto& k : s.args) tried += k + " ";
    snapshot();
    return fail("no listed rule applies (" + tried + ") to " + (act_.empty() ? "" : describe(act_.front())));
  }

  std::vector<std::uint32_t> small_generating_set(const std::vector<std::uint32_t>& sub) const {
    std::vector<std::uint32_t> gens;
    std::vector<std::uint32_t> span{0};
    // prefer elements of large order
    std::vector<std::uint32_t> order_sorted = sub;
    std::stable_sort(order_sorted.begin(), order_sorted.end(), [&](auto a, auto b) {
      return G_.element_order(a) > G_.element_order(b);
    });
    for (auto g : order_sorted) {
      if (std::binary_search(span.begin(), span.end(), g)) continue;
      gens.push_back(g);
      span = G_.subgroup(gens);
      if (span.size() == sub.size()) break;
    }
    return gens;
  }

  std::vector<std::uint32_t> transversal(const std::vector<std::uint32_t>& sub) const {
    std::vector<std::uint32_t> reps;
    std::vector<bool> covered(G_.order(), false);
    for (std::uint32_t g = 0; g < G_.order(); ++g) {
      if (covered[g]) continue;
      reps.push_back(g);
      for (auto h : sub) covered[G_.mul(g, h)] = true;
    }
    return reps;
  }

  struct Induced {
    std::vector<std::uint32_t> gens;
    std::vector<RootExponent> values;
    std::vector<MonomialMatrix> matrices;
  };

  /// Linear characters of `sub` with values in <zeta_N>, each with its induced matrices.
  std::vector<Induced> induced_characters(const std::vector<std::uint32_t>& sub, long long N) const {
    std::vector<Induced> out;
    const auto gens = small_generating_set(sub);
    const auto reps = transversal(sub);
    std::vector<long long> e(gens.size(), 0);
    while (true) {
      std::vector<RootExponent> values;
      for (auto x : e) values.emplace_back(N, x);
      bool ok = true;
      try {
        extend_character(G_, gens, values);
      } catch (const Error&) {
        ok = false;
      }
      if (ok) out.push_back({gens, values, induce_character(G_, gens, values, reps)});
      std::size_t r = 0;
      for (; r < e.size(); ++r) {
        if (++e[r] < N) break;
        e[r] = 0;
      }
      if (r == e.size()) break;
    }
    return out;
  }

  static std::vector<MonomialMatrix> direct_sum(const std::vector<MonomialMatrix>& a,
                                                const std::vector<MonomialMatrix>& b) {
    std::vector<MonomialMatrix> out;
    for (std::size_t k = 0; k < a.size(); ++k) {
      MonomialMatrix m = a[k];
      for (int j = 0; j < b[k].dim(); ++j) {
        m.target.push_back(b[k].target[static_cast<std::size_t>(j)] + a[k].dim());
        m.coeff.push_back(b[k].coeff[static_cast<std::size_t>(j)]);
      }
      out.push_back(std::move(m));
    }
    return out;
  }

  std::string describe_character(const Induced& c) const {
    std::ostringstream os;
    os << "<";
    for (std::size_t i = 0; i < c.gens.size(); ++i) os << (i ? ", " : "") << G_.element_name(c.gens[i]);
    os << "> with values ";
    for (std::size_t i = 0; i < c.values.size(); ++i) os << (i ? ", " : "") << root_string(c.values[i]);
    return os.str();
  }

  void adopt_linear(const std::vector<MonomialMatrix>& mats) {
    const int d = mats.front().dim();
    names_.clear();
    for (int j = 0; j < d; ++j) names_.push_back("w" + std::to_string(j));
    act_.clear();
    for (const auto& Mx : mats) {
      Fractions f;
      for (int j = 0; j < d; ++j) {
        Exponents e(static_cast<std::size_t>(d), 0);
        e[static_cast<std::size_t>(Mx.target[static_cast<std::size_t>(j)])] = 1;
        f.push_back(LaurentFraction(LaurentPoly::monomial(
            e, CyclotomicInt::from_root(Mx.coeff[static_cast<std::size_t>(j)].lifted(M_)))));
      }
      act_.push_back(std::move(f));
    }
    linear_ = mats;
    snapshot();
  }

  /// A faithful four-dimensional monomial subrepresentation of the regular
  /// representation with character values in <zeta_{2^{n-3}}>: induced from
  /// an index-4 subgroup, or a sum of two induced from index-2 subgroups.
  Outcome induced_search() {
    const long long N = 1LL << (n_ - 3);
    std::set<std::vector<std::uint32_t>> index4, index2;
    for (std::uint32_t a = 0; a < G_.order(); ++a)
      for (std::uint32_t b = a; b < G_.order(); ++b) {
        const auto S = G_.subgroup({a, b});
        if (S.size() * 4 == G_.order()) index4.insert(S);
        if (S.size() * 2 == G_.order()) index2.insert(S);
      }
    for (const auto& S : index4) {
      for (const auto& c : induced_characters(S, N)) {
        if (!check_faithful(G_, c.matrices)) continue;
        adopt_linear(c.matrices);
        report_.facts["induced_from"] = describe_character(c);
        return pass("faithful character of the index-4 subgroup " + describe_character(c));
      }
    }
    std::vector<Induced> twos;
    for (const auto& S : index2)
      for (auto& c : induced_characters(S, N)) twos.push_back(std::move(c));
    for (std::size_t i = 0; i < twos.size(); ++i)
      for (std::size_t j = i; j < twos.size(); ++j) {
        const auto sum = direct_sum(twos[i].matrices, twos[j].matrices);
        if (!check_faithful(G_, sum)) continue;
        adopt_linear(sum);
        report_.facts["induced_from"] = describe_character(twos[i]) + " + " + describe_character(twos[j]);
        return pass("faithful sum of characters induced from " + report_.facts["induced_from"]);
      }
    stopped_ = true;
    return {true, StepStatus::UnknownStep,
            "no faithful four-dimensional monomial subrepresentation with values in <zeta_" +
                std::to_string(N) + ">; the cited construction is not replayed"};
  }

  Group G_;
  int family_;
  int n_;
  FieldDescriptor field_;
  long long M_;
  RegularModule module_;
  CaseReport& report_;
  std::vector<std::string> symbols_;
  std::map<std::string, RegVector> vectors_;
  std::vector<std::string> names_;
  std::vector<Fractions> act_;
  std::optional<std::vector<MonomialMatrix>> linear_;
  bool verdict_set_ = false;
  bool stopped_ = false;
};

}  // namespace

std::vector<TableEntry> parse_table(const std::string& text) {
  std::vector<TableEntry> out;
  for (const auto& clause : split_top(text, ';')) {
    const auto colon = clause.find(':');
    if (colon == std::string::npos) throw Error(ErrorCode::ParseError, "table clause needs 'key:' in " + clause);
    const std::string key = trim(clause.substr(0, colon));
    for (const auto& entry : split_top(clause.substr(colon + 1), ',')) {
      if (const auto sw = entry.find("<->"); sw != std::string::npos) {
        const std::string a = trim(entry.substr(0, sw)), b = trim(entry.substr(sw + 3));
        out.push_back({key, a, b});
        out.push_back({key, b, a});
        continue;
      }
      std::vector<std::string> chain;
      std::string rest = entry;
      for (auto pos = rest.find("->"); pos != std::string::npos; pos = rest.find("->")) {
        chain.push_back(trim(rest.substr(0, pos)));
        rest = rest.substr(pos + 2);
      }
      chain.push_back(trim(rest));
      if (chain.size() < 2) throw Error(ErrorCode::ParseError, "table entry needs '->': " + entry);
      for (std::size_t i = 0; i + 1 < chain.size(); ++i) out.push_back({key, chain[i], chain[i + 1]});
    }
  }
  return out;
}

std::string format_table(const std::vector<TableEntry>& entries) {
  std::string out;
  std::string key;
  for (const auto& e : entries) {
    if (e.key != key) {
      if (!key.empty()) out += "; ";
      out += e.key + ": ";
      key = e.key;
    } else {
      out += ", ";
    }
    out += e.variable + " -> " + e.image;
  }
  return out;
}

ActionAssignment table_assignment(const Group& g, const std::string& table,
                                  const std::vector<std::string>& variables, int n, long long m) {
  const std::vector<std::string> keys{"s", "t", "l"};
  const auto entries = parse_table(table);
  ActionAssignment a{g, {}, variables};
  const int d = static_cast<int>(variables.size());
  for (std::size_t k = 0; k < g.generators().size(); ++k) {
    Fractions images(static_cast<std::size_t>(d), LaurentFraction(d));
    std::vector<bool> seen(static_cast<std::size_t>(d), false);
    for (const auto& e : entries) {
      if (e.key != keys[k]) continue;
      const auto it = std::find(variables.begin(), variables.end(), e.variable);
      if (it == variables.end()) throw Error(ErrorCode::ParseError, "unknown variable " + e.variable);
      const auto j = static_cast<std::size_t>(it - variables.begin());
      images[j] = parse_expression(e.image, variables, n);
      seen[j] = true;
    }
    if (std::find(seen.begin(), seen.end(), false) != seen.end())
      throw Error(ErrorCode::InvalidInput, "table does not give every image of " + keys[k]);
    const auto mono = from_images(images, m);
    if (!mono) throw Error(ErrorCode::NotMonomial, "table images of " + keys[k] + " are not monomial");
    a.images.push_back(*mono);
  }
  return a;
}

std::optional<std::string> mutate_expected_coefficient(CaseScript& script, int family, std::mt19937& rng) {
  std::vector<ScriptStep*> expects;
  std::function<void(std::vector<ScriptStep>&)> collect = [&](std::vector<ScriptStep>& steps) {
    for (auto& s : steps) {
      if (s.type == StepType::Expect && (s.only.empty() || std::count(s.only.begin(), s.only.end(), family)))
        expects.push_back(&s);
      collect(s.corrected);
    }
  };
  collect(script.steps);
  if (expects.empty()) return std::nullopt;
  ScriptStep& s = *expects[std::uniform_int_distribution<std::size_t>(0, expects.size() - 1)(rng)];
  auto entries = parse_table(s.args.at(0));
  auto& e = entries[std::uniform_int_distribution<std::size_t>(0, entries.size() - 1)(rng)];
  static const char* factors[] = {"-1", "i", "-i"};
  const std::string f = factors[std::uniform_int_distribution<int>(0, 2)(rng)];
  const std::string before = e.key + "(" + e.variable + ") = " + e.image;
  e.image = "(" + f + ")*(" + e.image + ")";
  s.args[0] = format_table(entries);
  s.args2.clear();
  return "step '" + s.name + "': " + before + " multiplied by " + f;
}

CaseReport run_script(const CaseScript& script, int family, int n, const FieldDescriptor& field) {
  const auto start = std::chrono::steady_clock::now();
  CaseReport report;
  report.family = family;
  report.n = n;
  report.case_id = "G" + std::to_string(family) + "@n=" + std::to_string(n);
  report.title = script.title;
  report.field = field.to_string();
  {
    Runner runner(family_group(family, n), family, n, field, report);
    runner.run(script.steps);
    if (!runner.has_verdict()) report.verdict.note("no rule", "the script ended without a rationality verdict");
  }
  report.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace noether
