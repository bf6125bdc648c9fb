#include "noether/json_io.hpp"

#include <fstream>

#include "noether/error.hpp"

namespace noether {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing key '") + key + "'");
  return j.at(key);
}

template <class T>
T get(const Json& j, const char* key) {
  try {
    return field(j, key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    bad(std::string("key '") + key + "': " + e.what());
  }
}

Json optional_bool(const std::optional<bool>& b) { return b ? Json(*b) : Json(nullptr); }

std::optional<bool> read_optional_bool(const Json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  if (!j.at(key).is_boolean()) bad(std::string("key '") + key + "' must be a boolean or null");
  return j.at(key).get<bool>();
}

VerdictStatus status_from_string(const std::string& s) {
  for (auto v : {VerdictStatus::Rational, VerdictStatus::NotRational, VerdictStatus::ConditionallyRational,
                 VerdictStatus::Unknown})
    if (to_string(v) == s) return v;
  bad("unknown verdict status '" + s + "'");
}

StepStatus step_status_from_string(const std::string& s) {
  for (auto v : {StepStatus::Pass, StepStatus::Fail, StepStatus::UnknownStep, StepStatus::Corrected})
    if (to_string(v) == s) return v;
  bad("unknown step status '" + s + "'");
}

Json cyclotomic_to_json(const CyclotomicInt& c) {
  const auto cs = c.coeffs();
  return Json{{"M", c.conductor()}, {"c", std::vector<std::int64_t>(cs.begin(), cs.end())}};
}

CyclotomicInt cyclotomic_from_json(const Json& j) {
  const auto M = get<std::int64_t>(j, "M");
  if (!CyclotomicInt::valid_conductor(M)) bad("invalid conductor " + std::to_string(M));
  const auto cs = get<std::vector<std::int64_t>>(j, "c");
  CyclotomicInt out(0, M);
  for (std::size_t i = 0; i < cs.size(); ++i)
    if (cs[i] != 0) out += CyclotomicInt(cs[i], M) * CyclotomicInt::zeta(M, static_cast<std::int64_t>(i));
  return out;
}

}  // namespace

Json field_to_json(const FieldDescriptor& f) {
  return Json{{"char", f.characteristic},
              {"roots", std::vector<long long>(f.roots.begin(), f.roots.end())},
              {"squares",
               {{"minus_one", optional_bool(f.squares.minus_one)},
                {"two", optional_bool(f.squares.two)},
                {"minus_two", optional_bool(f.squares.minus_two)}}},
              {"finite", f.finite}};
}

FieldDescriptor field_from_json(const Json& j) {
  FieldDescriptor f;
  f.characteristic = j.contains("char") ? get<long long>(j, "char") : 0;
  if (j.contains("roots")) {
    const auto roots = get<std::vector<long long>>(j, "roots");
    f.roots = std::set<long long>(roots.begin(), roots.end());
    f.roots.insert(1);
  }
  if (j.contains("squares")) {
    const Json& s = j.at("squares");
    if (!s.is_object()) bad("'squares' must be an object");
    f.squares.minus_one = read_optional_bool(s, "minus_one");
    f.squares.two = read_optional_bool(s, "two");
    f.squares.minus_two = read_optional_bool(s, "minus_two");
  }
  if (j.contains("finite")) f.finite = get<bool>(j, "finite");
  return f.normalized();
}

Json verdict_to_json(const Verdict& v) {
  Json trace = Json::array();
  for (const auto& t : v.trace) trace.push_back({{"rule", t.rule}, {"detail", t.detail}});
  return Json{{"status", to_string(v.status)}, {"condition", v.condition}, {"trace", trace}};
}

Verdict verdict_from_json(const Json& j) {
  Verdict v;
  v.status = status_from_string(get<std::string>(j, "status"));
  if (j.contains("condition")) v.condition = get<std::string>(j, "condition");
  if (j.contains("trace"))
    for (const auto& t : j.at("trace")) v.note(get<std::string>(t, "rule"), get<std::string>(t, "detail"));
  return v;
}

Json matrix_to_json(const IntMatrix& m) {
  std::vector<long long> flat;
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) flat.push_back(m(r, c));
  return flat;
}

IntMatrix matrix_from_json(const Json& j, int rows, int cols) {
  if (!j.is_array() || j.size() != static_cast<std::size_t>(rows) * cols)
    bad("expected " + std::to_string(rows * cols) + " row-major integers");
  IntMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      const Json& e = j.at(static_cast<std::size_t>(r) * cols + c);
      if (!e.is_number_integer()) bad("matrix entries must be integers");
      m(r, c) = e.get<long long>();
    }
  return m;
}

Json automorphism_to_json(const MonomialAutomorphism& a) {
  std::vector<long long> c(a.c.data(), a.c.data() + a.c.size());
  return Json{{"d", a.dim()}, {"m", a.m}, {"A", matrix_to_json(a.A)}, {"c", c}};
}

MonomialAutomorphism automorphism_from_json(const Json& j) {
  const int d = get<int>(j, "d");
  if (d < 1) bad("dimension must be positive");
  const long long m = get<long long>(j, "m");
  const IntMatrix A = matrix_from_json(field(j, "A"), d, d);
  const auto c = get<std::vector<long long>>(j, "c");
  if (c.size() != static_cast<std::size_t>(d)) bad("'c' must have d entries");
  IntVector cv(d);
  for (int i = 0; i < d; ++i) cv(i) = c[i];
  return MonomialAutomorphism(A, cv, m);
}

Json monomial_matrix_to_json(const MonomialMatrix& m) {
  Json coeff = Json::array();
  for (const auto& r : m.coeff) coeff.push_back({{"M", r.modulus}, {"e", r.exponent}});
  return Json{{"target", m.target}, {"coeff", coeff}};
}

MonomialMatrix monomial_matrix_from_json(const Json& j) {
  MonomialMatrix m;
  m.target = get<std::vector<int>>(j, "target");
  const Json& coeff = field(j, "coeff");
  if (!coeff.is_array() || coeff.size() != m.target.size()) bad("'coeff' must match 'target'");
  for (const auto& r : coeff) m.coeff.emplace_back(get<std::int64_t>(r, "M"), get<std::int64_t>(r, "e"));
  return m;
}

Json group_to_json(const Group& g) {
  if (const auto& f = g.family()) return Json{{"family", "G" + std::to_string(f->id)}, {"n", f->n}};
  const std::size_t N = g.order();
  std::vector<std::vector<std::uint32_t>> table(N, std::vector<std::uint32_t>(N));
  for (std::uint32_t a = 0; a < N; ++a)
    for (std::uint32_t b = 0; b < N; ++b) table[a][b] = g.mul(a, b);
  return Json{{"name", g.name()},
              {"order", N},
              {"table", table},
              {"generators", g.generators()},
              {"generator_names", g.generator_names()}};
}

Group group_from_json(const Json& j) {
  if (!j.is_object()) bad("group spec must be an object");
  if (j.contains("family")) {
    const Json& f = j.at("family");
    int id = 0;
    if (f.is_number_integer()) {
      id = f.get<int>();
    } else if (f.is_string()) {
      std::string s = f.get<std::string>();
      if (!s.empty() && (s[0] == 'G' || s[0] == 'g')) s = s.substr(1);
      try {
        std::size_t used = 0;
        id = std::stoi(s, &used);
        if (used != s.size()) bad("bad family '" + f.get<std::string>() + "'");
      } catch (const std::logic_error&) {
        bad("bad family '" + f.get<std::string>() + "'");
      }
    } else {
      bad("'family' must be a string like \"G8\" or an integer");
    }
    return family_group(id, get<int>(j, "n"));
  }
  if (j.contains("table")) {
    const auto table = get<std::vector<std::vector<std::uint32_t>>>(j, "table");
    if (j.contains("order") && get<std::size_t>(j, "order") != table.size()) bad("'order' does not match the table");
    std::vector<std::uint32_t> gens;
    std::vector<std::string> names;
    if (j.contains("generators")) gens = get<std::vector<std::uint32_t>>(j, "generators");
    if (j.contains("generator_names")) names = get<std::vector<std::string>>(j, "generator_names");
    const std::string name = j.contains("name") ? get<std::string>(j, "name") : "";
    return cayley_group(table, name, gens, names);
  }
  if (j.contains("degree"))
    return permutation_group(get<int>(j, "degree"), get<std::vector<std::vector<int>>>(j, "generators"),
                             j.contains("name") ? get<std::string>(j, "name") : "");
  bad("group spec needs 'family', 'table' or 'degree'");
}

Json action_to_json(const ActionAssignment& a) {
  Json images = Json::array();
  for (const auto& img : a.images) images.push_back(automorphism_to_json(img));
  return Json{{"group", group_to_json(a.group)}, {"variables", a.variable_names}, {"images", images}};
}

ActionAssignment action_from_json(const Json& j) {
  ActionAssignment a;
  a.group = group_from_json(field(j, "group"));
  const Json& images = field(j, "images");
  if (!images.is_array()) bad("'images' must be an array");
  for (const auto& img : images) a.images.push_back(automorphism_from_json(img));
  if (a.images.size() != a.group.generators().size())
    bad("expected " + std::to_string(a.group.generators().size()) + " images, one per generator");
  for (const auto& img : a.images)
    if (img.dim() != a.images.front().dim()) bad("images have different dimensions");
  if (j.contains("variables")) {
    a.variable_names = get<std::vector<std::string>>(j, "variables");
  } else {
    for (int i = 0; i < a.dim(); ++i) a.variable_names.push_back("x" + std::to_string(i + 1));
  }
  if (static_cast<int>(a.variable_names.size()) != a.dim()) bad("'variables' does not match the dimension");
  return a;
}

Json laurent_to_json(const LaurentPoly& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({{"exps", e}, {"coeff", cyclotomic_to_json(c)}});
  return terms;
}

LaurentPoly laurent_from_json(const Json& j) {
  if (!j.is_array()) bad("a Laurent polynomial is a list of terms");
  if (j.empty()) return LaurentPoly(0);
  LaurentPoly p(static_cast<int>(get<Exponents>(j.front(), "exps").size()));
  for (const auto& t : j) {
    const auto e = get<Exponents>(t, "exps");
    if (static_cast<int>(e.size()) != p.nvars()) bad("terms have different numbers of variables");
    p.add_term(e, cyclotomic_from_json(field(t, "coeff")));
  }
  return p;
}

Json chain_to_json(const ReductionChain& c) {
  Json steps = Json::array();
  for (const auto& s : c.steps)
    steps.push_back({{"kind", to_string(s.kind)},
                     {"justification", s.justification},
                     {"basis", {{"rows", s.basis.rows()}, {"cols", s.basis.cols()}, {"entries", matrix_to_json(s.basis)}}},
                     {"dropped", s.dropped},
                     {"output", action_to_json(s.output)}});
  return Json{{"steps", steps}, {"result", action_to_json(c.result)}};
}

Json report_to_json(const CaseReport& r) {
  Json steps = Json::array();
  for (const auto& s : r.steps)
    steps.push_back({{"name", s.name}, {"status", to_string(s.status)}, {"expected_ref", s.expected_ref}, {"diff", s.diff}});
  Json assignments = Json::array();
  for (const auto& a : r.assignments) assignments.push_back(action_to_json(a));
  Json input = {{"n", r.n}, {"field", r.field}};
  if (r.family > 0) input["group"] = {{"family", "G" + std::to_string(r.family)}, {"n", r.n}};
  return Json{{"case", r.case_id},
              {"title", r.title},
              {"passed", r.passed()},
              {"input", input},
              {"steps", steps},
              {"verdict", verdict_to_json(r.verdict)},
              {"facts", r.facts},
              {"assignments", assignments},
              {"wall_ms", r.wall_ms}};
}

CaseReport report_from_json(const Json& j) {
  CaseReport r;
  r.case_id = get<std::string>(j, "case");
  if (j.contains("title")) r.title = get<std::string>(j, "title");
  if (j.contains("input")) {
    const Json& in = j.at("input");
    if (in.contains("n")) r.n = get<int>(in, "n");
    if (in.contains("field")) r.field = get<std::string>(in, "field");
    if (in.contains("group")) {
      std::string f = get<std::string>(in.at("group"), "family");
      r.family = std::stoi(f.substr(1));
    }
  }
  for (const auto& s : field(j, "steps"))
    r.steps.push_back({get<std::string>(s, "name"), step_status_from_string(get<std::string>(s, "status")),
                       get<std::string>(s, "expected_ref"), get<std::string>(s, "diff")});
  r.verdict = verdict_from_json(field(j, "verdict"));
  if (j.contains("facts")) r.facts = get<std::map<std::string, std::string>>(j, "facts");
  if (j.contains("assignments"))
    for (const auto& a : j.at("assignments")) r.assignments.push_back(action_from_json(a));
  if (j.contains("wall_ms")) r.wall_ms = get<double>(j, "wall_ms");
  return r;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidInput, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    bad(path + ": " + e.what());
  }
}

}  // namespace noether
