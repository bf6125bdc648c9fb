#include "noether/group.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <sstream>
#include <unordered_map>

#include "noether/error.hpp"
#include "noether/expression.hpp"

namespace noether {

std::size_t max_order_guard() {
  if (const char* env = std::getenv("NOETHER_MAX_ORDER")) {
    try {
      const long long v = std::stoll(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
  }
  return std::size_t{1} << 12;
}

std::uint32_t Group::pow(std::uint32_t a, long long k) const {
  if (k < 0) {
    a = inv(a);
    k = -k;
  }
  std::uint32_t result = identity();
  std::uint32_t base = a;
  while (k > 0) {
    if (k & 1) result = mul(result, base);
    k >>= 1;
    if (k) base = mul(base, base);
  }
  return result;
}

int Group::element_order(std::uint32_t a) const {
  int k = 1;
  for (std::uint32_t x = a; x != identity(); x = mul(x, a)) ++k;
  return k;
}

std::uint32_t Group::evaluate(const Word& w) const {
  std::uint32_t r = identity();
  for (const auto& [gen, e] : w) {
    if (gen < 0 || gen >= static_cast<int>(generators().size()))
      throw Error(ErrorCode::InvalidParameter, "word uses an unknown generator");
    r = mul(r, pow(generators()[static_cast<std::size_t>(gen)], e));
  }
  return r;
}

std::uint32_t Group::from_normal_form(long long a, long long b, long long c) const {
  if (!family()) throw Error(ErrorCode::InvalidParameter, "normal forms exist for family groups only");
  std::uint32_t r = pow(generators()[0], a);
  r = mul(r, pow(generators()[1], b));
  if (generators().size() > 2) r = mul(r, pow(generators()[2], c));
  else if (c != 0) throw Error(ErrorCode::InvalidParameter, "family has no lambda");
  return r;
}

std::array<int, 3> Group::normal_form(std::uint32_t index) const {
  if (!family()) throw Error(ErrorCode::InvalidParameter, "normal forms exist for family groups only");
  const auto& b = family()->bounds;
  const int c = static_cast<int>(index % static_cast<std::uint32_t>(b[2]));
  const std::uint32_t rest = index / static_cast<std::uint32_t>(b[2]);
  return {static_cast<int>(rest / static_cast<std::uint32_t>(b[1])),
          static_cast<int>(rest % static_cast<std::uint32_t>(b[1])), c};
}

std::string Group::element_name(std::uint32_t index) const {
  if (!family()) return "e" + std::to_string(index);
  const auto nf = normal_form(index);
  static const char* sym[3] = {"s", "t", "l"};
  std::string out;
  for (int i = 0; i < 3; ++i) {
    if (nf[static_cast<std::size_t>(i)] == 0) continue;
    out += sym[i];
    if (nf[static_cast<std::size_t>(i)] != 1) out += "^" + std::to_string(nf[static_cast<std::size_t>(i)]);
  }
  return out.empty() ? "1" : out;
}

std::vector<std::uint32_t> Group::subgroup(const std::vector<std::uint32_t>& gens) const {
  std::vector<char> seen(order(), 0);
  std::vector<std::uint32_t> out{identity()};
  seen[identity()] = 1;
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (std::uint32_t g : gens) {
      const std::uint32_t y = mul(out[i], g);
      if (!seen[y]) {
        seen[y] = 1;
        out.push_back(y);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool Group::is_normal(const std::vector<std::uint32_t>& sorted_subgroup) const {
  for (std::uint32_t g : generators()) {
    const std::uint32_t gi = inv(g);
    for (std::uint32_t h : sorted_subgroup) {
      if (!std::binary_search(sorted_subgroup.begin(), sorted_subgroup.end(), mul(mul(gi, h), g)))
        return false;
    }
  }
  return true;
}

bool Group::is_abelian() const {
  for (std::uint32_t a : generators())
    for (std::uint32_t b : generators())
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::array<int, 3> GroupElement::normal_form() const { return Group(data_).normal_form(index_); }

std::string GroupElement::to_string() const { return Group(data_).element_name(index_); }

GroupElement multiply(const GroupElement& g, const GroupElement& h) {
  if (g.data() == nullptr || g.data() != h.data())
    throw Error(ErrorCode::MixedGroups, "elements belong to different groups");
  return GroupElement(g.shared(), Group(g.shared()).mul(g.index(), h.index()));
}

GroupElement inverse(const GroupElement& g) {
  return GroupElement(g.shared(), g.data()->inverses[g.index()]);
}

int element_order(const GroupElement& g) {
  const GroupData& d = *g.data();
  int k = 1;
  std::uint32_t x = g.index();
  while (x != 0) {
    x = d.table[static_cast<std::size_t>(x) * d.order + g.index()];
    ++k;
  }
  return k;
}

namespace {

void fill_inverses(GroupData& d) {
  d.inverses.assign(d.order, 0);
  for (std::uint32_t a = 0; a < d.order; ++a)
    for (std::uint32_t b = 0; b < d.order; ++b)
      if (d.table[static_cast<std::size_t>(a) * d.order + b] == 0) {
        d.inverses[a] = b;
        break;
      }
}

std::vector<std::uint32_t> greedy_generators(const Group& g) {
  std::vector<std::uint32_t> gens;
  std::vector<std::uint32_t> sub{0};
  for (std::uint32_t a = 1; a < g.order() && sub.size() < g.order(); ++a) {
    if (std::binary_search(sub.begin(), sub.end(), a)) continue;
    gens.push_back(a);
    sub = g.subgroup(gens);
  }
  return gens;
}

}  // namespace

Group cayley_group(const std::vector<std::vector<std::uint32_t>>& table, std::string name,
                   std::vector<std::uint32_t> generators, std::vector<std::string> generator_names) {
  const std::size_t n = table.size();
  if (n == 0) throw Error(ErrorCode::NotAGroup, "empty Cayley table");
  if (n > max_order_guard()) throw Error(ErrorCode::TooLarge, "Cayley table exceeds the scan guard");
  auto data = std::make_shared<GroupData>();
  data->name = name.empty() ? "Cayley(" + std::to_string(n) + ")" : std::move(name);
  data->order = n;
  data->table.resize(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    if (table[a].size() != n) throw Error(ErrorCode::NotAGroup, "Cayley table is not square");
    std::vector<char> row_seen(n, 0);
    for (std::size_t b = 0; b < n; ++b) {
      const std::uint32_t v = table[a][b];
      if (v >= n) throw Error(ErrorCode::NotAGroup, "table entry out of range");
      if (row_seen[v]++) throw Error(ErrorCode::NotAGroup, "row repeats an element");
      data->table[a * n + b] = v;
    }
  }
  for (std::size_t b = 0; b < n; ++b) {
    std::vector<char> col_seen(n, 0);
    for (std::size_t a = 0; a < n; ++a)
      if (col_seen[data->table[a * n + b]]++)
        throw Error(ErrorCode::NotAGroup, "column repeats an element");
  }
  for (std::size_t a = 0; a < n; ++a)
    if (data->table[a] != a || data->table[a * n] != a)
      throw Error(ErrorCode::NotAGroup, "element 0 is not the identity");
  fill_inverses(*data);

  Group provisional(data);
  if (generators.empty()) generators = greedy_generators(provisional);
  // Associativity: exhaustive for small tables, Light's test over generators otherwise.
  const auto at = [&](std::size_t a, std::size_t b) { return data->table[a * n + b]; };
  std::vector<std::uint32_t> middle;
  if (n <= 512) {
    for (std::uint32_t x = 0; x < n; ++x) middle.push_back(x);
  } else {
    middle = generators;
  }
  for (std::uint32_t g : middle)
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        if (at(at(x, g), y) != at(x, at(g, y)))
          throw Error(ErrorCode::NotAGroup, "multiplication is not associative");
  if (n > 512 && provisional.subgroup(generators).size() != n)
    throw Error(ErrorCode::NotAGroup, "generators do not generate the table");

  data->generators = std::move(generators);
  if (generator_names.size() != data->generators.size()) {
    generator_names.clear();
    for (std::size_t i = 0; i < data->generators.size(); ++i)
      generator_names.push_back("g" + std::to_string(i));
  }
  data->generator_names = std::move(generator_names);
  return Group(data);
}

namespace {

struct VecHash {
  std::size_t operator()(const std::vector<int>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (int x : v) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
    return h;
  }
};

}  // namespace

Group permutation_group(int degree, const std::vector<std::vector<int>>& generators,
                        std::string name) {
  if (degree < 0) throw Error(ErrorCode::InvalidInput, "negative degree");
  for (const auto& p : generators) {
    if (static_cast<int>(p.size()) != degree)
      throw Error(ErrorCode::InvalidInput, "generator has the wrong degree");
    std::vector<char> seen(static_cast<std::size_t>(degree), 0);
    for (int x : p)
      if (x < 0 || x >= degree || seen[static_cast<std::size_t>(x)]++)
        throw Error(ErrorCode::InvalidInput, "generator is not a permutation");
  }
  std::vector<int> id(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i) id[static_cast<std::size_t>(i)] = i;
  // (p*q)(x) = p(q(x))
  const auto compose = [&](const std::vector<int>& p, const std::vector<int>& q) {
    std::vector<int> r(q.size());
    for (std::size_t i = 0; i < q.size(); ++i) r[i] = p[static_cast<std::size_t>(q[i])];
    return r;
  };
  std::vector<std::vector<int>> elems{id};
  std::unordered_map<std::vector<int>, std::uint32_t, VecHash> index{{id, 0}};
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto& g : generators) {
      auto y = compose(elems[i], g);
      if (index.emplace(y, static_cast<std::uint32_t>(elems.size())).second) {
        elems.push_back(std::move(y));
        if (elems.size() > max_order_guard())
          throw Error(ErrorCode::TooLarge, "permutation group exceeds the scan guard");
      }
    }
  }
  const std::size_t n = elems.size();
  std::vector<std::vector<std::uint32_t>> table(n, std::vector<std::uint32_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table[a][b] = index.at(compose(elems[a], elems[b]));
  std::vector<std::uint32_t> gens;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < generators.size(); ++i) {
    gens.push_back(index.at(generators[i]));
    names.push_back("p" + std::to_string(i));
  }
  if (gens.empty()) return cayley_group(table, name.empty() ? "Perm(1)" : name);
  return cayley_group(table, name.empty() ? "Perm(" + std::to_string(n) + ")" : std::move(name),
                      gens, names);
}

Word parse_word(const std::string& text, const std::vector<std::string>& symbols, int n) {
  Word w;
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) {
    if (tok == "1") continue;
    const auto caret = tok.find('^');
    const std::string sym = tok.substr(0, caret);
    const auto it = std::find(symbols.begin(), symbols.end(), sym);
    if (it == symbols.end()) throw Error(ErrorCode::ParseError, "unknown generator in '" + text + "'");
    long long e = 1;
    if (caret != std::string::npos) {
      std::string expanded;
      for (char c : tok.substr(caret + 1)) {
        if (c == 'P') expanded += "(2^(n-2))";
        else if (c == 'h') expanded += "(2^(n-3))";
        else if (c == 'q') expanded += "(2^(n-4))";
        else expanded += c;
      }
      e = parse_integer_expression(expanded, n);
    }
    w.emplace_back(static_cast<int>(it - symbols.begin()), static_cast<int>(e));
  }
  return w;
}

Relation parse_relation(const std::string& text, const std::vector<std::string>& symbols, int n) {
  const auto eq = text.find('=');
  if (eq == std::string::npos) throw Error(ErrorCode::ParseError, "relation needs '=': " + text);
  return {text, parse_word(text.substr(0, eq), symbols, n), parse_word(text.substr(eq + 1), symbols, n)};
}

}  // namespace noether
