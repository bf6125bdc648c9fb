#include "noether/profile.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "noether/error.hpp"

namespace noether {

std::string to_string(Sylow2Type t) {
  switch (t) {
    case Sylow2Type::C8: return "C8";
    case Sylow2Type::C4xC2: return "C4xC2";
    default: return "other";
  }
}

std::vector<std::uint32_t> center(const Group& g) {
  std::vector<std::uint32_t> z;
  for (std::uint32_t x = 0; x < g.order(); ++x) {
    bool central = true;
    for (std::uint32_t y : g.generators())
      if (g.mul(x, y) != g.mul(y, x)) {
        central = false;
        break;
      }
    if (central) z.push_back(x);
  }
  return z;
}

long long group_exponent(const Group& g) {
  long long e = 1;
  for (std::uint32_t x = 0; x < g.order(); ++x) e = std::lcm(e, static_cast<long long>(g.element_order(x)));
  return e;
}

int max_element_order(const Group& g) {
  int best = 1;
  for (std::uint32_t x = 0; x < g.order(); ++x) best = std::max(best, g.element_order(x));
  return best;
}

std::optional<std::uint32_t> element_of_order(const Group& g, int k) {
  for (std::uint32_t x = 0; x < g.order(); ++x)
    if (g.element_order(x) == k) return x;
  return std::nullopt;
}

namespace {

bool is_power_of_two(std::size_t v) { return v != 0 && (v & (v - 1)) == 0; }

}  // namespace

std::vector<std::uint32_t> sylow2_subgroup(const Group& g) {
  std::vector<std::uint32_t> gens;
  std::vector<std::uint32_t> S{g.identity()};
  for (std::uint32_t x = 1; x < g.order(); ++x) {
    if (!is_power_of_two(static_cast<std::size_t>(g.element_order(x)))) continue;
    if (std::binary_search(S.begin(), S.end(), x)) continue;
    gens.push_back(x);
    auto T = g.subgroup(gens);
    if (is_power_of_two(T.size())) S = std::move(T);
    else gens.pop_back();
  }
  return S;
}

std::optional<long long> cm_rtimes_c8(const Group& g) {
  const std::size_t N = g.order();
  if (N % 8 != 0 || (N / 8) % 2 == 0) return std::nullopt;
  const long long m = static_cast<long long>(N / 8);
  if (!element_of_order(g, 8)) return std::nullopt;
  if (m == 1) return m;
  for (std::uint32_t x = 0; x < N; ++x) {
    if (g.element_order(x) != m) continue;
    if (g.is_normal(g.subgroup({x}))) return m;
  }
  return std::nullopt;
}

StructuralProfile structural_profile(const Group& g) {
  if (g.order() > max_order_guard()) throw Error(ErrorCode::TooLarge, "group exceeds the scan guard");
  StructuralProfile p;
  p.order = g.order();
  p.exponent = group_exponent(g);
  p.center_order = center(g).size();
  p.max_cyclic_index = g.order() / static_cast<std::size_t>(max_element_order(g));

  const auto S = sylow2_subgroup(g);
  bool abelian = true;
  int max_ord = 1;
  long long exp = 1;
  for (std::uint32_t a : S) {
    max_ord = std::max(max_ord, g.element_order(a));
    exp = std::lcm(exp, static_cast<long long>(g.element_order(a)));
    for (std::uint32_t b : S)
      if (g.mul(a, b) != g.mul(b, a)) abelian = false;
  }
  if (S.size() == 8 && max_ord == 8) p.sylow2_type = Sylow2Type::C8;
  else if (S.size() == 8 && abelian && exp == 4) p.sylow2_type = Sylow2Type::C4xC2;
  else p.sylow2_type = Sylow2Type::Other;
  std::ostringstream d;
  d << "order " << S.size() << ", " << (abelian ? "abelian" : "non-abelian") << ", exponent " << exp;
  p.sylow2_description = p.sylow2_type == Sylow2Type::Other ? d.str() : to_string(p.sylow2_type);

  if (auto m = cm_rtimes_c8(g)) {
    p.is_cm_rtimes_c8 = true;
    p.cm_m = *m;
  }
  return p;
}

std::vector<std::vector<std::uint32_t>> normal_subgroups(const Group& g) {
  if (g.order() > 256) throw Error(ErrorCode::TooLarge, "normal subgroup search is limited to order 256");
  // Normal closure of a set: subgroup generated by all conjugates.
  const auto closure = [&](std::vector<std::uint32_t> gens) {
    std::vector<std::uint32_t> conj;
    for (std::uint32_t x : gens)
      for (std::uint32_t y = 0; y < g.order(); ++y) conj.push_back(g.mul(g.mul(g.inv(y), x), y));
    std::sort(conj.begin(), conj.end());
    conj.erase(std::unique(conj.begin(), conj.end()), conj.end());
    return g.subgroup(conj);
  };
  std::set<std::vector<std::uint32_t>> found;
  std::vector<std::vector<std::uint32_t>> minimal;
  for (std::uint32_t x = 0; x < g.order(); ++x) {
    auto N = closure({x});
    if (found.insert(N).second) minimal.push_back(N);
  }
  // Every normal subgroup is a product of normal closures of its elements.
  std::vector<std::vector<std::uint32_t>> frontier(found.begin(), found.end());
  while (!frontier.empty()) {
    std::vector<std::vector<std::uint32_t>> next;
    for (const auto& A : frontier)
      for (const auto& B : minimal) {
        std::vector<std::uint32_t> gens = A;
        gens.insert(gens.end(), B.begin(), B.end());
        auto N = g.subgroup(gens);
        if (found.insert(N).second) next.push_back(std::move(N));
      }
    frontier = std::move(next);
  }
  std::vector<std::vector<std::uint32_t>> out(found.begin(), found.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

Group quotient_group(const Group& g, const std::vector<std::uint32_t>& N) {
  std::vector<std::uint32_t> coset(g.order(), static_cast<std::uint32_t>(g.order()));
  std::vector<std::uint32_t> reps;
  for (std::uint32_t x = 0; x < g.order(); ++x) {
    if (coset[x] != g.order()) continue;
    const auto id = static_cast<std::uint32_t>(reps.size());
    reps.push_back(x);
    for (std::uint32_t n : N) coset[g.mul(x, n)] = id;
  }
  std::vector<std::vector<std::uint32_t>> table(reps.size(), std::vector<std::uint32_t>(reps.size()));
  for (std::size_t a = 0; a < reps.size(); ++a)
    for (std::size_t b = 0; b < reps.size(); ++b) table[a][b] = coset[g.mul(reps[a], reps[b])];
  return cayley_group(table, g.name() + "/N");
}

Group subgroup_group(const Group& g, const std::vector<std::uint32_t>& sorted_sub) {
  const std::size_t k = sorted_sub.size();
  const auto pos = [&](std::uint32_t x) {
    return static_cast<std::uint32_t>(std::lower_bound(sorted_sub.begin(), sorted_sub.end(), x) -
                                      sorted_sub.begin());
  };
  std::vector<std::vector<std::uint32_t>> table(k, std::vector<std::uint32_t>(k));
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) table[a][b] = pos(g.mul(sorted_sub[a], sorted_sub[b]));
  return cayley_group(table, g.name() + "<sub>");
}

}  // namespace noether
