#include <chrono>
#include <functional>
#include <set>

#include "noether/case_verifier.hpp"
#include "noether/error.hpp"
#include "noether/lattice.hpp"
#include "noether/profile.hpp"
#include "noether/regular_module.hpp"

namespace noether {

namespace {

void require_range(int subcase, int m) {
  if (subcase < 1 || subcase > 3 || m < 3 || m > 15 || m % 2 == 0)
    throw Error(ErrorCode::ScriptRangeError, "order-8m constructions need subcase 1..3 and odd m in [3, 15], got subcase " +
                                                 std::to_string(subcase) + ", m=" + std::to_string(m));
}

/// C_mod x| (C_k1 x C_k2), the first factor acting by x -> r1 x, the second trivially.
/// Elements are stored as (x, p1, p2).
struct Semidirect {
  int mod, k1, k2, r1;
  int size() const { return mod * k1 * k2; }
  int index(int x, int p1, int p2) const {
    x = ((x % mod) + mod) % mod;
    return (x * k1 + (p1 % k1 + k1) % k1) * k2 + (p2 % k2 + k2) % k2;
  }
  Group build(const std::string& name, const std::vector<std::array<int, 3>>& gens,
              const std::vector<std::string>& names) const {
    const int N = size();
    std::vector<int> rpow(k1);
    for (int p = 0, v = 1; p < k1; ++p, v = static_cast<int>((1LL * v * r1 % mod + mod) % mod)) rpow[p] = v;
    std::vector<std::vector<std::uint32_t>> table(N, std::vector<std::uint32_t>(N));
    for (int a = 0; a < N; ++a) {
      const int x1 = a / (k1 * k2), p1 = (a / k2) % k1, q1 = a % k2;
      for (int b = 0; b < N; ++b) {
        const int x2 = b / (k1 * k2), p2 = (b / k2) % k1, q2 = b % k2;
        table[a][b] = static_cast<std::uint32_t>(index(x1 + rpow[p1] * x2, p1 + p2, q1 + q2));
      }
    }
    std::vector<std::uint32_t> g;
    for (const auto& e : gens) g.push_back(static_cast<std::uint32_t>(index(e[0], e[1], e[2])));
    return cayley_group(table, name, g, names);
  }
};

std::uint32_t find_generator(const Group& g, const std::string& name) {
  const auto& names = g.generator_names();
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return g.generators()[i];
  throw Error(ErrorCode::InvalidInput, "no generator " + name);
}

bool contains(const std::vector<std::uint32_t>& sorted, std::uint32_t x) {
  return std::binary_search(sorted.begin(), sorted.end(), x);
}

}  // namespace

Group order8m_group(int subcase, int m) {
  require_range(subcase, m);
  const std::string tag = "C" + std::to_string(m);
  switch (subcase) {
    case 1:
      return Semidirect{m, 4, 2, -1}.build(tag + " x| (C4 x C2)", {{1, 2, 0}, {0, 1, 0}, {0, 0, 1}},
                                           {"sigma", "tau", "tau1"});
    case 2:
      return Semidirect{2 * m, 4, 1, -1}.build("C" + std::to_string(2 * m) + " x| C4", {{1, 0, 0}, {0, 1, 0}},
                                               {"sigma", "tau"});
    default:
      return Semidirect{m, 8, 1, -1}.build(tag + " x| C8", {{1, 4, 0}, {0, 1, 0}}, {"sigma", "tau"});
  }
}

CaseReport run_order8m_subcase(int subcase, int m, const FieldDescriptor& field_in) {
  require_range(subcase, m);
  const FieldDescriptor field = field_in.normalized();
  if (field.characteristic == 2 || !field.has_root(2 * m))
    throw Error(ErrorCode::InvalidInput, "the construction needs char k != 2 and zeta_" + std::to_string(2 * m) + " in k");

  const auto start = std::chrono::steady_clock::now();
  CaseReport report;
  report.case_id = "8m-subcase" + std::to_string(subcase) + "@m=" + std::to_string(m);
  report.n = 2 * m;
  report.field = field.to_string();
  const Group G = order8m_group(subcase, m);
  report.title = G.name();

  bool ok = true;
  auto record = [&](const std::string& name, const std::string& ref, const std::function<std::string()>& body) {
    if (!ok) return;
    StepReport s{name, StepStatus::Pass, ref, ""};
    try {
      s.diff = body();
    } catch (const std::exception& e) {
      s.status = StepStatus::Fail;
      s.diff = e.what();
      ok = false;
    }
    report.steps.push_back(std::move(s));
  };
  auto check = [](bool cond, const std::string& what) {
    if (!cond) throw Error(ErrorCode::ShapeViolation, what);
  };

  const std::uint32_t sigma = find_generator(G, "sigma");
  const std::uint32_t tau = find_generator(G, "tau");
  const long long n = 2LL * m;

  record("group structure", "printed: G = <sigma> x| P_2", [&]() -> std::string {
    check(G.order() == static_cast<std::size_t>(8 * m), "|G| != 8m");
    check(G.element_order(sigma) == n, "sigma does not have order 2m");
    const auto S = G.subgroup({sigma});
    check(G.is_normal(S), "<sigma> is not normal");
    check(contains(center(G), G.pow(sigma, m)), "sigma^m is not central");
    if (subcase == 1) {
      const std::uint32_t tau1 = find_generator(G, "tau1");
      check(G.element_order(tau) == 4 && G.element_order(tau1) == 2, "P_2 is not C4 x C2");
      check(G.pow(sigma, m) == G.pow(tau, 2), "sigma^m != tau^2");
      check(!contains(S, tau) && !contains(S, tau1) && !contains(S, G.mul(tau, tau1)),
            "G/<sigma> is not C2 x C2");
      return "sigma^m = tau^2, G/<sigma> = C2 x C2";
    }
    if (subcase == 2) {
      check(G.element_order(tau) == 4 && G.subgroup({tau}).size() == 4, "tau does not have order 4");
      check(G.subgroup({G.pow(tau, 2)}).size() == 2 && !contains(S, G.pow(tau, 2)), "<sigma> meets <tau>");
      return "G = <sigma> x| <tau>, <tau> = C4";
    }
    check(G.element_order(tau) == 8 && G.pow(tau, 4) == G.pow(sigma, m), "tau^4 != sigma^m");
    check(cm_rtimes_c8(G).has_value(), "G is not C_m x| C8");
    return "tau^4 = sigma^m, G = C_m x| C8";
  });

  std::vector<std::uint32_t> transversal;
  if (subcase == 1) {
    const std::uint32_t tau1 = find_generator(G, "tau1");
    transversal = {G.identity(), tau, tau1, G.mul(tau, tau1)};
  } else {
    transversal = {G.identity(), tau, G.pow(tau, 2), G.pow(tau, 3)};
  }

  ActionAssignment u;
  record("u_j = t_j X with sigma X = zeta X", "printed: induced variables", [&]() -> std::string {
    const auto mats = induce_character(G, {sigma}, {RootExponent(n, 1)}, transversal);
    check(check_faithful(G, mats), "the induced representation is not faithful");
    u = to_assignment(G, mats, {"u0", "u1", "u2", "u3"});
    const auto hom = verify_homomorphism(u);
    for (const auto& e : hom.entries) check(e.pass, "relation " + e.relation + " fails: " + e.detail);
    report.assignments.push_back(u);
    return "faithful on u0..u3";
  });

  ActionAssignment v;
  record(subcase == 1 ? "v_i = u_i/u_0" : "v_i = u_i/u_{i-1}", "printed", [&]() -> std::string {
    IntMatrix B = IntMatrix::Identity(4, 4);
    for (int i = 1; i < 4; ++i) B(subcase == 1 ? 0 : i - 1, i) = -1;
    const auto changed = change_lattice_basis(u, B, {"u0", "v1", "v2", "v3"});
    const auto step = eliminate_fibered_variable(changed, 0);
    v = step.output;
    report.assignments.push_back(v);
    const auto kernel = scalar_kernel(v);
    check(contains(kernel, sigma), "sigma does not act by scalars on v");
    return "u0 dropped; sigma acts by scalars on v1, v2, v3";
  });

  if (subcase != 1) {
    const long long c = subcase == 2 ? 0 : 1;
    record(subcase == 2 ? "tau: v1 -> v2 -> v3 -> 1/(v1 v2 v3)" : "tau: v1 -> v2 -> v3 -> -1/(v1 v2 v3)", "printed",
           [&]() -> std::string {
             const auto& gens = G.generators();
             const auto idx = static_cast<std::size_t>(std::find(gens.begin(), gens.end(), tau) - gens.begin());
             const MonomialAutomorphism& t = v.images.at(idx);
             IntVector coeff = IntVector::Zero(3);
             coeff(2) = c * t.m / 2;
             const MonomialAutomorphism expected(exceptional_matrix(), coeff, t.m);
             check(t == expected, "tau acts as " + t.to_string(v.variable_names));
             return t.to_string(v.variable_names);
           });
  }

  ActionAssignment z;
  record("fixed field of the scalar subgroup", "printed: monomial fixed field with injective matrix part",
         [&]() -> std::string {
           const auto chain = reduce_to_injective(v);
           z = chain.result;
           report.assignments.push_back(z);
           report.facts["reduction_steps"] = std::to_string(chain.steps.size());
           check(matrix_part_injective(z), "the matrix part is not injective");
           return std::to_string(chain.steps.size()) + " step(s)";
         });

  record("terminal form", "printed", [&]() -> std::string {
    if (subcase == 1) {
      std::set<std::vector<long long>> matrices;
      bool has_order_four = false;
      for (const auto& img : element_images(z)) {
        matrices.insert(std::vector<long long>(img.A.data(), img.A.data() + img.A.size()));
        MonomialAutomorphism linear(img.A, IntVector::Zero(3), 1);
        if (automorphism_order(linear) == 4) has_order_four = true;
      }
      check(!(matrices.size() == 4 && has_order_four), "G/H is cyclic of order 4");
      return "G/H of order " + std::to_string(matrices.size()) + " is not cyclic of order 4";
    }
    if (subcase == 2) {
      for (const auto& a : z.images) check(a.purely_monomial(), "a generator acts with nontrivial coefficients");
      return "purely monomial";
    }
    for (const auto& a : z.images) {
      if (a.is_identity()) continue;
      if (const auto form = exceptional_form(a)) {
        report.facts["epsilon"] = std::to_string(form->epsilon);
        check(form->epsilon == -1, "exceptional form with epsilon " + std::to_string(form->epsilon));
        return "exceptional with epsilon = -1";
      }
    }
    throw Error(ErrorCode::ShapeViolation, "no generator acts in the exceptional C4 shape");
  });

  record("rationality rule", "printed", [&]() -> std::string {
    report.verdict = classify_monomial_action(z, field);
    check(report.verdict.status != VerdictStatus::Unknown, "no rule applies to the terminal action");
    return to_string(report.verdict.status);
  });

  record("group classifier agrees", "derived", [&]() -> std::string {
    const Verdict g = classify_group(G, field);
    check(g.status == report.verdict.status, "group classifier says " + to_string(g.status));
    return to_string(g.status);
  });

  report.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace noether
