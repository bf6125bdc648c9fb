#include <chrono>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "noether/case_verifier.hpp"
#include "noether/classify.hpp"
#include "noether/error.hpp"
#include "noether/lattice.hpp"
#include "noether/profile.hpp"
#include "oracles.hpp"

using namespace noether;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (cond) return;
    if (!pass) detail << "; ";
    pass = false;
    detail << what;
  }
};

double seconds_since(std::chrono::steady_clock::time_point t) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

long long modulus_for(int n) { return std::max(4LL, 1LL << (n - 3)); }

std::uint32_t word(const Group& g, const std::string& w, int n) {
  return g.evaluate(parse_word(w, {"s", "t", "l"}, n));
}

const StepReport* find_step(const CaseReport& r, const std::string& name) {
  for (const auto& s : r.steps)
    if (s.name == name) return &s;
  return nullptr;
}

template <class Mul>
Group table_group(int order, Mul mul, const std::string& name, std::vector<std::uint32_t> gens) {
  std::vector<std::vector<std::uint32_t>> t(order, std::vector<std::uint32_t>(order));
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b) t[a][b] = static_cast<std::uint32_t>(mul(a, b));
  return cayley_group(t, name, std::move(gens), {});
}

/// The reports of the full sweep: n = 5 for classes I, II and IV, n = 6 for class III.
std::vector<CaseReport> sweep() {
  std::vector<CaseReport> out;
  for (auto& r : run_all({5, 6}))
    if ((r.n == 5) != (family_class(r.family) == 3)) out.push_back(std::move(r));
  return out;
}

Outcome catalog_soundness() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  int groups = 0;
  for (int id = 1; id <= 26; ++id) {
    const int lo = family_min_n(id);
    for (int n = lo; n <= std::min(lo + 1, 7); ++n) {
      if (!family_accepts(id, n)) continue;
      const Group g = family_group(id, n);
      ++groups;
      const std::string tag = "G" + std::to_string(id) + "@n=" + std::to_string(n);
      long long exponent = 1;
      int max_order = 1;
      for (std::uint32_t a = 0; a < g.order(); ++a) {
        const int ord = oracle::element_order(g, a);
        exponent = std::lcm(exponent, static_cast<long long>(ord));
        max_order = std::max(max_order, ord);
      }
      o.require(g.order() == (std::size_t{1} << n), tag + " has the wrong order");
      if (n >= 5) o.require(exponent == (1LL << (n - 2)), tag + " has the wrong exponent");
      o.require(max_order == (1 << (n - 2)), tag + " has no cyclic subgroup of index 4, or one of index 2");
    }
  }
  const double secs = seconds_since(start);
  o.require(secs < 120, "took " + std::to_string(secs) + " s");
  if (o.pass) o.detail << groups << " groups checked in " << secs << " s";
  return o;
}

Outcome action_table_replay() {
  Outcome o;
  const auto r = run_case(8, 5);
  for (const char* name : {"action on z", "action on u"}) {
    const auto* s = find_step(r, name);
    o.require(s && s->status == StepStatus::Pass, std::string(name) + (s ? ": " + s->diff : " missing"));
  }
  o.require(r.passed(), "G8@n=5 did not pass");
  if (o.pass) o.detail << "induced action on z0..z3 and reduced action on u0..u3 match entry by entry";
  return o;
}

Outcome epsilon_dichotomy() {
  Outcome o;
  const auto e5 = run_case(8, 5).facts, e6 = run_case(8, 6).facts;
  o.require(e5.count("epsilon") && e5.at("epsilon") == "-1", "n=5 epsilon is not -1");
  o.require(e6.count("epsilon") && e6.at("epsilon") == "1", "n=6 epsilon is not 1");
  if (o.pass) o.detail << "epsilon = -1 at n=5, +1 at n=6";
  return o;
}

Outcome full_sweep(const std::vector<CaseReport>& reports) {
  Outcome o;
  int corrected = 0;
  for (const auto& r : reports) {
    o.require(r.passed(), r.case_id + " failed");
    for (const auto& s : r.steps) corrected += s.status == StepStatus::Corrected;
  }
  std::vector<int> with_tables;
  for (int f = 1; f <= 26; ++f) {
    CaseScript s = case_script(f);
    std::mt19937 probe(1);
    if (mutate_expected_coefficient(s, f, probe)) with_tables.push_back(f);
  }
  std::mt19937 rng(7);
  int flipped = 0;
  for (int k = 0; k < 10; ++k) {
    const int f = with_tables[std::uniform_int_distribution<std::size_t>(0, with_tables.size() - 1)(rng)];
    const int n = family_class(f) == 3 ? 6 : 5;
    CaseScript s = case_script(f);
    const auto what = mutate_expected_coefficient(s, f, rng);
    const bool failed = !run_script(s, f, n, minimal_case_field(n)).passed();
    flipped += failed;
    o.require(failed, "mutation not detected: G" + std::to_string(f) + " " + *what);
  }
  if (o.pass)
    o.detail << reports.size() << " cases pass (" << corrected << " corrected steps); " << flipped
             << "/10 mutations fail";
  return o;
}

Outcome homomorphism_property(const std::vector<CaseReport>& reports) {
  Outcome o;
  std::size_t checked = 0;
  for (const auto& r : reports)
    for (const auto& a : r.assignments) {
      ++checked;
      o.require(verify_homomorphism(a).ok(), r.case_id + " produced a non-homomorphism");
    }
  for (const auto& r : run_all({5, 6, 7}))
    for (const auto& a : r.assignments) {
      ++checked;
      o.require(verify_homomorphism(a).ok(), r.case_id + " produced a non-homomorphism");
    }

  // tau: z2 -> i z0 corrupted to z2 -> z0.
  {
    const Group g = family_group(8, 5);
    const auto a = table_assignment(
        g, "s: z0 -> z1 -> zeta*z0, z2 -> zeta^-1*z3, z3 -> z2; t: z0 -> z2 -> z0, z1 -> z3 -> i*z1",
        {"z0", "z1", "z2", "z3"}, 5, 4);
    bool power_fails = false;
    for (const auto& e : verify_homomorphism(a).entries)
      if (e.relation == "s^h = t^4") power_fails = !e.pass;
    o.require(power_fails, "corrupted coefficient at n=5 does not break s^h = t^4");
  }
  // Scaling tau by zeta8 leaves conjugation intact and breaks only the power relation.
  {
    const Group g = family_group(8, 6);
    const auto a = table_assignment(g,
                                    "s: z0 -> z1 -> zeta*z0, z2 -> zeta^-1*z3, z3 -> z2; "
                                    "t: z0 -> zeta*z2, z2 -> i*zeta*z0, z1 -> zeta*z3, z3 -> i*zeta*z1",
                                    {"z0", "z1", "z2", "z3"}, 6, 8);
    for (const auto& e : verify_homomorphism(a).entries) {
      if (e.relation == "multiplication table") continue;
      o.require(e.pass == (e.relation != "s^h = t^4"), "scaled tau: unexpected result for " + e.relation);
    }
  }
  if (o.pass)
    o.detail << checked << " assignments verified; a corrupted tau coefficient breaks s^h = t^4, "
             << "a zeta8-scaled tau breaks only that relation";
  return o;
}

Outcome reduction_correctness(const std::vector<CaseReport>& reports) {
  Outcome o;
  const char* table =
      "s: u1 -> zeta/u1, u2 -> zeta/u2, u3 -> zeta^-2*u1*u2*u3, u4 -> -u4; "
      "t: u1 -> u1, u2 -> u2, u3 -> u3, u4 -> u4; l: u1 <-> u2, u3 -> 1/(u1*u2*u3), u4 -> 1/u4";
  long long box_points = 0;
  for (int n : {5, 6, 7}) {
    const Group g = family_group(13, n);
    const auto a = table_assignment(g, table, {"u1", "u2", "u3", "u4"}, n, modulus_for(n));
    const auto H = g.subgroup({word(g, "s^2", n)});
    const auto res = invariant_sublattice(a, H);
    IntMatrix expected = IntMatrix::Identity(4, 4);
    expected(2, 2) = 1LL << (n - 4);
    const std::string tag = "n=" + std::to_string(n);
    o.require(same_lattice(res.basis, expected), tag + ": lattice differs from <u1, u2, u4, u3^(2^(n-4))>");
    o.require(oracle::determinant(res.basis) != 0, tag + ": rank dropped");

    const auto images = element_images(a);
    const long long m = a.modulus();
    const long long det = oracle::determinant(res.basis);
    const IntMatrix adj = adjugate(res.basis);
    IntVector v(4);
    for (int e0 = -8; e0 <= 8; ++e0)
      for (int e1 = -8; e1 <= 8; ++e1)
        for (int e2 = -8; e2 <= 8; ++e2)
          for (int e3 = -8; e3 <= 8; ++e3) {
            v << e0, e1, e2, e3;
            bool fixed = true;
            for (auto h : H)
              if (images[h].A * v != v || mod_floor(images[h].c.dot(v), m) != 0) fixed = false;
            // v is in the lattice iff adj(B) v is divisible by det(B).
            const IntVector x = adj * v;
            bool member = true;
            for (int k = 0; k < 4; ++k) member = member && x(k) % det == 0;
            ++box_points;
            if (fixed != member) {
              o.require(false, tag + ": box point disagrees");
              e0 = e1 = e2 = e3 = 9;
            }
          }
  }
  std::size_t max_steps = 0, chains = 0;
  for (const auto& r : reports)
    for (const auto& a : r.assignments) {
      if (a.dim() == 0) continue;
      const auto chain = reduce_to_injective(a);
      ++chains;
      max_steps = std::max(max_steps, chain.steps.size());
      o.require(chain.steps.size() <= 3, r.case_id + " needs more than 3 reduction steps");
      o.require(matrix_part_injective(chain.result), r.case_id + " does not reach an injective matrix part");
    }
  if (o.pass)
    o.detail << box_points << " box points agree; " << chains << " chains, at most " << max_steps << " step(s)";
  return o;
}

Outcome exceptional_truth_table() {
  Outcome o;
  const Group c4 = table_group(4, [](int a, int b) { return (a + b) % 4; }, "C4", {1});
  auto action = [&](long long m) {
    IntVector c = IntVector::Zero(3);
    c(2) = 1;
    return ActionAssignment{c4, {MonomialAutomorphism(exceptional_matrix(), c, m)}, {"z1", "z2", "z3"}};
  };
  const VerdictStatus expected[4] = {VerdictStatus::NotRational, VerdictStatus::Rational, VerdictStatus::Rational,
                                     VerdictStatus::Rational};
  const char* labels[4] = {"none", "-1", "2", "-2"};
  std::string row;
  for (int k = 0; k < 4; ++k) {
    FieldDescriptor f;
    f.squares.minus_one = k == 1;
    f.squares.two = k == 2;
    f.squares.minus_two = k == 3;
    if (k == 1) f.roots.insert(4);
    const auto v = classify_monomial_action(action(2), f.normalized());
    o.require(v.status == expected[k], std::string("flags ") + labels[k] + " give " + to_string(v.status));
    row += std::string(k ? ", " : "") + labels[k] + ": " + to_string(v.status);
  }
  const auto odd = classify_monomial_action(action(3), FieldDescriptor::with_root(3));
  o.require(odd.status == VerdictStatus::Rational, "c = zeta3 gives " + to_string(odd.status));
  if (o.pass) o.detail << row << "; c = zeta3: Rational";
  return o;
}

Outcome order_4n_fixtures() {
  Outcome o;
  const FieldDescriptor f = FieldDescriptor::with_root(6);
  const Group c24 = table_group(24, [](int a, int b) { return (a + b) % 24; }, "C24", {1});
  const Group d12 = table_group(
      24,
      [](int a, int b) {
        const int x1 = a / 2, e1 = a % 2, x2 = b / 2, e2 = b % 2;
        return 2 * (((x1 + (e1 ? -x2 : x2)) % 12 + 12) % 12) + (e1 ^ e2);
      },
      "D12", {2, 1});
  auto qmul = [](int a, int b) {
    static const int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
    return 4 * ((a / 4) ^ (b / 4) ^ sign[a % 4][b % 4]) + unit[a % 4][b % 4];
  };
  const Group c3q8 = table_group(
      24, [&](int a, int b) { return 8 * ((a / 8 + b / 8) % 3) + qmul(a % 8, b % 8); }, "C3 x Q8", {8, 1, 2});
  const Group c3c8 = table_group(
      24,
      [](int a, int b) {
        const int x1 = a / 8, p1 = a % 8, x2 = b / 8, p2 = b % 8;
        return 8 * ((x1 + (p1 % 2 ? -x2 : x2) + 6) % 3) + (p1 + p2) % 8;
      },
      "C3 x| C8", {8, 1});

  std::string row;
  for (const Group* g : {&c24, &d12, &c3q8}) {
    const auto v = classify_group(*g, f);
    row += g->name() + ": " + to_string(v.status) + ", ";
    o.require(v.status == VerdictStatus::Rational, g->name() + " expected Rational, got " + to_string(v.status));
  }
  const auto last = classify_group(c3c8, f);
  row += c3c8.name() + ": " + to_string(last.status);
  o.require(last.status == VerdictStatus::NotRational, "C3 x| C8 expected NotRational");
  for (int k = 0; k < 3; ++k) {
    FieldDescriptor g = f;
    if (k == 0) g.squares.minus_one = true, g.roots.insert(4);
    if (k == 1) g.squares.two = true;
    if (k == 2) g.squares.minus_two = true;
    o.require(classify_group(c3c8, g.normalized()).status == VerdictStatus::Rational,
              "C3 x| C8 stays non-rational after a flag flip");
  }
  int central = 0;
  for (std::uint32_t a = 0; a < c3c8.order(); ++a) {
    bool commutes = true;
    for (std::uint32_t b = 0; b < c3c8.order() && commutes; ++b) commutes = c3c8.mul(a, b) == c3c8.mul(b, a);
    central += commutes;
  }
  o.require(central % 2 == 0, "center of C3 x| C8 has odd order");
  o.detail << (o.pass ? "" : " | ") << row << "; |Z(C3 x| C8)| = " << central;
  return o;
}

Outcome lattice_algebra() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  std::mt19937 rng(12345);
  for (int k = 0; k < 500; ++k) {
    const IntMatrix M = oracle::random_matrix(rng, 3, 3, -5, 5);
    const auto s = smith_normal_form(M);
    const std::string tag = "matrix " + std::to_string(k);
    o.require(s.U * M * s.V == s.D, tag + ": U M V != D");
    o.require(std::llabs(oracle::determinant(s.U)) == 1 && std::llabs(oracle::determinant(s.V)) == 1,
              tag + ": transforms not unimodular");
    long long prod = 1;
    int rank = 0;
    for (int i = 0; i < 3; ++i) {
      const long long d = s.D(i, i);
      if (d == 0) continue;
      rank = i + 1;
      o.require(d > 0, tag + ": negative invariant factor");
      if (i + 1 < 3) o.require(s.D(i + 1, i + 1) % d == 0, tag + ": divisibility chain broken");
      prod *= d;
      o.require(prod == oracle::minor_gcd(M, i + 1), tag + ": d1..d" + std::to_string(i + 1) + " != minor gcd");
    }
    for (int i = rank; i < 3; ++i) o.require(oracle::minor_gcd(M, i + 1) == 0, tag + ": rank mismatch");
  }
  const double secs = seconds_since(start);
  o.require(secs < 30, "took " + std::to_string(secs) + " s");
  if (o.pass) o.detail << "500 matrices in " << secs << " s";
  return o;
}

Outcome m_group_pipeline() {
  Outcome o;
  const auto cycle = monomial_from_dense(
      {{std::nullopt, std::nullopt, std::nullopt, 1}, {0, std::nullopt, std::nullopt, std::nullopt},
       {std::nullopt, 0, std::nullopt, std::nullopt}, {std::nullopt, std::nullopt, 0, std::nullopt}},
      2);
  const auto twist = monomial_from_dense(
      {{1, std::nullopt, std::nullopt, std::nullopt}, {std::nullopt, 0, std::nullopt, std::nullopt},
       {std::nullopt, std::nullopt, 3, std::nullopt}, {std::nullopt, std::nullopt, std::nullopt, 0}},
      4);
  const auto with_i = classify_m_group({cycle, twist}, FieldDescriptor::with_root(4));
  const auto over_q = classify_m_group({cycle}, FieldDescriptor{}.normalized());
  o.require(with_i.status == VerdictStatus::Rational, "sqrt(-1) fixture gives " + to_string(with_i.status));
  o.require(over_q.status == VerdictStatus::NotRational,
            "x1 -> x2 -> x3 -> x4 -> -x1 over Q gives " + to_string(over_q.status));
  if (o.pass) o.detail << "with sqrt(-1): Rational; x1 -> x2 -> x3 -> x4 -> -x1 over Q: NotRational";
  return o;
}

}  // namespace

int main() {
  const auto reports = sweep();
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"catalog soundness", catalog_soundness},
      {"action-table replay", action_table_replay},
      {"epsilon dichotomy", epsilon_dichotomy},
      {"full sweep and mutations", [&] { return full_sweep(reports); }},
      {"homomorphism property", [&] { return homomorphism_property(reports); }},
      {"reduction correctness", [&] { return reduction_correctness(reports); }},
      {"exceptional action truth table", exceptional_truth_table},
      {"order 4n classifier fixtures", order_4n_fixtures},
      {"lattice algebra properties", lattice_algebra},
      {"M-group pipeline", m_group_pipeline},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << "exception: " << e.what();
    }
    failed += !o.pass;
    std::cout << (o.pass ? "PASS  " : "FAIL  ") << name << ": " << o.detail.str() << "\n";
  }
  std::cout << criteria.size() - failed << "/" << criteria.size() << " criteria passed\n";
  return failed ? 1 : 0;
}
