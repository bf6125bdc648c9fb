#include <doctest.h>

#include <random>

#include "noether/classify.hpp"
#include "noether/error.hpp"
#include "noether/lattice.hpp"
#include "noether/profile.hpp"

using namespace noether;

namespace {

using Table = std::vector<std::vector<std::uint32_t>>;

template <class Mul>
Group table_group(int order, Mul mul, const std::string& name, std::vector<std::uint32_t> gens) {
  Table t(order, std::vector<std::uint32_t>(order));
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b) t[a][b] = static_cast<std::uint32_t>(mul(a, b));
  return cayley_group(t, name, std::move(gens), {});
}

Group cyclic(int n) {
  return table_group(n, [n](int a, int b) { return (a + b) % n; }, "C" + std::to_string(n), {1});
}

/// Dihedral group of order 2r, elements 2x + e for rotation x and reflection bit e.
Group dihedral(int r) {
  return table_group(
      2 * r,
      [r](int a, int b) {
        const int x1 = a / 2, e1 = a % 2, x2 = b / 2, e2 = b % 2;
        return 2 * (((x1 + (e1 ? -x2 : x2)) % r + r) % r) + (e1 ^ e2);
      },
      "D" + std::to_string(r), {2, 1});
}

/// Q8 on 4*sign + unit with units 1, i, j, k.
int quaternion_mul(int a, int b) {
  static const int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  return 4 * ((a / 4) ^ (b / 4) ^ sign[a % 4][b % 4]) + unit[a % 4][b % 4];
}

Group c3_times_q8() {
  return table_group(
      24, [](int a, int b) { return 8 * ((a / 8 + b / 8) % 3) + quaternion_mul(a % 8, b % 8); }, "C3 x Q8",
      {8, 1, 2});
}

/// C3 x| C8, the generator of C8 inverting C3.
Group c3_rtimes_c8() {
  return table_group(
      24,
      [](int a, int b) {
        const int x1 = a / 8, p1 = a % 8, x2 = b / 8, p2 = b % 8;
        return 8 * ((x1 + (p1 % 2 ? -x2 : x2) + 6) % 3) + (p1 + p2) % 8;
      },
      "C3 x| C8", {8, 1});
}

ActionAssignment exceptional_action(long long m, long long c) {
  IntVector coeff = IntVector::Zero(3);
  coeff(2) = c;
  return ActionAssignment{cyclic(4), {MonomialAutomorphism(exceptional_matrix(), coeff, m)}, {"z1", "z2", "z3"}};
}

FieldDescriptor flags(bool minus_one, bool two, bool minus_two) {
  FieldDescriptor f;
  f.squares.minus_one = minus_one;
  f.squares.two = two;
  f.squares.minus_two = minus_two;
  if (minus_one) f.roots.insert(4);
  return f.normalized();
}

IntMatrix small_unimodular(std::mt19937& rng) {
  IntMatrix P = IntMatrix::Identity(3, 3);
  std::uniform_int_distribution<int> pick(0, 2), coef(-1, 1);
  for (int k = 0; k < 3; ++k) {
    const int i = pick(rng), j = pick(rng);
    if (i != j) P.row(i) += coef(rng) * P.row(j);
  }
  return P;
}

}  // namespace

TEST_SUITE("classify") {
  TEST_CASE("exceptional action truth table under the square flags") {
    const auto a = exceptional_action(2, 1);
    CHECK(classify_monomial_action(a, flags(false, false, false)).status == VerdictStatus::NotRational);
    CHECK(classify_monomial_action(a, flags(true, false, false)).status == VerdictStatus::Rational);
    CHECK(classify_monomial_action(a, flags(false, true, false)).status == VerdictStatus::Rational);
    CHECK(classify_monomial_action(a, flags(false, false, true)).status == VerdictStatus::Rational);
  }

  TEST_CASE("unknown square flags give a conditional verdict") {
    FieldDescriptor f;
    f.squares.minus_one.reset();
    f.squares.two.reset();
    f.squares.minus_two.reset();
    const auto v = classify_monomial_action(exceptional_action(2, 1), f);
    CHECK(v.status == VerdictStatus::ConditionallyRational);
    CHECK_FALSE(v.condition.empty());
  }

  TEST_CASE("an odd-order coefficient is a fourth power and the action is rational") {
    const auto a = exceptional_action(3, 1);
    const auto form = exceptional_form(a.images.front());
    REQUIRE(form.has_value());
    CHECK(form->epsilon == 1);
    CHECK(classify_monomial_action(a, FieldDescriptor::with_root(3)).status == VerdictStatus::Rational);
  }

  TEST_CASE("purely monomial exceptional action is rational") {
    const auto a = exceptional_action(2, 0);
    CHECK(exceptional_form(a.images.front())->epsilon == 1);
    CHECK(classify_monomial_action(a, flags(false, false, false)).status == VerdictStatus::Rational);
  }

  TEST_CASE("epsilon is invariant under unimodular conjugation") {
    std::mt19937 rng(17);
    const auto a = exceptional_action(2, 1);
    for (int k = 0; k < 25; ++k) {
      const IntMatrix P = small_unimodular(rng);
      const auto b = change_lattice_basis(a, P);
      const auto form = exceptional_form(b.images.front());
      REQUIRE(form.has_value());
      CHECK(form->epsilon == -1);
      const IntMatrix& Q = form->conjugator;
      CHECK(unimodular_inverse(Q) * b.images.front().A * Q == exceptional_matrix());
      CHECK(classify_monomial_action(b, flags(false, false, false)).status == VerdictStatus::NotRational);
    }
  }

  TEST_CASE("non-exceptional matrices have no exceptional form") {
    const auto swap = MonomialAutomorphism(IntMatrix::Identity(3, 3), IntVector::Zero(3), 1);
    CHECK_FALSE(exceptional_form(swap).has_value());
  }

  TEST_CASE("order 4n classifier on fixtures with zeta_6") {
    const FieldDescriptor f = FieldDescriptor::with_root(6);
    CHECK(classify_group(dihedral(12), f).status == VerdictStatus::Rational);
    CHECK(classify_group(dihedral(6), FieldDescriptor::with_root(3)).status == VerdictStatus::Rational);
    CHECK(classify_group(c3_times_q8(), f).status == VerdictStatus::Rational);
    CHECK(classify_group(c3_rtimes_c8(), f).status == VerdictStatus::NotRational);
    // C24 = C3 x C8 is C3 x| C8 with trivial action and an even center, hence exceptional.
    CHECK(cm_rtimes_c8(cyclic(24)).has_value());
    CHECK(classify_group(cyclic(24), f).status == VerdictStatus::NotRational);
  }

  TEST_CASE("flipping any square flag makes C3 x| C8 rational") {
    const Group g = c3_rtimes_c8();
    for (int k = 0; k < 3; ++k) {
      FieldDescriptor f = FieldDescriptor::with_root(6);
      if (k == 0) f.squares.minus_one = true, f.roots.insert(4);
      if (k == 1) f.squares.two = true;
      if (k == 2) f.squares.minus_two = true;
      CHECK(classify_group(g, f.normalized()).status == VerdictStatus::Rational);
    }
  }

  TEST_CASE("C3 x| C8 has an even center, checked by brute force") {
    const Group g = c3_rtimes_c8();
    int central = 0;
    for (std::uint32_t a = 0; a < g.order(); ++a) {
      bool commutes = true;
      for (std::uint32_t b = 0; b < g.order() && commutes; ++b) commutes = g.mul(a, b) == g.mul(b, a);
      central += commutes;
    }
    CHECK(central == 4);
    CHECK(center(g).size() == 4);
  }

  TEST_CASE("2-groups with a cyclic subgroup of index 4") {
    CHECK(classify_group(family_group(8, 5), minimal_case_field(5)).status == VerdictStatus::Rational);
    CHECK(classify_group(family_group(26, 5), minimal_case_field(5)).status == VerdictStatus::Rational);
  }

  TEST_CASE("field validation rejects characteristic 2 for the index-4 rule") {
    FieldDescriptor f;
    f.characteristic = 2;
    f.finite = true;
    const auto v = classify_group(family_group(8, 5), f.normalized());
    CHECK(v.status == VerdictStatus::Rational);
    CHECK(v.trace.front().rule == std::string(rules::kCharP));
  }
}

TEST_SUITE("m_group") {
  const auto cycle = monomial_from_dense(
      {{std::nullopt, std::nullopt, std::nullopt, 1}, {0, std::nullopt, std::nullopt, std::nullopt},
       {std::nullopt, 0, std::nullopt, std::nullopt}, {std::nullopt, std::nullopt, 0, std::nullopt}},
      2);

  TEST_CASE("x1 -> x2 -> x3 -> x4 -> -x1 is not rational over Q") {
    const auto v = classify_m_group({cycle}, FieldDescriptor{});
    CHECK(v.status == VerdictStatus::NotRational);
  }

  TEST_CASE("any M-group is rational once sqrt(-1) is in k") {
    const auto twist = monomial_from_dense(
        {{1, std::nullopt, std::nullopt, std::nullopt}, {std::nullopt, 0, std::nullopt, std::nullopt},
         {std::nullopt, std::nullopt, 3, std::nullopt}, {std::nullopt, std::nullopt, std::nullopt, 0}},
        4);
    CHECK(classify_m_group({cycle}, FieldDescriptor::with_root(4)).status == VerdictStatus::Rational);
    CHECK(classify_m_group({cycle, twist}, FieldDescriptor::with_root(4)).status == VerdictStatus::Rational);
  }

  TEST_CASE("a diagonal sign group is rational over Q") {
    std::vector<MonomialMatrix> gens;
    for (int i = 0; i < 4; ++i) {
      std::vector<std::vector<std::optional<long long>>> d(4, std::vector<std::optional<long long>>(4));
      for (int j = 0; j < 4; ++j) d[j][j] = j == i ? 1 : 0;
      gens.push_back(monomial_from_dense(d, 2));
    }
    CHECK(classify_m_group(gens, FieldDescriptor{}).status == VerdictStatus::Rational);
  }

  TEST_CASE("the abstract group of a matrix group has the closure order") {
    CHECK(matrix_group({cycle}).order() == 8);
  }
}
