#include <doctest.h>

#include <random>

#include "noether/case_verifier.hpp"
#include "noether/error.hpp"
#include "noether/expression.hpp"
#include "noether/lattice.hpp"
#include "noether/monomial.hpp"
#include "noether/regular_module.hpp"

using namespace noether;

namespace {

long long modulus_for(int n) { return std::max(4LL, 1LL << (n - 3)); }

MonomialAutomorphism from_text(const std::vector<std::string>& images, const std::vector<std::string>& vars,
                               int n, long long m) {
  std::vector<LaurentFraction> f;
  for (const auto& s : images) f.push_back(parse_expression(s, vars, n));
  auto a = from_images(f, m);
  REQUIRE(a.has_value());
  return *a;
}

std::uint32_t word(const Group& g, const std::string& w, int n) {
  return g.evaluate(parse_word(w, {"s", "t", "l"}, n));
}

const char* kG8ZTable =
    "s: z0 -> z1 -> zeta*z0, z2 -> zeta^-1*z3, z3 -> z2; t: z0 -> z2 -> i*z0, z1 -> z3 -> i*z1";

const char* kG13UTable =
    "s: u1 -> zeta/u1, u2 -> zeta/u2, u3 -> zeta^-2*u1*u2*u3, u4 -> -u4; "
    "t: u1 -> u1, u2 -> u2, u3 -> u3, u4 -> u4; "
    "l: u1 <-> u2, u3 -> 1/(u1*u2*u3), u4 -> 1/u4";

IntMatrix random_unimodular(std::mt19937& rng, int d) {
  IntMatrix P = IntMatrix::Identity(d, d);
  std::uniform_int_distribution<int> pick(0, d - 1), coef(-2, 2);
  for (int k = 0; k < 6; ++k) {
    const int i = pick(rng), j = pick(rng);
    if (i == j) continue;
    P.row(i) += coef(rng) * P.row(j);
  }
  return P;
}

}  // namespace

TEST_SUITE("monomial") {
  TEST_CASE("composition, inverse and power of an explicit automorphism") {
    const int n = 5;
    const std::vector<std::string> v = {"x", "y"};
    const auto s = from_text({"zeta/x", "y"}, v, n, 4);
    CHECK(compose(s, s).is_identity());
    CHECK(inverse(s) == s);
    const auto r = from_text({"y", "1/x"}, v, n, 4);
    CHECK(automorphism_order(r) == 4);
    CHECK(power(r, 2) == from_text({"1/x", "1/y"}, v, n, 4));
    CHECK(compose(r, inverse(r)).is_identity());
    CHECK(compose(MonomialAutomorphism::identity(2, 4), r) == r);
    // (r o s)(x) = r(zeta/x) = zeta/y
    const auto rs = compose(r, s);
    CHECK(rs == from_text({"zeta/y", "1/x"}, v, n, 4));
  }

  TEST_CASE("apply agrees with substitution of the images") {
    const int n = 5;
    const std::vector<std::string> v = {"z0", "z1"};
    const auto a = from_text({"z1", "zeta*z0"}, v, n, 4);
    const auto f = parse_expression("z0*z1 + z0", v, n);
    CHECK(fraction_equal(apply(a, f), parse_expression("zeta*z0*z1 + z1", v, n)));
    CHECK(fraction_equal(apply(power(a, 2), parse_expression("z0", v, n)), parse_expression("zeta*z0", v, n)));
  }

  TEST_CASE("random compositions are associative and inverses cancel") {
    std::mt19937 rng(41);
    std::uniform_int_distribution<int> coef(0, 7);
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<MonomialAutomorphism> a;
      for (int k = 0; k < 3; ++k) {
        IntVector c(3);
        for (int j = 0; j < 3; ++j) c(j) = coef(rng);
        a.emplace_back(random_unimodular(rng, 3), c, 8);
      }
      CHECK(compose(compose(a[0], a[1]), a[2]) == compose(a[0], compose(a[1], a[2])));
      CHECK(compose(a[0], inverse(a[0])).is_identity());
      CHECK(compose(inverse(a[1]), a[1]).is_identity());
    }
  }

  TEST_CASE("printed action on z is a homomorphism of G8") {
    for (int n : {5, 6}) {
      const Group g = family_group(8, n);
      const auto a = table_assignment(g, kG8ZTable, {"z0", "z1", "z2", "z3"}, n, modulus_for(n));
      const auto rep = verify_homomorphism(a);
      CHECK(rep.ok());
      CHECK(rep.entries.size() >= g.relations().size());
    }
  }

  TEST_CASE("a corrupted tau coefficient breaks the relation s^h = t^4 and no other relation") {
    // tau scaled by zeta8: its fourth power picks up -1, conjugation is unaffected.
    const int n = 6;
    const Group g = family_group(8, n);
    const std::string bad = "s: z0 -> z1 -> zeta*z0, z2 -> zeta^-1*z3, z3 -> z2; "
                            "t: z0 -> zeta*z2, z2 -> i*zeta*z0, z1 -> zeta*z3, z3 -> i*zeta*z1";
    const auto a = table_assignment(g, bad, {"z0", "z1", "z2", "z3"}, n, modulus_for(n));
    const auto rep = verify_homomorphism(a);
    CHECK_FALSE(rep.ok());
    int relation_entries = 0;
    for (const auto& e : rep.entries) {
      if (e.relation == "multiplication table") continue;
      ++relation_entries;
      CHECK_MESSAGE(e.pass == (e.relation != "s^h = t^4"), e.relation);
    }
    CHECK(relation_entries == 3);
  }

  TEST_CASE("element images are consistent with the multiplication table") {
    const int n = 5;
    const Group g = family_group(8, n);
    const auto a = table_assignment(g, kG8ZTable, {"z0", "z1", "z2", "z3"}, n, 4);
    const auto all = element_images(a);
    REQUIRE(all.size() == g.order());
    std::mt19937 rng(3);
    std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(g.order() - 1));
    for (int k = 0; k < 200; ++k) {
      const auto x = pick(rng), y = pick(rng);
      CHECK(all[g.mul(x, y)] == compose(all[x], all[y]));
    }
  }

  TEST_CASE("monomial matrices compose and close") {
    const auto swap = monomial_from_dense({{std::nullopt, 0}, {0, std::nullopt}}, 4);
    const auto twist = monomial_from_dense({{1, std::nullopt}, {std::nullopt, 0}}, 4);
    CHECK(compose(swap, swap) == MonomialMatrix::identity(2));
    const auto group = matrix_closure({swap, twist});
    CHECK(group.size() == 32);
    CHECK_THROWS_AS(monomial_from_dense({{0, 0}, {std::nullopt, std::nullopt}}, 4), Error);
  }

  TEST_CASE("coefficient normalization rescales into <zeta_m>") {
    // x1 -> zeta8 x2, x2 -> zeta8^-1 x1 squares to the identity; rescaling x2 clears it.
    const auto m = monomial_from_dense({{std::nullopt, 7}, {1, std::nullopt}}, 8);
    const auto norm = normalize_coefficients({m});
    CHECK(norm.m == 1);
    // With x2 -> x1 instead the square is the scalar zeta8, which no rescaling removes.
    CHECK(normalize_coefficients({monomial_from_dense({{std::nullopt, 0}, {1, std::nullopt}}, 8)}).m == 8);
    for (const auto& g : norm.rescaled)
      for (const auto& c : g.coeff) CHECK((norm.m * c.exponent) % c.modulus == 0);
  }
}

TEST_SUITE("regular_module") {
  TEST_CASE("eigenvector of <s^2, t> in the regular module of G1") {
    const int n = 5;
    const Group g = family_group(1, n);
    const RegularModule mod(g, 4);
    const std::vector<std::uint32_t> gens = {word(g, "s^2", n), word(g, "t", n)};
    const std::vector<RootExponent> chi = {RootExponent(4, 1), RootExponent(4, 0)};
    const auto X = eigenvector(mod, gens, chi);
    CHECK_FALSE(is_zero(X));
    CHECK_NOTHROW(require_eigenvector(mod, X, gens, chi));
    CHECK_THROWS_AS(require_eigenvector(mod, X, gens, {RootExponent(4, 0), RootExponent(4, 0)}), Error);
  }

  TEST_CASE("trivial character over the whole group gives the orbit sum") {
    const Group g = family_group(2, 5);
    const RegularModule mod(g, 4);
    const auto X = eigenvector(mod, g.generators(), std::vector<RootExponent>(g.generators().size(), RootExponent(4, 0)));
    const auto& one = X.front();
    for (const auto& c : X) CHECK(c == one);
  }

  TEST_CASE("incompatible characters are rejected") {
    // In G8 at n = 5, t^4 = s^4, so chi(t^2) = i forces chi(s^4) = -1, contradicting chi(s^2) = 1.
    const int n = 5;
    const Group g = family_group(8, n);
    CHECK_THROWS_AS(
        extend_character(g, {word(g, "s^2", n), word(g, "t^2", n)}, {RootExponent(4, 0), RootExponent(4, 1)}),
        Error);
    CHECK_NOTHROW(
        extend_character(g, {word(g, "s^2", n), word(g, "t^2", n)}, {RootExponent(4, 1), RootExponent(4, 1)}));
  }

  TEST_CASE("induced x variables of G1 reproduce the printed action and are not faithful alone") {
    const int n = 5;
    const Group g = family_group(1, n);
    const RegularModule mod(g, 4);
    const std::vector<std::uint32_t> gens = {word(g, "s^2", n), word(g, "t", n)};
    const auto X = eigenvector(mod, gens, {RootExponent(4, 1), RootExponent(4, 0)});
    const auto Y = eigenvector(mod, gens, {RootExponent(4, 0), RootExponent(4, 1)});
    const std::uint32_t s = word(g, "s", n);
    const auto xs = induce_variables(mod, {X}, {{g.identity(), s}}, {"x0", "x1"});
    CHECK_FALSE(check_faithful(g, xs));
    const auto both = induce_variables(mod, {X, Y}, {{g.identity(), s}, {g.identity(), s}}, {"x0", "x1", "y0", "y1"});
    CHECK(check_faithful(g, both));
    const auto a = to_assignment(g, both.generator_matrices, both.names);
    const auto printed = table_assignment(
        g, "s: x0 -> x1 -> zeta*x0, y0 -> y1 -> y0; t: x0 -> x0, x1 -> -x1, y0 -> i*y0, y1 -> i*y1",
        both.names, n, 4);
    for (std::size_t k = 0; k < a.images.size(); ++k)
      CHECK(a.images[k].lifted(4) == printed.images[k].lifted(4));
  }

  TEST_CASE("a one-dimensional trivial representation is not faithful") {
    const Group g = family_group(1, 5);
    CHECK_FALSE(check_faithful(g, std::vector<MonomialMatrix>(g.generators().size(), MonomialMatrix::identity(1))));
  }
}

TEST_SUITE("lattice") {
  TEST_CASE("scalar kernel of the G13 action on u contains s^2") {
    for (int n : {5, 6}) {
      const Group g = family_group(13, n);
      const auto a = table_assignment(g, kG13UTable, {"u1", "u2", "u3", "u4"}, n, modulus_for(n));
      const auto H = scalar_kernel(a);
      CHECK(std::binary_search(H.begin(), H.end(), word(g, "s^2", n)));
      CHECK(g.is_normal(H));
    }
  }

  TEST_CASE("invariant sublattice of <s^2> is spanned by u1, u2, u4 and u3^(2^(n-4))") {
    for (int n : {5, 6, 7}) {
      const Group g = family_group(13, n);
      const auto a = table_assignment(g, kG13UTable, {"u1", "u2", "u3", "u4"}, n, modulus_for(n));
      const auto H = g.subgroup({word(g, "s^2", n)});
      const auto res = invariant_sublattice(a, H);
      IntMatrix expected = IntMatrix::Identity(4, 4);
      expected(2, 2) = 1LL << (n - 4);
      CHECK(same_lattice(res.basis, expected));
      CHECK(determinant(res.basis) != 0);

      // Every invariant exponent vector in a box lies in the lattice, and only those.
      const auto images = element_images(a);
      const long long m = a.modulus();
      for (int e0 = -8; e0 <= 8; e0 += 1)
        for (int e1 = -8; e1 <= 8; e1 += 4)
          for (int e2 = -8; e2 <= 8; ++e2)
            for (int e3 = -8; e3 <= 8; e3 += 4) {
              IntVector v(4);
              v << e0, e1, e2, e3;
              bool fixed = true;
              for (auto h : H) {
                const auto& img = images[h];
                // h acts on x^v by A v and the coefficient sum c . v.
                if (img.A * v != v || mod_floor(img.c.dot(v), m) != 0) fixed = false;
              }
              const bool member = e2 % (1 << (n - 4)) == 0;
              CHECK(fixed == member);
            }
    }
  }

  TEST_CASE("one-dimensional scalar action x -> i x fixes exactly 4Z") {
    const Group g = family_group(1, 5);
    IntVector c(1);
    c << 1;
    ActionAssignment a{g, {}, {"x"}};
    a.images.emplace_back(IntMatrix::Identity(1, 1), c, 4);
    a.images.push_back(MonomialAutomorphism::identity(1, 4));
    const auto res = invariant_sublattice(a, scalar_kernel(a));
    REQUIRE(res.basis.rows() == 1);
    CHECK(std::llabs(res.basis(0, 0)) == 4);
  }

  TEST_CASE("scalar kernel is trivial for a faithful purely monomial action") {
    const int n = 5;
    const Group g = family_group(8, n);
    const auto a = table_assignment(g, "s: z0 -> z1 -> z0, z2 -> z3, z3 -> z2; t: z0 -> z2 -> z0, z1 -> z3 -> z1",
                                    {"z0", "z1", "z2", "z3"}, n, 4);
    CHECK(matrix_part_injective(a) == (action_kernel(a) == scalar_kernel(a)));
  }

  TEST_CASE("fibered variable elimination drops u0 of the G8 action") {
    const int n = 5;
    const Group g = family_group(8, n);
    const auto a = table_assignment(g,
                                    "s: u0 -> u1*u0, u1 -> zeta/u1, u2 -> zeta/u2, u3 -> zeta^-2*u1*u2*u3; "
                                    "t: u0 -> u1*u3*u0, u1 <-> u2, u3 -> i/(u1*u2*u3)",
                                    {"u0", "u1", "u2", "u3"}, n, 4);
    const auto step = eliminate_fibered_variable(a, 0);
    CHECK(step.output.dim() == 3);
    CHECK(step.output.variable_names == std::vector<std::string>{"u1", "u2", "u3"});
    CHECK_THROWS_AS(eliminate_fibered_variable(a, 1), Error);
  }

  TEST_CASE("reduction chain reaches an injective matrix part and keeps the rank") {
    for (int n : {5, 6, 7}) {
      const Group g = family_group(13, n);
      const auto a = table_assignment(g, kG13UTable, {"u1", "u2", "u3", "u4"}, n, modulus_for(n));
      const auto chain = reduce_to_injective(a);
      CHECK(chain.steps.size() <= 3);
      CHECK(matrix_part_injective(chain.result));
      CHECK(chain.result.dim() == 4);
    }
  }

  TEST_CASE("change of lattice basis round-trips through the inverse basis") {
    std::mt19937 rng(5);
    const int n = 5;
    const Group g = family_group(13, n);
    const auto a = table_assignment(g, kG13UTable, {"u1", "u2", "u3", "u4"}, n, 4);
    for (int k = 0; k < 20; ++k) {
      const IntMatrix P = random_unimodular(rng, 4);
      const auto b = change_lattice_basis(change_lattice_basis(a, P), unimodular_inverse(P));
      for (std::size_t j = 0; j < a.images.size(); ++j) CHECK(b.images[j] == a.images[j]);
    }
  }
}
