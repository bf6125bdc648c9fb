#include <doctest.h>

#include <chrono>
#include <numeric>

#include "noether/error.hpp"
#include "noether/group.hpp"
#include "noether/profile.hpp"
#include "oracles.hpp"

using namespace noether;

namespace {

using oracle::element_order;

std::vector<std::vector<std::uint32_t>> cyclic_table(int n) {
  std::vector<std::vector<std::uint32_t>> t(n, std::vector<std::uint32_t>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = static_cast<std::uint32_t>((a + b) % n);
  return t;
}

/// C3 x| C8 with the generator of C8 inverting C3; elements (x, p) -> 8x + p.
std::vector<std::vector<std::uint32_t>> c3_c8_table() {
  std::vector<std::vector<std::uint32_t>> t(24, std::vector<std::uint32_t>(24));
  for (int a = 0; a < 24; ++a)
    for (int b = 0; b < 24; ++b) {
      const int x1 = a / 8, p1 = a % 8, x2 = b / 8, p2 = b % 8;
      const int x = (x1 + (p1 % 2 ? -x2 : x2) + 6) % 3;
      t[a][b] = static_cast<std::uint32_t>(8 * x + (p1 + p2) % 8);
    }
  return t;
}

}  // namespace

TEST_SUITE("groups") {
  TEST_CASE("catalog soundness at minimal n and minimal n + 1") {
    const auto start = std::chrono::steady_clock::now();
    int groups = 0;
    for (int id = 1; id <= 26; ++id) {
      const int lo = family_min_n(id);
      for (int n = lo; n <= std::min(lo + 1, 7); ++n) {
        if (!family_accepts(id, n)) continue;
        CAPTURE(id);
        CAPTURE(n);
        const Group g = family_group(id, n);
        ++groups;
        CHECK(g.order() == (std::size_t{1} << n));
        long long exponent = 1;
        int max_order = 1;
        for (std::uint32_t a = 0; a < g.order(); ++a) {
          const int o = element_order(g, a);
          exponent = std::lcm(exponent, static_cast<long long>(o));
          max_order = std::max(max_order, o);
        }
        if (n >= 5) CHECK(exponent == (1LL << (n - 2)));
        // A cyclic subgroup of index 4 exists and none of index 2.
        CHECK(max_order == (1 << (n - 2)));
        const auto p = structural_profile(g);
        CHECK(p.exponent == exponent);
        CHECK(p.max_cyclic_index == 4);
      }
    }
    CHECK(groups >= 40);
    CHECK(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() < 120.0);
  }

  TEST_CASE("family relations") {
    const Group g1 = family_group(1, 5);
    CHECK(g1.order() == 32);
    const auto s = g1.generators()[0], t = g1.generators()[1];
    CHECK(g1.element_order(s) == 8);
    CHECK(g1.element_order(t) == 4);
    CHECK(g1.mul(g1.inv(t), g1.mul(s, t)) == g1.pow(s, 5));
    CHECK(g1.mul(g1.identity(), s) == s);

    const Group g8 = family_group(8, 5);
    const auto s8 = g8.generators()[0], t8 = g8.generators()[1];
    CHECK(g8.pow(t8, 4) == g8.pow(s8, 4));
    CHECK(element_order(g8, t8) == 8);
    CHECK(g8.element_order(t8) == 8);

    const Group g26 = family_group(26, 5);
    CHECK(g26.order() == 32);
    const auto s26 = g26.generators()[0], l26 = g26.generators()[2];
    CHECK(g26.pow(s26, 4) == g26.pow(l26, 2));
  }

  TEST_CASE("family ranges") {
    for (int id = 1; id <= 5; ++id) CHECK(family_accepts(id, 4));
    for (int id = 6; id <= 26; ++id) CHECK_FALSE(family_accepts(id, 4));
    for (int id = 19; id <= 25; ++id) {
      CHECK_FALSE(family_accepts(id, 5));
      CHECK(family_accepts(id, 6));
    }
    CHECK(family_accepts(26, 5));
    CHECK_FALSE(family_accepts(26, 6));
    CHECK_THROWS_AS(family_group(27, 5), Error);
    CHECK_THROWS_AS(family_group(6, 4), Error);
  }

  TEST_CASE("words evaluate through the presentation") {
    const Group g = family_group(8, 5);
    const Word w = parse_word("t^4", {"s", "t", "l"}, 5);
    CHECK(g.evaluate(w) == g.pow(g.generators()[0], 4));
  }

  TEST_CASE("Cayley tables") {
    const Group trivial = cayley_group({{0}});
    CHECK(trivial.order() == 1);
    const Group c4 = cayley_group(cyclic_table(4));
    const auto p = structural_profile(c4);
    CHECK(p.exponent == 4);
    CHECK(p.center_order == 4);
    auto broken = cyclic_table(4);
    broken[1][1] = 3;
    CHECK_THROWS_AS(cayley_group(broken), Error);
  }

  TEST_CASE("C3 x| C8 with inversion: detected, with even center") {
    const Group g = cayley_group(c3_c8_table());
    const auto p = structural_profile(g);
    CHECK(p.is_cm_rtimes_c8);
    CHECK(p.cm_m == 3);
    // Brute-force center.
    std::size_t central = 0;
    for (std::uint32_t a = 0; a < g.order(); ++a) {
      bool ok = true;
      for (std::uint32_t b = 0; b < g.order() && ok; ++b) ok = g.mul(a, b) == g.mul(b, a);
      central += ok;
    }
    CHECK(central == p.center_order);
    CHECK(central % 2 == 0);
  }

  TEST_CASE("permutation groups") {
    const Group s3 = permutation_group(3, {{1, 0, 2}, {1, 2, 0}});
    CHECK(s3.order() == 6);
    CHECK_FALSE(s3.is_abelian());
    CHECK_THROWS_AS(permutation_group(3, {{0, 0, 1}}), Error);
  }
}
