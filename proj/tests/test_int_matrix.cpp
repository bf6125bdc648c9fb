#include <doctest.h>

#include <chrono>
#include <numeric>
#include <random>

#include "noether/error.hpp"
#include "noether/int_matrix.hpp"
#include "oracles.hpp"

using namespace noether;

namespace {

using oracle::minor_gcd;
using oracle::random_matrix;
long long det_oracle(const IntMatrix& M) { return oracle::determinant(M); }

/// Every row of A is an integral combination of the rows of B (B square, invertible).
bool rows_in_lattice(const IntMatrix& A, const IntMatrix& B) {
  const long long d = det_oracle(B);
  if (d == 0) return false;
  const IntMatrix adj = adjugate(B);
  // x B = a  <=>  x = a adj(B) / det(B)
  const IntMatrix X = A * adj;
  for (Eigen::Index i = 0; i < X.size(); ++i)
    if (X.data()[i] % d != 0) return false;
  return true;
}

}  // namespace

TEST_SUITE("int_matrix") {
  TEST_CASE("Smith form fixtures") {
    CHECK(smith_normal_form(IntMatrix::Identity(3, 3)).D == IntMatrix::Identity(3, 3));
    IntMatrix M(2, 2);
    M << 2, 0, 0, 3;
    IntMatrix D(2, 2);
    D << 1, 0, 0, 6;
    CHECK(smith_normal_form(M).D == D);
    CHECK(smith_normal_form(IntMatrix::Zero(3, 2)).D == IntMatrix::Zero(3, 2));
  }

  TEST_CASE("Hermite form fixtures") {
    CHECK(hermite_normal_form(IntMatrix::Identity(3, 3)).H == IntMatrix::Identity(3, 3));
    IntMatrix D(2, 2);
    D << 2, 0, 0, 3;
    CHECK(hermite_normal_form(D).H == D);
    IntMatrix M(2, 2);
    M << 2, 4, 0, 2;
    IntMatrix H(2, 2);
    H << 2, 0, 0, 2;
    const auto h = hermite_normal_form(M);
    CHECK(h.H == H);
    CHECK(h.U * M == h.H);
  }

  TEST_CASE("500 random 3x3 matrices: Smith form against the gcd-of-minors oracle") {
    const auto start = std::chrono::steady_clock::now();
    std::mt19937 rng(500);
    for (int trial = 0; trial < 500; ++trial) {
      const IntMatrix M = random_matrix(rng, 3, 3, -5, 5);
      const auto s = smith_normal_form(M);
      REQUIRE(s.U * M * s.V == s.D);
      CHECK(std::llabs(det_oracle(s.U)) == 1);
      CHECK(std::llabs(det_oracle(s.V)) == 1);
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          if (i != j) CHECK(s.D(i, j) == 0);
      long long prefix = 1;
      for (int k = 1; k <= 3; ++k) {
        const long long dk = s.D(k - 1, k - 1);
        CHECK(dk >= 0);
        if (k < 3 && dk != 0) CHECK(s.D(k, k) % dk == 0);
        if (k < 3 && dk == 0) CHECK(s.D(k, k) == 0);
        prefix *= dk;
        CHECK(prefix == minor_gcd(M, k));
      }
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    CHECK(secs < 30.0);
  }

  TEST_CASE("random Hermite forms span the same row lattice and are canonical") {
    std::mt19937 rng(41);
    int checked = 0;
    while (checked < 200) {
      const IntMatrix M = random_matrix(rng, 3, 3, -6, 6);
      if (det_oracle(M) == 0) continue;
      ++checked;
      const auto h = hermite_normal_form(M);
      CHECK(h.U * M == h.H);
      CHECK(rows_in_lattice(h.H, M));
      CHECK(rows_in_lattice(M, h.H));
      for (int i = 0; i < 3; ++i) {
        CHECK(h.H(i, i) > 0);
        for (int j = 0; j < i; ++j) CHECK(h.H(i, j) == 0);
        for (int r = 0; r < i; ++r) {
          CHECK(h.H(r, i) >= 0);
          CHECK(h.H(r, i) < h.H(i, i));
        }
      }
      // A unimodular change of rows does not move the canonical form.
      IntMatrix E = IntMatrix::Identity(3, 3);
      E(2, 0) = 3;
      E(0, 1) = -2;
      CHECK(hermite_normal_form(E * M).H == h.H);
    }
  }

  TEST_CASE("determinant, adjugate and unimodular inverse") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 300; ++trial) {
      const IntMatrix M = random_matrix(rng, 4, 4, -4, 4);
      CHECK(determinant(M) == det_oracle(M));
      CHECK(M * adjugate(M) == det_oracle(M) * IntMatrix::Identity(4, 4));
      CHECK(is_unimodular(M) == (std::llabs(det_oracle(M)) == 1));
      if (is_unimodular(M)) CHECK(M * unimodular_inverse(M) == IntMatrix::Identity(4, 4));
    }
    IntMatrix twice = 2 * IntMatrix::Identity(2, 2);
    CHECK_THROWS_AS(unimodular_inverse(twice), Error);
  }

  TEST_CASE("integral conjugation") {
    IntMatrix A(2, 2), B(2, 2);
    A << 0, -1, 1, 0;
    B << 1, 1, 0, 1;
    const IntMatrix C = integral_conjugate(A, B);
    CHECK(B * C == A * B);
    IntMatrix S(2, 2);
    S << 2, 0, 0, 1;
    CHECK_THROWS_AS(integral_conjugate(A, S), Error);
  }
}
