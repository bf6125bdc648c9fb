#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <vector>

namespace noether {

using IntMatrix = Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic>;
using IntVector = Eigen::Matrix<long long, Eigen::Dynamic, 1>;

struct HermiteResult {
  IntMatrix H;
  IntMatrix U;
};

struct SmithResult {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;
};

/// Row-style Hermite normal form: U unimodular with U*M = H, H in upper
/// echelon form with positive pivots and entries above each pivot in [0, pivot).
HermiteResult hermite_normal_form(const IntMatrix& M);

/// U*M*V = D with D diagonal, nonnegative, d_1 | d_2 | ...
SmithResult smith_normal_form(const IntMatrix& M);

/// Exact determinant by fraction-free (Bareiss) elimination.
long long determinant(const IntMatrix& M);

IntMatrix adjugate(const IntMatrix& M);

bool is_unimodular(const IntMatrix& M);

/// Inverse of a unimodular matrix; throws NonIntegralConjugate otherwise.
IntMatrix unimodular_inverse(const IntMatrix& M);

/// B^{-1} * A * B computed exactly; throws NonIntegralConjugate when the
/// result is not integral.
IntMatrix integral_conjugate(const IntMatrix& A, const IntMatrix& B);

/// Nonnegative representative of a mod m.
inline long long mod_floor(long long a, long long m) {
  long long r = a % m;
  return r < 0 ? r + m : r;
}

long long gcd_ll(long long a, long long b);
long long lcm_ll(long long a, long long b);

/// Generic integer matrix power by repeated squaring; works for any Eigen
/// square integer matrix expression.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic> matrix_power(
    const Eigen::MatrixBase<Derived>& A, int e) {
  using M = Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  M result = M::Identity(A.rows(), A.cols());
  M base = A;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

}  // namespace noether
