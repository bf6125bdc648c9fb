#include "noether/int_matrix.hpp"

#include <cstdlib>
#include <numeric>
#include <utility>

#include "noether/error.hpp"

namespace noether {

long long gcd_ll(long long a, long long b) { return std::gcd(a, b); }

long long lcm_ll(long long a, long long b) {
  if (a == 0 || b == 0) return 0;
  return std::abs(a / std::gcd(a, b) * b);
}

namespace {

struct Bezout {
  long long g, x, y;
};

Bezout extended_gcd(long long a, long long b) {
  // Prefer the pure elimination (x, y) = (sign a, 0) when a | b, so that a pivot
  // which already divides an entry is never swapped away.
  if (a != 0 && b % a == 0) return a < 0 ? Bezout{-a, -1, 0} : Bezout{a, 1, 0};
  long long old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    long long q = old_r / r;
    std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
    std::tie(old_s, s) = std::make_pair(s, old_s - q * s);
    std::tie(old_t, t) = std::make_pair(t, old_t - q * t);
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

long long floor_div(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// Replace rows (p, q) of X by [[x, y], [-b/g, a/g]] * rows, where a, b are the
// pivot-column entries and x*a + y*b = g. The transform has determinant 1.
void combine_rows(IntMatrix& X, IntMatrix& U, Eigen::Index p, Eigen::Index q, long long a,
                  long long b) {
  const Bezout bz = extended_gcd(a, b);
  const long long u = -b / bz.g, v = a / bz.g;
  for (IntMatrix* mat : {&X, &U}) {
    for (Eigen::Index c = 0; c < mat->cols(); ++c) {
      const long long rp = (*mat)(p, c), rq = (*mat)(q, c);
      (*mat)(p, c) = bz.x * rp + bz.y * rq;
      (*mat)(q, c) = u * rp + v * rq;
    }
  }
}

void combine_cols(IntMatrix& X, IntMatrix& V, Eigen::Index p, Eigen::Index q, long long a,
                  long long b) {
  const Bezout bz = extended_gcd(a, b);
  const long long u = -b / bz.g, v = a / bz.g;
  for (IntMatrix* mat : {&X, &V}) {
    for (Eigen::Index r = 0; r < mat->rows(); ++r) {
      const long long cp = (*mat)(r, p), cq = (*mat)(r, q);
      (*mat)(r, p) = bz.x * cp + bz.y * cq;
      (*mat)(r, q) = u * cp + v * cq;
    }
  }
}

}  // namespace

HermiteResult hermite_normal_form(const IntMatrix& M) {
  IntMatrix H = M;
  IntMatrix U = IntMatrix::Identity(M.rows(), M.rows());
  Eigen::Index r = 0;
  for (Eigen::Index j = 0; j < H.cols() && r < H.rows(); ++j) {
    for (Eigen::Index i = r + 1; i < H.rows(); ++i) {
      if (H(i, j) != 0) combine_rows(H, U, r, i, H(r, j), H(i, j));
    }
    if (H(r, j) == 0) continue;
    if (H(r, j) < 0) {
      H.row(r) *= -1;
      U.row(r) *= -1;
    }
    for (Eigen::Index k = 0; k < r; ++k) {
      const long long q = floor_div(H(k, j), H(r, j));
      if (q != 0) {
        H.row(k) -= q * H.row(r);
        U.row(k) -= q * U.row(r);
      }
    }
    ++r;
  }
  return {H, U};
}

SmithResult smith_normal_form(const IntMatrix& M) {
  IntMatrix D = M;
  IntMatrix U = IntMatrix::Identity(M.rows(), M.rows());
  IntMatrix V = IntMatrix::Identity(M.cols(), M.cols());
  const Eigen::Index rows = D.rows(), cols = D.cols();
  for (Eigen::Index t = 0; t < std::min(rows, cols); ++t) {
    // Pick the smallest nonzero entry of the trailing block as pivot.
    Eigen::Index pr = -1, pc = -1;
    for (Eigen::Index i = t; i < rows; ++i)
      for (Eigen::Index j = t; j < cols; ++j)
        if (D(i, j) != 0 && (pr < 0 || std::llabs(D(i, j)) < std::llabs(D(pr, pc)))) {
          pr = i;
          pc = j;
        }
    if (pr < 0) break;
    D.row(t).swap(D.row(pr));
    U.row(t).swap(U.row(pr));
    D.col(t).swap(D.col(pc));
    V.col(t).swap(V.col(pc));

    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (Eigen::Index i = t + 1; i < rows; ++i)
        if (D(i, t) != 0) combine_rows(D, U, t, i, D(t, t), D(i, t));
      for (Eigen::Index j = t + 1; j < cols; ++j)
        if (D(t, j) != 0) combine_cols(D, V, t, j, D(t, t), D(t, j));
      for (Eigen::Index i = t + 1; i < rows && !dirty; ++i)
        if (D(i, t) != 0) dirty = true;
      if (dirty) continue;
      // Enforce divisibility of the trailing block by the pivot.
      for (Eigen::Index i = t + 1; i < rows && !dirty; ++i)
        for (Eigen::Index j = t + 1; j < cols && !dirty; ++j)
          if (D(i, j) % D(t, t) != 0) {
            D.row(t) += D.row(i);
            U.row(t) += U.row(i);
            dirty = true;
          }
    }
    if (D(t, t) < 0) {
      D.row(t) *= -1;
      U.row(t) *= -1;
    }
  }
  return {U, D, V};
}

long long determinant(const IntMatrix& M) {
  if (M.rows() != M.cols()) throw Error(ErrorCode::DimMismatch, "determinant of non-square matrix");
  const Eigen::Index n = M.rows();
  if (n == 0) return 1;
  std::vector<std::vector<__int128>> a(static_cast<std::size_t>(n),
                                       std::vector<__int128>(static_cast<std::size_t>(n)));
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) a[i][j] = M(i, j);
  int sign = 1;
  __int128 prev = 1;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      Eigen::Index s = k + 1;
      while (s < n && a[s][k] == 0) ++s;
      if (s == n) return 0;
      std::swap(a[k], a[s]);
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    }
    prev = a[k][k];
  }
  return static_cast<long long>(sign * a[n - 1][n - 1]);
}

IntMatrix adjugate(const IntMatrix& M) {
  const Eigen::Index n = M.rows();
  if (n != M.cols()) throw Error(ErrorCode::DimMismatch, "adjugate of non-square matrix");
  IntMatrix adj(n, n);
  if (n == 1) {
    adj(0, 0) = 1;
    return adj;
  }
  IntMatrix minor(n - 1, n - 1);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      for (Eigen::Index r = 0, mr = 0; r < n; ++r) {
        if (r == i) continue;
        for (Eigen::Index c = 0, mc = 0; c < n; ++c) {
          if (c == j) continue;
          minor(mr, mc++) = M(r, c);
        }
        ++mr;
      }
      adj(j, i) = ((i + j) % 2 == 0 ? 1 : -1) * determinant(minor);
    }
  }
  return adj;
}

bool is_unimodular(const IntMatrix& M) {
  return M.rows() == M.cols() && std::llabs(determinant(M)) == 1;
}

IntMatrix unimodular_inverse(const IntMatrix& M) {
  const long long d = determinant(M);
  if (d != 1 && d != -1) throw Error(ErrorCode::NonIntegralConjugate, "matrix is not unimodular");
  return adjugate(M) * d;
}

IntMatrix integral_conjugate(const IntMatrix& A, const IntMatrix& B) {
  const long long d = determinant(B);
  if (d == 0) throw Error(ErrorCode::NonIntegralConjugate, "singular lattice basis");
  const IntMatrix num = adjugate(B) * A * B;
  IntMatrix out(num.rows(), num.cols());
  for (Eigen::Index i = 0; i < num.rows(); ++i)
    for (Eigen::Index j = 0; j < num.cols(); ++j) {
      if (num(i, j) % d != 0)
        throw Error(ErrorCode::NonIntegralConjugate, "conjugated matrix is not integral");
      out(i, j) = num(i, j) / d;
    }
  return out;
}

}  // namespace noether
