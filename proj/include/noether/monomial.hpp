#pragma once

#include <optional>
#include <string>
#include <vector>

#include "noether/cyclotomic.hpp"
#include "noether/group.hpp"
#include "noether/int_matrix.hpp"
#include "noether/laurent.hpp"

namespace noether {

/// x_j -> zeta_m^{c_j} * prod_i x_i^{A(i,j)}.
struct MonomialAutomorphism {
  IntMatrix A;
  IntVector c;
  long long m = 1;

  MonomialAutomorphism() = default;
  MonomialAutomorphism(IntMatrix matrix, IntVector coeffs, long long modulus);

  int dim() const { return static_cast<int>(A.rows()); }
  static MonomialAutomorphism identity(int d, long long m = 1);
  /// Same automorphism written over a multiple of the modulus.
  MonomialAutomorphism lifted(long long new_m) const;
  bool is_identity() const;
  bool is_scalar() const { return A.isIdentity(); }
  bool purely_monomial() const { return c.isZero(); }
  RootExponent coefficient(int j) const { return {m, c(j)}; }

  std::string to_string(const std::vector<std::string>& names = {}) const;
};

bool operator==(const MonomialAutomorphism& a, const MonomialAutomorphism& b);
inline bool operator!=(const MonomialAutomorphism& a, const MonomialAutomorphism& b) {
  return !(a == b);
}
/// Total order used to store automorphisms in sorted containers.
bool operator<(const MonomialAutomorphism& a, const MonomialAutomorphism& b);

/// (t o s)(x) = t(s(x)). Requires equal dimension and modulus.
MonomialAutomorphism compose(const MonomialAutomorphism& t, const MonomialAutomorphism& s);
MonomialAutomorphism inverse(const MonomialAutomorphism& a);
MonomialAutomorphism power(const MonomialAutomorphism& a, long long k);
/// Order of the automorphism (guarded by `limit`).
int automorphism_order(const MonomialAutomorphism& a, int limit = 1 << 13);

/// Images of the variables as fractions (m must be a power of two unless all
/// coefficients are trivial).
std::vector<LaurentFraction> variable_images(const MonomialAutomorphism& a);
LaurentFraction apply(const MonomialAutomorphism& a, const LaurentFraction& f);

/// Reads a monomial automorphism back from fraction images, when each image is a
/// unit monomial whose coefficient is a power of zeta_m.
std::optional<MonomialAutomorphism> from_images(const std::vector<LaurentFraction>& images,
                                                long long m);

/// A group together with the image of each generator.
struct ActionAssignment {
  Group group;
  std::vector<MonomialAutomorphism> images;
  std::vector<std::string> variable_names;

  int dim() const { return images.empty() ? 0 : images.front().dim(); }
  long long modulus() const { return images.empty() ? 1 : images.front().m; }
};

/// Brings all generator images to a common modulus (lcm).
ActionAssignment common_modulus(ActionAssignment a);

/// Automorphism of every group element, indexed by element index.
/// Throws InvalidInput if the generator images are not consistent with the table.
std::vector<MonomialAutomorphism> element_images(const ActionAssignment& a);
MonomialAutomorphism word_image(const ActionAssignment& a, const Word& w);

struct VerificationReport {
  struct Entry {
    std::string relation;
    bool pass = false;
    std::string detail;
  };
  std::vector<Entry> entries;
  bool ok() const;
};

VerificationReport verify_homomorphism(const ActionAssignment& a);

/// Closure of a set of automorphisms (identity first, BFS order).
std::vector<MonomialAutomorphism> automorphism_closure(const std::vector<MonomialAutomorphism>& gens,
                                                       std::size_t limit = 1 << 13);

/// Linear monomial matrix: x_j -> coeff[j] * x_{target[j]}.
struct MonomialMatrix {
  std::vector<int> target;
  std::vector<RootExponent> coeff;

  int dim() const { return static_cast<int>(target.size()); }
  static MonomialMatrix identity(int d);
};

bool operator==(const MonomialMatrix& a, const MonomialMatrix& b);
bool operator<(const MonomialMatrix& a, const MonomialMatrix& b);
/// (a o b)(x) = a(b(x)).
MonomialMatrix compose(const MonomialMatrix& a, const MonomialMatrix& b);
/// Dense description: entries[i][j] is the exponent of zeta_M at row i, column j,
/// or nullopt for a zero entry. Throws NotMonomial unless each column has one entry.
MonomialMatrix monomial_from_dense(const std::vector<std::vector<std::optional<long long>>>& entries,
                                   long long M);
std::vector<MonomialMatrix> matrix_closure(const std::vector<MonomialMatrix>& gens,
                                           std::size_t limit = 1 << 13);

struct CoefficientNormalization {
  std::vector<RootExponent> b;
  long long m = 1;
  /// Generators rewritten on y_i = b_i x_i; coefficients lie in <zeta_m>.
  std::vector<MonomialMatrix> rescaled;
};

/// Rescales variables so every coefficient of the generated group lies in <zeta_m>.
/// With `require_closed` the input must already be the whole group (NotAGroup otherwise).
CoefficientNormalization normalize_coefficients(const std::vector<MonomialMatrix>& matrices,
                                                bool require_closed = false);

}  // namespace noether
