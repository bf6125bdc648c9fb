#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "noether/cyclotomic.hpp"
#include "noether/group.hpp"
#include "noether/monomial.hpp"

namespace noether {

/// Coordinates of a vector of the regular representation, indexed by element.
using RegVector = std::vector<CyclotomicInt>;

/// The left regular representation h * x(g) = x(hg) over Z[zeta_M].
class RegularModule {
 public:
  RegularModule(Group group, long long conductor);

  const Group& group() const { return group_; }
  long long conductor() const { return conductor_; }

  RegVector zero() const;
  RegVector basis(std::uint32_t g) const;
  RegVector act(std::uint32_t h, const RegVector& v) const;
  RegVector scale(const RootExponent& r, const RegVector& v) const;
  CyclotomicInt root(const RootExponent& r) const;

 private:
  Group group_;
  long long conductor_;
};

bool is_zero(const RegVector& v);

/// Extends a character given on generators to the subgroup they generate.
/// Throws NotAnEigenvector when the values are not compatible with the group law.
std::map<std::uint32_t, RootExponent> extend_character(const Group& g,
                                                       const std::vector<std::uint32_t>& gens,
                                                       const std::vector<RootExponent>& values);

/// X = sum over the generated subgroup of chi(h)^{-1} x(h); h * X = chi(h) X.
RegVector eigenvector(const RegularModule& module, const std::vector<std::uint32_t>& subgroup_gens,
                      const std::vector<RootExponent>& character);

/// Throws NotAnEigenvector unless v is nonzero and gens[i] * v = values[i] v.
void require_eigenvector(const RegularModule& module, const RegVector& v,
                         const std::vector<std::uint32_t>& gens,
                         const std::vector<RootExponent>& values);

struct InducedSubspace {
  std::vector<RegVector> vectors;
  std::vector<std::string> names;
  /// One monomial matrix per group generator: g * v_j = coeff_j * v_{target_j}.
  std::vector<MonomialMatrix> generator_matrices;

  int dim() const { return static_cast<int>(vectors.size()); }
};

/// Vectors t * seed for each seed and each transversal element, in order.
/// Throws NotClosed if some generator image is not a root-of-unity multiple
/// of a listed vector.
InducedSubspace induce_variables(const RegularModule& module, const std::vector<RegVector>& seeds,
                                 const std::vector<std::vector<std::uint32_t>>& transversals,
                                 std::vector<std::string> names = {});

/// Generator matrices of the span of `vectors`, which must be permuted up to
/// roots of unity by the group.
std::vector<MonomialMatrix> monomial_generator_matrices(const RegularModule& module,
                                                        const std::vector<RegVector>& vectors);

/// Induced representation Ind_H^G(chi) on the basis t_i * X for coset
/// representatives t_i of H; works for any root-of-unity values of chi.
std::vector<MonomialMatrix> induce_character(const Group& g,
                                             const std::vector<std::uint32_t>& subgroup_gens,
                                             const std::vector<RootExponent>& character,
                                             const std::vector<std::uint32_t>& transversal);

/// True iff the generated matrix group has order |G|.
bool check_faithful(const Group& g, const std::vector<MonomialMatrix>& generator_matrices);
bool check_faithful(const Group& g, const InducedSubspace& subspace);

/// The linear monomial action viewed multiplicatively: x_j -> c_j x_{target_j}.
ActionAssignment to_assignment(const Group& g, const std::vector<MonomialMatrix>& matrices,
                               std::vector<std::string> names = {});

}  // namespace noether
