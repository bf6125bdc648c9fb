#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "noether/int_matrix.hpp"
#include "noether/monomial.hpp"

namespace noether {

/// Elements acting by a scalar automorphism (identity matrix). The result is
/// sorted and checked to be a normal subgroup.
std::vector<std::uint32_t> scalar_kernel(const ActionAssignment& a);

/// Elements acting as the identity automorphism.
std::vector<std::uint32_t> action_kernel(const ActionAssignment& a);

/// Every element of the scalar kernel acts trivially, i.e. G/H -> GL_d(Z) is injective.
bool matrix_part_injective(const ActionAssignment& a);

/// Column basis in Hermite form: the columns span the same lattice and the
/// result depends only on that lattice.
IntMatrix canonical_lattice_basis(const IntMatrix& B);
bool same_lattice(const IntMatrix& B1, const IntMatrix& B2);

/// Action on z_j = prod_i x_i^{B(i,j)} for a G-stable full-rank lattice with
/// column basis B: A' = B^{-1} A B and c' = B^T c mod m.
ActionAssignment change_lattice_basis(const ActionAssignment& a, const IntMatrix& B,
                                      std::vector<std::string> names = {});

struct SublatticeResult {
  IntMatrix basis;
  ActionAssignment quotient;
};

/// Lattice of exponent vectors of monomials fixed by the scalar subgroup H.
SublatticeResult invariant_sublattice(const ActionAssignment& a,
                                      const std::vector<std::uint32_t>& H);

enum class StepKind { ScalarKernel, FiberedVariableDrop, LinearSplit };

std::string to_string(StepKind k);

struct ReductionStep {
  StepKind kind = StepKind::ScalarKernel;
  ActionAssignment input;
  ActionAssignment output;
  std::string justification;
  IntMatrix basis;
  std::vector<int> dropped;
};

struct ReductionChain {
  std::vector<ReductionStep> steps;
  ActionAssignment result;
};

/// Repeats scalar_kernel + invariant_sublattice until the matrix part is injective.
ReductionChain reduce_to_injective(const ActionAssignment& a);

/// Drops a variable x with g(x) = (monomial in the others) * x for every
/// generator, when no other image involves x. Throws ShapeViolation otherwise.
ReductionStep eliminate_fibered_variable(const ActionAssignment& a, int var);

/// Names "x1^2*x3^-1" for the columns of a lattice basis.
std::vector<std::string> monomial_names(const IntMatrix& B, const std::vector<std::string>& names);

}  // namespace noether
