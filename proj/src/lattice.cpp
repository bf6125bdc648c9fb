#include "noether/lattice.hpp"

#include <algorithm>
#include <sstream>

#include "noether/error.hpp"

namespace noether {

std::vector<std::uint32_t> scalar_kernel(const ActionAssignment& a) {
  const auto imgs = element_images(common_modulus(a));
  std::vector<std::uint32_t> H;
  for (std::uint32_t g = 0; g < imgs.size(); ++g)
    if (imgs[g].is_scalar()) H.push_back(g);
  if (!a.group.is_normal(H))
    throw Error(ErrorCode::InvalidInput, "scalar kernel is not normal; the assignment is inconsistent");
  return H;
}

std::vector<std::uint32_t> action_kernel(const ActionAssignment& a) {
  const auto imgs = element_images(common_modulus(a));
  std::vector<std::uint32_t> K;
  for (std::uint32_t g = 0; g < imgs.size(); ++g)
    if (imgs[g].is_identity()) K.push_back(g);
  return K;
}

bool matrix_part_injective(const ActionAssignment& a) {
  return scalar_kernel(a).size() == action_kernel(a).size();
}

IntMatrix canonical_lattice_basis(const IntMatrix& B) {
  const IntMatrix H = hermite_normal_form(B.transpose()).H;
  Eigen::Index rank = 0;
  while (rank < H.rows() && !H.row(rank).isZero()) ++rank;
  return H.topRows(rank).transpose();
}

bool same_lattice(const IntMatrix& B1, const IntMatrix& B2) {
  return canonical_lattice_basis(B1) == canonical_lattice_basis(B2);
}

std::vector<std::string> monomial_names(const IntMatrix& B, const std::vector<std::string>& names) {
  std::vector<std::string> out;
  for (Eigen::Index j = 0; j < B.cols(); ++j) {
    std::ostringstream os;
    bool any = false;
    for (Eigen::Index i = 0; i < B.rows(); ++i) {
      if (B(i, j) == 0) continue;
      if (any) os << "*";
      os << (static_cast<std::size_t>(i) < names.size() ? names[static_cast<std::size_t>(i)]
                                                        : "x" + std::to_string(i));
      if (B(i, j) != 1) os << "^" << B(i, j);
      any = true;
    }
    out.push_back(any ? os.str() : "1");
  }
  return out;
}

ActionAssignment change_lattice_basis(const ActionAssignment& a_in, const IntMatrix& B,
                                      std::vector<std::string> names) {
  const ActionAssignment a = common_modulus(a_in);
  const int d = a.dim();
  if (B.rows() != d || B.cols() != d) throw Error(ErrorCode::DimMismatch, "lattice basis must be square");
  if (determinant(B) == 0) throw Error(ErrorCode::InvalidInput, "lattice basis is not of full rank");
  if (names.empty()) names = monomial_names(B, a.variable_names);
  ActionAssignment out{a.group, {}, std::move(names)};
  for (const auto& img : a.images) {
    const IntMatrix A2 = integral_conjugate(img.A, B);
    const IntVector c2 = B.transpose() * img.c;
    out.images.emplace_back(A2, c2, img.m);
  }
  return out;
}

SublatticeResult invariant_sublattice(const ActionAssignment& a_in,
                                      const std::vector<std::uint32_t>& H) {
  const ActionAssignment a = common_modulus(a_in);
  const int d = a.dim();
  const long long m = a.modulus();
  const auto imgs = element_images(a);
  IntMatrix C = IntMatrix::Zero(static_cast<Eigen::Index>(std::max<std::size_t>(H.size(), 1)), d);
  for (std::size_t r = 0; r < H.size(); ++r) {
    const auto& img = imgs.at(H[r]);
    if (!img.is_scalar())
      throw Error(ErrorCode::NotScalar, a.group.element_name(H[r]) + " does not act by scalars");
    C.row(static_cast<Eigen::Index>(r)) = img.c.transpose();
  }
  // Solve C v = 0 mod m: with U C V = D, v = V w and d_i w_i = 0 mod m.
  const SmithResult snf = smith_normal_form(C);
  IntMatrix basis = snf.V;
  for (Eigen::Index i = 0; i < d; ++i) {
    const long long di = i < snf.D.rows() ? snf.D(i, i) : 0;
    if (di != 0) basis.col(i) *= m / gcd_ll(di, m);
  }
  basis = canonical_lattice_basis(basis);
  if (basis.cols() != d) throw Error(ErrorCode::InvalidInput, "invariant lattice lost rank");
  return {basis, change_lattice_basis(a, basis)};
}

std::string to_string(StepKind k) {
  switch (k) {
    case StepKind::ScalarKernel: return "ScalarKernel";
    case StepKind::FiberedVariableDrop: return "FiberedVariableDrop";
    case StepKind::LinearSplit: return "LinearSplit";
  }
  return "?";
}

ReductionChain reduce_to_injective(const ActionAssignment& a) {
  ReductionChain chain;
  chain.result = common_modulus(a);
  for (int guard = 0; guard < 64; ++guard) {
    const auto H = scalar_kernel(chain.result);
    if (H.size() == action_kernel(chain.result).size()) return chain;
    ReductionStep step;
    step.kind = StepKind::ScalarKernel;
    step.input = chain.result;
    auto res = invariant_sublattice(chain.result, H);
    step.basis = res.basis;
    step.output = res.quotient;
    step.justification = "invariants of the scalar subgroup of order " + std::to_string(H.size()) +
                         " are again a monomial field (lattice of index " +
                         std::to_string(std::llabs(determinant(res.basis))) + ")";
    chain.result = res.quotient;
    chain.steps.push_back(std::move(step));
  }
  throw Error(ErrorCode::InvalidInput, "scalar-kernel reduction did not stabilise");
}

ReductionStep eliminate_fibered_variable(const ActionAssignment& a, int var) {
  const int d = a.dim();
  if (var < 0 || var >= d) throw Error(ErrorCode::InvalidParameter, "variable index out of range");
  for (std::size_t g = 0; g < a.images.size(); ++g) {
    const IntMatrix& A = a.images[g].A;
    for (int j = 0; j < d; ++j) {
      const long long expected = j == var ? 1 : 0;
      if (A(var, j) != expected) {
        const std::string who = static_cast<std::size_t>(j) < a.variable_names.size()
                                    ? a.variable_names[static_cast<std::size_t>(j)]
                                    : "x" + std::to_string(j);
        throw Error(ErrorCode::ShapeViolation,
                    "under " + a.group.generator_names().at(g) + " the image of " + who +
                        " has exponent " + std::to_string(A(var, j)) + " in the dropped variable");
      }
    }
  }
  std::vector<Eigen::Index> keep;
  for (int j = 0; j < d; ++j)
    if (j != var) keep.push_back(j);
  ReductionStep step;
  step.kind = StepKind::FiberedVariableDrop;
  step.input = a;
  step.dropped = {var};
  step.justification = "affine in the dropped variable over the remaining field (fibration theorem)";
  step.output.group = a.group;
  for (std::size_t j = 0; j < keep.size(); ++j)
    if (static_cast<std::size_t>(keep[j]) < a.variable_names.size())
      step.output.variable_names.push_back(a.variable_names[static_cast<std::size_t>(keep[j])]);
  const auto kd = static_cast<Eigen::Index>(keep.size());
  for (const auto& img : a.images) {
    IntMatrix A(kd, kd);
    IntVector c(kd);
    for (Eigen::Index r = 0; r < kd; ++r) {
      c(r) = img.c(keep[static_cast<std::size_t>(r)]);
      for (Eigen::Index s = 0; s < kd; ++s)
        A(r, s) = img.A(keep[static_cast<std::size_t>(r)], keep[static_cast<std::size_t>(s)]);
    }
    step.output.images.emplace_back(A, c, img.m);
  }
  return step;
}

}  // namespace noether
