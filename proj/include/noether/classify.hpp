#pragma once

#include <optional>
#include <string>
#include <vector>

#include "noether/field.hpp"
#include "noether/group.hpp"
#include "noether/int_matrix.hpp"
#include "noether/monomial.hpp"

namespace noether {

enum class VerdictStatus { Rational, NotRational, ConditionallyRational, Unknown };

std::string to_string(VerdictStatus s);

struct TraceEntry {
  std::string rule;
  std::string detail;
};

struct Verdict {
  VerdictStatus status = VerdictStatus::Unknown;
  std::string condition;
  std::vector<TraceEntry> trace;

  void note(std::string rule, std::string detail) { trace.push_back({std::move(rule), std::move(detail)}); }
};

/// Rule names as they appear in traces.
namespace rules {
inline constexpr const char* kTrivialGroup = "trivial group";
inline constexpr const char* kCharP = "p-group in characteristic p";
inline constexpr const char* kIndexFour = "2-group with a cyclic subgroup of index at most 4";
inline constexpr const char* kFourNSqrt = "order 4n, cyclic subgroup of order n, sqrt(-1) in k";
inline constexpr const char* kFourN = "order 4n with an element of order n";
inline constexpr const char* kSmallTwoGroup = "non-abelian group of order 8 or 16";
inline constexpr const char* kDirectProduct = "direct product of rational factors";
inline constexpr const char* kDimOne = "one-dimensional action";
inline constexpr const char* kDimTwo = "two-dimensional monomial action";
inline constexpr const char* kDimThreeSqrt = "three-dimensional monomial action, sqrt(-1) in k";
inline constexpr const char* kScalarKernel = "scalar-kernel reduction";
inline constexpr const char* kPurelyMonomial = "purely monomial three-dimensional action";
inline constexpr const char* kInvolutionPattern = "pattern x->a/x, y->a/y, z->ez; x<->y, z->b/z";
inline constexpr const char* kNonExceptional = "three-dimensional action outside the exceptional C4 shape";
inline constexpr const char* kExceptional = "exceptional C4 action z1->z2->z3->c/(z1z2z3)";
inline constexpr const char* kAffineFibration = "affine fibration in one variable";
inline constexpr const char* kLinearFibration = "linear fibration over a faithful subfield";
inline constexpr const char* kNormalization = "coefficient normalization of an M-group";
inline constexpr const char* kMGroup = "four-dimensional M-group";
}  // namespace rules

Verdict classify_group(const Group& g, const FieldDescriptor& field);

/// d <= 3; throws DimUnsupported above that.
Verdict classify_monomial_action(const ActionAssignment& a, const FieldDescriptor& field);

struct ExceptionalForm {
  /// Coefficient c of z1->z2->z3->c/(z1z2z3) after normalising, as zeta_m^exponent.
  RootExponent coefficient;
  /// +1 when c is a fourth power in <zeta_m>, -1 when -c is, 0 otherwise.
  int epsilon = 0;
  /// Unimodular P with P^{-1} A P equal to the standard matrix.
  IntMatrix conjugator;
};

/// The standard matrix of z1->z2->z3->1/(z1z2z3).
IntMatrix exceptional_matrix();

/// Searches conjugators with entries in [-24, 24], smallest boxes first.
std::optional<ExceptionalForm> exceptional_form(const MonomialAutomorphism& a);

/// The pair (s, t) of group elements realising the involution pattern, if any.
struct InvolutionPatternMatch {
  std::uint32_t s = 0;
  std::uint32_t t = 0;
  std::vector<int> order;
  int epsilon = 1;
};
std::optional<InvolutionPatternMatch> match_involution_pattern(const ActionAssignment& a);

/// Rational d = 4 monomial linear group (matrices act on x_1..x_4).
Verdict classify_m_group(const std::vector<MonomialMatrix>& matrices, const FieldDescriptor& field);

/// Abstract group of a matrix group, generated by the given matrices.
Group matrix_group(const std::vector<MonomialMatrix>& generators, const std::string& name = "M");

}  // namespace noether
