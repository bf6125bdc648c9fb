#include "noether/classify.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <sstream>

#include "noether/error.hpp"
#include "noether/lattice.hpp"
#include "noether/profile.hpp"
#include "noether/regular_module.hpp"

namespace noether {

std::string to_string(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::Rational: return "Rational";
    case VerdictStatus::NotRational: return "NotRational";
    case VerdictStatus::ConditionallyRational: return "ConditionallyRational";
    case VerdictStatus::Unknown: return "Unknown";
  }
  return "?";
}

namespace {

constexpr const char* kSquareCondition = "one of -1, 2, -2 is a square in k";

bool is_power_of(long long v, long long p) {
  if (v < 1 || p < 2) return false;
  while (v % p == 0) v /= p;
  return v == 1;
}

int log2_exact(long long v) {
  int e = 0;
  while ((1LL << e) < v) ++e;
  return e;
}

// Decision for the exceptional C4 shape once the sign class is -1.
void decide_by_squares(Verdict& v, const FieldDescriptor& field) {
  if (field.squares.any_true()) {
    v.status = VerdictStatus::Rational;
  } else if (field.squares.all_false()) {
    v.status = VerdictStatus::NotRational;
  } else {
    v.status = VerdictStatus::ConditionallyRational;
    v.condition = kSquareCondition;
  }
}

std::string flags_text(const FieldDescriptor& f) {
  const auto b = [](const std::optional<bool>& x) { return x ? (*x ? "yes" : "no") : "?"; };
  std::ostringstream os;
  os << "squares: -1 " << b(f.squares.minus_one) << ", 2 " << b(f.squares.two) << ", -2 "
     << b(f.squares.minus_two);
  return os.str();
}

bool is_generalized_quaternion_16(const Group& g) {
  if (g.order() != 16 || g.is_abelian()) return false;
  int involutions = 0;
  for (std::uint32_t x = 0; x < g.order(); ++x)
    if (g.element_order(x) == 2) ++involutions;
  return involutions == 1;
}

Verdict classify_group_impl(const Group& g, const FieldDescriptor& field, int depth);

bool try_direct_product(const Group& g, const FieldDescriptor& field, Verdict& v, int depth) {
  if (g.order() > 256 || depth > 6) return false;
  const auto normals = normal_subgroups(g);
  for (const auto& N1 : normals) {
    if (N1.size() == 1 || N1.size() == g.order()) continue;
    for (const auto& N2 : normals) {
      if (N1.size() * N2.size() != g.order() || N1 > N2) continue;
      std::vector<std::uint32_t> meet;
      std::set_intersection(N1.begin(), N1.end(), N2.begin(), N2.end(), std::back_inserter(meet));
      if (meet.size() != 1) continue;
      const Verdict a = classify_group_impl(subgroup_group(g, N1), field, depth + 1);
      if (a.status != VerdictStatus::Rational) continue;
      const Verdict b = classify_group_impl(subgroup_group(g, N2), field, depth + 1);
      if (b.status != VerdictStatus::Rational) continue;
      v.status = VerdictStatus::Rational;
      v.note(rules::kDirectProduct, "G = A x B with |A| = " + std::to_string(N1.size()) +
                                        ", |B| = " + std::to_string(N2.size()));
      for (const auto& e : a.trace) v.note(e.rule, "factor A: " + e.detail);
      for (const auto& e : b.trace) v.note(e.rule, "factor B: " + e.detail);
      return true;
    }
  }
  return false;
}

Verdict classify_group_impl(const Group& g, const FieldDescriptor& field, int depth) {
  Verdict v;
  const long long N = static_cast<long long>(g.order());
  if (N == 1) {
    v.status = VerdictStatus::Rational;
    v.note(rules::kTrivialGroup, "|G| = 1");
    return v;
  }
  if (N == 2) {
    v.status = VerdictStatus::Rational;
    v.note(rules::kDimTwo, "the regular representation of C2 permutes two variables");
    return v;
  }
  if (g.order() > max_order_guard()) throw Error(ErrorCode::TooLarge, "group exceeds the scan guard");
  const long long p = field.characteristic;

  if (p > 0 && is_power_of(N, p)) {
    v.status = VerdictStatus::Rational;
    v.note(rules::kCharP, "|G| = " + std::to_string(N) + " is a power of char k = " + std::to_string(p));
    return v;
  }

  const StructuralProfile prof = structural_profile(g);
  if (is_power_of(N, 2)) {
    const int n = log2_exact(N);
    const int e = log2_exact(prof.exponent);
    if (n >= 4 && e >= n - 2) {
      const long long need = 1LL << (e - 1);
      if (p == 2 || field.has_root(need)) {
        v.status = VerdictStatus::Rational;
        v.note(rules::kIndexFour, "|G| = 2^" + std::to_string(n) + ", exp(G) = 2^" + std::to_string(e) +
                                      (p == 2 ? ", char k = 2" : ", zeta_" + std::to_string(need) + " in k"));
        return v;
      }
    }
  }

  if (N % 4 == 0 && p != 2) {
    const long long n = N / 4;
    if (element_of_order(g, static_cast<int>(n)) && field.has_root(n)) {
      const std::string hyp = "|G| = 4*" + std::to_string(n) + ", element of order " + std::to_string(n) +
                              ", zeta_" + std::to_string(n) + " in k";
      if (field.has_sqrt_minus_one()) {
        v.status = VerdictStatus::Rational;
        v.note(rules::kFourNSqrt, hyp + ", sqrt(-1) in k");
        return v;
      }
      const bool exceptional = n % 2 == 0 && (n / 2) % 2 == 1 && prof.is_cm_rtimes_c8 &&
                               prof.cm_m == n / 2 && prof.center_order % 2 == 0;
      if (exceptional) {
        decide_by_squares(v, field);
        v.note(rules::kFourN, hyp + "; G = C_" + std::to_string(n / 2) + " x| C_8 with center of order " +
                                  std::to_string(prof.center_order) + " (exceptional), " + flags_text(field));
        return v;
      }
      v.status = VerdictStatus::Rational;
      v.note(rules::kFourN, hyp + "; not of the form C_m x| C_8 with even center");
      return v;
    }
  }

  if ((N == 8 || N == 16) && !g.is_abelian()) {
    if (is_generalized_quaternion_16(g) && p != 2) {
      if (field.squares.any_true()) {
        v.status = VerdictStatus::Rational;
        v.note(rules::kSmallTwoGroup, "Q16 and k(zeta_8)/k is cyclic (" + flags_text(field) + ")");
        return v;
      }
      v.note(rules::kSmallTwoGroup, "Q16 with k(zeta_8)/k possibly non-cyclic: undecided");
    } else {
      v.status = VerdictStatus::Rational;
      v.note(rules::kSmallTwoGroup, "|G| = " + std::to_string(N));
      return v;
    }
  }

  if (try_direct_product(g, field, v, depth)) return v;
  v.status = VerdictStatus::Unknown;
  v.note("no rule", "no hypothesis set matched (|G| = " + std::to_string(N) + ", " + field.to_string() + ")");
  return v;
}

IntMatrix char_poly3(const IntMatrix& A) {
  // Coefficients of x^3 + a x^2 + b x + c as a column (a, b, c).
  const long long tr = A.trace();
  const long long minors = A(0, 0) * A(1, 1) - A(0, 1) * A(1, 0) + A(0, 0) * A(2, 2) -
                           A(0, 2) * A(2, 0) + A(1, 1) * A(2, 2) - A(1, 2) * A(2, 1);
  IntMatrix r(3, 1);
  r << -tr, minors, -determinant(A);
  return r;
}

std::string describe(const ActionAssignment& a) {
  std::ostringstream os;
  for (std::size_t g = 0; g < a.images.size(); ++g) {
    if (g) os << "; ";
    os << a.group.generator_names()[g] << ": " << a.images[g].to_string(a.variable_names);
  }
  return os.str();
}

}  // namespace

Verdict classify_group(const Group& g, const FieldDescriptor& field) {
  return classify_group_impl(g, field.normalized(), 0);
}

IntMatrix exceptional_matrix() {
  IntMatrix E(3, 3);
  E << 0, 0, -1, 1, 0, -1, 0, 1, -1;
  return E;
}

constexpr int kConjugatorRadius = 24;

std::optional<ExceptionalForm> exceptional_form(const MonomialAutomorphism& a) {
  if (a.dim() != 3) return std::nullopt;
  if (automorphism_order(a) != 4) return std::nullopt;
  const IntMatrix& A = a.A;
  const IntMatrix E = exceptional_matrix();
  // P E = A P forces the columns p, A p, A^2 p; search the first column in
  // boxes of growing radius, visiting only the new shell each time.
  auto try_column = [&](const IntVector& p0) -> std::optional<ExceptionalForm> {
    IntMatrix P(3, 3);
    P.col(0) = p0;
    P.col(1) = A * p0;
    P.col(2) = A * P.col(1);
    if (A * P != P * E) return std::nullopt;
    const long long det = determinant(P);
    if (det != 1 && det != -1) return std::nullopt;
    const IntVector c = P.transpose() * a.c;
    const long long m = a.m;
    const long long e = mod_floor(3 * c(0) + 2 * c(1) + c(2), m);
    ExceptionalForm f;
    f.coefficient = RootExponent(m, e);
    f.conjugator = P;
    const long long g = gcd_ll(4, m);
    const long long cls = e % g;
    if (cls == 0) f.epsilon = 1;
    else if (m % 2 == 0 && cls == (m / 2) % g) f.epsilon = -1;
    else f.epsilon = 0;
    return f;
  };
  for (int r = 1; r <= kConjugatorRadius; ++r)
    for (int i = -r; i <= r; ++i)
      for (int j = -r; j <= r; ++j)
        for (int k = -r; k <= r; ++k) {
          if (std::max({std::abs(i), std::abs(j), std::abs(k)}) != r) continue;
          IntVector p0(3);
          p0 << i, j, k;
          if (auto f = try_column(p0)) return f;
        }
  return std::nullopt;
}

std::optional<InvolutionPatternMatch> match_involution_pattern(const ActionAssignment& a_in) {
  if (a_in.dim() != 3) return std::nullopt;
  const ActionAssignment a = common_modulus(a_in);
  const auto imgs = element_images(a);
  const long long m = a.modulus();
  std::map<MonomialAutomorphism, std::uint32_t> distinct;
  for (std::uint32_t g = 0; g < imgs.size(); ++g) distinct.emplace(imgs[g], g);

  std::array<int, 3> perm{0, 1, 2};
  do {
    const int x = perm[0], y = perm[1], z = perm[2];
    const auto unit = [](int r) {
      IntVector v = IntVector::Zero(3);
      v(r) = 1;
      return v;
    };
    std::vector<std::pair<MonomialAutomorphism, std::uint32_t>> S, T;
    for (const auto& [img, g] : distinct) {
      const IntMatrix& A = img.A;
      if (A.col(x) == -unit(x) && A.col(y) == -unit(y) && A.col(z) == unit(z) && img.c(x) == img.c(y) &&
          (img.c(z) == 0 || 2 * img.c(z) == m))
        S.emplace_back(img, g);
      if (A.col(x) == unit(y) && A.col(y) == unit(x) && A.col(z) == -unit(z) && img.c(x) == 0 &&
          img.c(y) == 0)
        T.emplace_back(img, g);
    }
    for (const auto& [s, gs] : S)
      for (const auto& [t, gt] : T)
        if (automorphism_closure({s, t}).size() == distinct.size()) {
          InvolutionPatternMatch match;
          match.s = gs;
          match.t = gt;
          match.order = {x, y, z};
          match.epsilon = s.c(z) == 0 ? 1 : -1;
          return match;
        }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

Verdict classify_monomial_action(const ActionAssignment& a_in, const FieldDescriptor& field_in) {
  const FieldDescriptor field = field_in.normalized();
  const ActionAssignment a = common_modulus(a_in);
  const int d = a.dim();
  if (d > 3) throw Error(ErrorCode::DimUnsupported, "monomial rules cover at most three variables");
  const auto hom = verify_homomorphism(a);
  if (!hom.ok()) {
    std::string bad;
    for (const auto& e : hom.entries)
      if (!e.pass) bad += e.relation + " ";
    throw Error(ErrorCode::InvalidInput, "generator images violate the group law: " + bad);
  }
  const auto imgs = element_images(a);
  long long coeff_order = 1;
  for (const auto& img : imgs)
    for (int j = 0; j < d; ++j) coeff_order = lcm_ll(coeff_order, img.coefficient(j).order());
  if (!field.has_root(coeff_order))
    throw Error(ErrorCode::InvalidInput, "coefficients need zeta_" + std::to_string(coeff_order) +
                                             ", which is not in the field");

  Verdict v;
  if (d <= 1) {
    v.status = VerdictStatus::Rational;
    v.note(rules::kDimOne, "d = " + std::to_string(d));
    return v;
  }
  if (d == 2) {
    v.status = VerdictStatus::Rational;
    v.note(rules::kDimTwo, "d = 2, any field");
    return v;
  }
  if (field.characteristic == 2) {
    v.note("no rule", "three-dimensional rules need char k != 2");
    return v;
  }
  if (field.has_sqrt_minus_one()) {
    v.status = VerdictStatus::Rational;
    v.note(rules::kDimThreeSqrt, "coefficients in <zeta_" + std::to_string(coeff_order) + ">");
    return v;
  }

  const ReductionChain chain = reduce_to_injective(a);
  for (const auto& step : chain.steps)
    v.note(rules::kScalarKernel, step.justification + "; new variables " +
                                     [&] {
                                       std::string s;
                                       for (const auto& nm : step.output.variable_names) s += nm + " ";
                                       return s;
                                     }());
  const ActionAssignment& r = chain.result;
  const auto rimgs = element_images(r);
  std::set<MonomialAutomorphism> distinct(rimgs.begin(), rimgs.end());
  const bool purely =
      std::all_of(distinct.begin(), distinct.end(), [](const MonomialAutomorphism& x) { return x.purely_monomial(); });
  if (purely) {
    v.status = VerdictStatus::Rational;
    v.note(rules::kPurelyMonomial, "all coefficients trivial after reduction: " + describe(r));
    return v;
  }
  if (auto match = match_involution_pattern(r)) {
    v.status = VerdictStatus::Rational;
    v.note(rules::kInvolutionPattern, "s = " + r.group.element_name(match->s) + ", t = " +
                                          r.group.element_name(match->t) +
                                          ", eps = " + std::to_string(match->epsilon));
    return v;
  }
  const MonomialAutomorphism* tau = nullptr;
  if (distinct.size() == 4)
    for (const auto& x : distinct)
      if (automorphism_order(x) == 4 && !(matrix_power(x.A, 2).isIdentity())) tau = &x;
  if (!tau) {
    v.status = VerdictStatus::Rational;
    v.note(rules::kNonExceptional, "image group of order " + std::to_string(distinct.size()) +
                                       " is not cyclic of order 4 acting through the exceptional matrix");
    return v;
  }
  const long long Nroots = field.root_group_order();
  const MonomialAutomorphism lifted = tau->lifted(lcm_ll(tau->m, Nroots));
  const auto form = exceptional_form(lifted);
  if (!form) {
    IntMatrix target(3, 1);
    target << 1, 1, 1;
    if (char_poly3(tau->A) == target) {
      v.note(rules::kExceptional, "characteristic polynomial x^3+x^2+x+1 but no conjugator with entries in [-24,24]");
      return v;
    }
    v.status = VerdictStatus::Rational;
    v.note(rules::kNonExceptional, "cyclic quotient of order 4 with a matrix not conjugate to the exceptional one");
    return v;
  }
  std::ostringstream os;
  os << "tau = " << tau->to_string(r.variable_names) << "; normalised coefficient zeta_"
     << form->coefficient.modulus << "^" << form->coefficient.exponent << ", eps = " << form->epsilon;
  if (form->epsilon == 1) {
    v.status = VerdictStatus::Rational;
    v.note(rules::kExceptional, os.str() + "; coefficient is a fourth power, so the action is purely monomial");
  } else if (form->epsilon == -1) {
    decide_by_squares(v, field);
    v.note(rules::kExceptional, os.str() + "; " + flags_text(field));
  } else {
    v.note(rules::kExceptional, os.str() + "; coefficient class outside {1, -1} modulo fourth powers");
  }
  return v;
}

Group matrix_group(const std::vector<MonomialMatrix>& generators, const std::string& name) {
  const auto elems = matrix_closure(generators);
  if (elems.size() > max_order_guard()) throw Error(ErrorCode::TooLarge, "matrix group exceeds the scan guard");
  std::map<MonomialMatrix, std::uint32_t> index;
  for (std::uint32_t i = 0; i < elems.size(); ++i) index.emplace(elems[i], i);
  std::vector<std::vector<std::uint32_t>> table(elems.size(), std::vector<std::uint32_t>(elems.size()));
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = 0; j < elems.size(); ++j) table[i][j] = index.at(compose(elems[i], elems[j]));
  std::vector<std::uint32_t> gens;
  std::vector<std::string> names;
  for (std::size_t k = 0; k < generators.size(); ++k) {
    gens.push_back(index.at(generators[k]));
    names.push_back("g" + std::to_string(k + 1));
  }
  return cayley_group(table, name, gens, names);
}

Verdict classify_m_group(const std::vector<MonomialMatrix>& matrices, const FieldDescriptor& field_in) {
  const FieldDescriptor field = field_in.normalized();
  if (matrices.empty()) throw Error(ErrorCode::InvalidInput, "no matrices given");
  for (const auto& M : matrices)
    if (M.dim() != 4) throw Error(ErrorCode::DimUnsupported, "M-group rules need 4x4 matrices");
  long long coeff_order = 1;
  for (const auto& M : matrix_closure(matrices))
    for (const auto& c : M.coeff) coeff_order = lcm_ll(coeff_order, c.order());
  if (!field.has_root(coeff_order))
    throw Error(ErrorCode::InvalidInput, "matrix entries need zeta_" + std::to_string(coeff_order));

  Verdict v;
  const CoefficientNormalization norm = normalize_coefficients(matrices);
  {
    std::ostringstream os;
    os << "y_i = b_i x_i with b = (";
    for (std::size_t i = 0; i < norm.b.size(); ++i) os << (i ? ", " : "") << norm.b[i];
    os << "), coefficients in <zeta_" << norm.m << ">";
    v.note(rules::kNormalization, os.str());
  }
  const Group G = matrix_group(norm.rescaled);
  const ActionAssignment y = to_assignment(G, norm.rescaled, {"y1", "y2", "y3", "y4"});
  IntMatrix B = IntMatrix::Identity(4, 4);
  for (int i = 0; i < 3; ++i) B(3, i) = -1;
  const ActionAssignment z = change_lattice_basis(y, B, {"z1", "z2", "z3", "y4"});
  const ReductionStep drop = eliminate_fibered_variable(z, 3);
  v.note(rules::kAffineFibration, "z_i = y_i/y4; every element sends y4 to (monomial in z)*y4");
  const Verdict sub = classify_monomial_action(drop.output, field);
  v.trace.insert(v.trace.end(), sub.trace.begin(), sub.trace.end());
  v.status = sub.status;
  v.condition = sub.condition;
  if (sub.status == VerdictStatus::Rational && field.has_sqrt_minus_one())
    v.note(rules::kMGroup, "sqrt(-1) in k");
  return v;
}

}  // namespace noether
