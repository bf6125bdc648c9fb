#include "noether/monomial.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "noether/error.hpp"

namespace noether {

namespace {

bool is_power_of_two(long long v) { return v > 0 && (v & (v - 1)) == 0; }

}  // namespace

MonomialAutomorphism::MonomialAutomorphism(IntMatrix matrix, IntVector coeffs, long long modulus)
    : A(std::move(matrix)), c(std::move(coeffs)), m(modulus) {
  if (m <= 0) throw Error(ErrorCode::InvalidParameter, "modulus must be positive");
  if (A.rows() != A.cols() || c.size() != A.rows())
    throw Error(ErrorCode::DimMismatch, "automorphism matrix and coefficient sizes differ");
  for (Eigen::Index j = 0; j < c.size(); ++j) c(j) = mod_floor(c(j), m);
}

MonomialAutomorphism MonomialAutomorphism::identity(int d, long long m) {
  return {IntMatrix::Identity(d, d), IntVector::Zero(d), m};
}

MonomialAutomorphism MonomialAutomorphism::lifted(long long new_m) const {
  if (new_m % m != 0) throw Error(ErrorCode::ModulusMismatch, "cannot lift to a non-multiple modulus");
  return {A, c * (new_m / m), new_m};
}

bool MonomialAutomorphism::is_identity() const { return A.isIdentity() && c.isZero(); }

std::string MonomialAutomorphism::to_string(const std::vector<std::string>& names) const {
  const auto name = [&](Eigen::Index i) {
    return static_cast<std::size_t>(i) < names.size() ? names[static_cast<std::size_t>(i)]
                                                      : "x" + std::to_string(i);
  };
  std::ostringstream os;
  for (Eigen::Index j = 0; j < A.cols(); ++j) {
    if (j) os << ", ";
    os << name(j) << " -> ";
    bool any = false;
    if (c(j) != 0) {
      os << "zeta" << m << "^" << c(j);
      any = true;
    }
    for (Eigen::Index i = 0; i < A.rows(); ++i) {
      if (A(i, j) == 0) continue;
      if (any) os << "*";
      os << name(i);
      if (A(i, j) != 1) os << "^" << A(i, j);
      any = true;
    }
    if (!any) os << "1";
  }
  return os.str();
}

bool operator==(const MonomialAutomorphism& a, const MonomialAutomorphism& b) {
  if (a.A.rows() != b.A.rows() || a.A != b.A) return false;
  const long long m = std::lcm(a.m, b.m);
  return a.lifted(m).c == b.lifted(m).c;
}

bool operator<(const MonomialAutomorphism& a, const MonomialAutomorphism& b) {
  if (a.A.rows() != b.A.rows()) return a.A.rows() < b.A.rows();
  for (Eigen::Index i = 0; i < a.A.size(); ++i)
    if (a.A.data()[i] != b.A.data()[i]) return a.A.data()[i] < b.A.data()[i];
  for (Eigen::Index j = 0; j < a.c.size(); ++j) {
    const auto ra = a.coefficient(static_cast<int>(j)).canonical();
    const auto rb = b.coefficient(static_cast<int>(j)).canonical();
    if (ra.modulus != rb.modulus) return ra.modulus < rb.modulus;
    if (ra.exponent != rb.exponent) return ra.exponent < rb.exponent;
  }
  return false;
}

MonomialAutomorphism compose(const MonomialAutomorphism& t, const MonomialAutomorphism& s) {
  if (t.dim() != s.dim()) throw Error(ErrorCode::DimMismatch, "composing automorphisms of different dimension");
  if (t.m != s.m) throw Error(ErrorCode::ModulusMismatch, "composing automorphisms with different moduli");
  return {t.A * s.A, s.c + s.A.transpose() * t.c, t.m};
}

MonomialAutomorphism inverse(const MonomialAutomorphism& a) {
  const IntMatrix Ainv = unimodular_inverse(a.A);
  return {Ainv, -(Ainv.transpose() * a.c), a.m};
}

MonomialAutomorphism power(const MonomialAutomorphism& a, long long k) {
  MonomialAutomorphism base = k < 0 ? inverse(a) : a;
  if (k < 0) k = -k;
  MonomialAutomorphism result = MonomialAutomorphism::identity(a.dim(), a.m);
  while (k > 0) {
    if (k & 1) result = compose(result, base);
    k >>= 1;
    if (k) base = compose(base, base);
  }
  return result;
}

int automorphism_order(const MonomialAutomorphism& a, int limit) {
  MonomialAutomorphism x = a;
  for (int k = 1; k <= limit; ++k) {
    if (x.is_identity()) return k;
    x = compose(x, a);
  }
  throw Error(ErrorCode::ClosureTooLarge, "automorphism order exceeds the guard");
}

std::vector<LaurentFraction> variable_images(const MonomialAutomorphism& a) {
  const int d = a.dim();
  std::vector<LaurentFraction> out;
  out.reserve(static_cast<std::size_t>(d));
  for (int j = 0; j < d; ++j) {
    Exponents e(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) e[static_cast<std::size_t>(i)] = static_cast<int>(a.A(i, j));
    const RootExponent r = a.coefficient(j).canonical();
    if (!is_power_of_two(r.modulus))
      throw Error(ErrorCode::ConductorMismatch,
                  "coefficient zeta_" + std::to_string(r.modulus) + " has no dense representation");
    out.emplace_back(LaurentPoly::monomial(e, CyclotomicInt::from_root(r)));
  }
  return out;
}

LaurentFraction apply(const MonomialAutomorphism& a, const LaurentFraction& f) {
  if (f.nvars() != a.dim()) throw Error(ErrorCode::DimMismatch, "fraction lives in a different ring");
  return fraction_substitute(f, variable_images(a));
}

std::optional<MonomialAutomorphism> from_images(const std::vector<LaurentFraction>& images,
                                                long long m) {
  const int d = static_cast<int>(images.size());
  IntMatrix A(d, d);
  IntVector c(d);
  for (int j = 0; j < d; ++j) {
    const auto mono = images[static_cast<std::size_t>(j)].as_unit_monomial();
    if (!mono) return std::nullopt;
    const auto root = mono->second.as_root_of_unity();
    if (!root || m % root->canonical().modulus != 0) return std::nullopt;
    for (int i = 0; i < d; ++i) A(i, j) = mono->first[static_cast<std::size_t>(i)];
    c(j) = root->exponent_over(m);
  }
  if (!is_unimodular(A)) return std::nullopt;
  return MonomialAutomorphism(A, c, m);
}

ActionAssignment common_modulus(ActionAssignment a) {
  long long m = 1;
  for (const auto& g : a.images) m = std::lcm(m, g.m);
  for (auto& g : a.images) g = g.lifted(m);
  return a;
}

namespace {

// BFS along generators; returns an error message on inconsistency.
std::optional<std::string> build_element_images(const ActionAssignment& a,
                                                std::vector<MonomialAutomorphism>& out) {
  const Group& G = a.group;
  if (a.images.size() != G.generators().size())
    throw Error(ErrorCode::DimMismatch, "one image per generator is required");
  const int d = a.dim();
  const long long m = a.modulus();
  for (const auto& img : a.images)
    if (img.dim() != d) throw Error(ErrorCode::DimMismatch, "generator images differ in dimension");
    else if (img.m != m) throw Error(ErrorCode::ModulusMismatch, "generator images differ in modulus");
  out.assign(G.order(), MonomialAutomorphism());
  std::vector<char> known(G.order(), 0);
  out[G.identity()] = MonomialAutomorphism::identity(d, m);
  known[G.identity()] = 1;
  std::vector<std::uint32_t> queue{G.identity()};
  for (std::size_t q = 0; q < queue.size(); ++q) {
    const std::uint32_t x = queue[q];
    for (std::size_t gi = 0; gi < G.generators().size(); ++gi) {
      const std::uint32_t y = G.mul(x, G.generators()[gi]);
      MonomialAutomorphism img = compose(out[x], a.images[gi]);
      if (!known[y]) {
        known[y] = 1;
        out[y] = std::move(img);
        queue.push_back(y);
      } else if (out[y] != img) {
        return "image of " + G.element_name(x) + "*" + G.generator_names()[gi] +
               " is not well defined";
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::vector<MonomialAutomorphism> element_images(const ActionAssignment& a) {
  std::vector<MonomialAutomorphism> out;
  if (auto err = build_element_images(a, out)) throw Error(ErrorCode::InvalidInput, *err);
  return out;
}

MonomialAutomorphism word_image(const ActionAssignment& a, const Word& w) {
  MonomialAutomorphism r = MonomialAutomorphism::identity(a.dim(), a.modulus());
  for (const auto& [g, e] : w) r = compose(r, power(a.images.at(static_cast<std::size_t>(g)), e));
  return r;
}

bool VerificationReport::ok() const {
  return std::all_of(entries.begin(), entries.end(), [](const Entry& e) { return e.pass; });
}

VerificationReport verify_homomorphism(const ActionAssignment& a) {
  VerificationReport rep;
  for (const auto& rel : a.group.relations()) {
    const auto L = word_image(a, rel.lhs);
    const auto R = word_image(a, rel.rhs);
    VerificationReport::Entry e{rel.text, L == R, ""};
    if (!e.pass) e.detail = "lhs: " + L.to_string(a.variable_names) + " | rhs: " + R.to_string(a.variable_names);
    rep.entries.push_back(std::move(e));
  }
  std::vector<MonomialAutomorphism> imgs;
  const auto err = build_element_images(a, imgs);
  rep.entries.push_back({"multiplication table", !err.has_value(), err.value_or("")});
  return rep;
}

std::vector<MonomialAutomorphism> automorphism_closure(const std::vector<MonomialAutomorphism>& gens_in,
                                                       std::size_t limit) {
  if (gens_in.empty()) return {};
  long long m = 1;
  for (const auto& g : gens_in) m = std::lcm(m, g.m);
  std::vector<MonomialAutomorphism> gens;
  for (const auto& g : gens_in) gens.push_back(g.lifted(m));
  std::vector<MonomialAutomorphism> out{MonomialAutomorphism::identity(gens.front().dim(), m)};
  std::set<MonomialAutomorphism> seen(out.begin(), out.end());
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const auto& g : gens) {
      MonomialAutomorphism y = compose(out[i], g);
      if (seen.insert(y).second) {
        out.push_back(std::move(y));
        if (out.size() > limit) throw Error(ErrorCode::ClosureTooLarge, "automorphism group closure too large");
      }
    }
  }
  return out;
}

MonomialMatrix MonomialMatrix::identity(int d) {
  MonomialMatrix r;
  for (int i = 0; i < d; ++i) {
    r.target.push_back(i);
    r.coeff.emplace_back(1, 0);
  }
  return r;
}

bool operator==(const MonomialMatrix& a, const MonomialMatrix& b) {
  return a.target == b.target && a.coeff == b.coeff;
}

bool operator<(const MonomialMatrix& a, const MonomialMatrix& b) {
  if (a.target != b.target) return a.target < b.target;
  for (std::size_t j = 0; j < a.coeff.size(); ++j) {
    const auto ra = a.coeff[j].canonical(), rb = b.coeff[j].canonical();
    if (ra.modulus != rb.modulus) return ra.modulus < rb.modulus;
    if (ra.exponent != rb.exponent) return ra.exponent < rb.exponent;
  }
  return false;
}

MonomialMatrix compose(const MonomialMatrix& a, const MonomialMatrix& b) {
  if (a.dim() != b.dim()) throw Error(ErrorCode::DimMismatch, "composing matrices of different size");
  MonomialMatrix r;
  for (int j = 0; j < b.dim(); ++j) {
    const int t = b.target[static_cast<std::size_t>(j)];
    r.target.push_back(a.target[static_cast<std::size_t>(t)]);
    r.coeff.push_back((b.coeff[static_cast<std::size_t>(j)] * a.coeff[static_cast<std::size_t>(t)]).canonical());
  }
  return r;
}

MonomialMatrix monomial_from_dense(const std::vector<std::vector<std::optional<long long>>>& entries,
                                   long long M) {
  const std::size_t d = entries.size();
  MonomialMatrix r;
  r.target.assign(d, -1);
  r.coeff.assign(d, RootExponent());
  for (const auto& row : entries)
    if (row.size() != d) throw Error(ErrorCode::NotMonomial, "matrix is not square");
  for (std::size_t j = 0; j < d; ++j) {
    int count = 0;
    for (std::size_t i = 0; i < d; ++i) {
      if (!entries[i][j]) continue;
      ++count;
      r.target[j] = static_cast<int>(i);
      r.coeff[j] = RootExponent(M, *entries[i][j]).canonical();
    }
    if (count != 1) throw Error(ErrorCode::NotMonomial, "column " + std::to_string(j) + " needs exactly one entry");
  }
  std::vector<int> sorted = r.target;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw Error(ErrorCode::NotMonomial, "matrix is singular");
  return r;
}

std::vector<MonomialMatrix> matrix_closure(const std::vector<MonomialMatrix>& gens, std::size_t limit) {
  if (gens.empty()) return {};
  std::vector<MonomialMatrix> out{MonomialMatrix::identity(gens.front().dim())};
  std::set<MonomialMatrix> seen(out.begin(), out.end());
  for (std::size_t i = 0; i < out.size(); ++i)
    for (const auto& g : gens) {
      MonomialMatrix y = compose(out[i], g);
      if (seen.insert(y).second) {
        out.push_back(std::move(y));
        if (out.size() > limit) throw Error(ErrorCode::ClosureTooLarge, "matrix group closure too large");
      }
    }
  return out;
}

CoefficientNormalization normalize_coefficients(const std::vector<MonomialMatrix>& matrices,
                                                bool require_closed) {
  if (matrices.empty()) throw Error(ErrorCode::InvalidInput, "no matrices given");
  const int d = matrices.front().dim();
  const auto group = matrix_closure(matrices);
  if (require_closed) {
    std::set<MonomialMatrix> given(matrices.begin(), matrices.end());
    given.insert(MonomialMatrix::identity(d));
    if (given.size() != group.size()) throw Error(ErrorCode::NotAGroup, "matrices are not closed under products");
  }
  CoefficientNormalization out;
  out.b.assign(static_cast<std::size_t>(d), RootExponent());
  std::vector<char> assigned(static_cast<std::size_t>(d), 0);
  long long m = 1;
  for (int r = 0; r < d; ++r) {
    if (assigned[static_cast<std::size_t>(r)]) continue;
    long long orbit_m = 1;
    for (const auto& g : group) {
      const int i = g.target[static_cast<std::size_t>(r)];
      const RootExponent c = g.coeff[static_cast<std::size_t>(r)];
      if (i == r) orbit_m = std::lcm(orbit_m, static_cast<long long>(c.order()));
      if (!assigned[static_cast<std::size_t>(i)]) {
        assigned[static_cast<std::size_t>(i)] = 1;
        out.b[static_cast<std::size_t>(i)] = i == r ? RootExponent() : c.canonical();
      }
    }
    m = std::lcm(m, orbit_m);
  }
  out.m = m;
  const auto rescale = [&](const MonomialMatrix& g) {
    MonomialMatrix h = g;
    for (int j = 0; j < d; ++j) {
      const int t = g.target[static_cast<std::size_t>(j)];
      h.coeff[static_cast<std::size_t>(j)] =
          (out.b[static_cast<std::size_t>(j)] * g.coeff[static_cast<std::size_t>(j)] *
           out.b[static_cast<std::size_t>(t)].inverse())
              .canonical();
    }
    return h;
  };
  for (const auto& g : group) {
    const auto h = rescale(g);
    for (const auto& c : h.coeff)
      if (m % c.order() != 0)
        throw Error(ErrorCode::InvalidInput, "rescaled coefficient escapes <zeta_m>");
  }
  for (const auto& g : matrices) out.rescaled.push_back(rescale(g));
  return out;
}

}  // namespace noether
