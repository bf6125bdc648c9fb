#include "noether/regular_module.hpp"

#include <algorithm>
#include <deque>

#include "noether/error.hpp"

namespace noether {

RegularModule::RegularModule(Group group, long long conductor)
    : group_(std::move(group)), conductor_(conductor) {
  if (!CyclotomicInt::valid_conductor(conductor))
    throw Error(ErrorCode::InvalidParameter, "regular module conductor must be a power of two");
}

RegVector RegularModule::zero() const {
  return RegVector(group_.order(), CyclotomicInt(0, conductor_));
}

RegVector RegularModule::basis(std::uint32_t g) const {
  RegVector v = zero();
  v.at(g) = CyclotomicInt(1, conductor_);
  return v;
}

RegVector RegularModule::act(std::uint32_t h, const RegVector& v) const {
  if (v.size() != group_.order()) throw Error(ErrorCode::DimMismatch, "vector length differs from |G|");
  RegVector out = zero();
  for (std::uint32_t g = 0; g < v.size(); ++g) out[group_.mul(h, g)] = v[g];
  return out;
}

CyclotomicInt RegularModule::root(const RootExponent& r) const {
  if (conductor_ % r.order() != 0)
    throw Error(ErrorCode::ConductorMismatch,
                "root of unity of order " + std::to_string(r.order()) + " outside the module ring");
  return CyclotomicInt::zeta(conductor_, r.exponent_over(conductor_));
}

RegVector RegularModule::scale(const RootExponent& r, const RegVector& v) const {
  const CyclotomicInt c = root(r);
  RegVector out = v;
  for (auto& e : out) e = cyclo_mul(c, e.lifted(conductor_));
  return out;
}

bool is_zero(const RegVector& v) {
  return std::all_of(v.begin(), v.end(), [](const CyclotomicInt& c) { return c.is_zero(); });
}

std::map<std::uint32_t, RootExponent> extend_character(const Group& g,
                                                       const std::vector<std::uint32_t>& gens,
                                                       const std::vector<RootExponent>& values) {
  if (gens.size() != values.size())
    throw Error(ErrorCode::InvalidInput, "character needs one value per generator");
  std::map<std::uint32_t, RootExponent> chi{{g.identity(), RootExponent(1, 0)}};
  std::deque<std::uint32_t> queue{g.identity()};
  while (!queue.empty()) {
    const std::uint32_t e = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const std::uint32_t f = g.mul(e, gens[i]);
      const RootExponent value = (chi.at(e) * values[i]).canonical();
      auto [it, fresh] = chi.emplace(f, value);
      if (fresh) {
        queue.push_back(f);
      } else if (!(it->second == value)) {
        throw Error(ErrorCode::NotAnEigenvector,
                    "character values are inconsistent at element " + g.element_name(f));
      }
    }
  }
  return chi;
}

RegVector eigenvector(const RegularModule& module, const std::vector<std::uint32_t>& subgroup_gens,
                      const std::vector<RootExponent>& character) {
  const auto chi = extend_character(module.group(), subgroup_gens, character);
  RegVector X = module.zero();
  for (const auto& [h, value] : chi) X[h] = module.root(value.inverse());
  require_eigenvector(module, X, subgroup_gens, character);
  return X;
}

void require_eigenvector(const RegularModule& module, const RegVector& v,
                         const std::vector<std::uint32_t>& gens,
                         const std::vector<RootExponent>& values) {
  if (is_zero(v)) throw Error(ErrorCode::NotAnEigenvector, "the vector is zero");
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (module.act(gens[i], v) != module.scale(values[i], v))
      throw Error(ErrorCode::NotAnEigenvector,
                  "element " + module.group().element_name(gens[i]) + " does not act by the stated root");
  }
}

namespace {

// Finds (k, c) with w = c * vectors[k], c a root of unity.
std::optional<std::pair<int, RootExponent>> locate(const RegularModule& module,
                                                   const std::vector<RegVector>& vectors,
                                                   const RegVector& w) {
  std::size_t p = 0;
  while (p < w.size() && w[p].is_zero()) ++p;
  if (p == w.size()) return std::nullopt;
  for (std::size_t k = 0; k < vectors.size(); ++k) {
    const auto r = vectors[k][p].as_root_of_unity();
    if (!r) continue;
    const CyclotomicInt ratio = cyclo_mul(w[p].lifted(module.conductor()),
                                          module.root(r->inverse()));
    const auto c = ratio.as_root_of_unity();
    if (!c) continue;
    if (module.scale(*c, vectors[k]) == w) return std::make_pair(static_cast<int>(k), c->canonical());
  }
  return std::nullopt;
}

}  // namespace

std::vector<MonomialMatrix> monomial_generator_matrices(const RegularModule& module,
                                                        const std::vector<RegVector>& vectors) {
  const Group& G = module.group();
  std::vector<MonomialMatrix> out;
  for (std::size_t gi = 0; gi < G.generators().size(); ++gi) {
    MonomialMatrix M;
    for (std::size_t j = 0; j < vectors.size(); ++j) {
      const auto hit = locate(module, vectors, module.act(G.generators()[gi], vectors[j]));
      if (!hit)
        throw Error(ErrorCode::NotClosed, "generator " + G.generator_names()[gi] +
                                              " sends vector " + std::to_string(j) +
                                              " outside the listed vectors");
      M.target.push_back(hit->first);
      M.coeff.push_back(hit->second);
    }
    out.push_back(std::move(M));
  }
  return out;
}

InducedSubspace induce_variables(const RegularModule& module, const std::vector<RegVector>& seeds,
                                 const std::vector<std::vector<std::uint32_t>>& transversals,
                                 std::vector<std::string> names) {
  if (seeds.size() != transversals.size())
    throw Error(ErrorCode::InvalidInput, "each seed needs its own transversal");
  InducedSubspace out;
  for (std::size_t s = 0; s < seeds.size(); ++s)
    for (std::uint32_t t : transversals[s]) out.vectors.push_back(module.act(t, seeds[s]));
  if (names.empty())
    for (std::size_t j = 0; j < out.vectors.size(); ++j) names.push_back("x" + std::to_string(j));
  if (names.size() != out.vectors.size())
    throw Error(ErrorCode::InvalidInput, "variable names do not match the number of vectors");
  out.names = std::move(names);
  out.generator_matrices = monomial_generator_matrices(module, out.vectors);
  return out;
}

std::vector<MonomialMatrix> induce_character(const Group& g,
                                             const std::vector<std::uint32_t>& subgroup_gens,
                                             const std::vector<RootExponent>& character,
                                             const std::vector<std::uint32_t>& transversal) {
  const auto chi = extend_character(g, subgroup_gens, character);
  if (transversal.size() * chi.size() != g.order())
    throw Error(ErrorCode::InvalidInput, "transversal size does not match the subgroup index");
  std::vector<int> coset(g.order(), -1);
  for (std::size_t i = 0; i < transversal.size(); ++i)
    for (const auto& entry : chi) {
      int& slot = coset[g.mul(transversal[i], entry.first)];
      if (slot != -1) throw Error(ErrorCode::InvalidInput, "transversal elements share a coset");
      slot = static_cast<int>(i);
    }
  std::vector<MonomialMatrix> out;
  for (std::uint32_t gen : g.generators()) {
    MonomialMatrix M;
    for (std::uint32_t t : transversal) {
      const std::uint32_t y = g.mul(gen, t);
      const int j = coset[y];
      const std::uint32_t h = g.mul(g.inv(transversal[static_cast<std::size_t>(j)]), y);
      M.target.push_back(j);
      M.coeff.push_back(chi.at(h).canonical());
    }
    out.push_back(std::move(M));
  }
  return out;
}

bool check_faithful(const Group& g, const std::vector<MonomialMatrix>& generator_matrices) {
  return matrix_closure(generator_matrices).size() == g.order();
}

bool check_faithful(const Group& g, const InducedSubspace& subspace) {
  return check_faithful(g, subspace.generator_matrices);
}

ActionAssignment to_assignment(const Group& g, const std::vector<MonomialMatrix>& matrices,
                               std::vector<std::string> names) {
  if (matrices.size() != g.generators().size())
    throw Error(ErrorCode::InvalidInput, "one matrix per generator is required");
  long long m = 1;
  for (const auto& M : matrices)
    for (const auto& c : M.coeff) m = lcm_ll(m, c.order());
  ActionAssignment out{g, {}, std::move(names)};
  for (const auto& M : matrices) {
    const int d = M.dim();
    IntMatrix A = IntMatrix::Zero(d, d);
    IntVector c = IntVector::Zero(d);
    for (int j = 0; j < d; ++j) {
      A(M.target[static_cast<std::size_t>(j)], j) = 1;
      c(j) = M.coeff[static_cast<std::size_t>(j)].exponent_over(m);
    }
    out.images.emplace_back(A, c, m);
  }
  return out;
}

}  // namespace noether
