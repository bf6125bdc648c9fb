#include <algorithm>
#include <map>

#include "noether/error.hpp"
#include "noether/group.hpp"

namespace noether {

namespace {

// One step of a cyclic extension: adjoin g with g^k = z and g^-1 y g = phi(y).
struct StepData {
  int k = 2;
  std::string z = "1";
  std::vector<std::string> images;  // phi of each existing chain generator
};

struct FamilyDef {
  int id;
  int cls;
  bool tau_first;  // chain starts from <tau> and adjoins sigma
  int base_order_exp_offset;
  std::vector<StepData> steps;
  std::vector<std::string> relations;
};

// Group under construction: elements carry exponent coordinates along the chain.
struct Chain {
  std::size_t order = 0;
  std::vector<std::uint32_t> mul;
  std::vector<std::vector<int>> coords;
  std::vector<std::uint32_t> gens;

  std::uint32_t m(std::uint32_t a, std::uint32_t b) const { return mul[a * order + b]; }
  std::uint32_t inv(std::uint32_t a) const {
    for (std::uint32_t b = 0; b < order; ++b)
      if (m(a, b) == 0) return b;
    throw Error(ErrorCode::NotAGroup, "element without inverse");
  }
  std::uint32_t pow(std::uint32_t a, long long e) const {
    if (e < 0) {
      a = inv(a);
      e = -e;
    }
    std::uint32_t r = 0;
    for (long long i = 0; i < e; ++i) r = m(r, a);
    return r;
  }
  std::uint32_t eval(const Word& w) const {
    std::uint32_t r = 0;
    for (const auto& [g, e] : w) r = m(r, pow(gens.at(static_cast<std::size_t>(g)), e));
    return r;
  }
};

Chain cyclic_chain(std::size_t n) {
  Chain c;
  c.order = n;
  c.mul.resize(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    c.coords.push_back({static_cast<int>(a)});
    for (std::size_t b = 0; b < n; ++b) c.mul[a * n + b] = static_cast<std::uint32_t>((a + b) % n);
  }
  c.gens = {n > 1 ? 1u : 0u};
  return c;
}

[[noreturn]] void inconsistent(const std::string& what) {
  throw Error(ErrorCode::InvalidParameter, "presentation data inconsistent: " + what);
}

Chain extend(const Chain& base, int k, std::uint32_t z, const std::vector<std::uint32_t>& images) {
  const std::size_t n = base.order;
  std::vector<std::uint32_t> phi(n);
  for (std::size_t y = 0; y < n; ++y) {
    std::uint32_t r = 0;
    for (std::size_t i = 0; i < images.size(); ++i) r = base.m(r, base.pow(images[i], base.coords[y][i]));
    phi[y] = r;
  }
  std::vector<std::uint32_t> psi(n, n);
  for (std::size_t y = 0; y < n; ++y) {
    if (psi[phi[y]] != n) inconsistent("conjugation is not bijective");
    psi[phi[y]] = static_cast<std::uint32_t>(y);
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (phi[base.m(static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b))] !=
          base.m(phi[a], phi[b]))
        inconsistent("conjugation is not a homomorphism");
  if (phi[z] != z) inconsistent("power of the new generator is not fixed");
  const std::uint32_t zi = base.inv(z);
  for (std::size_t y = 0; y < n; ++y) {
    std::uint32_t v = static_cast<std::uint32_t>(y);
    for (int i = 0; i < k; ++i) v = phi[v];
    if (v != base.m(base.m(zi, static_cast<std::uint32_t>(y)), z))
      inconsistent("k-th power of conjugation disagrees with z");
  }
  std::vector<std::vector<std::uint32_t>> psi_pow(static_cast<std::size_t>(k));
  psi_pow[0].resize(n);
  for (std::size_t y = 0; y < n; ++y) psi_pow[0][y] = static_cast<std::uint32_t>(y);
  for (int i = 1; i < k; ++i) {
    psi_pow[static_cast<std::size_t>(i)].resize(n);
    for (std::size_t y = 0; y < n; ++y)
      psi_pow[static_cast<std::size_t>(i)][y] = psi[psi_pow[static_cast<std::size_t>(i - 1)][y]];
  }
  Chain out;
  const std::size_t kk = static_cast<std::size_t>(k);
  out.order = n * kk;
  out.mul.resize(out.order * out.order);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t i = 0; i < kk; ++i) {
      auto c = base.coords[x];
      c.push_back(static_cast<int>(i));
      out.coords.push_back(std::move(c));
    }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t i = 0; i < kk; ++i)
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t j = 0; j < kk; ++j) {
          std::uint32_t r = base.m(static_cast<std::uint32_t>(x), psi_pow[i][y]);
          if (i + j >= kk) r = base.m(r, z);
          out.mul[(x * kk + i) * out.order + (y * kk + j)] =
              static_cast<std::uint32_t>(r * kk + (i + j) % kk);
        }
  for (std::uint32_t g : base.gens) out.gens.push_back(static_cast<std::uint32_t>(g * kk));
  out.gens.push_back(1);
  return out;
}

const std::vector<FamilyDef>& definitions() {
  static const std::vector<FamilyDef> defs = {
      {1, 1, false, 0, {{4, "1", {"s^(1+h)"}}},
       {"s^P = 1", "t^4 = 1", "t^-1 s t = s^(1+h)"}},
      {2, 1, false, 0, {{2, "s^h", {"s^-1"}}, {2, "1", {"s", "t"}}},
       {"s^P = 1", "l^2 = 1", "s^h = t^2", "t^-1 s t = s^-1", "s l = l s", "t l = l t"}},
      {3, 1, false, 0, {{2, "1", {"s^-1"}}, {2, "1", {"s", "t"}}},
       {"s^P = 1", "t^2 = 1", "l^2 = 1", "t^-1 s t = s^-1", "s l = l s", "t l = l t"}},
      {4, 1, false, 0, {{2, "1", {"s"}}, {2, "1", {"s", "s^h t"}}},
       {"s^P = 1", "t^2 = 1", "l^2 = 1", "s t = t s", "s l = l s", "l^-1 t l = s^h t"}},
      {5, 1, false, 0, {{2, "1", {"s"}}, {2, "1", {"s t", "t"}}},
       {"s^P = 1", "t^2 = 1", "l^2 = 1", "s t = t s", "l^-1 s l = s t", "t l = l t"}},
      {6, 2, false, 0, {{4, "1", {"s^-1"}}}, {"s^P = 1", "t^4 = 1", "t^-1 s t = s^-1"}},
      {7, 2, false, 0, {{4, "1", {"s^(-1+h)"}}}, {"s^P = 1", "t^4 = 1", "t^-1 s t = s^(-1+h)"}},
      {8, 2, false, 0, {{4, "s^h", {"s^-1"}}}, {"s^P = 1", "s^h = t^4", "t^-1 s t = s^-1"}},
      {9, 2, true, 4, {{-1, "1", {"t^-1"}}}, {"s^P = 1", "t^4 = 1", "s^-1 t s = t^-1"}},
      {10, 2, false, 0, {{2, "1", {"s^(1+h)"}}, {2, "1", {"s", "t"}}},
       {"s^P = 1", "t^2 = 1", "l^2 = 1", "t^-1 s t = s^(1+h)", "s l = l s", "t l = l t"}},
      {11, 2, false, 0, {{2, "1", {"s^(-1+h)"}}, {2, "1", {"s", "t"}}},
       {"s^P = 1", "t^2 = 1", "l^2 = 1", "t^-1 s t = s^(-1+h)", "s l = l s", "t l = l t"}},
      {12, 2, false, 0, {{2, "1", {"s"}}, {2, "1", {"s^-1", "s^h t"}}},
       {"s^P = 1", "t^2 = 1", "l^2 = 1", "s t = t s", "l^-1 s l = s^-1", "l^-1 t l = s^h t"}},
      {13, 2, false, 0, {{2, "1", {"s"}}, {2, "1", {"s^-1 t", "t"}}},
       {"s^P = 1", "t^2 = 1", "l^2 = 1", "s t = t s", "l^-1 s l = s^-1 t", "t l = l t"}},
      {14, 2, false, 0, {{2, "1", {"s"}}, {2, "s^h", {"s^-1 t", "t"}}},
       {"s^P = 1", "t^2 = 1", "s^h = l^2", "s t = t s", "l^-1 s l = s^-1 t", "t l = l t"}},
      {15, 2, false, 0, {{2, "1", {"s^(1+h)"}}, {2, "1", {"s^(-1+h)", "t"}}},
       {"s^P = 1", "t^2 = 1", "l^2 = 1", "t^-1 s t = s^(1+h)", "l^-1 s l = s^(-1+h)", "t l = l t"}},
      {16, 2, false, 0, {{2, "1", {"s^(1+h)"}}, {2, "1", {"s^(-1+h)", "s^h t"}}},
       {"s^P = 1", "t^2 = 1", "l^2 = 1", "t^-1 s t = s^(1+h)", "l^-1 s l = s^(-1+h)",
        "l^-1 t l = s^h t"}},
      {17, 2, false, 0, {{2, "1", {"s^(1+h)"}}, {2, "1", {"s t", "t"}}},
       {"s^P = 1", "t^2 = 1", "l^2 = 1", "t^-1 s t = s^(1+h)", "l^-1 s l = s t", "t l = l t"}},
      {18, 2, false, 0, {{2, "1", {"s^(1+h)"}}, {2, "t", {"s^-1 t", "t"}}},
       {"s^P = 1", "t^2 = 1", "l^2 = t", "t^-1 s t = s^(1+h)", "l^-1 s l = s^-1 t"}},
      {19, 3, false, 0, {{4, "1", {"s^(1+q)"}}}, {"s^P = 1", "t^4 = 1", "t^-1 s t = s^(1+q)"}},
      {20, 3, false, 0, {{4, "1", {"s^(-1+q)"}}}, {"s^P = 1", "t^4 = 1", "t^-1 s t = s^(-1+q)"}},
      {21, 3, true, 8, {{-2, "t^4", {"t^-1"}}}, {"s^P = 1", "s^h = t^4", "s^-1 t s = t^-1"}},
      {22, 3, false, 0, {{2, "1", {"s"}}, {2, "1", {"s^(1+q) t", "s^h t"}}},
       {"s^P = 1", "t^2 = 1", "l^2 = 1", "s t = t s", "l^-1 s l = s^(1+q) t", "l^-1 t l = s^h t"}},
      {23, 3, false, 0, {{2, "1", {"s"}}, {2, "1", {"s^(-1+q) t", "s^h t"}}},
       {"s^P = 1", "t^2 = 1", "l^2 = 1", "s t = t s", "l^-1 s l = s^(-1+q) t",
        "l^-1 t l = s^h t"}},
      {24, 3, false, 0, {{2, "1", {"s^(1+h)"}}, {2, "1", {"s^(-1+q) t", "t"}}},
       {"s^P = 1", "t^2 = 1", "l^2 = 1", "t^-1 s t = s^(1+h)", "l^-1 s l = s^(-1+q) t",
        "t l = l t"}},
      {25, 3, false, 0, {{2, "1", {"s^(1+h)"}}, {2, "s^h", {"s^(-1+q) t", "t"}}},
       {"s^P = 1", "t^2 = 1", "s^h = l^2", "t^-1 s t = s^(1+h)", "l^-1 s l = s^(-1+q) t",
        "t l = l t"}},
      {26, 4, false, 0, {{2, "1", {"s^5"}}, {2, "s^4", {"s t", "t"}}},
       {"s^8 = 1", "t^2 = 1", "s^4 = l^2", "t^-1 s t = s^5", "l^-1 s l = s t", "t l = l t"}},
  };
  return defs;
}

const FamilyDef& definition(int id) {
  if (id < 1 || id > 26) throw Error(ErrorCode::InvalidParameter, "family id must be 1..26");
  return definitions()[static_cast<std::size_t>(id - 1)];
}

}  // namespace

int family_class(int id) { return definition(id).cls; }

int family_min_n(int id) {
  switch (family_class(id)) {
    case 1: return 4;
    case 2: return 5;
    case 3: return 6;
    default: return 5;
  }
}

bool family_accepts(int id, int n) {
  if (family_class(id) == 4) return n == 5;
  return n >= family_min_n(id);
}

Group family_group(int id, int n) {
  const FamilyDef& def = definition(id);
  if (!family_accepts(id, n))
    throw Error(ErrorCode::InvalidParameter,
                "G" + std::to_string(id) + " is not defined for n=" + std::to_string(n));
  if (n >= 62 || (std::size_t{1} << n) > max_order_guard())
    throw Error(ErrorCode::TooLarge, "group order 2^" + std::to_string(n) + " exceeds the guard");
  const long long P = 1LL << (n - 2);
  const long long h = 1LL << (n - 3);

  Chain chain;
  std::vector<std::string> chain_symbols;
  if (def.tau_first) {
    chain = cyclic_chain(static_cast<std::size_t>(def.base_order_exp_offset));
    chain_symbols = {"t"};
    const StepData& st = def.steps[0];
    const int k = static_cast<int>(st.k == -1 ? P : h);
    std::vector<std::uint32_t> imgs;
    for (const auto& w : st.images) imgs.push_back(chain.eval(parse_word(w, chain_symbols, n)));
    chain = extend(chain, k, chain.eval(parse_word(st.z, chain_symbols, n)), imgs);
    chain_symbols.push_back("s");
  } else {
    chain = cyclic_chain(static_cast<std::size_t>(P));
    chain_symbols = {"s"};
    const char* next[] = {"t", "l"};
    for (std::size_t s = 0; s < def.steps.size(); ++s) {
      const StepData& st = def.steps[s];
      std::vector<std::uint32_t> imgs;
      for (const auto& w : st.images) imgs.push_back(chain.eval(parse_word(w, chain_symbols, n)));
      chain = extend(chain, st.k, chain.eval(parse_word(st.z, chain_symbols, n)), imgs);
      chain_symbols.push_back(next[s]);
    }
  }
  if (chain.order != (std::size_t{1} << n)) inconsistent("order is not 2^n");

  const auto chain_gen = [&](const std::string& sym) {
    const auto it = std::find(chain_symbols.begin(), chain_symbols.end(), sym);
    return chain.gens[static_cast<std::size_t>(it - chain_symbols.begin())];
  };
  const bool has_lambda = chain_symbols.size() == 3;
  FamilyInfo info;
  info.id = id;
  info.n = n;
  info.bounds = {static_cast<int>(P), has_lambda ? 2 : 4, has_lambda ? 2 : 1};
  const std::size_t N = chain.order;
  std::vector<std::uint32_t> to_chain(N), from_chain(N, static_cast<std::uint32_t>(N));
  const std::uint32_t gs = chain_gen("s"), gt = chain_gen("t");
  const std::uint32_t gl = has_lambda ? chain_gen("l") : 0;
  for (int a = 0; a < info.bounds[0]; ++a)
    for (int b = 0; b < info.bounds[1]; ++b)
      for (int c = 0; c < info.bounds[2]; ++c) {
        const std::uint32_t e =
            chain.m(chain.m(chain.pow(gs, a), chain.pow(gt, b)), chain.pow(gl, c));
        const std::size_t idx = (static_cast<std::size_t>(a) * info.bounds[1] + b) * info.bounds[2] + c;
        if (from_chain[e] != N) inconsistent("normal forms are not unique");
        to_chain[idx] = e;
        from_chain[e] = static_cast<std::uint32_t>(idx);
      }

  auto data = std::make_shared<GroupData>();
  data->name = "G" + std::to_string(id) + "@n=" + std::to_string(n);
  data->order = N;
  data->table.resize(N * N);
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j)
      data->table[i * N + j] = from_chain[chain.m(to_chain[i], to_chain[j])];
  data->inverses.resize(N);
  for (std::size_t i = 0; i < N; ++i) data->inverses[i] = from_chain[chain.inv(to_chain[i])];
  const std::uint32_t stride_b = static_cast<std::uint32_t>(info.bounds[2]);
  const std::uint32_t stride_a = static_cast<std::uint32_t>(info.bounds[1] * info.bounds[2]);
  data->generators = {stride_a, stride_b};
  data->generator_names = {"sigma", "tau"};
  if (has_lambda) {
    data->generators.push_back(1);
    data->generator_names.push_back("lambda");
  }
  data->family = info;
  const std::vector<std::string> symbols{"s", "t", "l"};
  for (const auto& r : def.relations) data->relations.push_back(parse_relation(r, symbols, n));
  Group g(data);
  for (const auto& r : g.relations())
    if (g.evaluate(r.lhs) != g.evaluate(r.rhs)) inconsistent("relation fails: " + r.text);
  return g;
}

Group build_group(const GroupSpec& spec) {
  return std::visit(
      [](const auto& s) -> Group {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, FamilySpec>) return family_group(s.id, s.n);
        else if constexpr (std::is_same_v<T, CayleySpec>) return cayley_group(s.table);
        else return permutation_group(s.degree, s.generators);
      },
      spec);
}

}  // namespace noether
