#include "noether/laurent.hpp"

#include <algorithm>
#include <sstream>

#include "noether/error.hpp"

namespace noether {

LaurentPoly LaurentPoly::constant(int nvars, const CyclotomicInt& c) {
  LaurentPoly p(nvars);
  p.add_term(Exponents(static_cast<std::size_t>(nvars), 0), c);
  return p;
}

LaurentPoly LaurentPoly::monomial(const Exponents& exps, const CyclotomicInt& c) {
  LaurentPoly p(static_cast<int>(exps.size()));
  p.add_term(exps, c);
  return p;
}

LaurentPoly LaurentPoly::variable(int nvars, int index) {
  Exponents e(static_cast<std::size_t>(nvars), 0);
  e.at(static_cast<std::size_t>(index)) = 1;
  return monomial(e, CyclotomicInt(1));
}

bool LaurentPoly::is_unit_monomial() const {
  return terms_.size() == 1 && terms_.begin()->second.as_root_of_unity().has_value();
}

void LaurentPoly::add_term(const Exponents& exps, const CyclotomicInt& c) {
  if (static_cast<int>(exps.size()) != nvars_)
    throw Error(ErrorCode::DimMismatch, "term has wrong number of variables");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exps, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r(nvars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.nvars_ != nvars_) throw Error(ErrorCode::DimMismatch, "adding polynomials in different rings");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.nvars_ != b.nvars_)
    throw Error(ErrorCode::DimMismatch, "multiplying polynomials in different rings");
  LaurentPoly r(a.nvars_);
  Exponents e(static_cast<std::size_t>(a.nvars_));
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size()) return false;
  auto ia = a.terms_.begin();
  auto ib = b.terms_.begin();
  for (; ia != a.terms_.end(); ++ia, ++ib)
    if (ia->first != ib->first || !(ia->second == ib->second)) return false;
  return true;
}

LaurentPoly LaurentPoly::unit_inverse() const {
  if (!is_unit_monomial()) throw Error(ErrorCode::ZeroDenominator, "polynomial is not a unit");
  const auto& [e, c] = *terms_.begin();
  Exponents ne(e.size());
  for (std::size_t i = 0; i < e.size(); ++i) ne[i] = -e[i];
  return monomial(ne, CyclotomicInt::from_root(c.as_root_of_unity()->inverse()));
}

LaurentPoly LaurentPoly::pow(int e) const {
  if (e < 0) return unit_inverse().pow(-e);
  LaurentPoly result = constant(nvars_, CyclotomicInt(1));
  LaurentPoly base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

namespace {

std::string var_name(const std::vector<std::string>& names, std::size_t i) {
  return i < names.size() ? names[i] : "x" + std::to_string(i);
}

}  // namespace

std::string LaurentPoly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    std::ostringstream mono;
    bool any = false;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (any) mono << "*";
      mono << var_name(names, i);
      if (e[i] != 1) mono << "^" << e[i];
      any = true;
    }
    if (!any) os << "(" << c << ")";
    else if (c.is_one()) os << mono.str();
    else os << "(" << c << ")*" << mono.str();
  }
  return os.str();
}

LaurentFraction::LaurentFraction(int nvars)
    : num_(nvars), den_(LaurentPoly::constant(nvars, CyclotomicInt(1))) {}

LaurentFraction::LaurentFraction(LaurentPoly num)
    : num_(std::move(num)), den_(LaurentPoly::constant(num_.nvars(), CyclotomicInt(1))) {}

LaurentFraction::LaurentFraction(LaurentPoly num, LaurentPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (num_.nvars() != den_.nvars()) throw Error(ErrorCode::DimMismatch, "fraction parts differ");
  if (den_.is_zero()) throw Error(ErrorCode::ZeroDenominator, "denominator is zero");
  normalize();
}

LaurentFraction LaurentFraction::constant(int nvars, const CyclotomicInt& c) {
  return LaurentFraction(LaurentPoly::constant(nvars, c));
}

LaurentFraction LaurentFraction::variable(int nvars, int index) {
  return LaurentFraction(LaurentPoly::variable(nvars, index));
}

void LaurentFraction::normalize() {
  if (den_.is_unit_monomial()) {
    num_ = num_ * den_.unit_inverse();
    den_ = LaurentPoly::constant(num_.nvars(), CyclotomicInt(1));
  }
}

std::optional<std::pair<Exponents, CyclotomicInt>> LaurentFraction::as_unit_monomial() const {
  if (!den_.is_unit_monomial() || !num_.is_unit_monomial()) return std::nullopt;
  const LaurentPoly q = num_ * den_.unit_inverse();
  return *q.terms().begin();
}

LaurentFraction LaurentFraction::operator-() const { return LaurentFraction(-num_, den_); }

LaurentFraction operator+(const LaurentFraction& a, const LaurentFraction& b) {
  if (a.den_ == b.den_) return LaurentFraction(a.num_ + b.num_, a.den_);
  return LaurentFraction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

LaurentFraction operator-(const LaurentFraction& a, const LaurentFraction& b) { return a + (-b); }

LaurentFraction operator*(const LaurentFraction& a, const LaurentFraction& b) {
  return LaurentFraction(a.num_ * b.num_, a.den_ * b.den_);
}

LaurentFraction operator/(const LaurentFraction& a, const LaurentFraction& b) {
  if (b.num_.is_zero()) throw Error(ErrorCode::ZeroDenominator, "division by zero fraction");
  return LaurentFraction(a.num_ * b.den_, a.den_ * b.num_);
}

bool operator==(const LaurentFraction& a, const LaurentFraction& b) {
  if (a.nvars() != b.nvars()) return false;
  return a.num_ * b.den_ == b.num_ * a.den_;
}

bool fraction_equal(const LaurentFraction& a, const LaurentFraction& b) { return a == b; }

LaurentFraction LaurentFraction::pow(int e) const {
  if (e >= 0) return LaurentFraction(num_.pow(e), den_.pow(e));
  if (num_.is_zero()) throw Error(ErrorCode::ZeroDenominator, "negative power of zero");
  return LaurentFraction(den_.pow(-e), num_.pow(-e));
}

std::string LaurentFraction::to_string(const std::vector<std::string>& names) const {
  const bool trivial_den =
      den_.terms().size() == 1 && den_.terms().begin()->second.is_one() &&
      std::all_of(den_.terms().begin()->first.begin(), den_.terms().begin()->first.end(),
                  [](int v) { return v == 0; });
  if (trivial_den) return num_.to_string(names);
  return "(" + num_.to_string(names) + ")/(" + den_.to_string(names) + ")";
}

LaurentFraction poly_substitute(const LaurentPoly& p, const std::vector<LaurentFraction>& images) {
  if (static_cast<int>(images.size()) != p.nvars())
    throw Error(ErrorCode::DimMismatch, "substitution map does not cover every variable");
  if (images.empty()) {
    // zero-variable ring: constants only
    return LaurentFraction(p);
  }
  const int out = images.front().nvars();
  for (const auto& im : images)
    if (im.nvars() != out) throw Error(ErrorCode::DimMismatch, "substitution images disagree");

  const std::size_t d = images.size();
  std::vector<std::optional<LaurentPoly>> unit(d);
  std::vector<int> neg(d, 0), pos(d, 0);
  for (std::size_t i = 0; i < d; ++i) {
    if (auto m = images[i].as_unit_monomial()) unit[i] = LaurentPoly::monomial(m->first, m->second);
  }
  for (const auto& [e, c] : p.terms()) {
    for (std::size_t i = 0; i < d; ++i) {
      if (unit[i]) continue;
      neg[i] = std::max(neg[i], -e[i]);
      pos[i] = std::max(pos[i], e[i]);
    }
  }
  std::map<std::pair<std::size_t, int>, LaurentPoly> cache;
  auto power = [&](std::size_t i, int k, bool numerator_part) -> const LaurentPoly& {
    // numerator_part selects N_i (true) or D_i (false); keys are disambiguated by sign.
    const int key = numerator_part ? k : -(k + 1);
    auto it = cache.find({i, key});
    if (it != cache.end()) return it->second;
    const LaurentPoly& base =
        numerator_part ? images[i].numerator() : images[i].denominator();
    return cache.emplace(std::make_pair(i, key), base.pow(k)).first->second;
  };

  LaurentPoly num(out);
  for (const auto& [e, c] : p.terms()) {
    LaurentPoly term = LaurentPoly::constant(out, c);
    for (std::size_t i = 0; i < d; ++i) {
      if (unit[i]) {
        if (e[i] != 0) term = term * unit[i]->pow(e[i]);
        continue;
      }
      if (e[i] + neg[i] > 0) term = term * power(i, e[i] + neg[i], true);
      if (pos[i] - e[i] > 0) term = term * power(i, pos[i] - e[i], false);
    }
    num += term;
  }
  LaurentPoly den = LaurentPoly::constant(out, CyclotomicInt(1));
  for (std::size_t i = 0; i < d; ++i) {
    if (unit[i]) continue;
    if (neg[i] > 0) den = den * power(i, neg[i], true);
    if (pos[i] > 0) den = den * power(i, pos[i], false);
  }
  if (den.is_zero()) throw Error(ErrorCode::ZeroDenominator, "substitution annihilates a denominator");
  return LaurentFraction(std::move(num), std::move(den));
}

LaurentFraction fraction_substitute(const LaurentFraction& f,
                                    const std::vector<LaurentFraction>& images) {
  const LaurentFraction num = poly_substitute(f.numerator(), images);
  const LaurentFraction den = poly_substitute(f.denominator(), images);
  if (den.is_zero())
    throw Error(ErrorCode::ZeroDenominator, "substitution makes the denominator vanish");
  return num / den;
}

}  // namespace noether
