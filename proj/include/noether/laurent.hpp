#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "noether/cyclotomic.hpp"

namespace noether {

using Exponents = std::vector<int>;

/// Sparse Laurent polynomial in a fixed number of variables with cyclotomic
/// coefficients. Zero coefficients are never stored.
class LaurentPoly {
 public:
  using Terms = std::map<Exponents, CyclotomicInt>;

  explicit LaurentPoly(int nvars = 0) : nvars_(nvars) {}

  static LaurentPoly constant(int nvars, const CyclotomicInt& c);
  static LaurentPoly monomial(const Exponents& exps, const CyclotomicInt& c);
  static LaurentPoly variable(int nvars, int index);

  int nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Single term whose coefficient is a root of unity, i.e. a unit of the ring.
  bool is_unit_monomial() const;

  void add_term(const Exponents& exps, const CyclotomicInt& c);

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);

  /// Non-negative power; negative exponents are allowed only for unit monomials.
  LaurentPoly pow(int e) const;
  /// Inverse of a unit monomial.
  LaurentPoly unit_inverse() const;

  std::string to_string(const std::vector<std::string>& names = {}) const;

 private:
  int nvars_;
  Terms terms_;
};

/// Quotient of two Laurent polynomials. Equality is decided by
/// cross-multiplication, so no gcd is ever taken.
class LaurentFraction {
 public:
  explicit LaurentFraction(int nvars = 0);
  LaurentFraction(LaurentPoly num);
  LaurentFraction(LaurentPoly num, LaurentPoly den);

  static LaurentFraction constant(int nvars, const CyclotomicInt& c);
  static LaurentFraction variable(int nvars, int index);

  int nvars() const { return num_.nvars(); }
  const LaurentPoly& numerator() const { return num_; }
  const LaurentPoly& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  /// When the fraction is c * x^e with c a root of unity, returns that term.
  std::optional<std::pair<Exponents, CyclotomicInt>> as_unit_monomial() const;

  LaurentFraction operator-() const;
  friend LaurentFraction operator+(const LaurentFraction& a, const LaurentFraction& b);
  friend LaurentFraction operator-(const LaurentFraction& a, const LaurentFraction& b);
  friend LaurentFraction operator*(const LaurentFraction& a, const LaurentFraction& b);
  friend LaurentFraction operator/(const LaurentFraction& a, const LaurentFraction& b);
  friend bool operator==(const LaurentFraction& a, const LaurentFraction& b);

  LaurentFraction pow(int e) const;

  std::string to_string(const std::vector<std::string>& names = {}) const;

 private:
  void normalize();

  LaurentPoly num_;
  LaurentPoly den_;
};

bool fraction_equal(const LaurentFraction& a, const LaurentFraction& b);

/// Simultaneous substitution x_i -> images[i]. All images share a variable count.
LaurentFraction fraction_substitute(const LaurentFraction& f,
                                    const std::vector<LaurentFraction>& images);
LaurentFraction poly_substitute(const LaurentPoly& p, const std::vector<LaurentFraction>& images);

}  // namespace noether
