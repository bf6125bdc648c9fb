#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace noether {

/// A root of unity zeta_m^c, kept as an exponent modulo m.
struct RootExponent {
  std::int64_t modulus = 1;
  std::int64_t exponent = 0;

  RootExponent() = default;
  RootExponent(std::int64_t m, std::int64_t c);

  /// Multiplicative order of the element.
  std::int64_t order() const;
  RootExponent inverse() const { return {modulus, -exponent}; }
  /// Same element written over modulus `m`; `modulus` must divide `m`.
  RootExponent lifted(std::int64_t m) const;
  /// Same element over its own order as modulus.
  RootExponent canonical() const;
  /// Exponent of this element over modulus m; requires order() | m.
  std::int64_t exponent_over(std::int64_t m) const;

  friend RootExponent operator*(const RootExponent& a, const RootExponent& b);
  friend bool operator==(const RootExponent& a, const RootExponent& b);
};

std::ostream& operator<<(std::ostream& os, const RootExponent& r);

/// Element of Z[zeta_M] for M a power of two, stored on the power basis
/// 1, zeta, ..., zeta^{M/2-1} of Z[x]/(x^{M/2}+1). Conductors 1 and 2 use a
/// single integer coefficient.
class CyclotomicInt {
 public:
  CyclotomicInt() : conductor_(1), coeffs_(1, 0) {}
  explicit CyclotomicInt(std::int64_t value, std::int64_t conductor = 1);

  static CyclotomicInt zeta(std::int64_t conductor, std::int64_t exponent = 1);
  static CyclotomicInt from_root(const RootExponent& r);
  static bool valid_conductor(std::int64_t m);

  std::int64_t conductor() const { return conductor_; }
  std::span<const std::int64_t> coeffs() const { return coeffs_; }

  CyclotomicInt lifted(std::int64_t conductor) const;
  bool is_zero() const;
  bool is_one() const;
  /// When the element is a root of unity zeta_M^e, returns it with modulus max(M, 2).
  std::optional<RootExponent> as_root_of_unity() const;

  CyclotomicInt operator-() const;
  CyclotomicInt& operator+=(const CyclotomicInt& o);
  CyclotomicInt& operator-=(const CyclotomicInt& o);
  CyclotomicInt& operator*=(const CyclotomicInt& o);

  friend CyclotomicInt operator+(CyclotomicInt a, const CyclotomicInt& b) { return a += b; }
  friend CyclotomicInt operator-(CyclotomicInt a, const CyclotomicInt& b) { return a -= b; }
  friend CyclotomicInt operator*(CyclotomicInt a, const CyclotomicInt& b) { return a *= b; }
  friend bool operator==(const CyclotomicInt& a, const CyclotomicInt& b);

  std::string to_string() const;

 private:
  CyclotomicInt(std::int64_t conductor, std::vector<std::int64_t> coeffs)
      : conductor_(conductor), coeffs_(std::move(coeffs)) {}
  friend CyclotomicInt cyclo_mul(const CyclotomicInt&, const CyclotomicInt&);

  std::int64_t conductor_;
  std::vector<std::int64_t> coeffs_;
};

/// Strict product: both operands must share a conductor.
CyclotomicInt cyclo_mul(const CyclotomicInt& a, const CyclotomicInt& b);

std::ostream& operator<<(std::ostream& os, const CyclotomicInt& c);

}  // namespace noether
