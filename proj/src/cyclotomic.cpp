#include "noether/cyclotomic.hpp"

#include <numeric>
#include <sstream>

#include "noether/error.hpp"

namespace noether {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidParameter: return "InvalidParameter";
    case ErrorCode::NotAGroup: return "NotAGroup";
    case ErrorCode::MixedGroups: return "MixedGroups";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::ConductorMismatch: return "ConductorMismatch";
    case ErrorCode::ZeroDenominator: return "ZeroDenominator";
    case ErrorCode::DimMismatch: return "DimMismatch";
    case ErrorCode::ModulusMismatch: return "ModulusMismatch";
    case ErrorCode::NotMonomial: return "NotMonomial";
    case ErrorCode::NotAnEigenvector: return "NotAnEigenvector";
    case ErrorCode::NotClosed: return "NotClosed";
    case ErrorCode::ClosureTooLarge: return "ClosureTooLarge";
    case ErrorCode::NotScalar: return "NotScalar";
    case ErrorCode::NonIntegralConjugate: return "NonIntegralConjugate";
    case ErrorCode::ShapeViolation: return "ShapeViolation";
    case ErrorCode::DimUnsupported: return "DimUnsupported";
    case ErrorCode::ScriptRangeError: return "ScriptRangeError";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

namespace {

std::int64_t mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::size_t length_for(std::int64_t conductor) {
  return conductor <= 2 ? 1 : static_cast<std::size_t>(conductor / 2);
}

}  // namespace

RootExponent::RootExponent(std::int64_t m, std::int64_t c) : modulus(m), exponent(0) {
  if (m <= 0) throw Error(ErrorCode::InvalidParameter, "root-of-unity modulus must be positive");
  exponent = mod(c, m);
}

std::int64_t RootExponent::order() const {
  return modulus / std::gcd(modulus, exponent);
}

RootExponent RootExponent::lifted(std::int64_t m) const {
  if (m % modulus != 0) throw Error(ErrorCode::ModulusMismatch, "cannot lift root of unity");
  return {m, exponent * (m / modulus)};
}

RootExponent RootExponent::canonical() const {
  const std::int64_t g = std::gcd(modulus, exponent);
  return {modulus / g, exponent / g};
}

std::int64_t RootExponent::exponent_over(std::int64_t m) const {
  const RootExponent c = canonical();
  if (m % c.modulus != 0) throw Error(ErrorCode::ModulusMismatch, "root of unity not in <zeta_m>");
  return c.exponent * (m / c.modulus);
}

RootExponent operator*(const RootExponent& a, const RootExponent& b) {
  const std::int64_t m = std::lcm(a.modulus, b.modulus);
  const auto la = a.lifted(m), lb = b.lifted(m);
  return {m, la.exponent + lb.exponent};
}

bool operator==(const RootExponent& a, const RootExponent& b) {
  const std::int64_t m = std::lcm(a.modulus, b.modulus);
  return a.lifted(m).exponent == b.lifted(m).exponent;
}

std::ostream& operator<<(std::ostream& os, const RootExponent& r) {
  return os << "zeta_" << r.modulus << "^" << r.exponent;
}

bool CyclotomicInt::valid_conductor(std::int64_t m) {
  return m >= 1 && (m & (m - 1)) == 0;
}

CyclotomicInt::CyclotomicInt(std::int64_t value, std::int64_t conductor)
    : conductor_(conductor), coeffs_() {
  if (!valid_conductor(conductor))
    throw Error(ErrorCode::InvalidParameter, "conductor must be a power of two");
  coeffs_.assign(length_for(conductor), 0);
  coeffs_[0] = value;
}

CyclotomicInt CyclotomicInt::zeta(std::int64_t conductor, std::int64_t exponent) {
  if (!valid_conductor(conductor))
    throw Error(ErrorCode::InvalidParameter, "conductor must be a power of two");
  if (conductor == 1) return CyclotomicInt(1, 1);
  if (conductor == 2) return CyclotomicInt(mod(exponent, 2) == 0 ? 1 : -1, 2);
  const std::int64_t half = conductor / 2;
  std::int64_t e = mod(exponent, conductor);
  std::vector<std::int64_t> c(static_cast<std::size_t>(half), 0);
  if (e < half) c[static_cast<std::size_t>(e)] = 1;
  else c[static_cast<std::size_t>(e - half)] = -1;
  return {conductor, std::move(c)};
}

CyclotomicInt CyclotomicInt::from_root(const RootExponent& r) {
  if (!valid_conductor(r.modulus))
    throw Error(ErrorCode::InvalidParameter, "root of unity outside 2-power cyclotomics");
  return zeta(r.modulus, r.exponent);
}

CyclotomicInt CyclotomicInt::lifted(std::int64_t conductor) const {
  if (!valid_conductor(conductor) || conductor % conductor_ != 0)
    throw Error(ErrorCode::ConductorMismatch, "cannot lift to a smaller conductor");
  if (conductor == conductor_) return *this;
  std::vector<std::int64_t> c(length_for(conductor), 0);
  if (conductor_ <= 2) {
    c[0] = coeffs_[0];
  } else {
    const std::size_t step = static_cast<std::size_t>(conductor / conductor_);
    for (std::size_t j = 0; j < coeffs_.size(); ++j) c[j * step] = coeffs_[j];
  }
  return {conductor, std::move(c)};
}

bool CyclotomicInt::is_zero() const {
  for (auto v : coeffs_)
    if (v != 0) return false;
  return true;
}

bool CyclotomicInt::is_one() const {
  if (coeffs_[0] != 1) return false;
  for (std::size_t j = 1; j < coeffs_.size(); ++j)
    if (coeffs_[j] != 0) return false;
  return true;
}

std::optional<RootExponent> CyclotomicInt::as_root_of_unity() const {
  std::optional<std::size_t> pos;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j] == 0) continue;
    if (pos || (coeffs_[j] != 1 && coeffs_[j] != -1)) return std::nullopt;
    pos = j;
  }
  if (!pos) return std::nullopt;
  const std::int64_t m = std::max<std::int64_t>(conductor_, 2);
  std::int64_t e = static_cast<std::int64_t>(*pos);
  if (coeffs_[*pos] == -1) e += m / 2;
  return RootExponent(m, e);
}

CyclotomicInt CyclotomicInt::operator-() const {
  CyclotomicInt r = *this;
  for (auto& v : r.coeffs_) v = -v;
  return r;
}

CyclotomicInt& CyclotomicInt::operator+=(const CyclotomicInt& o) {
  const std::int64_t m = std::max(conductor_, o.conductor_);
  *this = lifted(m);
  const CyclotomicInt b = o.lifted(m);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] += b.coeffs_[j];
  return *this;
}

CyclotomicInt& CyclotomicInt::operator-=(const CyclotomicInt& o) { return *this += -o; }

CyclotomicInt& CyclotomicInt::operator*=(const CyclotomicInt& o) {
  const std::int64_t m = std::max(conductor_, o.conductor_);
  *this = cyclo_mul(lifted(m), o.lifted(m));
  return *this;
}

CyclotomicInt cyclo_mul(const CyclotomicInt& a, const CyclotomicInt& b) {
  if (a.conductor_ != b.conductor_)
    throw Error(ErrorCode::ConductorMismatch,
                "conductors " + std::to_string(a.conductor_) + " and " +
                    std::to_string(b.conductor_));
  const std::size_t len = a.coeffs_.size();
  std::vector<std::int64_t> c(len, 0);
  // negacyclic convolution: x^{len} = -1
  for (std::size_t i = 0; i < len; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < len; ++j) {
      const std::int64_t p = a.coeffs_[i] * b.coeffs_[j];
      const std::size_t k = i + j;
      if (k < len) c[k] += p;
      else c[k - len] -= p;
    }
  }
  if (a.conductor_ <= 2) c[0] = a.coeffs_[0] * b.coeffs_[0];
  return {a.conductor_, std::move(c)};
}

bool operator==(const CyclotomicInt& a, const CyclotomicInt& b) {
  const std::int64_t m = std::max(a.conductor_, b.conductor_);
  const CyclotomicInt la = a.lifted(m), lb = b.lifted(m);
  return la.coeffs_ == lb.coeffs_;
}

std::string CyclotomicInt::to_string() const {
  std::ostringstream os;
  bool any = false;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    const std::int64_t v = coeffs_[j];
    if (v == 0) continue;
    if (any) os << (v < 0 ? " - " : " + ");
    else if (v < 0) os << "-";
    const std::int64_t a = v < 0 ? -v : v;
    if (j == 0) {
      os << a;
    } else {
      if (a != 1) os << a << "*";
      os << "z" << conductor_;
      if (j > 1) os << "^" << j;
    }
    any = true;
  }
  if (!any) os << "0";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const CyclotomicInt& c) { return os << c.to_string(); }

}  // namespace noether
