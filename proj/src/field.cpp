#include "noether/field.hpp"

#include <sstream>
#include <vector>

#include "noether/error.hpp"
#include "noether/int_matrix.hpp"

namespace noether {

bool SquareFlags::any_true() const {
  return minus_one.value_or(false) || two.value_or(false) || minus_two.value_or(false);
}

bool SquareFlags::all_false() const {
  return minus_one == false && two == false && minus_two == false;
}

long long FieldDescriptor::root_group_order() const {
  long long N = 1;
  for (long long m : roots) N = lcm_ll(N, m);
  return N;
}

FieldDescriptor FieldDescriptor::normalized() const {
  FieldDescriptor f = *this;
  if (characteristic != 2) f.roots.insert(2);
  const long long N = f.root_group_order();
  f.roots.clear();
  for (long long d = 1; d <= N; ++d)
    if (N % d == 0) f.roots.insert(d);
  if (f.has_root(4)) f.squares.minus_one = true;
  if (f.has_root(8)) f.squares.two = f.squares.minus_two = true;
  // Two of the three classes being squares forces the third.
  const auto& s = f.squares;
  if (s.minus_one == true && s.two == true) f.squares.minus_two = true;
  if (s.minus_one == true && s.minus_two == true) f.squares.two = true;
  if (s.two == true && s.minus_two == true) f.squares.minus_one = true;
  f.validate();
  return f;
}

void FieldDescriptor::validate() const {
  if (characteristic < 0) throw Error(ErrorCode::InvalidInput, "negative characteristic");
  if (characteristic > 0) {
    for (long long d = 2; d * d <= characteristic; ++d)
      if (characteristic % d == 0) throw Error(ErrorCode::InvalidInput, "characteristic must be 0 or prime");
    if (characteristic == 1) throw Error(ErrorCode::InvalidInput, "characteristic must be 0 or prime");
  }
  for (long long m : roots) {
    if (m <= 0) throw Error(ErrorCode::InvalidInput, "root orders must be positive");
    if (characteristic > 0 && m % characteristic == 0)
      throw Error(ErrorCode::InvalidInput, "zeta_" + std::to_string(m) + " cannot exist in characteristic " +
                                               std::to_string(characteristic));
    for (long long d = 1; d <= m; ++d)
      if (m % d == 0 && !has_root(d))
        throw Error(ErrorCode::InvalidInput, "root set is not closed under divisors");
  }
  if (has_root(4) && squares.minus_one == false)
    throw Error(ErrorCode::InvalidInput, "zeta_4 in k makes -1 a square");
  if (has_root(8) && (squares.two == false || squares.minus_two == false))
    throw Error(ErrorCode::InvalidInput, "zeta_8 in k makes 2 and -2 squares");
  if (finite && characteristic != 2 && squares.all_false())
    throw Error(ErrorCode::InvalidInput, "in a finite field one of -1, 2, -2 is a square");
}

std::string FieldDescriptor::to_string() const {
  std::ostringstream os;
  os << "char " << characteristic << ", roots {";
  bool first = true;
  for (long long m : roots) {
    os << (first ? "" : ",") << m;
    first = false;
  }
  const auto flag = [](const std::optional<bool>& b) { return b ? (*b ? "yes" : "no") : "?"; };
  os << "}, squares -1:" << flag(squares.minus_one) << " 2:" << flag(squares.two)
     << " -2:" << flag(squares.minus_two);
  if (finite) os << ", finite";
  return os.str();
}

FieldDescriptor FieldDescriptor::with_root(long long m, long long characteristic) {
  FieldDescriptor f;
  f.characteristic = characteristic;
  f.roots = {m};
  return f.normalized();
}

FieldDescriptor minimal_case_field(int n) {
  return FieldDescriptor::with_root(n >= 3 ? (1LL << (n - 3)) : 1);
}

}  // namespace noether
