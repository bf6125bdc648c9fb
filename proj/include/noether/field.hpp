#pragma once

#include <optional>
#include <set>
#include <string>

namespace noether {

/// Whether -1, 2, -2 are squares in k. An empty optional means "not known".
struct SquareFlags {
  std::optional<bool> minus_one = false;
  std::optional<bool> two = false;
  std::optional<bool> minus_two = false;

  bool any_true() const;
  bool all_false() const;
};

/// A field known only through the facts the rationality rules consult.
struct FieldDescriptor {
  long long characteristic = 0;
  /// Orders m with zeta_m in k.
  std::set<long long> roots{1};
  SquareFlags squares;
  bool finite = false;

  bool has_root(long long m) const { return roots.count(m) != 0; }
  bool has_sqrt_minus_one() const { return has_root(4); }
  /// Order of the group of roots of unity recorded in the descriptor.
  long long root_group_order() const;

  /// Closes the root set under divisors and lcm, sets the square flags that
  /// follow from zeta_4 or zeta_8, and checks the remaining constraints.
  FieldDescriptor normalized() const;
  /// Throws InvalidInput when the descriptor is inconsistent.
  void validate() const;

  std::string to_string() const;

  /// Characteristic 0 with exactly the roots of unity dividing m.
  static FieldDescriptor with_root(long long m, long long characteristic = 0);
};

/// k with zeta_{2^{n-3}} and nothing more (the standing assumption for the
/// 2-group cases).
FieldDescriptor minimal_case_field(int n);

}  // namespace noether
