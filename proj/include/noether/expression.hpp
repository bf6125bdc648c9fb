#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "noether/laurent.hpp"

namespace noether {

/// Parses the textual formulas used in action tables, e.g.
/// "i*zeta^-2/(u1*u2*u3)" or "(1-y2)/(1+y2)" or "(u1*u2)^(2^(n-4))*u4".
/// `zeta` denotes a primitive 2^(n-3)-th root of unity and `i` a square root
/// of -1. Exponents are integer expressions that may mention `n`.
LaurentFraction parse_expression(std::string_view text, const std::vector<std::string>& variables,
                                 int n);

/// Evaluates an integer expression such as "2^(n-4)".
long long parse_integer_expression(std::string_view text, int n);

}  // namespace noether
