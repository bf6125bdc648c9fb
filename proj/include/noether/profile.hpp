#pragma once

#include <optional>
#include <string>
#include <vector>

#include "noether/group.hpp"

namespace noether {

enum class Sylow2Type { C8, C4xC2, Other };

struct StructuralProfile {
  std::size_t order = 0;
  long long exponent = 0;
  std::size_t center_order = 0;
  Sylow2Type sylow2_type = Sylow2Type::Other;
  std::string sylow2_description;
  std::size_t max_cyclic_index = 0;
  bool is_cm_rtimes_c8 = false;
  long long cm_m = 0;
};

StructuralProfile structural_profile(const Group& g);

std::vector<std::uint32_t> center(const Group& g);
/// A 2-Sylow subgroup grown greedily over 2-elements in index order.
std::vector<std::uint32_t> sylow2_subgroup(const Group& g);
long long group_exponent(const Group& g);
/// Largest element order.
int max_element_order(const Group& g);
/// Some element of order exactly k, if one exists (lowest index).
std::optional<std::uint32_t> element_of_order(const Group& g, int k);
/// The group is C_m x| C_8 with m odd: |G| = 8m, a normal cyclic subgroup of
/// order m and an element of order 8. Returns m.
std::optional<long long> cm_rtimes_c8(const Group& g);

/// Normal subgroups found as normal closures of single elements and their
/// products, sorted. Exhaustive for the small orders used here (|G| <= 256).
std::vector<std::vector<std::uint32_t>> normal_subgroups(const Group& g);

/// Quotient realised as a Cayley table on cosets of the normal subgroup N.
Group quotient_group(const Group& g, const std::vector<std::uint32_t>& N);

/// Subgroup realised as its own Cayley table; indices follow the sorted order.
Group subgroup_group(const Group& g, const std::vector<std::uint32_t>& sorted_sub);

std::string to_string(Sylow2Type t);

}  // namespace noether
