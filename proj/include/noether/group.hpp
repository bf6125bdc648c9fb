#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace noether {

/// A word in the generators: (generator index, exponent) pairs read left to right.
using Word = std::vector<std::pair<int, int>>;

struct Relation {
  std::string text;
  Word lhs;
  Word rhs;
};

struct FamilyInfo {
  int id = 0;
  int n = 0;
  /// Exponent bounds of the normal form sigma^a tau^b lambda^c.
  std::array<int, 3> bounds{1, 1, 1};
};

struct GroupData {
  std::string name;
  std::size_t order = 0;
  std::vector<std::uint32_t> table;
  std::vector<std::uint32_t> inverses;
  std::vector<std::uint32_t> generators;
  std::vector<std::string> generator_names;
  std::vector<Relation> relations;
  std::optional<FamilyInfo> family;
};

class Group;

class GroupElement {
 public:
  GroupElement() = default;
  GroupElement(std::shared_ptr<const GroupData> data, std::uint32_t index)
      : data_(std::move(data)), index_(index) {}

  std::uint32_t index() const { return index_; }
  const GroupData* data() const { return data_.get(); }
  const std::shared_ptr<const GroupData>& shared() const { return data_; }
  /// Normal form (a, b, c) for family groups.
  std::array<int, 3> normal_form() const;
  std::string to_string() const;

  friend bool operator==(const GroupElement& a, const GroupElement& b) {
    return a.data_ == b.data_ && a.index_ == b.index_;
  }

 private:
  std::shared_ptr<const GroupData> data_;
  std::uint32_t index_ = 0;
};

/// Immutable finite group stored by its multiplication table; element 0 is the identity.
class Group {
 public:
  Group() = default;
  explicit Group(std::shared_ptr<const GroupData> data) : data_(std::move(data)) {}

  std::size_t order() const { return data_->order; }
  const std::string& name() const { return data_->name; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return data_->table[static_cast<std::size_t>(a) * data_->order + b];
  }
  std::uint32_t inv(std::uint32_t a) const { return data_->inverses[a]; }
  std::uint32_t pow(std::uint32_t a, long long k) const;
  std::uint32_t identity() const { return 0; }
  int element_order(std::uint32_t a) const;

  const std::vector<std::uint32_t>& generators() const { return data_->generators; }
  const std::vector<std::string>& generator_names() const { return data_->generator_names; }
  const std::vector<Relation>& relations() const { return data_->relations; }
  const std::optional<FamilyInfo>& family() const { return data_->family; }

  GroupElement element(std::uint32_t index) const { return GroupElement(data_, index); }
  std::uint32_t evaluate(const Word& w) const;
  /// Family groups only: index of sigma^a tau^b lambda^c (exponents reduced by relations).
  std::uint32_t from_normal_form(long long a, long long b, long long c) const;
  std::array<int, 3> normal_form(std::uint32_t index) const;
  std::string element_name(std::uint32_t index) const;

  /// Sorted element indices of the subgroup generated by `gens`.
  std::vector<std::uint32_t> subgroup(const std::vector<std::uint32_t>& gens) const;
  bool is_normal(const std::vector<std::uint32_t>& sorted_subgroup) const;
  bool is_abelian() const;

  const std::shared_ptr<const GroupData>& data() const { return data_; }

 private:
  std::shared_ptr<const GroupData> data_;
};

GroupElement multiply(const GroupElement& g, const GroupElement& h);
GroupElement inverse(const GroupElement& g);
int element_order(const GroupElement& g);

struct FamilySpec {
  int id = 0;
  int n = 0;
};
struct CayleySpec {
  std::vector<std::vector<std::uint32_t>> table;
};
struct PermSpec {
  int degree = 0;
  std::vector<std::vector<int>> generators;
};
using GroupSpec = std::variant<FamilySpec, CayleySpec, PermSpec>;

Group build_group(const GroupSpec& spec);
Group family_group(int id, int n);
/// Validates group axioms; generators are picked greedily when not supplied.
Group cayley_group(const std::vector<std::vector<std::uint32_t>>& table, std::string name = "",
                   std::vector<std::uint32_t> generators = {},
                   std::vector<std::string> generator_names = {});
Group permutation_group(int degree, const std::vector<std::vector<int>>& generators,
                        std::string name = "");

/// Smallest n accepted for the family, and the upper bound (n = 5 only for G26).
int family_min_n(int id);
bool family_accepts(int id, int n);
/// Roman-numeral class of a family: 1..4.
int family_class(int id);

/// Exhaustive-scan guard, 2^12 unless NOETHER_MAX_ORDER overrides it.
std::size_t max_order_guard();

/// Parses a relation like "t^-1 s t = s^(1+h)" over generator symbols; P, h, q
/// stand for 2^(n-2), 2^(n-3), 2^(n-4).
Word parse_word(const std::string& text, const std::vector<std::string>& symbols, int n);
Relation parse_relation(const std::string& text, const std::vector<std::string>& symbols, int n);

}  // namespace noether
