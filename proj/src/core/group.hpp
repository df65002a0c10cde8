#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace excross {

/// Index of a group element; 0 is always the identity.
using Element = std::size_t;

/// A finite group held as a validated Cayley table.
class GroupTable {
 public:
  /// Validates and normalizes: the identity is moved to index 0, the other
  /// elements keep their relative order. Throws BadLabels, NonLatinSquare,
  /// NoIdentity or NonAssociative naming the offending row or triple.
  static GroupTable from_table(std::vector<std::string> names,
                               const std::vector<std::vector<std::size_t>>& table);

  std::size_t order() const { return names_.size(); }
  Element identity() const { return 0; }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(Element g) const;
  std::optional<Element> find(std::string_view name) const;

  /// table[g][h] = g·h. Throws IndexOutOfRange.
  Element multiply(Element g, Element h) const;
  Element inverse(Element g) const;
  Element product_of(const std::vector<Element>& word) const;

  friend bool operator==(const GroupTable& a, const GroupTable& b) = default;

 private:
  GroupTable() = default;
  void check_index(Element g) const;

  std::vector<std::string> names_;
  std::vector<Element> table_;  // row-major, order x order
  std::vector<Element> inverse_;
};

GroupTable cyclic_group(std::size_t n);
GroupTable klein_four_group();
GroupTable symmetric_group_3();

/// Closure of the given permutations of {0..degree-1}; names are "e" for the
/// identity and "p1", "p2", ... in discovery order.
GroupTable group_from_permutations(const std::vector<std::vector<std::size_t>>& generators);

/// Presets: "cyclic N" (also "ZN"), "klein4", "sym3", "trivial".
std::optional<GroupTable> group_preset(std::string_view spec);

/// A bijection between two subsets of {0..base_size-1}.
class PartialBijection {
 public:
  PartialBijection() = default;
  /// Throws BadDocument when a source or target repeats or is out of range.
  PartialBijection(std::size_t base_size, const std::vector<std::pair<std::size_t, std::size_t>>& pairs);

  static PartialBijection identity(std::size_t base_size);
  static PartialBijection identity_on(std::size_t base_size, const std::vector<std::size_t>& points);
  static PartialBijection empty(std::size_t base_size);

  std::size_t base_size() const { return map_.size(); }
  bool defined_at(std::size_t x) const { return x < map_.size() && map_[x].has_value(); }
  std::optional<std::size_t> operator()(std::size_t x) const;
  std::vector<std::size_t> domain() const;
  std::vector<std::size_t> image() const;
  std::vector<std::pair<std::size_t, std::size_t>> pairs() const;
  /// The relational converse f*.
  PartialBijection converse() const;

  friend bool operator==(const PartialBijection& a, const PartialBijection& b) = default;

 private:
  std::vector<std::optional<std::size_t>> map_;
};

/// f∘g, defined exactly where g maps into the domain of f. Throws
/// BaseSizeMismatch.
PartialBijection compose(const PartialBijection& f, const PartialBijection& g);

}  // namespace excross
