#pragma once

// Arithmetic in the inverse semigroup S(G) generated by symbols [g] subject
// to [g^-1][g][h] = [g^-1][gh], [g][h][h^-1] = [gh][h^-1] and [g][e] = [g].
//
// Every element has a standard form e_{s1}...e_{sn}[g] with e_s = [s][s^-1].
// The canonical representative used here drops e and g from the subscript
// set, because e_e = [e] is the unit and e_g[g] = [g].

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "core/group.hpp"

namespace excross {

class SElem {
 public:
  SElem() = default;
  SElem(Element bracket, std::uint64_t eps_mask) : bracket_(bracket), eps_mask_(eps_mask) {}

  Element bracket() const { return bracket_; }
  /// Bit k set iff e_k occurs in the standard form.
  std::uint64_t eps_mask() const { return eps_mask_; }
  /// Sorted subscript set.
  std::vector<Element> eps() const;

  friend auto operator<=>(const SElem&, const SElem&) = default;

 private:
  Element bracket_ = 0;
  std::uint64_t eps_mask_ = 0;
};

struct SElemHash {
  std::size_t operator()(const SElem& x) const noexcept {
    return std::hash<std::uint64_t>()(x.eps_mask() * 0x9E3779B97F4A7C15ULL ^ x.bracket());
  }
};

/// Enumeration bound on |G|: 8, or EXCROSS_MAX_GROUP_ORDER when set.
std::size_t default_max_group_order();

class ExelSemigroup {
 public:
  static constexpr std::size_t kMaxOrder = 64;

  explicit ExelSemigroup(GroupTable group);

  const GroupTable& group() const { return *group_; }
  std::shared_ptr<const GroupTable> group_ptr() const { return group_; }

  SElem unit() const { return SElem(); }
  SElem generator(Element g) const;
  /// e_g = [g][g^-1]
  SElem epsilon(Element g) const;
  /// Canonical element e_{eps...}[bracket].
  SElem make(const std::vector<Element>& eps, Element bracket) const;

  /// (E1, g)(E2, h) = canon(E1 ∪ gE2 ∪ {g}, gh)
  SElem multiply(const SElem& x, const SElem& y) const;
  /// (E, g)* = canon(g^-1 E ∪ {g^-1}, g^-1)
  SElem star(const SElem& x) const;
  static bool is_idempotent(const SElem& x) { return x.bracket() == 0; }
  /// x <= y iff same bracket and eps(y) ⊆ eps(x).
  static bool leq(const SElem& x, const SElem& y);
  /// The homomorphism onto G.
  static Element gamma(const SElem& x) { return x.bracket(); }

  /// 2^(n-1) + (n-1) 2^(n-2) for n = |G|.
  std::size_t expected_size() const;
  /// All canonical elements ordered by (bracket, eps mask); the unit is
  /// first. Throws GroupTooLarge when |G| exceeds max_order.
  std::vector<SElem> enumerate(std::size_t max_order) const;

  bool is_canonical(const SElem& x) const;
  std::string to_text(const SElem& x) const;
  /// A word [r1]...[rk] equal to x, built from prefix products:
  /// [s1][s1^-1 s2]...[sn^-1 g] = e_{s1}...e_{sn}[g].
  std::vector<Element> representative_word(const SElem& x) const;
  /// Product of the generators named by the word.
  SElem evaluate(const std::vector<Element>& word) const;

 private:
  void require_member(const SElem& x) const;
  std::uint64_t translate(Element g, std::uint64_t mask) const;
  SElem canonical(std::uint64_t mask, Element bracket) const;

  std::shared_ptr<const GroupTable> group_;
};

/// S(G) enumerated once, with the product and star tables cached. Element
/// indices follow ExelSemigroup::enumerate, so index 0 is the unit.
class SemigroupTable {
 public:
  explicit SemigroupTable(GroupTable group, std::size_t max_order = default_max_group_order());

  const ExelSemigroup& semigroup() const { return semigroup_; }
  const GroupTable& group() const { return semigroup_.group(); }
  std::size_t size() const { return elements_.size(); }
  const std::vector<SElem>& elements() const { return elements_; }
  const SElem& element(std::size_t i) const { return elements_.at(i); }
  std::size_t index_of(const SElem& x) const;
  std::size_t generator_index(Element g) const { return index_of(semigroup_.generator(g)); }

  std::size_t product(std::size_t i, std::size_t j) const { return products_[i * size() + j]; }
  std::size_t star(std::size_t i) const { return stars_[i]; }
  bool leq(std::size_t i, std::size_t j) const {
    return ExelSemigroup::leq(elements_[i], elements_[j]);
  }
  Element gamma(std::size_t i) const { return elements_[i].bracket(); }
  std::string text(std::size_t i) const { return semigroup_.to_text(elements_[i]); }

 private:
  ExelSemigroup semigroup_;
  std::vector<SElem> elements_;
  std::unordered_map<SElem, std::size_t, SElemHash> index_;
  std::vector<std::size_t> products_;
  std::vector<std::size_t> stars_;
};

}  // namespace excross
