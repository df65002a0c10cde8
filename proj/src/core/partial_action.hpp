#pragma once

// Partial actions of a finite group on a finite set and on a finite
// dimensional algebra, and the corresponding actions of S(G).

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "core/algebra.hpp"
#include "core/group.hpp"
#include "core/linalg.hpp"
#include "core/semigroup.hpp"

namespace excross {

struct AxiomResult {
  std::string id;
  std::string statement;
  bool passed = true;
  std::size_t checked = 0;
  /// First counterexample, empty when passed.
  std::string witness;
};

struct ValidationReport {
  std::vector<AxiomResult> results;

  bool passed() const;
  const AxiomResult* find(const std::string& id) const;
  void append(const ValidationReport& other);
};

/// theta[g] is a partial bijection from X_{g^-1} onto X_g.
class SetPartialAction {
 public:
  /// One map per group element, indexed by element. Throws
  /// BaseSizeMismatch or DimensionMismatch when the shapes disagree.
  SetPartialAction(GroupTable group, std::size_t base_size, std::vector<PartialBijection> theta);

  /// Fills the gaps of a partial listing: theta_e is the identity and a
  /// missing theta_{g^-1} is the converse of theta_g. Elements with neither
  /// map listed get the empty map.
  static SetPartialAction from_listed(GroupTable group, std::size_t base_size,
                                      const std::map<Element, PartialBijection>& listed);

  const GroupTable& group() const { return group_; }
  std::size_t base_size() const { return base_size_; }
  const PartialBijection& theta(Element g) const { return theta_.at(g); }
  /// X_g, the image of theta_g.
  std::vector<std::size_t> domain_set(Element g) const { return theta_.at(g).image(); }

 private:
  GroupTable group_;
  std::size_t base_size_;
  std::vector<PartialBijection> theta_;
};

ValidationReport validate_set_action(const SetPartialAction& action);

/// alpha[g] : D_{g^-1} -> D_g, ideals indexed by group element.
class AlgebraPartialAction {
 public:
  /// Throws InvalidAction when an ideal lives in the wrong space or a map
  /// does not go from D_{g^-1} to D_g.
  AlgebraPartialAction(GroupTable group, StructureAlgebra algebra, std::vector<Subspace> ideals,
                       std::vector<LinearMap> alpha);

  const GroupTable& group() const { return group_; }
  const StructureAlgebra& algebra() const { return algebra_; }
  const Subspace& ideal(Element g) const { return ideals_.at(g); }
  const LinearMap& alpha(Element g) const { return alpha_.at(g); }

  friend bool operator==(const AlgebraPartialAction&, const AlgebraPartialAction&) = default;

 private:
  GroupTable group_;
  StructureAlgebra algebra_;
  std::vector<Subspace> ideals_;
  std::vector<LinearMap> alpha_;
};

ValidationReport validate_algebra_action(const AlgebraPartialAction& action);

/// span(D_g D_g) = D_g for every g, one entry per element.
ValidationReport ideals_idempotent_check(const AlgebraPartialAction& action);

/// Functions X -> Q with pointwise product; D_g = span{e_x : x in X_g} and
/// alpha_g(e_x) = e_{theta_g(x)}. Throws InvalidAction, naming the first
/// failing axiom, when the set-level action is not valid.
AlgebraPartialAction induce_algebra_action(const SetPartialAction& action);

/// E[s] and beta[s] : E_{s*} -> E_s, indexed by the SemigroupTable order.
class SgAction {
 public:
  SgAction(std::shared_ptr<const SemigroupTable> table, StructureAlgebra algebra, std::vector<Subspace> E,
           std::vector<LinearMap> beta);

  const SemigroupTable& table() const { return *table_; }
  std::shared_ptr<const SemigroupTable> table_ptr() const { return table_; }
  const GroupTable& group() const { return table_->group(); }
  const StructureAlgebra& algebra() const { return algebra_; }
  std::size_t size() const { return E_.size(); }
  const Subspace& E(std::size_t s) const { return E_.at(s); }
  const LinearMap& beta(std::size_t s) const { return beta_.at(s); }

  friend bool operator==(const SgAction& a, const SgAction& b) {
    return a.group() == b.group() && a.algebra_ == b.algebra_ && a.E_ == b.E_ && a.beta_ == b.beta_;
  }

 private:
  std::shared_ptr<const SemigroupTable> table_;
  StructureAlgebra algebra_;
  std::vector<Subspace> E_;
  std::vector<LinearMap> beta_;
};

/// For s = e_{s1}...e_{sn}[h]: E_s = D_h ∩ D_{s1} ∩ ... ∩ D_{sn} and
/// beta_s = alpha_h restricted to E_{s*}. Throws GroupTooLarge.
SgAction to_sg_action(const AlgebraPartialAction& action, std::size_t max_order = default_max_group_order());

/// ({E_[g]}, {beta_[g]}).
AlgebraPartialAction restrict_to_group(const SgAction& action);

/// E_[e] = A, beta_{s*} = beta_s^-1 and beta_r beta_s = beta_rs as partial
/// maps for every pair.
ValidationReport validate_sg_action(const SgAction& action);

/// E_st ⊆ E_s for every pair.
ValidationReport check_e_monotone(const SgAction& action);

/// E_{[g][h]} = E_[gh] ∩ E_[g] for every pair of group elements.
ValidationReport check_generator_products(const SgAction& action);

/// E_r = D_{r1} ∩ D_{r1 r2} ∩ ... ∩ D_{r1...rn} for every word [r1]...[rn]
/// of length <= max_len.
ValidationReport check_word_formula(const SgAction& action, const AlgebraPartialAction& source,
                                    std::size_t max_len = 4);

/// Every E_s is closed under the involution and beta_s commutes with it.
ValidationReport check_star_compatibility(const SgAction& action);

}  // namespace excross
