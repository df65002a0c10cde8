#pragma once

// A ⋊ G, the algebra L = ⊕ E_s δ_s over S(G), its ideal N and L/N, and the
// comparison maps between A ⋊ G and L/N.

#include <cstddef>
#include <string>
#include <vector>

#include "core/algebra.hpp"
#include "core/linalg.hpp"
#include "core/partial_action.hpp"

namespace excross {

/// Formal sums Σ a_k δ_k with a_k in an ideal I_k of A and the product
/// (a δ_k)(b δ_l) = φ_k(φ_{k*}(a) b) δ_{kl}. Block k contributes the echelon
/// basis of I_k; the global basis index of (x, k) is offset(k) + x.
class TwistedProduct {
 public:
  struct Block {
    std::string name;
    Subspace ideal;
    std::size_t offset = 0;
  };

  TwistedProduct(const StructureAlgebra& coefficients, std::vector<Block> blocks,
                 StructureAlgebra algebra);

  const StructureAlgebra& algebra() const { return algebra_; }
  std::size_t dim() const { return algebra_.dim(); }
  std::size_t coefficient_dim() const { return coefficient_dim_; }
  std::size_t block_count() const { return blocks_.size(); }
  const Block& block(std::size_t k) const { return blocks_.at(k); }
  std::size_t block_of(std::size_t i) const { return owner_.at(i); }

  /// a δ_k as a vector of the product. Throws DimensionMismatch when a is
  /// outside I_k.
  Vector embed(std::size_t k, const Vector& a) const;
  /// The coefficient x(k), as a vector of A.
  Vector coefficient(const Vector& x, std::size_t k) const;

 private:
  std::size_t coefficient_dim_ = 0;
  std::vector<Block> blocks_;
  std::vector<std::size_t> owner_;
  StructureAlgebra algebra_;
};

struct GroupCrossedProduct {
  AlgebraPartialAction source;
  /// Blocks indexed by group element.
  TwistedProduct product;
};

/// Throws ProductEscapesIdeal naming the basis pair when a product leaves
/// the ideal it must land in, InvalidAction when an ideal is not two-sided.
/// The involution is present when A has one and every D_g is closed under it.
GroupCrossedProduct build_group_cp(const AlgebraPartialAction& action);

struct SgCrossedProduct {
  SgAction source;
  /// Blocks indexed in SemigroupTable order.
  TwistedProduct L;
  /// a δ_r - a δ_t for r < t and a in the echelon basis of E_r.
  std::vector<Vector> generators;
  Subspace N;
  /// Closure of the same generators taken in reverse order.
  Subspace N_recheck;
  bool N_star_closed = true;
  Quotient quotient;

  bool N_certified() const { return N == N_recheck; }
};

/// Throws NonAssociativeL with the first failing basis triple of L when
/// check_associativity is set and L is not associative.
SgCrossedProduct build_sg_cp(const SgAction& action, bool check_associativity = true);

/// φ(a δ_g) = class of a δ_[g], as a dim(L/N) x dim(A⋊G) matrix. Throws
/// SourceMismatch when the two products come from different actions.
Matrix iso_phi(const GroupCrossedProduct& cp, const SgCrossedProduct& scp);

/// ψ(a δ_s) = a δ_γ(s) on L, as a dim(A⋊G) x dim(L) matrix.
Matrix psi_on_L(const SgCrossedProduct& scp, const GroupCrossedProduct& cp);

/// The map induced by psi_on_L on L/N. Throws NotWellDefined when ψ does not
/// vanish on N and SourceMismatch as iso_phi.
Matrix iso_psi(const SgCrossedProduct& scp, const GroupCrossedProduct& cp);

struct IsoReport {
  Matrix phi;
  Matrix psi;
  std::size_t dim_group_cp = 0;
  std::size_t dim_L = 0;
  std::size_t dim_N = 0;
  std::size_t dim_quotient = 0;
  ValidationReport checks;
};

/// Runs iso_phi and iso_psi and checks, on every basis pair, that both are
/// multiplicative, *-preserving when both sides carry an involution, and
/// mutually inverse, plus the dimension count and the N recheck.
IsoReport check_isomorphism(const GroupCrossedProduct& cp, const SgCrossedProduct& scp);

/// In L/N: class(a δ_{[g][h]}) = class(a δ_[gh]) for a in the basis of
/// E_{[g][h]} (id "bracket_product"), and class(a δ_s) = class(a δ_[γ(s)])
/// for a in the basis of E_s (id "epsilon_strip").
ValidationReport check_quotient_identities(const SgCrossedProduct& scp);

/// Exhaustive basis-triple associativity, reported with the triple labels.
AxiomResult associativity_result(const std::string& id, const StructureAlgebra& algebra);

/// (xy)* = y*x* and x** = x on basis pairs; skipped without an involution.
AxiomResult star_laws_result(const std::string& id, const StructureAlgebra& algebra);

/// Σ_k ‖x(k)‖ with the sup norm of coordinates on A.
Rational one_norm(const TwistedProduct& product, const Vector& x);

}  // namespace excross
