#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "core/linalg.hpp"

namespace excross {

/// Sorted (index, coefficient) pairs with no zero coefficients.
using SparseVector = std::vector<std::pair<std::size_t, Rational>>;

SparseVector to_sparse(const Vector& v);
Vector to_dense(const SparseVector& v, std::size_t n);

/// A finite-dimensional algebra over Q given by structure constants on a
/// labelled basis. Products are bilinear extensions of basis_product().
class StructureAlgebra {
 public:
  StructureAlgebra() = default;
  /// `products` is row-major over basis pairs: products[i * dim + j] = b_i b_j.
  /// `involution[i]` is the coordinate vector of b_i^*.
  StructureAlgebra(std::vector<std::string> labels, std::vector<SparseVector> products,
                   std::optional<std::vector<Vector>> involution = std::nullopt,
                   std::optional<Vector> unit = std::nullopt);

  /// Functions on {0..n-1} with pointwise product, identity involution and
  /// the constant function 1 as unit. Basis e_x is the indicator of x.
  static StructureAlgebra function_algebra(std::size_t n);

  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const SparseVector& basis_product(std::size_t i, std::size_t j) const {
    return products_[i * dim() + j];
  }

  Vector multiply(const Vector& x, const Vector& y) const;
  /// x * b_j
  Vector multiply_basis_right(const Vector& x, std::size_t j) const;
  /// b_i * x
  Vector multiply_basis_left(std::size_t i, const Vector& x) const;

  bool has_involution() const { return involution_.has_value(); }
  const std::vector<Vector>& involution() const { return *involution_; }
  Vector star(const Vector& x) const;

  const std::optional<Vector>& unit() const { return unit_; }

  /// Violations of the involution and unit laws on basis pairs, one line
  /// each; empty when the algebra is well formed.
  std::vector<std::string> structural_defects() const;

  friend bool operator==(const StructureAlgebra& a, const StructureAlgebra& b) = default;

 private:
  std::vector<std::string> labels_;
  std::vector<SparseVector> products_;
  std::optional<std::vector<Vector>> involution_;
  std::optional<Vector> unit_;
};

bool is_two_sided_ideal(const StructureAlgebra& algebra, const Subspace& space);

/// Smallest two-sided ideal containing `generators`, by fixpoint iteration
/// of span augmentation under left and right multiplication by the basis.
Subspace two_sided_ideal_closure(const StructureAlgebra& algebra,
                                 const std::vector<Vector>& generators);

struct Quotient {
  StructureAlgebra algebra;
  /// dim(quotient) x dim(source)
  Matrix projection;
  /// Source coordinates (the non-pivot columns of the ideal) that serve as
  /// coset representatives for the quotient basis.
  std::vector<std::size_t> representatives;

  Vector project(const Vector& x) const { return projection.apply(x); }
};

/// A/I with basis the cosets of the non-pivot coordinates of I. Throws
/// NotAnIdeal when span(I) is not closed under multiplication by A.
Quotient quotient_algebra(const StructureAlgebra& algebra, const Subspace& ideal);

using BasisTriple = std::array<std::size_t, 3>;

/// First basis triple (i, j, k), in lexicographic order, with
/// (b_i b_j) b_k != b_i (b_j b_k); nullopt when the algebra is associative.
std::optional<BasisTriple> check_associativity(const StructureAlgebra& algebra);

/// Same test on `samples` uniformly drawn triples.
std::optional<BasisTriple> check_associativity_sampled(const StructureAlgebra& algebra,
                                                       std::size_t samples, std::uint64_t seed);

/// span(I·I) == I
bool is_idempotent_ideal(const StructureAlgebra& algebra, const Subspace& ideal);

/// The element u of the subspace with u b = b u = b for all b in it, if any.
std::optional<Vector> local_unit(const StructureAlgebra& algebra, const Subspace& space);

}  // namespace excross
