#pragma once

// Exact rational matrices and subspaces. Every routine here is exact; there
// is no floating point in this layer.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace excross {

using Rational = mpq_class;
using Vector = std::vector<Rational>;

/// Parses "p", "-p" or "p/q" into a reduced rational. Throws BadDocument.
Rational parse_rational(std::string_view text);

/// "p" when the denominator is 1, "p/q" otherwise.
std::string format_rational(const Rational& q);

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
bool is_zero(const Vector& v);
Vector add(const Vector& a, const Vector& b);
Vector subtract(const Vector& a, const Vector& b);
Vector scale(const Rational& c, const Vector& v);
/// v += c * w
void axpy(Vector& v, const Rational& c, const Vector& w);

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(std::size_t cols, const std::vector<Vector>& rows);
  static Matrix from_columns(std::size_t rows, const std::vector<Vector>& columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  Matrix transpose() const;
  /// Returns M v.
  Vector apply(const Vector& v) const;
  bool is_zero() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);
/// Basis of {x : m x = 0}, one vector per free column.
std::vector<Vector> nullspace(const Matrix& m);
std::optional<Matrix> inverse(const Matrix& m);

/// A linear subspace of Q^n held as the nonzero rows of its reduced row
/// echelon form, so equality of subspaces is equality of objects.
class Subspace {
 public:
  Subspace() = default;

  static Subspace span(std::size_t ambient, const std::vector<Vector>& vectors);
  static Subspace zero(std::size_t ambient);
  static Subspace full(std::size_t ambient);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vector>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const Vector& v) const;
  /// Coordinates of v in the echelon basis, or nullopt when v is outside.
  std::optional<Vector> coordinates(const Vector& v) const;
  Vector combine(const Vector& coords) const;
  bool is_subspace_of(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) = default;

 private:
  std::size_t ambient_ = 0;
  std::vector<Vector> basis_;
  std::vector<std::size_t> pivots_;
};

/// Basis of span(a) ∩ span(b), from the nullspace of [a | -b].
Subspace intersect(const Subspace& a, const Subspace& b);
Subspace intersect_all(std::span<const Subspace> spaces, std::size_t ambient);

/// A linear map between two subspaces of the same ambient space. The matrix
/// is expressed in the echelon bases: column j holds the codomain
/// coordinates of the image of domain().basis()[j].
class LinearMap {
 public:
  LinearMap() = default;
  LinearMap(Subspace domain, Subspace codomain, Matrix matrix);

  /// Builds the map sending sources[i] to images[i]; sources must be a basis
  /// of `domain` and every image must lie in `codomain`.
  static LinearMap from_images(Subspace domain, Subspace codomain,
                               const std::vector<Vector>& sources,
                               const std::vector<Vector>& images);
  static LinearMap identity(const Subspace& space);

  const Subspace& domain() const { return domain_; }
  const Subspace& codomain() const { return codomain_; }
  const Matrix& matrix() const { return matrix_; }

  Vector apply(const Vector& v) const;
  std::optional<Vector> try_apply(const Vector& v) const;
  /// Images of the domain basis, in ambient coordinates.
  std::vector<Vector> images() const;
  Subspace image_of(const Subspace& sub) const;
  /// {x in domain : f(x) in target}
  Subspace preimage_of(const Subspace& target) const;
  LinearMap restrict_to(const Subspace& sub, const Subspace& codomain) const;
  bool is_bijective() const;
  /// Inverse of a bijective map; throws DimensionMismatch otherwise.
  LinearMap inverse() const;

  friend bool operator==(const LinearMap& a, const LinearMap& b) = default;

 private:
  Subspace domain_;
  Subspace codomain_;
  Matrix matrix_;
};

/// f∘g as a composition of partial maps: defined on {x : g(x) ∈ dom f}.
LinearMap compose(const LinearMap& f, const LinearMap& g);

/// Same domain and same values on it; codomain labels are ignored.
bool same_partial_map(const LinearMap& f, const LinearMap& g);

}  // namespace excross
