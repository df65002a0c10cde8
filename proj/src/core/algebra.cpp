#include "core/algebra.hpp"

#include <algorithm>
#include <random>

#include "core/error.hpp"

namespace excross {

SparseVector to_sparse(const Vector& v) {
  SparseVector out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (sgn(v[i]) != 0) out.emplace_back(i, v[i]);
  }
  return out;
}

Vector to_dense(const SparseVector& v, std::size_t n) {
  Vector out = zero_vector(n);
  for (const auto& [i, q] : v) out.at(i) = q;
  return out;
}

namespace {

void accumulate(Vector& target, const Rational& c, const SparseVector& v) {
  if (sgn(c) == 0) return;
  for (const auto& [i, q] : v) target[i] += c * q;
}

// Incremental reduced echelon basis with sparse rows; used for closures
// over the large crossed-product algebras.
class EchelonBuilder {
 public:
  explicit EchelonBuilder(std::size_t ambient) : ambient_(ambient) {}

  void reduce(Vector& v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Rational c = v[pivots_[r]];
      if (sgn(c) != 0) accumulate(v, -c, rows_[r]);
    }
  }

  /// Adds v to the span; returns false when it was already inside.
  bool insert(Vector v) {
    reduce(v);
    std::size_t pivot = 0;
    while (pivot < ambient_ && sgn(v[pivot]) == 0) ++pivot;
    if (pivot == ambient_) return false;
    const Rational inv = 1 / v[pivot];
    for (auto& q : v) q *= inv;
    SparseVector fresh = to_sparse(v);
    for (auto& row : rows_) {
      Rational c = 0;
      for (const auto& [i, q] : row) {
        if (i == pivot) c = q;
      }
      if (sgn(c) == 0) continue;
      Vector dense = to_dense(row, ambient_);
      accumulate(dense, -c, fresh);
      row = to_sparse(dense);
    }
    rows_.push_back(std::move(fresh));
    pivots_.push_back(pivot);
    return true;
  }

  Subspace to_subspace() const {
    std::vector<Vector> dense;
    dense.reserve(rows_.size());
    for (const auto& row : rows_) dense.push_back(to_dense(row, ambient_));
    return Subspace::span(ambient_, dense);
  }

 private:
  std::size_t ambient_;
  std::vector<SparseVector> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace

// ---------------------------------------------------------------------------

StructureAlgebra::StructureAlgebra(std::vector<std::string> labels,
                                   std::vector<SparseVector> products,
                                   std::optional<std::vector<Vector>> involution,
                                   std::optional<Vector> unit)
    : labels_(std::move(labels)),
      products_(std::move(products)),
      involution_(std::move(involution)),
      unit_(std::move(unit)) {
  const std::size_t n = labels_.size();
  if (products_.size() != n * n) {
    throw Error(ErrorKind::DimensionMismatch, "structure constants must cover every basis pair");
  }
  for (const auto& p : products_) {
    for (const auto& [i, q] : p) {
      if (i >= n) throw Error(ErrorKind::DimensionMismatch, "structure constant index out of range");
    }
  }
  if (involution_) {
    if (involution_->size() != n) throw Error(ErrorKind::DimensionMismatch, "involution must map every basis vector");
    for (const auto& v : *involution_) {
      if (v.size() != n) throw Error(ErrorKind::DimensionMismatch, "involution image has wrong length");
    }
  }
  if (unit_ && unit_->size() != n) throw Error(ErrorKind::DimensionMismatch, "unit has wrong length");
}

StructureAlgebra StructureAlgebra::function_algebra(std::size_t n) {
  std::vector<std::string> labels;
  std::vector<SparseVector> products(n * n);
  std::vector<Vector> involution;
  for (std::size_t x = 0; x < n; ++x) {
    labels.push_back("e" + std::to_string(x));
    products[x * n + x] = {{x, Rational(1)}};
    involution.push_back(unit_vector(n, x));
  }
  return StructureAlgebra(std::move(labels), std::move(products), std::move(involution),
                          Vector(n, Rational(1)));
}

Vector StructureAlgebra::multiply(const Vector& x, const Vector& y) const {
  const std::size_t n = dim();
  Vector out = zero_vector(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (sgn(y[j]) == 0) continue;
      accumulate(out, x[i] * y[j], basis_product(i, j));
    }
  }
  return out;
}

Vector StructureAlgebra::multiply_basis_right(const Vector& x, std::size_t j) const {
  Vector out = zero_vector(dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (sgn(x[i]) != 0) accumulate(out, x[i], basis_product(i, j));
  }
  return out;
}

Vector StructureAlgebra::multiply_basis_left(std::size_t i, const Vector& x) const {
  Vector out = zero_vector(dim());
  for (std::size_t j = 0; j < dim(); ++j) {
    if (sgn(x[j]) != 0) accumulate(out, x[j], basis_product(i, j));
  }
  return out;
}

Vector StructureAlgebra::star(const Vector& x) const {
  if (!involution_) throw Error(ErrorKind::InvalidAction, "algebra has no involution");
  Vector out = zero_vector(dim());
  for (std::size_t i = 0; i < dim(); ++i) axpy(out, x[i], (*involution_)[i]);
  return out;
}

std::vector<std::string> StructureAlgebra::structural_defects() const {
  std::vector<std::string> defects;
  const std::size_t n = dim();
  if (involution_) {
    for (std::size_t i = 0; i < n; ++i) {
      if (star(star(unit_vector(n, i))) != unit_vector(n, i)) {
        defects.push_back("involution is not involutive at " + labels_[i]);
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Vector lhs = star(to_dense(basis_product(i, j), n));
        Vector rhs = multiply((*involution_)[j], (*involution_)[i]);
        if (lhs != rhs) {
          defects.push_back("(xy)* != y*x* at (" + labels_[i] + ", " + labels_[j] + ")");
        }
      }
    }
  }
  if (unit_) {
    for (std::size_t i = 0; i < n; ++i) {
      Vector b = unit_vector(n, i);
      if (multiply(*unit_, b) != b || multiply(b, *unit_) != b) {
        defects.push_back("unit does not act as identity on " + labels_[i]);
      }
    }
  }
  return defects;
}

// ---------------------------------------------------------------------------

bool is_two_sided_ideal(const StructureAlgebra& algebra, const Subspace& space) {
  if (space.ambient_dim() != algebra.dim()) {
    throw Error(ErrorKind::DimensionMismatch, "ideal lives in a different ambient space");
  }
  for (const auto& v : space.basis()) {
    for (std::size_t j = 0; j < algebra.dim(); ++j) {
      if (!space.contains(algebra.multiply_basis_right(v, j))) return false;
      if (!space.contains(algebra.multiply_basis_left(j, v))) return false;
    }
  }
  return true;
}

Subspace two_sided_ideal_closure(const StructureAlgebra& algebra,
                                 const std::vector<Vector>& generators) {
  const std::size_t n = algebra.dim();
  EchelonBuilder echelon(n);
  std::vector<Vector> pending;
  for (const auto& g : generators) {
    if (g.size() != n) throw Error(ErrorKind::DimensionMismatch, "generator has wrong length");
    if (echelon.insert(g)) pending.push_back(g);
  }
  while (!pending.empty()) {
    Vector v = std::move(pending.back());
    pending.pop_back();
    for (std::size_t j = 0; j < n; ++j) {
      Vector right = algebra.multiply_basis_right(v, j);
      if (echelon.insert(right)) pending.push_back(std::move(right));
      Vector left = algebra.multiply_basis_left(j, v);
      if (echelon.insert(left)) pending.push_back(std::move(left));
    }
  }
  return echelon.to_subspace();
}

Quotient quotient_algebra(const StructureAlgebra& algebra, const Subspace& ideal) {
  if (!is_two_sided_ideal(algebra, ideal)) {
    throw Error(ErrorKind::NotAnIdeal, "span is not closed under two-sided multiplication");
  }
  const std::size_t n = algebra.dim();
  std::vector<bool> is_pivot(n, false);
  for (auto p : ideal.pivots()) is_pivot[p] = true;
  std::vector<std::size_t> reps;
  std::vector<long> position(n, -1);
  for (std::size_t c = 0; c < n; ++c) {
    if (!is_pivot[c]) {
      position[c] = static_cast<long>(reps.size());
      reps.push_back(c);
    }
  }
  const std::size_t m = reps.size();

  Matrix projection(m, n);
  for (std::size_t c = 0; c < n; ++c) {
    if (!is_pivot[c]) projection(static_cast<std::size_t>(position[c]), c) = 1;
  }
  for (std::size_t r = 0; r < ideal.dim(); ++r) {
    const std::size_t p = ideal.pivots()[r];
    for (std::size_t q = 0; q < m; ++q) projection(q, p) = -ideal.basis()[r][reps[q]];
  }

  std::vector<std::string> labels;
  for (auto c : reps) labels.push_back(algebra.labels()[c]);
  std::vector<SparseVector> products(m * m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      Vector prod = to_dense(algebra.basis_product(reps[a], reps[b]), n);
      products[a * m + b] = to_sparse(projection.apply(prod));
    }
  }
  std::optional<std::vector<Vector>> involution;
  if (algebra.has_involution()) {
    std::vector<Vector> images;
    for (auto c : reps) images.push_back(projection.apply(algebra.involution()[c]));
    involution = std::move(images);
  }
  std::optional<Vector> unit;
  if (algebra.unit()) unit = projection.apply(*algebra.unit());

  return Quotient{StructureAlgebra(std::move(labels), std::move(products), std::move(involution),
                                   std::move(unit)),
                  std::move(projection), std::move(reps)};
}

namespace {

bool associates(const StructureAlgebra& algebra, std::size_t i, std::size_t j, std::size_t k,
                SparseVector& terms) {
  terms.clear();
  for (const auto& [m, c] : algebra.basis_product(i, j))
    for (const auto& [t, d] : algebra.basis_product(m, k)) terms.emplace_back(t, c * d);
  for (const auto& [m, c] : algebra.basis_product(j, k))
    for (const auto& [t, d] : algebra.basis_product(i, m)) terms.emplace_back(t, -(c * d));
  if (terms.empty()) return true;
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  Rational run = 0;
  for (std::size_t p = 0; p < terms.size(); ++p) {
    run += terms[p].second;
    if (p + 1 == terms.size() || terms[p + 1].first != terms[p].first) {
      if (sgn(run) != 0) return false;
      run = 0;
    }
  }
  return true;
}

}  // namespace

std::optional<BasisTriple> check_associativity(const StructureAlgebra& algebra) {
  const std::size_t n = algebra.dim();
  SparseVector scratch;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (!associates(algebra, i, j, k, scratch)) return BasisTriple{i, j, k};
  return std::nullopt;
}

std::optional<BasisTriple> check_associativity_sampled(const StructureAlgebra& algebra,
                                                       std::size_t samples, std::uint64_t seed) {
  const std::size_t n = algebra.dim();
  if (n == 0) return std::nullopt;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  SparseVector scratch;
  for (std::size_t s = 0; s < samples; ++s) {
    std::size_t i = pick(rng), j = pick(rng), k = pick(rng);
    if (!associates(algebra, i, j, k, scratch)) return BasisTriple{i, j, k};
  }
  return std::nullopt;
}

bool is_idempotent_ideal(const StructureAlgebra& algebra, const Subspace& ideal) {
  std::vector<Vector> products;
  for (const auto& a : ideal.basis())
    for (const auto& b : ideal.basis()) products.push_back(algebra.multiply(a, b));
  return Subspace::span(algebra.dim(), products) == ideal;
}

std::optional<Vector> local_unit(const StructureAlgebra& algebra, const Subspace& space) {
  const std::size_t n = algebra.dim();
  const std::size_t k = space.dim();
  if (k == 0) return zero_vector(n);
  // Unknowns: coordinates c_t of u in the echelon basis.
  std::vector<std::vector<Vector>> left(k), right(k);
  for (std::size_t t = 0; t < k; ++t) {
    for (std::size_t a = 0; a < k; ++a) {
      left[t].push_back(algebra.multiply(space.basis()[t], space.basis()[a]));
      right[t].push_back(algebra.multiply(space.basis()[a], space.basis()[t]));
    }
  }
  Matrix system(2 * k * n, k + 1);
  std::size_t row = 0;
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t i = 0; i < n; ++i, ++row) {
      for (std::size_t t = 0; t < k; ++t) system(row, t) = left[t][a][i];
      system(row, k) = space.basis()[a][i];
    }
    for (std::size_t i = 0; i < n; ++i, ++row) {
      for (std::size_t t = 0; t < k; ++t) system(row, t) = right[t][a][i];
      system(row, k) = space.basis()[a][i];
    }
  }
  auto [reduced, pivots] = rref(system);
  if (!pivots.empty() && pivots.back() == k) return std::nullopt;
  Vector coords = zero_vector(k);
  for (std::size_t r = 0; r < pivots.size(); ++r) coords[pivots[r]] = reduced(r, k);
  return space.combine(coords);
}

}  // namespace excross
