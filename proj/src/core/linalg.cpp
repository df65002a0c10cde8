#include "core/linalg.hpp"

#include <algorithm>
#include <cctype>

#include "core/error.hpp"

namespace excross {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) return false;
  return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(start), s.end(),
                     [](unsigned char c) { return std::isdigit(c) != 0; });
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1")
                                                         : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' ||
      den[0] == '+') {
    throw Error(ErrorKind::BadDocument, "malformed rational \"" + std::string(text) + "\"");
  }
  if (num[0] == '+') num.remove_prefix(1);
  const mpz_class n{std::string(num)};
  const mpz_class d{std::string(den)};
  if (d == 0) {
    throw Error(ErrorKind::BadDocument, "zero denominator in \"" + std::string(text) + "\"");
  }
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string format_rational(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Vector zero_vector(std::size_t n) { return Vector(n, Rational(0)); }

Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v = zero_vector(n);
  v.at(i) = 1;
  return v;
}

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& q) { return sgn(q) == 0; });
}

Vector add(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::DimensionMismatch, "vector sizes differ");
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Vector subtract(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::DimensionMismatch, "vector sizes differ");
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Vector scale(const Rational& c, const Vector& v) {
  Vector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = c * v[i];
  return out;
}

void axpy(Vector& v, const Rational& c, const Vector& w) {
  if (sgn(c) == 0) return;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (sgn(w[i]) != 0) v[i] += c * w[i];
  }
}

// ---------------------------------------------------------------------------

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Rational(0)) {}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(std::size_t cols, const std::vector<Vector>& rows) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error(ErrorKind::DimensionMismatch, "row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::from_columns(std::size_t rows, const std::vector<Vector>& columns) {
  Matrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) {
      throw Error(ErrorKind::DimensionMismatch, "column length mismatch");
    }
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Vector Matrix::apply(const Vector& v) const {
  if (v.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "matrix-vector size mismatch");
  Vector out = zero_vector(rows_);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (sgn(v[c]) == 0) continue;
    for (std::size_t r = 0; r < rows_; ++r) {
      const Rational& a = (*this)(r, c);
      if (sgn(a) != 0) out[r] += a * v[c];
    }
  }
  return out;
}

bool Matrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Rational& q) { return sgn(q) == 0; });
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorKind::DimensionMismatch, "matrix product shape mismatch");
  Matrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Rational& bkj = b(k, j);
        if (sgn(bkj) != 0) out(i, j) += aik * bkj;
      }
    }
  }
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
    throw Error(ErrorKind::DimensionMismatch, "matrix sum shape mismatch");
  }
  Matrix out = a;
  for (std::size_t i = 0; i < out.entries_.size(); ++i) out.entries_[i] += b.entries_[i];
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
    throw Error(ErrorKind::DimensionMismatch, "matrix difference shape mismatch");
  }
  Matrix out = a;
  for (std::size_t i = 0; i < out.entries_.size(); ++i) out.entries_[i] -= b.entries_[i];
  return out;
}

// ---------------------------------------------------------------------------

RrefResult rref(const Matrix& m) {
  Matrix a = m;
  std::vector<std::size_t> pivots;
  std::size_t lead_row = 0;
  for (std::size_t col = 0; col < a.cols() && lead_row < a.rows(); ++col) {
    std::size_t pivot = lead_row;
    while (pivot < a.rows() && sgn(a(pivot, col)) == 0) ++pivot;
    if (pivot == a.rows()) continue;
    if (pivot != lead_row) {
      for (std::size_t c = 0; c < a.cols(); ++c) swap(a(pivot, c), a(lead_row, c));
    }
    Rational inv = 1 / a(lead_row, col);
    for (std::size_t c = col; c < a.cols(); ++c) a(lead_row, c) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == lead_row || sgn(a(r, col)) == 0) continue;
      Rational factor = a(r, col);
      for (std::size_t c = col; c < a.cols(); ++c) {
        if (sgn(a(lead_row, c)) != 0) a(r, c) -= factor * a(lead_row, c);
      }
    }
    pivots.push_back(col);
    ++lead_row;
  }
  return {std::move(a), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

std::vector<Vector> nullspace(const Matrix& m) {
  auto [reduced, pivots] = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v = zero_vector(m.cols());
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -reduced(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  auto [reduced, pivots] = rref(aug);
  if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1)) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = reduced(r, n + c);
  return inv;
}

// ---------------------------------------------------------------------------

Subspace Subspace::span(std::size_t ambient, const std::vector<Vector>& vectors) {
  Subspace s;
  s.ambient_ = ambient;
  if (vectors.empty()) return s;
  auto [reduced, pivots] = rref(Matrix::from_rows(ambient, vectors));
  for (std::size_t i = 0; i < pivots.size(); ++i) s.basis_.push_back(reduced.row(i));
  s.pivots_ = std::move(pivots);
  return s;
}

Subspace Subspace::zero(std::size_t ambient) {
  Subspace s;
  s.ambient_ = ambient;
  return s;
}

Subspace Subspace::full(std::size_t ambient) {
  Subspace s;
  s.ambient_ = ambient;
  for (std::size_t i = 0; i < ambient; ++i) {
    s.basis_.push_back(unit_vector(ambient, i));
    s.pivots_.push_back(i);
  }
  return s;
}

std::optional<Vector> Subspace::coordinates(const Vector& v) const {
  if (v.size() != ambient_) throw Error(ErrorKind::DimensionMismatch, "vector outside ambient space");
  Vector coords(basis_.size());
  Vector residual = v;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    coords[i] = v[pivots_[i]];
    axpy(residual, -coords[i], basis_[i]);
  }
  if (!is_zero(residual)) return std::nullopt;
  return coords;
}

bool Subspace::contains(const Vector& v) const { return coordinates(v).has_value(); }

Vector Subspace::combine(const Vector& coords) const {
  if (coords.size() != basis_.size()) {
    throw Error(ErrorKind::DimensionMismatch, "coordinate count differs from subspace dimension");
  }
  Vector out = zero_vector(ambient_);
  for (std::size_t i = 0; i < basis_.size(); ++i) axpy(out, coords[i], basis_[i]);
  return out;
}

bool Subspace::is_subspace_of(const Subspace& other) const {
  if (ambient_ != other.ambient_) throw Error(ErrorKind::DimensionMismatch, "ambient dimensions differ");
  return std::all_of(basis_.begin(), basis_.end(),
                     [&](const Vector& b) { return other.contains(b); });
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) {
    throw Error(ErrorKind::DimensionMismatch, "cannot intersect subspaces of different ambient spaces");
  }
  const std::size_t n = a.ambient_dim();
  if (a.dim() == 0 || b.dim() == 0) return Subspace::zero(n);
  std::vector<Vector> columns = a.basis();
  for (const auto& v : b.basis()) columns.push_back(scale(-1, v));
  auto kernel = nullspace(Matrix::from_columns(n, columns));
  std::vector<Vector> vectors;
  vectors.reserve(kernel.size());
  for (const auto& k : kernel) {
    Vector coords(k.begin(), k.begin() + static_cast<std::ptrdiff_t>(a.dim()));
    vectors.push_back(a.combine(coords));
  }
  return Subspace::span(n, vectors);
}

Subspace intersect_all(std::span<const Subspace> spaces, std::size_t ambient) {
  Subspace acc = Subspace::full(ambient);
  for (const auto& s : spaces) acc = intersect(acc, s);
  return acc;
}

// ---------------------------------------------------------------------------

LinearMap::LinearMap(Subspace domain, Subspace codomain, Matrix matrix)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), matrix_(std::move(matrix)) {
  if (domain_.ambient_dim() != codomain_.ambient_dim() || matrix_.rows() != codomain_.dim() ||
      matrix_.cols() != domain_.dim()) {
    throw Error(ErrorKind::DimensionMismatch, "linear map matrix does not fit its subspaces");
  }
}

LinearMap LinearMap::from_images(Subspace domain, Subspace codomain,
                                 const std::vector<Vector>& sources,
                                 const std::vector<Vector>& images) {
  if (sources.size() != images.size() || sources.size() != domain.dim()) {
    throw Error(ErrorKind::DimensionMismatch, "source/image lists must match the domain dimension");
  }
  const std::size_t n = domain.ambient_dim();
  if (Subspace::span(n, sources) != domain) {
    throw Error(ErrorKind::DimensionMismatch, "sources do not span the domain");
  }
  // Express each echelon basis vector of the domain in terms of the sources.
  Matrix source_cols = Matrix::from_columns(n, sources);
  Matrix out(codomain.dim(), domain.dim());
  for (std::size_t j = 0; j < domain.dim(); ++j) {
    Matrix aug(n, sources.size() + 1);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < sources.size(); ++c) aug(r, c) = source_cols(r, c);
      aug(r, sources.size()) = domain.basis()[j][r];
    }
    auto [reduced, pivots] = rref(aug);
    Vector weights = zero_vector(sources.size());
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      if (pivots[i] < sources.size()) weights[pivots[i]] = reduced(i, sources.size());
    }
    Vector image = zero_vector(n);
    for (std::size_t i = 0; i < sources.size(); ++i) axpy(image, weights[i], images[i]);
    auto coords = codomain.coordinates(image);
    if (!coords) throw Error(ErrorKind::DimensionMismatch, "image falls outside the codomain");
    for (std::size_t r = 0; r < codomain.dim(); ++r) out(r, j) = (*coords)[r];
  }
  return LinearMap(std::move(domain), std::move(codomain), std::move(out));
}

LinearMap LinearMap::identity(const Subspace& space) {
  return LinearMap(space, space, Matrix::identity(space.dim()));
}

std::optional<Vector> LinearMap::try_apply(const Vector& v) const {
  auto coords = domain_.coordinates(v);
  if (!coords) return std::nullopt;
  return codomain_.combine(matrix_.apply(*coords));
}

Vector LinearMap::apply(const Vector& v) const {
  auto out = try_apply(v);
  if (!out) throw Error(ErrorKind::DimensionMismatch, "vector outside the domain of the map");
  return *out;
}

std::vector<Vector> LinearMap::images() const {
  std::vector<Vector> out;
  out.reserve(domain_.dim());
  for (std::size_t j = 0; j < domain_.dim(); ++j) out.push_back(codomain_.combine(matrix_.column(j)));
  return out;
}

Subspace LinearMap::image_of(const Subspace& sub) const {
  std::vector<Vector> vectors;
  for (const auto& b : sub.basis()) vectors.push_back(apply(b));
  return Subspace::span(domain_.ambient_dim(), vectors);
}

Subspace LinearMap::preimage_of(const Subspace& target) const {
  const std::size_t n = domain_.ambient_dim();
  if (domain_.dim() == 0 || target.dim() == 0) {
    // Only the kernel maps into the zero subspace.
    if (domain_.dim() == 0) return Subspace::zero(n);
    std::vector<Vector> kernel_vectors;
    for (const auto& k : nullspace(matrix_)) kernel_vectors.push_back(domain_.combine(k));
    return Subspace::span(n, kernel_vectors);
  }
  // Solve sum_j c_j f(d_j) - sum_k t_k s_k = 0 for (c, t).
  std::vector<Vector> columns = images();
  for (const auto& s : target.basis()) columns.push_back(scale(-1, s));
  std::vector<Vector> vectors;
  for (const auto& k : nullspace(Matrix::from_columns(n, columns))) {
    Vector coords(k.begin(), k.begin() + static_cast<std::ptrdiff_t>(domain_.dim()));
    vectors.push_back(domain_.combine(coords));
  }
  return Subspace::span(n, vectors);
}

LinearMap LinearMap::restrict_to(const Subspace& sub, const Subspace& codomain) const {
  if (!sub.is_subspace_of(domain_)) {
    throw Error(ErrorKind::DimensionMismatch, "restriction target is not inside the domain");
  }
  std::vector<Vector> imgs;
  for (const auto& b : sub.basis()) imgs.push_back(apply(b));
  return from_images(sub, codomain, sub.basis(), imgs);
}

bool LinearMap::is_bijective() const {
  return domain_.dim() == codomain_.dim() && rank(matrix_) == domain_.dim();
}

LinearMap LinearMap::inverse() const {
  auto inv = excross::inverse(matrix_);
  if (!inv) throw Error(ErrorKind::DimensionMismatch, "map is not invertible");
  return LinearMap(codomain_, domain_, *inv);
}

LinearMap compose(const LinearMap& f, const LinearMap& g) {
  Subspace dom = g.preimage_of(f.domain());
  std::vector<Vector> imgs;
  for (const auto& b : dom.basis()) imgs.push_back(f.apply(g.apply(b)));
  Subspace range = Subspace::span(dom.ambient_dim(), imgs);
  return LinearMap::from_images(dom, range, dom.basis(), imgs);
}

bool same_partial_map(const LinearMap& f, const LinearMap& g) {
  if (f.domain() != g.domain()) return false;
  for (const auto& b : f.domain().basis()) {
    if (f.apply(b) != g.apply(b)) return false;
  }
  return true;
}

}  // namespace excross
