#include "core/covariant.hpp"

#include <cmath>
#include <random>
#include <string>

#include "core/error.hpp"

namespace excross {

namespace {

Matrix zero_matrix(std::size_t n) { return Matrix(n, n); }

// Column space of m.
Subspace column_space(const Matrix& m) {
  std::vector<Vector> cols;
  for (std::size_t c = 0; c < m.cols(); ++c) cols.push_back(m.column(c));
  return Subspace::span(m.rows(), cols);
}

// span of π(b)H over the basis of an ideal.
Subspace range_of_ideal(const CovariantRep& rep, const Subspace& ideal) {
  std::vector<Vector> cols;
  for (const auto& b : ideal.basis()) {
    const Matrix p = rep.pi_of(b);
    for (std::size_t c = 0; c < p.cols(); ++c) cols.push_back(p.column(c));
  }
  return Subspace::span(rep.space_dim, cols);
}

struct Tally {
  AxiomResult result;
  Tally(std::string id, std::string statement) {
    result.id = std::move(id);
    result.statement = std::move(statement);
  }
  template <class F>
  void record(bool ok, F&& witness) {
    ++result.checked;
    if (!ok && result.passed) {
      result.passed = false;
      result.witness = witness();
    }
  }
};

}  // namespace

Matrix CovariantRep::pi_of(const Vector& a) const {
  if (a.size() != pi.size()) throw Error(ErrorKind::DimensionMismatch, "coefficient has wrong length");
  Matrix out = zero_matrix(space_dim);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t r = 0; r < space_dim; ++r)
      for (std::size_t c = 0; c < space_dim; ++c) out(r, c) += a[i] * pi[i](r, c);
  }
  return out;
}

CovariantRep natural_covariant_rep(const SetPartialAction& set_action, const SgAction& action) {
  const std::size_t n = set_action.base_size();
  if (!(set_action.group() == action.group()) ||
      !(action.algebra() == StructureAlgebra::function_algebra(n)) ||
      !(restrict_to_group(action) == induce_algebra_action(set_action))) {
    throw Error(ErrorKind::SourceMismatch, "the S(G)-action is not induced from the set-level action");
  }
  CovariantRep rep;
  rep.space_dim = n;
  for (std::size_t x = 0; x < n; ++x) {
    Matrix p = zero_matrix(n);
    p(x, x) = 1;
    rep.pi.push_back(std::move(p));
  }
  const SemigroupTable& T = action.table();
  for (std::size_t s = 0; s < T.size(); ++s) {
    const PartialBijection& theta = set_action.theta(T.gamma(s));
    const Subspace& source = action.E(T.star(s));
    Matrix v = zero_matrix(n);
    for (std::size_t x = 0; x < n; ++x) {
      if (!source.contains(unit_vector(n, x))) continue;
      if (auto y = theta(x)) v(*y, x) = 1;
    }
    rep.nu.push_back(std::move(v));
  }
  return rep;
}

bool is_partial_isometry(const Matrix& u) {
  if (u.rows() != u.cols()) throw Error(ErrorKind::NotSquare, "partial isometry test needs a square matrix");
  const Matrix ut = u.transpose();
  const bool direct = u * ut * u == u;
  const Matrix p = ut * u;
  const bool projection = p * p == p && p.transpose() == p;
  if (direct != projection) {
    throw Error(ErrorKind::NotWellDefined, "U = UU*U and U*U being a projection disagree");
  }
  return direct;
}

Matrix pi_times_nu(const CovariantRep& rep, const TwistedProduct& L, const Vector& x) {
  if (rep.nu.size() != L.block_count() || rep.pi.size() != L.coefficient_dim()) {
    throw Error(ErrorKind::SourceMismatch, "representation does not match the algebra L");
  }
  Matrix out = zero_matrix(rep.space_dim);
  for (std::size_t s = 0; s < L.block_count(); ++s) {
    const Vector a = L.coefficient(x, s);
    if (is_zero(a)) continue;
    out = out + rep.pi_of(a) * rep.nu[s];
  }
  return out;
}

ValidationReport check_covariant(const CovariantRep& rep, const SgCrossedProduct& scp) {
  const SgAction& B = scp.source;
  const SemigroupTable& T = B.table();
  const StructureAlgebra& A = B.algebra();
  const TwistedProduct& L = scp.L;
  if (rep.nu.size() != T.size() || rep.pi.size() != A.dim()) {
    throw Error(ErrorKind::SourceMismatch, "representation does not match the action");
  }
  ValidationReport report;

  Tally pi_mult("pi_multiplicative", "pi(b_i b_j) = pi(b_i) pi(b_j)");
  for (std::size_t i = 0; i < A.dim(); ++i)
    for (std::size_t j = 0; j < A.dim(); ++j)
      pi_mult.record(rep.pi_of(to_dense(A.basis_product(i, j), A.dim())) == rep.pi[i] * rep.pi[j],
                     [&] { return A.labels()[i] + " * " + A.labels()[j]; });
  report.results.push_back(pi_mult.result);

  Tally unital("pi_unital", "pi(1) = I");
  if (A.unit()) {
    unital.record(rep.pi_of(*A.unit()) == Matrix::identity(rep.space_dim), [] { return std::string("unit"); });
  } else {
    unital.result.statement += " (skipped: no unit)";
  }
  report.results.push_back(unital.result);

  Tally iso("partial_isometry", "nu_s = nu_s nu_s* nu_s");
  for (std::size_t s = 0; s < T.size(); ++s) iso.record(is_partial_isometry(rep.nu[s]), [&] { return "s=" + T.text(s); });
  report.results.push_back(iso.result);

  Tally mult("nu_multiplicative", "nu_s nu_t = nu_st");
  for (std::size_t s = 0; s < T.size(); ++s)
    for (std::size_t t = 0; t < T.size(); ++t)
      mult.record(rep.nu[s] * rep.nu[t] == rep.nu[T.product(s, t)],
                  [&] { return "s=" + T.text(s) + ", t=" + T.text(t); });
  report.results.push_back(mult.result);

  Tally cov("covariance", "nu_s pi(a) nu_s* = pi(beta_s(a)) for a in E_s*");
  for (std::size_t s = 0; s < T.size(); ++s) {
    const Subspace& source = B.E(T.star(s));
    for (std::size_t i = 0; i < source.dim(); ++i) {
      const Vector& a = source.basis()[i];
      cov.record(rep.nu[s] * rep.pi_of(a) * rep.nu[T.star(s)] == rep.pi_of(B.beta(s).apply(a)),
                 [&] { return "s=" + T.text(s) + ", basis vector " + std::to_string(i); });
    }
  }
  report.results.push_back(cov.result);

  Tally initial("initial_space", "range of nu_s* nu_s = pi(E_s*) H");
  Tally final_space("final_space", "range of nu_s nu_s* = pi(E_s) H");
  for (std::size_t s = 0; s < T.size(); ++s) {
    const Matrix& v = rep.nu[s];
    initial.record(column_space(v.transpose() * v) == range_of_ideal(rep, B.E(T.star(s))),
                   [&] { return "s=" + T.text(s); });
    final_space.record(column_space(v * v.transpose()) == range_of_ideal(rep, B.E(s)),
                       [&] { return "s=" + T.text(s); });
  }
  report.results.push_back(initial.result);
  report.results.push_back(final_space.result);

  std::vector<Matrix> images;
  for (std::size_t i = 0; i < L.dim(); ++i) images.push_back(pi_times_nu(rep, L, unit_vector(L.dim(), i)));
  Tally integrated("integrated_multiplicative", "(pi x nu)(xy) = (pi x nu)(x) (pi x nu)(y) on L");
  for (std::size_t i = 0; i < L.dim(); ++i)
    for (std::size_t j = 0; j < L.dim(); ++j)
      integrated.record(pi_times_nu(rep, L, to_dense(L.algebra().basis_product(i, j), L.dim())) == images[i] * images[j],
                        [&] { return L.algebra().labels()[i] + " * " + L.algebra().labels()[j]; });
  report.results.push_back(integrated.result);

  Tally kills("kills_N", "(pi x nu)(n) = 0 for every basis vector n of N");
  for (std::size_t r = 0; r < scp.N.dim(); ++r)
    kills.record(pi_times_nu(rep, L, scp.N.basis()[r]).is_zero(), [&] { return "N basis vector " + std::to_string(r); });
  report.results.push_back(kills.result);
  return report;
}

CovariantRep covariant_from_representation(const SgCrossedProduct& scp, std::span<const Matrix> rho) {
  const TwistedProduct& L = scp.L;
  if (rho.size() != L.dim() || rho.empty()) {
    throw Error(ErrorKind::SourceMismatch, "representation must give one matrix per basis vector of L");
  }
  const std::size_t d = rho.front().rows();
  auto rho_of = [&](const Vector& x) {
    Matrix out = zero_matrix(d);
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (sgn(x[i]) == 0) continue;
      for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) out(r, c) += x[i] * rho[i](r, c);
    }
    return out;
  };
  const StructureAlgebra& A = scp.source.algebra();
  CovariantRep rep;
  rep.space_dim = d;
  for (std::size_t i = 0; i < A.dim(); ++i) rep.pi.push_back(rho_of(L.embed(0, unit_vector(A.dim(), i))));
  for (std::size_t s = 0; s < L.block_count(); ++s) {
    auto u = local_unit(A, scp.source.E(s));
    if (!u) throw Error(ErrorKind::NotWellDefined, "E_" + L.block(s).name + " has no unit");
    rep.nu.push_back(rho_of(L.embed(s, *u)));
  }
  return rep;
}

AxiomResult contractivity_check(const CovariantRep& rep, const TwistedProduct& L, std::size_t samples,
                                std::uint64_t seed, double tolerance) {
  Tally tally("contractivity", "||(pi x nu)(x)|| <= ||x||_1 on " + std::to_string(samples) + " random x (seed " +
                                   std::to_string(seed) + ")");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> keep(0, 1);
  std::uniform_int_distribution<int> numerator(-4, 4);
  std::uniform_int_distribution<int> denominator(1, 3);
  for (std::size_t k = 0; k < samples; ++k) {
    Vector x = zero_vector(L.dim());
    for (auto& c : x) {
      if (keep(rng) == 0) continue;
      c = Rational(numerator(rng), denominator(rng));
      c.canonicalize();
    }
    const double lhs = operator_norm(pi_times_nu(rep, L, x), seed + k);
    const double rhs = one_norm(L, x).get_d();
    tally.record(lhs <= rhs + tolerance, [&] {
      return "sample " + std::to_string(k) + ": " + std::to_string(lhs) + " > " + std::to_string(rhs);
    });
  }
  return tally.result;
}

double operator_norm(const Matrix& m, std::uint64_t seed, int iterations) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  if (rows == 0 || cols == 0) return 0.0;
  std::vector<double> a(rows * cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) a[r * cols + c] = m(r, c).get_d();
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  std::vector<double> v(cols), w(rows);
  for (auto& x : v) x = normal(rng);
  double sigma = 0.0;
  for (int it = 0; it < iterations; ++it) {
    double norm = 0.0;
    for (double x : v) norm += x * x;
    norm = std::sqrt(norm);
    if (norm == 0.0) return 0.0;
    for (auto& x : v) x /= norm;
    for (std::size_t r = 0; r < rows; ++r) {
      w[r] = 0.0;
      for (std::size_t c = 0; c < cols; ++c) w[r] += a[r * cols + c] * v[c];
    }
    double wn = 0.0;
    for (double x : w) wn += x * x;
    sigma = std::sqrt(wn);
    for (std::size_t c = 0; c < cols; ++c) {
      v[c] = 0.0;
      for (std::size_t r = 0; r < rows; ++r) v[c] += a[r * cols + c] * w[r];
    }
  }
  return sigma;
}

}  // namespace excross
