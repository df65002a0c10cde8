#include "core/crossed_product.hpp"

#include <algorithm>
#include <optional>
#include <utility>

#include "core/error.hpp"

namespace excross {

namespace {

// The data a twisted product is built from. maps[k] : ideals[star[k]] -> ideals[k].
struct TwistedInput {
  std::vector<std::string> names;
  std::vector<Subspace> ideals;
  std::vector<LinearMap> maps;
  std::vector<std::size_t> star;
  std::vector<std::size_t> product;  // product[k * blocks + l] = kl
};

std::string basis_label(const StructureAlgebra& A, const Subspace& ideal, std::size_t i,
                        const std::string& name) {
  return "(" + A.labels()[ideal.pivots()[i]] + "," + name + ")";
}

TwistedProduct build_twisted(const StructureAlgebra& A, const TwistedInput& in) {
  const std::size_t blocks = in.ideals.size();
  std::vector<TwistedProduct::Block> layout;
  std::vector<std::string> labels;
  std::size_t dim = 0;
  for (std::size_t k = 0; k < blocks; ++k) {
    if (!is_two_sided_ideal(A, in.ideals[k])) {
      throw Error(ErrorKind::InvalidAction, "ideal of " + in.names[k] + " is not two-sided");
    }
    layout.push_back({in.names[k], in.ideals[k], dim});
    for (std::size_t i = 0; i < in.ideals[k].dim(); ++i) {
      labels.push_back(basis_label(A, in.ideals[k], i, in.names[k]));
    }
    dim += in.ideals[k].dim();
  }

  // pulled[k][i] = φ_{k*}(a_i) for the basis vector a_i of I_k.
  std::vector<std::vector<Vector>> pulled(blocks);
  for (std::size_t k = 0; k < blocks; ++k) {
    for (const auto& a : in.ideals[k].basis()) pulled[k].push_back(in.maps[in.star[k]].apply(a));
  }

  std::vector<SparseVector> products(dim * dim);
  for (std::size_t k = 0; k < blocks; ++k) {
    for (std::size_t i = 0; i < in.ideals[k].dim(); ++i) {
      const std::size_t row = layout[k].offset + i;
      for (std::size_t l = 0; l < blocks; ++l) {
        const std::size_t kl = in.product[k * blocks + l];
        for (std::size_t j = 0; j < in.ideals[l].dim(); ++j) {
          const std::size_t col = layout[l].offset + j;
          Vector inner = A.multiply(pulled[k][i], in.ideals[l].basis()[j]);
          auto image = in.maps[k].try_apply(inner);
          if (!image) {
            throw Error(ErrorKind::ProductEscapesIdeal,
                        labels[row] + " * " + labels[col] + ": inner product leaves the domain of " + in.names[k]);
          }
          auto coords = in.ideals[kl].coordinates(*image);
          if (!coords) {
            throw Error(ErrorKind::ProductEscapesIdeal,
                        labels[row] + " * " + labels[col] + ": product leaves the ideal of " + in.names[kl]);
          }
          SparseVector& out = products[row * dim + col];
          for (std::size_t t = 0; t < coords->size(); ++t) {
            if (sgn((*coords)[t]) != 0) out.emplace_back(layout[kl].offset + t, (*coords)[t]);
          }
        }
      }
    }
  }

  std::optional<std::vector<Vector>> involution;
  if (A.has_involution()) {
    std::vector<Vector> images;
    bool closed = true;
    for (std::size_t k = 0; k < blocks && closed; ++k) {
      const std::size_t ks = in.star[k];
      for (const auto& a : in.ideals[k].basis()) {
        auto image = in.maps[ks].try_apply(A.star(a));
        if (!image) {
          closed = false;
          break;
        }
        Vector v = zero_vector(dim);
        const Vector coords = *in.ideals[ks].coordinates(*image);
        for (std::size_t t = 0; t < coords.size(); ++t) v[layout[ks].offset + t] = coords[t];
        images.push_back(std::move(v));
      }
    }
    if (closed) involution = std::move(images);
  }

  std::optional<Vector> unit;
  if (A.unit() && blocks > 0 && in.ideals[0].dim() == A.dim()) {
    Vector u = zero_vector(dim);
    const Vector coords = *in.ideals[0].coordinates(*A.unit());
    for (std::size_t t = 0; t < coords.size(); ++t) u[t] = coords[t];
    unit = std::move(u);
  }

  return TwistedProduct(A, std::move(layout),
                        StructureAlgebra(std::move(labels), std::move(products), std::move(involution),
                                         std::move(unit)));
}

std::string triple_text(const StructureAlgebra& algebra, const BasisTriple& t) {
  const auto& l = algebra.labels();
  return l[t[0]] + ", " + l[t[1]] + ", " + l[t[2]];
}

Vector column_of(const Matrix& m, std::size_t c) { return m.column(c); }

void require_same_source(const GroupCrossedProduct& cp, const SgCrossedProduct& scp) {
  if (!(cp.source.group() == scp.source.group()) || !(cp.source.algebra() == scp.source.algebra()) ||
      !(restrict_to_group(scp.source) == cp.source)) {
    throw Error(ErrorKind::SourceMismatch, "the crossed products come from different partial actions");
  }
}

Vector dense_product(const StructureAlgebra& algebra, std::size_t i, std::size_t j) {
  return to_dense(algebra.basis_product(i, j), algebra.dim());
}

}  // namespace

// ---------------------------------------------------------------------------

TwistedProduct::TwistedProduct(const StructureAlgebra& coefficients, std::vector<Block> blocks,
                               StructureAlgebra algebra)
    : coefficient_dim_(coefficients.dim()), blocks_(std::move(blocks)), algebra_(std::move(algebra)) {
  owner_.resize(algebra_.dim());
  for (std::size_t k = 0; k < blocks_.size(); ++k) {
    for (std::size_t i = 0; i < blocks_[k].ideal.dim(); ++i) owner_[blocks_[k].offset + i] = k;
  }
}

Vector TwistedProduct::embed(std::size_t k, const Vector& a) const {
  const Block& b = block(k);
  auto coords = b.ideal.coordinates(a);
  if (!coords) throw Error(ErrorKind::DimensionMismatch, "coefficient is outside the ideal of " + b.name);
  Vector out = zero_vector(dim());
  for (std::size_t t = 0; t < coords->size(); ++t) out[b.offset + t] = (*coords)[t];
  return out;
}

Vector TwistedProduct::coefficient(const Vector& x, std::size_t k) const {
  if (x.size() != dim()) throw Error(ErrorKind::DimensionMismatch, "element has wrong length");
  const Block& b = block(k);
  Vector coords(x.begin() + static_cast<std::ptrdiff_t>(b.offset),
                x.begin() + static_cast<std::ptrdiff_t>(b.offset + b.ideal.dim()));
  if (coords.empty()) return zero_vector(coefficient_dim_);
  return b.ideal.combine(coords);
}

// ---------------------------------------------------------------------------

GroupCrossedProduct build_group_cp(const AlgebraPartialAction& action) {
  const GroupTable& G = action.group();
  const std::size_t n = G.order();
  TwistedInput in;
  for (Element g = 0; g < n; ++g) {
    in.names.push_back(G.name(g));
    in.ideals.push_back(action.ideal(g));
    in.maps.push_back(action.alpha(g));
    in.star.push_back(G.inverse(g));
    for (Element h = 0; h < n; ++h) in.product.push_back(G.multiply(g, h));
  }
  return GroupCrossedProduct{action, build_twisted(action.algebra(), in)};
}

SgCrossedProduct build_sg_cp(const SgAction& action, bool check_assoc) {
  const SemigroupTable& T = action.table();
  const std::size_t n = T.size();
  TwistedInput in;
  for (std::size_t s = 0; s < n; ++s) {
    in.names.push_back(T.text(s));
    in.ideals.push_back(action.E(s));
    in.maps.push_back(action.beta(s));
    in.star.push_back(T.star(s));
    for (std::size_t t = 0; t < n; ++t) in.product.push_back(T.product(s, t));
  }
  TwistedProduct L = build_twisted(action.algebra(), in);
  if (check_assoc) {
    if (auto triple = check_associativity(L.algebra())) {
      throw Error(ErrorKind::NonAssociativeL, "L fails associativity at (" + triple_text(L.algebra(), *triple) + ")");
    }
  }

  std::vector<Vector> generators;
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t t = 0; t < n; ++t) {
      if (r == t || !T.leq(r, t)) continue;
      for (const auto& a : action.E(r).basis()) generators.push_back(subtract(L.embed(r, a), L.embed(t, a)));
    }
  }
  Subspace N = two_sided_ideal_closure(L.algebra(), generators);
  std::vector<Vector> reversed(generators.rbegin(), generators.rend());
  Subspace N_recheck = two_sided_ideal_closure(L.algebra(), reversed);

  bool star_closed = true;
  if (L.algebra().has_involution()) {
    for (const auto& v : N.basis()) {
      if (!N.contains(L.algebra().star(v))) {
        star_closed = false;
        break;
      }
    }
  }
  Quotient quotient = quotient_algebra(L.algebra(), N);
  return SgCrossedProduct{action,       std::move(L),    std::move(generators), std::move(N),
                          std::move(N_recheck), star_closed, std::move(quotient)};
}

// ---------------------------------------------------------------------------

Matrix iso_phi(const GroupCrossedProduct& cp, const SgCrossedProduct& scp) {
  require_same_source(cp, scp);
  const TwistedProduct& P = cp.product;
  const SemigroupTable& T = scp.source.table();
  std::vector<Vector> columns;
  for (std::size_t i = 0; i < P.dim(); ++i) {
    const std::size_t g = P.block_of(i);
    const Vector& a = P.block(g).ideal.basis()[i - P.block(g).offset];
    columns.push_back(scp.quotient.project(scp.L.embed(T.generator_index(g), a)));
  }
  return Matrix::from_columns(scp.quotient.algebra.dim(), columns);
}

Matrix psi_on_L(const SgCrossedProduct& scp, const GroupCrossedProduct& cp) {
  require_same_source(cp, scp);
  const TwistedProduct& L = scp.L;
  const SemigroupTable& T = scp.source.table();
  std::vector<Vector> columns;
  for (std::size_t i = 0; i < L.dim(); ++i) {
    const std::size_t s = L.block_of(i);
    const Vector& a = L.block(s).ideal.basis()[i - L.block(s).offset];
    columns.push_back(cp.product.embed(T.gamma(s), a));
  }
  return Matrix::from_columns(cp.product.dim(), columns);
}

Matrix iso_psi(const SgCrossedProduct& scp, const GroupCrossedProduct& cp) {
  const Matrix psi = psi_on_L(scp, cp);
  for (const auto& v : scp.N.basis()) {
    if (!is_zero(psi.apply(v))) {
      throw Error(ErrorKind::NotWellDefined, "psi does not vanish on a basis vector of N");
    }
  }
  std::vector<Vector> columns;
  for (auto c : scp.quotient.representatives) columns.push_back(psi.column(c));
  return Matrix::from_columns(cp.product.dim(), columns);
}

namespace {

// Tracks one check: counts instances and keeps the first failure.
class Check {
 public:
  Check(std::string id, std::string statement) {
    result_.id = std::move(id);
    result_.statement = std::move(statement);
  }
  void record(bool ok, const std::string& witness) {
    ++result_.checked;
    if (!ok && result_.passed) {
      result_.passed = false;
      result_.witness = witness;
    }
  }
  template <class F>
  void record_lazy(bool ok, F&& witness) {
    ++result_.checked;
    if (!ok && result_.passed) {
      result_.passed = false;
      result_.witness = witness();
    }
  }
  AxiomResult take() { return std::move(result_); }

 private:
  AxiomResult result_;
};

// f multiplicative from `source` to `target` on source basis pairs.
AxiomResult multiplicative(const std::string& id, const std::string& statement, const Matrix& f,
                           const StructureAlgebra& source, const StructureAlgebra& target) {
  Check check(id, statement);
  std::vector<Vector> images;
  for (std::size_t i = 0; i < source.dim(); ++i) images.push_back(column_of(f, i));
  for (std::size_t i = 0; i < source.dim(); ++i) {
    for (std::size_t j = 0; j < source.dim(); ++j) {
      const bool ok = f.apply(dense_product(source, i, j)) == target.multiply(images[i], images[j]);
      check.record_lazy(ok, [&] { return source.labels()[i] + " * " + source.labels()[j]; });
    }
  }
  return check.take();
}

AxiomResult star_preserving(const std::string& id, const std::string& statement, const Matrix& f,
                            const StructureAlgebra& source, const StructureAlgebra& target) {
  Check check(id, statement);
  if (!source.has_involution() || !target.has_involution()) {
    AxiomResult skipped = check.take();
    skipped.statement += " (skipped: no involution)";
    return skipped;
  }
  for (std::size_t i = 0; i < source.dim(); ++i) {
    const bool ok = f.apply(source.involution()[i]) == target.star(f.column(i));
    check.record_lazy(ok, [&] { return source.labels()[i]; });
  }
  return check.take();
}

AxiomResult is_identity(const std::string& id, const std::string& statement, const Matrix& m,
                        const StructureAlgebra& space) {
  Check check(id, statement);
  const bool square = m.rows() == m.cols() && m.rows() == space.dim();
  for (std::size_t i = 0; i < space.dim(); ++i) {
    const bool ok = square && m.column(i) == unit_vector(space.dim(), i);
    check.record_lazy(ok, [&] { return space.labels()[i]; });
  }
  return check.take();
}

}  // namespace

IsoReport check_isomorphism(const GroupCrossedProduct& cp, const SgCrossedProduct& scp) {
  IsoReport report;
  const StructureAlgebra& G = cp.product.algebra();
  const StructureAlgebra& Q = scp.quotient.algebra;
  report.dim_group_cp = G.dim();
  report.dim_L = scp.L.dim();
  report.dim_N = scp.N.dim();
  report.dim_quotient = Q.dim();
  auto& out = report.checks.results;

  {
    Check dims("dimensions", "dim(A x| G) = dim L - dim N");
    dims.record(report.dim_group_cp + report.dim_N == report.dim_L,
                std::to_string(report.dim_group_cp) + " != " + std::to_string(report.dim_L) + " - " +
                    std::to_string(report.dim_N));
    out.push_back(dims.take());
  }
  {
    Check recheck("N_recheck", "closure from the reversed generator order gives the same N");
    recheck.record(scp.N_certified(), "dims " + std::to_string(scp.N.dim()) + " and " +
                                          std::to_string(scp.N_recheck.dim()));
    out.push_back(recheck.take());
  }

  report.phi = iso_phi(cp, scp);
  const Matrix psi_L = psi_on_L(scp, cp);
  {
    Check kills("psi_kills_N", "psi vanishes on every basis vector of N");
    for (std::size_t r = 0; r < scp.N.dim(); ++r) {
      kills.record(is_zero(psi_L.apply(scp.N.basis()[r])), "N basis vector " + std::to_string(r));
    }
    out.push_back(kills.take());
  }
  std::vector<Vector> columns;
  for (auto c : scp.quotient.representatives) columns.push_back(psi_L.column(c));
  report.psi = Matrix::from_columns(G.dim(), columns);

  {
    Check full("phi_bijective", "phi has full rank between spaces of equal dimension");
    full.record(Q.dim() == G.dim() && rank(report.phi) == G.dim(),
                "rank " + std::to_string(rank(report.phi)) + " for dims " + std::to_string(G.dim()) + " -> " +
                    std::to_string(Q.dim()));
    out.push_back(full.take());
  }
  out.push_back(multiplicative("phi_multiplicative", "phi(xy) = phi(x) phi(y) on basis pairs", report.phi, G, Q));
  out.push_back(multiplicative("psi_multiplicative", "psi(xy) = psi(x) psi(y) on basis pairs", report.psi, Q, G));
  out.push_back(star_preserving("phi_star", "phi(x*) = phi(x)* on the basis", report.phi, G, Q));
  out.push_back(star_preserving("psi_star", "psi(x*) = psi(x)* on the basis", report.psi, Q, G));
  if (report.phi.rows() == report.psi.cols() && report.phi.cols() == report.psi.rows()) {
    out.push_back(is_identity("phi_psi_identity", "phi psi = id on L/N", report.phi * report.psi, Q));
    out.push_back(is_identity("psi_phi_identity", "psi phi = id on A x| G", report.psi * report.phi, G));
  } else {
    Check bad("phi_psi_identity", "phi psi = id on L/N");
    bad.record(false, "shapes differ");
    out.push_back(bad.take());
  }
  return report;
}

ValidationReport check_quotient_identities(const SgCrossedProduct& scp) {
  const SemigroupTable& T = scp.source.table();
  const GroupTable& G = T.group();
  const TwistedProduct& L = scp.L;
  auto same_class = [&](std::size_t s, std::size_t t, const Vector& a) {
    try {
      return scp.quotient.project(L.embed(s, a)) == scp.quotient.project(L.embed(t, a));
    } catch (const Error&) {
      return false;
    }
  };
  ValidationReport report;
  Check first("bracket_product", "class(a d_{[g][h]}) = class(a d_[gh]) for a in E_{[g][h]}");
  for (Element g = 0; g < G.order(); ++g) {
    for (Element h = 0; h < G.order(); ++h) {
      const std::size_t s = T.product(T.generator_index(g), T.generator_index(h));
      const std::size_t t = T.generator_index(G.multiply(g, h));
      for (std::size_t i = 0; i < scp.source.E(s).dim(); ++i) {
        first.record_lazy(same_class(s, t, scp.source.E(s).basis()[i]), [&] {
          return "g=" + G.name(g) + ", h=" + G.name(h) + ", basis vector " + std::to_string(i);
        });
      }
    }
  }
  report.results.push_back(first.take());
  Check second("epsilon_strip", "class(a d_s) = class(a d_[gamma(s)]) for a in E_s");
  for (std::size_t s = 0; s < T.size(); ++s) {
    const std::size_t t = T.generator_index(T.gamma(s));
    for (std::size_t i = 0; i < scp.source.E(s).dim(); ++i) {
      second.record_lazy(same_class(s, t, scp.source.E(s).basis()[i]),
                         [&] { return "s=" + T.text(s) + ", basis vector " + std::to_string(i); });
    }
  }
  report.results.push_back(second.take());
  return report;
}

AxiomResult associativity_result(const std::string& id, const StructureAlgebra& algebra) {
  AxiomResult result{id, "(b_i b_j) b_k = b_i (b_j b_k) for every basis triple", true, 0, ""};
  const std::size_t n = algebra.dim();
  result.checked = n * n * n;
  if (auto triple = check_associativity(algebra)) {
    result.passed = false;
    result.witness = "(" + triple_text(algebra, *triple) + ")";
  }
  return result;
}

AxiomResult star_laws_result(const std::string& id, const StructureAlgebra& algebra) {
  AxiomResult result{id, "(xy)* = y*x* and x** = x on basis pairs", true, 0, ""};
  if (!algebra.has_involution()) {
    result.statement += " (skipped: no involution)";
    return result;
  }
  const std::size_t n = algebra.dim();
  result.checked = n * n + n;
  auto defects = algebra.structural_defects();
  std::erase_if(defects, [](const std::string& d) { return d.starts_with("unit"); });
  if (!defects.empty()) {
    result.passed = false;
    result.witness = defects.front();
  }
  return result;
}

Rational one_norm(const TwistedProduct& product, const Vector& x) {
  Rational total = 0;
  for (std::size_t k = 0; k < product.block_count(); ++k) {
    Rational sup = 0;
    for (const auto& c : product.coefficient(x, k)) sup = std::max(sup, Rational(abs(c)));
    total += sup;
  }
  return total;
}

}  // namespace excross
