#include "core/covariant.hpp"
#include "core/crossed_product.hpp"
#include "core/error.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace excross;
namespace fx = excross::fixtures;

namespace {

// Ideal closure by repeated full multiplication until the span stops growing.
Subspace naive_closure(const StructureAlgebra& A, const std::vector<Vector>& gens) {
  Subspace current = Subspace::span(A.dim(), gens);
  while (true) {
    std::vector<Vector> all = current.basis();
    for (const auto& v : current.basis())
      for (std::size_t i = 0; i < A.dim(); ++i) {
        all.push_back(A.multiply(v, unit_vector(A.dim(), i)));
        all.push_back(A.multiply(unit_vector(A.dim(), i), v));
      }
    Subspace next = Subspace::span(A.dim(), all);
    if (next == current) return current;
    current = next;
  }
}

Vector basis(std::size_t n, std::size_t i) { return unit_vector(n, i); }

}  // namespace

TEST_CASE("group crossed product of P1") {
  auto cp = build_group_cp(induce_algebra_action(fx::p1()));
  const auto& P = cp.product;
  CHECK(P.dim() == 3);
  CHECK(P.algebra().labels() == std::vector<std::string>{"(e0,e)", "(e1,e)", "(e0,a)"});
  // (e0 d_a)(e0 d_a) = e0 d_e
  CHECK(P.algebra().multiply(basis(3, 2), basis(3, 2)) == basis(3, 0));
  CHECK(P.algebra().star(basis(3, 2)) == basis(3, 2));
  CHECK(P.embed(1, basis(2, 0)) == basis(3, 2));
  CHECK_THROWS_AS(P.embed(1, basis(2, 1)), Error);
  CHECK(associativity_result("assoc", P.algebra()).passed);
  CHECK(star_laws_result("star", P.algebra()).passed);
}

TEST_CASE("products over the identity are the algebra product") {
  for (const auto& p : fx::valid_set_actions()) {
    auto alpha = induce_algebra_action(p);
    auto cp = build_group_cp(alpha);
    const auto& A = alpha.algebra();
    for (std::size_t i = 0; i < A.dim(); ++i)
      for (std::size_t j = 0; j < A.dim(); ++j) {
        Vector lhs = cp.product.algebra().multiply(cp.product.embed(0, basis(A.dim(), i)),
                                                   cp.product.embed(0, basis(A.dim(), j)));
        CHECK(lhs == cp.product.embed(0, A.multiply(basis(A.dim(), i), basis(A.dim(), j))));
      }
  }
}

TEST_CASE("L, N and the quotient for P1") {
  auto beta = to_sg_action(induce_algebra_action(fx::p1()));
  auto scp = build_sg_cp(beta);
  CHECK(scp.L.dim() == 4);
  REQUIRE(scp.generators.size() == 1);
  CHECK(scp.generators[0] == Vector{-1, 0, 1, 0});
  CHECK(scp.N.dim() == 1);
  CHECK(scp.N == naive_closure(scp.L.algebra(), scp.generators));
  CHECK(scp.N_certified());
  CHECK(scp.N_star_closed);
  CHECK(scp.quotient.algebra.dim() == 3);
  CHECK(associativity_result("assoc", scp.L.algebra()).passed);
}

TEST_CASE("the isomorphism on P1") {
  auto alpha = induce_algebra_action(fx::p1());
  auto cp = build_group_cp(alpha);
  auto scp = build_sg_cp(to_sg_action(alpha));
  auto report = check_isomorphism(cp, scp);
  CHECK(report.checks.passed());
  CHECK(report.dim_group_cp == 3);
  CHECK(report.dim_L == 4);
  CHECK(report.dim_N == 1);
  // psi(class of e0 d_{e_a}) = e0 d_e
  const auto& labels = scp.quotient.algebra.labels();
  auto pos = std::find(labels.begin(), labels.end(), "(e0,e_{a}[e])") - labels.begin();
  REQUIRE(pos < 3);
  CHECK(report.psi.column(static_cast<std::size_t>(pos)) == basis(3, 0));
  // phi(unit d_e) is the unit of the quotient
  CHECK(report.phi.apply(*cp.product.algebra().unit()) == *scp.quotient.algebra.unit());
  // phi((e0 d_a)(e0 d_a)) = phi(e0 d_a)^2
  Vector sq = cp.product.algebra().multiply(basis(3, 2), basis(3, 2));
  Vector img = report.phi.column(2);
  CHECK(report.phi.apply(sq) == scp.quotient.algebra.multiply(img, img));
}

TEST_CASE("every fixture satisfies the isomorphism and the quotient identities") {
  for (const auto& p : fx::valid_set_actions()) {
    auto alpha = induce_algebra_action(p);
    auto cp = build_group_cp(alpha);
    auto scp = build_sg_cp(to_sg_action(alpha));
    CHECK(associativity_result("assoc", cp.product.algebra()).passed);
    CHECK(star_laws_result("star", cp.product.algebra()).passed);
    CHECK(star_laws_result("star", scp.L.algebra()).passed);
    CHECK(scp.N == naive_closure(scp.L.algebra(), scp.generators));
    CHECK(scp.N_star_closed);
    CHECK(check_isomorphism(cp, scp).checks.passed());
    CHECK(check_quotient_identities(scp).passed());
  }
}

TEST_CASE("global action: the quotient has dimension dim A times |G|") {
  auto alpha = induce_algebra_action(fx::global_swap());
  auto scp = build_sg_cp(to_sg_action(alpha));
  CHECK(scp.quotient.algebra.dim() == 2 * 2);
  CHECK(build_group_cp(alpha).product.dim() == 4);
}

TEST_CASE("zero-product fixture is caught") {
  auto alpha = fx::zero_product();
  CHECK(validate_algebra_action(alpha).passed());
  CHECK_FALSE(ideals_idempotent_check(alpha).passed());
  auto cp = build_group_cp(alpha);
  auto triple = check_associativity(cp.product.algebra());
  REQUIRE(triple.has_value());
  const auto& B = cp.product.algebra();
  const std::size_t n = B.dim();
  auto [i, j, k] = *triple;
  CHECK(B.multiply(B.multiply(basis(n, i), basis(n, j)), basis(n, k)) !=
        B.multiply(basis(n, i), B.multiply(basis(n, j), basis(n, k))));
  CHECK_FALSE(associativity_result("assoc", B).passed);
  CHECK_THROWS_AS(build_sg_cp(to_sg_action(alpha)), Error);
  try {
    build_sg_cp(to_sg_action(alpha));
  } catch (const Error& err) {
    CHECK(err.kind() == ErrorKind::NonAssociativeL);
  }
}

TEST_CASE("mismatched sources are rejected") {
  auto cp = build_group_cp(induce_algebra_action(fx::p1()));
  auto scp = build_sg_cp(to_sg_action(induce_algebra_action(fx::swap3())));
  CHECK_THROWS_AS(iso_phi(cp, scp), Error);
  CHECK_THROWS_AS(iso_psi(scp, cp), Error);
}

TEST_CASE("one norm") {
  auto cp = build_group_cp(induce_algebra_action(fx::p1()));
  CHECK(one_norm(cp.product, basis(3, 2)) == 1);
  CHECK(one_norm(cp.product, Vector{2, 3, 0}) == 3);
  CHECK(one_norm(cp.product, Vector{0, 0, 0}) == 0);
  CHECK(one_norm(cp.product, Vector{-2, 1, Rational(1, 2)}) == Rational(5, 2));
}

TEST_CASE("partial isometries") {
  CHECK(is_partial_isometry(Matrix::identity(3)));
  CHECK(is_partial_isometry(Matrix(2, 2)));
  CHECK(is_partial_isometry(Matrix::from_rows(2, {{0, 1}, {0, 0}})));
  CHECK_FALSE(is_partial_isometry(Matrix::from_rows(2, {{1, 1}, {0, 0}})));
  CHECK_THROWS_AS(is_partial_isometry(Matrix(2, 3)), Error);
}

TEST_CASE("natural covariant representation of P1") {
  auto p = fx::p1();
  auto beta = to_sg_action(induce_algebra_action(p));
  auto rep = natural_covariant_rep(p, beta);
  const auto& T = beta.table();
  const std::size_t ga = T.generator_index(1);
  CHECK(rep.nu[ga] == Matrix::from_rows(2, {{1, 0}, {0, 0}}));
  CHECK(rep.nu[0] == Matrix::identity(2));
  // nu_[a] pi(e0) nu_[a]* = pi(beta_[a](e0)) = pi(e0)
  CHECK(rep.nu[ga] * rep.pi[0] * rep.nu[T.star(ga)] == rep.pi[0]);
  auto scp = build_sg_cp(beta);
  CHECK(pi_times_nu(rep, scp.L, scp.generators[0]).is_zero());
  CHECK(pi_times_nu(rep, scp.L, scp.L.embed(0, Vector{1, 1})) == Matrix::identity(2));
  CHECK(check_covariant(rep, scp).passed());
}

TEST_CASE("natural representations of every fixture") {
  for (const auto& p : fx::valid_set_actions()) {
    auto beta = to_sg_action(induce_algebra_action(p));
    auto scp = build_sg_cp(beta);
    auto rep = natural_covariant_rep(p, beta);
    auto report = check_covariant(rep, scp);
    CHECK(report.passed());
    // Rebuild (pi, nu) from the integrated form.
    std::vector<Matrix> rho;
    for (std::size_t i = 0; i < scp.L.dim(); ++i) rho.push_back(pi_times_nu(rep, scp.L, basis(scp.L.dim(), i)));
    auto back = covariant_from_representation(scp, rho);
    CHECK(back.pi == rep.pi);
    CHECK(back.nu == rep.nu);
  }
  CHECK_THROWS_AS(natural_covariant_rep(fx::p1(), to_sg_action(induce_algebra_action(fx::swap3()))), Error);
}

TEST_CASE("a broken representation is reported") {
  auto p = fx::swap3();
  auto beta = to_sg_action(induce_algebra_action(p));
  auto scp = build_sg_cp(beta);
  auto rep = natural_covariant_rep(p, beta);
  rep.nu[beta.table().generator_index(1)] = Matrix::identity(3);
  auto report = check_covariant(rep, scp);
  CHECK_FALSE(report.passed());
  CHECK_FALSE(report.find("covariance")->passed);
}

TEST_CASE("operator norm") {
  CHECK(operator_norm(Matrix::identity(3), 0) == doctest::Approx(1.0));
  CHECK(operator_norm(Matrix::from_rows(2, {{3, 0}, {0, -4}}), 1) == doctest::Approx(4.0));
  CHECK(operator_norm(Matrix::from_rows(2, {{1, 1}, {1, 1}}), 2) == doctest::Approx(2.0));
  CHECK(operator_norm(Matrix(2, 2), 0) == 0.0);
}
