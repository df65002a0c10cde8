#include <algorithm>
#include <random>

#include "core/algebra.hpp"
#include "core/error.hpp"
#include "core/linalg.hpp"
#include "doctest.h"

using namespace excross;

namespace {

Vector vec(std::initializer_list<int> xs) {
  Vector v;
  for (int x : xs) v.emplace_back(x);
  return v;
}

Matrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c) {
  std::uniform_int_distribution<int> d(-2, 2);
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

// b0 b0 = b1, every other product zero.
StructureAlgebra square_to_second() {
  std::vector<SparseVector> products(4);
  products[0] = {{1, Rational(1)}};
  return StructureAlgebra({"b0", "b1"}, products);
}

}  // namespace

TEST_CASE("rational parsing and formatting") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational("-4") == Rational(-4));
  CHECK(format_rational(parse_rational("-2/4")) == "-1/2");
  CHECK(format_rational(Rational(5)) == "5");
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("x"), Error);
}

TEST_CASE("rref examples") {
  SUBCASE("identity") {
    auto r = rref(Matrix::identity(3));
    CHECK(r.reduced == Matrix::identity(3));
    CHECK(r.pivots == std::vector<std::size_t>{0, 1, 2});
  }
  SUBCASE("rank one") {
    auto r = rref(Matrix::from_rows(2, {vec({1, 2}), vec({2, 4})}));
    CHECK(r.reduced == Matrix::from_rows(2, {vec({1, 2}), vec({0, 0})}));
    CHECK(r.pivots == std::vector<std::size_t>{0});
  }
  SUBCASE("empty") {
    auto r = rref(Matrix(0, 4));
    CHECK(r.reduced.rows() == 0);
    CHECK(r.reduced.cols() == 4);
    CHECK(r.pivots.empty());
  }
}

TEST_CASE("rref is idempotent on random matrices") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 50; ++t) {
    Matrix m = random_matrix(rng, 1 + t % 5, 1 + (t / 5) % 5);
    auto once = rref(m);
    auto twice = rref(once.reduced);
    CHECK(once.reduced == twice.reduced);
    CHECK(once.pivots == twice.pivots);
  }
}

TEST_CASE("nullspace and inverse") {
  Matrix m = Matrix::from_rows(3, {vec({1, 2, 3}), vec({2, 4, 6})});
  auto ns = nullspace(m);
  CHECK(ns.size() == 2);
  for (const auto& v : ns) CHECK(is_zero(m.apply(v)));
  CHECK_FALSE(inverse(Matrix::from_rows(2, {vec({1, 2}), vec({2, 4})})).has_value());
  Matrix a = Matrix::from_rows(2, {vec({2, 1}), vec({1, 1})});
  auto inv = inverse(a);
  REQUIRE(inv.has_value());
  CHECK(a * *inv == Matrix::identity(2));
}

TEST_CASE("subspace intersection") {
  auto e = [](std::size_t i) { return unit_vector(3, i); };
  Subspace a = Subspace::span(3, {e(0), e(1)});
  Subspace b = Subspace::span(3, {e(1), e(2)});
  CHECK(intersect(a, b) == Subspace::span(3, {e(1)}));
  CHECK(intersect(a, a) == a);
  CHECK(intersect(Subspace::span(3, {e(0)}), Subspace::span(3, {e(1)})).dim() == 0);
  CHECK_THROWS_AS(intersect(a, Subspace::full(2)), Error);
}

TEST_CASE("intersection of a list is order independent") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 20; ++t) {
    std::vector<Subspace> spaces;
    for (int k = 0; k < 4; ++k) {
      Matrix m = random_matrix(rng, 3, 4);
      std::vector<Vector> rows;
      for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
      spaces.push_back(Subspace::span(4, rows));
    }
    Subspace first = intersect_all(spaces, 4);
    std::reverse(spaces.begin(), spaces.end());
    CHECK(intersect_all(spaces, 4) == first);
    std::swap(spaces[0], spaces[2]);
    CHECK(intersect_all(spaces, 4) == first);
  }
}

TEST_CASE("subspace coordinates round trip") {
  Subspace s = Subspace::span(3, {vec({1, 1, 0}), vec({0, 1, 1})});
  Vector v = vec({2, 5, 3});
  auto c = s.coordinates(v);
  REQUIRE(c.has_value());
  CHECK(s.combine(*c) == v);
  CHECK_FALSE(s.coordinates(vec({1, 0, 0})).has_value());
}

TEST_CASE("linear maps compose as partial maps") {
  auto e = [](std::size_t i) { return unit_vector(3, i); };
  Subspace d01 = Subspace::span(3, {e(0), e(1)});
  Subspace d12 = Subspace::span(3, {e(1), e(2)});
  // f: e0 -> e1, e1 -> e2 ; g: e1 -> e0, e2 -> e1
  LinearMap f = LinearMap::from_images(d01, d12, {e(0), e(1)}, {e(1), e(2)});
  LinearMap g = f.inverse();
  CHECK(g.domain() == d12);
  LinearMap fg = compose(f, g);
  CHECK(same_partial_map(fg, LinearMap::identity(d12)));
  // f∘f is defined only where f lands inside dom f: on span{e0}.
  LinearMap ff = compose(f, f);
  CHECK(ff.domain() == Subspace::span(3, {e(0)}));
  CHECK(ff.apply(e(0)) == e(2));
}

TEST_CASE("ideal closure examples") {
  auto fa = StructureAlgebra::function_algebra(3);
  CHECK(two_sided_ideal_closure(fa, {}).dim() == 0);
  CHECK(two_sided_ideal_closure(fa, {unit_vector(3, 0)}) == Subspace::span(3, {unit_vector(3, 0)}));
  CHECK(two_sided_ideal_closure(fa, {*fa.unit()}) == Subspace::full(3));
  // closure is closed
  auto alg = square_to_second();
  auto closed = two_sided_ideal_closure(alg, {unit_vector(2, 0)});
  CHECK(closed == Subspace::full(2));
  CHECK(two_sided_ideal_closure(alg, closed.basis()) == closed);
}

TEST_CASE("quotient algebra examples") {
  auto fa = StructureAlgebra::function_algebra(3);
  auto q0 = quotient_algebra(fa, Subspace::zero(3));
  CHECK(q0.algebra.dim() == 3);
  CHECK(q0.projection == Matrix::identity(3));
  auto qa = quotient_algebra(fa, Subspace::full(3));
  CHECK(qa.algebra.dim() == 0);
  auto q1 = quotient_algebra(fa, Subspace::span(3, {unit_vector(3, 1)}));
  CHECK(q1.algebra.dim() == 2);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      Vector lhs = q1.project(fa.multiply(unit_vector(3, i), unit_vector(3, j)));
      Vector rhs = q1.algebra.multiply(q1.project(unit_vector(3, i)), q1.project(unit_vector(3, j)));
      CHECK(lhs == rhs);
    }
  CHECK_THROWS_AS(quotient_algebra(square_to_second(), Subspace::span(2, {unit_vector(2, 0)})), Error);
}

TEST_CASE("associativity checker") {
  CHECK_FALSE(check_associativity(StructureAlgebra::function_algebra(3)).has_value());
  CHECK_FALSE(check_associativity(square_to_second()).has_value());
  // b0 b1 = b0, b1 b0 = b1, b0 b0 = b1b1 = 0: (b0 b1) b0 = 0 but b0 (b1 b0) = b0 b1 = b0
  std::vector<SparseVector> products(4);
  products[1] = {{0, Rational(1)}};
  products[2] = {{1, Rational(1)}};
  StructureAlgebra bad({"b0", "b1"}, products);
  auto w = check_associativity(bad);
  REQUIRE(w.has_value());
  CHECK(*w == BasisTriple{0, 1, 0});
  CHECK(check_associativity_sampled(bad, 200, 0).has_value());
}

TEST_CASE("idempotent ideals and local units") {
  auto fa = StructureAlgebra::function_algebra(3);
  Subspace d = Subspace::span(3, {unit_vector(3, 0), unit_vector(3, 2)});
  CHECK(is_idempotent_ideal(fa, d));
  CHECK(is_idempotent_ideal(fa, Subspace::zero(3)));
  auto u = local_unit(fa, d);
  REQUIRE(u.has_value());
  CHECK(*u == vec({1, 0, 1}));
  auto alg = square_to_second();
  Subspace b1 = Subspace::span(2, {unit_vector(2, 1)});
  CHECK(is_two_sided_ideal(alg, b1));
  CHECK_FALSE(is_idempotent_ideal(alg, b1));
  CHECK_FALSE(local_unit(alg, b1).has_value());
}

TEST_CASE("function algebra is well formed") {
  CHECK(StructureAlgebra::function_algebra(4).structural_defects().empty());
}
