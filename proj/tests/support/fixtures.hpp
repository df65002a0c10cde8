#pragma once

// Set-level partial actions shared by the unit tests.

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "core/group.hpp"
#include "core/partial_action.hpp"

namespace excross::fixtures {

/// Restriction of a global action (perm[g] a permutation of Y) to X ⊆ Y;
/// points of X are renumbered 0..|X|-1 in the listed order.
inline SetPartialAction restrict_global(const GroupTable& group, const std::vector<std::vector<std::size_t>>& perm,
                                        const std::vector<std::size_t>& subset) {
  const std::size_t y_size = perm.front().size();
  std::vector<long> local(y_size, -1);
  for (std::size_t i = 0; i < subset.size(); ++i) local[subset[i]] = static_cast<long>(i);
  std::vector<PartialBijection> theta;
  for (Element g = 0; g < group.order(); ++g) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < subset.size(); ++i) {
      const long target = local[perm[g][subset[i]]];
      if (target >= 0) pairs.emplace_back(i, static_cast<std::size_t>(target));
    }
    theta.emplace_back(subset.size(), pairs);
  }
  return SetPartialAction(group, subset.size(), std::move(theta));
}

/// Z2 on {0,1}: X_a = {0}, theta_a = id on {0}.
inline SetPartialAction p1() {
  return SetPartialAction::from_listed(cyclic_group(2), 2, {{1, PartialBijection(2, {{0, 0}})}});
}

/// Z2 on {0,1,2}: X_a = {0,1}, theta_a swaps 0 and 1.
inline SetPartialAction swap3() {
  return SetPartialAction::from_listed(cyclic_group(2), 3, {{1, PartialBijection(3, {{0, 1}, {1, 0}})}});
}

/// Rotation of Z3 on {0,1,2} restricted to {0,1}, plus a fixed point 2.
inline SetPartialAction z3_rotation() {
  return SetPartialAction::from_listed(cyclic_group(3), 3, {{1, PartialBijection(3, {{0, 1}, {2, 2}})}});
}

/// The natural action of sym3 on {0,1,2} restricted to {0,1}.
inline SetPartialAction sym3_partial() {
  using Perm = std::vector<std::size_t>;
  auto compose_perm = [](const Perm& p, const Perm& q) {
    Perm out(3);
    for (std::size_t x = 0; x < 3; ++x) out[x] = p[q[x]];
    return out;
  };
  const Perm e{0, 1, 2}, r{1, 2, 0}, s{1, 0, 2};
  const Perm r2 = compose_perm(r, r);
  // same order as symmetric_group_3(): e, r, r2, s, rs, r2s
  const std::vector<Perm> perms{e, r, r2, s, compose_perm(r, s), compose_perm(r2, s)};
  return restrict_global(symmetric_group_3(), perms, {0, 1});
}

/// Z2 acting globally on {0,1} by the swap.
inline SetPartialAction global_swap() {
  return SetPartialAction::from_listed(cyclic_group(2), 2, {{1, PartialBijection(2, {{0, 1}, {1, 0}})}});
}

/// Z4 on {0}: X_a = {0}, X_{a2} = ∅, theta_a = id. Violates the second axiom.
inline SetPartialAction broken_z4() {
  return SetPartialAction::from_listed(cyclic_group(4), 1, {{1, PartialBijection(1, {{0, 0}})}});
}

/// Z2 on span{E11, E22, E33, E44, E12, E34} ⊂ M4 with D_a = span{E12, E34},
/// alpha_a(E12) = E12 + E34 and alpha_a(E34) = -E34. D_a squares to zero.
inline AlgebraPartialAction zero_product() {
  const std::array<std::pair<int, int>, 6> units{{{1, 1}, {2, 2}, {3, 3}, {4, 4}, {1, 2}, {3, 4}}};
  std::vector<std::string> labels;
  for (auto [i, j] : units) labels.push_back("E" + std::to_string(i) + std::to_string(j));
  std::vector<SparseVector> products(36);
  for (std::size_t x = 0; x < 6; ++x)
    for (std::size_t y = 0; y < 6; ++y) {
      if (units[x].second != units[y].first) continue;
      for (std::size_t z = 0; z < 6; ++z)
        if (units[z] == std::pair{units[x].first, units[y].second}) products[x * 6 + y] = {{z, Rational(1)}};
    }
  StructureAlgebra algebra(labels, products);
  const Subspace full = Subspace::full(6);
  const Subspace d = Subspace::span(6, {unit_vector(6, 4), unit_vector(6, 5)});
  Matrix m(2, 2);
  m(0, 0) = 1;
  m(1, 0) = 1;
  m(1, 1) = -1;
  return AlgebraPartialAction(cyclic_group(2), algebra, {full, d},
                              {LinearMap::identity(full), LinearMap(d, d, m)});
}

inline std::vector<SetPartialAction> valid_set_actions() {
  return {p1(), swap3(), z3_rotation(), sym3_partial(), global_swap()};
}

}  // namespace excross::fixtures
