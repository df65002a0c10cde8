#pragma once

// Finite-dimensional covariant representations (π, ν) of an S(G)-action on a
// function algebra, and the integrated form π×ν on L. Adjoints over Q are
// transposes.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "core/crossed_product.hpp"
#include "core/linalg.hpp"
#include "core/partial_action.hpp"

namespace excross {

struct CovariantRep {
  std::size_t space_dim = 0;
  /// pi[i] = π(b_i) for the basis of A.
  std::vector<Matrix> pi;
  /// nu[s] in SemigroupTable order.
  std::vector<Matrix> nu;

  Matrix pi_of(const Vector& a) const;
};

/// H = Q^X, π(a) = diag(a), ν_s the partial permutation matrix of θ_γ(s)
/// restricted to the points of E_{s*}. Throws SourceMismatch unless `action`
/// is the S(G)-action induced from `set_action`.
CovariantRep natural_covariant_rep(const SetPartialAction& set_action, const SgAction& action);

/// U = U Uᵀ U, cross-checked against UᵀU being a projection. Throws NotSquare.
bool is_partial_isometry(const Matrix& u);

/// Σ_s π(x(s)) ν_s for x in L. Throws SourceMismatch when the representation
/// does not fit L.
Matrix pi_times_nu(const CovariantRep& rep, const TwistedProduct& L, const Vector& x);

/// Ids: pi_multiplicative, pi_unital, partial_isometry, nu_multiplicative,
/// covariance, initial_space, final_space, integrated_multiplicative,
/// kills_N.
ValidationReport check_covariant(const CovariantRep& rep, const SgCrossedProduct& scp);

/// From a representation ρ of L given on its basis that vanishes on N:
/// π(a) = ρ(a δ_[e]) and ν_s = ρ(u_s δ_s) with u_s the unit of E_s. Throws
/// NotWellDefined when some E_s has no unit.
CovariantRep covariant_from_representation(const SgCrossedProduct& scp, std::span<const Matrix> rho);

/// ‖(π×ν)(x)‖ <= ‖x‖₁ + tolerance for `samples` seeded random x in L with
/// small rational coordinates; the operator norm is from operator_norm.
AxiomResult contractivity_check(const CovariantRep& rep, const TwistedProduct& L, std::size_t samples,
                                std::uint64_t seed, double tolerance = 1e-9);

/// Largest singular value by power iteration on MᵀM from a seeded start.
double operator_norm(const Matrix& m, std::uint64_t seed, int iterations = 200);

}  // namespace excross
