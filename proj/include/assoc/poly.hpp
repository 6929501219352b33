#pragma once

#include <array>
#include <optional>
#include <vector>

#include "assoc/duality.hpp"

namespace assoc {

enum class TriangleStatus { Holds, Fails, Ambiguous };

/// Result of the triangle-condition test on a structure-constant tensor:
/// t^h_{ij} must vanish when one of h,i,j exceeds the sum of the other two
/// and must not vanish when one equals the sum of the other two.
struct TriangleCheck {
  TriangleStatus status = TriangleStatus::Holds;
  std::optional<std::array<int, 3>> witness;       // first violated triple
  std::optional<std::array<int, 3>> ambiguous_at;  // |t| in (eps, 100 eps)

  bool holds() const { return status == TriangleStatus::Holds; }
};

/// Triangle conditions on the intersection numbers, for the relation
/// ordering as given.
TriangleCheck is_p_polynomial(const SchemeParameters& params);

/// Triangle conditions on the Krein parameters for the idempotent ordering
/// as given. In Approx mode |q| <= eps_eq counts as zero and values in
/// (eps_eq, 100 eps_eq) yield Ambiguous rather than a classification.
TriangleCheck is_q_polynomial_ordering(const KreinTensor& kt,
                                       const Tolerance& tol);

/// Tridiagonal parameters of a P-polynomial scheme and the dual parameters
/// of a Q-polynomial ordering:
///   c_i = p^i_{1,i-1}, a_i = p^i_{1,i}, b_i = p^i_{1,i+1}, theta_i = P_{i,1}
/// and the starred versions from q^i_{1,*} and Q_{i,1}.
struct TridiagonalParams {
  int d = 0;
  ScalarMode mode = ScalarMode::Exact;
  std::vector<std::int64_t> c, a, b;        // c[0] and b[d] unused (= 0)
  std::vector<Scalar> c_star, a_star, b_star;
  std::vector<Scalar> theta, theta_star;
  std::int64_t k1 = 0;
  Scalar m1;
};
TridiagonalParams tridiagonal_params(const SchemeParameters& params,
                                     const SpectralData& sp,
                                     const KreinTensor& kt);

/// Dense monomial coefficients, ascending degree; evaluation by Horner.
using Polynomial = std::vector<Scalar>;
Scalar eval_poly(const Polynomial& poly, const Scalar& x);

enum class PolySequence { Plain, Starred };

/// The orthogonal-polynomial sequence u_0..u_d (or u*_0..u*_d) from the
/// three-term recurrence lambda u_i = c_i u_{i-1} + a_i u_i + b_i u_{i+1},
/// applied for 1 <= i <= d-1, with u_0 = 1 and u_1 = lambda / k_1
/// (lambda / m_1 for the starred sequence). Throws std::domain_error when a
/// recurrence divisor b_i vanishes (the scheme/ordering is not P-/Q-
/// polynomial).
std::vector<Polynomial> build_polynomials(const TridiagonalParams& tp,
                                          PolySequence which,
                                          const Tolerance& tol);

struct InterpolationCheck {
  bool ok = true;
  std::optional<std::pair<int, int>> first_mismatch;
};

/// P_{i,j} = k_j u_j(theta_i) for all i,j.
InterpolationCheck verify_p_entries_from_polynomials(
    const SpectralData& sp, const SchemeParameters& params,
    const std::vector<Polynomial>& u, const Tolerance& tol);

/// Q_{i,j} = m_j u*_j(theta*_i) for all i,j.
InterpolationCheck verify_q_entries_from_polynomials(
    const SpectralData& sp, const std::vector<Polynomial>& u_star,
    const Tolerance& tol);

/// max_{i,j} |u_i(theta_j) - u*_j(theta*_i)|, the Askey-Wilson duality
/// residual. Requires the scheme P-polynomial and the ordering Q-polynomial;
/// throws std::domain_error naming the failed property otherwise.
Scalar askey_wilson_residual(const SchemeParameters& params,
                             const SpectralData& sp, const KreinTensor& kt,
                             const Tolerance& tol);

/// For a P-polynomial scheme, check over every ordering of the idempotents
/// (fixing 0) that numerical and formal self-duality coincide; also tracks
/// the restriction to Q-polynomial orderings. d <= 8.
struct SelfDualEquivalenceReport {
  long orderings_checked = 0;
  long q_polynomial_orderings = 0;
  long biconditional_failures = 0;
  long q_polynomial_failures = 0;
  bool ok = false;
  std::optional<OrderingPermutation> failing;
};
SelfDualEquivalenceReport verify_selfdual_equivalence(
    const SchemeParameters& params, const SpectralData& sp,
    const KreinTensor& kt, const Tolerance& tol);

}  // namespace assoc
