#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "assoc/numerics.hpp"
#include "assoc/scheme.hpp"
#include "assoc/tensor.hpp"

namespace assoc {

/// Identifier of the convention used to order E_1..E_d (E_0 = J/n is always
/// index 0): rows of P sorted in descending lexicographic order by
/// (P_{i,1}, ..., P_{i,d}). This is a tool convention, not a mathematical
/// canon; reordering is handled by the duality module.
inline constexpr const char* kOrderingConvention =
    "E_0 first, then descending lexicographic order of P rows (P_{i,1},...,P_{i,d})";

/// Primitive idempotents (as A-basis coefficient rows), both eigenmatrices
/// and multiplicities of a scheme.
struct SpectralData {
  int n = 0;
  int d = 0;
  ScalarMode mode = ScalarMode::Exact;
  ScalarMatrix P;         // A_j = sum_i P_{i,j} E_i
  ScalarMatrix Q;         // E_j = n^-1 sum_i Q_{i,j} A_i
  ScalarMatrix e_coeffs;  // row j = coefficients of E_j in the A-basis
  std::vector<Scalar> m;  // multiplicities m_i = q^0_{ii} = Q_{0,i}
};

struct KreinTensor {
  int d = 0;
  Tensor3<Scalar> q;
};

class SpectralError : public std::runtime_error {
 public:
  enum class Code { IrrationalSpectrum, ClusterAmbiguity };
  SpectralError(Code c, const std::string& what)
      : std::runtime_error(what), code(c) {}
  Code code;
};

/// Raised when a computed quantity contradicts a structural guarantee
/// (e.g. a Krein parameter negative beyond tolerance).
class InternalInconsistency : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Compute the d+1 primitive idempotents and the eigenmatrices P, Q.
///
/// Works in the regular representation: the (d+1)x(d+1) intersection
/// matrices B_i with (B_i)_{h,j} = p^h_{ij} are a faithful copy of the
/// Bose-Mesner algebra, so a generic element M = sum c_i B_i with distinct
/// eigenvalues splits the d+1 common eigenspaces. Coefficients start at
/// c = (0,1,2,4,...) and are re-drawn from a seeded sequence on collision
/// (up to 16 attempts). Exact mode finds the integer eigenvalues of M by a
/// bounded scan with deflation and fails with IrrationalSpectrum when the
/// characteristic polynomial does not split over the rationals; Approx mode
/// uses a symmetrized eigensolve plus clustering and fails with
/// ClusterAmbiguity when eigenvalues cannot be separated by
/// 10 * eps_cluster. E_j coefficient vectors come from Lagrange
/// interpolation applied to the first unit vector.
SpectralData decompose(const AssociationScheme& s,
                       const SchemeParameters& params, ScalarMode mode,
                       const Tolerance& tol);

/// Krein parameters q^h_{ij} = (m_i m_j / n) sum_r P_{i,r} P_{j,r} P_{h,r} / k_r^2.
/// Throws InternalInconsistency if any parameter is negative beyond
/// tolerance ("Krein violation").
KreinTensor krein_parameters(const SpectralData& sp,
                             const SchemeParameters& params,
                             const Tolerance& tol);

struct ReconstructionCheck {
  bool ok = true;
  std::optional<std::array<int, 3>> first_mismatch;
};

/// Audit: the counted intersection numbers must equal the reconstruction
/// p^h_{ij} = (k_i k_j / n) sum_r Q_{i,r} Q_{j,r} Q_{h,r} / m_r^2.
ReconstructionCheck verify_p_from_Q(const SpectralData& sp,
                                    const SchemeParameters& params,
                                    const Tolerance& tol);

}  // namespace assoc
