#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "assoc/spectral.hpp"

namespace assoc {

/// A permutation sigma of {0,...,d} with sigma[0] = 0, used to reorder the
/// primitive idempotents E_i -> E_{sigma(i)}.
struct OrderingPermutation {
  std::vector<int> sigma;

  static OrderingPermutation identity(int d);
  static OrderingPermutation parse(std::string_view text, int expected_d = -1);

  int d() const { return static_cast<int>(sigma.size()) - 1; }
  int operator()(int i) const { return sigma[i]; }
  bool valid() const;
  OrderingPermutation inverse() const;
  OrderingPermutation compose(const OrderingPermutation& inner) const;
  std::string str() const;  // "0,2,1,3"

  bool operator==(const OrderingPermutation& o) const {
    return sigma == o.sigma;
  }
};

/// Throws std::invalid_argument unless sigma is a bijection of {0..d}
/// fixing 0.
void require_valid_ordering(const OrderingPermutation& sigma, int d);

struct DualityReport {
  OrderingPermutation ordering;
  bool formally_self_dual = false;
  bool numerically_self_dual = false;
  std::optional<std::pair<int, int>> first_P_Q_mismatch;
  std::optional<std::array<int, 3>> first_pq_mismatch;
};

/// Change of idempotent ordering: P'_{i,j} = P_{sigma(i),j},
/// Q'_{i,j} = Q_{i,sigma(j)}, q'^h_{ij} = q^{sigma(h)}_{sigma(i),sigma(j)}.
/// Intersection numbers are unchanged.
std::pair<SpectralData, KreinTensor> reorder(const SpectralData& sp,
                                             const KreinTensor& kt,
                                             const OrderingPermutation& sigma);

/// P' = Q' entrywise for the reordered eigenmatrices. On failure the
/// lexicographically first mismatching (i,j) is reported.
bool is_formally_self_dual(
    const SpectralData& sp, const OrderingPermutation& sigma,
    const Tolerance& tol,
    std::optional<std::pair<int, int>>* first_mismatch = nullptr);

/// p^h_{ij} = q'^h_{ij} for all triples, with q' the reordered Krein tensor.
bool is_numerically_self_dual(
    const SchemeParameters& params, const KreinTensor& kt,
    const OrderingPermutation& sigma, const Tolerance& tol,
    std::optional<std::array<int, 3>>* first_mismatch = nullptr);

/// Both predicates plus mismatch coordinates for one ordering.
DualityReport duality_report(const SchemeParameters& params,
                             const SpectralData& sp, const KreinTensor& kt,
                             const OrderingPermutation& sigma,
                             const Tolerance& tol);

struct ClassificationSummary {
  long orderings = 0;
  long fsd = 0;
  long nsd = 0;
  long nsd_not_fsd = 0;
};

struct ClassificationResult {
  std::vector<DualityReport> reports;  // lexicographic by sigma
  ClassificationSummary summary;
};

/// One DualityReport per permutation of {1,...,d}. Guarded by d <= 8
/// (throws std::invalid_argument beyond: d! orderings).
ClassificationResult classify_all_orderings(const SchemeParameters& params,
                                            const SpectralData& sp,
                                            const KreinTensor& kt,
                                            const Tolerance& tol);

inline constexpr int kMaxEnumerationClasses = 8;

}  // namespace assoc
