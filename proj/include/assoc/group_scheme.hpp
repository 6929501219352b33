#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "assoc/gf2.hpp"

namespace assoc {

/// The group scheme of Z_2^m: relations R_x = {(y, y+x)}, one class per
/// group element, all valencies 1, d = 2^m - 1. Range 1 <= m <= 10.
AssociationScheme build_group_scheme(int m);

/// The closed-form eigenmatrix H with H_{x,y} = (-1)^{<x,y>} under the
/// canonical encoding; for the group scheme P = Q = H when the idempotents
/// are indexed by characters.
std::vector<std::vector<int>> closed_form_eigenmatrix(int m);

/// Permutation a with a(x) = the canonical-order index of the idempotent
/// whose Q column equals column x of the closed-form eigenmatrix. Applying
/// reorder(sp, kt, a) re-indexes the spectral data by characters.
OrderingPermutation character_alignment(const SpectralData& sp);

/// Spectral data and Krein tensor of the group scheme, re-indexed by
/// characters (the indexing the duality statements use).
struct GroupSchemeData {
  int m = 0;
  AssociationScheme scheme;
  SchemeParameters params;
  SpectralData sp;
  KreinTensor kt;
};
GroupSchemeData group_scheme_data(int m, ScalarMode mode, const Tolerance& tol);

/// sigma(x ^ y) == sigma(x) ^ sigma(y) for all pairs (additivity is the
/// complete linearity criterion over GF(2)).
bool is_linear_permutation(const std::vector<int>& sigma);

/// Per-matrix classification of one GF(2)-linear ordering.
struct LinearOrderingReport {
  Gf2Matrix S;
  OrderingPermutation sigma;
  bool symmetric = false;
  bool formally_self_dual = false;
  bool numerically_self_dual = false;
  ScalarMatrix first_eigenmatrix;   // reordered P
  ScalarMatrix second_eigenmatrix;  // reordered Q
};

/// Exhaustive classification of the GF(2)-linear orderings of the group
/// scheme, plus seeded random non-linear permutations fixing 0 (each tested
/// for numerical self-duality). NSD evaluation caps at m <= 3; details cap
/// at m <= 2 unless forced.
struct Gl2Classification {
  int m = 0;
  long linear_total = 0;
  long symmetric = 0;
  long fsd = 0;
  long nsd = 0;
  int nonlinear_sampled = 0;
  int nonlinear_nsd = 0;
  std::vector<LinearOrderingReport> details;
};
Gl2Classification gl2_classify(int m, int trials_nonlinear, std::uint64_t seed,
                               ScalarMode mode, const Tolerance& tol,
                               bool with_details = false);

/// Empirical check that the numerically-self-dual orderings of the group
/// scheme are exactly the GF(2)-linear ones: every enumerated linear
/// bijection must be NSD and every sampled non-linear permutation must not
/// be. m <= 3.
struct NsdLinearityReport {
  int m = 0;
  long linear_total = 0;
  long linear_nsd = 0;
  int nonlinear_sampled = 0;
  int nonlinear_nsd = 0;
  bool ok = false;
  std::optional<std::string> counterexample;
};
NsdLinearityReport verify_nsd_iff_linear(int m, int trials_nonlinear,
                                         std::uint64_t seed);

/// Empirical check that formal self-duality of a linear ordering holds
/// exactly when its matrix is symmetric. m <= 4.
struct FsdSymmetryReport {
  int m = 0;
  long linear_total = 0;
  long symmetric_count = 0;
  long fsd_count = 0;
  long disagreements = 0;
  bool ok = false;
  std::optional<std::string> counterexample;
};
FsdSymmetryReport verify_fsd_iff_symmetric(int m);

}  // namespace assoc
