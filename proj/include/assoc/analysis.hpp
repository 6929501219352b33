#pragma once

#include <optional>
#include <string>

#include "assoc/duality.hpp"
#include "assoc/fixtures.hpp"
#include "assoc/group_scheme.hpp"
#include "assoc/poly.hpp"

#include <json.hpp>

namespace assoc {

struct AnalysisOptions {
  ScalarMode mode = ScalarMode::Exact;
  Tolerance tol = Tolerance::exact();

  static AnalysisOptions exact() { return {}; }
  static AnalysisOptions approx(double eps_eq = 1e-9,
                                double eps_cluster = 1e-6) {
    return {ScalarMode::Approx, Tolerance::approx(eps_eq, eps_cluster)};
  }
};

/// Output of the full pipeline: verify -> intersection numbers ->
/// decomposition -> Krein parameters -> duality at the identity ordering ->
/// polynomial checks.
struct AnalysisReport {
  int n = 0;
  int d = 0;
  ScalarMode mode = ScalarMode::Exact;
  Tolerance tol = Tolerance::exact();
  SchemeParameters params;
  SpectralData sp;
  KreinTensor kt;
  DualityReport identity_duality;
  TriangleCheck p_poly;
  TriangleCheck q_poly;
  std::optional<Scalar> aw_max_residual;  // set when both properties hold
  bool p_reconstruction_ok = false;
  std::string ordering_convention;
};

AnalysisReport run_analyze(const AssociationScheme& s,
                           const AnalysisOptions& opt);

// --------------------------------------------------------------------------
// JSON serialization. Scalars are strings: exact rationals as "a/b" ("a"
// when integral), approx values as decimal literals.

nlohmann::json scalar_to_json(const Scalar& v);
nlohmann::json matrix_to_json(const ScalarMatrix& m);
nlohmann::json tensor_to_json(const Tensor3<Scalar>& t);
nlohmann::json tensor_to_json(const Tensor3<std::int64_t>& t);

nlohmann::json to_json(const SchemeViolation& v);
nlohmann::json to_json(const DualityReport& r);
nlohmann::json to_json(const ClassificationResult& r);
nlohmann::json to_json(const Gl2Classification& r);
nlohmann::json to_json(const AnalysisReport& r);

/// The poly-check report: p_polynomial, q_polynomial_ordering (null when
/// ambiguous), aw_max_residual, main2_verified, orderings_checked.
nlohmann::json poly_check_json(const AnalysisReport& r);

}  // namespace assoc
