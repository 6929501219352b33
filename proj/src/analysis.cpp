#include "assoc/analysis.hpp"

namespace assoc {

using nlohmann::json;

AnalysisReport run_analyze(const AssociationScheme& s,
                           const AnalysisOptions& opt) {
  AnalysisReport r;
  r.n = s.n();
  r.d = s.d();
  r.mode = opt.mode;
  r.tol = opt.tol;
  r.ordering_convention = kOrderingConvention;
  r.params = intersection_numbers(s);
  r.sp = decompose(s, r.params, opt.mode, opt.tol);
  r.kt = krein_parameters(r.sp, r.params, opt.tol);

  ReconstructionCheck recon = verify_p_from_Q(r.sp, r.params, opt.tol);
  r.p_reconstruction_ok = recon.ok;
  if (!recon.ok) {
    auto [h, i, j] = *recon.first_mismatch;
    throw InternalInconsistency(
        "intersection numbers disagree with their eigenmatrix "
        "reconstruction at (h,i,j) = (" +
        std::to_string(h) + "," + std::to_string(i) + "," +
        std::to_string(j) + ")");
  }

  r.identity_duality =
      duality_report(r.params, r.sp, r.kt,
                     OrderingPermutation::identity(r.d), opt.tol);
  r.p_poly = is_p_polynomial(r.params);
  r.q_poly = is_q_polynomial_ordering(r.kt, opt.tol);
  if (r.p_poly.holds() && r.q_poly.holds()) {
    r.aw_max_residual =
        askey_wilson_residual(r.params, r.sp, r.kt, opt.tol);
  }
  return r;
}

json scalar_to_json(const Scalar& v) { return v.str(); }

json matrix_to_json(const ScalarMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

json tensor_to_json(const Tensor3<Scalar>& t) {
  json out = json::array();
  for (int h = 0; h < t.dim(); ++h) {
    json plane = json::array();
    for (int i = 0; i < t.dim(); ++i) {
      json row = json::array();
      for (int j = 0; j < t.dim(); ++j) row.push_back(t.at(h, i, j).str());
      plane.push_back(std::move(row));
    }
    out.push_back(std::move(plane));
  }
  return out;
}

json tensor_to_json(const Tensor3<std::int64_t>& t) {
  json out = json::array();
  for (int h = 0; h < t.dim(); ++h) {
    json plane = json::array();
    for (int i = 0; i < t.dim(); ++i) {
      json row = json::array();
      for (int j = 0; j < t.dim(); ++j) row.push_back(t.at(h, i, j));
      plane.push_back(std::move(row));
    }
    out.push_back(std::move(plane));
  }
  return out;
}

json to_json(const SchemeViolation& v) {
  const char* kind = nullptr;
  switch (v.kind) {
    case SchemeViolation::Kind::BadShape: kind = "bad_shape"; break;
    case SchemeViolation::Kind::BadEntry: kind = "bad_entry"; break;
    case SchemeViolation::Kind::NonzeroDiagonal: kind = "nonzero_diagonal"; break;
    case SchemeViolation::Kind::Asymmetric: kind = "asymmetric"; break;
    case SchemeViolation::Kind::MissingRelation: kind = "missing_relation"; break;
    case SchemeViolation::Kind::NotConstant: kind = "count_not_constant"; break;
  }
  json out{{"kind", kind}, {"message", v.message()}};
  if (v.kind == SchemeViolation::Kind::NotConstant) {
    out["triple"] = {v.h, v.i, v.j};
    out["witness_pairs"] = {{{"pair", {v.x, v.y}}, {"count", v.count1}},
                            {{"pair", {v.x2, v.y2}}, {"count", v.count2}}};
  } else {
    if (v.x >= 0) out["at"] = {v.x, v.y};
    if (v.kind == SchemeViolation::Kind::MissingRelation) out["relation"] = v.i;
  }
  return out;
}

json to_json(const DualityReport& r) {
  json out;
  out["sigma"] = r.ordering.sigma;
  out["formally_self_dual"] = r.formally_self_dual;
  out["numerically_self_dual"] = r.numerically_self_dual;
  out["first_P_Q_mismatch"] =
      r.first_P_Q_mismatch
          ? json::array({r.first_P_Q_mismatch->first,
                         r.first_P_Q_mismatch->second})
          : json();
  out["first_pq_mismatch"] =
      r.first_pq_mismatch
          ? json::array({(*r.first_pq_mismatch)[0], (*r.first_pq_mismatch)[1],
                         (*r.first_pq_mismatch)[2]})
          : json();
  return out;
}

json to_json(const ClassificationResult& r) {
  json reports = json::array();
  for (const auto& rep : r.reports) reports.push_back(to_json(rep));
  return json{{"reports", std::move(reports)},
              {"summary",
               {{"orderings", r.summary.orderings},
                {"fsd", r.summary.fsd},
                {"nsd", r.summary.nsd},
                {"nsd_not_fsd", r.summary.nsd_not_fsd}}}};
}

json to_json(const Gl2Classification& r) {
  json out{{"m", r.m},
           {"linear_total", r.linear_total},
           {"symmetric", r.symmetric},
           {"non_symmetric", r.linear_total - r.symmetric},
           {"fsd", r.fsd},
           {"nsd", r.nsd},
           {"nonlinear_sampled", r.nonlinear_sampled},
           {"nonlinear_nsd", r.nonlinear_nsd}};
  if (!r.details.empty()) {
    json details = json::array();
    for (const auto& d : r.details) {
      details.push_back(json{{"S", d.S.str()},
                             {"sigma", d.sigma.sigma},
                             {"symmetric", d.symmetric},
                             {"formally_self_dual", d.formally_self_dual},
                             {"numerically_self_dual", d.numerically_self_dual},
                             {"first_eigenmatrix",
                              matrix_to_json(d.first_eigenmatrix)},
                             {"second_eigenmatrix",
                              matrix_to_json(d.second_eigenmatrix)}});
    }
    out["orderings"] = std::move(details);
  }
  return out;
}

namespace {

json triangle_to_json(const TriangleCheck& c) {
  json out;
  switch (c.status) {
    case TriangleStatus::Holds: out["holds"] = true; break;
    case TriangleStatus::Fails: out["holds"] = false; break;
    case TriangleStatus::Ambiguous: out["holds"] = nullptr; break;
  }
  if (c.witness) {
    out["witness"] = {(*c.witness)[0], (*c.witness)[1], (*c.witness)[2]};
  }
  if (c.ambiguous_at) {
    out["ambiguous_at"] = {(*c.ambiguous_at)[0], (*c.ambiguous_at)[1],
                           (*c.ambiguous_at)[2]};
  }
  return out;
}

}  // namespace

json to_json(const AnalysisReport& r) {
  json out;
  out["n"] = r.n;
  out["d"] = r.d;
  out["mode"] = mode_name(r.mode);
  out["ordering_convention"] = r.ordering_convention;
  out["k"] = r.params.k;
  json mults = json::array();
  for (const auto& v : r.sp.m) mults.push_back(v.str());
  out["m"] = std::move(mults);
  out["P"] = matrix_to_json(r.sp.P);
  out["Q"] = matrix_to_json(r.sp.Q);
  out["p"] = tensor_to_json(r.params.p);
  out["q"] = tensor_to_json(r.kt.q);
  out["p_reconstruction_ok"] = r.p_reconstruction_ok;
  out["duality"] = to_json(r.identity_duality);
  json poly;
  poly["p_polynomial"] = triangle_to_json(r.p_poly);
  poly["q_polynomial_ordering"] = triangle_to_json(r.q_poly);
  poly["aw_max_residual"] =
      r.aw_max_residual ? json(r.aw_max_residual->str()) : json();
  out["poly"] = std::move(poly);
  return out;
}

json poly_check_json(const AnalysisReport& r) {
  json out;
  out["p_polynomial"] = r.p_poly.holds();
  if (r.p_poly.witness) {
    out["p_witness"] = {(*r.p_poly.witness)[0], (*r.p_poly.witness)[1],
                        (*r.p_poly.witness)[2]};
  }
  switch (r.q_poly.status) {
    case TriangleStatus::Holds: out["q_polynomial_ordering"] = true; break;
    case TriangleStatus::Fails: out["q_polynomial_ordering"] = false; break;
    case TriangleStatus::Ambiguous:
      out["q_polynomial_ordering"] = nullptr;
      out["q_ambiguous_at"] = {(*r.q_poly.ambiguous_at)[0],
                               (*r.q_poly.ambiguous_at)[1],
                               (*r.q_poly.ambiguous_at)[2]};
      break;
  }
  out["aw_max_residual"] =
      r.aw_max_residual ? json(r.aw_max_residual->str()) : json();

  if (r.p_poly.holds() && r.d <= kMaxEnumerationClasses) {
    SelfDualEquivalenceReport eq =
        verify_selfdual_equivalence(r.params, r.sp, r.kt, r.tol);
    out["main2_verified"] = eq.ok;
    out["orderings_checked"] = eq.orderings_checked;
    out["q_polynomial_orderings"] = eq.q_polynomial_orderings;
  } else {
    out["main2_verified"] = nullptr;
    out["orderings_checked"] = 0;
    out["main2_skipped_reason"] =
        r.p_poly.holds() ? "d exceeds the enumeration bound"
                         : "scheme is not P-polynomial";
  }
  return out;
}

}  // namespace assoc
