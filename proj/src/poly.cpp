#include "assoc/poly.hpp"

#include <algorithm>
#include <cmath>

namespace assoc {

namespace {

enum class ZeroClass { Zero, Nonzero, Ambiguous };

ZeroClass classify_zero(const Scalar& v, const Tolerance& tol) {
  if (v.mode() == ScalarMode::Exact) {
    return v.is_zero() ? ZeroClass::Zero : ZeroClass::Nonzero;
  }
  double mag = std::fabs(v.approx_value());
  if (mag <= tol.eps_eq) return ZeroClass::Zero;
  if (mag < 100.0 * tol.eps_eq) return ZeroClass::Ambiguous;
  return ZeroClass::Nonzero;
}

template <typename Value>
TriangleCheck triangle_conditions(int d, Value value, const Tolerance& tol) {
  TriangleCheck out;
  for (int h = 0; h <= d; ++h) {
    for (int i = 0; i <= d; ++i) {
      for (int j = 0; j <= d; ++j) {
        bool beyond = h > i + j || i > j + h || j > h + i;
        bool boundary = h == i + j || i == j + h || j == h + i;
        if (!beyond && !boundary) continue;
        ZeroClass z = classify_zero(value(h, i, j), tol);
        if (z == ZeroClass::Ambiguous) {
          out.status = TriangleStatus::Ambiguous;
          out.ambiguous_at = {{h, i, j}};
          return out;
        }
        if ((beyond && z == ZeroClass::Nonzero) ||
            (boundary && z == ZeroClass::Zero)) {
          out.status = TriangleStatus::Fails;
          out.witness = {{h, i, j}};
          return out;
        }
      }
    }
  }
  return out;
}

}  // namespace

TriangleCheck is_p_polynomial(const SchemeParameters& params) {
  return triangle_conditions(
      params.d,
      [&](int h, int i, int j) {
        return Scalar::exact(params.p.at(h, i, j));
      },
      Tolerance::exact());
}

TriangleCheck is_q_polynomial_ordering(const KreinTensor& kt,
                                       const Tolerance& tol) {
  return triangle_conditions(
      kt.d, [&](int h, int i, int j) { return kt.q.at(h, i, j); }, tol);
}

TridiagonalParams tridiagonal_params(const SchemeParameters& params,
                                     const SpectralData& sp,
                                     const KreinTensor& kt) {
  int d = params.d;
  TridiagonalParams tp;
  tp.d = d;
  tp.mode = sp.mode;
  tp.c.assign(d + 1, 0);
  tp.a.assign(d + 1, 0);
  tp.b.assign(d + 1, 0);
  tp.c_star.assign(d + 1, Scalar::zero(sp.mode));
  tp.a_star.assign(d + 1, Scalar::zero(sp.mode));
  tp.b_star.assign(d + 1, Scalar::zero(sp.mode));
  for (int i = 0; i <= d; ++i) {
    if (i >= 1) {
      tp.c[i] = params.p.at(i, 1, i - 1);
      tp.c_star[i] = kt.q.at(i, 1, i - 1);
    }
    tp.a[i] = params.p.at(i, 1, i);
    tp.a_star[i] = kt.q.at(i, 1, i);
    if (i <= d - 1) {
      tp.b[i] = params.p.at(i, 1, i + 1);
      tp.b_star[i] = kt.q.at(i, 1, i + 1);
    }
  }
  tp.theta.reserve(d + 1);
  tp.theta_star.reserve(d + 1);
  for (int i = 0; i <= d; ++i) {
    tp.theta.push_back(sp.P.at(i, 1));
    tp.theta_star.push_back(sp.Q.at(i, 1));
  }
  tp.k1 = params.k[1];
  tp.m1 = sp.m[1];
  return tp;
}

Scalar eval_poly(const Polynomial& poly, const Scalar& x) {
  Scalar acc = Scalar::zero(x.mode());
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

std::vector<Polynomial> build_polynomials(const TridiagonalParams& tp,
                                          PolySequence which,
                                          const Tolerance& tol) {
  ScalarMode mode = tp.mode;
  bool starred = which == PolySequence::Starred;
  const char* label = starred ? "Q-polynomial" : "P-polynomial";

  Scalar k1 = starred ? tp.m1 : Scalar::of(mode, tp.k1);

  std::vector<Polynomial> u;
  u.reserve(tp.d + 1);
  u.push_back({Scalar::one(mode)});                            // u_0 = 1
  if (tp.d >= 1) {
    u.push_back({Scalar::zero(mode), Scalar::one(mode) / k1});  // u_1
  }
  for (int i = 1; i <= tp.d - 1; ++i) {
    Scalar ci = starred ? tp.c_star[i] : Scalar::of(mode, tp.c[i]);
    Scalar ai = starred ? tp.a_star[i] : Scalar::of(mode, tp.a[i]);
    Scalar bi = starred ? tp.b_star[i] : Scalar::of(mode, tp.b[i]);
    if (scalar_eq(bi, Scalar::zero(mode), tol)) {
      throw std::domain_error(std::string("not ") + label + ": b_" +
                              std::to_string(i) + " = 0 in the recurrence");
    }
    // u_{i+1} = (lambda u_i - c_i u_{i-1} - a_i u_i) / b_i
    Polynomial next(i + 2, Scalar::zero(mode));
    for (size_t t = 0; t < u[i].size(); ++t) next[t + 1] = u[i][t];
    for (size_t t = 0; t < u[i - 1].size(); ++t) next[t] -= ci * u[i - 1][t];
    for (size_t t = 0; t < u[i].size(); ++t) next[t] -= ai * u[i][t];
    for (auto& coeff : next) coeff /= bi;
    u.push_back(std::move(next));
  }
  return u;
}

InterpolationCheck verify_p_entries_from_polynomials(
    const SpectralData& sp, const SchemeParameters& params,
    const std::vector<Polynomial>& u, const Tolerance& tol) {
  InterpolationCheck out;
  for (int i = 0; i <= sp.d; ++i) {
    for (int j = 0; j <= sp.d; ++j) {
      Scalar rhs =
          Scalar::of(sp.mode, params.k[j]) * eval_poly(u[j], sp.P.at(i, 1));
      if (!scalar_eq(sp.P.at(i, j), rhs, tol)) {
        out.ok = false;
        out.first_mismatch = std::make_pair(i, j);
        return out;
      }
    }
  }
  return out;
}

InterpolationCheck verify_q_entries_from_polynomials(
    const SpectralData& sp, const std::vector<Polynomial>& u_star,
    const Tolerance& tol) {
  InterpolationCheck out;
  for (int i = 0; i <= sp.d; ++i) {
    for (int j = 0; j <= sp.d; ++j) {
      Scalar rhs = sp.m[j] * eval_poly(u_star[j], sp.Q.at(i, 1));
      if (!scalar_eq(sp.Q.at(i, j), rhs, tol)) {
        out.ok = false;
        out.first_mismatch = std::make_pair(i, j);
        return out;
      }
    }
  }
  return out;
}

Scalar askey_wilson_residual(const SchemeParameters& params,
                             const SpectralData& sp, const KreinTensor& kt,
                             const Tolerance& tol) {
  TriangleCheck pchk = is_p_polynomial(params);
  if (!pchk.holds()) {
    throw std::domain_error(
        "Askey-Wilson duality requires a P-polynomial scheme; triangle "
        "condition fails at (h,i,j) = (" +
        std::to_string((*pchk.witness)[0]) + "," +
        std::to_string((*pchk.witness)[1]) + "," +
        std::to_string((*pchk.witness)[2]) + ")");
  }
  TriangleCheck qchk = is_q_polynomial_ordering(kt, tol);
  if (qchk.status == TriangleStatus::Ambiguous) {
    throw std::domain_error(
        "Askey-Wilson duality: Q-polynomial status is ambiguous at this "
        "tolerance");
  }
  if (!qchk.holds()) {
    throw std::domain_error(
        "Askey-Wilson duality requires a Q-polynomial ordering; triangle "
        "condition fails at (h,i,j) = (" +
        std::to_string((*qchk.witness)[0]) + "," +
        std::to_string((*qchk.witness)[1]) + "," +
        std::to_string((*qchk.witness)[2]) + ")");
  }

  TridiagonalParams tp = tridiagonal_params(params, sp, kt);
  auto u = build_polynomials(tp, PolySequence::Plain, tol);
  auto u_star = build_polynomials(tp, PolySequence::Starred, tol);

  Scalar max_residual = Scalar::zero(sp.mode);
  for (int i = 0; i <= sp.d; ++i) {
    for (int j = 0; j <= sp.d; ++j) {
      Scalar lhs = eval_poly(u[i], tp.theta[j]);
      Scalar rhs = eval_poly(u_star[j], tp.theta_star[i]);
      Scalar res = (lhs - rhs).abs();
      if (res > max_residual) max_residual = res;
    }
  }
  return max_residual;
}

SelfDualEquivalenceReport verify_selfdual_equivalence(
    const SchemeParameters& params, const SpectralData& sp,
    const KreinTensor& kt, const Tolerance& tol) {
  TriangleCheck pchk = is_p_polynomial(params);
  if (!pchk.holds()) {
    throw std::domain_error(
        "self-duality equivalence requires a P-polynomial scheme");
  }

  ClassificationResult cls = classify_all_orderings(params, sp, kt, tol);
  SelfDualEquivalenceReport r;
  for (const DualityReport& rep : cls.reports) {
    ++r.orderings_checked;
    bool biconditional =
        rep.formally_self_dual == rep.numerically_self_dual;
    if (!biconditional) {
      ++r.biconditional_failures;
      if (!r.failing) r.failing = rep.ordering;
    }
    auto [sp2, kt2] = reorder(sp, kt, rep.ordering);
    TriangleCheck qchk = is_q_polynomial_ordering(kt2, tol);
    if (qchk.holds()) {
      ++r.q_polynomial_orderings;
      if (!biconditional) ++r.q_polynomial_failures;
    }
  }
  r.ok = r.biconditional_failures == 0;
  return r;
}

}  // namespace assoc
