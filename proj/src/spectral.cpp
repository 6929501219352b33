#include "assoc/spectral.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <random>

namespace assoc {

namespace {

constexpr int kMaxAttempts = 16;
constexpr std::uint64_t kRedrawSeed = 0xA55CE11ull;
constexpr std::int64_t kMaxScanRadius = 1 << 21;

std::vector<std::int64_t> coefficient_attempt(int attempt, int classes,
                                              std::mt19937_64& rng,
                                              std::int64_t scan_cap,
                                              const std::vector<std::int64_t>& k) {
  std::vector<std::int64_t> c(classes, 0);
  if (attempt == 0) {
    std::int64_t radius = 0;
    bool overflow = false;
    for (int i = 1; i < classes; ++i) {
      c[i] = i - 1 < 62 ? (std::int64_t{1} << (i - 1)) : 0;
      if (c[i] == 0 || radius > scan_cap) {
        overflow = true;
        break;
      }
      radius += c[i] * k[i];
    }
    if (!overflow && radius <= scan_cap) return c;
    // fall through to a random draw when the power sequence is too steep
  }
  std::uniform_int_distribution<std::int64_t> pick(1, 1024);
  for (int i = 1; i < classes; ++i) c[i] = pick(rng);
  return c;
}

struct GenericElement {
  std::vector<std::int64_t> c;
  std::vector<std::vector<BigInt>> M;  // integer matrix in the A-basis rep
  std::int64_t radius = 0;             // bound on |eigenvalues|
};

GenericElement generic_element(const SchemeParameters& params,
                               const std::vector<std::int64_t>& c) {
  int N = params.d + 1;
  GenericElement g;
  g.c = c;
  g.M.assign(N, std::vector<BigInt>(N, 0));
  for (int i = 1; i < N; ++i) {
    if (c[i] == 0) continue;
    for (int h = 0; h < N; ++h) {
      for (int j = 0; j < N; ++j) {
        g.M[h][j] += BigInt(c[i]) * params.p.at(h, i, j);
      }
    }
  }
  g.radius = 0;
  for (int i = 1; i < N; ++i) g.radius += c[i] * params.k[i];
  return g;
}

// Monic characteristic polynomial, descending coefficients, via
// Faddeev-LeVerrier (all divisions exact for an integer matrix).
std::vector<BigInt> char_poly(const std::vector<std::vector<BigInt>>& M) {
  int N = static_cast<int>(M.size());
  std::vector<BigInt> coeffs;
  coeffs.reserve(N + 1);
  coeffs.push_back(1);
  std::vector<std::vector<BigInt>> Mk = M;
  for (int k = 1; k <= N; ++k) {
    BigInt tr = 0;
    for (int i = 0; i < N; ++i) tr += Mk[i][i];
    BigInt ck = -tr / k;
    coeffs.push_back(ck);
    if (k == N) break;
    for (int i = 0; i < N; ++i) Mk[i][i] += ck;
    std::vector<std::vector<BigInt>> next(N, std::vector<BigInt>(N, 0));
    for (int i = 0; i < N; ++i) {
      for (int t = 0; t < N; ++t) {
        if (M[i][t].is_zero()) continue;
        for (int j = 0; j < N; ++j) next[i][j] += M[i][t] * Mk[t][j];
      }
    }
    Mk = std::move(next);
  }
  return coeffs;
}

BigInt horner(const std::vector<BigInt>& poly, std::int64_t x) {
  BigInt acc = 0;
  for (const BigInt& a : poly) {
    acc *= x;
    acc += a;
  }
  return acc;
}

// All integer roots in [-radius, radius] with deflation. Returns true and
// the roots (ascending, with multiplicity collapsed out by the caller's
// distinctness check) iff the polynomial splits into such linear factors.
bool integer_roots(std::vector<BigInt> poly, std::int64_t radius,
                   std::vector<std::int64_t>& roots) {
  roots.clear();
  for (std::int64_t cand = -radius; cand <= radius; ++cand) {
    while (poly.size() > 1 && horner(poly, cand).is_zero()) {
      std::vector<BigInt> quotient;
      quotient.reserve(poly.size() - 1);
      BigInt acc = 0;
      for (size_t t = 0; t + 1 < poly.size(); ++t) {
        acc = acc * cand + poly[t];
        quotient.push_back(acc);
      }
      poly = std::move(quotient);
      roots.push_back(cand);
    }
    if (poly.size() == 1) break;
  }
  return poly.size() == 1;
}

// Applies prod_{t != j} (M - theta_t I) / (theta_j - theta_t) to e_0.
std::vector<BigRat> lagrange_exact(const std::vector<std::vector<BigInt>>& M,
                                   const std::vector<std::int64_t>& thetas,
                                   int j) {
  int N = static_cast<int>(M.size());
  std::vector<BigRat> v(N, 0);
  v[0] = 1;
  for (int t = 0; t < static_cast<int>(thetas.size()); ++t) {
    if (t == j) continue;
    std::vector<BigRat> w(N, 0);
    for (int a = 0; a < N; ++a) {
      BigRat acc = 0;
      for (int b = 0; b < N; ++b) {
        if (M[a][b].is_zero() || v[b].is_zero()) continue;
        acc += BigRat(M[a][b]) * v[b];
      }
      acc -= BigRat(thetas[t]) * v[a];
      w[a] = std::move(acc);
    }
    BigRat denom = BigRat(thetas[j]) - BigRat(thetas[t]);
    for (int a = 0; a < N; ++a) w[a] /= denom;
    v = std::move(w);
  }
  return v;
}

std::vector<double> lagrange_approx(const Eigen::MatrixXd& M,
                                    const std::vector<double>& thetas, int j) {
  int N = static_cast<int>(M.rows());
  Eigen::VectorXd v = Eigen::VectorXd::Zero(N);
  v(0) = 1.0;
  for (int t = 0; t < static_cast<int>(thetas.size()); ++t) {
    if (t == j) continue;
    v = (M * v - thetas[t] * v) / (thetas[j] - thetas[t]);
  }
  return std::vector<double>(v.data(), v.data() + N);
}

// Descending lexicographic order on (P_{i,1},...,P_{i,d}); index 0 pinned.
// Selection sort keeps the comparator free of strict-weak-order pitfalls in
// Approx mode.
std::vector<int> canonical_order(const ScalarMatrix& P, int e0_index,
                                 const Tolerance& tol) {
  int N = P.rows();
  std::vector<int> rest;
  for (int i = 0; i < N; ++i) {
    if (i != e0_index) rest.push_back(i);
  }
  auto row_less = [&](int a, int b) {  // true when row a < row b
    for (int j = 1; j < N; ++j) {
      if (scalar_eq(P.at(a, j), P.at(b, j), tol)) continue;
      return P.at(a, j) < P.at(b, j);
    }
    return false;
  };
  for (size_t t = 0; t + 1 < rest.size(); ++t) {
    size_t best = t;
    for (size_t u = t + 1; u < rest.size(); ++u) {
      if (row_less(rest[best], rest[u])) best = u;  // pick the largest
    }
    std::swap(rest[t], rest[best]);
  }
  std::vector<int> order;
  order.push_back(e0_index);
  order.insert(order.end(), rest.begin(), rest.end());
  return order;
}

SpectralData assemble(const AssociationScheme& s,
                      const SchemeParameters& params, ScalarMode mode,
                      const Tolerance& tol,
                      std::vector<std::vector<Scalar>> idempotents) {
  int N = params.d + 1;
  const std::int64_t n = s.n();

  // locate E_0 = J/n (coefficient vector identically 1/n)
  Scalar inv_n = Scalar::one(mode) / Scalar::of(mode, n);
  int e0 = -1;
  for (int j = 0; j < N && e0 < 0; ++j) {
    bool all = true;
    for (int a = 0; a < N; ++a) {
      if (!scalar_eq(idempotents[j][a], inv_n,
                     Tolerance{std::max(tol.eps_eq, tol.eps_cluster),
                               tol.eps_cluster})) {
        all = false;
        break;
      }
    }
    if (all) e0 = j;
  }
  if (e0 < 0) {
    throw InternalInconsistency(
        "no idempotent matches E_0 = J/n; decomposition inconsistent");
  }

  // P_{i,j} = (B_j v_i)_0 / (v_i)_0, the eigenvalue of A_j on eigenspace i.
  // Row 0 of B_j is p^0_{j,b} = delta_{jb} k_b, so this collapses to
  // k_j v_i[j] / v_i[0] (and v_i[0] = m_i/n > 0).
  ScalarMatrix P(N, N, Scalar::zero(mode));
  for (int i = 0; i < N; ++i) {
    const auto& v = idempotents[i];
    for (int j = 0; j < N; ++j) {
      P.at(i, j) = Scalar::of(mode, params.k[j]) * v[j] / v[0];
    }
  }

  std::vector<int> order = canonical_order(P, e0, tol);

  SpectralData sp;
  sp.n = s.n();
  sp.d = params.d;
  sp.mode = mode;
  sp.P = ScalarMatrix(N, N, Scalar::zero(mode));
  sp.Q = ScalarMatrix(N, N, Scalar::zero(mode));
  sp.e_coeffs = ScalarMatrix(N, N, Scalar::zero(mode));
  Scalar n_scalar = Scalar::of(mode, n);
  for (int i = 0; i < N; ++i) {
    for (int j = 0; j < N; ++j) {
      sp.P.at(i, j) = P.at(order[i], j);
      sp.Q.at(i, j) = idempotents[order[j]][i] * n_scalar;
      sp.e_coeffs.at(j, i) = idempotents[order[j]][i];
    }
  }
  sp.m.reserve(N);
  for (int j = 0; j < N; ++j) sp.m.push_back(sp.Q.at(0, j));

  // structural guarantees: P_{0,j} = k_j and Q_{i,0} = 1
  for (int j = 0; j < N; ++j) {
    if (!scalar_eq(sp.P.at(0, j), Scalar::of(mode, params.k[j]), tol)) {
      throw InternalInconsistency("row 0 of P does not match the valencies");
    }
    if (!scalar_eq(sp.Q.at(j, 0), Scalar::one(mode), tol)) {
      throw InternalInconsistency("column 0 of Q is not constant 1");
    }
  }
  return sp;
}

SpectralData decompose_exact(const AssociationScheme& s,
                             const SchemeParameters& params,
                             const Tolerance& tol) {
  int N = params.d + 1;
  std::mt19937_64 rng(kRedrawSeed);
  bool saw_irrational = false;

  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    auto c = coefficient_attempt(attempt, N, rng, kMaxScanRadius, params.k);
    GenericElement g = generic_element(params, c);
    if (g.radius > kMaxScanRadius) continue;

    std::vector<std::int64_t> roots;
    if (!integer_roots(char_poly(g.M), g.radius, roots)) {
      saw_irrational = true;
      continue;
    }
    bool distinct =
        std::adjacent_find(roots.begin(), roots.end()) == roots.end();
    if (static_cast<int>(roots.size()) != N || !distinct) continue;

    std::vector<std::vector<Scalar>> idempotents(N);
    for (int j = 0; j < N; ++j) {
      auto v = lagrange_exact(g.M, roots, j);
      idempotents[j].reserve(N);
      for (auto& x : v) idempotents[j].push_back(Scalar::exact(std::move(x)));
    }
    return assemble(s, params, ScalarMode::Exact, tol, std::move(idempotents));
  }

  if (saw_irrational) {
    throw SpectralError(
        SpectralError::Code::IrrationalSpectrum,
        "irrational spectrum: the characteristic polynomial of the generic "
        "element does not split over the rationals; use approx mode");
  }
  throw SpectralError(SpectralError::Code::ClusterAmbiguity,
                      "could not separate the " + std::to_string(N) +
                          " eigenspaces after " +
                          std::to_string(kMaxAttempts) + " attempts");
}

SpectralData decompose_approx(const AssociationScheme& s,
                              const SchemeParameters& params,
                              const Tolerance& tol) {
  int N = params.d + 1;
  std::mt19937_64 rng(kRedrawSeed);
  std::string last_failure;

  Eigen::MatrixXd D = Eigen::MatrixXd::Zero(N, N);
  Eigen::MatrixXd Dinv = Eigen::MatrixXd::Zero(N, N);
  for (int i = 0; i < N; ++i) {
    double root = std::sqrt(static_cast<double>(params.k[i]));
    D(i, i) = root;
    Dinv(i, i) = 1.0 / root;
  }

  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    auto c = coefficient_attempt(attempt, N, rng, kMaxScanRadius, params.k);
    Eigen::MatrixXd M = Eigen::MatrixXd::Zero(N, N);
    for (int i = 1; i < N; ++i) {
      if (c[i] == 0) continue;
      for (int h = 0; h < N; ++h) {
        for (int j = 0; j < N; ++j) {
          M(h, j) += static_cast<double>(c[i]) *
                     static_cast<double>(params.p.at(h, i, j));
        }
      }
    }

    // D M D^-1 is symmetric (k_h p^h_{ij} = k_j p^j_{ih}), so a self-adjoint
    // solve is safe and the spectrum is real.
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(D * M * Dinv);
    if (es.info() != Eigen::Success) {
      last_failure = "eigensolver failed to converge";
      continue;
    }

    std::vector<Scalar> eigs;
    eigs.reserve(N);
    for (int i = 0; i < N; ++i) eigs.push_back(Scalar::approx(es.eigenvalues()(i)));
    auto groups = cluster(eigs, tol);
    if (static_cast<int>(groups.size()) != N) {
      last_failure = "generic element has colliding eigenvalues";
      continue;
    }
    bool separated = true;
    for (size_t t = 0; t + 1 < groups.size(); ++t) {
      double gap = groups[t + 1].representative.approx_value() -
                   groups[t].representative.approx_value();
      if (gap < 10.0 * tol.eps_cluster) {
        separated = false;
        break;
      }
    }
    if (!separated) {
      last_failure = "eigenvalue clusters closer than 10*eps_cluster";
      continue;
    }

    std::vector<double> thetas;
    thetas.reserve(N);
    for (const auto& g : groups) thetas.push_back(g.representative.approx_value());

    std::vector<std::vector<Scalar>> idempotents(N);
    for (int j = 0; j < N; ++j) {
      auto v = lagrange_approx(M, thetas, j);
      idempotents[j].reserve(N);
      for (double x : v) idempotents[j].push_back(Scalar::approx(x));
    }
    return assemble(s, params, ScalarMode::Approx, tol, std::move(idempotents));
  }

  throw SpectralError(SpectralError::Code::ClusterAmbiguity,
                      "cluster ambiguity: " +
                          (last_failure.empty()
                               ? std::string("could not separate eigenspaces")
                               : last_failure) +
                          " after " + std::to_string(kMaxAttempts) +
                          " attempts");
}

}  // namespace

SpectralData decompose(const AssociationScheme& s,
                       const SchemeParameters& params, ScalarMode mode,
                       const Tolerance& tol) {
  if (params.d != s.d()) {
    throw std::invalid_argument("parameters do not match the scheme");
  }
  return mode == ScalarMode::Exact ? decompose_exact(s, params, tol)
                                   : decompose_approx(s, params, tol);
}

KreinTensor krein_parameters(const SpectralData& sp,
                             const SchemeParameters& params,
                             const Tolerance& tol) {
  int N = sp.d + 1;
  ScalarMode mode = sp.mode;
  Scalar n_scalar = Scalar::of(mode, sp.n);

  // precompute P columns scaled by 1/k_r^2
  std::vector<Scalar> inv_k2;
  inv_k2.reserve(N);
  for (int r = 0; r < N; ++r) {
    Scalar k = Scalar::of(mode, params.k[r]);
    inv_k2.push_back(Scalar::one(mode) / (k * k));
  }

  KreinTensor kt;
  kt.d = sp.d;
  kt.q = Tensor3<Scalar>(N, Scalar::zero(mode));
  for (int h = 0; h < N; ++h) {
    for (int i = 0; i < N; ++i) {
      Scalar scale = sp.m[i] / n_scalar;
      for (int j = 0; j <= i; ++j) {
        Scalar sum = Scalar::zero(mode);
        for (int r = 0; r < N; ++r) {
          sum += inv_k2[r] * sp.P.at(i, r) * sp.P.at(j, r) * sp.P.at(h, r);
        }
        Scalar value = scale * sp.m[j] * sum;
        if (value.sign() < 0 &&
            !scalar_eq(value, Scalar::zero(mode), tol)) {
          throw InternalInconsistency(
              "Krein violation: q^" + std::to_string(h) + "_{" +
              std::to_string(i) + "," + std::to_string(j) + "} = " +
              value.str() + " is negative");
        }
        kt.q.at(h, i, j) = value;
        kt.q.at(h, j, i) = value;
      }
    }
  }

  // Cross-check against the entrywise-product definition for small schemes.
  // The associate matrices have disjoint supports, so E_i o E_j expanded in
  // the A-basis reduces the definition to Q_{a,i} Q_{a,j} = sum_h q^h_{ij}
  // Q_{a,h}; this uses Q where the formula above used P.
  if (sp.n <= 64) {
    for (int i = 0; i < N; ++i) {
      for (int j = 0; j <= i; ++j) {
        for (int a = 0; a < N; ++a) {
          Scalar lhs = sp.Q.at(a, i) * sp.Q.at(a, j);
          Scalar rhs = Scalar::zero(mode);
          for (int h = 0; h < N; ++h) rhs += kt.q.at(h, i, j) * sp.Q.at(a, h);
          if (!scalar_eq(lhs, rhs, tol)) {
            throw InternalInconsistency(
                "Krein parameters disagree with the entrywise-product "
                "definition at (i,j,a) = (" +
                std::to_string(i) + "," + std::to_string(j) + "," +
                std::to_string(a) + ")");
          }
        }
      }
    }
  }
  return kt;
}

ReconstructionCheck verify_p_from_Q(const SpectralData& sp,
                                    const SchemeParameters& params,
                                    const Tolerance& tol) {
  int N = sp.d + 1;
  ScalarMode mode = sp.mode;
  Scalar n_scalar = Scalar::of(mode, sp.n);

  std::vector<Scalar> inv_m2;
  inv_m2.reserve(N);
  for (int r = 0; r < N; ++r) {
    inv_m2.push_back(Scalar::one(mode) / (sp.m[r] * sp.m[r]));
  }

  ReconstructionCheck out;
  for (int h = 0; h < N; ++h) {
    for (int i = 0; i < N; ++i) {
      for (int j = 0; j < N; ++j) {
        Scalar sum = Scalar::zero(mode);
        for (int r = 0; r < N; ++r) {
          sum += inv_m2[r] * sp.Q.at(i, r) * sp.Q.at(j, r) * sp.Q.at(h, r);
        }
        Scalar recon = Scalar::of(mode, params.k[i] * params.k[j]) /
                       n_scalar * sum;
        if (!scalar_eq(recon, Scalar::of(mode, params.p.at(h, i, j)), tol)) {
          out.ok = false;
          out.first_mismatch = {{h, i, j}};
          return out;
        }
      }
    }
  }
  return out;
}

}  // namespace assoc
