#include "assoc/group_scheme.hpp"

#include <algorithm>

namespace assoc {

AssociationScheme build_group_scheme(int m) {
  if (m < 1 || m > 10) {
    throw std::invalid_argument("group scheme order out of range 1 <= m <= 10");
  }
  int n = 1 << m;
  RelationIndexMatrix rel = RelationIndexMatrix::filled(n, n - 1);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) rel.at(x, y) = x ^ y;
  }
  return AssociationScheme::trusted(std::move(rel));
}

std::vector<std::vector<int>> closed_form_eigenmatrix(int m) {
  if (m < 1 || m > 10) {
    throw std::invalid_argument("group scheme order out of range 1 <= m <= 10");
  }
  int n = 1 << m;
  std::vector<std::vector<int>> H(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) H[x][y] = bilinear_form(x, y) ? -1 : 1;
  }
  return H;
}

OrderingPermutation character_alignment(const SpectralData& sp) {
  int N = sp.d + 1;
  int m = 0;
  while ((1 << m) < N) ++m;
  if ((1 << m) != N) {
    throw std::invalid_argument("not a binary group scheme (d+1 = " +
                                std::to_string(N) + " is not a power of 2)");
  }
  auto H = closed_form_eigenmatrix(m);
  Tolerance tol = sp.mode == ScalarMode::Exact ? Tolerance::exact()
                                               : Tolerance::approx();

  OrderingPermutation a;
  a.sigma.assign(N, -1);
  std::vector<char> used(N, 0);
  for (int x = 0; x < N; ++x) {
    for (int j = 0; j < N; ++j) {
      if (used[j]) continue;
      bool match = true;
      for (int i = 0; i < N && match; ++i) {
        match = scalar_eq(sp.Q.at(i, j), Scalar::of(sp.mode, H[i][x]), tol);
      }
      if (match) {
        a.sigma[x] = j;
        used[j] = 1;
        break;
      }
    }
    if (a.sigma[x] < 0) {
      throw InternalInconsistency(
          "no idempotent matches character " + std::to_string(x) +
          "; spectral data is not the binary group scheme's");
    }
  }
  return a;
}

GroupSchemeData group_scheme_data(int m, ScalarMode mode,
                                  const Tolerance& tol) {
  AssociationScheme scheme = build_group_scheme(m);
  SchemeParameters params = intersection_numbers(scheme);
  SpectralData canonical = decompose(scheme, params, mode, tol);
  KreinTensor kt = krein_parameters(canonical, params, tol);
  OrderingPermutation align = character_alignment(canonical);
  auto [sp_aligned, kt_aligned] = reorder(canonical, kt, align);
  return GroupSchemeData{m, std::move(scheme), std::move(params),
                         std::move(sp_aligned), std::move(kt_aligned)};
}

bool is_linear_permutation(const std::vector<int>& sigma) {
  int n = static_cast<int>(sigma.size());
  if (n == 0 || sigma[0] != 0) return false;
  for (int x = 0; x < n; ++x) {
    for (int y = x; y < n; ++y) {
      if (sigma[x ^ y] != (sigma[x] ^ sigma[y])) return false;
    }
  }
  return true;
}

namespace {

// Fisher-Yates on {1,...,n-1}; index 0 stays fixed.
std::vector<int> random_permutation_fixing_zero(int n, std::mt19937_64& rng) {
  std::vector<int> sigma(n);
  for (int i = 0; i < n; ++i) sigma[i] = i;
  for (int i = n - 1; i > 1; --i) {
    std::uniform_int_distribution<int> pick(1, i);
    std::swap(sigma[i], sigma[pick(rng)]);
  }
  return sigma;
}

ScalarMatrix reordered_P(const SpectralData& sp,
                         const OrderingPermutation& sigma) {
  int N = sp.d + 1;
  ScalarMatrix out(N, N, Scalar::zero(sp.mode));
  for (int i = 0; i < N; ++i) {
    for (int j = 0; j < N; ++j) out.at(i, j) = sp.P.at(sigma(i), j);
  }
  return out;
}

ScalarMatrix reordered_Q(const SpectralData& sp,
                         const OrderingPermutation& sigma) {
  int N = sp.d + 1;
  ScalarMatrix out(N, N, Scalar::zero(sp.mode));
  for (int i = 0; i < N; ++i) {
    for (int j = 0; j < N; ++j) out.at(i, j) = sp.Q.at(i, sigma(j));
  }
  return out;
}

}  // namespace

Gl2Classification gl2_classify(int m, int trials_nonlinear,
                               std::uint64_t seed, ScalarMode mode,
                               const Tolerance& tol, bool with_details) {
  if (m < 1 || m > 3) {
    throw std::invalid_argument(
        "gl2 classification is limited to m <= 3 (full NSD evaluation)");
  }
  GroupSchemeData g = group_scheme_data(m, mode, tol);
  int n = 1 << m;

  Gl2Classification out;
  out.m = m;
  bool details = with_details || m <= 2;

  for (const Gf2Matrix& S : enumerate_linear_bijections(m)) {
    OrderingPermutation sigma = sigma_from_matrix(S);
    DualityReport r = duality_report(g.params, g.sp, g.kt, sigma, tol);
    ++out.linear_total;
    if (S.symmetric()) ++out.symmetric;
    if (r.formally_self_dual) ++out.fsd;
    if (r.numerically_self_dual) ++out.nsd;
    if (details) {
      LinearOrderingReport d{S,
                             sigma,
                             S.symmetric(),
                             r.formally_self_dual,
                             r.numerically_self_dual,
                             reordered_P(g.sp, sigma),
                             reordered_Q(g.sp, sigma)};
      out.details.push_back(std::move(d));
    }
  }

  // Non-linear side. For m <= 2 every bijection fixing 0 is linear
  // (GL(2,2) realizes all six permutations of the nonzero vectors), so the
  // sample set is empty by construction.
  if (trials_nonlinear > 0 && m >= 3) {
    std::mt19937_64 rng(seed);
    long attempts = 0;
    const long max_attempts = 1000L * trials_nonlinear;
    while (out.nonlinear_sampled < trials_nonlinear &&
           attempts < max_attempts) {
      ++attempts;
      std::vector<int> perm = random_permutation_fixing_zero(n, rng);
      if (is_linear_permutation(perm)) continue;
      OrderingPermutation sigma;
      sigma.sigma = perm;
      ++out.nonlinear_sampled;
      if (is_numerically_self_dual(g.params, g.kt, sigma, tol)) {
        ++out.nonlinear_nsd;
      }
    }
  }
  return out;
}

NsdLinearityReport verify_nsd_iff_linear(int m, int trials_nonlinear,
                                         std::uint64_t seed) {
  if (m < 1 || m > 3) {
    throw std::invalid_argument(
        "exhaustive linear-side verification is limited to m <= 3");
  }
  Gl2Classification c = gl2_classify(m, trials_nonlinear, seed,
                                     ScalarMode::Exact, Tolerance::exact());
  NsdLinearityReport r;
  r.m = m;
  r.linear_total = c.linear_total;
  r.linear_nsd = c.nsd;
  r.nonlinear_sampled = c.nonlinear_sampled;
  r.nonlinear_nsd = c.nonlinear_nsd;
  r.ok = (c.nsd == c.linear_total) && (c.nonlinear_nsd == 0);
  if (c.nsd != c.linear_total) {
    r.counterexample = "a linear ordering was not numerically self-dual";
  } else if (c.nonlinear_nsd != 0) {
    r.counterexample =
        "a non-linear permutation was numerically self-dual";
  }
  return r;
}

FsdSymmetryReport verify_fsd_iff_symmetric(int m) {
  if (m < 1 || m > kMaxEnumerationDim) {
    throw std::invalid_argument("enumeration is limited to m <= " +
                                std::to_string(kMaxEnumerationDim));
  }
  Tolerance tol = Tolerance::exact();
  GroupSchemeData g = group_scheme_data(m, ScalarMode::Exact, tol);

  FsdSymmetryReport r;
  r.m = m;
  for (const Gf2Matrix& S : enumerate_linear_bijections(m)) {
    OrderingPermutation sigma = sigma_from_matrix(S);
    bool fsd = is_formally_self_dual(g.sp, sigma, tol);
    bool sym = S.symmetric();
    ++r.linear_total;
    if (sym) ++r.symmetric_count;
    if (fsd) ++r.fsd_count;
    if (fsd != sym) {
      ++r.disagreements;
      if (!r.counterexample) {
        r.counterexample = "S = " + S.str() + ": symmetric=" +
                           (sym ? "true" : "false") + " but fsd=" +
                           (fsd ? "true" : "false");
      }
    }
  }
  r.ok = r.disagreements == 0;
  return r;
}

}  // namespace assoc
