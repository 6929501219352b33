#include "assoc/duality.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace assoc {

OrderingPermutation OrderingPermutation::identity(int d) {
  OrderingPermutation s;
  s.sigma.resize(d + 1);
  std::iota(s.sigma.begin(), s.sigma.end(), 0);
  return s;
}

OrderingPermutation OrderingPermutation::parse(std::string_view text,
                                               int expected_d) {
  OrderingPermutation s;
  std::string token;
  std::istringstream in{std::string(text)};
  while (std::getline(in, token, ',')) {
    try {
      size_t pos = 0;
      int v = std::stoi(token, &pos);
      if (pos != token.size()) throw std::invalid_argument("");
      s.sigma.push_back(v);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad permutation entry: " + token);
    }
  }
  int d = s.d();
  if (expected_d >= 0 && d != expected_d) {
    throw std::invalid_argument("permutation has " +
                                std::to_string(s.sigma.size()) +
                                " entries, expected " +
                                std::to_string(expected_d + 1));
  }
  require_valid_ordering(s, d);
  return s;
}

bool OrderingPermutation::valid() const {
  if (sigma.empty() || sigma[0] != 0) return false;
  std::vector<char> seen(sigma.size(), 0);
  for (int v : sigma) {
    if (v < 0 || v > d() || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

OrderingPermutation OrderingPermutation::inverse() const {
  OrderingPermutation inv;
  inv.sigma.resize(sigma.size());
  for (size_t i = 0; i < sigma.size(); ++i) inv.sigma[sigma[i]] = static_cast<int>(i);
  return inv;
}

OrderingPermutation OrderingPermutation::compose(
    const OrderingPermutation& inner) const {
  OrderingPermutation out;
  out.sigma.resize(sigma.size());
  for (size_t i = 0; i < sigma.size(); ++i) out.sigma[i] = sigma[inner.sigma[i]];
  return out;
}

std::string OrderingPermutation::str() const {
  std::string out;
  for (size_t i = 0; i < sigma.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(sigma[i]);
  }
  return out;
}

void require_valid_ordering(const OrderingPermutation& sigma, int d) {
  if (sigma.d() != d || !sigma.valid()) {
    std::string why = sigma.d() != d ? "wrong length"
                      : sigma.sigma.empty() || sigma.sigma[0] != 0
                          ? "must fix 0"
                          : "not a bijection";
    throw std::invalid_argument("invalid ordering permutation [" +
                                sigma.str() + "]: " + why);
  }
}

std::pair<SpectralData, KreinTensor> reorder(const SpectralData& sp,
                                             const KreinTensor& kt,
                                             const OrderingPermutation& sigma) {
  require_valid_ordering(sigma, sp.d);
  int N = sp.d + 1;

  SpectralData out = sp;
  for (int i = 0; i < N; ++i) {
    for (int j = 0; j < N; ++j) {
      out.P.at(i, j) = sp.P.at(sigma(i), j);
      out.Q.at(i, j) = sp.Q.at(i, sigma(j));
      out.e_coeffs.at(i, j) = sp.e_coeffs.at(sigma(i), j);
    }
  }
  for (int j = 0; j < N; ++j) out.m[j] = sp.m[sigma(j)];

  KreinTensor qt;
  qt.d = kt.d;
  qt.q = Tensor3<Scalar>(N, Scalar::zero(sp.mode));
  for (int h = 0; h < N; ++h) {
    for (int i = 0; i < N; ++i) {
      for (int j = 0; j < N; ++j) {
        qt.q.at(h, i, j) = kt.q.at(sigma(h), sigma(i), sigma(j));
      }
    }
  }
  return {std::move(out), std::move(qt)};
}

bool is_formally_self_dual(
    const SpectralData& sp, const OrderingPermutation& sigma,
    const Tolerance& tol,
    std::optional<std::pair<int, int>>* first_mismatch) {
  require_valid_ordering(sigma, sp.d);
  int N = sp.d + 1;
  for (int i = 0; i < N; ++i) {
    for (int j = 0; j < N; ++j) {
      if (!scalar_eq(sp.P.at(sigma(i), j), sp.Q.at(i, sigma(j)), tol)) {
        if (first_mismatch) *first_mismatch = std::make_pair(i, j);
        return false;
      }
    }
  }
  if (first_mismatch) first_mismatch->reset();
  return true;
}

bool is_numerically_self_dual(
    const SchemeParameters& params, const KreinTensor& kt,
    const OrderingPermutation& sigma, const Tolerance& tol,
    std::optional<std::array<int, 3>>* first_mismatch) {
  require_valid_ordering(sigma, params.d);
  int N = params.d + 1;
  ScalarMode mode = kt.q.at(0, 0, 0).mode();
  for (int h = 0; h < N; ++h) {
    for (int i = 0; i < N; ++i) {
      for (int j = 0; j < N; ++j) {
        Scalar p = Scalar::of(mode, params.p.at(h, i, j));
        if (!scalar_eq(p, kt.q.at(sigma(h), sigma(i), sigma(j)), tol)) {
          if (first_mismatch) *first_mismatch = std::array<int, 3>{h, i, j};
          return false;
        }
      }
    }
  }
  if (first_mismatch) first_mismatch->reset();
  return true;
}

DualityReport duality_report(const SchemeParameters& params,
                             const SpectralData& sp, const KreinTensor& kt,
                             const OrderingPermutation& sigma,
                             const Tolerance& tol) {
  DualityReport r;
  r.ordering = sigma;
  r.formally_self_dual =
      is_formally_self_dual(sp, sigma, tol, &r.first_P_Q_mismatch);
  r.numerically_self_dual =
      is_numerically_self_dual(params, kt, sigma, tol, &r.first_pq_mismatch);
  return r;
}

ClassificationResult classify_all_orderings(const SchemeParameters& params,
                                            const SpectralData& sp,
                                            const KreinTensor& kt,
                                            const Tolerance& tol) {
  if (sp.d > kMaxEnumerationClasses) {
    throw std::invalid_argument(
        "ordering enumeration is limited to d <= " +
        std::to_string(kMaxEnumerationClasses) + " (" +
        std::to_string(sp.d) + "! orderings would be required)");
  }
  std::vector<int> tail(sp.d);
  std::iota(tail.begin(), tail.end(), 1);

  ClassificationResult out;
  do {
    OrderingPermutation sigma;
    sigma.sigma.reserve(sp.d + 1);
    sigma.sigma.push_back(0);
    sigma.sigma.insert(sigma.sigma.end(), tail.begin(), tail.end());
    DualityReport r = duality_report(params, sp, kt, sigma, tol);
    ++out.summary.orderings;
    if (r.formally_self_dual) ++out.summary.fsd;
    if (r.numerically_self_dual) ++out.summary.nsd;
    if (r.numerically_self_dual && !r.formally_self_dual) {
      ++out.summary.nsd_not_fsd;
    }
    out.reports.push_back(std::move(r));
  } while (std::next_permutation(tail.begin(), tail.end()));
  return out;
}

}  // namespace assoc
