#include "assoc/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>

namespace assoc {

Tolerance Tolerance::approx(double eq, double cluster) {
  if (eq < 0 || cluster < 0 || eq > cluster) {
    throw std::invalid_argument(
        "tolerance requires 0 <= eps_eq <= eps_cluster");
  }
  return Tolerance{eq, cluster};
}

Scalar Scalar::exact_ratio(long long num, long long den) {
  if (den == 0) throw std::domain_error("zero denominator");
  return Scalar(BigRat(BigInt(num), BigInt(den)));
}

Scalar Scalar::of(ScalarMode m, long long n) {
  return m == ScalarMode::Exact ? exact(n) : approx(static_cast<double>(n));
}

const BigRat& Scalar::rational() const {
  if (!is_exact()) throw std::invalid_argument("scalar is not in exact mode");
  return std::get<BigRat>(v_);
}

double Scalar::approx_value() const {
  if (is_exact()) throw std::invalid_argument("scalar is not in approx mode");
  return std::get<double>(v_);
}

double Scalar::to_double() const {
  return is_exact() ? std::get<BigRat>(v_).convert_to<double>()
                    : std::get<double>(v_);
}

bool Scalar::is_zero() const {
  return is_exact() ? std::get<BigRat>(v_).is_zero()
                    : std::get<double>(v_) == 0.0;
}

int Scalar::sign() const {
  if (is_exact()) return std::get<BigRat>(v_).sign();
  double x = std::get<double>(v_);
  return x > 0 ? 1 : (x < 0 ? -1 : 0);
}

Scalar Scalar::abs() const { return sign() < 0 ? -*this : *this; }

Scalar Scalar::operator-() const {
  if (is_exact()) return Scalar(BigRat(-std::get<BigRat>(v_)));
  return Scalar(-std::get<double>(v_));
}

namespace {
void require_same_mode(const Scalar& a, const Scalar& b) {
  if (a.mode() != b.mode()) {
    throw std::invalid_argument("scalar mode mismatch (exact vs approx)");
  }
}
}  // namespace

Scalar& Scalar::operator+=(const Scalar& o) {
  require_same_mode(*this, o);
  if (is_exact()) {
    std::get<BigRat>(v_) += std::get<BigRat>(o.v_);
  } else {
    std::get<double>(v_) += std::get<double>(o.v_);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  require_same_mode(*this, o);
  if (is_exact()) {
    std::get<BigRat>(v_) -= std::get<BigRat>(o.v_);
  } else {
    std::get<double>(v_) -= std::get<double>(o.v_);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  require_same_mode(*this, o);
  if (is_exact()) {
    std::get<BigRat>(v_) *= std::get<BigRat>(o.v_);
  } else {
    std::get<double>(v_) *= std::get<double>(o.v_);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  require_same_mode(*this, o);
  if (o.is_zero()) throw std::domain_error("scalar division by zero");
  if (is_exact()) {
    std::get<BigRat>(v_) /= std::get<BigRat>(o.v_);
  } else {
    std::get<double>(v_) /= std::get<double>(o.v_);
  }
  return *this;
}

int Scalar::compare(const Scalar& a, const Scalar& b) {
  require_same_mode(a, b);
  if (a.is_exact()) {
    return std::get<BigRat>(a.v_).compare(std::get<BigRat>(b.v_));
  }
  double x = std::get<double>(a.v_), y = std::get<double>(b.v_);
  return x < y ? -1 : (x > y ? 1 : 0);
}

std::string Scalar::str() const {
  if (is_exact()) return std::get<BigRat>(v_).str();
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.17g", std::get<double>(v_));
  return buf;
}

Scalar Scalar::parse(std::string_view text, ScalarMode mode) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty scalar literal");
  if (mode == ScalarMode::Exact) {
    try {
      return Scalar(BigRat(s));
    } catch (const std::exception&) {
      throw std::invalid_argument("bad rational literal: " + s);
    }
  }
  try {
    size_t pos = 0;
    double x = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("");
    return Scalar(x);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad decimal literal: " + s);
  }
}

bool scalar_eq(const Scalar& a, const Scalar& b, const Tolerance& tol) {
  if (a.mode() != b.mode()) {
    throw std::invalid_argument("scalar mode mismatch (exact vs approx)");
  }
  if (a.is_exact()) return a.rational() == b.rational();
  return std::fabs(a.approx_value() - b.approx_value()) <= tol.eps_eq;
}

std::vector<Cluster> cluster(const std::vector<Scalar>& values,
                             const Tolerance& tol) {
  std::vector<Cluster> out;
  if (values.empty()) return out;
  ScalarMode mode = values.front().mode();
  for (const Scalar& v : values) {
    if (v.mode() != mode) {
      throw std::invalid_argument("cluster input mixes scalar modes");
    }
  }

  std::vector<int> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    int c = Scalar::compare(values[a], values[b]);
    return c != 0 ? c < 0 : a < b;
  });

  std::vector<std::vector<int>> groups;
  for (int idx : order) {
    bool fresh = groups.empty();
    if (!fresh) {
      const Scalar& prev = values[groups.back().back()];
      if (mode == ScalarMode::Exact) {
        fresh = values[idx] != prev;
      } else {
        fresh = values[idx].approx_value() - prev.approx_value() >
                tol.eps_cluster;
      }
    }
    if (fresh) groups.emplace_back();
    groups.back().push_back(idx);
  }

  for (auto& g : groups) {
    Cluster c;
    if (mode == ScalarMode::Exact) {
      c.representative = values[g.front()];
    } else {
      double sum = 0;
      for (int idx : g) sum += values[idx].approx_value();
      c.representative = Scalar::approx(sum / static_cast<double>(g.size()));
    }
    std::sort(g.begin(), g.end());
    c.members = std::move(g);
    out.push_back(std::move(c));
  }
  // report clusters in order of first appearance in the input
  std::sort(out.begin(), out.end(), [](const Cluster& a, const Cluster& b) {
    return a.members.front() < b.members.front();
  });
  return out;
}

ScalarMatrix::ScalarMatrix(int rows, int cols, const Scalar& fill)
    : rows_(rows),
      cols_(cols),
      a_(static_cast<size_t>(rows) * cols, fill) {}

ScalarMatrix ScalarMatrix::identity(int n, ScalarMode mode) {
  ScalarMatrix m(n, n, Scalar::zero(mode));
  for (int i = 0; i < n; ++i) m.at(i, i) = Scalar::one(mode);
  return m;
}

std::vector<Scalar> ScalarMatrix::apply(const std::vector<Scalar>& v) const {
  if (static_cast<int>(v.size()) != cols_) {
    throw std::invalid_argument("matrix/vector size mismatch");
  }
  std::vector<Scalar> out;
  out.reserve(rows_);
  for (int i = 0; i < rows_; ++i) {
    Scalar s = at(i, 0) * v[0];
    for (int j = 1; j < cols_; ++j) s += at(i, j) * v[j];
    out.push_back(std::move(s));
  }
  return out;
}

ScalarMatrix ScalarMatrix::multiply(const ScalarMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix size mismatch");
  ScalarMode mode = rows_ && cols_ ? at(0, 0).mode() : ScalarMode::Exact;
  ScalarMatrix out(rows_, o.cols_, Scalar::zero(mode));
  for (int i = 0; i < rows_; ++i) {
    for (int t = 0; t < cols_; ++t) {
      const Scalar& x = at(i, t);
      if (x.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) out.at(i, j) += x * o.at(t, j);
    }
  }
  return out;
}

ScalarMatrix ScalarMatrix::hadamard(const ScalarMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) {
    throw std::invalid_argument("matrix size mismatch");
  }
  ScalarMatrix out = *this;
  for (size_t t = 0; t < a_.size(); ++t) out.a_[t] *= o.a_[t];
  return out;
}

ScalarMatrix ScalarMatrix::scaled(const Scalar& s) const {
  ScalarMatrix out = *this;
  for (auto& x : out.a_) x *= s;
  return out;
}

ScalarMatrix ScalarMatrix::plus(const ScalarMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) {
    throw std::invalid_argument("matrix size mismatch");
  }
  ScalarMatrix out = *this;
  for (size_t t = 0; t < a_.size(); ++t) out.a_[t] += o.a_[t];
  return out;
}

ScalarMatrix ScalarMatrix::transposed() const {
  ScalarMatrix out(cols_, rows_, rows_ && cols_ ? at(0, 0) : Scalar());
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  }
  return out;
}

bool ScalarMatrix::equals(const ScalarMatrix& o, const Tolerance& tol) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (size_t t = 0; t < a_.size(); ++t) {
    if (!scalar_eq(a_[t], o.a_[t], tol)) return false;
  }
  return true;
}

}  // namespace assoc
