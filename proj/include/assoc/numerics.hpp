#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace assoc {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Arithmetic mode shared by a whole computation. Exact mode uses
/// arbitrary-precision rationals and is bit-reproducible; Approx mode uses
/// doubles together with a Tolerance.
enum class ScalarMode { Exact, Approx };

inline const char* mode_name(ScalarMode m) {
  return m == ScalarMode::Exact ? "exact" : "approx";
}

/// Comparison tolerances. Both are zero in Exact mode. In Approx mode
/// eps_eq governs equality tests and eps_cluster governs eigenvalue
/// clustering; eps_eq <= eps_cluster is required.
struct Tolerance {
  double eps_eq = 0.0;
  double eps_cluster = 0.0;

  static Tolerance exact() { return Tolerance{0.0, 0.0}; }
  static Tolerance approx(double eq = 1e-9, double cluster = 1e-6);
};

/// A number in one of the two arithmetic modes. Operations never mix modes;
/// a mixed-mode operation throws std::invalid_argument.
class Scalar {
 public:
  Scalar() : v_(BigRat(0)) {}

  static Scalar exact(long long n) { return Scalar(BigRat(n)); }
  static Scalar exact(BigRat r) { return Scalar(std::move(r)); }
  static Scalar exact_ratio(long long num, long long den);
  static Scalar approx(double x) { return Scalar(x); }
  /// The integer n in the requested mode.
  static Scalar of(ScalarMode m, long long n);
  static Scalar zero(ScalarMode m) { return of(m, 0); }
  static Scalar one(ScalarMode m) { return of(m, 1); }

  ScalarMode mode() const {
    return std::holds_alternative<BigRat>(v_) ? ScalarMode::Exact
                                              : ScalarMode::Approx;
  }
  bool is_exact() const { return mode() == ScalarMode::Exact; }

  const BigRat& rational() const;
  double approx_value() const;
  /// Value as a double regardless of mode (lossy in Exact mode).
  double to_double() const;

  bool is_zero() const;
  int sign() const;  // -1, 0, +1
  Scalar abs() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  /// Mode-exact total order (rational comparison / double comparison).
  static int compare(const Scalar& a, const Scalar& b);
  bool operator==(const Scalar& o) const { return compare(*this, o) == 0; }
  bool operator!=(const Scalar& o) const { return compare(*this, o) != 0; }
  bool operator<(const Scalar& o) const { return compare(*this, o) < 0; }
  bool operator>(const Scalar& o) const { return compare(*this, o) > 0; }

  /// "a/b" (or "a" for integers) in Exact mode, shortest-roundtrip decimal
  /// in Approx mode.
  std::string str() const;
  static Scalar parse(std::string_view text, ScalarMode mode);

 private:
  explicit Scalar(BigRat r) : v_(std::move(r)) {}
  explicit Scalar(double x) : v_(x) {}

  std::variant<BigRat, double> v_;
};

/// Equality test honoring the tolerance: exact rational equality in Exact
/// mode, |a-b| <= eps_eq in Approx mode. Throws on mode mismatch.
bool scalar_eq(const Scalar& a, const Scalar& b, const Tolerance& tol);

struct Cluster {
  Scalar representative;     // common value (Exact) or cluster mean (Approx)
  std::vector<int> members;  // input indices, ascending
};

/// Partition the values into groups of pairwise-equal (Exact) or
/// pairwise-within-eps_cluster (Approx, single linkage on the sorted line)
/// elements. Clusters are returned in order of first appearance in the input.
std::vector<Cluster> cluster(const std::vector<Scalar>& values,
                             const Tolerance& tol);

/// Dense matrix of Scalars; all entries share one mode.
class ScalarMatrix {
 public:
  ScalarMatrix() = default;
  ScalarMatrix(int rows, int cols, const Scalar& fill);
  static ScalarMatrix identity(int n, ScalarMode mode);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Scalar& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const Scalar& at(int i, int j) const {
    return a_[static_cast<size_t>(i) * cols_ + j];
  }

  std::vector<Scalar> apply(const std::vector<Scalar>& v) const;
  ScalarMatrix multiply(const ScalarMatrix& o) const;
  ScalarMatrix hadamard(const ScalarMatrix& o) const;
  ScalarMatrix scaled(const Scalar& s) const;
  ScalarMatrix plus(const ScalarMatrix& o) const;
  ScalarMatrix transposed() const;
  bool equals(const ScalarMatrix& o, const Tolerance& tol) const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Scalar> a_;
};

}  // namespace assoc
