#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "assoc/tensor.hpp"

namespace assoc {

/// A partition of X*X into d+1 relations, stored as one n*n matrix of
/// relation indices: at(x,y) = i means (x,y) lies in relation i. Relation 0
/// is the diagonal and every relation is symmetric.
struct RelationIndexMatrix {
  int n = 0;
  int d = 0;
  std::vector<std::int32_t> idx;  // n*n, row-major

  static RelationIndexMatrix filled(int n, int d, std::int32_t value = 0);

  std::int32_t at(int x, int y) const {
    return idx[static_cast<size_t>(x) * n + y];
  }
  std::int32_t& at(int x, int y) {
    return idx[static_cast<size_t>(x) * n + y];
  }

  bool operator==(const RelationIndexMatrix& o) const {
    return n == o.n && d == o.d && idx == o.idx;
  }
};

/// First defect found while checking the scheme axioms. Coordinates identify
/// the offending cell, relation, or (for the constant-count axiom) the triple
/// (h,i,j) together with two witness pairs whose counts differ.
struct SchemeViolation {
  enum class Kind {
    BadShape,         // idx size does not match n*n, or n/d out of range
    BadEntry,         // entry outside [0, d] at (x, y)
    NonzeroDiagonal,  // at(x, x) != 0
    Asymmetric,       // at(x, y) != at(y, x)
    MissingRelation,  // relation index i never occurs
    NotConstant,      // count for (h,i,j) differs between two pairs
  };

  Kind kind;
  int x = -1, y = -1;    // offending cell / first witness pair
  int h = -1, i = -1, j = -1;
  int x2 = -1, y2 = -1;  // second witness pair (NotConstant)
  long long count1 = -1, count2 = -1;

  std::string message() const;
};

class SchemeError : public std::runtime_error {
 public:
  explicit SchemeError(SchemeViolation v)
      : std::runtime_error(v.message()), violation(std::move(v)) {}
  SchemeViolation violation;
};

/// A verified symmetric association scheme. Immutable; all accessors are
/// safe for concurrent use.
class AssociationScheme {
 public:
  /// Wrap a relation matrix that is valid by construction (generators).
  static AssociationScheme trusted(RelationIndexMatrix rel);

  int n() const { return rel_.n; }
  int d() const { return rel_.d; }
  int relation(int x, int y) const { return rel_.at(x, y); }
  const RelationIndexMatrix& relations() const { return rel_; }

 private:
  explicit AssociationScheme(RelationIndexMatrix rel) : rel_(std::move(rel)) {}
  RelationIndexMatrix rel_;
};

/// Intersection numbers p^h_{ij} and valencies k_i = p^0_{ii}.
struct SchemeParameters {
  int d = 0;
  Tensor3<std::int64_t> p;
  std::vector<std::int64_t> k;
};

struct VerifyOutcome {
  std::optional<AssociationScheme> scheme;
  std::optional<SchemeParameters> params;  // absent when d+1 > kMaxDenseClasses
  std::optional<SchemeViolation> violation;

  bool ok() const { return !violation.has_value(); }
};

/// Largest class count for which dense (d+1)^3 parameter tensors are built.
inline constexpr int kMaxDenseClasses = 128;

/// Check all scheme axioms. Well-formedness defects (shape, entries,
/// diagonal, symmetry, missing relation) are reported first; then the
/// constant-count axiom is checked over all ordered pairs (n <= 512) or a
/// seeded sample of pairs (larger n). On success the verified scheme and,
/// when d+1 <= kMaxDenseClasses, its parameters are returned.
VerifyOutcome verify_scheme(const RelationIndexMatrix& rel);

/// Like verify_scheme but throws SchemeError on any violation.
AssociationScheme make_scheme(RelationIndexMatrix rel);

/// Direct counting on one representative pair per relation.
SchemeParameters intersection_numbers(const AssociationScheme& s);

/// The 0/1 indicator matrix of relation i, row-major n*n.
std::vector<std::uint8_t> associate_matrix(const AssociationScheme& s, int i);

// ---------------------------------------------------------------------------
// scm-v1 file format: optional '#' comment lines, then "n d", then n rows of
// n whitespace-separated relation indices.

class ScmParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

RelationIndexMatrix read_scm(std::istream& in);
RelationIndexMatrix read_scm_string(const std::string& text);
RelationIndexMatrix read_scm_file(const std::string& path);

/// Canonical text form; a round trip through read_scm reproduces it exactly
/// (comments excluded).
std::string write_scm(const RelationIndexMatrix& rel,
                      const std::vector<std::string>& comments = {});
void write_scm_file(const std::string& path, const RelationIndexMatrix& rel,
                    const std::vector<std::string>& comments = {});

}  // namespace assoc
