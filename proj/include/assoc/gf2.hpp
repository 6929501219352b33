#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "assoc/duality.hpp"

namespace assoc {

/// Encoding of Z_2^m: the word x_1 x_2 ... x_m maps to the integer with
/// x_1 as the most significant of m bits, so integer order = lexicographic
/// word order and XOR = componentwise addition.
inline int gf2_bit(int code, int coordinate, int m) {
  return (code >> (m - coordinate)) & 1;  // coordinate is 1-based
}

/// <x,y> = sum x_i y_i over GF(2) (the standard symmetric bilinear form).
inline int bilinear_form(int x, int y) {
  return __builtin_popcount(static_cast<unsigned>(x & y)) & 1;
}

/// m x m matrix over GF(2); column j holds the image of the j-th basis
/// vector. Rows are stored as bitmasks in the encoding above.
class Gf2Matrix {
 public:
  explicit Gf2Matrix(int m);
  static Gf2Matrix identity(int m);

  /// Rows as comma-separated bit strings, e.g. "10,11".
  static Gf2Matrix parse(std::string_view text);

  int dim() const { return m_; }
  int get(int i, int j) const {  // 0-based
    return (rows_[i] >> (m_ - 1 - j)) & 1;
  }
  void set(int i, int j, int v);
  std::uint32_t row_bits(int i) const { return rows_[i]; }

  bool invertible() const;
  bool symmetric() const;
  Gf2Matrix transposed() const;

  /// The linear map on encoded elements, x -> S x.
  int apply(int x) const;

  std::string str() const;

  bool operator==(const Gf2Matrix& o) const {
    return m_ == o.m_ && rows_ == o.rows_;
  }
  bool operator<(const Gf2Matrix& o) const { return rows_ < o.rows_; }

 private:
  int m_;
  std::vector<std::uint32_t> rows_;
};

inline constexpr int kMaxEnumerationDim = 4;

/// All invertible m x m matrices over GF(2), lexicographic by row bits.
/// Full enumeration is limited to m <= kMaxEnumerationDim; use
/// sample_linear_bijections beyond that.
std::vector<Gf2Matrix> enumerate_linear_bijections(int m);

/// `count` random invertible matrices (duplicates possible), seeded.
std::vector<Gf2Matrix> sample_linear_bijections(int m, int count,
                                                std::uint64_t seed);

/// The permutation x -> S x of the encoded group elements. Fixes 0 by
/// linearity. Throws std::invalid_argument when S is singular.
OrderingPermutation sigma_from_matrix(const Gf2Matrix& S);

}  // namespace assoc
