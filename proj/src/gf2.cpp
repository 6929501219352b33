#include "assoc/gf2.hpp"

#include <random>
#include <sstream>
#include <stdexcept>

namespace assoc {

Gf2Matrix::Gf2Matrix(int m) : m_(m), rows_(m, 0) {
  if (m < 1 || m > 16) {
    throw std::invalid_argument("GF(2) matrix dimension out of range [1,16]");
  }
}

Gf2Matrix Gf2Matrix::identity(int m) {
  Gf2Matrix s(m);
  for (int i = 0; i < m; ++i) s.set(i, i, 1);
  return s;
}

Gf2Matrix Gf2Matrix::parse(std::string_view text) {
  std::vector<std::string> parts;
  std::string token;
  std::istringstream in{std::string(text)};
  while (std::getline(in, token, ',')) parts.push_back(token);
  int m = static_cast<int>(parts.size());
  Gf2Matrix s(m);
  for (int i = 0; i < m; ++i) {
    if (static_cast<int>(parts[i].size()) != m) {
      throw std::invalid_argument("row \"" + parts[i] + "\" must have " +
                                  std::to_string(m) + " bits");
    }
    for (int j = 0; j < m; ++j) {
      char ch = parts[i][j];
      if (ch != '0' && ch != '1') {
        throw std::invalid_argument("bad bit '" + std::string(1, ch) +
                                    "' in row \"" + parts[i] + "\"");
      }
      s.set(i, j, ch - '0');
    }
  }
  return s;
}

void Gf2Matrix::set(int i, int j, int v) {
  std::uint32_t mask = 1u << (m_ - 1 - j);
  if (v) {
    rows_[i] |= mask;
  } else {
    rows_[i] &= ~mask;
  }
}

bool Gf2Matrix::invertible() const {
  std::vector<std::uint32_t> rows = rows_;
  int rank = 0;
  for (int col = m_ - 1; col >= 0; --col) {
    int pivot = -1;
    for (int i = rank; i < m_; ++i) {
      if ((rows[i] >> col) & 1) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) return false;
    std::swap(rows[rank], rows[pivot]);
    for (int i = 0; i < m_; ++i) {
      if (i != rank && ((rows[i] >> col) & 1)) rows[i] ^= rows[rank];
    }
    ++rank;
  }
  return true;
}

bool Gf2Matrix::symmetric() const {
  for (int i = 0; i < m_; ++i) {
    for (int j = i + 1; j < m_; ++j) {
      if (get(i, j) != get(j, i)) return false;
    }
  }
  return true;
}

Gf2Matrix Gf2Matrix::transposed() const {
  Gf2Matrix t(m_);
  for (int i = 0; i < m_; ++i) {
    for (int j = 0; j < m_; ++j) t.set(j, i, get(i, j));
  }
  return t;
}

int Gf2Matrix::apply(int x) const {
  int y = 0;
  for (int i = 0; i < m_; ++i) {
    if (__builtin_popcount(rows_[i] & static_cast<std::uint32_t>(x)) & 1) {
      y |= 1 << (m_ - 1 - i);
    }
  }
  return y;
}

std::string Gf2Matrix::str() const {
  std::string out;
  for (int i = 0; i < m_; ++i) {
    if (i) out += ',';
    for (int j = 0; j < m_; ++j) out += static_cast<char>('0' + get(i, j));
  }
  return out;
}

std::vector<Gf2Matrix> enumerate_linear_bijections(int m) {
  if (m < 1 || m > kMaxEnumerationDim) {
    throw std::invalid_argument(
        "full GL(m,2) enumeration is limited to m <= " +
        std::to_string(kMaxEnumerationDim) +
        "; use sample_linear_bijections for larger m");
  }
  std::vector<Gf2Matrix> out;
  std::uint64_t total = 1ull << (m * m);
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    Gf2Matrix s(m);
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) {
        s.set(i, j, (bits >> (static_cast<std::uint64_t>(i) * m + j)) & 1);
      }
    }
    if (s.invertible()) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Gf2Matrix> sample_linear_bijections(int m, int count,
                                                std::uint64_t seed) {
  if (m < 1 || m > 16) {
    throw std::invalid_argument("GF(2) matrix dimension out of range [1,16]");
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> bits(0, (1u << m) - 1);
  std::vector<Gf2Matrix> out;
  out.reserve(count);
  while (static_cast<int>(out.size()) < count) {
    Gf2Matrix s(m);
    for (int i = 0; i < m; ++i) {
      std::uint32_t row = bits(rng);
      for (int j = 0; j < m; ++j) s.set(i, j, (row >> j) & 1);
    }
    if (s.invertible()) out.push_back(s);
  }
  return out;
}

OrderingPermutation sigma_from_matrix(const Gf2Matrix& S) {
  if (!S.invertible()) {
    throw std::invalid_argument("matrix " + S.str() +
                                " is singular over GF(2)");
  }
  int n = 1 << S.dim();
  OrderingPermutation sigma;
  sigma.sigma.resize(n);
  for (int x = 0; x < n; ++x) sigma.sigma[x] = S.apply(x);
  return sigma;
}

}  // namespace assoc
