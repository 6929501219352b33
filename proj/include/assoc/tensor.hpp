#pragma once

#include <cstddef>
#include <vector>

namespace assoc {

/// Cube-shaped tensor indexed (h, i, j), each index in [0, dim).
template <typename T>
class Tensor3 {
 public:
  Tensor3() = default;
  explicit Tensor3(int dim, const T& fill = T{})
      : dim_(dim),
        a_(static_cast<size_t>(dim) * dim * dim, fill) {}

  int dim() const { return dim_; }

  T& at(int h, int i, int j) {
    return a_[(static_cast<size_t>(h) * dim_ + i) * dim_ + j];
  }
  const T& at(int h, int i, int j) const {
    return a_[(static_cast<size_t>(h) * dim_ + i) * dim_ + j];
  }

  bool operator==(const Tensor3& o) const {
    return dim_ == o.dim_ && a_ == o.a_;
  }

 private:
  int dim_ = 0;
  std::vector<T> a_;
};

}  // namespace assoc
