#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace fiatcell {

/// Dense row-major integer matrix. Only what the representation checks need.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntMatrix operator*(const IntMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("matrix dimension mismatch");
    IntMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        std::int64_t v = (*this)(i, k);
        if (v == 0) continue;
        for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += v * rhs(k, j);
      }
    return out;
  }

  /// this += scale * rhs
  void add(const IntMatrix& rhs, std::int64_t scale = 1) {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("matrix dimension mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += scale * rhs.data_[i];
  }

  bool is_zero() const {
    for (auto v : data_)
      if (v != 0) return false;
    return true;
  }

  bool operator==(const IntMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

}  // namespace fiatcell
