#pragma once

#include <string>
#include <vector>

#include "lh/integer.hpp"

namespace lh {

// Dense row-major integer matrix with overflow-checked arithmetic.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, 0) {}

  static IntMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Int& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  Int operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  std::vector<Int> column(int c) const;
  std::vector<Int> row(int r) const;
  void set_column(int c, const std::vector<Int>& v);
  bool is_identity() const;
  bool operator==(const IntMatrix&) const = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Int> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
std::vector<Int> operator*(const IntMatrix& a, const std::vector<Int>& v);
IntMatrix transpose(const IntMatrix& a);
IntMatrix submatrix(const IntMatrix& a, int r0, int r1, int c0, int c1);
// Exact inverse of a matrix with determinant +-1; throws InvalidInput otherwise.
IntMatrix inverse_unimodular(const IntMatrix& a);
// Exact determinant by fraction-free elimination in arbitrary precision.
Int determinant(const IntMatrix& a);

}  // namespace lh
