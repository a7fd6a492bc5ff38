#include "lh/int_matrix.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <utility>

namespace lh {

using boost::multiprecision::cpp_int;

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int k = 0; k < n; ++k) m(k, k) = 1;
  return m;
}

std::vector<Int> IntMatrix::column(int c) const {
  std::vector<Int> v(rows_);
  for (int r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

std::vector<Int> IntMatrix::row(int r) const {
  return std::vector<Int>(data_.begin() + static_cast<std::ptrdiff_t>(r) * cols_,
                          data_.begin() + static_cast<std::ptrdiff_t>(r + 1) * cols_);
}

void IntMatrix::set_column(int c, const std::vector<Int>& v) {
  for (int r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

bool IntMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) {
      if ((*this)(r, c) != (r == c ? 1 : 0)) return false;
    }
  }
  return true;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw InvalidInput("matrix dimension mismatch");
  IntMatrix out(a.rows(), b.cols());
  for (int r = 0; r < a.rows(); ++r) {
    for (int k = 0; k < a.cols(); ++k) {
      const Int x = a(r, k);
      if (x == 0) continue;
      for (int c = 0; c < b.cols(); ++c) {
        if (b(k, c) != 0) checked_fma(out(r, c), x, b(k, c));
      }
    }
  }
  return out;
}

std::vector<Int> operator*(const IntMatrix& a, const std::vector<Int>& v) {
  if (a.cols() != static_cast<int>(v.size())) throw InvalidInput("matrix/vector dimension mismatch");
  std::vector<Int> out(a.rows(), 0);
  for (int r = 0; r < a.rows(); ++r) {
    for (int c = 0; c < a.cols(); ++c) {
      if (a(r, c) != 0 && v[c] != 0) checked_fma(out[r], a(r, c), v[c]);
    }
  }
  return out;
}

IntMatrix transpose(const IntMatrix& a) {
  IntMatrix t(a.cols(), a.rows());
  for (int r = 0; r < a.rows(); ++r) {
    for (int c = 0; c < a.cols(); ++c) t(c, r) = a(r, c);
  }
  return t;
}

IntMatrix submatrix(const IntMatrix& a, int r0, int r1, int c0, int c1) {
  IntMatrix s(r1 - r0, c1 - c0);
  for (int r = r0; r < r1; ++r) {
    for (int c = c0; c < c1; ++c) s(r - r0, c - c0) = a(r, c);
  }
  return s;
}

IntMatrix inverse_unimodular(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw InvalidInput("inverse of a non-square matrix");
  const int n = a.rows();
  IntMatrix m = a;
  IntMatrix inv = IntMatrix::identity(n);
  auto add_row = [&](int dst, int src, Int q) {  // row dst -= q * row src
    for (int c = 0; c < n; ++c) {
      if (m(src, c) != 0) m(dst, c) = checked_sub(m(dst, c), checked_mul(q, m(src, c)));
      if (inv(src, c) != 0) inv(dst, c) = checked_sub(inv(dst, c), checked_mul(q, inv(src, c)));
    }
  };
  auto swap_rows = [&](int x, int y) {
    for (int c = 0; c < n; ++c) {
      std::swap(m(x, c), m(y, c));
      std::swap(inv(x, c), inv(y, c));
    }
  };
  for (int col = 0; col < n; ++col) {
    // Euclid on the column until only the pivot row is nonzero below the diagonal.
    while (true) {
      int best = -1;
      for (int r = col; r < n; ++r) {
        if (m(r, col) != 0 && (best < 0 || std::abs(m(r, col)) < std::abs(m(best, col)))) best = r;
      }
      if (best < 0) throw InvalidInput("matrix is singular");
      if (best != col) swap_rows(best, col);
      bool done = true;
      for (int r = col + 1; r < n; ++r) {
        if (m(r, col) == 0) continue;
        add_row(r, col, m(r, col) / m(col, col));
        if (m(r, col) != 0) done = false;
      }
      if (done) break;
    }
    if (m(col, col) != 1 && m(col, col) != -1) throw InvalidInput("matrix is not invertible over the integers");
    if (m(col, col) == -1) {
      for (int c = 0; c < n; ++c) {
        m(col, c) = -m(col, c);
        inv(col, c) = -inv(col, c);
      }
    }
  }
  for (int col = n - 1; col >= 0; --col) {
    for (int r = 0; r < col; ++r) {
      if (m(r, col) != 0) add_row(r, col, m(r, col));
    }
  }
  return inv;
}

Int determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw InvalidInput("determinant of a non-square matrix");
  const int n = a.rows();
  if (n == 0) return 1;
  std::vector<std::vector<cpp_int>> m(n, std::vector<cpp_int>(n));
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) m[r][c] = a(r, c);
  }
  int sign = 1;
  cpp_int prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k] == 0) {
      int swap_with = -1;
      for (int r = k + 1; r < n; ++r) {
        if (m[r][k] != 0) {
          swap_with = r;
          break;
        }
      }
      if (swap_with < 0) return 0;
      std::swap(m[k], m[swap_with]);
      sign = -sign;
    }
    for (int r = k + 1; r < n; ++r) {
      for (int c = k + 1; c < n; ++c) m[r][c] = (m[r][c] * m[k][k] - m[r][k] * m[k][c]) / prev;
    }
    prev = m[k][k];
  }
  cpp_int det = m[n - 1][n - 1] * sign;
  if (det > std::numeric_limits<Int>::max() || det < std::numeric_limits<Int>::min()) throw OverflowError();
  return static_cast<Int>(det);
}

}  // namespace lh
