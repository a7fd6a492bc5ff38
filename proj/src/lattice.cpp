#include "lh/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <utility>

namespace lh {

namespace {

Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

IntMatrix matrix_from_columns(int rows, const std::vector<std::vector<Int>>& cols) {
  IntMatrix m(rows, static_cast<int>(cols.size()));
  for (std::size_t c = 0; c < cols.size(); ++c) m.set_column(static_cast<int>(c), cols[c]);
  return m;
}

ColumnEchelon column_echelon(const IntMatrix& a) {
  ColumnEchelon e{a, IntMatrix::identity(a.cols()), 0, {}};
  IntMatrix& h = e.h;
  IntMatrix& u = e.u;
  const int rows = a.rows(), cols = a.cols();
  auto add_col = [&](int dst, int src, Int q) {  // col dst -= q * col src
    if (q == 0) return;
    for (int r = 0; r < rows; ++r) {
      if (h(r, src) != 0) h(r, dst) = checked_sub(h(r, dst), checked_mul(q, h(r, src)));
    }
    for (int r = 0; r < cols; ++r) {
      if (u(r, src) != 0) u(r, dst) = checked_sub(u(r, dst), checked_mul(q, u(r, src)));
    }
  };
  auto swap_cols = [&](int x, int y) {
    for (int r = 0; r < rows; ++r) std::swap(h(r, x), h(r, y));
    for (int r = 0; r < cols; ++r) std::swap(u(r, x), u(r, y));
  };
  auto negate_col = [&](int x) {
    for (int r = 0; r < rows; ++r) h(r, x) = -h(r, x);
    for (int r = 0; r < cols; ++r) u(r, x) = -u(r, x);
  };
  int col = 0;
  for (int row = 0; row < rows && col < cols; ++row) {
    while (true) {
      int best = -1;
      for (int c = col; c < cols; ++c) {
        if (h(row, c) != 0 && (best < 0 || std::llabs(h(row, c)) < std::llabs(h(row, best)))) best = c;
      }
      if (best < 0) break;
      if (best != col) swap_cols(best, col);
      bool done = true;
      for (int c = col + 1; c < cols; ++c) {
        if (h(row, c) == 0) continue;
        add_col(c, col, h(row, c) / h(row, col));
        if (h(row, c) != 0) done = false;
      }
      if (done) break;
    }
    if (h(row, col) == 0) continue;
    if (h(row, col) < 0) negate_col(col);
    // reduce earlier pivot columns' entries in this row into [0, pivot)
    for (int c = 0; c < col; ++c) add_col(c, col, floor_div(h(row, c), h(row, col)));
    e.pivot_rows.push_back(row);
    ++col;
  }
  e.rank = col;
  return e;
}

namespace {

long double dot(const std::vector<Int>& a, const std::vector<Int>& b) {
  long double s = 0;
  for (std::size_t k = 0; k < a.size(); ++k) s += static_cast<long double>(a[k]) * static_cast<long double>(b[k]);
  return s;
}

// v -= q * b if that makes v strictly shorter.
bool reduce_against(std::vector<Int>& v, const std::vector<Int>& b) {
  const long double bb = dot(b, b);
  if (bb == 0) return false;
  const long double q = std::round(dot(v, b) / bb);
  if (q == 0 || std::fabs(q) > 9.0e18L) return false;
  std::vector<Int> w = v;
  const Int iq = static_cast<Int>(q);
  for (std::size_t k = 0; k < w.size(); ++k) w[k] = checked_sub(w[k], checked_mul(iq, b[k]));
  if (!(dot(w, w) < dot(v, v))) return false;
  v = std::move(w);
  return true;
}

}  // namespace

void reduce_basis(std::vector<std::vector<Int>>& basis) {
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      for (std::size_t j = 0; j < basis.size(); ++j) {
        if (i != j) changed |= reduce_against(basis[i], basis[j]);
      }
    }
  }
  std::stable_sort(basis.begin(), basis.end(),
                   [](const auto& a, const auto& b) { return dot(a, a) < dot(b, b); });
}

std::vector<Int> shorten(std::vector<Int> v, const std::vector<std::vector<Int>>& basis) {
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& b : basis) changed |= reduce_against(v, b);
  }
  return v;
}

std::optional<std::vector<Int>> solve_integer(const IntMatrix& a, const std::vector<Int>& b) {
  if (static_cast<int>(b.size()) != a.rows()) throw InvalidInput("right-hand side has wrong length");
  ColumnEchelon e = column_echelon(a);
  std::vector<Int> residual = b;
  std::vector<Int> y(a.cols(), 0);
  for (int k = 0; k < e.rank; ++k) {
    const int p = e.pivot_rows[k];
    if (residual[p] % e.h(p, k) != 0) return std::nullopt;
    y[k] = residual[p] / e.h(p, k);
    for (int r = 0; r < a.rows(); ++r) {
      if (e.h(r, k) != 0) residual[r] = checked_sub(residual[r], checked_mul(y[k], e.h(r, k)));
    }
  }
  for (Int v : residual) {
    if (v != 0) return std::nullopt;
  }
  std::vector<std::vector<Int>> kernel;
  for (int c = e.rank; c < a.cols(); ++c) kernel.push_back(e.u.column(c));
  reduce_basis(kernel);
  return shorten(e.u * y, kernel);
}

std::vector<std::vector<Int>> integer_kernel(const IntMatrix& a) {
  ColumnEchelon e = column_echelon(a);
  std::vector<std::vector<Int>> out;
  for (int c = e.rank; c < a.cols(); ++c) out.push_back(e.u.column(c));
  reduce_basis(out);
  return out;
}

std::vector<Int> reduce_modulo_lattice(const std::vector<Int>& v, const IntMatrix& g) {
  if (static_cast<int>(v.size()) != g.rows()) throw InvalidInput("vector has wrong length");
  ColumnEchelon e = column_echelon(g);
  std::vector<Int> out = v;
  for (int k = 0; k < e.rank; ++k) {
    const int p = e.pivot_rows[k];
    Int q = floor_div(out[p], e.h(p, k));
    if (q == 0) continue;
    for (int r = 0; r < g.rows(); ++r) {
      if (e.h(r, k) != 0) out[r] = checked_sub(out[r], checked_mul(q, e.h(r, k)));
    }
  }
  return out;
}

}  // namespace lh
