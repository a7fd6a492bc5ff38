#pragma once

#include <optional>
#include <vector>

#include "lh/int_matrix.hpp"

namespace lh {

// A * U = H with U unimodular and H in column echelon form: the first `rank`
// columns have strictly increasing pivot rows with positive pivots, the rest are zero.
struct ColumnEchelon {
  IntMatrix h;
  IntMatrix u;
  int rank = 0;
  std::vector<int> pivot_rows;
};

ColumnEchelon column_echelon(const IntMatrix& a);

// Some integer x with A x = b, if one exists, shortened against the kernel.
std::optional<std::vector<Int>> solve_integer(const IntMatrix& a, const std::vector<Int>& b);

// A basis of the integer kernel {x : A x = 0}, pairwise size-reduced.
std::vector<std::vector<Int>> integer_kernel(const IntMatrix& a);

// Pairwise size reduction: repeatedly subtracts integer multiples of one
// vector from another while that shortens it. Spans the same lattice.
void reduce_basis(std::vector<std::vector<Int>>& basis);
// v reduced the same way against a fixed set of lattice vectors.
std::vector<Int> shorten(std::vector<Int> v, const std::vector<std::vector<Int>>& basis);

// Canonical representative of v modulo the lattice spanned by the columns of g:
// two vectors get the same representative iff their difference lies in the lattice.
std::vector<Int> reduce_modulo_lattice(const std::vector<Int>& v, const IntMatrix& g);

IntMatrix matrix_from_columns(int rows, const std::vector<std::vector<Int>>& cols);

}  // namespace lh
