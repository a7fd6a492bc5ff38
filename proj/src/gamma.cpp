#include "lh/gamma.hpp"

#include <numeric>
#include <stdexcept>

namespace lh {

namespace {

void check_basis(const BraidWord& b, const BasisPtr& basis) {
  if (b.strands() != basis->rank()) {
    throw InvalidInput("braid has " + std::to_string(b.strands()) + " strands but basis has rank " +
                       std::to_string(basis->rank()));
  }
}

GammaMatrix gamma_by_series(const BraidWord& b, const BasisPtr& basis) {
  auto action = SeriesAction::of_rank(basis->rank());
  std::vector<std::vector<Int>> cols;
  cols.reserve(basis->size());
  for (int k = 0; k < basis->size(); ++k) {
    std::vector<Int> c = basis->lie_polynomial(k).coefficients();
    c[0] = 1;
    cols.push_back(std::move(c));
  }
  action->apply_in_place(b, cols);
  GammaMatrix g{basis, IntMatrix(basis->size(), basis->size())};
  for (int k = 0; k < basis->size(); ++k) {
    MagnusSeries s(basis->space());
    s.coefficients() = std::move(cols[k]);
    auto e = linear_read_off(s, basis);
    g.matrix.set_column(k, e ? e->exponents : normal_form_of_series(s, basis).exponents);
  }
  return g;
}

GammaMatrix gamma_by_words(const BraidWord& b, const BasisPtr& basis) {
  GammaMatrix g{basis, IntMatrix(basis->size(), basis->size())};
  for (int k = 0; k < basis->size(); ++k) {
    ReducedWord w = artin_act(b, commutator_word(basis->rank(), (*basis)[k].sequence));
    g.matrix.set_column(k, rfg_normal_form(w, basis).exponents);
  }
  return g;
}

GammaMatrix gamma_by_closed_form(const BraidWord& b, const BasisPtr& basis) {
  const int n = basis->rank();
  std::vector<IntMatrix> pos(n), neg(n);
  IntMatrix m = IntMatrix::identity(basis->size());
  for (const auto& l : b.letters()) {
    if (pos[l.index].rows() == 0) {
      pos[l.index] = closed_form_generator_matrix(l.index, basis);
      neg[l.index] = inverse_unimodular(pos[l.index]);
    }
    m = m * (l.sign > 0 ? pos[l.index] : neg[l.index]);
  }
  return GammaMatrix{basis, std::move(m)};
}

std::vector<int> concat(std::initializer_list<std::vector<int>> parts) {
  std::vector<int> out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

std::vector<int> slice(const std::vector<int>& v, int from, int to) {
  return std::vector<int>(v.begin() + from, v.begin() + to);
}

int find_index(const std::vector<int>& seq, int value) {
  for (std::size_t k = 0; k < seq.size(); ++k) {
    if (seq[k] == value) return static_cast<int>(k);
  }
  return -1;
}

Int permutation_order(const Permutation& p) {
  std::vector<bool> seen(p.size() + 1, false);
  Int order = 1;
  for (int k = 1; k <= p.size(); ++k) {
    if (seen[k]) continue;
    Int len = 0;
    for (int x = k; !seen[x]; x = p(x)) {
      seen[x] = true;
      ++len;
    }
    order = std::lcm(order, len);
  }
  return order;
}

}  // namespace

bool GammaMatrix::operator==(const GammaMatrix& other) const {
  return basis->rank() == other.basis->rank() && basis->order() == other.basis->order() &&
         matrix == other.matrix;
}

std::map<std::vector<int>, Int> GammaMatrix::image(int column) const {
  std::map<std::vector<int>, Int> out;
  for (int r = 0; r < matrix.rows(); ++r) {
    if (matrix(r, column) != 0) out[(*basis)[r].sequence] = matrix(r, column);
  }
  return out;
}

GammaMatrix gamma_matrix(const BraidWord& b, const BasisPtr& basis, GammaRoute route) {
  check_basis(b, basis);
  switch (route) {
    case GammaRoute::Series:
      return gamma_by_series(b, basis);
    case GammaRoute::Words:
      return gamma_by_words(b, basis);
    case GammaRoute::ClosedForm:
      return gamma_by_closed_form(b, basis);
  }
  throw std::logic_error("unknown gamma route");
}

GammaMatrix gamma_matrix(const BraidWord& b) {
  return gamma_matrix(b, enumerate_basic_commutators(b.strands()));
}

char closed_form_case(int i, const std::vector<int>& seq) {
  const int p = find_index(seq, i);
  const int q = find_index(seq, i + 1);
  if (p < 0 && q < 0) return 'a';
  if (q < 0) return 'b';
  if (p < 0) return q == 0 ? 'c' : 'd';
  if (p < q) return p == 0 ? 'g' : 'e';
  if (q > 0) return 'f';
  throw std::logic_error("no closed-form case applies to " + monomial_key(seq));
}

CommutatorCombination gamma_generator_closed_form(int i, const BasicCommutator& alpha, int n) {
  if (i < 1 || i > n - 1) throw InvalidInput("generator index " + std::to_string(i) + " out of range");
  if (!is_basic_sequence(alpha.sequence, n)) {
    throw InvalidInput("(" + monomial_key(alpha.sequence) + ") is not a basic commutator of rank " +
                       std::to_string(n));
  }
  const auto& s = alpha.sequence;
  const int len = static_cast<int>(s.size());
  const int p = find_index(s, i);
  const int q = find_index(s, i + 1);
  const std::vector<int> lo{i}, hi{i + 1};
  CommutatorCombination out;
  auto add = [&](const std::vector<int>& seq, Int c) {
    if (!is_basic_sequence(seq, n)) throw std::logic_error("closed form produced (" + monomial_key(seq) + ")");
    out[seq] += c;
    if (out[seq] == 0) out.erase(seq);
  };
  switch (closed_form_case(i, s)) {
    case 'a':
      add(s, 1);
      break;
    case 'b': {
      auto t = s;
      t[p] = i + 1;
      add(t, 1);
      break;
    }
    case 'c': {
      auto k = slice(s, 1, len);
      add(concat({lo, k}), 1);
      add(concat({lo, hi, k}), 1);
      break;
    }
    case 'd': {
      auto pre = slice(s, 0, q), k = slice(s, q + 1, len);
      add(concat({pre, lo, k}), 1);
      add(concat({pre, lo, hi, k}), 1);
      add(concat({pre, hi, lo, k}), -1);
      break;
    }
    case 'e':
    case 'f': {
      auto t = s;
      std::swap(t[p], t[q]);
      add(t, 1);
      break;
    }
    case 'g': {
      auto j = slice(s, 1, q), k = slice(s, q + 1, len);
      const int m = static_cast<int>(j.size());
      for (std::uint32_t subset = 0; subset < (1u << m); ++subset) {
        std::vector<int> chosen, rest;
        for (int t = 0; t < m; ++t) ((subset >> t) & 1u ? chosen : rest).push_back(j[t]);
        std::vector<int> reversed(chosen.rbegin(), chosen.rend());
        add(concat({lo, reversed, hi, rest, k}), chosen.size() % 2 == 0 ? -1 : 1);
      }
      break;
    }
  }
  return out;
}

IntMatrix closed_form_generator_matrix(int i, const BasisPtr& basis) {
  IntMatrix m(basis->size(), basis->size());
  for (int c = 0; c < basis->size(); ++c) {
    for (const auto& [seq, coeff] : gamma_generator_closed_form(i, (*basis)[c], basis->rank())) {
      m(basis->index_of(seq), c) = coeff;
    }
  }
  return m;
}

bool braid_equal_lh(const BraidWord& a, const BraidWord& b) {
  if (a.strands() != b.strands()) {
    throw InvalidInput("strand count mismatch: " + std::to_string(a.strands()) + " vs " +
                       std::to_string(b.strands()));
  }
  return gamma_matrix(a) == gamma_matrix(b);
}

StructureReport structure_report(const GammaMatrix& g, const BraidWord& b) {
  StructureReport rep;
  const auto& basis = *g.basis;
  const auto& m = g.matrix;
  const Permutation inv = permutation_of(b).inverse();
  rep.pure = inv.is_identity();

  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) {
      if (m(r, c) != 0 && basis[r].weight() < basis[c].weight()) {
        rep.block_lower_triangular = false;
      }
    }
  }
  if (!rep.block_lower_triangular) rep.violations.push_back("nonzero entry above the diagonal blocks");

  auto [lo1, hi1] = basis.weight_range(1);
  for (int c = lo1; c < hi1; ++c) {
    int target = basis.index_of(std::vector<int>{inv(basis[c].sequence[0])});
    for (int r = lo1; r < hi1; ++r) {
      if (m(r, c) != (r == target ? 1 : 0)) rep.permutation_block = false;
    }
  }
  if (!rep.permutation_block) rep.violations.push_back("weight-1 block is not the permutation action");

  auto [lo2, hi2] = basis.weight_range(2);
  for (int c = lo2; c < hi2; ++c) {
    int k = inv(basis[c].sequence[0]), j = inv(basis[c].sequence[1]);
    int target = k < j ? basis.index_of(std::vector<int>{k, j}) : basis.index_of(std::vector<int>{j, k});
    Int sign = k < j ? 1 : -1;
    for (int r = lo2; r < hi2; ++r) {
      if (m(r, c) != (r == target ? sign : 0)) rep.pair_block = false;
    }
  }
  if (!rep.pair_block) rep.violations.push_back("weight-2 block is not the signed pair action");

  const Int order = permutation_order(permutation_of(b));
  for (int t = 1; t <= basis.rank(); ++t) {
    auto [lo, hi] = basis.weight_range(t);
    IntMatrix block = submatrix(m, lo, hi, lo, hi);
    if (rep.pure && !block.is_identity()) rep.diagonal_identity = false;
    IntMatrix p = IntMatrix::identity(hi - lo);
    for (Int e = 0; e < order; ++e) p = p * block;
    if (!p.is_identity()) rep.diagonal_finite_order = false;
  }
  if (!rep.diagonal_identity) rep.violations.push_back("diagonal block of a pure braid is not the identity");
  if (!rep.diagonal_finite_order) {
    rep.violations.push_back("diagonal block power by the permutation order is not the identity");
  }
  return rep;
}

}  // namespace lh
