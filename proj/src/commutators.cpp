#include "lh/commutators.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace lh {

namespace {

// S <- S - e * (P * S)
void left_peel(MagnusSeries& s, Int e, const MagnusSeries& p) {
  if (e == 0) return;
  const MonomialSpace& sp = s.space();
  std::vector<std::pair<int, Int>> ps;
  for (int i = 0; i < sp.size(); ++i) {
    if (p[i] != 0) ps.emplace_back(i, p[i]);
  }
  MagnusSeries prod(s.space_ptr());
  for (int j = 0; j < sp.size(); ++j) {
    if (s[j] == 0) continue;
    for (const auto& [i, c] : ps) {
      int m = sp.product(i, j);
      if (m >= 0) checked_fma(prod[m], c, s[j]);
    }
  }
  for (int m = 0; m < sp.size(); ++m) {
    if (prod[m] != 0) s[m] = checked_sub(s[m], checked_mul(e, prod[m]));
  }
}

void collect_tails(int rank, std::vector<int>& cur, std::uint32_t used, std::vector<std::vector<int>>& out) {
  out.push_back(cur);
  for (int k = cur[0] + 1; k <= rank; ++k) {
    if (used & (1u << k)) continue;
    cur.push_back(k);
    collect_tails(rank, cur, used | (1u << k), out);
    cur.pop_back();
  }
}

}  // namespace

std::string to_string(BasisOrder order) {
  return order == BasisOrder::WeightLex ? "weight-lex" : "weight-revlex";
}

BasisOrder parse_basis_order(const std::string& tag) {
  if (tag == "weight-lex") return BasisOrder::WeightLex;
  if (tag == "weight-revlex") return BasisOrder::WeightRevLex;
  throw InvalidInput("unknown basis order '" + tag + "' (expected weight-lex or weight-revlex)");
}

bool is_basic_sequence(const std::vector<int>& seq, int rank) {
  if (seq.empty() || static_cast<int>(seq.size()) > rank) return false;
  std::uint32_t used = 0;
  for (std::size_t k = 0; k < seq.size(); ++k) {
    int a = seq[k];
    if (a < 1 || a > rank || (used & (1u << a))) return false;
    if (k > 0 && a <= seq[0]) return false;
    used |= 1u << a;
  }
  return true;
}

CommutatorBasis::CommutatorBasis(int rank, BasisOrder order)
    : rank_(rank), order_(order), space_(MonomialSpace::of_rank(rank)) {
  std::vector<std::vector<int>> seqs;
  for (int first = 1; first <= rank; ++first) {
    std::vector<int> cur{first};
    collect_tails(rank, cur, 1u << first, seqs);
  }
  std::sort(seqs.begin(), seqs.end(), [order](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return order == BasisOrder::WeightLex ? a < b : b < a;
  });
  by_monomial_.assign(space_->size(), -1);
  weight_start_.assign(rank + 2, 0);
  for (const auto& s : seqs) {
    int k = static_cast<int>(elements_.size());
    elements_.push_back({s});
    int m = space_->index_of(s);
    monomial_.push_back(m);
    by_monomial_[m] = k;
  }
  for (int w = 1; w <= rank + 1; ++w) {
    weight_start_[w] = static_cast<int>(
        std::find_if(elements_.begin(), elements_.end(), [w](const auto& e) { return e.weight() >= w; }) -
        elements_.begin());
  }
  // P_[alpha, b] = P_alpha X_b - X_b P_alpha; the cross terms of the group
  // commutator all repeat an index.
  for (const auto& e : elements_) {
    MagnusSeries p(space_);
    p[space_->index_of(std::span<const int>(e.sequence.data(), 1))] = 1;
    for (std::size_t k = 1; k < e.sequence.size(); ++k) {
      MagnusSeries x(space_);
      x[space_->index_of(std::span<const int>(e.sequence.data() + k, 1))] = 1;
      p = series_subtract(series_multiply(p, x), series_multiply(x, p));
    }
    lie_.push_back(std::move(p));
  }
}

int CommutatorBasis::index_of(std::span<const int> seq) const {
  int m = space_->index_of(seq);
  return m < 0 ? -1 : by_monomial_[m];
}

std::pair<int, int> CommutatorBasis::weight_range(int weight) const {
  if (weight < 1 || weight > rank_) return {size(), size()};
  return {weight_start_[weight], weight_start_[weight + 1]};
}

BasisPtr enumerate_basic_commutators(int rank, BasisOrder order) {
  if (rank < 1 || rank > MonomialSpace::kMaxRank) {
    throw InvalidInput("rank must be in 1.." + std::to_string(MonomialSpace::kMaxRank));
  }
  static std::mutex mu;
  static std::map<std::pair<int, BasisOrder>, BasisPtr> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{rank, order}];
  if (!slot) slot = std::make_shared<const CommutatorBasis>(rank, order);
  return slot;
}

Int basis_size_formula(int rank) {
  Int total = 0;
  for (int w = 1; w <= rank; ++w) total += basis_weight_count_formula(rank, w);
  return total;
}

Int basis_weight_count_formula(int rank, int weight) {
  // sum over k = weight-1 .. rank-1 of k!/(k-weight+1)!
  Int total = 0;
  for (int k = weight - 1; k < rank; ++k) {
    Int falling = 1;
    for (int f = k; f > k - weight + 1; --f) falling *= f;
    total += falling;
  }
  return total;
}

Int ExponentVector::at(std::span<const int> seq) const {
  int k = basis->index_of(seq);
  if (k < 0) throw InvalidInput("not a basis commutator");
  return exponents[k];
}

bool ExponentVector::operator==(const ExponentVector& other) const {
  return basis->rank() == other.basis->rank() && basis->order() == other.basis->order() &&
         exponents == other.exponents;
}

ExponentVector normal_form_of_series(const MagnusSeries& s, const BasisPtr& basis) {
  if (s.rank() != basis->rank()) {
    throw InvalidInput("rank mismatch: word rank " + std::to_string(s.rank()) + ", basis rank " +
                       std::to_string(basis->rank()));
  }
  if (s[0] != 1) throw InvalidInput("series is not the expansion of a group element");
  ExponentVector out{basis, std::vector<Int>(basis->size(), 0)};
  MagnusSeries r = s;
  for (int t = 1; t <= basis->rank(); ++t) {
    auto [lo, hi] = basis->weight_range(t);
    for (int k = lo; k < hi; ++k) out.exponents[k] = r[basis->monomial_of(k)];
    // r <- (prod_k (1 + e_k P_k))^-1 r, innermost factor first
    for (int k = lo; k < hi; ++k) left_peel(r, out.exponents[k], basis->lie_polynomial(k));
  }
  for (int m = 1; m < r.space().size(); ++m) {
    if (r[m] != 0) throw std::logic_error("weight peeling left a nonzero residual");
  }
  return out;
}

std::optional<ExponentVector> linear_read_off(const MagnusSeries& s, const BasisPtr& basis) {
  if (s.rank() != basis->rank()) throw InvalidInput("rank mismatch");
  if (s[0] != 1) return std::nullopt;
  ExponentVector out{basis, std::vector<Int>(basis->size(), 0)};
  MagnusSeries rest = s;
  rest[0] = 0;
  for (int k = 0; k < basis->size(); ++k) {
    Int e = s[basis->monomial_of(k)];
    out.exponents[k] = e;
    if (e == 0) continue;
    const auto& p = basis->lie_polynomial(k);
    for (int m = 0; m < p.space().size(); ++m) {
      if (p[m] != 0) rest[m] = checked_sub(rest[m], checked_mul(e, p[m]));
    }
  }
  if (!rest.is_zero()) return std::nullopt;
  return out;
}

ExponentVector rfg_normal_form(const ReducedWord& w, const BasisPtr& basis) {
  if (w.rank() != basis->rank()) {
    throw InvalidInput("rank mismatch: word rank " + std::to_string(w.rank()) + ", basis rank " +
                       std::to_string(basis->rank()));
  }
  return normal_form_of_series(magnus_expand(w), basis);
}

bool rfg_equal(const ReducedWord& u, const ReducedWord& v) {
  if (u.rank() != v.rank()) throw InvalidInput("rank mismatch");
  BasisPtr basis = enumerate_basic_commutators(u.rank());
  return rfg_normal_form(u, basis) == rfg_normal_form(v, basis);
}

ReducedWord normal_form_word(const ExponentVector& e) {
  ReducedWord w(e.basis->rank());
  for (int k = 0; k < e.basis->size(); ++k) {
    if (e.exponents[k] == 0) continue;
    w = multiply(w, power(commutator_word(e.basis->rank(), (*e.basis)[k].sequence), e.exponents[k]));
  }
  return w;
}

}  // namespace lh
