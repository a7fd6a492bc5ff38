#include "lh/magnus.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace lh {

namespace {

void check_rank(int rank) {
  if (rank < 1 || rank > MonomialSpace::kMaxRank) {
    throw InvalidInput("rank must be in 1.." + std::to_string(MonomialSpace::kMaxRank) + ", got " +
                       std::to_string(rank));
  }
}

void distinct_sequences(int rank, int length, std::vector<int>& cur, std::uint32_t used,
                        std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == length) {
    out.push_back(cur);
    return;
  }
  for (int k = 1; k <= rank; ++k) {
    if (used & (1u << k)) continue;
    cur.push_back(k);
    distinct_sequences(rank, length, cur, used | (1u << k), out);
    cur.pop_back();
  }
}

void check_same_space(const MagnusSeries& a, const MagnusSeries& b) {
  if (a.rank() != b.rank()) {
    throw InvalidInput("rank mismatch: " + std::to_string(a.rank()) + " vs " + std::to_string(b.rank()));
  }
}

}  // namespace

MonomialSpace::MonomialSpace(int rank) : rank_(rank) {
  check_rank(rank);
  for (int len = 0; len <= rank; ++len) {
    std::vector<int> cur;
    distinct_sequences(rank, len, cur, 0, sequences_);
  }
  const std::int64_t radix = rank + 1;
  radix_pow_.assign(rank + 2, 1);
  for (int k = 1; k <= rank + 1; ++k) radix_pow_[k] = radix_pow_[k - 1] * radix;
  lookup_.assign(static_cast<std::size_t>(radix_pow_[rank]), -1);
  for (std::size_t idx = 0; idx < sequences_.size(); ++idx) {
    std::uint32_t mask = 0;
    std::int64_t code = 0;
    for (int a : sequences_[idx]) {
      mask |= 1u << a;
      code = code * radix + a;
    }
    masks_.push_back(mask);
    codes_.push_back(code);
    lookup_[code] = static_cast<int>(idx);
  }
}

std::shared_ptr<const MonomialSpace> MonomialSpace::of_rank(int rank) {
  check_rank(rank);
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const MonomialSpace>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[rank];
  if (!slot) slot = std::make_shared<const MonomialSpace>(rank);
  return slot;
}

int MonomialSpace::index_of(std::span<const int> seq) const {
  if (static_cast<int>(seq.size()) > rank_) return -1;
  std::uint32_t mask = 0;
  std::int64_t code = 0;
  for (int a : seq) {
    if (a < 1 || a > rank_ || (mask & (1u << a))) return -1;
    mask |= 1u << a;
    code = code * (rank_ + 1) + a;
  }
  return lookup_[code];
}

std::string monomial_key(const std::vector<int>& seq) {
  std::string out;
  for (std::size_t k = 0; k < seq.size(); ++k) {
    if (k) out += '.';
    out += std::to_string(seq[k]);
  }
  return out;
}

std::vector<int> parse_monomial_key(const std::string& key) {
  std::vector<int> seq;
  if (key.empty()) return seq;
  std::size_t start = 0;
  while (true) {
    std::size_t dot = key.find('.', start);
    std::string part = key.substr(start, dot == std::string::npos ? std::string::npos : dot - start);
    if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos || part.size() > 3) {
      throw InvalidInput("malformed index sequence '" + key + "'");
    }
    seq.push_back(std::stoi(part));
    if (dot == std::string::npos) break;
    start = dot + 1;
  }
  return seq;
}

MagnusSeries::MagnusSeries(int rank) : MagnusSeries(MonomialSpace::of_rank(rank)) {}

MagnusSeries::MagnusSeries(std::shared_ptr<const MonomialSpace> space)
    : space_(std::move(space)), coeffs_(space_->size(), 0) {}

MagnusSeries MagnusSeries::one(int rank) {
  MagnusSeries s(rank);
  s.coeffs_[0] = 1;
  return s;
}

MagnusSeries MagnusSeries::generator(int rank, int k, int sign) {
  if (k < 1 || k > rank) throw InvalidInput("generator index out of range");
  MagnusSeries s = one(rank);
  int seq[1] = {k};
  s.coeffs_[s.space_->index_of(seq)] = sign > 0 ? 1 : -1;
  return s;
}

Int MagnusSeries::coefficient(std::span<const int> seq) const {
  int idx = space_->index_of(seq);
  return idx < 0 ? 0 : coeffs_[idx];
}

void MagnusSeries::set_coefficient(std::span<const int> seq, Int value) {
  int idx = space_->index_of(seq);
  if (idx < 0) throw InvalidInput("monomial is not square-free or out of range");
  coeffs_[idx] = value;
}

bool MagnusSeries::is_zero() const {
  for (Int c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

bool MagnusSeries::operator==(const MagnusSeries& other) const {
  return rank() == other.rank() && coeffs_ == other.coeffs_;
}

MagnusSeries series_add(const MagnusSeries& a, const MagnusSeries& b) {
  check_same_space(a, b);
  MagnusSeries r = a;
  for (int k = 0; k < r.space().size(); ++k) r[k] = checked_add(r[k], b[k]);
  return r;
}

MagnusSeries series_subtract(const MagnusSeries& a, const MagnusSeries& b) {
  check_same_space(a, b);
  MagnusSeries r = a;
  for (int k = 0; k < r.space().size(); ++k) r[k] = checked_sub(r[k], b[k]);
  return r;
}

MagnusSeries series_scale(const MagnusSeries& a, Int k) {
  MagnusSeries r = a;
  for (auto& c : r.coefficients()) c = checked_mul(c, k);
  return r;
}

MagnusSeries series_multiply(const MagnusSeries& a, const MagnusSeries& b) {
  check_same_space(a, b);
  const MonomialSpace& sp = a.space();
  std::vector<int> nb;
  for (int j = 0; j < sp.size(); ++j) {
    if (b[j] != 0) nb.push_back(j);
  }
  MagnusSeries r(a.space_ptr());
  for (int i = 0; i < sp.size(); ++i) {
    if (a[i] == 0) continue;
    for (int j : nb) {
      int p = sp.product(i, j);
      if (p >= 0) checked_fma(r[p], a[i], b[j]);
    }
  }
  return r;
}

MagnusSeries series_invert(const MagnusSeries& a) {
  if (a[0] != 1) throw InvalidInput("series is not invertible: constant coefficient is not 1");
  MagnusSeries neg_q = series_scale(a, -1);
  neg_q[0] = 0;
  MagnusSeries result = MagnusSeries::one(a.rank());
  MagnusSeries term = MagnusSeries::one(a.rank());
  for (int k = 1; k <= a.rank(); ++k) {
    term = series_multiply(term, neg_q);
    if (term.is_zero()) break;
    result = series_add(result, term);
  }
  return result;
}

MagnusSeries series_commutator(const MagnusSeries& a, const MagnusSeries& b) {
  return series_multiply(series_multiply(a, b), series_multiply(series_invert(a), series_invert(b)));
}

MagnusSeries magnus_expand(const ReducedWord& w) {
  MagnusSeries s = MagnusSeries::one(w.rank());
  const MonomialSpace& sp = s.space();
  // right multiplication by (1 +- X_k): s + (+-) s X_k
  for (const auto& l : w.letters()) {
    int seq[1] = {l.gen};
    int xk = sp.index_of(seq);
    MagnusSeries next = s;
    for (int i = 0; i < sp.size(); ++i) {
      if (s[i] == 0) continue;
      int p = sp.product(i, xk);
      if (p >= 0) checked_fma(next[p], s[i], l.sign);
    }
    s = std::move(next);
  }
  return s;
}

std::string format_series(const MagnusSeries& s) {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < s.space().size(); ++i) {
    Int c = s[i];
    if (c == 0) continue;
    const auto& seq = s.space().sequence(i);
    Int mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (seq.empty()) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << '*';
    for (std::size_t k = 0; k < seq.size(); ++k) {
      if (k) os << '*';
      os << 'X' << seq[k];
    }
  }
  if (first) os << '0';
  return os.str();
}

SeriesAction::SeriesAction(int rank) : space_(MonomialSpace::of_rank(rank)) {
  const MonomialSpace& sp = *space_;
  const int slots = 2 * (rank - 1);
  offsets_.assign(slots, {});
  terms_.assign(slots, {});
  auto single = [&](int a) {
    int seq[1] = {a};
    return sp.index_of(seq);
  };
  auto pair = [&](int a, int b) {
    int seq[2] = {a, b};
    return sp.index_of(seq);
  };
  for (int i = 1; i < rank; ++i) {
    for (int sign : {1, -1}) {
      // psi(X_a) for each variable a
      std::vector<std::vector<Term>> var_image(rank + 1);
      for (int a = 1; a <= rank; ++a) var_image[a] = {{single(a), 1}};
      const int twisted = sign > 0 ? i + 1 : i;
      const int swapped = sign > 0 ? i : i + 1;
      var_image[swapped] = {{single(sign > 0 ? i + 1 : i), 1}};
      var_image[twisted] = {{single(sign > 0 ? i : i + 1), 1}, {pair(i, i + 1), 1}, {pair(i + 1, i), -1}};

      std::vector<std::vector<Term>> image(sp.size());
      image[0] = {{0, 1}};
      for (int m = 1; m < sp.size(); ++m) {
        const auto& seq = sp.sequence(m);
        std::vector<int> prefix(seq.begin(), seq.end() - 1);
        const auto& left = image[sp.index_of(prefix)];
        std::map<int, Int> acc;
        for (const auto& l : left) {
          for (const auto& r : var_image[seq.back()]) {
            int p = sp.product(l.index, r.index);
            if (p >= 0) acc[p] = checked_add(acc[p], checked_mul(l.coeff, r.coeff));
          }
        }
        for (const auto& [idx, c] : acc) {
          if (c != 0) image[m].push_back({idx, c});
        }
      }
      const int s = slot({i, sign});
      offsets_[s].push_back(0);
      for (const auto& img : image) {
        terms_[s].insert(terms_[s].end(), img.begin(), img.end());
        offsets_[s].push_back(static_cast<int>(terms_[s].size()));
      }
    }
  }
}

std::shared_ptr<const SeriesAction> SeriesAction::of_rank(int rank) {
  check_rank(rank);
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const SeriesAction>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[rank];
  if (!slot) slot = std::make_shared<const SeriesAction>(rank);
  return slot;
}

void SeriesAction::apply_letter(Letter l, const std::vector<Int>& in, std::vector<Int>& out) const {
  const int s = slot(l);
  const auto& off = offsets_[s];
  const auto& terms = terms_[s];
  std::fill(out.begin(), out.end(), 0);
  for (std::size_t m = 0; m < in.size(); ++m) {
    const Int c = in[m];
    if (c == 0) continue;
    for (int t = off[m]; t < off[m + 1]; ++t) checked_fma(out[terms[t].index], c, terms[t].coeff);
  }
}

MagnusSeries SeriesAction::apply(const BraidWord& b, const MagnusSeries& s) const {
  if (b.strands() != rank() || s.rank() != rank()) {
    throw InvalidInput("braid strand count and series rank must agree");
  }
  std::vector<std::vector<Int>> cols{s.coefficients()};
  apply_in_place(b, cols);
  MagnusSeries r(space_);
  r.coefficients() = std::move(cols[0]);
  return r;
}

void SeriesAction::apply_in_place(const BraidWord& b, std::vector<std::vector<Int>>& columns) const {
  if (b.strands() != rank()) throw InvalidInput("braid strand count does not match series rank");
  std::vector<Int> scratch(space_->size());
  for (auto it = b.letters().rbegin(); it != b.letters().rend(); ++it) {
    for (auto& col : columns) {
      apply_letter(*it, col, scratch);
      col.swap(scratch);
    }
  }
}

}  // namespace lh
