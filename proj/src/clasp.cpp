#include "lh/clasp.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>

#include "lh/magnus.hpp"

namespace lh {

namespace {

std::vector<int> relabel(const std::vector<int>& seq, const std::vector<int>& keep) {
  std::vector<int> out;
  out.reserve(seq.size());
  for (int a : seq) {
    out.push_back(static_cast<int>(std::lower_bound(keep.begin(), keep.end(), a) - keep.begin()) + 1);
  }
  return out;
}

std::vector<int> strands_of(std::uint32_t mask) {
  std::vector<int> out;
  for (int k = 1; k < 32; ++k) {
    if (mask & (1u << k)) out.push_back(k);
  }
  return out;
}

BraidWord degree_part(const ClaspVector& v, int degree) {
  const auto& idx = v.index();
  auto [lo, hi] = idx.degree_range(degree);
  BraidWord out(v.strands());
  for (int k = lo; k < hi; ++k) {
    if (v[k] != 0) out = compose(out, power(idx.braid(k), v[k]));
  }
  return out;
}

}  // namespace

bool is_comb_clasper(const std::vector<int>& seq, int n) {
  if (seq.size() < 2 || static_cast<int>(seq.size()) > n) return false;
  std::uint32_t used = 0;
  for (int a : seq) {
    if (a < 1 || a > n || (used & (1u << a))) return false;
    used |= 1u << a;
  }
  return seq.front() == *std::min_element(seq.begin(), seq.end()) &&
         seq.back() == *std::max_element(seq.begin(), seq.end());
}

std::uint32_t support_mask(const std::vector<int>& seq) {
  std::uint32_t m = 0;
  for (int a : seq) m |= 1u << a;
  return m;
}

ClasperIndex::ClasperIndex(int n) : n_(n) {
  if (n < 1 || n > MonomialSpace::kMaxRank) {
    throw InvalidInput("strand count must be in 1.." + std::to_string(MonomialSpace::kMaxRank));
  }
  degree_start_.assign(n + 1, 0);
  for (int len = 2; len <= n; ++len) {
    degree_start_[len - 1] = static_cast<int>(claspers_.size());
    std::vector<std::vector<int>> seqs;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      if (std::popcount(mask) != len) continue;
      std::vector<int> s;
      for (int k = 0; k < n; ++k) {
        if (mask & (1u << k)) s.push_back(k + 1);
      }
      std::vector<int> middle(s.begin() + 1, s.end() - 1);
      do {
        std::vector<int> seq{s.front()};
        seq.insert(seq.end(), middle.begin(), middle.end());
        seq.push_back(s.back());
        seqs.push_back(seq);
      } while (std::next_permutation(middle.begin(), middle.end()));
    }
    std::sort(seqs.begin(), seqs.end());
    for (auto& s : seqs) claspers_.push_back({std::move(s)});
  }
  degree_start_[n] = static_cast<int>(claspers_.size());
  for (const auto& c : claspers_) braids_.push_back(comb_clasper_braid(c, n));
}

std::shared_ptr<const ClasperIndex> ClasperIndex::of(int n) {
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const ClasperIndex>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[n];
  if (!slot) slot = std::make_shared<const ClasperIndex>(n);
  return slot;
}

int ClasperIndex::index_of(std::span<const int> seq) const {
  std::vector<int> key(seq.begin(), seq.end());
  if (!is_comb_clasper(key, n_)) return -1;
  auto [lo, hi] = degree_range(static_cast<int>(key.size()) - 1);
  auto it = std::lower_bound(claspers_.begin() + lo, claspers_.begin() + hi, key,
                             [](const CombClasper& c, const std::vector<int>& k) { return c.sequence < k; });
  return static_cast<int>(it - claspers_.begin());
}

std::pair<int, int> ClasperIndex::degree_range(int degree) const {
  if (degree < 1 || degree > n_ - 1) return {size(), size()};
  return {degree_start_[degree], degree_start_[degree + 1]};
}

ClaspVector::ClaspVector(int n) : index_(ClasperIndex::of(n)), values_(index_->size(), 0) {}

Int ClaspVector::get(std::span<const int> seq) const {
  int k = index_->index_of(seq);
  if (k < 0) throw InvalidInput("not a comb-clasper for " + std::to_string(strands()) + " strands");
  return values_[k];
}

void ClaspVector::set(std::span<const int> seq, Int value) {
  int k = index_->index_of(seq);
  if (k < 0) throw InvalidInput("not a comb-clasper for " + std::to_string(strands()) + " strands");
  values_[k] = value;
}

bool ClaspVector::operator==(const ClaspVector& other) const {
  return strands() == other.strands() && values_ == other.values_;
}

std::string clasper_order_tag() { return "degree-lex"; }

BraidWord comb_clasper_braid(const CombClasper& c, int n) {
  if (!is_comb_clasper(c.sequence, n)) {
    throw InvalidInput("(" + monomial_key(c.sequence) + ") is not a comb-clasper for " + std::to_string(n) +
                       " strands");
  }
  const int m = c.last();
  BraidWord w = expand_pure_generator({c.sequence[0], m}, n);
  for (std::size_t k = 1; k + 1 < c.sequence.size(); ++k) {
    w = commutator(w, expand_pure_generator({c.sequence[k], m}, n));
  }
  return w;
}

BraidWord clasp_vector_to_braid(const ClaspVector& v) {
  BraidWord out(v.strands());
  for (int d = 1; d < v.strands(); ++d) out = compose(out, degree_part(v, d));
  return out;
}

ClaspVector extract_clasp_vector(const BraidWord& b, ExtractionRoute route) {
  if (!is_pure(b)) throw InvalidInput("braid is not pure");
  const int n = b.strands();
  ClaspVector out(n);
  const auto& idx = out.index();
  BraidWord r = b;
  for (int d = 1; d < n; ++d) {
    auto [lo, hi] = idx.degree_range(d);
    if (route == ExtractionRoute::StrandDeletion) {
      std::map<std::vector<int>, std::vector<int>> by_support;  // sorted support -> clasper indices
      for (int k = lo; k < hi; ++k) by_support[strands_of(support_mask(idx[k].sequence))].push_back(k);
      for (const auto& [keep, members] : by_support) {
        const int q = static_cast<int>(keep.size());
        BraidWord local = forget_strands(r, keep);
        MagnusSeries col = SeriesAction::of_rank(q)->apply(local, MagnusSeries::generator(q, q));
        for (int k : members) out[k] = -col.coefficient(relabel(idx[k].sequence, keep));
      }
    } else {
      auto action = SeriesAction::of_rank(n);
      std::vector<std::vector<Int>> cols;
      for (int m = 1; m <= n; ++m) cols.push_back(MagnusSeries::generator(n, m).coefficients());
      action->apply_in_place(r, cols);
      const auto& sp = *MonomialSpace::of_rank(n);
      for (int k = lo; k < hi; ++k) {
        const auto& seq = idx[k].sequence;
        out[k] = -cols[seq.back() - 1][sp.index_of(seq)];
      }
    }
    r = compose(invert(degree_part(out, d)), r);
  }
  return out;
}

ClaspVector restrict_to_strands(const ClaspVector& v, const std::vector<int>& keep) {
  if (keep.empty() || !std::is_sorted(keep.begin(), keep.end())) {
    throw InvalidInput("strand list must be nonempty and sorted");
  }
  ClaspVector out(static_cast<int>(keep.size()));
  const std::uint32_t allowed = support_mask(keep);
  for (int k = 0; k < v.size(); ++k) {
    const auto& seq = v.index()[k].sequence;
    if ((support_mask(seq) & ~allowed) == 0) out.set(relabel(seq, keep), v[k]);
  }
  return out;
}

}  // namespace lh
