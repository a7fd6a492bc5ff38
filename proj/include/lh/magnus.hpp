#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lh/braid.hpp"
#include "lh/free_group.hpp"
#include "lh/integer.hpp"

namespace lh {

// All square-free monomials X_{a1}..X_{ak} (distinct indices, order matters)
// in rank variables, densely indexed by degree, then lexicographically.
class MonomialSpace {
 public:
  static constexpr int kMaxRank = 7;
  static std::shared_ptr<const MonomialSpace> of_rank(int rank);

  int rank() const { return rank_; }
  int size() const { return static_cast<int>(sequences_.size()); }
  const std::vector<int>& sequence(int idx) const { return sequences_[idx]; }
  int degree(int idx) const { return static_cast<int>(sequences_[idx].size()); }
  std::uint32_t support(int idx) const { return masks_[idx]; }
  // -1 when the sequence has a repeated or out-of-range index
  int index_of(std::span<const int> seq) const;
  // Index of the concatenation, or -1 when it repeats an index.
  int product(int a, int b) const {
    if (masks_[a] & masks_[b]) return -1;
    return lookup_[codes_[a] * radix_pow_[sequences_[b].size()] + codes_[b]];
  }

  explicit MonomialSpace(int rank);

 private:
  int rank_;
  std::vector<std::vector<int>> sequences_;
  std::vector<std::uint32_t> masks_;
  std::vector<std::int64_t> codes_;
  std::vector<std::int64_t> radix_pow_;
  std::vector<int> lookup_;
};

std::string monomial_key(const std::vector<int>& seq);
std::vector<int> parse_monomial_key(const std::string& key);

// Element of the truncated square-free Magnus ring.
class MagnusSeries {
 public:
  explicit MagnusSeries(int rank);
  explicit MagnusSeries(std::shared_ptr<const MonomialSpace> space);

  static MagnusSeries one(int rank);
  // (1 + X_k)^sign
  static MagnusSeries generator(int rank, int k, int sign = 1);

  int rank() const { return space_->rank(); }
  const MonomialSpace& space() const { return *space_; }
  const std::shared_ptr<const MonomialSpace>& space_ptr() const { return space_; }

  Int coefficient(std::span<const int> seq) const;
  void set_coefficient(std::span<const int> seq, Int value);
  Int operator[](int idx) const { return coeffs_[idx]; }
  Int& operator[](int idx) { return coeffs_[idx]; }
  const std::vector<Int>& coefficients() const { return coeffs_; }
  std::vector<Int>& coefficients() { return coeffs_; }
  bool is_zero() const;

  bool operator==(const MagnusSeries& other) const;

 private:
  std::shared_ptr<const MonomialSpace> space_;
  std::vector<Int> coeffs_;
};

MagnusSeries series_add(const MagnusSeries& a, const MagnusSeries& b);
MagnusSeries series_subtract(const MagnusSeries& a, const MagnusSeries& b);
MagnusSeries series_scale(const MagnusSeries& a, Int k);
MagnusSeries series_multiply(const MagnusSeries& a, const MagnusSeries& b);
MagnusSeries series_invert(const MagnusSeries& a);
// a b a^-1 b^-1 for unit series
MagnusSeries series_commutator(const MagnusSeries& a, const MagnusSeries& b);
MagnusSeries magnus_expand(const ReducedWord& w);
std::string format_series(const MagnusSeries& s);

// The ring endomorphisms induced on series by the Artin action, tabulated per
// letter and monomial, so that apply(b, magnus_expand(w)) equals
// magnus_expand(artin_act(b, w)) without expanding words.
class SeriesAction {
 public:
  static std::shared_ptr<const SeriesAction> of_rank(int rank);
  explicit SeriesAction(int rank);

  int rank() const { return space_->rank(); }
  MagnusSeries apply(const BraidWord& b, const MagnusSeries& s) const;
  // Applies the letters of b right to left to each of several coefficient vectors.
  void apply_in_place(const BraidWord& b, std::vector<std::vector<Int>>& columns) const;

 private:
  struct Term {
    int index;
    Int coeff;
  };
  int slot(Letter l) const { return 2 * (l.index - 1) + (l.sign > 0 ? 0 : 1); }
  void apply_letter(Letter l, const std::vector<Int>& in, std::vector<Int>& out) const;

  std::shared_ptr<const MonomialSpace> space_;
  // images_[slot] in CSR form over monomials
  std::vector<std::vector<int>> offsets_;
  std::vector<std::vector<Term>> terms_;
};

}  // namespace lh
