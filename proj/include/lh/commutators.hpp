#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lh/free_group.hpp"
#include "lh/magnus.hpp"

namespace lh {

// Both orders are weight-graded; they differ only inside a weight class.
enum class BasisOrder { WeightLex, WeightRevLex };

std::string to_string(BasisOrder order);
BasisOrder parse_basis_order(const std::string& tag);

struct BasicCommutator {
  std::vector<int> sequence;
  int weight() const { return static_cast<int>(sequence.size()); }
  bool operator==(const BasicCommutator&) const = default;
};

bool is_basic_sequence(const std::vector<int>& seq, int rank);

class CommutatorBasis {
 public:
  CommutatorBasis(int rank, BasisOrder order);

  int rank() const { return rank_; }
  BasisOrder order() const { return order_; }
  int size() const { return static_cast<int>(elements_.size()); }
  const BasicCommutator& operator[](int k) const { return elements_[k]; }
  const std::vector<BasicCommutator>& elements() const { return elements_; }
  // -1 if the sequence is not a basis element
  int index_of(std::span<const int> seq) const;
  int index_of_monomial(int monomial) const { return by_monomial_[monomial]; }
  int monomial_of(int k) const { return monomial_[k]; }
  // [first, last) basis positions of the given weight
  std::pair<int, int> weight_range(int weight) const;
  // magnus_expand([alpha]) - 1, a homogeneous Lie polynomial
  const MagnusSeries& lie_polynomial(int k) const { return lie_[k]; }
  const std::shared_ptr<const MonomialSpace>& space() const { return space_; }

 private:
  int rank_;
  BasisOrder order_;
  std::shared_ptr<const MonomialSpace> space_;
  std::vector<BasicCommutator> elements_;
  std::vector<int> monomial_;
  std::vector<int> by_monomial_;
  std::vector<int> weight_start_;
  std::vector<MagnusSeries> lie_;
};

using BasisPtr = std::shared_ptr<const CommutatorBasis>;

BasisPtr enumerate_basic_commutators(int rank, BasisOrder order = BasisOrder::WeightLex);

// Closed-form basis size sum_{0<=l<=k<n} k!/l!, and per-weight count.
Int basis_size_formula(int rank);
Int basis_weight_count_formula(int rank, int weight);

struct ExponentVector {
  BasisPtr basis;
  std::vector<Int> exponents;

  Int at(std::span<const int> seq) const;
  bool operator==(const ExponentVector& other) const;
};

ExponentVector rfg_normal_form(const ReducedWord& w, const BasisPtr& basis);
// Weight peeling applied directly to the expansion of a group element.
ExponentVector normal_form_of_series(const MagnusSeries& s, const BasisPtr& basis);
// Exponents read straight off the X^alpha coefficients; empty unless the series
// equals 1 + sum e_alpha P_alpha exactly (true for the images of basis
// commutators under braids, whose factors pairwise annihilate).
std::optional<ExponentVector> linear_read_off(const MagnusSeries& s, const BasisPtr& basis);
bool rfg_equal(const ReducedWord& u, const ReducedWord& v);
// Product of [alpha]^{e_alpha} in basis order, as a word.
ReducedWord normal_form_word(const ExponentVector& e);

}  // namespace lh
