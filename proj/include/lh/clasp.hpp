#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "lh/braid.hpp"
#include "lh/integer.hpp"

namespace lh {

// Sequence (i1, .., il) with i1 the minimum and il the maximum of its entries.
struct CombClasper {
  std::vector<int> sequence;
  int degree() const { return static_cast<int>(sequence.size()) - 1; }
  int last() const { return sequence.back(); }
  bool operator==(const CombClasper&) const = default;
};

bool is_comb_clasper(const std::vector<int>& seq, int n);
std::uint32_t support_mask(const std::vector<int>& seq);

// All comb-claspers for n strands in the fixed order: degree, then lexicographic.
class ClasperIndex {
 public:
  static std::shared_ptr<const ClasperIndex> of(int n);
  explicit ClasperIndex(int n);

  int strands() const { return n_; }
  int size() const { return static_cast<int>(claspers_.size()); }
  const CombClasper& operator[](int k) const { return claspers_[k]; }
  const std::vector<CombClasper>& claspers() const { return claspers_; }
  int index_of(std::span<const int> seq) const;  // -1 if absent
  std::pair<int, int> degree_range(int degree) const;
  const BraidWord& braid(int k) const { return braids_[k]; }

 private:
  int n_;
  std::vector<CombClasper> claspers_;
  std::vector<BraidWord> braids_;
  std::vector<int> degree_start_;
};

class ClaspVector {
 public:
  explicit ClaspVector(int n);

  int strands() const { return index_->strands(); }
  const ClasperIndex& index() const { return *index_; }
  int size() const { return index_->size(); }
  Int operator[](int k) const { return values_[k]; }
  Int& operator[](int k) { return values_[k]; }
  Int get(std::span<const int> seq) const;
  void set(std::span<const int> seq, Int value);
  const std::vector<Int>& values() const { return values_; }
  bool operator==(const ClaspVector& other) const;

 private:
  std::shared_ptr<const ClasperIndex> index_;
  std::vector<Int> values_;
};

std::string clasper_order_tag();  // "degree-lex"

BraidWord comb_clasper_braid(const CombClasper& c, int n);
BraidWord clasp_vector_to_braid(const ClaspVector& v);

enum class ExtractionRoute {
  StrandDeletion,  // read each support set on the braid with all other strands forgotten
  FullColumns,     // read every support set on the full-rank columns
};

ClaspVector extract_clasp_vector(const BraidWord& b, ExtractionRoute route = ExtractionRoute::StrandDeletion);

// Keeps the entries whose support lies in keep (sorted), relabelled onto 1..keep.size().
ClaspVector restrict_to_strands(const ClaspVector& v, const std::vector<int>& keep);

}  // namespace lh
