#pragma once

#include <map>
#include <string>
#include <vector>

#include "lh/braid.hpp"
#include "lh/commutators.hpp"
#include "lh/int_matrix.hpp"

namespace lh {

// Column c holds the image of basis element c, so gamma(ab) = gamma(a) gamma(b).
struct GammaMatrix {
  BasisPtr basis;
  IntMatrix matrix;

  bool operator==(const GammaMatrix& other) const;
  // The image of one basis element as a map sequence -> coefficient.
  std::map<std::vector<int>, Int> image(int column) const;
};

enum class GammaRoute {
  Series,      // induced series action on the expansion of each basis commutator
  Words,       // word-level Artin action followed by weight peeling
  ClosedForm,  // product of closed-form generator matrices
};

GammaMatrix gamma_matrix(const BraidWord& b, const BasisPtr& basis, GammaRoute route = GammaRoute::Series);
GammaMatrix gamma_matrix(const BraidWord& b);

// Formal integer combination of basic commutators, keyed by sequence.
using CommutatorCombination = std::map<std::vector<int>, Int>;

CommutatorCombination gamma_generator_closed_form(int i, const BasicCommutator& alpha, int n);
// Which of the seven position patterns (a)..(g) applies; exactly one does.
char closed_form_case(int i, const std::vector<int>& seq);
IntMatrix closed_form_generator_matrix(int i, const BasisPtr& basis);

bool braid_equal_lh(const BraidWord& a, const BraidWord& b);

struct StructureReport {
  bool block_lower_triangular = true;
  bool permutation_block = true;
  bool pair_block = true;
  bool pure = false;
  bool diagonal_identity = true;  // only checked for pure braids
  bool diagonal_finite_order = true;
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

StructureReport structure_report(const GammaMatrix& m, const BraidWord& b);

}  // namespace lh
