#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lh/clasp.hpp"
#include "lh/tables.hpp"

namespace lh {

// Word-level partial conjugation: split the normal form as theta * omega where
// theta collects the claspers avoiding the strand, conjugate omega by the pure
// generator and re-extract in the standard order.
ClaspVector partial_conjugate(const ClaspVector& v, const PartialConjugation& pc);

// nu_target += multiplier * (signed sum of sources), sources read from v.
ClaspVector apply_table_move(const ClaspVector& v, const MoveRow& row, Int multiplier);

struct Move {
  enum class Kind { Table, Conjugation };
  Kind kind = Kind::Table;
  std::string table;  // Table moves
  int row = 0;
  PartialConjugation pc;  // Conjugation moves
  Int count = 1;          // multiplier for table moves, repetitions for conjugations (negative inverts)

  static Move table_move(std::string table, int row, Int multiplier);
  static Move conjugation(PartialConjugation pc, Int count);
  bool operator==(const Move&) const = default;
};

std::string format_move(const Move& m);

ClaspVector apply_move(const ClaspVector& v, const Move& m, const MoveTables& tables = embedded_move_tables());
ClaspVector replay_witness(const ClaspVector& v, const std::vector<Move>& witness,
                           const MoveTables& tables = embedded_move_tables());

struct OrbitVerdict {
  enum class Status { Equivalent, Distinct, Unknown };
  Status status = Status::Unknown;
  std::vector<Move> witness;  // replays v1 into v2 when Equivalent
  std::string invariant;      // why the vectors are Distinct, or why the answer is Unknown
};

std::string to_string(OrbitVerdict::Status s);

enum class SearchStrategy {
  Lattice,  // exact layered integer linear algebra
  Bfs,      // breadth-first search over canonicalized states, up to the budget
};

struct ClosureOptions {
  SearchStrategy strategy = SearchStrategy::Lattice;
  std::size_t budget = 100000;  // states visited by the Bfs strategy
};

// LH_SEARCH_BUDGET if set and valid, else 100000.
std::size_t default_search_budget();

OrbitVerdict closure_equivalent(const ClaspVector& v1, const ClaspVector& v2, const ClosureOptions& opts = {});

struct MilnorTriplet {
  Int nu12 = 0, nu13 = 0, nu23 = 0;
  Int modulus = 0;  // gcd of the degree-1 values
  Int residue = 0;  // nu123 mod modulus in [0, modulus), or nu123 itself when modulus is 0
  bool operator==(const MilnorTriplet&) const = default;
};

MilnorTriplet milnor_triplet(const ClaspVector& v);

// Per-table group of moves in which every degree up to `fixed_degree` is
// invariant; `moving_degree` changes by increments fixed by those invariants,
// and `top_degree` (0 if absent) by increments depending on moving_degree.
struct LayerPlan {
  int fixed_degree = 0;
  int moving_degree = 0;
  int top_degree = 0;
  std::vector<Move> generators;
};

// The plan used by closure_equivalent for v's strand count, or nullopt when the
// vector is outside the decided range (n > 5, or n = 5 with nonzero degree 1).
std::optional<LayerPlan> layer_plan(const ClaspVector& v);

}  // namespace lh
