#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lh/clasp.hpp"

namespace lh {

// Conjugate the part of the braid that involves `strand` by the pure
// generator joining `strand` and `conjugator`, raised to `sign`.
struct PartialConjugation {
  int strand = 1;
  int conjugator = 2;
  int sign = 1;
  bool operator==(const PartialConjugation&) const = default;
};

void validate_partial_conjugation(const PartialConjugation& pc, int n);

struct MoveSource {
  int clasper;  // index into ClasperIndex::of(n)
  Int sign;
};

struct MoveIncrement {
  int target;
  std::vector<MoveSource> sources;
};

// One row of a move table: nu_target += sum sign * nu_source for every increment.
struct MoveRow {
  std::string table;
  int row = 0;
  int n = 0;
  std::optional<PartialConjugation> pc;
  std::vector<MoveIncrement> increments;  // sorted by target
};

namespace table_id {
inline constexpr std::string_view kSameClosure4 = "same-closure-4";
inline constexpr std::string_view kPartialConjugation4 = "partial-conjugation-4";
inline constexpr std::string_view kGenerating4 = "generating-4";
inline constexpr std::string_view kSameClosure5 = "same-closure-5";
inline constexpr std::string_view kGenerating5Split = "generating-5-split";
}  // namespace table_id

class MoveTables {
 public:
  MoveTables() = default;
  explicit MoveTables(std::vector<MoveRow> rows);

  const std::vector<MoveRow>& rows() const { return rows_; }
  std::vector<std::string> table_ids() const;  // in order of first appearance
  bool has_table(std::string_view id) const;
  // Rows of one table in row order; throws InvalidInput for an unknown id.
  std::vector<const MoveRow*> table(std::string_view id) const;
  const MoveRow& find(std::string_view id, int row) const;

 private:
  std::vector<MoveRow> rows_;
};

// Parses and validates the table data format; throws InvalidInput.
MoveTables parse_move_tables(std::string_view json_text);

const MoveTables& embedded_move_tables();
std::string_view embedded_move_tables_text();
// FNV-1a of the canonical (compact, key-sorted) JSON dump of the embedded tables.
std::uint64_t embedded_tables_checksum();

}  // namespace lh
