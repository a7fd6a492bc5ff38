#include "lh/tables.hpp"

#include <algorithm>
#include <map>
#include <set>

#include <json.hpp>

#include "lh/magnus.hpp"

namespace lh {

namespace {

using nlohmann::json;

std::string where(const std::string& table, int row) { return table + " row " + std::to_string(row); }

std::vector<int> parse_key(const json& j, const std::string& ctx) {
  if (!j.is_string()) throw InvalidInput(ctx + ": clasper key must be a string");
  std::vector<int> seq;
  try {
    seq = parse_monomial_key(j.get<std::string>());
  } catch (const std::exception&) {
    throw InvalidInput(ctx + ": bad clasper key \"" + j.get<std::string>() + "\"");
  }
  return seq;
}

Int parse_sign(const json& j, const std::string& ctx) {
  if (!j.is_number_integer()) throw InvalidInput(ctx + ": increment sign must be an integer");
  Int s = j.get<Int>();
  if (s == 0) throw InvalidInput(ctx + ": zero increment coefficient");
  return s;
}

struct RawRow {
  std::string table;
  int row;
  std::optional<PartialConjugation> pc;
  std::vector<std::pair<std::vector<int>, std::vector<std::pair<std::vector<int>, Int>>>> increments;
};

}  // namespace

void validate_partial_conjugation(const PartialConjugation& pc, int n) {
  if (pc.strand < 1 || pc.strand > n || pc.conjugator < 1 || pc.conjugator > n) {
    throw InvalidInput("partial conjugation strands must lie in 1.." + std::to_string(n));
  }
  if (pc.strand == pc.conjugator) throw InvalidInput("partial conjugation needs two distinct strands");
  if (pc.sign != 1 && pc.sign != -1) throw InvalidInput("partial conjugation sign must be +1 or -1");
}

MoveTables::MoveTables(std::vector<MoveRow> rows) : rows_(std::move(rows)) {}

std::vector<std::string> MoveTables::table_ids() const {
  std::vector<std::string> out;
  for (const auto& r : rows_) {
    if (std::find(out.begin(), out.end(), r.table) == out.end()) out.push_back(r.table);
  }
  return out;
}

bool MoveTables::has_table(std::string_view id) const {
  return std::any_of(rows_.begin(), rows_.end(), [&](const MoveRow& r) { return r.table == id; });
}

std::vector<const MoveRow*> MoveTables::table(std::string_view id) const {
  std::vector<const MoveRow*> out;
  for (const auto& r : rows_) {
    if (r.table == id) out.push_back(&r);
  }
  if (out.empty()) throw InvalidInput("unknown move table \"" + std::string(id) + "\"");
  std::sort(out.begin(), out.end(), [](const MoveRow* a, const MoveRow* b) { return a->row < b->row; });
  return out;
}

const MoveRow& MoveTables::find(std::string_view id, int row) const {
  for (const auto& r : rows_) {
    if (r.table == id && r.row == row) return r;
  }
  throw InvalidInput("move table \"" + std::string(id) + "\" has no row " + std::to_string(row));
}

MoveTables parse_move_tables(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw InvalidInput(std::string("move tables: ") + e.what());
  }
  if (!doc.is_array()) throw InvalidInput("move tables: top level must be a list of rows");

  std::vector<RawRow> raw;
  std::map<std::string, int> strands;
  std::set<std::pair<std::string, int>> seen;
  for (const auto& j : doc) {
    if (!j.is_object() || !j.contains("table") || !j.contains("row") || !j.contains("increments")) {
      throw InvalidInput("move tables: every row needs table, row and increments");
    }
    if (!j["table"].is_string() || !j["row"].is_number_integer() || !j["increments"].is_object()) {
      throw InvalidInput("move tables: malformed row");
    }
    RawRow r{j["table"].get<std::string>(), j["row"].get<int>(), std::nullopt, {}};
    const std::string ctx = where(r.table, r.row);
    if (r.row < 1) throw InvalidInput(ctx + ": row numbers start at 1");
    if (!seen.insert({r.table, r.row}).second) throw InvalidInput(ctx + ": duplicate row");
    if (j.contains("pc")) {
      const auto& p = j["pc"];
      if (!p.is_array() || p.size() != 3 || !p[0].is_number_integer() || !p[1].is_number_integer() ||
          !p[2].is_number_integer()) {
        throw InvalidInput(ctx + ": pc must be [strand, conjugator, sign]");
      }
      r.pc = PartialConjugation{p[0].get<int>(), p[1].get<int>(), p[2].get<int>()};
    }
    int& n = strands[r.table];
    for (const auto& [key, sources] : j["increments"].items()) {
      auto target = parse_key(json(key), ctx);
      if (!sources.is_array() || sources.empty()) throw InvalidInput(ctx + ": increment list must be nonempty");
      std::vector<std::pair<std::vector<int>, Int>> refs;
      for (const auto& s : sources) {
        if (!s.is_array() || s.size() != 2) throw InvalidInput(ctx + ": increment must be [source, sign]");
        refs.emplace_back(parse_key(s[0], ctx), parse_sign(s[1], ctx));
        for (int a : refs.back().first) n = std::max(n, a);
      }
      for (int a : target) n = std::max(n, a);
      r.increments.emplace_back(std::move(target), std::move(refs));
    }
    raw.push_back(std::move(r));
  }

  std::vector<MoveRow> rows;
  for (auto& r : raw) {
    const std::string ctx = where(r.table, r.row);
    const int n = strands[r.table];
    if (n < 2 || n > MonomialSpace::kMaxRank) throw InvalidInput(ctx + ": unsupported strand count");
    const auto idx = ClasperIndex::of(n);
    MoveRow out{r.table, r.row, n, r.pc, {}};
    if (out.pc) validate_partial_conjugation(*out.pc, n);
    std::set<int> targets;
    for (const auto& [t, refs] : r.increments) {
      int ti = idx->index_of(t);
      if (ti < 0) throw InvalidInput(ctx + ": (" + monomial_key(t) + ") is not a comb-clasper");
      targets.insert(ti);
      MoveIncrement inc{ti, {}};
      std::map<int, Int> merged;
      for (const auto& [s, sign] : refs) {
        int si = idx->index_of(s);
        if (si < 0) throw InvalidInput(ctx + ": (" + monomial_key(s) + ") is not a comb-clasper");
        if (s.size() >= t.size()) {
          throw InvalidInput(ctx + ": source (" + monomial_key(s) + ") is not of lower degree than target (" +
                             monomial_key(t) + ")");
        }
        merged[si] += sign;
      }
      for (const auto& [si, sign] : merged) {
        if (sign != 0) inc.sources.push_back({si, sign});
      }
      out.increments.push_back(std::move(inc));
    }
    // Reads come from the input vector, which only agrees with sequential
    // application when no source is also written by the same row.
    for (const auto& inc : out.increments) {
      for (const auto& s : inc.sources) {
        if (targets.count(s.clasper)) throw InvalidInput(ctx + ": a source is also a target of the row");
      }
    }
    std::sort(out.increments.begin(), out.increments.end(),
              [](const MoveIncrement& a, const MoveIncrement& b) { return a.target < b.target; });
    rows.push_back(std::move(out));
  }
  return MoveTables(std::move(rows));
}

const MoveTables& embedded_move_tables() {
  static const MoveTables tables = parse_move_tables(embedded_move_tables_text());
  return tables;
}

std::uint64_t embedded_tables_checksum() {
  const std::string canonical = json::parse(embedded_move_tables_text()).dump();
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : canonical) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

}  // namespace lh
