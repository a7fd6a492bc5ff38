#include "lh/json_io.hpp"

namespace lh {

namespace {

std::vector<int> key_of(const std::string& key, const char* what) {
  try {
    return parse_monomial_key(key);
  } catch (const InvalidInput&) {
    throw InvalidInput(std::string("bad ") + what + " key \"" + key + "\"");
  }
}

Int integer(const json& j, const std::string& what) {
  if (!j.is_number_integer()) throw InvalidInput(what + " must be an integer");
  return j.get<Int>();
}

const json& field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw InvalidInput(std::string("missing field \"") + name + "\"");
  return j.at(name);
}

}  // namespace

json parse_json_text(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidInput(std::string("invalid JSON: ") + e.what());
  }
}

json to_json(const MagnusSeries& s) {
  json out = json::object();
  for (int k = 0; k < s.space().size(); ++k) {
    if (s[k] != 0) out[monomial_key(s.space().sequence(k))] = s[k];
  }
  return out;
}

MagnusSeries series_from_json(const json& j, int rank) {
  if (!j.is_object()) throw InvalidInput("series must be a JSON object");
  MagnusSeries s(rank);
  for (const auto& [key, value] : j.items()) {
    auto seq = key_of(key, "monomial");
    if (s.space().index_of(seq) < 0) throw InvalidInput("monomial \"" + key + "\" is not square-free of rank " +
                                                         std::to_string(rank));
    s.set_coefficient(seq, integer(value, "coefficient of \"" + key + "\""));
  }
  return s;
}

json to_json(const ExponentVector& e) {
  json out = json::object();
  for (int k = 0; k < e.basis->size(); ++k) {
    if (e.exponents[k] != 0) out[monomial_key((*e.basis)[k].sequence)] = e.exponents[k];
  }
  return out;
}

ExponentVector exponents_from_json(const json& j, const BasisPtr& basis) {
  if (!j.is_object()) throw InvalidInput("exponent vector must be a JSON object");
  ExponentVector e{basis, std::vector<Int>(basis->size(), 0)};
  for (const auto& [key, value] : j.items()) {
    int k = basis->index_of(key_of(key, "commutator"));
    if (k < 0) throw InvalidInput("\"" + key + "\" is not a basic commutator");
    e.exponents[k] = integer(value, "exponent of \"" + key + "\"");
  }
  return e;
}

json to_json(const GammaMatrix& g) {
  json order = json::array();
  for (const auto& c : g.basis->elements()) order.push_back(c.sequence);
  json rows = json::array();
  for (int r = 0; r < g.matrix.rows(); ++r) rows.push_back(g.matrix.row(r));
  return {{"basis_order", std::move(order)}, {"rows", std::move(rows)}};
}

GammaMatrix gamma_from_json(const json& j) {
  const auto& order = field(j, "basis_order");
  const auto& rows = field(j, "rows");
  if (!order.is_array() || !rows.is_array()) throw InvalidInput("basis_order and rows must be lists");
  std::vector<std::vector<int>> seqs;
  int rank = 0;
  for (const auto& s : order) {
    seqs.push_back(s.get<std::vector<int>>());
    if (seqs.back().size() == 1) rank = std::max(rank, seqs.back()[0]);
  }
  for (BasisOrder o : {BasisOrder::WeightLex, BasisOrder::WeightRevLex}) {
    if (rank < 1 || rank > MonomialSpace::kMaxRank) break;
    BasisPtr basis = enumerate_basic_commutators(rank, o);
    bool match = basis->size() == static_cast<int>(seqs.size());
    for (int k = 0; match && k < basis->size(); ++k) match = (*basis)[k].sequence == seqs[k];
    if (!match) continue;
    if (static_cast<int>(rows.size()) != basis->size()) throw InvalidInput("matrix has the wrong number of rows");
    GammaMatrix g{basis, IntMatrix(basis->size(), basis->size())};
    for (int r = 0; r < basis->size(); ++r) {
      if (!rows[r].is_array() || static_cast<int>(rows[r].size()) != basis->size()) {
        throw InvalidInput("matrix row " + std::to_string(r) + " has the wrong length");
      }
      for (int c = 0; c < basis->size(); ++c) g.matrix(r, c) = integer(rows[r][c], "matrix entry");
    }
    return g;
  }
  throw InvalidInput("basis_order is not a supported ordering of the basic commutators");
}

json to_json(const ClaspVector& v) {
  json nu = json::object();
  for (int k = 0; k < v.size(); ++k) nu[monomial_key(v.index()[k].sequence)] = v[k];
  return {{"n", v.strands()}, {"order", clasper_order_tag()}, {"nu", std::move(nu)}};
}

ClaspVector clasp_vector_from_json(const json& j) {
  const Int n = integer(field(j, "n"), "n");
  if (n < 1 || n > MonomialSpace::kMaxRank) {
    throw InvalidInput("n must be in 1.." + std::to_string(MonomialSpace::kMaxRank));
  }
  if (j.contains("order") && j["order"] != clasper_order_tag()) {
    throw InvalidInput("unsupported clasper order tag (expected \"" + clasper_order_tag() + "\")");
  }
  ClaspVector v(static_cast<int>(n));
  if (!j.contains("nu")) return v;
  if (!j["nu"].is_object()) throw InvalidInput("nu must be a JSON object");
  for (const auto& [key, value] : j["nu"].items()) {
    auto seq = key_of(key, "clasper");
    if (v.index().index_of(seq) < 0) {
      throw InvalidInput("\"" + key + "\" is not a comb-clasper for " + std::to_string(n) + " strands");
    }
    v.set(seq, integer(value, "nu(" + key + ")"));
  }
  return v;
}

json to_json(const Move& m) {
  if (m.kind == Move::Kind::Table) {
    return {{"move", "table"}, {"table", m.table}, {"row", m.row}, {"multiplier", m.count}};
  }
  return {{"move", "pc"}, {"strand", m.pc.strand}, {"by", m.pc.conjugator}, {"sign", m.pc.sign}, {"count", m.count}};
}

Move move_from_json(const json& j) {
  const auto& kind = field(j, "move");
  if (kind == "table") {
    if (!field(j, "table").is_string()) throw InvalidInput("table id must be a string");
    return Move::table_move(j["table"].get<std::string>(), static_cast<int>(integer(field(j, "row"), "row")),
                            integer(field(j, "multiplier"), "multiplier"));
  }
  if (kind == "pc") {
    PartialConjugation pc{static_cast<int>(integer(field(j, "strand"), "strand")),
                          static_cast<int>(integer(field(j, "by"), "by")),
                          static_cast<int>(integer(field(j, "sign"), "sign"))};
    return Move::conjugation(pc, integer(field(j, "count"), "count"));
  }
  throw InvalidInput("move kind must be \"table\" or \"pc\"");
}

json to_json(const OrbitVerdict& v) {
  json witness = json::array();
  for (const auto& m : v.witness) witness.push_back(to_json(m));
  return {{"status", to_string(v.status)}, {"witness", std::move(witness)}, {"invariant", v.invariant}};
}

OrbitVerdict verdict_from_json(const json& j) {
  OrbitVerdict v;
  const auto& status = field(j, "status");
  if (status == "Equivalent") {
    v.status = OrbitVerdict::Status::Equivalent;
  } else if (status == "Distinct") {
    v.status = OrbitVerdict::Status::Distinct;
  } else if (status == "Unknown") {
    v.status = OrbitVerdict::Status::Unknown;
  } else {
    throw InvalidInput("unknown verdict status");
  }
  if (j.contains("witness")) {
    for (const auto& m : j["witness"]) v.witness.push_back(move_from_json(m));
  }
  if (j.contains("invariant")) v.invariant = j["invariant"].get<std::string>();
  return v;
}

json to_json(const MoveRow& row) {
  const auto idx = ClasperIndex::of(row.n);
  json inc = json::object();
  for (const auto& i : row.increments) {
    json refs = json::array();
    for (const auto& s : i.sources) refs.push_back({monomial_key((*idx)[s.clasper].sequence), s.sign});
    inc[monomial_key((*idx)[i.target].sequence)] = std::move(refs);
  }
  json out = {{"table", row.table}, {"row", row.row}};
  if (row.pc) out["pc"] = {row.pc->strand, row.pc->conjugator, row.pc->sign};
  out["increments"] = std::move(inc);
  return out;
}

json to_json(const MoveTables& tables) {
  json out = json::array();
  for (const auto& r : tables.rows()) out.push_back(to_json(r));
  return out;
}

}  // namespace lh
