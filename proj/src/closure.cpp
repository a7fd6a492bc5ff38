#include "lh/closure.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <numeric>
#include <stdexcept>

#include "lh/lattice.hpp"
#include "lh/magnus.hpp"

namespace lh {

namespace {

using Word = std::vector<Move>;  // moves in application order

std::vector<Int> coords(const ClaspVector& v, int degree) {
  auto [lo, hi] = v.index().degree_range(degree);
  return std::vector<Int>(v.values().begin() + lo, v.values().begin() + hi);
}

std::vector<Int> difference(const std::vector<Int>& a, const std::vector<Int>& b) {
  std::vector<Int> out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = checked_sub(a[k], b[k]);
  return out;
}

bool all_zero(const std::vector<Int>& v) {
  return std::all_of(v.begin(), v.end(), [](Int x) { return x == 0; });
}

// First degree at which the two vectors disagree, described entry by entry.
std::string describe_difference(const ClaspVector& a, const ClaspVector& b, int degree) {
  auto [lo, hi] = a.index().degree_range(degree);
  std::string out;
  for (int k = lo; k < hi; ++k) {
    if (a[k] == b[k]) continue;
    if (!out.empty()) out += ", ";
    out += "nu(" + monomial_key(a.index()[k].sequence) + ") " + std::to_string(a[k]) + " vs " +
           std::to_string(b[k]);
  }
  return out;
}

Word inverse_word(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (auto& m : out) m.count = -m.count;
  return out;
}

// Merge adjacent moves of the same kind and row; T^a T^b = T^(a+b) holds for
// table rows and for partial conjugations alike.
Word simplify(const Word& w) {
  Word out;
  for (const auto& m : w) {
    if (!out.empty()) {
      Move& last = out.back();
      bool same = last.kind == m.kind &&
                  (m.kind == Move::Kind::Table ? (last.table == m.table && last.row == m.row) : last.pc == m.pc);
      if (same) {
        last.count = checked_add(last.count, m.count);
        if (last.count == 0) out.pop_back();
        continue;
      }
    }
    if (m.count != 0) out.push_back(m);
  }
  return out;
}

ClaspVector apply_word(ClaspVector v, const Word& w, const MoveTables& tables) {
  for (const auto& m : w) v = apply_move(v, m, tables);
  return v;
}

Move with_count(Move m, Int count) {
  m.count = count;
  return m;
}

OrbitVerdict distinct(std::string why) { return {OrbitVerdict::Status::Distinct, {}, std::move(why)}; }
OrbitVerdict unknown(std::string why) { return {OrbitVerdict::Status::Unknown, {}, std::move(why)}; }

OrbitVerdict equivalent(const ClaspVector& v1, const ClaspVector& v2, Word witness, const MoveTables& tables) {
  witness = simplify(witness);
  if (!(replay_witness(v1, witness, tables) == v2)) throw std::logic_error("closure witness does not replay");
  return {OrbitVerdict::Status::Equivalent, std::move(witness), {}};
}

// State shared by both strategies once the fixed layer has been checked.
struct Layers {
  const LayerPlan& plan;
  const MoveTables& tables;
  IntMatrix shifts;                   // column g: change of the moving degree under generator g
  std::vector<Word> constant_loops;   // loops translating the top degree by the same amount everywhere
};

Layers analyse(const ClaspVector& v, const LayerPlan& plan, const MoveTables& tables) {
  const auto base = coords(v, plan.moving_degree);
  std::vector<std::vector<Int>> cols;
  for (const auto& g : plan.generators) {
    ClaspVector w = apply_move(v, g, tables);
    for (int d = 1; d <= plan.fixed_degree; ++d) {
      if (coords(w, d) != coords(v, d)) throw std::logic_error("move changes a fixed degree: " + format_move(g));
    }
    cols.push_back(difference(coords(w, plan.moving_degree), base));
  }
  Layers out{plan, tables, matrix_from_columns(static_cast<int>(base.size()), cols), {}};
  if (plan.top_degree == 0) return out;
  const auto& gens = plan.generators;
  for (std::size_t g = 0; g < gens.size(); ++g) {
    if (all_zero(cols[g])) out.constant_loops.push_back({gens[g]});
  }
  // With sources strictly below targets, a commutator of two moves shifts the
  // top degree by a constant: B_r A_s - B_s A_r in terms of the row increments.
  for (std::size_t r = 0; r < gens.size(); ++r) {
    for (std::size_t s = r + 1; s < gens.size(); ++s) {
      out.constant_loops.push_back(
          {with_count(gens[s], -1), with_count(gens[r], -1), with_count(gens[s], 1), with_count(gens[r], 1)});
    }
  }
  return out;
}

std::vector<Int> translation(const ClaspVector& at, const Word& loop, const Layers& L) {
  ClaspVector after = apply_word(at, loop, L.tables);
  if (coords(after, L.plan.moving_degree) != coords(at, L.plan.moving_degree)) {
    throw std::logic_error("loop does not fix the moving degree");
  }
  return difference(coords(after, L.plan.top_degree), coords(at, L.plan.top_degree));
}

// Moves realizing sum c_k loops[k]. A single move loop and a commutator loop
// translate the top degree linearly in their counts (the moves are unipotent
// with a three-layer support), so they scale in place; other loops repeat.
Word expand_loops(const std::vector<Word>& loops, const std::vector<Int>& c) {
  Word out;
  for (std::size_t k = 0; k < loops.size(); ++k) {
    if (c[k] == 0) continue;
    const Word& w = loops[k];
    if (w.size() == 1) {
      out.push_back(with_count(w[0], checked_mul(w[0].count, c[k])));
      continue;
    }
    if (w.size() == 4 && w[0] == with_count(w[2], -w[2].count) && w[1] == with_count(w[3], -w[3].count)) {
      out.insert(out.end(), {w[0], with_count(w[1], checked_mul(w[1].count, c[k])), w[2],
                             with_count(w[3], checked_mul(w[3].count, c[k]))});
      continue;
    }
    Word step = c[k] > 0 ? w : inverse_word(w);
    for (Int t = 0; t < std::llabs(c[k]); ++t) out.insert(out.end(), step.begin(), step.end());
  }
  return out;
}

// A subset of the columns spanning the same integer lattice as all of them,
// taken greedily in order.
std::vector<std::size_t> spanning_subset(const std::vector<std::vector<Int>>& cols, int rows) {
  std::vector<std::size_t> keep;
  std::vector<std::vector<Int>> chosen;
  for (std::size_t k = 0; k < cols.size(); ++k) {
    if (all_zero(cols[k])) continue;
    if (!chosen.empty() && solve_integer(matrix_from_columns(rows, chosen), cols[k])) continue;
    keep.push_back(k);
    chosen.push_back(cols[k]);
  }
  return keep;
}

// Loops whose translations at `at` span the full translation lattice, with
// their translations.
std::pair<std::vector<Word>, std::vector<std::vector<Int>>> spanning_loops(const ClaspVector& at,
                                                                            const std::vector<Word>& loops,
                                                                            const Layers& L) {
  std::vector<std::vector<Int>> cols;
  for (const auto& loop : loops) cols.push_back(translation(at, loop, L));
  const int rows = static_cast<int>(coords(at, L.plan.top_degree).size());
  std::pair<std::vector<Word>, std::vector<std::vector<Int>>> out;
  for (std::size_t k : spanning_subset(cols, rows)) {
    out.first.push_back(loops[k]);
    out.second.push_back(cols[k]);
  }
  return out;
}

std::optional<Word> reach_moving_degree(const ClaspVector& v1, const ClaspVector& v2, const Layers& L,
                                        std::string& why) {
  const int d = L.plan.moving_degree;
  auto k = solve_integer(L.shifts, difference(coords(v2, d), coords(v1, d)));
  if (!k) {
    why = "degree-" + std::to_string(d) + " difference [" + describe_difference(v1, v2, d) +
          "] is not an integer combination of the move increments fixed by the lower degrees";
    return std::nullopt;
  }
  Word w;
  for (std::size_t g = 0; g < k->size(); ++g) {
    if ((*k)[g] != 0) w.push_back(with_count(L.plan.generators[g], (*k)[g]));
  }
  return w;
}

OrbitVerdict decide_by_lattice(const ClaspVector& v1, const ClaspVector& v2, const Layers& L) {
  std::string why;
  auto first = reach_moving_degree(v1, v2, L, why);
  if (!first) return distinct(why);
  ClaspVector mid = apply_word(v1, *first, L.tables);
  if (L.plan.top_degree == 0) {
    if (!(mid == v2)) throw std::logic_error("moving degree matched but vectors differ");
    return equivalent(v1, v2, *first, L.tables);
  }
  // Every path from v1 to the moving-degree values of v2 lands in mid plus the
  // lattice of loop translations at those values, so membership is exact.
  // Constant loops come first since they expand compactly.
  std::vector<Word> candidates = L.constant_loops;
  for (const auto& kappa : integer_kernel(L.shifts)) {
    Word w;
    for (std::size_t g = 0; g < kappa.size(); ++g) {
      if (kappa[g] != 0) w.push_back(with_count(L.plan.generators[g], kappa[g]));
    }
    candidates.push_back(std::move(w));
  }
  const int t = L.plan.top_degree;
  auto [loops, cols] = spanning_loops(mid, candidates, L);
  const auto target = difference(coords(v2, t), coords(mid, t));
  auto c = solve_integer(matrix_from_columns(static_cast<int>(target.size()), cols), target);
  if (!c) {
    return distinct("degree-" + std::to_string(t) + " values [" + describe_difference(mid, v2, t) +
                    "] after matching degree " + std::to_string(L.plan.moving_degree) +
                    " differ by a vector outside the lattice of loop translations");
  }
  Word witness = *first;
  Word tail = expand_loops(loops, *c);
  witness.insert(witness.end(), tail.begin(), tail.end());
  return equivalent(v1, v2, std::move(witness), L.tables);
}

OrbitVerdict decide_by_search(const ClaspVector& v1, const ClaspVector& v2, const Layers& L,
                              std::size_t budget) {
  std::string why;
  if (!reach_moving_degree(v1, v2, L, why)) return distinct(why);
  const int d = L.plan.moving_degree, t = L.plan.top_degree;
  const auto [window_loops, cols] = spanning_loops(v1, L.constant_loops, L);
  const int top_size = static_cast<int>(coords(v1, t).size());
  const IntMatrix window = matrix_from_columns(top_size, cols);
  auto key = [&](const ClaspVector& v) {
    std::vector<Int> k = coords(v, d);
    auto z = cols.empty() ? coords(v, t) : reduce_modulo_lattice(coords(v, t), window);
    k.insert(k.end(), z.begin(), z.end());
    return k;
  };

  struct Node {
    ClaspVector v;
    int parent;
    Move via;
  };
  std::vector<Node> nodes{{v1, -1, {}}};
  std::map<std::vector<Int>, int> visited{{key(v1), 0}};
  const auto goal = key(v2);
  std::deque<int> queue{0};
  while (!queue.empty()) {
    const int at = queue.front();
    queue.pop_front();
    if (key(nodes[at].v) == goal) {
      Word path;
      for (int p = at; nodes[p].parent >= 0; p = nodes[p].parent) path.push_back(nodes[p].via);
      std::reverse(path.begin(), path.end());
      const auto diff = difference(coords(v2, t), coords(nodes[at].v, t));
      auto c = cols.empty() ? std::optional<std::vector<Int>>(std::vector<Int>{}) : solve_integer(window, diff);
      if (!c) throw std::logic_error("canonical keys agree but the window lattice misses the difference");
      Word tail = expand_loops(window_loops, *c);
      path.insert(path.end(), tail.begin(), tail.end());
      return equivalent(v1, v2, std::move(path), L.tables);
    }
    for (const auto& g : L.plan.generators) {
      for (Int s : {Int{1}, Int{-1}}) {
        if (visited.size() >= budget) {
          return unknown("search budget of " + std::to_string(budget) + " states exhausted");
        }
        Move m = with_count(g, s);
        ClaspVector next = apply_move(nodes[at].v, m, L.tables);
        auto k = key(next);
        if (visited.count(k)) continue;
        visited.emplace(std::move(k), static_cast<int>(nodes.size()));
        nodes.push_back({std::move(next), at, m});
        queue.push_back(static_cast<int>(nodes.size()) - 1);
      }
    }
  }
  return distinct("search space exhausted without reaching the target");
}

ClaspVector conjugate_power(const ClaspVector& v, const PartialConjugation& pc, Int count) {
  validate_partial_conjugation(pc, v.strands());
  if (count == 0) return v;
  const int n = v.strands();
  const int i = pc.strand;
  ClaspVector avoiding(n);
  for (int k = 0; k < v.size(); ++k) {
    const auto& seq = v.index()[k].sequence;
    if (std::find(seq.begin(), seq.end(), i) == seq.end()) avoiding[k] = v[k];
  }
  // theta is the normal form of the braid with strand i forgotten, reinserted;
  // omega = theta^-1 b lies in the subgroup of claspers through strand i.
  const BraidWord theta = clasp_vector_to_braid(avoiding);
  const BraidWord omega = compose(invert(theta), clasp_vector_to_braid(v));
  const BraidWord lambda = power(
      expand_pure_generator({std::min(i, pc.conjugator), std::max(i, pc.conjugator)}, n),
      checked_mul(pc.sign, count));
  return extract_clasp_vector(compose(compose(theta, lambda), compose(omega, invert(lambda))));
}

}  // namespace

ClaspVector partial_conjugate(const ClaspVector& v, const PartialConjugation& pc) {
  return conjugate_power(v, pc, 1);
}

ClaspVector apply_table_move(const ClaspVector& v, const MoveRow& row, Int multiplier) {
  if (row.n != v.strands()) {
    throw InvalidInput(row.table + " row " + std::to_string(row.row) + " is for " + std::to_string(row.n) +
                       " strands, vector has " + std::to_string(v.strands()));
  }
  ClaspVector out = v;
  for (const auto& inc : row.increments) {
    Int sum = 0;
    for (const auto& s : inc.sources) checked_fma(sum, s.sign, v[s.clasper]);
    checked_fma(out[inc.target], multiplier, sum);
  }
  return out;
}

Move Move::table_move(std::string table, int row, Int multiplier) {
  Move m;
  m.kind = Kind::Table;
  m.table = std::move(table);
  m.row = row;
  m.count = multiplier;
  return m;
}

Move Move::conjugation(PartialConjugation pc, Int count) {
  Move m;
  m.kind = Kind::Conjugation;
  m.pc = pc;
  m.count = count;
  return m;
}

std::string format_move(const Move& m) {
  if (m.kind == Move::Kind::Table) {
    return m.table + "#" + std::to_string(m.row) + (m.count == 1 ? "" : "^" + std::to_string(m.count));
  }
  return "pc(" + std::to_string(m.pc.strand) + " by " + std::to_string(m.pc.conjugator) +
         (m.pc.sign > 0 ? "" : "^-1") + ")" + (m.count == 1 ? "" : "^" + std::to_string(m.count));
}

ClaspVector apply_move(const ClaspVector& v, const Move& m, const MoveTables& tables) {
  if (m.kind == Move::Kind::Table) return apply_table_move(v, tables.find(m.table, m.row), m.count);
  return conjugate_power(v, m.pc, m.count);
}

ClaspVector replay_witness(const ClaspVector& v, const std::vector<Move>& witness, const MoveTables& tables) {
  return apply_word(v, witness, tables);
}

std::string to_string(OrbitVerdict::Status s) {
  switch (s) {
    case OrbitVerdict::Status::Equivalent:
      return "Equivalent";
    case OrbitVerdict::Status::Distinct:
      return "Distinct";
    case OrbitVerdict::Status::Unknown:
      return "Unknown";
  }
  return "Unknown";
}

std::size_t default_search_budget() {
  constexpr std::size_t fallback = 100000;
  const char* env = std::getenv("LH_SEARCH_BUDGET");
  if (!env || !*env) return fallback;
  char* end = nullptr;
  unsigned long long v = std::strtoull(env, &end, 10);
  if (*end != '\0' || v == 0) return fallback;
  return static_cast<std::size_t>(v);
}

MilnorTriplet milnor_triplet(const ClaspVector& v) {
  if (v.strands() != 3) throw InvalidInput("milnor triplet needs 3 strands");
  MilnorTriplet m;
  m.nu12 = v.get(std::vector<int>{1, 2});
  m.nu13 = v.get(std::vector<int>{1, 3});
  m.nu23 = v.get(std::vector<int>{2, 3});
  m.modulus = std::gcd(std::gcd(m.nu12, m.nu13), m.nu23);
  const Int top = v.get(std::vector<int>{1, 2, 3});
  m.residue = m.modulus == 0 ? top : floor_mod(top, m.modulus);
  return m;
}

std::optional<LayerPlan> layer_plan(const ClaspVector& v) {
  const int n = v.strands();
  LayerPlan plan;
  auto add_table = [&](std::string_view id) {
    for (const MoveRow* r : embedded_move_tables().table(id)) plan.generators.push_back(Move::table_move(r->table, r->row, 1));
  };
  if (n == 3) {
    plan = {1, 2, 0, {}};
    for (int i = 1; i <= 3; ++i) {
      for (int j = 1; j <= 3; ++j) {
        if (i != j) plan.generators.push_back(Move::conjugation({i, j, 1}, 1));
      }
    }
    return plan;
  }
  if (n == 4) {
    plan = {1, 2, 3, {}};
    add_table(table_id::kGenerating4);
    add_table(table_id::kSameClosure4);
    return plan;
  }
  if (n == 5 && all_zero(coords(v, 1))) {
    plan = {2, 3, 4, {}};
    add_table(table_id::kGenerating5Split);
    add_table(table_id::kSameClosure5);
    return plan;
  }
  return std::nullopt;
}

OrbitVerdict closure_equivalent(const ClaspVector& v1, const ClaspVector& v2, const ClosureOptions& opts) {
  if (v1.strands() != v2.strands()) {
    throw InvalidInput("strand count mismatch: " + std::to_string(v1.strands()) + " vs " +
                       std::to_string(v2.strands()));
  }
  const int n = v1.strands();
  if (n > 5) throw InvalidInput("closure decision supports at most 5 strands");
  if (coords(v1, 1) != coords(v2, 1)) {
    return distinct("linking numbers differ: " + describe_difference(v1, v2, 1));
  }
  if (v1 == v2) return {OrbitVerdict::Status::Equivalent, {}, {}};
  if (n <= 2) throw std::logic_error("two-strand vectors with equal linking number must coincide");
  try {
    if (n == 3) {
      const auto m1 = milnor_triplet(v1), m2 = milnor_triplet(v2);
      if (m1.residue != m2.residue) {
        return distinct("nu(1.2.3) residues modulo gcd " + std::to_string(m1.modulus) + " differ: " +
                        std::to_string(m1.residue) + " vs " + std::to_string(m2.residue));
      }
    }
    auto plan = layer_plan(v1);
    if (!plan) return unknown("5-strand vectors with nonzero linking numbers are outside the decided range");
    for (int d = 2; d <= plan->fixed_degree; ++d) {
      if (coords(v1, d) != coords(v2, d)) {
        return distinct("degree-" + std::to_string(d) + " values are invariant here and differ: " +
                        describe_difference(v1, v2, d));
      }
    }
    const Layers layers = analyse(v1, *plan, embedded_move_tables());
    if (opts.strategy == SearchStrategy::Bfs && plan->top_degree != 0) {
      return decide_by_search(v1, v2, layers, opts.budget);
    }
    return decide_by_lattice(v1, v2, layers);
  } catch (const OverflowError&) {
    return unknown("integer overflow in exact arithmetic");
  }
}

}  // namespace lh
