#include <doctest.h>

#include "lh/closure.hpp"
#include "lh/lattice.hpp"
#include "support/random_inputs.hpp"

using namespace lh;

namespace {

using Status = OrbitVerdict::Status;

ClaspVector vec(int n, std::initializer_list<std::pair<std::vector<int>, Int>> entries) {
  ClaspVector v(n);
  for (const auto& [s, x] : entries) v.set(s, x);
  return v;
}

Int nu(const ClaspVector& v, std::vector<int> s) { return v.get(s); }

// A row as the flattened matrix of its increment map.
std::vector<Int> increment_map(const MoveRow& r) {
  const int m = ClasperIndex::of(r.n)->size();
  std::vector<Int> out(static_cast<std::size_t>(m) * m, 0);
  for (const auto& inc : r.increments) {
    for (const auto& s : inc.sources) out[inc.target * m + s.clasper] += s.sign;
  }
  return out;
}

std::vector<PartialConjugation> all_pcs(int n) {
  std::vector<PartialConjugation> out;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (i != j) {
        out.push_back({i, j, 1});
        out.push_back({i, j, -1});
      }
    }
  }
  return out;
}

// Random walk of table moves and word-level partial conjugations.
ClaspVector scramble(const ClaspVector& v, testing::Rng& rng, int steps) {
  ClaspVector out = v;
  auto plan = layer_plan(v);
  auto pcs = all_pcs(v.strands());
  for (int k = 0; k < steps; ++k) {
    if (plan && testing::uniform(rng, 0, 1)) {
      Move m = plan->generators[testing::uniform(rng, 0, static_cast<int>(plan->generators.size()) - 1)];
      m.count = testing::uniform(rng, -2, 2);
      out = apply_move(out, m);
    } else {
      out = partial_conjugate(out, pcs[testing::uniform(rng, 0, static_cast<int>(pcs.size()) - 1)]);
    }
  }
  return out;
}

MoveTables parse_one(const std::string& row) { return parse_move_tables("[" + row + "]"); }

}  // namespace

TEST_CASE("embedded tables") {
  const auto& t = embedded_move_tables();
  CHECK(t.table_ids() == std::vector<std::string>{"same-closure-4", "partial-conjugation-4", "generating-4",
                                                  "same-closure-5", "generating-5-split"});
  CHECK(t.table(table_id::kSameClosure4).size() == 6);
  CHECK(t.table(table_id::kPartialConjugation4).size() == 12);
  CHECK(t.table(table_id::kGenerating4).size() == 8);
  CHECK(t.table(table_id::kSameClosure5).size() == 20);
  CHECK(t.table(table_id::kGenerating5Split).size() == 15);
  for (const auto& r : t.rows()) {
    CHECK(r.n == (r.table.back() == '4' ? 4 : 5));
    for (const auto& inc : r.increments) {
      for (const auto& s : inc.sources) {
        CHECK(ClasperIndex::of(r.n)->claspers()[s.clasper].degree() <
              ClasperIndex::of(r.n)->claspers()[inc.target].degree());
      }
    }
  }
  // guards against accidental edits of the data file
  CHECK(embedded_tables_checksum() == 6966724208027835022ull);
  CHECK_THROWS_AS(t.table("no-such-table"), InvalidInput);
  CHECK_THROWS_AS(t.find(table_id::kGenerating4, 9), InvalidInput);
}

TEST_CASE("table validation rejects malformed rows") {
  CHECK_NOTHROW(parse_one(R"({"table":"x","row":1,"increments":{"1.2.3":[["1.3",1]]}})"));
  CHECK_THROWS_AS(parse_move_tables("{"), InvalidInput);
  CHECK_THROWS_AS(parse_move_tables(R"({"table":"x"})"), InvalidInput);
  // source not of lower degree
  CHECK_THROWS_AS(parse_one(R"({"table":"x","row":1,"increments":{"1.2.3":[["1.3.2",1]]}})"), InvalidInput);
  // not a comb-clasper
  CHECK_THROWS_AS(parse_one(R"({"table":"x","row":1,"increments":{"2.1.3":[["1.3",1]]}})"), InvalidInput);
  // a source that the same row also writes
  CHECK_THROWS_AS(
      parse_one(R"({"table":"x","row":1,"increments":{"1.2.3":[["1.3",1]],"1.3":[["1.2",1]]}})"),
      InvalidInput);
  CHECK_THROWS_AS(parse_one(R"({"table":"x","row":1,"pc":[1,1,1],"increments":{"1.2.3":[["1.3",1]]}})"),
                  InvalidInput);
  CHECK_THROWS_AS(parse_move_tables(R"([{"table":"x","row":1,"increments":{"1.2.3":[["1.3",1]]}},
                                        {"table":"x","row":1,"increments":{"1.2.3":[["1.2",1]]}}])"),
                  InvalidInput);
}

TEST_CASE("table moves") {
  const auto& t = embedded_move_tables();
  testing::Rng rng(67);
  auto v = testing::random_clasp_vector(rng, 4, 3);
  auto w = apply_table_move(v, t.find(table_id::kSameClosure4, 1), 1);
  CHECK(nu(w, {1, 2, 3, 4}) == nu(v, {1, 2, 3, 4}) + nu(v, {1, 2}));
  for (int k = 0; k < v.size(); ++k) {
    if (v.index()[k].sequence != std::vector<int>{1, 2, 3, 4}) CHECK(w[k] == v[k]);
  }
  for (const auto& r : t.rows()) {
    auto u = testing::random_clasp_vector(rng, r.n, 3);
    CHECK(apply_table_move(u, r, 0) == u);
    // a multiplier is the same as repeating the row
    CHECK(apply_table_move(u, r, 3) == apply_table_move(apply_table_move(apply_table_move(u, r, 1), r, 1), r, 1));
    CHECK(apply_table_move(apply_table_move(u, r, 2), r, -2) == u);
  }
  auto u = testing::random_clasp_vector(rng, 5, 3);
  auto x = apply_table_move(u, t.find(table_id::kGenerating5Split, 1), 1);
  CHECK(nu(x, {1, 2, 3, 4}) == nu(u, {1, 2, 3, 4}) + nu(u, {1, 3, 4}));
  CHECK(nu(x, {1, 2, 3, 5}) == nu(u, {1, 2, 3, 5}) + nu(u, {1, 3, 5}));
  CHECK(nu(x, {1, 2, 4, 5}) == nu(u, {1, 2, 4, 5}) + nu(u, {1, 4, 5}));
  CHECK(nu(x, {1, 2, 3, 4, 5}) == nu(u, {1, 2, 3, 4, 5}) + nu(u, {1, 3, 4, 5}));
  CHECK(nu(x, {1, 2, 4, 3, 5}) == nu(u, {1, 2, 4, 3, 5}) + nu(u, {1, 4, 3, 5}));
  CHECK_THROWS_AS(apply_table_move(ClaspVector(4), t.find(table_id::kSameClosure5, 1), 1), InvalidInput);
}

TEST_CASE("every partial-conjugation row is generated by the generating rows") {
  const auto& t = embedded_move_tables();
  std::vector<std::vector<Int>> cols;
  for (const auto* r : t.table(table_id::kGenerating4)) cols.push_back(increment_map(*r));
  const int size = static_cast<int>(cols[0].size());
  auto g = matrix_from_columns(size, cols);
  for (const auto* r : t.table(table_id::kPartialConjugation4)) {
    CHECK_MESSAGE(solve_integer(g, increment_map(*r)).has_value(), "row " << r->row);
  }
}

TEST_CASE("word-level partial conjugation") {
  testing::Rng rng(71);
  SUBCASE("two strands: nothing changes") {
    auto v = vec(2, {{{1, 2}, 4}});
    CHECK(partial_conjugate(v, {1, 2, 1}) == v);
    CHECK(partial_conjugate(v, {2, 1, -1}) == v);
  }
  SUBCASE("three strands: nu123 gains nu13") {
    for (int trial = 0; trial < 20; ++trial) {
      auto v = testing::random_clasp_vector(rng, 3, 4);
      auto w = partial_conjugate(v, {1, 2, 1});
      for (int k = 0; k < 3; ++k) CHECK(w[k] == v[k]);
      CHECK(nu(w, {1, 2, 3}) == nu(v, {1, 2, 3}) + nu(v, {1, 3}));
      CHECK(partial_conjugate(w, {1, 2, -1}) == v);
    }
  }
  SUBCASE("four strands, split inputs: the table row is exact") {
    const auto& t = embedded_move_tables();
    for (int trial = 0; trial < 10; ++trial) {
      auto v = testing::random_clasp_vector(rng, 4, 3, true);
      for (const auto* r : t.table(table_id::kPartialConjugation4)) {
        CHECK(partial_conjugate(v, *r->pc) == apply_table_move(v, *r, 1));
      }
      auto w = partial_conjugate(v, {2, 4, 1});
      CHECK(nu(w, {1, 2, 4}) == nu(v, {1, 2, 4}) + nu(v, {1, 2}));
      CHECK(nu(w, {2, 3, 4}) == nu(v, {2, 3, 4}) - nu(v, {2, 3}));
      CHECK(nu(w, {1, 3, 2, 4}) == nu(v, {1, 3, 2, 4}) - nu(v, {1, 2, 3}));
    }
  }
  SUBCASE("four strands, general inputs: exact below the top degree, same closure at the top") {
    const auto& t = embedded_move_tables();
    for (int trial = 0; trial < 10; ++trial) {
      auto v = testing::random_clasp_vector(rng, 4, 3);
      for (const auto* r : t.table(table_id::kPartialConjugation4)) {
        auto word = partial_conjugate(v, *r->pc), table = apply_table_move(v, *r, 1);
        auto [lo, hi] = v.index().degree_range(3);
        for (int k = 0; k < lo; ++k) CHECK(word[k] == table[k]);
        CHECK(closure_equivalent(word, table).status == Status::Equivalent);
      }
    }
  }
  SUBCASE("linking numbers never change") {
    for (int trial = 0; trial < 30; ++trial) {
      const int n = testing::uniform(rng, 2, 5);
      auto v = testing::random_clasp_vector(rng, n, 2);
      for (const auto& pc : all_pcs(n)) {
        if (testing::uniform(rng, 0, 3)) continue;
        auto w = partial_conjugate(v, pc);
        auto [lo, hi] = v.index().degree_range(1);
        for (int k = lo; k < hi; ++k) CHECK(w[k] == v[k]);
      }
    }
  }
  CHECK_THROWS_AS(partial_conjugate(ClaspVector(3), {1, 1, 1}), InvalidInput);
  CHECK_THROWS_AS(partial_conjugate(ClaspVector(3), {1, 4, 1}), InvalidInput);
  CHECK_THROWS_AS(partial_conjugate(ClaspVector(3), {1, 2, 2}), InvalidInput);
}

TEST_CASE("Milnor triplet") {
  CHECK(milnor_triplet(ClaspVector(3)) == MilnorTriplet{0, 0, 0, 0, 0});
  auto m = milnor_triplet(vec(3, {{{1, 2}, 2}, {{1, 3}, 4}, {{2, 3}, 6}, {{1, 2, 3}, 7}}));
  CHECK(m == MilnorTriplet{2, 4, 6, 2, 1});
  CHECK(milnor_triplet(vec(3, {{{1, 2, 3}, -9}})).residue == -9);
  CHECK(milnor_triplet(vec(3, {{{1, 2}, 3}, {{1, 2, 3}, -1}})).residue == 2);
  CHECK_THROWS_AS(milnor_triplet(ClaspVector(4)), InvalidInput);
}

TEST_CASE("closure decisions on small examples") {
  CHECK(closure_equivalent(vec(2, {{{1, 2}, 3}}), vec(2, {{{1, 2}, 3}})).status == Status::Equivalent);
  CHECK(closure_equivalent(vec(2, {{{1, 2}, 3}}), vec(2, {{{1, 2}, 2}})).status == Status::Distinct);
  CHECK(closure_equivalent(vec(3, {{{1, 2, 3}, 1}}), ClaspVector(3)).status == Status::Distinct);
  auto a = vec(3, {{{1, 3}, 1}, {{1, 2, 3}, 5}}), b = vec(3, {{{1, 3}, 1}});
  auto verdict = closure_equivalent(a, b);
  REQUIRE(verdict.status == Status::Equivalent);
  CHECK(replay_witness(a, verdict.witness) == b);
  // gcd 2 makes nu123 = 1 and 3 equivalent but 1 and 2 not
  auto c = vec(3, {{{1, 2}, 2}, {{1, 3}, 4}, {{2, 3}, 6}, {{1, 2, 3}, 1}});
  auto d = c, e = c;
  d.set(std::vector<int>{1, 2, 3}, 3);
  e.set(std::vector<int>{1, 2, 3}, 2);
  CHECK(closure_equivalent(c, d).status == Status::Equivalent);
  CHECK(closure_equivalent(c, e).status == Status::Distinct);
  CHECK_THROWS_AS(closure_equivalent(ClaspVector(3), ClaspVector(4)), InvalidInput);
  CHECK_THROWS_AS(closure_equivalent(ClaspVector(6), ClaspVector(6)), InvalidInput);
  // five strands with linking: decided only when trivially equal or separated by linking numbers
  auto f = vec(5, {{{1, 2}, 1}});
  CHECK(closure_equivalent(f, f).status == Status::Equivalent);
  CHECK(closure_equivalent(f, vec(5, {{{1, 2}, 1}, {{1, 2, 3}, 1}})).status == Status::Unknown);
  CHECK(closure_equivalent(f, ClaspVector(5)).status == Status::Distinct);
  // split five strands: degree 2 is invariant
  CHECK(closure_equivalent(vec(5, {{{1, 2, 3}, 1}}), ClaspVector(5)).status == Status::Distinct);
}

TEST_CASE("witnesses replay and verdicts are symmetric") {
  testing::Rng rng(73);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = testing::uniform(rng, 3, 5);
    auto v1 = testing::random_clasp_vector(rng, n, 3, n == 5);
    auto v2 = scramble(v1, rng, 4);
    auto fwd = closure_equivalent(v1, v2);
    REQUIRE(fwd.status == Status::Equivalent);
    CHECK(replay_witness(v1, fwd.witness) == v2);
    auto back = closure_equivalent(v2, v1);
    CHECK(back.status == Status::Equivalent);
    CHECK(replay_witness(v2, back.witness) == v1);
  }
  for (int trial = 0; trial < 60; ++trial) {
    const int n = testing::uniform(rng, 3, 5);
    auto v1 = testing::random_clasp_vector(rng, n, 2, n == 5);
    auto v2 = v1;
    // perturb one coordinate above degree 1 so the question is not settled by linking numbers
    auto [lo, hi] = v1.index().degree_range(n == 5 ? 3 : 2);
    v2[testing::uniform(rng, lo, v1.size() - 1)] += testing::uniform(rng, 1, 2);
    auto fwd = closure_equivalent(v1, v2), back = closure_equivalent(v2, v1);
    CHECK(fwd.status == back.status);
    if (fwd.status == Status::Equivalent) CHECK(replay_witness(v1, fwd.witness) == v2);
    if (fwd.status == Status::Distinct) CHECK_FALSE(fwd.invariant.empty());
  }
}

TEST_CASE("breadth-first search agrees with the lattice decision") {
  testing::Rng rng(79);
  ClosureOptions bfs;
  bfs.strategy = SearchStrategy::Bfs;
  bfs.budget = 20000;
  int decided = 0;
  for (int trial = 0; trial < 20; ++trial) {
    auto v1 = testing::random_clasp_vector(rng, 4, 1);
    auto v2 = trial % 2 ? scramble(v1, rng, 2) : testing::random_clasp_vector(rng, 4, 1);
    for (int k = 0; k < 6; ++k) v2[k] = v1[k];
    auto exact = closure_equivalent(v1, v2);
    auto searched = closure_equivalent(v1, v2, bfs);
    CHECK(exact.status != Status::Unknown);
    if (searched.status == Status::Unknown) continue;
    ++decided;
    CHECK(searched.status == exact.status);
    if (searched.status == Status::Equivalent) CHECK(replay_witness(v1, searched.witness) == v2);
  }
  CHECK(decided > 0);
  bfs.budget = 1;
  auto v = vec(4, {{{1, 2}, 1}, {{1, 3, 4}, 1}});
  auto w = vec(4, {{{1, 2}, 1}, {{1, 3, 4}, 1}, {{1, 2, 3, 4}, 5}});
  auto tiny = closure_equivalent(v, w, bfs);
  CHECK(tiny.status != Status::Distinct);
}

TEST_CASE("search budget from the environment") {
  setenv("LH_SEARCH_BUDGET", "1234", 1);
  CHECK(default_search_budget() == 1234);
  setenv("LH_SEARCH_BUDGET", "junk", 1);
  CHECK(default_search_budget() == 100000);
  unsetenv("LH_SEARCH_BUDGET");
  CHECK(default_search_budget() == 100000);
}
