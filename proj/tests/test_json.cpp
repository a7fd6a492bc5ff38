#include <doctest.h>

#include "lh/json_io.hpp"
#include "support/golden.hpp"
#include "support/random_inputs.hpp"

using namespace lh;

TEST_CASE("series round trip") {
  testing::Rng rng(83);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = testing::uniform(rng, 1, 5);
    auto s = magnus_expand(testing::random_reduced_word(rng, n, 10));
    CHECK(series_from_json(parse_json_text(to_json(s).dump()), n) == s);
  }
  auto x = series_from_json(parse_json_text(R"({"": 1, "1.2": -3})"), 2);
  CHECK(x.coefficient(std::vector<int>{1, 2}) == -3);
  CHECK_THROWS_AS(series_from_json(parse_json_text(R"({"1.1": 1})"), 2), InvalidInput);
  CHECK_THROWS_AS(series_from_json(parse_json_text(R"({"3": 1})"), 2), InvalidInput);
  CHECK_THROWS_AS(series_from_json(parse_json_text(R"({"1": 1.5})"), 2), InvalidInput);
  CHECK_THROWS_AS(parse_json_text("{"), InvalidInput);
}

TEST_CASE("exponent vector round trip") {
  testing::Rng rng(89);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = testing::uniform(rng, 1, 5);
    auto basis = enumerate_basic_commutators(n);
    auto e = rfg_normal_form(testing::random_reduced_word(rng, n, 10), basis);
    CHECK(exponents_from_json(parse_json_text(to_json(e).dump()), basis) == e);
  }
  CHECK_THROWS_AS(exponents_from_json(parse_json_text(R"({"2.1": 1})"), enumerate_basic_commutators(2)),
                  InvalidInput);
}

TEST_CASE("gamma matrix document") {
  auto g = gamma_matrix(parse_braid_word("s1", 3));
  auto j = to_json(g);
  CHECK(j.dump() ==
        R"({"basis_order":[[1],[2],[3],[1,2],[1,3],[2,3],[1,2,3],[1,3,2]],"rows":[[0,1,0,0,0,0,0,0],)"
        R"([1,0,0,0,0,0,0,0],[0,0,1,0,0,0,0,0],[0,1,0,-1,0,0,0,0],[0,0,0,0,0,1,0,0],[0,0,0,0,1,0,0,0],)"
        R"([0,0,0,0,0,1,-1,-1],[0,0,0,0,0,0,0,1]]})");
  CHECK(gamma_from_json(parse_json_text(j.dump())) == g);
  auto rev = gamma_matrix(parse_braid_word("s2 s1^-1", 4), enumerate_basic_commutators(4, BasisOrder::WeightRevLex));
  CHECK(gamma_from_json(parse_json_text(to_json(rev).dump())) == rev);
  CHECK_THROWS_AS(gamma_from_json(parse_json_text(R"({"basis_order":[[2],[1]],"rows":[[1,0],[0,1]]})")),
                  InvalidInput);
  CHECK_THROWS_AS(gamma_from_json(parse_json_text(R"({"basis_order":[[1]],"rows":[[1,0]]})")), InvalidInput);
}

TEST_CASE("clasp vector document") {
  ClaspVector v(3);
  v.set(std::vector<int>{1, 3}, 1);
  v.set(std::vector<int>{1, 2, 3}, -5);
  auto j = to_json(v);
  CHECK(j.dump() == R"({"n":3,"order":"degree-lex","nu":{"1.2":0,"1.3":1,"2.3":0,"1.2.3":-5}})");
  CHECK(clasp_vector_from_json(j) == v);
  // omitted entries are zero
  CHECK(clasp_vector_from_json(parse_json_text(R"({"n":3,"nu":{"1.3":1,"1.2.3":-5}})")) == v);
  testing::Rng rng(97);
  for (int trial = 0; trial < 30; ++trial) {
    auto w = testing::random_clasp_vector(rng, testing::uniform(rng, 1, 6), 9);
    CHECK(clasp_vector_from_json(parse_json_text(to_json(w).dump())) == w);
  }
  CHECK_THROWS_AS(clasp_vector_from_json(parse_json_text(R"({"n":3,"nu":{"2.1.3":1}})")), InvalidInput);
  CHECK_THROWS_AS(clasp_vector_from_json(parse_json_text(R"({"n":3,"order":"lex"})")), InvalidInput);
  CHECK_THROWS_AS(clasp_vector_from_json(parse_json_text(R"({"n":0})")), InvalidInput);
  CHECK_THROWS_AS(clasp_vector_from_json(parse_json_text(R"({"nu":{}})")), InvalidInput);
}

TEST_CASE("moves and verdicts") {
  std::vector<Move> moves{Move::table_move("generating-4", 3, -2), Move::conjugation({2, 4, -1}, 5)};
  for (const auto& m : moves) CHECK(move_from_json(parse_json_text(to_json(m).dump())) == m);
  CHECK(to_json(moves[1]).dump() == R"({"move":"pc","strand":2,"by":4,"sign":-1,"count":5})");
  CHECK(format_move(moves[0]) == "generating-4#3^-2");
  OrbitVerdict v{OrbitVerdict::Status::Equivalent, moves, ""};
  auto back = verdict_from_json(parse_json_text(to_json(v).dump()));
  CHECK(back.status == v.status);
  CHECK(back.witness == v.witness);
  CHECK_THROWS_AS(move_from_json(parse_json_text(R"({"move":"swap"})")), InvalidInput);
  CHECK_THROWS_AS(verdict_from_json(parse_json_text(R"({"status":"Maybe"})")), InvalidInput);
}

TEST_CASE("table data round trip") {
  const auto& t = embedded_move_tables();
  auto text = to_json(t).dump();
  auto again = parse_move_tables(text);
  CHECK(to_json(again).dump() == text);
  // the shipped file and the re-serialized form describe the same rows
  CHECK(to_json(parse_move_tables(embedded_move_tables_text())).dump() == text);
}
