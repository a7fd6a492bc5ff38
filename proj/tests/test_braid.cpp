#include <doctest.h>

#include "lh/braid.hpp"
#include "support/random_inputs.hpp"

using namespace lh;

namespace {

std::vector<Letter> L(std::initializer_list<std::pair<int, int>> xs) {
  std::vector<Letter> out;
  for (auto [i, s] : xs) out.push_back({i, s});
  return out;
}

}  // namespace

TEST_CASE("parse braid words") {
  CHECK(parse_braid_word("s1 s2", 3).letters() == L({{1, 1}, {2, 1}}));
  CHECK(parse_braid_word("", 4).empty());
  CHECK(parse_braid_word("  s2^-1\ts1 ", 3).letters() == L({{2, -1}, {1, 1}}));
  CHECK(parse_braid_word("a1,3", 3).letters() == L({{2, 1}, {1, 1}, {1, 1}, {2, -1}}));
  CHECK(parse_braid_word("a1,3^-1", 3).letters() == L({{2, 1}, {1, -1}, {1, -1}, {2, -1}}));
  CHECK_THROWS_AS(parse_braid_word("s5", 3), InvalidInput);
  CHECK_THROWS_AS(parse_braid_word("s0", 3), InvalidInput);
  CHECK_THROWS_AS(parse_braid_word("t1", 3), InvalidInput);
  CHECK_THROWS_AS(parse_braid_word("s1^2", 3), InvalidInput);
  CHECK_THROWS_AS(parse_braid_word("a2,1", 3), InvalidInput);
  CHECK_THROWS_AS(parse_braid_word("s1", 0), InvalidInput);
}

TEST_CASE("strand count inference takes the largest index") {
  CHECK(infer_strand_count("s1 s3^-1") == 4);
  CHECK(infer_strand_count("a2,5") == 5);
  CHECK(infer_strand_count("") == 1);
}

TEST_CASE("pure generator expansion") {
  CHECK(expand_pure_generator({1, 2}, 2).letters() == L({{1, 1}, {1, 1}}));
  CHECK(expand_pure_generator({1, 3}, 3).letters() == L({{2, 1}, {1, 1}, {1, 1}, {2, -1}}));
  CHECK(expand_pure_generator({2, 4}, 4).letters() == L({{3, 1}, {2, 1}, {2, 1}, {3, -1}}));
  for (int n = 2; n <= 6; ++n) {
    for (int i = 1; i < n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        auto w = expand_pure_generator({i, j}, n);
        CHECK(w.size() == static_cast<std::size_t>(2 * (j - i)));
        CHECK(is_pure(w));
      }
    }
  }
  CHECK_THROWS_AS(expand_pure_generator({2, 2}, 3), InvalidInput);
  CHECK_THROWS_AS(expand_pure_generator({1, 4}, 3), InvalidInput);
}

TEST_CASE("compose, invert and free reduction") {
  BraidWord s1 = parse_braid_word("s1", 3), s2 = parse_braid_word("s2", 3);
  CHECK(compose(s1, invert(s1)).empty());
  CHECK(compose(BraidWord(3), s1) == s1);
  CHECK(compose(s1, s2).letters() == L({{1, 1}, {2, 1}}));
  CHECK(invert(compose(s1, s2)).letters() == L({{2, -1}, {1, -1}}));
  CHECK(invert(BraidWord(3)).empty());
  CHECK(invert(expand_pure_generator({1, 3}, 3)).letters() == L({{2, 1}, {1, -1}, {1, -1}, {2, -1}}));
  CHECK_THROWS_AS(compose(s1, BraidWord(4)), InvalidInput);
  CHECK(power(s1, 3).size() == 3);
  CHECK(power(s1, -2).letters() == L({{1, -1}, {1, -1}}));
  CHECK(power(s1, 0).empty());
}

TEST_CASE("permutations follow the word left to right") {
  auto p = permutation_of(parse_braid_word("s1", 3));
  CHECK(p.images == std::vector<int>{2, 1, 3});
  CHECK(permutation_of(parse_braid_word("a1,3", 3)).is_identity());
  // (1 2) then (2 3): strand starting at 1 ends at 3, 2 ends at 1, 3 ends at 2
  CHECK(permutation_of(parse_braid_word("s1 s2", 3)).images == std::vector<int>{3, 1, 2});
  CHECK_FALSE(is_pure(parse_braid_word("s1 s2", 3)));
}

TEST_CASE("braid word properties on random inputs") {
  testing::Rng rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = testing::uniform(rng, 2, 6);
    auto a = testing::random_braid(rng, n, 12), b = testing::random_braid(rng, n, 12),
         c = testing::random_braid(rng, n, 12);
    // format and parse round trip
    CHECK(parse_braid_word(format_braid_word(a), n) == a);
    CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
    CHECK(invert(invert(a)) == a);
    CHECK(compose(a, invert(a)).empty());
    CHECK(permutation_of(compose(a, b)) == permutation_of(a).then(permutation_of(b)));
  }
}

TEST_CASE("forgetting strands") {
  // forgetting the middle strand of A13 leaves A12 on two strands
  auto w = forget_strands(expand_pure_generator({1, 3}, 3), {1, 3});
  CHECK(w.strands() == 2);
  CHECK(w.letters() == L({{1, 1}, {1, 1}}));
  // forgetting a strand that takes part in the only clasp leaves the identity
  CHECK(forget_strands(expand_pure_generator({1, 2}, 3), {1, 3}).empty());
  CHECK(forget_strands(expand_pure_generator({2, 3}, 3), {2, 3}) == expand_pure_generator({1, 2}, 2));
  testing::Rng rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    auto a = testing::random_pure_braid(rng, 4, 6), b = testing::random_pure_braid(rng, 4, 6);
    // forgetting is a homomorphism on pure braids (compared as reduced words after composing)
    CHECK(compose(forget_strands(a, {1, 2, 4}), forget_strands(b, {1, 2, 4})) ==
          forget_strands(compose(a, b), {1, 2, 4}));
  }
}
