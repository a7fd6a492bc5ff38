#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "lh/braid.hpp"
#include "lh/integer.hpp"

namespace lh {

struct GenLetter {
  int gen = 1;
  int sign = 1;
  bool operator==(const GenLetter&) const = default;
};

// Freely reduced word in x_1..x_rank, read as an element of the reduced free group.
class ReducedWord {
 public:
  explicit ReducedWord(int rank = 1);
  ReducedWord(int rank, const std::vector<GenLetter>& letters);

  static ReducedWord generator(int rank, int k, int sign = 1);

  int rank() const { return rank_; }
  const std::vector<GenLetter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool operator==(const ReducedWord&) const = default;

 private:
  int rank_;
  std::vector<GenLetter> letters_;
};

ReducedWord multiply(const ReducedWord& a, const ReducedWord& b);
ReducedWord inverse(const ReducedWord& a);
ReducedWord power(const ReducedWord& a, Int e);
ReducedWord commutator(const ReducedWord& a, const ReducedWord& b);
// Left-normed [[..[x_i1, x_i2], ..], x_il].
ReducedWord commutator_word(int rank, const std::vector<int>& sequence);

// Tokens x<k> or x<k>^-1 separated by whitespace.
ReducedWord parse_reduced_word(std::string_view text, int rank);
std::string format_reduced_word(const ReducedWord& w);
int infer_rank(std::string_view text);

// Homotopic Artin action: the image of w under the automorphism of the braid.
// Letters act right to left, so acting by compose(a, b) is acting by b, then a.
ReducedWord artin_act(const BraidWord& b, const ReducedWord& w);

}  // namespace lh
