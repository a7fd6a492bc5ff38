#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "lh/integer.hpp"

namespace lh {

// One Artin letter sigma_index^sign.
struct Letter {
  int index = 1;
  int sign = 1;
  bool operator==(const Letter&) const = default;
};

// Freely reduced word in the Artin generators; equality is equality of words.
class BraidWord {
 public:
  explicit BraidWord(int strands = 1);
  BraidWord(int strands, std::vector<Letter> letters);

  int strands() const { return strands_; }
  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  bool operator==(const BraidWord&) const = default;

 private:
  int strands_;
  std::vector<Letter> letters_;
};

// images[k-1] is the bottom position of the strand that starts at position k.
struct Permutation {
  std::vector<int> images;

  static Permutation identity(int n);
  int size() const { return static_cast<int>(images.size()); }
  int operator()(int k) const { return images[k - 1]; }
  Permutation inverse() const;
  bool is_identity() const;
  // this first, then other
  Permutation then(const Permutation& other) const;
  bool operator==(const Permutation&) const = default;
};

struct PureGenerator {
  int i;
  int j;
};

BraidWord parse_braid_word(std::string_view text, int n);
std::string format_braid_word(const BraidWord& b);
// Smallest strand count that accommodates every token of the text.
int infer_strand_count(std::string_view text);

BraidWord expand_pure_generator(PureGenerator g, int n);
BraidWord compose(const BraidWord& a, const BraidWord& b);
BraidWord invert(const BraidWord& a);
BraidWord power(const BraidWord& a, Int e);
// a b a^-1 b^-1
BraidWord commutator(const BraidWord& a, const BraidWord& b);
Permutation permutation_of(const BraidWord& a);
bool is_pure(const BraidWord& a);

// Forget every strand not listed in keep (sorted, 1-based, strands named by
// their starting position) and relabel the survivors 1..keep.size().
BraidWord forget_strands(const BraidWord& b, const std::vector<int>& keep);

}  // namespace lh
