#pragma once

#include <string>
#include <vector>

#include "lh/braid.hpp"
#include "support/random_inputs.hpp"

namespace lh::testing {

struct Relator {
  std::string family;
  BraidWord word;  // should be trivial up to link-homotopy
};

inline BraidWord A(int i, int j, int n) { return expand_pure_generator({i, j}, n); }

inline BraidWord relation(const BraidWord& lhs, const BraidWord& rhs) { return compose(lhs, invert(rhs)); }

// The defining relators of the pure homotopy braid group: the three pure braid
// relation families plus [A_ij, lambda A_ij lambda^-1] for `samples` random
// pure words lambda per pair.
inline std::vector<Relator> presentation_relators(int n, Rng& rng, int samples) {
  std::vector<Relator> out;
  for (int r = 1; r <= n; ++r) {
    for (int s = r + 1; s <= n; ++s) {
      for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
          if ((s < i) || (r < i && j < s)) {
            out.push_back({"disjoint or nested pairs commute", commutator(A(r, s, n), A(i, j, n))});
          }
        }
      }
    }
  }
  for (int r = 1; r <= n; ++r) {
    for (int s = r + 1; s <= n; ++s) {
      for (int j = s + 1; j <= n; ++j) {
        auto c1 = commutator(A(r, s, n), A(r, j, n));
        auto c2 = commutator(A(r, j, n), A(s, j, n));
        auto c3 = commutator(A(s, j, n), A(r, s, n));
        out.push_back({"triangle relation, first equality", relation(c1, c2)});
        out.push_back({"triangle relation, second equality", relation(c2, c3)});
      }
    }
  }
  for (int r = 1; r <= n; ++r) {
    for (int s = r + 1; s <= n; ++s) {
      for (int i = s + 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
          auto lhs = commutator(A(r, i, n), A(s, j, n));
          auto rhs = commutator(commutator(A(i, j, n), A(r, j, n)), A(s, j, n));
          out.push_back({"interleaved pairs", relation(lhs, rhs)});
        }
      }
    }
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      for (int k = 0; k < samples; ++k) {
        auto lambda = random_pure_braid(rng, n, 4);
        auto conj = compose(compose(lambda, A(i, j, n)), invert(lambda));
        out.push_back({"link-homotopy relation", commutator(A(i, j, n), conj)});
      }
    }
  }
  return out;
}

}  // namespace lh::testing
