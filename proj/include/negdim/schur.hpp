#pragma once

// Schur functions in the monomial basis via Kostka numbers, counted by
// filling semistandard tableaux one horizontal strip at a time. This route
// shares nothing with the operator construction of Jack functions and is
// used to check them at k = -1.

#include "negdim/partitions.hpp"
#include "negdim/symfunc.hpp"

#include <vector>

namespace negdim::schur {

namespace detail {

// Count chains inner = ν0 ⊂ ν1 ⊂ ... ⊂ shape where each step adds a
// horizontal strip of size content[step].
inline long count_strips(const std::vector<int>& shape, std::vector<int>& cur, const std::vector<int>& content,
                         std::size_t step) {
  if (step == content.size()) return cur == shape ? 1 : 0;
  long total = 0;
  // Choose the new row lengths row by row; row i may grow up to
  // min(shape[i], previous old row length) (horizontal strip condition).
  std::vector<int> next = cur;
  auto rec = [&](auto&& self, std::size_t row, int left) -> void {
    if (row == shape.size()) {
      if (left == 0) {
        auto saved = cur;
        cur = next;
        total += count_strips(shape, cur, content, step + 1);
        cur = saved;
      }
      return;
    }
    int cap = shape[row];
    if (row > 0) cap = std::min(cap, cur[row - 1]);
    for (int add = 0; cur[row] + add <= cap && add <= left; ++add) {
      next[row] = cur[row] + add;
      self(self, row + 1, left - add);
    }
    next[row] = cur[row];
  };
  rec(rec, 0, content[step]);
  return total;
}

}  // namespace detail

/// Number of semistandard tableaux of shape λ and content μ.
inline long kostka(const Partition& lambda, const Partition& mu) {
  if (lambda.weight() != mu.weight()) return 0;
  std::vector<int> cur(lambda.length(), 0);
  return detail::count_strips(lambda.parts(), cur, mu.parts(), 0);
}

inline symfunc::MExpr schur_m(const Partition& lambda) {
  symfunc::MExpr s(lambda.weight());
  for (const auto& mu : partitions_of(lambda.weight())) {
    long k = kostka(lambda, mu);
    if (k) s.add(mu, RatFunc(Rational(k)));
  }
  return s;
}

}  // namespace negdim::schur
