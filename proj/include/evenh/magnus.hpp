#pragma once

#include <map>
#include <utility>
#include <vector>

#include "evenh/errors.hpp"
#include "evenh/ints.hpp"
#include "evenh/words.hpp"

namespace evenh {

// Image of a word in the degree-<=2 truncation of the Magnus ring
// Z<<X_1..X_n>>: 1 + sum ab[i] X_i + sum deg2[i][j] X_i X_j. Constant term
// is always 1 and is not stored.
struct MagnusTruncation {
  int n = 0;
  std::vector<Int> ab;    // exponent sums, size n
  std::vector<Int> deg2;  // row-major n*n

  Int& at(int i, int j) { return deg2[std::size_t(i - 1) * n + (j - 1)]; }
  const Int& at(int i, int j) const {
    return deg2[std::size_t(i - 1) * n + (j - 1)];
  }
  bool operator==(const MagnusTruncation&) const = default;
};

// Multiplicative: magnus2(u * v) == mul(magnus2(u), magnus2(v)).
MagnusTruncation magnus2(const Word& w);
MagnusTruncation mul(const MagnusTruncation& a, const MagnusTruncation& b);

// Coordinates of a wedge Z^n ^ Z^n element over basis { e_i ^ e_j : i < j },
// keyed by (i, j) with i < j; absent pairs are zero.
struct WedgeVector {
  std::map<std::pair<int, int>, Int> coeff;
  bool operator==(const WedgeVector&) const = default;
};

// For w in [F,F] the degree-2 part is antisymmetric; returns its upper
// triangle. Throws DomainError when w has nonzero exponent sums.
WedgeVector wedge_image(const Word& w);

// True iff w maps to 1 in the truncation, i.e. w is trivial in the free
// class-2 quotient F/[F,[F,F]].
bool class2_trivial(const Word& w);

}  // namespace evenh
