#pragma once

#include <limits>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "evenh/errors.hpp"

namespace evenh {

// Label value standing for an absent (infinite) bond. Never serialized as a
// number: text uses the token "inf", structured output omits the entry.
inline constexpr int kInf = std::numeric_limits<int>::max();

// Symmetric matrix of Coxeter labels: m(i,i) = 1, m(i,j) = m(j,i) >= 2 or
// infinite for i != j. Indices are 1-based throughout.
class CoxeterMatrix {
 public:
  CoxeterMatrix() = default;

  // Grid is n*n row-major with kInf for infinite labels. Validates all
  // matrix contracts and throws ValidationError naming the offending entry.
  static CoxeterMatrix from_grid(int n, std::vector<int> grid);

  int size() const { return n_; }
  int label(int i, int j) const;
  bool finite(int i, int j) const { return label(i, j) != kInf; }

  bool operator==(const CoxeterMatrix& o) const = default;

 private:
  int n_ = 0;
  std::vector<int> m_;
};

// Accepts the sparse form
//   n=<k>
//   i j m        (one triple per line, unlisted pairs infinite)
// and the full form, announced by a line "full" after the header, followed
// by n rows of n labels. "inf" denotes an infinite label in either form.
// ';' separates logical lines, '#' starts a comment. Errors carry 1-based
// line/column positions.
CoxeterMatrix parse_matrix(std::string_view text);

// Canonical sparse text form; parse_matrix(serialize(m)) == m.
std::string serialize(const CoxeterMatrix& m);

// Even Artin/Coxeter presentation data derived from an even matrix:
// half labels n(i,j) = m(i,j)/2 and the ordered pair set
// B = { (i,j) : i < j, m(i,j) finite }, lexicographic.
class EvenPresentation {
 public:
  EvenPresentation() = default;

  int size() const { return n_; }
  const std::vector<std::pair<int, int>>& pairs() const { return b_; }

  // n(i,j) for i != j; kInf when the label is infinite.
  int half_label(int i, int j) const;
  bool in_b(int i, int j) const {
    if (i == j || i < 1 || i > n_ || j < 1 || j > n_) return false;
    return half_label(i, j) != kInf;
  }

  // Position of (min(i,j), max(i,j)) in pairs(); throws DomainError when
  // the pair is not in B.
  int pair_index(int i, int j) const;

  friend EvenPresentation to_even(const CoxeterMatrix& m);

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> b_;
  std::map<std::pair<int, int>, int> half_;
};

// Throws ValidationError naming the first odd off-diagonal label.
EvenPresentation to_even(const CoxeterMatrix& m);

}  // namespace evenh
