#pragma once

#include <vector>

#include "evenh/ints.hpp"

namespace evenh {

// Dense integer matrix, row major.
struct IntMat {
  int rows = 0;
  int cols = 0;
  std::vector<Int> a;

  IntMat() = default;
  IntMat(int r, int c) : rows(r), cols(c), a(std::size_t(r) * c) {}

  Int& at(int r, int c) { return a[std::size_t(r) * cols + c]; }
  const Int& at(int r, int c) const { return a[std::size_t(r) * cols + c]; }
};

// Invariant factors of the Smith normal form: the nonzero diagonal entries,
// positive, each dividing the next. Exact at any size; internally runs a
// checked 64-bit elimination and restarts in arbitrary precision if any
// intermediate overflows.
std::vector<Int> snf(const IntMat& m);

long long rank(const IntMat& m);

// Diagonalization tracking only row operations: left * m * C = diag for some
// unimodular C that is not materialized. Enough to decide solvability of
// m x = z over the integers: with y = left * z, a solution exists iff
// diag[i] divides y[i] for every i (zero diagonal entries included).
struct LeftDiagonalization {
  std::vector<Int> diag;  // size rows, nonzero prefix then zeros
  IntMat left;            // rows x rows, unimodular
};
LeftDiagonalization diagonalize_left(const IntMat& m);

// Invariants of the abelian group Z^ncols / (row span of relations).
struct AbelianInvariants {
  long long free_rank = 0;
  std::vector<Int> torsion;  // factors > 1, divisibility chain
  bool operator==(const AbelianInvariants&) const = default;
};
AbelianInvariants quotient_invariants(const IntMat& relations, int ncols);

}  // namespace evenh
