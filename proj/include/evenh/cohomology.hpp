#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "evenh/coxmat.hpp"
#include "evenh/ints.hpp"
#include "evenh/words.hpp"

namespace evenh {

// Degree-1 class: a homomorphism to Z, determined by generator values.
struct Character {
  std::vector<Int> values;  // values[i-1] = phi(a_i)
  Int eval(const Word& w) const;
};

// Value of the cup product phi ∪ psi on the H_2 class presented by the
// commuting pairs (g_t, h_t): sum over t of
// phi(g_t) psi(h_t) - psi(g_t) phi(h_t).
Int hopf_pairing(const std::vector<std::pair<Word, Word>>& comms,
                 const Character& phi, const Character& psi);

// beta_i ∪ beta_j as a multiple of the dual basis element of the bonded
// pair: coeff = n(i,j) on a bond, 0 otherwise, sign flipped for i > j.
struct CupValue {
  Int coeff;
  std::optional<std::pair<int, int>> basis_pair;  // set iff coeff != 0
};
CupValue cup(int i, int j, const EvenPresentation& p);

// All products at once; entry(i,j) is the coefficient of cup(i,j).
struct CupTable {
  int n = 0;
  std::vector<Int> upper;  // packed i < j, B-lexicographic over all pairs

  Int entry(int i, int j) const;
};
CupTable cup_table(const EvenPresentation& p);

}  // namespace evenh
