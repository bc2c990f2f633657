#pragma once

#include <cstdint>
#include <vector>

#include "evenh/artin_h.hpp"
#include "evenh/coxmat.hpp"
#include "evenh/snf.hpp"
#include "evenh/words.hpp"

namespace evenh {

// H_2 class of the even Coxeter group: F_2 coordinates over the bonded
// pairs, one per basis element [s_i, s_j]^{n(i,j)}.
struct CoxH2Class {
  std::vector<std::uint8_t> coords;  // entries 0/1
  bool operator==(const CoxH2Class&) const = default;
};

// Same basis pairs as the Artin side, but every class has order 2; words
// display over the s-alphabet.
struct CoxH2Basis {
  std::vector<H2BasisEntry> entries;
  long long rank() const { return (long long)entries.size(); }
};
CoxH2Basis cox_h2(const EvenPresentation& p);

// Map induced on H_2 by the quotient A -> W: coordinatewise reduction
// mod 2. Surjective, kernel exactly the even vectors.
CoxH2Class rho_star(const ArtinH2Class& c);

// Pontryagin product of the reflection classes; lands on the (i,j) basis
// class, exactly as on the Artin side.
struct CoxPontryagin {
  Word left, right;  // s_i and (s_j s_i)_{2n-1}
  CoxH2Class cls;
};
CoxPontryagin cox_pontryagin(int i, int j, const EvenPresentation& p);

// H_1 of the even Coxeter group: (Z/2)^n, computed honestly as the
// cokernel of the abelianized relation matrix.
AbelianInvariants cox_h1(const EvenPresentation& p);

}  // namespace evenh
