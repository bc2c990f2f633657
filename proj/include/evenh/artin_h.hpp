#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "evenh/coxmat.hpp"
#include "evenh/ints.hpp"
#include "evenh/words.hpp"

namespace evenh {

// H_1 of the even Artin group: free abelian on the generator classes.
struct H1Basis {
  long long rank = 0;
  std::vector<std::string> labels;  // "a1", "a2", ...
};
H1Basis h1(const EvenPresentation& p);

// One basis element of H_2, attached to a bonded pair: the class of
// [a_i, a_j]^{n(i,j)}, carried by the relator (a_i a_j)^n (a_j a_i)^-n.
struct H2BasisEntry {
  std::pair<int, int> pair;
  long long half_label = 0;
  Word representative;  // [a_i, a_j]^{n(i,j)} as a reduced word
  std::string display;  // e.g. "[a1,a2]^2"
};

// H_2 is free abelian on one entry per bonded pair, in B order.
struct ArtinH2Basis {
  std::vector<H2BasisEntry> entries;
  long long rank() const { return (long long)entries.size(); }
};
ArtinH2Basis h2(const EvenPresentation& p);

// An H_2 class in coordinates over the h2 basis, ordered as p.pairs().
struct ArtinH2Class {
  std::vector<Int> coords;
  bool operator==(const ArtinH2Class&) const = default;
};

// A product of conjugated relator powers: prod conj r(pair)^exp conj^-1.
// This is the caller's warrant that the flattened word lies in the normal
// closure R: membership of an arbitrary word in R is not decided here.
struct RelatorFactor {
  std::pair<int, int> pair;
  int exp = 1;  // +1 or -1
  Word conj;    // conjugating word, may be empty
};
struct RelatorProduct {
  std::vector<RelatorFactor> factors;
};

// Lines of the form
//   pair=(i,j) exp=+1 conj=a1 a2^-1
// with '#' comments; conj= may be empty or the line may omit it.
RelatorProduct parse_relator_product(std::string_view text,
                                     const EvenPresentation& p);

// The class of rp in H_2: signed count of factors per bonded pair.
// Conjugators never contribute.
ArtinH2Class class_of(const RelatorProduct& rp, const EvenPresentation& p);

// The product as an honest reduced free word.
Word flatten(const RelatorProduct& rp, const EvenPresentation& p);

// Independent route to the same coordinates: read the wedge image of a
// word in R intersect [F,F] and divide by the half labels. Throws
// DomainError when w is not in [F,F], when its wedge support leaves B, or
// when a coordinate is not divisible by n(i,j).
ArtinH2Class coords_via_wedge(const Word& w, const EvenPresentation& p);

}  // namespace evenh
