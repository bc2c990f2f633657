#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "evenh/coxmat.hpp"
#include "evenh/errors.hpp"
#include "evenh/snf.hpp"
#include "evenh/words.hpp"

namespace evenh {

// Finite group as an explicit multiplication table. Elements are indices
// 0..order-1 with the identity at 0. Construction validates identity,
// inverses, and full associativity, so a GroupTable is always a group.
class GroupTable {
 public:
  using Elem = int;

  GroupTable() = default;

  // mul is order*order row major; gens are element indices used by
  // eval_word (entry t is the image of generator t+1).
  static GroupTable from_mul(int order, std::vector<int> mul,
                             std::vector<int> gens = {});

  int order() const { return order_; }
  Elem id() const { return 0; }
  bool is_id(Elem e) const { return e == 0; }
  Elem mul(Elem a, Elem b) const {
    return mul_[std::size_t(a) * order_ + b];
  }
  Elem inv(Elem a) const { return inv_[a]; }
  bool commute(Elem a, Elem b) const { return mul(a, b) == mul(b, a); }

  const std::vector<int>& generators() const { return gens_; }
  Elem eval_word(const Word& w) const;

  // Text fixture format: "order=<N>", optional "gens <g1> <g2> ...", then
  // N rows of N element indices.
  std::string to_text() const;
  static GroupTable from_text(std::string_view text);

 private:
  int order_ = 0;
  std::vector<int> mul_;
  std::vector<int> inv_;
  std::vector<int> gens_;
};

// Dihedral group of order 4k: symmetries of a 2k-gon, generated by two
// reflections whose product has order 2k. This is the Coxeter group on two
// generators with label m(1,2) = 2k.
GroupTable dihedral(int k);

// (Z/2)^k with the k coordinate generators.
GroupTable elementary_abelian(int k);

// Direct product with concatenated generator lists; throws
// ResourceLimitError above max_order.
GroupTable direct_product(const GroupTable& g, const GroupTable& h,
                          int max_order = 64);

// HLT coset enumeration of the even Coxeter group of p over the trivial
// subgroup. Deterministic: fixed relator order (squares, then bond
// relators in B order) and breadth-first renumbering from the identity
// coset. Throws ResourceLimitError at the coset cap; the group may simply
// be infinite, no claim is made.
GroupTable todd_coxeter(const EvenPresentation& p, int max_cosets = 100000);

// Boundary matrix of the normalized bar resolution, mapping k-tuples of
// non-identity elements to (k-1)-tuples; k in {1, 2, 3}. Rows are indexed
// by (k-1)-tuples, columns by k-tuples, both in lexicographic order of
// tuples of nonzero element indices.
IntMat bar_boundary_matrix(const GroupTable& g, int k);

// H_k(G; Z) for k in {1, 2} straight from the bar resolution and Smith
// normal form. The k = 2 computation is cubic in |G|; orders above
// max_order throw ResourceLimitError.
AbelianInvariants bar_h(const GroupTable& g, int k, int max_order = 16);

}  // namespace evenh
