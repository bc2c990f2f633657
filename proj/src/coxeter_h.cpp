#include "evenh/coxeter_h.hpp"

#include <sstream>

namespace evenh {

CoxH2Basis cox_h2(const EvenPresentation& p) {
  // Same bonded pairs as the Artin side; every class now has order 2.
  CoxH2Basis basis;
  for (auto [i, j] : p.pairs()) {
    H2BasisEntry e;
    e.pair = {i, j};
    e.half_label = p.half_label(i, j);
    Word c = commutator(Word::generator(i, p.size()),
                        Word::generator(j, p.size()));
    e.representative = c.pow(e.half_label);
    std::ostringstream os;
    os << "[s" << i << ",s" << j << "]";
    if (e.half_label > 1) os << "^" << e.half_label;
    e.display = os.str();
    basis.entries.push_back(std::move(e));
  }
  return basis;
}

CoxH2Class rho_star(const ArtinH2Class& c) {
  CoxH2Class out;
  out.coords.reserve(c.coords.size());
  for (const Int& v : c.coords)
    out.coords.push_back((std::uint8_t)(v % 2 != 0 ? 1 : 0));
  return out;
}

CoxPontryagin cox_pontryagin(int i, int j, const EvenPresentation& p) {
  auto [g, h] = comm_rel_pair(i, j, p);
  CoxPontryagin out;
  out.left = g;
  out.right = h;
  out.cls.coords.assign(p.pairs().size(), 0);
  out.cls.coords[p.pair_index(i, j)] = 1;
  return out;
}

AbelianInvariants cox_h1(const EvenPresentation& p) {
  // Abelianized relation matrix: the squares contribute rows 2 e_i, the
  // bond relators abelianize to zero (they are commutators).
  const int n = p.size();
  IntMat rel(n + (int)p.pairs().size(), n);
  for (int i = 0; i < n; ++i) rel.at(i, i) = 2;
  return quotient_invariants(rel, n);
}

}  // namespace evenh
