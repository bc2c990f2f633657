#include "evenh/pontryagin.hpp"

namespace evenh {

ArtinPontryagin pontryagin_artin(int i, int j, const EvenPresentation& p) {
  // <a_i, (a_j a_i)_{2n-1}> carries the basis class of the bonded pair:
  // the commutator of the pair is exactly the defining relator.
  auto [g, h] = comm_rel_pair(i, j, p);
  ArtinPontryagin out;
  out.left = g;
  out.right = h;
  out.cls.coords.assign(p.pairs().size(), 0);
  out.cls.coords[p.pair_index(i, j)] = 1;
  return out;
}

BoundaryOracle::BoundaryOracle(const GroupTable& g)
    : g_(&g), d_(diagonalize_left(bar_boundary_matrix(g, 3))) {}

bool BoundaryOracle::is_boundary(const BarChain<GroupTable>& z) const {
  if (z.degree() != 2)
    throw DomainError("BoundaryOracle decides degree-2 chains");
  const int m = g_->order() - 1;
  const int rows = d_.left.rows;
  // y = left * z, using only the columns of left that z touches
  std::vector<Int> y(rows, 0);
  for (const auto& [t, c] : z.terms()) {
    int col = (t[0] - 1) * m + (t[1] - 1);
    for (int r = 0; r < rows; ++r) {
      const Int& l = d_.left.at(r, col);
      if (l != 0) y[r] += c * l;
    }
  }
  // solvable over Z iff each diagonal entry divides its coordinate
  for (int r = 0; r < rows; ++r) {
    if (d_.diag[r] == 0) {
      if (y[r] != 0) return false;
    } else if (y[r] % d_.diag[r] != 0) {
      return false;
    }
  }
  return true;
}

}  // namespace evenh
