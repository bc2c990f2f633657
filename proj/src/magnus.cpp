#include "evenh/magnus.hpp"

namespace evenh {

// One pass over the letters. Appending a letter with expansion
// 1 + v + V multiplies on the right: deg2 += ab (x) v, then deg2 += V,
// then ab += v. A generator touches one column, so the pass costs
// O(length * n).
MagnusTruncation magnus2(const Word& w) {
  const int n = w.alphabet();
  MagnusTruncation m;
  m.n = n;
  m.ab.assign(n, 0);
  m.deg2.assign(std::size_t(n) * n, 0);
  for (std::int32_t x : w.letters()) {
    const int j = x < 0 ? -x : x;
    if (x > 0) {
      // a_j -> 1 + X_j
      for (int i = 1; i <= n; ++i)
        if (m.ab[i - 1] != 0) m.at(i, j) += m.ab[i - 1];
      m.ab[j - 1] += 1;
    } else {
      // a_j^-1 -> 1 - X_j + X_j^2
      for (int i = 1; i <= n; ++i)
        if (m.ab[i - 1] != 0) m.at(i, j) -= m.ab[i - 1];
      m.at(j, j) += 1;
      m.ab[j - 1] -= 1;
    }
  }
  return m;
}

MagnusTruncation mul(const MagnusTruncation& a, const MagnusTruncation& b) {
  const int n = a.n > b.n ? a.n : b.n;
  MagnusTruncation m;
  m.n = n;
  m.ab.assign(n, 0);
  m.deg2.assign(std::size_t(n) * n, 0);
  for (int i = 1; i <= n; ++i) {
    if (i <= a.n) m.ab[i - 1] += a.ab[i - 1];
    if (i <= b.n) m.ab[i - 1] += b.ab[i - 1];
  }
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      Int v = 0;
      if (i <= a.n && j <= a.n) v += a.at(i, j);
      if (i <= b.n && j <= b.n) v += b.at(i, j);
      if (i <= a.n && j <= b.n) v += a.ab[i - 1] * b.ab[j - 1];
      m.at(i, j) = std::move(v);
    }
  return m;
}

WedgeVector wedge_image(const Word& w) {
  MagnusTruncation m = magnus2(w);
  for (int i = 1; i <= m.n; ++i)
    if (m.ab[i - 1] != 0)
      throw DomainError(
          "wedge_image: word is not in the commutator subgroup (exponent "
          "sum of generator " +
          std::to_string(i) + " is " + m.ab[i - 1].str() + ")");
  WedgeVector v;
  for (int i = 1; i <= m.n; ++i)
    for (int j = i + 1; j <= m.n; ++j)
      if (m.at(i, j) != 0) v.coeff[{i, j}] = m.at(i, j);
  return v;
}

bool class2_trivial(const Word& w) {
  MagnusTruncation m = magnus2(w);
  for (const Int& v : m.ab)
    if (v != 0) return false;
  for (const Int& v : m.deg2)
    if (v != 0) return false;
  return true;
}

}  // namespace evenh
