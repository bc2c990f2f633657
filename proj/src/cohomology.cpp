#include "evenh/cohomology.hpp"

#include <algorithm>

#include "evenh/errors.hpp"

namespace evenh {

Int Character::eval(const Word& w) const {
  Int v = 0;
  for (std::int32_t x : w.letters()) {
    int i = x < 0 ? -x : x;
    if (i > (int)values.size())
      throw DomainError("character undefined on generator " +
                        std::to_string(i));
    v += x < 0 ? -values[i - 1] : values[i - 1];
  }
  return v;
}

Int hopf_pairing(const std::vector<std::pair<Word, Word>>& comms,
                 const Character& phi, const Character& psi) {
  Int v = 0;
  for (const auto& [g, h] : comms)
    v += phi.eval(g) * psi.eval(h) - psi.eval(g) * phi.eval(h);
  return v;
}

CupValue cup(int i, int j, const EvenPresentation& p) {
  if (i < 1 || i > p.size() || j < 1 || j > p.size())
    throw DomainError("cup: generator index out of range");
  if (i == j || !p.in_b(i, j)) return {Int(0), std::nullopt};
  std::pair<int, int> key = std::minmax(i, j);
  Int coeff = p.half_label(i, j);
  if (i > j) coeff = -coeff;  // graded commutativity in degree 1
  return {coeff, key};
}

Int CupTable::entry(int i, int j) const {
  if (i == j) return 0;
  bool flip = i > j;
  if (flip) std::swap(i, j);
  // packed index of (i,j), i < j, in lexicographic order
  std::size_t off = std::size_t(i - 1) * n - std::size_t(i) * (i - 1) / 2;
  const Int& v = upper[off + (j - i - 1)];
  return flip ? Int(-v) : v;
}

CupTable cup_table(const EvenPresentation& p) {
  CupTable t;
  t.n = p.size();
  t.upper.assign(std::size_t(t.n) * (t.n - 1) / 2, 0);
  std::size_t idx = 0;
  for (int i = 1; i <= t.n; ++i)
    for (int j = i + 1; j <= t.n; ++j, ++idx)
      if (p.in_b(i, j)) t.upper[idx] = p.half_label(i, j);
  return t;
}

}  // namespace evenh
