#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "evenh/artin_h.hpp"
#include "evenh/errors.hpp"
#include "evenh/finite_oracle.hpp"
#include "evenh/ints.hpp"
#include "evenh/words.hpp"

namespace evenh {

// Group operations on free-group words, so chain formulas run unchanged
// over infinite groups.
struct FreeGroup {
  using Elem = Word;
  int alphabet = 0;

  Elem id() const { return Word(alphabet); }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem inv(const Elem& a) const { return a.inverse(); }
  bool is_id(const Elem& a) const { return a.is_empty(); }
};

// Integer chain in the normalized bar complex of G: a finite Z-combination
// of k-tuples [g_1|...|g_k] of non-identity elements. Tuples containing the
// identity are dropped on insertion (they are zero in the normalized
// complex), as are terms whose coefficient cancels.
template <class G>
class BarChain {
 public:
  using Elem = typename G::Elem;
  using Terms = std::map<std::vector<Elem>, Int>;

  BarChain(const G& g, int degree) : group_(&g), degree_(degree) {}

  const G& group() const { return *group_; }
  int degree() const { return degree_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(std::vector<Elem> tuple, Int c) {
    if (c == 0) return;
    for (const Elem& e : tuple)
      if (group_->is_id(e)) return;
    auto it = terms_.find(tuple);
    if (it == terms_.end()) {
      terms_.emplace(std::move(tuple), std::move(c));
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  BarChain& operator+=(const BarChain& o) {
    for (const auto& [t, c] : o.terms_) add(t, c);
    return *this;
  }
  BarChain& operator-=(const BarChain& o) {
    for (const auto& [t, c] : o.terms_) add(t, -c);
    return *this;
  }
  friend BarChain operator+(BarChain a, const BarChain& b) { return a += b; }
  friend BarChain operator-(BarChain a, const BarChain& b) { return a -= b; }

  bool operator==(const BarChain& o) const {
    return degree_ == o.degree_ && terms_ == o.terms_;
  }

 private:
  const G* group_;
  int degree_;
  Terms terms_;
};

// Boundary of the normalized bar complex: drop first, contract adjacent,
// drop last, with alternating signs.
template <class G>
BarChain<G> bar_boundary(const BarChain<G>& c) {
  const G& g = c.group();
  BarChain<G> out(g, c.degree() - 1);
  for (const auto& [t, coeff] : c.terms()) {
    const int k = (int)t.size();
    std::vector<typename G::Elem> u(t.begin() + 1, t.end());
    out.add(u, coeff);
    Int sign = -1;
    for (int i = 0; i + 1 < k; ++i) {
      u.assign(t.begin(), t.end());
      u[i] = g.mul(t[i], t[i + 1]);
      u.erase(u.begin() + i + 1);
      out.add(std::move(u), sign * coeff);
      sign = -sign;
    }
    u.assign(t.begin(), t.end() - 1);
    out.add(std::move(u), sign * coeff);
  }
  return out;
}

// Pontryagin product of two commuting 1-cycles: <g,h> = [g|h] - [h|g].
// Throws DomainError when g and h do not commute.
template <class G>
BarChain<G> pontryagin_chain(const G& grp, const typename G::Elem& g,
                             const typename G::Elem& h) {
  if (!(grp.mul(g, h) == grp.mul(h, g)))
    throw DomainError("pontryagin_chain: elements do not commute");
  BarChain<G> c(grp, 2);
  c.add({g, h}, 1);
  c.add({h, g}, -1);
  return c;
}

// 3-chain c = [g|h|k] - [h|g|k] + [h|k|g] with
// boundary(c) = <g,hk> - <g,h> - <g,k>, valid when g commutes with both h
// and k. Witnesses bilinearity of the product on the chain level.
template <class G>
BarChain<G> bilinearity_witness(const G& grp, const typename G::Elem& g,
                                const typename G::Elem& h,
                                const typename G::Elem& k) {
  if (!(grp.mul(g, h) == grp.mul(h, g)) || !(grp.mul(g, k) == grp.mul(k, g)))
    throw DomainError("bilinearity_witness: elements do not commute");
  BarChain<G> c(grp, 3);
  c.add({g, h, k}, 1);
  c.add({h, g, k}, -1);
  c.add({h, k, g}, 1);
  return c;
}

// 2-cycle representing the image of a commuting-pair presentation of an H_2
// class under the Hopf isomorphism: for each listed pair (a_t, b_t) of
// words, the summand
//   [I_{t-1}|a_t] + [I_{t-1} a_t|b_t] - [I_{t-1} a_t b_t a_t^-1|a_t]
//   - [I_t|b_t]
// where I_t is the product of the first t commutators. project maps words
// into G; pass the identity map for G = FreeGroup.
template <class G>
BarChain<G> hopf_iso_chain(
    const G& grp, const std::vector<std::pair<Word, Word>>& comms,
    const std::function<typename G::Elem(const Word&)>& project) {
  BarChain<G> c(grp, 2);
  typename G::Elem prefix = grp.id();  // I_{t-1}
  for (const auto& [aw, bw] : comms) {
    typename G::Elem a = project(aw), b = project(bw);
    typename G::Elem pa = grp.mul(prefix, a);
    typename G::Elem conj =
        grp.mul(grp.mul(pa, b), grp.inv(a));  // I_{t-1} a b a^-1
    typename G::Elem next =
        grp.mul(conj, grp.inv(b));  // I_t = I_{t-1} [a,b]
    c.add({prefix, a}, 1);
    c.add({pa, b}, 1);
    c.add({conj, a}, -1);
    c.add({next, b}, -1);
    prefix = next;
  }
  return c;
}

template <class G>
std::string format_chain(
    const BarChain<G>& c,
    const std::function<std::string(const typename G::Elem&)>& fmt) {
  if (c.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [t, coeff] : c.terms()) {
    std::string term = "[";
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (i) term += "|";
      term += fmt(t[i]);
    }
    term += "]";
    Int mag = coeff < 0 ? Int(-coeff) : coeff;
    if (first)
      out += coeff < 0 ? "-" : "";
    else
      out += coeff < 0 ? " - " : " + ";
    if (mag != 1) out += mag.str() + " ";
    out += term;
    first = false;
  }
  return out;
}

// The Pontryagin product of the generator classes of a_i and the alternating
// word, landing on the basis class of the bonded pair.
struct ArtinPontryagin {
  Word left, right;   // a_i and (a_j a_i)_{2n-1}
  ArtinH2Class cls;   // its H_2 coordinates: the unit vector at (i,j)
};
ArtinPontryagin pontryagin_artin(int i, int j, const EvenPresentation& p);

// Decides whether a degree-2 chain is a boundary in the bar complex of a
// finite group, by integer solvability against the degree-3 boundary
// matrix. Construction cost is one diagonalization; queries are cheap.
class BoundaryOracle {
 public:
  explicit BoundaryOracle(const GroupTable& g);
  bool is_boundary(const BarChain<GroupTable>& z) const;

 private:
  const GroupTable* g_;
  LeftDiagonalization d_;
};

}  // namespace evenh
