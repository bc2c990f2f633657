#include "evenh/finite_oracle.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace evenh {

GroupTable GroupTable::from_mul(int order, std::vector<int> mul,
                                std::vector<int> gens) {
  if (order < 1) throw ValidationError("group order must be >= 1");
  if ((int)mul.size() != order * order)
    throw ValidationError("mul table size does not match order^2");
  for (int v : mul)
    if (v < 0 || v >= order)
      throw ValidationError("mul table entry out of range");
  auto at = [&](int a, int b) { return mul[std::size_t(a) * order + b]; };
  // identity fixed at 0
  for (int a = 0; a < order; ++a)
    if (at(0, a) != a || at(a, 0) != a)
      throw ValidationError("element 0 is not an identity");
  // two-sided inverses
  std::vector<int> inv(order, -1);
  for (int a = 0; a < order; ++a) {
    for (int b = 0; b < order; ++b)
      if (at(a, b) == 0 && at(b, a) == 0) {
        inv[a] = b;
        break;
      }
    if (inv[a] < 0)
      throw ValidationError("element " + std::to_string(a) +
                            " has no inverse");
  }
  // full associativity; order is capped at 64 so this stays small
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b)
      for (int c = 0; c < order; ++c)
        if (at(at(a, b), c) != at(a, at(b, c)))
          throw ValidationError("mul table is not associative");
  for (int g : gens)
    if (g < 0 || g >= order)
      throw ValidationError("generator image out of range");
  GroupTable t;
  t.order_ = order;
  t.mul_ = std::move(mul);
  t.inv_ = std::move(inv);
  t.gens_ = std::move(gens);
  return t;
}

GroupTable::Elem GroupTable::eval_word(const Word& w) const {
  Elem e = 0;
  for (std::int32_t x : w.letters()) {
    int i = x < 0 ? -x : x;
    if (i > (int)gens_.size())
      throw DomainError("word uses generator " + std::to_string(i) +
                        " but the table has " +
                        std::to_string(gens_.size()) + " generator images");
    Elem g = gens_[i - 1];
    e = mul(e, x < 0 ? inv(g) : g);
  }
  return e;
}

std::string GroupTable::to_text() const {
  std::ostringstream os;
  os << "order=" << order_ << "\n";
  if (!gens_.empty()) {
    os << "gens";
    for (int g : gens_) os << " " << g;
    os << "\n";
  }
  for (int a = 0; a < order_; ++a) {
    for (int b = 0; b < order_; ++b) os << (b ? " " : "") << mul(a, b);
    os << "\n";
  }
  return os.str();
}

GroupTable GroupTable::from_text(std::string_view text) {
  auto to_int = [](const std::string& s, int lineno) {
    try {
      std::size_t used = 0;
      int v = std::stoi(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return v;
    } catch (const std::exception&) {
      throw ParseError("line " + std::to_string(lineno) +
                           ": bad integer '" + s + "'",
                       lineno);
    }
  };
  std::istringstream in{std::string(text)};
  std::string line;
  int order = -1, lineno = 0;
  std::vector<int> gens, mul;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok.rfind("order=", 0) == 0) {
      order = to_int(tok.substr(6), lineno);
    } else if (tok == "gens") {
      while (ls >> tok) gens.push_back(to_int(tok, lineno));
    } else {
      mul.push_back(to_int(tok, lineno));
      while (ls >> tok) mul.push_back(to_int(tok, lineno));
    }
  }
  if (order < 1) throw ParseError("missing order= header");
  return from_mul(order, std::move(mul), std::move(gens));
}

GroupTable dihedral(int k) {
  if (k < 1) throw ValidationError("dihedral needs k >= 1");
  const int rot = 2 * k, order = 4 * k;
  if (order > 64) throw ResourceLimitError("dihedral order exceeds cap 64");
  // element a*2 + b encodes r^a s^b; identity r^0 s^0 is 0
  std::vector<int> mul(std::size_t(order) * order);
  for (int a = 0; a < rot; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < rot; ++c)
        for (int d = 0; d < 2; ++d) {
          int e1 = a * 2 + b, e2 = c * 2 + d;
          int ra = ((b ? a - c : a + c) % rot + rot) % rot;
          mul[std::size_t(e1) * order + e2] = ra * 2 + ((b + d) % 2);
        }
  // generators: the reflections s and rs, whose product has order 2k
  int s1 = 0 * 2 + 1;
  int s2 = 1 * 2 + 1;
  return GroupTable::from_mul(order, std::move(mul), {s1, s2});
}

GroupTable elementary_abelian(int k) {
  if (k < 0) throw ValidationError("elementary_abelian needs k >= 0");
  if (k > 6) throw ResourceLimitError("elementary_abelian order exceeds cap 64");
  const int order = 1 << k;
  std::vector<int> mul(std::size_t(order) * order);
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b) mul[std::size_t(a) * order + b] = a ^ b;
  std::vector<int> gens;
  for (int t = 0; t < k; ++t) gens.push_back(1 << t);
  return GroupTable::from_mul(order, std::move(mul), std::move(gens));
}

GroupTable direct_product(const GroupTable& g, const GroupTable& h,
                          int max_order) {
  long long order = (long long)g.order() * h.order();
  if (order > max_order)
    throw ResourceLimitError("direct product order " + std::to_string(order) +
                             " exceeds cap " + std::to_string(max_order));
  const int n = (int)order, hn = h.order();
  std::vector<int> mul(std::size_t(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      mul[std::size_t(a) * n + b] =
          g.mul(a / hn, b / hn) * hn + h.mul(a % hn, b % hn);
  std::vector<int> gens;
  for (int x : g.generators()) gens.push_back(x * hn);
  for (int x : h.generators()) gens.push_back(x);
  return GroupTable::from_mul(n, std::move(mul), std::move(gens));
}

namespace {

// HLT coset enumeration over the trivial subgroup. Deterministic: cosets
// are processed in definition order against a fixed relator list, and the
// final table is renumbered breadth-first. Columns come in (gen, inv)
// pairs; for Coxeter input the relator list still uses explicit inverse
// symbols, no s = s^-1 shortcut is assumed.
class Hlt {
 public:
  Hlt(const EvenPresentation& p, int max_cosets)
      : ngen_(p.size()), ncol_(2 * p.size()), cap_(max_cosets) {
    for (int i = 1; i <= ngen_; ++i)
      relators_.push_back(std::vector<int>{sym(i), sym(i)});
    for (auto [i, j] : p.pairs()) {
      std::vector<int> r;
      int half = p.half_label(i, j);
      for (int t = 0; t < half; ++t) {
        r.push_back(sym(i));
        r.push_back(sym(j));
      }
      for (int t = 0; t < half; ++t) {
        r.push_back(sym(-i));
        r.push_back(sym(-j));
      }
      relators_.push_back(std::move(r));
    }
    define_first();
  }

  // symbol of a signed generator: 2t for +, 2t+1 for -
  int sym(int signed_gen) const {
    int i = signed_gen < 0 ? -signed_gen : signed_gen;
    return 2 * (i - 1) + (signed_gen < 0 ? 1 : 0);
  }
  static int inv_sym(int x) { return x ^ 1; }

  void enumerate() {
    for (int c = 1; c <= last_; ++c) {
      if (rep(c) != c) continue;
      for (const auto& r : relators_) {
        scan_and_fill(c, r);
        if (rep(c) != c) break;  // c died during coincidence processing
      }
    }
    // closed table: every live coset has a full row
    for (int c = 1; c <= last_; ++c) {
      if (rep(c) != c) continue;
      for (int x = 0; x < ncol_; ++x)
        if (tau(c, x) == 0)
          throw ValidationError("coset table incomplete after enumeration");
    }
  }

  int live_count() const {
    int live = 0;
    for (int c = 1; c <= last_; ++c)
      if (parent_[c] == c) ++live;
    return live;
  }

  GroupTable build_table(const EvenPresentation& p) const {
    // breadth-first renumbering from the trivial coset, columns in order
    std::vector<int> number(last_ + 1, -1);
    std::vector<int> bfs;
    std::vector<std::vector<int>> word_to(last_ + 1);
    int root = rep_const(1);
    number[root] = 0;
    bfs.push_back(root);
    for (std::size_t head = 0; head < bfs.size(); ++head) {
      int c = bfs[head];
      for (int x = 0; x < ncol_; ++x) {
        int d = rep_const(tau(c, x));
        if (number[d] < 0) {
          number[d] = (int)bfs.size();
          bfs.push_back(d);
          word_to[d] = word_to[c];
          word_to[d].push_back(x);
        }
      }
    }
    const int order = (int)bfs.size();
    // mul via representative words: number[a]*number[b] follows b's word
    // from a
    std::vector<int> mul(std::size_t(order) * order);
    for (int a = 0; a < order; ++a) {
      int ca = bfs[a];
      for (int b = 0; b < order; ++b) {
        int c = ca;
        for (int x : word_to[bfs[b]]) c = rep_const(tau(c, x));
        mul[std::size_t(a) * order + b] = number[c];
      }
    }
    std::vector<int> gens;
    for (int i = 1; i <= p.size(); ++i)
      gens.push_back(number[rep_const(tau(root, sym(i)))]);
    return GroupTable::from_mul(order, std::move(mul), std::move(gens));
  }

 private:
  int ngen_, ncol_, cap_;
  int last_ = 0;
  std::vector<std::vector<int>> relators_;
  std::vector<int> table_;   // 1-based cosets, 0 = undefined
  std::vector<int> parent_;  // union-find, parent_[c] <= c

  int tau(int c, int x) const { return table_[std::size_t(c) * ncol_ + x]; }
  void set_tau(int c, int x, int d) { table_[std::size_t(c) * ncol_ + x] = d; }

  int rep(int c) {
    while (parent_[c] != c) {
      parent_[c] = parent_[parent_[c]];
      c = parent_[c];
    }
    return c;
  }
  int rep_const(int c) const {
    while (parent_[c] != c) c = parent_[c];
    return c;
  }

  void define_first() {
    table_.assign(std::size_t(2) * ncol_, 0);
    parent_ = {0, 1};
    last_ = 1;
  }

  int define(int c, int x) {
    if (last_ >= cap_)
      throw ResourceLimitError(
          "coset cap " + std::to_string(cap_) +
          " exceeded; the group may be infinite, no claim is made");
    ++last_;
    table_.insert(table_.end(), ncol_, 0);
    parent_.push_back(last_);
    set_tau(c, x, last_);
    set_tau(last_, inv_sym(x), c);
    return last_;
  }

  void merge(int a, int b, std::deque<int>& dead) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent_[b] = a;
    dead.push_back(b);
  }

  void coincidence(int a, int b) {
    std::deque<int> dead;
    merge(a, b, dead);
    while (!dead.empty()) {
      int d = dead.front();
      dead.pop_front();
      for (int x = 0; x < ncol_; ++x) {
        int e = tau(d, x);
        if (e == 0) continue;
        set_tau(e, inv_sym(x), 0);  // drop the back reference
        set_tau(d, x, 0);
        int u = rep(d), v = rep(e);
        // replay the edge u -x-> v against surviving entries
        if (int w = tau(u, x); w != 0)
          merge(v, w, dead);
        else if (int y = tau(v, inv_sym(x)); y != 0)
          merge(u, y, dead);
        else {
          set_tau(u, x, v);
          set_tau(v, inv_sym(x), u);
        }
      }
    }
  }

  void scan_and_fill(int c, const std::vector<int>& r) {
    int f = c, b = c;
    int i = 0, j = (int)r.size() - 1;
    for (;;) {
      while (i <= j && tau(f, r[i]) != 0) f = tau(f, r[i++]);
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && tau(b, inv_sym(r[j])) != 0) b = tau(b, inv_sym(r[j--]));
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (j == i) {
        // one gap: deduction closes the scan
        set_tau(f, r[i], b);
        set_tau(b, inv_sym(r[i]), f);
        return;
      }
      f = define(f, r[i++]);
    }
  }
};

}  // namespace

GroupTable todd_coxeter(const EvenPresentation& p, int max_cosets) {
  if (p.size() == 0) return GroupTable::from_mul(1, {0}, {});
  Hlt h(p, max_cosets);
  h.enumerate();
  if (h.live_count() > 64)
    throw ResourceLimitError("enumerated group order " +
                             std::to_string(h.live_count()) +
                             " exceeds the table cap 64");
  return h.build_table(p);
}

namespace {

// non-identity elements get tuple indices 0..order-2
inline int nz(int e) { return e - 1; }

}  // namespace

IntMat bar_boundary_matrix(const GroupTable& g, int k) {
  const int m = g.order() - 1;  // non-identity elements
  if (k == 1) return IntMat(0, m);
  if (k == 2) {
    // d[g1|g2] = [g2] - [g1 g2] + [g1]
    IntMat d(m, m * m);
    for (int a = 1; a < g.order(); ++a)
      for (int b = 1; b < g.order(); ++b) {
        int col = nz(a) * m + nz(b);
        d.at(nz(b), col) += 1;
        d.at(nz(a), col) += 1;
        int ab = g.mul(a, b);
        if (ab != 0) d.at(nz(ab), col) -= 1;
      }
    return d;
  }
  if (k == 3) {
    // d[g1|g2|g3] = [g2|g3] - [g1 g2|g3] + [g1|g2 g3] - [g1|g2]
    IntMat d(m * m, m * m * m);
    auto row = [&](int x, int y) { return nz(x) * m + nz(y); };
    for (int a = 1; a < g.order(); ++a)
      for (int b = 1; b < g.order(); ++b)
        for (int c = 1; c < g.order(); ++c) {
          int col = (nz(a) * m + nz(b)) * m + nz(c);
          d.at(row(b, c), col) += 1;
          int ab = g.mul(a, b);
          if (ab != 0) d.at(row(ab, c), col) -= 1;
          int bc = g.mul(b, c);
          if (bc != 0) d.at(row(a, bc), col) += 1;
          d.at(row(a, b), col) -= 1;
        }
    return d;
  }
  throw DomainError("bar_boundary_matrix supports k in {1,2,3}");
}

AbelianInvariants bar_h(const GroupTable& g, int k, int max_order) {
  if (k != 1 && k != 2)
    throw DomainError("bar_h supports k in {1,2}");
  if (k == 2 && g.order() > max_order)
    throw ResourceLimitError("bar_h: order " + std::to_string(g.order()) +
                             " exceeds cap " + std::to_string(max_order) +
                             " for k = 2");
  const int m = g.order() - 1;
  const long long nk = k == 1 ? m : (long long)m * m;
  // H_k = ker d_k / im d_{k+1}; d_1 = 0, so r_1 = 0.
  long long rk = k == 1 ? 0 : rank(bar_boundary_matrix(g, k));
  std::vector<Int> next = snf(bar_boundary_matrix(g, k + 1));
  AbelianInvariants inv;
  inv.free_rank = nk - rk - (long long)next.size();
  for (Int& f : next)
    if (f > 1) inv.torsion.push_back(std::move(f));
  return inv;
}

}  // namespace evenh
