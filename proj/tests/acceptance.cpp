// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure. Each criterion checks a library claim against an independent
// route and carries a wall-clock budget.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "evenh/artin_h.hpp"
#include "evenh/cohomology.hpp"
#include "evenh/coxeter_h.hpp"
#include "evenh/coxmat.hpp"
#include "evenh/finite_oracle.hpp"
#include "evenh/magnus.hpp"
#include "evenh/pontryagin.hpp"
#include "evenh/snf.hpp"
#include "evenh/words.hpp"

using namespace evenh;

namespace {

constexpr std::uint64_t kSeed = 20240801;

int g_failures = 0;

void criterion(int num, const std::string& what, double budget_s,
               const std::function<bool(std::string&)>& body) {
  std::string detail;
  auto t0 = std::chrono::steady_clock::now();
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  if (secs >= budget_s) {
    ok = false;
    detail += (detail.empty() ? "" : "; ") + std::string("over budget ") +
              std::to_string(budget_s) + "s";
  }
  std::printf("%s criterion %d: %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", num,
              what.c_str(), secs, detail.empty() ? "" : " - ",
              detail.c_str());
  if (!ok) ++g_failures;
}

// ---- shared helpers ----

const int kLabels[5] = {2, 4, 6, 8, kInf};

CoxeterMatrix make_matrix(int n, const std::vector<int>& labels) {
  std::vector<int> grid(std::size_t(n) * n, kInf);
  int t = 0;
  for (int i = 0; i < n; ++i) {
    grid[std::size_t(i) * n + i] = 1;
    for (int j = i + 1; j < n; ++j) {
      grid[std::size_t(i) * n + j] = grid[std::size_t(j) * n + i] =
          labels[t++];
    }
  }
  return CoxeterMatrix::from_grid(n, std::move(grid));
}

// exhaustive n=2 and n=3 over the label set, then 200 seeded n=4 draws
std::vector<CoxeterMatrix> matrix_family() {
  std::vector<CoxeterMatrix> fam;
  for (int l : kLabels) fam.push_back(make_matrix(2, {l}));
  for (int a : kLabels)
    for (int b : kLabels)
      for (int c : kLabels) fam.push_back(make_matrix(3, {a, b, c}));
  std::mt19937_64 rng(kSeed);
  std::uniform_int_distribution<int> pick(0, 4);
  for (int t = 0; t < 200; ++t) {
    std::vector<int> ls(6);
    for (int& l : ls) l = kLabels[pick(rng)];
    fam.push_back(make_matrix(4, ls));
  }
  return fam;
}

Word random_word(std::mt19937_64& rng, int alphabet, int len) {
  std::uniform_int_distribution<int> gd(1, alphabet);
  std::uniform_int_distribution<int> sd(0, 1);
  std::vector<std::int32_t> letters;
  for (int i = 0; i < len; ++i) {
    int g = gd(rng);
    letters.push_back(sd(rng) ? g : -g);
  }
  return Word::from_letters(letters, alphabet);
}

std::string pair_str(int i, int j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

// gcd of all k x k minors, independent Smith-form oracle
Int minor_det(const IntMat& m, const std::vector<int>& ri,
              const std::vector<int>& ci) {
  const int k = (int)ri.size();
  std::vector<Int> a(std::size_t(k) * k);
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < k; ++c) a[std::size_t(r) * k + c] = m.at(ri[r], ci[c]);
  Int prev = 1;
  int sign = 1;
  for (int t = 0; t < k; ++t) {
    int piv = -1;
    for (int r = t; r < k; ++r)
      if (a[std::size_t(r) * k + t] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return 0;
    if (piv != t) {
      for (int c = 0; c < k; ++c)
        std::swap(a[std::size_t(piv) * k + c], a[std::size_t(t) * k + c]);
      sign = -sign;
    }
    for (int r = t + 1; r < k; ++r)
      for (int c = t + 1; c < k; ++c)
        a[std::size_t(r) * k + c] =
            (a[std::size_t(t) * k + t] * a[std::size_t(r) * k + c] -
             a[std::size_t(r) * k + t] * a[std::size_t(t) * k + c]) /
            prev;
    prev = a[std::size_t(t) * k + t];
  }
  Int d = a[std::size_t(k - 1) * k + (k - 1)];
  return sign > 0 ? d : Int(-d);
}

bool next_comb(std::vector<int>& idx, int limit) {
  const int k = (int)idx.size();
  for (int t = k - 1; t >= 0; --t) {
    if (idx[t] < limit - (k - t)) {
      ++idx[t];
      for (int u = t + 1; u < k; ++u) idx[u] = idx[u - 1] + 1;
      return true;
    }
  }
  return false;
}

std::vector<Int> factors_by_minors(const IntMat& m) {
  const int rmax = std::min(m.rows, m.cols);
  std::vector<Int> d{1};
  for (int k = 1; k <= rmax; ++k) {
    Int g = 0;
    std::vector<int> ri(k), ci0(k);
    std::iota(ri.begin(), ri.end(), 0);
    do {
      std::vector<int> ci = ci0;
      std::iota(ci.begin(), ci.end(), 0);
      do {
        Int det = minor_det(m, ri, ci);
        g = boost::multiprecision::gcd(g, det < 0 ? Int(-det) : det);
      } while (next_comb(ci, m.cols));
    } while (next_comb(ri, m.rows));
    if (g == 0) break;
    d.push_back(g);
  }
  std::vector<Int> f;
  for (std::size_t k = 1; k < d.size(); ++k) f.push_back(d[k] / d[k - 1]);
  return f;
}

std::vector<GroupTable> small_groups() {
  std::vector<GroupTable> gs;
  for (int k = 1; k <= 4; ++k) gs.push_back(dihedral(k));
  for (int k = 1; k <= 4; ++k) gs.push_back(elementary_abelian(k));
  gs.push_back(direct_product(dihedral(2), elementary_abelian(1)));
  return gs;
}

AbelianInvariants two_torsion(int rank) {
  AbelianInvariants v;
  v.free_rank = 0;
  v.torsion.assign(rank, 2);
  return v;
}

// ---- criteria ----

bool c1_relator_wedge_basis(std::string& detail) {
  int matrices = 0, bonds = 0;
  for (const CoxeterMatrix& m : matrix_family()) {
    EvenPresentation p = to_even(m);
    ++matrices;
    const int n = p.size();
    IntMat wmat((int)p.pairs().size(), n * (n - 1) / 2);
    int row = 0;
    for (auto [i, j] : p.pairs()) {
      WedgeVector got = wedge_image(relator(i, j, p));
      WedgeVector want;
      want.coeff[{i, j}] = p.half_label(i, j);
      if (!(got == want)) {
        detail = "wedge image off at " + pair_str(i, j);
        return false;
      }
      for (const auto& [pr, c] : got.coeff) {
        int off = (pr.first - 1) * n - pr.first * (pr.first - 1) / 2 +
                  (pr.second - pr.first - 1);
        wmat.at(row, off) = c;
      }
      ++row;
      ++bonds;
    }
    if (rank(wmat) != (long long)p.pairs().size()) {
      detail = "wedge images dependent, n=" + std::to_string(n);
      return false;
    }
  }
  detail = std::to_string(matrices) + " matrices, " + std::to_string(bonds) +
           " bonds";
  return true;
}

bool c2_central_correction(std::string& detail) {
  Word a = Word::generator(1, 2), b = Word::generator(2, 2);
  Word c = commutator(a, b);
  for (int k = 1; k <= 10; ++k) {
    Word w = central_correction(a, b, k);
    if (!((a * b).pow(k) * (b * a).pow(-k) == w * c.pow(k))) {
      detail = "identity fails at k=" + std::to_string(k);
      return false;
    }
    if (!class2_trivial(w)) {
      detail = "w_" + std::to_string(k) + " not trivial in class 2";
      return false;
    }
  }
  detail = "k = 1..10";
  return true;
}

bool c3_commuting_pair(std::string& detail) {
  for (int half = 1; half <= 10; ++half) {
    EvenPresentation p =
        to_even(make_matrix(2, {2 * half}));
    auto [g, h] = comm_rel_pair(1, 2, p);
    if (!(commutator(g, h) == relator(1, 2, p))) {
      detail = "free reduction differs at n(i,j)=" + std::to_string(half);
      return false;
    }
  }
  detail = "n(i,j) = 1..10, exact free-group equality";
  return true;
}

bool c4_class_vs_wedge(std::string& detail) {
  std::mt19937_64 rng(kSeed);
  std::uniform_int_distribution<int> nd(2, 4);
  std::uniform_int_distribution<int> pickl(0, 3);  // finite labels only
  std::uniform_int_distribution<int> nf(0, 8);
  std::uniform_int_distribution<int> sg(0, 1);
  std::uniform_int_distribution<int> cl(0, 6);
  for (int t = 0; t < 500; ++t) {
    int n = nd(rng);
    std::vector<int> ls(n * (n - 1) / 2);
    for (int& l : ls) l = kLabels[pickl(rng)];
    EvenPresentation p = to_even(make_matrix(n, ls));
    std::uniform_int_distribution<int> bpick(0, (int)p.pairs().size() - 1);
    RelatorProduct rp;
    const int k = nf(rng);
    for (int u = 0; u < k; ++u) {
      RelatorFactor f;
      f.pair = p.pairs()[bpick(rng)];
      f.exp = sg(rng) ? 1 : -1;
      f.conj = random_word(rng, n, cl(rng));
      rp.factors.push_back(std::move(f));
    }
    if (!(coords_via_wedge(flatten(rp, p), p) == class_of(rp, p))) {
      detail = "trial " + std::to_string(t);
      return false;
    }
  }
  detail = "500 random relator products";
  return true;
}

bool c5_cup_products(std::string& detail) {
  long long checked = 0;
  for (const CoxeterMatrix& m : matrix_family()) {
    EvenPresentation p = to_even(m);
    const int n = p.size();
    CupTable table = cup_table(p);
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        Character phi, psi;
        phi.values.assign(n, 0);
        psi.values.assign(n, 0);
        phi.values[i - 1] = 1;
        psi.values[j - 1] = 1;
        CupValue cv = cup(i, j, p);
        if (cv.coeff != table.entry(i, j)) {
          detail = "table mismatch at " + pair_str(i, j);
          return false;
        }
        for (auto [a, b] : p.pairs()) {
          Int got = hopf_pairing({comm_rel_pair(a, b, p)}, phi, psi);
          Int want = 0;
          if (i != j && std::min(i, j) == a && std::max(i, j) == b) {
            Int half = p.half_label(a, b);
            want = i < j ? half : Int(-half);
          }
          if (got != want) {
            detail = "pairing beta" + std::to_string(i) + " cup beta" +
                     std::to_string(j) + " on class " + pair_str(a, b);
            return false;
          }
          Int via_table = 0;
          if (cv.basis_pair && *cv.basis_pair == std::make_pair(a, b))
            via_table = cv.coeff;
          if (got != via_table) {
            detail = "cup() disagrees with the pairing at " + pair_str(i, j);
            return false;
          }
          ++checked;
        }
      }
  }
  detail = std::to_string(checked) + " pairing evaluations";
  return true;
}

bool c6_chain_identities(std::string& detail) {
  long long pairs = 0, triples = 0, conjugacies = 0;
  for (const GroupTable& g : small_groups()) {
    const int N = g.order();
    BoundaryOracle oracle(g);
    for (int a = 0; a < N; ++a)
      for (int b = 0; b < N; ++b) {
        if (!g.commute(a, b)) continue;
        BarChain<GroupTable> z = pontryagin_chain(g, a, b);
        // products of commuting classes are cycles, antisymmetric on the
        // nose, and vanish on squares and identities
        if (!bar_boundary(z).is_zero()) {
          detail = "product not a cycle, order " + std::to_string(N);
          return false;
        }
        if (!(z + pontryagin_chain(g, b, a)).is_zero()) {
          detail = "antisymmetry fails, order " + std::to_string(N);
          return false;
        }
        if (a == b && !z.is_zero()) {
          detail = "square class nonzero, order " + std::to_string(N);
          return false;
        }
        ++pairs;
        // conjugation invariance, decided by the boundary oracle
        for (int x = 0; x < N; ++x) {
          int ga = g.mul(g.mul(x, a), g.inv(x));
          int gb = g.mul(g.mul(x, b), g.inv(x));
          BarChain<GroupTable> zc = pontryagin_chain(g, ga, gb);
          if (zc == z) {
            ++conjugacies;
            continue;
          }
          if (!oracle.is_boundary(zc - z)) {
            detail = "conjugate class differs, order " + std::to_string(N);
            return false;
          }
          ++conjugacies;
        }
        // bilinearity witness, exact boundary identity
        for (int c = 0; c < N; ++c) {
          if (!g.commute(a, c)) continue;
          BarChain<GroupTable> w = bilinearity_witness(g, a, b, c);
          BarChain<GroupTable> want = pontryagin_chain(g, a, g.mul(b, c)) -
                                      pontryagin_chain(g, a, b) -
                                      pontryagin_chain(g, a, c);
          if (!(bar_boundary(w) == want)) {
            detail = "bilinearity witness fails, order " + std::to_string(N);
            return false;
          }
          ++triples;
        }
      }
  }
  detail = std::to_string(pairs) + " commuting pairs, " +
           std::to_string(triples) + " triples, " +
           std::to_string(conjugacies) + " conjugacy checks over 9 groups";
  return true;
}

bool c7_coxeter_h2_oracle(std::string& detail) {
  struct Case {
    std::string text;
    GroupTable closed;
    int bonds;
  };
  std::vector<Case> cases;
  cases.push_back({"n=2; 1 2 2", dihedral(1), 1});
  cases.push_back({"n=2; 1 2 4", dihedral(2), 1});
  cases.push_back({"n=2; 1 2 6", dihedral(3), 1});
  cases.push_back({"n=3; 1 2 2; 1 3 2; 2 3 2", elementary_abelian(3), 3});
  cases.push_back({"n=3; 1 2 4; 1 3 2; 2 3 2",
                   direct_product(dihedral(2), elementary_abelian(1)), 3});
  for (const Case& c : cases) {
    EvenPresentation p = to_even(parse_matrix(c.text));
    GroupTable w = todd_coxeter(p);
    if (w.order() != c.closed.order()) {
      detail = c.text + ": order " + std::to_string(w.order()) + " vs " +
               std::to_string(c.closed.order());
      return false;
    }
    AbelianInvariants h1_want = two_torsion(p.size());
    if (!(bar_h(w, 1) == h1_want) || !(bar_h(c.closed, 1) == h1_want) ||
        !(cox_h1(p) == h1_want)) {
      detail = c.text + ": H1 mismatch";
      return false;
    }
    AbelianInvariants h2_want = two_torsion(c.bonds);
    if (!(bar_h(w, 2) == h2_want) || !(bar_h(c.closed, 2) == h2_want)) {
      detail = c.text + ": H2 mismatch";
      return false;
    }
  }
  detail = "5 reflection groups, orders 4 8 12 8 16";
  return true;
}

bool c8_quotient_map(std::string& detail) {
  EvenPresentation p = to_even(parse_matrix("n=3; 1 2 4; 1 3 2; 2 3 6"));
  const std::size_t nb = p.pairs().size();
  // basis goes to basis, bijectively
  for (std::size_t t = 0; t < nb; ++t) {
    ArtinH2Class unit;
    unit.coords.assign(nb, 0);
    unit.coords[t] = 1;
    CoxH2Class img = rho_star(unit);
    for (std::size_t u = 0; u < nb; ++u)
      if (img.coords[u] != (t == u ? 1 : 0)) {
        detail = "basis vector " + std::to_string(t) + " not preserved";
        return false;
      }
  }
  // surjective: every mod-2 vector is hit by its 0/1 lift
  for (unsigned mask = 0; mask < (1u << nb); ++mask) {
    ArtinH2Class lift;
    for (std::size_t t = 0; t < nb; ++t)
      lift.coords.push_back((mask >> t) & 1);
    CoxH2Class img = rho_star(lift);
    for (std::size_t t = 0; t < nb; ++t)
      if (img.coords[t] != ((mask >> t) & 1)) {
        detail = "lift of mask " + std::to_string(mask) + " misses";
        return false;
      }
  }
  // kernel is exactly 2 Z^B
  std::mt19937_64 rng(kSeed);
  std::uniform_int_distribution<int> coord(-9, 9);
  for (int t = 0; t < 200; ++t) {
    ArtinH2Class c;
    bool all_even = true;
    for (std::size_t u = 0; u < nb; ++u) {
      int x = coord(rng);
      c.coords.push_back(x);
      if (x % 2 != 0) all_even = false;
    }
    CoxH2Class img = rho_star(c);
    bool zero = true;
    for (auto x : img.coords)
      if (x) zero = false;
    if (zero != all_even) {
      detail = "kernel misclassifies a vector";
      return false;
    }
    ArtinH2Class dbl;
    for (const Int& x : c.coords) dbl.coords.push_back(2 * x);
    for (auto x : rho_star(dbl).coords)
      if (x) {
        detail = "doubled vector survives";
        return false;
      }
  }
  detail = "bijective on the basis, surjective, kernel 2Z^B";
  return true;
}

bool c9_smith_form(std::string& detail) {
  std::mt19937_64 rng(kSeed);
  std::uniform_int_distribution<int> dim(1, 6);
  std::uniform_int_distribution<int> ent(-5, 5);
  for (int t = 0; t < 100; ++t) {
    IntMat m(dim(rng), dim(rng));
    for (Int& x : m.a) x = ent(rng);
    std::vector<Int> got = snf(m);
    if (got != factors_by_minors(m)) {
      detail = "trial " + std::to_string(t) + " disagrees with minor gcds";
      return false;
    }
    for (std::size_t k = 0; k < got.size(); ++k) {
      if (got[k] <= 0 || (k && got[k] % got[k - 1] != 0)) {
        detail = "invariant factor chain broken at trial " +
                 std::to_string(t);
        return false;
      }
    }
  }
  detail = "100 random matrices up to 6x6 vs minor-gcd oracle";
  return true;
}

}  // namespace

int main() {
  criterion(1, "relator wedge images are the half-label multiples of the "
               "basis wedges and are independent",
            5.0, c1_relator_wedge_basis);
  criterion(2, "central correction words satisfy (ab)^k(ba)^-k = w_k[a,b]^k "
               "and vanish in the class-2 quotient",
            10.0, c2_central_correction);
  criterion(3, "the commuting pair multiplies out to the defining relator "
               "by free reduction alone",
            1.0, c3_commuting_pair);
  criterion(4, "factor counting and the wedge reading of flattened products "
               "give the same H2 coordinates",
            10.0, c4_class_vs_wedge);
  criterion(5, "cup products of dual classes equal the pairing values on "
               "every basis presentation",
            5.0, c5_cup_products);
  criterion(6, "product chains are antisymmetric bilinear conjugation-"
               "invariant cycles in every small group",
            60.0, c6_chain_identities);
  criterion(7, "enumerated reflection groups match closed forms with "
               "H2 = (Z/2)^bonds from the bar resolution",
            120.0, c7_coxeter_h2_oracle);
  criterion(8, "reduction mod 2 carries the integral basis bijectively onto "
               "the mod-2 basis with kernel twice the lattice",
            1.0, c8_quotient_map);
  criterion(9, "Smith normal form agrees with the gcd-of-minors oracle on "
               "random integer matrices",
            5.0, c9_smith_form);
  if (g_failures) {
    std::printf("%d criteria failed\n", g_failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
