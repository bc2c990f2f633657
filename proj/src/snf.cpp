#include "evenh/snf.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <utility>

namespace evenh {
namespace {

// Raised by the checked 64-bit path; the caller restarts in arbitrary
// precision. Never escapes this translation unit.
struct Narrow {};

inline void submul(long long& x, long long q, long long y) {
  long long t;
  if (__builtin_mul_overflow(q, y, &t)) throw Narrow{};
  if (__builtin_sub_overflow(x, t, &x)) throw Narrow{};
}
inline void submul(Int& x, const Int& q, const Int& y) { x -= q * y; }

inline long long quot(long long a, long long p) {
  if (p == -1 && a == std::numeric_limits<long long>::min()) throw Narrow{};
  return a / p;
}
inline Int quot(const Int& a, const Int& p) { return a / p; }

inline long long absval(long long v) {
  if (v == std::numeric_limits<long long>::min()) throw Narrow{};
  return v < 0 ? -v : v;
}
inline Int absval(const Int& v) { return v < 0 ? Int(-v) : v; }

inline bool fits64(const Int& v) {
  static const Int lo = std::numeric_limits<long long>::min();
  static const Int hi = std::numeric_limits<long long>::max();
  return v >= lo && v <= hi;
}

// Row-and-column elimination to diagonal form. Tracks row operations in
// `left` when requested (left * input * C = diag for unimodular untracked
// C). When need_chain is set, each finalized pivot divides the remaining
// submatrix, so the diagonal is already the invariant-factor chain.
template <class T>
struct Engine {
  int rows, cols;
  std::vector<T> a;
  std::vector<T> left;
  bool track_left;
  bool need_chain;

  Engine(int r, int c, std::vector<T> data, bool tl, bool nc)
      : rows(r), cols(c), a(std::move(data)), track_left(tl), need_chain(nc) {
    if (track_left) {
      left.assign(std::size_t(rows) * rows, T(0));
      for (int i = 0; i < rows; ++i) left[std::size_t(i) * rows + i] = T(1);
    }
  }

  T& at(int r, int c) { return a[std::size_t(r) * cols + c]; }
  T& lat(int r, int c) { return left[std::size_t(r) * rows + c]; }

  void row_sub(int dst, int src, const T& q, int from_col) {
    for (int c = from_col; c < cols; ++c) submul(at(dst, c), q, at(src, c));
    if (track_left)
      for (int c = 0; c < rows; ++c) submul(lat(dst, c), q, lat(src, c));
  }
  void col_sub(int dst, int src, const T& q, int from_row) {
    for (int r = from_row; r < rows; ++r) submul(at(r, dst), q, at(r, src));
  }
  void swap_rows(int r1, int r2) {
    if (r1 == r2) return;
    for (int c = 0; c < cols; ++c) std::swap(at(r1, c), at(r2, c));
    if (track_left)
      for (int c = 0; c < rows; ++c) std::swap(lat(r1, c), lat(r2, c));
  }
  void swap_cols(int c1, int c2) {
    if (c1 == c2) return;
    for (int r = 0; r < rows; ++r) std::swap(at(r, c1), at(r, c2));
  }

  // Minimal |entry| in the trailing submatrix; early exit on 1.
  bool find_pivot(int t, int& pi, int& pj) {
    bool found = false;
    T best(0);
    for (int i = t; i < rows; ++i)
      for (int j = t; j < cols; ++j) {
        const T& v = at(i, j);
        if (v == 0) continue;
        T av = absval(v);
        if (!found || av < best) {
          best = av;
          pi = i;
          pj = j;
          found = true;
          if (best == 1) return true;
        }
      }
    return found;
  }

  // Returns the diagonal, length min(rows, cols), nonzero prefix.
  std::vector<T> run() {
    const int m = rows < cols ? rows : cols;
    std::vector<T> diag(m, T(0));
    for (int t = 0; t < m; ++t) {
      int pi, pj;
      if (!find_pivot(t, pi, pj)) break;
      swap_rows(t, pi);
      swap_cols(t, pj);
      for (;;) {
        const T p = at(t, t);
        bool dirty = false;
        for (int i = t + 1; i < rows; ++i) {
          if (at(i, t) == 0) continue;
          T q = quot(at(i, t), p);
          if (q != 0) row_sub(i, t, q, t);
          if (at(i, t) != 0) dirty = true;
        }
        for (int j = t + 1; j < cols; ++j) {
          if (at(t, j) == 0) continue;
          T q = quot(at(t, j), p);
          if (q != 0) col_sub(j, t, q, t);
          if (at(t, j) != 0) dirty = true;
        }
        if (dirty) {
          // a remainder smaller than |p| exists; re-pick
          int qi = t, qj = t;
          find_pivot(t, qi, qj);
          swap_rows(t, qi);
          swap_cols(t, qj);
          continue;
        }
        if (need_chain) {
          bool fixed = false;
          for (int i = t + 1; i < rows && !fixed; ++i)
            for (int j = t + 1; j < cols; ++j)
              if (!(at(i, j) % p == 0)) {
                row_sub(t, i, T(-1), t);  // row t += row i
                fixed = true;
                break;
              }
          if (fixed) continue;
        }
        break;
      }
      diag[t] = at(t, t);
    }
    return diag;
  }
};

template <class T>
std::vector<T> narrow_or_copy(const IntMat& m);

template <>
std::vector<long long> narrow_or_copy<long long>(const IntMat& m) {
  std::vector<long long> out(m.a.size());
  for (std::size_t i = 0; i < m.a.size(); ++i) {
    if (!fits64(m.a[i])) throw Narrow{};
    out[i] = m.a[i].convert_to<long long>();
  }
  return out;
}

template <>
std::vector<Int> narrow_or_copy<Int>(const IntMat& m) {
  return m.a;
}

template <class T>
std::vector<Int> snf_with(const IntMat& m) {
  Engine<T> e(m.rows, m.cols, narrow_or_copy<T>(m), false, true);
  std::vector<T> diag = e.run();
  std::vector<Int> out;
  for (const T& d : diag) {
    if (d == 0) break;
    out.push_back(Int(absval(d)));
  }
  return out;
}

template <class T>
LeftDiagonalization diag_with(const IntMat& m) {
  Engine<T> e(m.rows, m.cols, narrow_or_copy<T>(m), true, false);
  std::vector<T> diag = e.run();
  LeftDiagonalization out;
  out.diag.assign(m.rows, 0);
  for (std::size_t i = 0; i < diag.size(); ++i) out.diag[i] = Int(diag[i]);
  out.left = IntMat(m.rows, m.rows);
  for (std::size_t i = 0; i < e.left.size(); ++i) out.left.a[i] = Int(e.left[i]);
  return out;
}

}  // namespace

std::vector<Int> snf(const IntMat& m) {
  try {
    return snf_with<long long>(m);
  } catch (const Narrow&) {
    return snf_with<Int>(m);
  }
}

long long rank(const IntMat& m) { return (long long)snf(m).size(); }

LeftDiagonalization diagonalize_left(const IntMat& m) {
  try {
    return diag_with<long long>(m);
  } catch (const Narrow&) {
    return diag_with<Int>(m);
  }
}

AbelianInvariants quotient_invariants(const IntMat& relations, int ncols) {
  AbelianInvariants inv;
  std::vector<Int> factors = snf(relations);
  inv.free_rank = ncols - (long long)factors.size();
  for (Int& f : factors)
    if (f > 1) inv.torsion.push_back(std::move(f));
  return inv;
}

}  // namespace evenh
