#include "evenh/coxmat.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

namespace evenh {
namespace {

struct Token {
  std::string text;
  int line;
  int col;
};

// Tokens split on blanks; ';' ends a logical line like '\n'; '#' comments
// to end of physical line. An empty text entry marks a line break.
std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::string cur;
  int tl = 0, tc = 0;
  auto flush = [&] {
    if (!cur.empty()) {
      out.push_back({cur, tl, tc});
      cur.clear();
    }
  };
  auto brk = [&](int l, int c) {
    flush();
    if (!out.empty() && !out.back().text.empty())
      out.push_back({"", l, c});
  };
  bool comment = false;
  for (char ch : s) {
    if (ch == '\n') {
      brk(line, col);
      comment = false;
      ++line;
      col = 1;
      continue;
    }
    if (comment) {
      ++col;
      continue;
    }
    if (ch == '#') {
      brk(line, col);
      comment = true;
    } else if (ch == ';') {
      brk(line, col);
    } else if (ch == ' ' || ch == '\t' || ch == '\r') {
      flush();
    } else {
      if (cur.empty()) {
        tl = line;
        tc = col;
      }
      cur += ch;
    }
    ++col;
  }
  flush();
  return out;
}

[[noreturn]] void fail(const Token& t, const std::string& msg) {
  std::ostringstream os;
  os << "line " << t.line << ", col " << t.col << ": " << msg;
  throw ParseError(os.str(), t.line, t.col);
}

long long parse_int(const Token& t, const std::string& what) {
  long long v = 0;
  auto [p, ec] =
      std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
  if (ec != std::errc() || p != t.text.data() + t.text.size())
    fail(t, "expected " + what + ", got '" + t.text + "'");
  return v;
}

// Off-diagonal label: integer >= 2 or "inf".
int parse_label(const Token& t) {
  if (t.text == "inf") return kInf;
  long long v = parse_int(t, "a label (integer >= 2 or inf)");
  if (v < 2 || v >= kInf)
    fail(t, "label must be >= 2 or inf, got " + t.text);
  return (int)v;
}

std::string pair_str(int i, int j) {
  std::ostringstream os;
  os << "(" << i << "," << j << ")";
  return os.str();
}

}  // namespace

CoxeterMatrix CoxeterMatrix::from_grid(int n, std::vector<int> grid) {
  if (n < 0) throw ValidationError("matrix size must be nonnegative");
  if ((int)grid.size() != n * n)
    throw ValidationError("grid size does not match n*n");
  for (int i = 0; i < n; ++i) {
    if (grid[std::size_t(i) * n + i] != 1)
      throw ValidationError("diagonal label m" + pair_str(i + 1, i + 1) +
                            " must be 1");
    for (int j = 0; j < i; ++j) {
      int lo = grid[std::size_t(i) * n + j];
      int hi = grid[std::size_t(j) * n + i];
      if (lo != hi)
        throw ValidationError("matrix is not symmetric at " +
                              pair_str(j + 1, i + 1));
      if (lo != kInf && lo < 2)
        throw ValidationError("label m" + pair_str(j + 1, i + 1) +
                              " must be >= 2 or inf");
    }
  }
  CoxeterMatrix m;
  m.n_ = n;
  m.m_ = std::move(grid);
  return m;
}

int CoxeterMatrix::label(int i, int j) const {
  if (i < 1 || i > n_ || j < 1 || j > n_)
    throw ValidationError("index out of range: " + pair_str(i, j));
  return m_[std::size_t(i - 1) * n_ + (j - 1)];
}

CoxeterMatrix parse_matrix(std::string_view text) {
  std::vector<Token> toks = tokenize(text);
  std::size_t pos = 0;
  auto skip_breaks = [&] {
    while (pos < toks.size() && toks[pos].text.empty()) ++pos;
  };
  skip_breaks();
  if (pos >= toks.size())
    throw ParseError("empty input, expected header n=<count>", 1, 1);

  // Header: "n=<k>" as one token or "n = <k>" split across tokens.
  long long n = -1;
  {
    const Token& h = toks[pos];
    if (h.text.rfind("n=", 0) == 0 && h.text.size() > 2) {
      Token v{h.text.substr(2), h.line, h.col + 2};
      n = parse_int(v, "generator count");
      ++pos;
    } else if (h.text == "n") {
      ++pos;
      if (pos < toks.size() && toks[pos].text == "=") ++pos;
      if (pos >= toks.size() || toks[pos].text.empty())
        fail(h, "expected generator count after n=");
      n = parse_int(toks[pos], "generator count");
      ++pos;
    } else {
      fail(h, "expected header n=<count>, got '" + h.text + "'");
    }
    if (n < 0 || n > 10000) fail(h, "generator count out of range");
  }
  skip_breaks();

  std::vector<int> grid(std::size_t(n) * n, kInf);
  for (int i = 0; i < n; ++i) grid[std::size_t(i) * n + i] = 1;

  if (pos < toks.size() && toks[pos].text == "full") {
    ++pos;
    // n*n labels in row-major order; line breaks are not significant.
    std::vector<Token> cells;
    for (; pos < toks.size(); ++pos)
      if (!toks[pos].text.empty()) cells.push_back(toks[pos]);
    if ((long long)cells.size() != n * n) {
      Token at = cells.empty() ? toks.back() : cells.back();
      fail(at, "full form needs " + std::to_string(n * n) + " labels, got " +
                   std::to_string(cells.size()));
    }
    for (long long i = 0; i < n; ++i)
      for (long long j = 0; j < n; ++j) {
        const Token& t = cells[i * n + j];
        if (i == j) {
          if (t.text != "1") fail(t, "diagonal label must be 1");
          continue;
        }
        grid[i * n + j] = parse_label(t);
      }
    // symmetry with positions
    for (long long i = 0; i < n; ++i)
      for (long long j = i + 1; j < n; ++j)
        if (grid[i * n + j] != grid[j * n + i])
          fail(cells[j * n + i], "not symmetric: m" +
                                     pair_str((int)j + 1, (int)i + 1) +
                                     " disagrees with m" +
                                     pair_str((int)i + 1, (int)j + 1));
    return CoxeterMatrix::from_grid((int)n, std::move(grid));
  }

  // Sparse triples: i j label, one per logical line.
  std::set<std::pair<int, int>> seen;
  while (pos < toks.size()) {
    skip_breaks();
    if (pos >= toks.size()) break;
    const Token& ti = toks[pos];
    long long i = parse_int(ti, "a generator index");
    if (i < 1 || i > n) fail(ti, "index out of range [1," + std::to_string(n) + "]");
    ++pos;
    if (pos >= toks.size() || toks[pos].text.empty())
      fail(ti, "expected 'i j label' triple");
    const Token& tj = toks[pos];
    long long j = parse_int(tj, "a generator index");
    if (j < 1 || j > n) fail(tj, "index out of range [1," + std::to_string(n) + "]");
    if (j == i) fail(tj, "diagonal labels are fixed at 1 and cannot be set");
    ++pos;
    if (pos >= toks.size() || toks[pos].text.empty())
      fail(tj, "expected label after pair");
    const Token& tm = toks[pos];
    int label = parse_label(tm);
    ++pos;
    if (pos < toks.size() && !toks[pos].text.empty())
      fail(toks[pos], "expected end of line after triple");
    std::pair<int, int> key = std::minmax((int)i, (int)j);
    if (!seen.insert(key).second)
      fail(ti, "duplicate entry for pair " + pair_str(key.first, key.second));
    grid[std::size_t(i - 1) * n + (j - 1)] = label;
    grid[std::size_t(j - 1) * n + (i - 1)] = label;
  }
  return CoxeterMatrix::from_grid((int)n, std::move(grid));
}

std::string serialize(const CoxeterMatrix& m) {
  std::ostringstream os;
  os << "n=" << m.size() << "\n";
  for (int i = 1; i <= m.size(); ++i)
    for (int j = i + 1; j <= m.size(); ++j)
      if (m.finite(i, j)) os << i << " " << j << " " << m.label(i, j) << "\n";
  return os.str();
}

int EvenPresentation::half_label(int i, int j) const {
  if (i == j) throw DomainError("half label requires i != j");
  if (i < 1 || i > n_ || j < 1 || j > n_)
    throw DomainError("pair index out of range: " + pair_str(i, j));
  std::pair<int, int> key = std::minmax(i, j);
  auto it = half_.find(key);
  return it == half_.end() ? kInf : it->second;
}

int EvenPresentation::pair_index(int i, int j) const {
  std::pair<int, int> key = std::minmax(i, j);
  auto it = std::lower_bound(b_.begin(), b_.end(), key);
  if (it == b_.end() || *it != key)
    throw DomainError("pair " + pair_str(key.first, key.second) +
                      " is not bonded");
  return (int)(it - b_.begin());
}

EvenPresentation to_even(const CoxeterMatrix& m) {
  EvenPresentation p;
  p.n_ = m.size();
  for (int i = 1; i <= m.size(); ++i)
    for (int j = i + 1; j <= m.size(); ++j) {
      int label = m.label(i, j);
      if (label == kInf) continue;
      if (label % 2 != 0)
        throw ValidationError("odd label m" + pair_str(i, j) + " = " +
                              std::to_string(label) +
                              ": matrix is not even");
      p.b_.emplace_back(i, j);
      p.half_[{i, j}] = label / 2;
    }
  return p;
}

}  // namespace evenh
