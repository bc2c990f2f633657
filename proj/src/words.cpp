#include "evenh/words.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace evenh {
namespace {

// In-place free reduction; one stack pass, O(length).
void reduce_letters(std::vector<std::int32_t>& v) {
  std::size_t top = 0;
  for (std::int32_t x : v) {
    if (top > 0 && v[top - 1] == -x)
      --top;
    else
      v[top++] = x;
  }
  v.resize(top);
}

void check_letters(const std::vector<std::int32_t>& v, int alphabet) {
  for (std::int32_t x : v) {
    int idx = x < 0 ? -x : x;
    if (idx < 1 || idx > alphabet)
      throw DomainError("letter index " + std::to_string(idx) +
                        " outside alphabet of size " +
                        std::to_string(alphabet));
  }
}

}  // namespace

Word Word::generator(int index, int alphabet) {
  Word w(alphabet);
  w.letters_ = {(std::int32_t)index};
  check_letters(w.letters_, alphabet);
  return w;
}

Word Word::from_letters(std::vector<std::int32_t> letters, int alphabet) {
  check_letters(letters, alphabet);
  reduce_letters(letters);
  Word w(alphabet);
  w.letters_ = std::move(letters);
  return w;
}

Word Word::inverse() const {
  Word w(alphabet_);
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    w.letters_.push_back(-*it);
  return w;  // reversal of a reduced word is reduced
}

Word Word::pow(long long k) const {
  Word base = k < 0 ? inverse() : *this;
  if (k < 0) k = -k;
  std::vector<std::int32_t> v;
  v.reserve(base.letters_.size() * (std::size_t)k);
  for (long long t = 0; t < k; ++t)
    v.insert(v.end(), base.letters_.begin(), base.letters_.end());
  reduce_letters(v);
  Word out(alphabet_);
  out.letters_ = std::move(v);
  return out;
}

Word operator*(const Word& a, const Word& b) {
  Word w(std::max(a.alphabet_, b.alphabet_));
  w.letters_.reserve(a.letters_.size() + b.letters_.size());
  w.letters_ = a.letters_;
  w.letters_.insert(w.letters_.end(), b.letters_.begin(), b.letters_.end());
  reduce_letters(w.letters_);
  return w;
}

Word reduce(const Word& w) {
  return Word::from_letters(w.letters(), w.alphabet());
}

Word commutator(const Word& g, const Word& h) {
  return g * h * g.inverse() * h.inverse();
}

Word alt(const Word& g, const Word& h, int m) {
  if (m < 1) throw DomainError("alt needs m >= 1");
  std::vector<std::int32_t> v;
  v.reserve((g.length() + h.length()) * ((std::size_t)m / 2 + 1));
  for (int t = 0; t < m; ++t) {
    const auto& src = (t % 2 == 0 ? g : h).letters();
    v.insert(v.end(), src.begin(), src.end());
  }
  return Word::from_letters(std::move(v),
                            std::max(g.alphabet(), h.alphabet()));
}

Word relator(int i, int j, const EvenPresentation& p) {
  if (!p.in_b(i, j))
    throw DomainError("relator: pair (" + std::to_string(i) + "," +
                      std::to_string(j) + ") is not bonded");
  int half = p.half_label(i, j);
  Word ai = Word::generator(i, p.size());
  Word aj = Word::generator(j, p.size());
  return (ai * aj).pow(half) * (aj * ai).pow(-half);
}

std::pair<Word, Word> comm_rel_pair(int i, int j, const EvenPresentation& p) {
  if (!p.in_b(i, j))
    throw DomainError("comm_rel_pair: pair (" + std::to_string(i) + "," +
                      std::to_string(j) + ") is not bonded");
  int half = p.half_label(i, j);
  Word ai = Word::generator(i, p.size());
  Word aj = Word::generator(j, p.size());
  return {ai, alt(aj, ai, 2 * half - 1)};
}

Word central_correction(const Word& a, const Word& b, int k, int max_k) {
  if (k < 1) throw DomainError("central_correction needs k >= 1");
  if (k > max_k)
    throw ResourceLimitError("central_correction: k = " + std::to_string(k) +
                             " exceeds cap " + std::to_string(max_k) +
                             " (word length grows like 3^k)");
  Word ab = a * b;
  Word c = commutator(a, b);
  Word w(ab.alphabet());  // w_1
  Word cpow(ab.alphabet());
  for (int t = 1; t < k; ++t) {
    cpow = cpow * c;  // [a,b]^t
    w = commutator(ab, w * cpow) * w;
  }
  return w;
}

Word parse_word(std::string_view text, int alphabet,
                std::string_view gen_name) {
  std::vector<std::int32_t> letters;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() &&
           (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\n' ||
            text[pos] == '\r'))
      ++pos;
    if (pos >= text.size()) break;
    std::size_t start = pos;
    while (pos < text.size() && text[pos] != ' ' && text[pos] != '\t' &&
           text[pos] != '\n' && text[pos] != '\r')
      ++pos;
    std::string_view tok = text.substr(start, pos - start);
    if (tok == "1") continue;  // identity, matches format_word output
    if (tok.substr(0, gen_name.size()) != gen_name)
      throw ParseError("bad word token '" + std::string(tok) +
                       "', expected " + std::string(gen_name) + "<index>");
    std::string_view rest = tok.substr(gen_name.size());
    long long idx = 0, exp = 1;
    auto caret = rest.find('^');
    std::string_view idx_part = rest.substr(0, caret);
    auto [p1, e1] = std::from_chars(
        idx_part.data(), idx_part.data() + idx_part.size(), idx);
    if (e1 != std::errc() || p1 != idx_part.data() + idx_part.size() ||
        idx < 1 || idx > alphabet)
      throw ParseError("bad generator index in token '" + std::string(tok) +
                       "'");
    if (caret != std::string_view::npos) {
      std::string_view exp_part = rest.substr(caret + 1);
      auto [p2, e2] = std::from_chars(
          exp_part.data(), exp_part.data() + exp_part.size(), exp);
      if (e2 != std::errc() || p2 != exp_part.data() + exp_part.size() ||
          exp == 0 || exp > 1000000 || exp < -1000000)
        throw ParseError("bad exponent in token '" + std::string(tok) + "'");
    }
    std::int32_t letter = exp < 0 ? -(std::int32_t)idx : (std::int32_t)idx;
    for (long long t = 0; t < (exp < 0 ? -exp : exp); ++t)
      letters.push_back(letter);
  }
  return Word::from_letters(std::move(letters), alphabet);
}

std::string format_word(const Word& w, std::string_view gen_name) {
  if (w.is_empty()) return "1";
  std::ostringstream os;
  const auto& v = w.letters();
  for (std::size_t t = 0; t < v.size();) {
    std::size_t run = t;
    while (run < v.size() && v[run] == v[t]) ++run;
    if (t) os << " ";
    long long exp = (long long)(run - t) * (v[t] < 0 ? -1 : 1);
    os << gen_name << (v[t] < 0 ? -v[t] : v[t]);
    if (exp != 1) os << "^" << exp;
    t = run;
  }
  return os.str();
}

}  // namespace evenh
