#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "evenh/coxmat.hpp"
#include "evenh/errors.hpp"

namespace evenh {

// Free-group word over generators 1..alphabet. Letters are nonzero signed
// indices (+i for a generator, -i for its inverse). Every constructor and
// operation freely reduces, so a Word is always in normal form and equality
// of words is equality in the free group.
class Word {
 public:
  Word() = default;
  explicit Word(int alphabet) : alphabet_(alphabet) {}

  static Word generator(int index, int alphabet);
  static Word from_letters(std::vector<std::int32_t> letters, int alphabet);

  int alphabet() const { return alphabet_; }
  const std::vector<std::int32_t>& letters() const { return letters_; }
  bool is_empty() const { return letters_.empty(); }
  std::size_t length() const { return letters_.size(); }

  Word inverse() const;
  Word pow(long long k) const;

  // Binary ops take the larger alphabet, so identity words compose with
  // anything.
  friend Word operator*(const Word& a, const Word& b);

  // Free-group equality; the alphabet size does not participate.
  bool operator==(const Word& o) const { return letters_ == o.letters_; }
  std::strong_ordering operator<=>(const Word& o) const {
    return letters_ <=> o.letters_;
  }

 private:
  std::vector<std::int32_t> letters_;
  int alphabet_ = 0;
};

// Identity on the normal form; exposed so callers can normalize letter
// sequences they assembled by hand.
Word reduce(const Word& w);

// g h g^-1 h^-1
Word commutator(const Word& g, const Word& h);

// Alternating prefix (g h)_m = g h g h ... with m letters, m >= 1.
Word alt(const Word& g, const Word& h, int m);

// (a_i a_j)^{n(i,j)} (a_j a_i)^{-n(i,j)}; throws DomainError when (i,j) is
// not a bonded pair of p.
Word relator(int i, int j, const EvenPresentation& p);

// (a_i, (a_j a_i)_{2 n(i,j) - 1}): a commuting pair in the even Artin group
// whose commutator freely equals relator(i, j, p).
std::pair<Word, Word> comm_rel_pair(int i, int j, const EvenPresentation& p);

// w_1 = empty, w_{k+1} = [ab, w_k [a,b]^k] w_k. Satisfies
// (ab)^k (ba)^-k = w_k [a,b]^k, and w_k lies in [F,[F,F]]. Word length grows
// like 3^k, hence the cap; exceeding it throws ResourceLimitError.
Word central_correction(const Word& a, const Word& b, int k, int max_k = 12);

// Whitespace-separated tokens gen<idx> with optional ^<exp>, e.g.
// "a1 a2^-1 a1^3". gen_name switches between the a- and s-alphabets.
Word parse_word(std::string_view text, int alphabet,
                std::string_view gen_name = "a");
std::string format_word(const Word& w, std::string_view gen_name = "a");

}  // namespace evenh
