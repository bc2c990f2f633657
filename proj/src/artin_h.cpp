#include "evenh/artin_h.hpp"

#include <sstream>

#include "evenh/magnus.hpp"

namespace evenh {

H1Basis h1(const EvenPresentation& p) {
  // All relators are commutators, so abelianization kills nothing:
  // H_1 = Z^n on the generator classes.
  H1Basis b;
  b.rank = p.size();
  for (int i = 1; i <= p.size(); ++i) b.labels.push_back("a" + std::to_string(i));
  return b;
}

ArtinH2Basis h2(const EvenPresentation& p) {
  ArtinH2Basis basis;
  for (auto [i, j] : p.pairs()) {
    H2BasisEntry e;
    e.pair = {i, j};
    e.half_label = p.half_label(i, j);
    Word c = commutator(Word::generator(i, p.size()),
                        Word::generator(j, p.size()));
    e.representative = c.pow(e.half_label);
    std::ostringstream os;
    os << "[a" << i << ",a" << j << "]";
    if (e.half_label > 1) os << "^" << e.half_label;
    e.display = os.str();
    basis.entries.push_back(std::move(e));
  }
  return basis;
}

RelatorProduct parse_relator_product(std::string_view text,
                                     const EvenPresentation& p) {
  RelatorProduct rp;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    // trim
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    auto last = line.find_last_not_of(" \t\r");
    std::string body = line.substr(first, last - first + 1);

    RelatorFactor f;
    std::istringstream ls(body);
    std::string field;
    bool have_pair = false, have_exp = false;
    std::string conj_text;
    // conj= consumes the rest of the line, it holds a word with spaces
    auto conj_pos = body.find("conj=");
    if (conj_pos != std::string::npos) {
      conj_text = body.substr(conj_pos + 5);
      body.erase(conj_pos);
      ls = std::istringstream(body);
    }
    while (ls >> field) {
      if (field.rfind("pair=", 0) == 0) {
        int i = 0, j = 0;
        char l = 0, c = 0, r = 0;
        std::istringstream ps(field.substr(5));
        ps >> l >> i >> c >> j >> r;
        if (!ps || l != '(' || c != ',' || r != ')')
          throw ParseError("line " + std::to_string(lineno) +
                               ": bad pair syntax '" + field + "'",
                           lineno);
        f.pair = {i, j};
        have_pair = true;
      } else if (field.rfind("exp=", 0) == 0) {
        std::string v = field.substr(4);
        if (v == "+1" || v == "1")
          f.exp = 1;
        else if (v == "-1")
          f.exp = -1;
        else
          throw ParseError("line " + std::to_string(lineno) +
                               ": exp must be +1 or -1, got '" + v + "'",
                           lineno);
        have_exp = true;
      } else {
        throw ParseError("line " + std::to_string(lineno) +
                             ": unknown field '" + field + "'",
                         lineno);
      }
    }
    if (!have_pair)
      throw ParseError("line " + std::to_string(lineno) + ": missing pair=",
                       lineno);
    if (!have_exp)
      throw ParseError("line " + std::to_string(lineno) + ": missing exp=",
                       lineno);
    if (!p.in_b(f.pair.first, f.pair.second))
      throw DomainError("line " + std::to_string(lineno) + ": pair (" +
                        std::to_string(f.pair.first) + "," +
                        std::to_string(f.pair.second) + ") is not bonded");
    f.conj = parse_word(conj_text, p.size());
    rp.factors.push_back(std::move(f));
  }
  return rp;
}

ArtinH2Class class_of(const RelatorProduct& rp, const EvenPresentation& p) {
  // Conjugation acts trivially on these classes, so only the signed count
  // of occurrences of each relator survives.
  ArtinH2Class c;
  c.coords.assign(p.pairs().size(), 0);
  for (const RelatorFactor& f : rp.factors)
    c.coords[p.pair_index(f.pair.first, f.pair.second)] += f.exp;
  return c;
}

Word flatten(const RelatorProduct& rp, const EvenPresentation& p) {
  Word out(p.size());
  for (const RelatorFactor& f : rp.factors) {
    Word r = relator(f.pair.first, f.pair.second, p);
    if (f.exp < 0) r = r.inverse();
    out = out * f.conj * r * f.conj.inverse();
  }
  return out;
}

ArtinH2Class coords_via_wedge(const Word& w, const EvenPresentation& p) {
  WedgeVector v = wedge_image(w);  // throws unless w is in [F,F]
  ArtinH2Class c;
  c.coords.assign(p.pairs().size(), 0);
  for (const auto& [pair, coeff] : v.coeff) {
    auto [i, j] = pair;
    if (!p.in_b(i, j))
      throw DomainError(
          "coords_via_wedge: wedge support at non-bonded pair (" +
          std::to_string(i) + "," + std::to_string(j) +
          "): word is outside the relator subgroup's reach");
    Int half = p.half_label(i, j);
    if (coeff % half != 0)
      throw DomainError("coords_via_wedge: coefficient " + coeff.str() +
                        " at pair (" + std::to_string(i) + "," +
                        std::to_string(j) + ") is not divisible by n(i,j) = " +
                        half.str());
    c.coords[p.pair_index(i, j)] = coeff / half;
  }
  return c;
}

}  // namespace evenh
