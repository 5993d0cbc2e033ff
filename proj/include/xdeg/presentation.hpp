#pragma once

#include <string>
#include <vector>

namespace xdeg {

// Letters are signed 1-based generator ids: +k is generator k-1, -k its inverse.
using Word = std::vector<int>;

Word word_inverse(const Word& w);
Word free_reduce(Word w);
Word cyclic_reduce(Word w);

struct Presentation {
  int ngens = 0;
  std::vector<std::string> names;  // optional; g1..gN when empty
  std::vector<Word> relators;
  std::string label;

  std::string gen_name(int i) const;
  void check() const;  // validates letter ranges
};

std::string word_text(const Word& w, const Presentation& p);

// Text form: optional "gens: a b c" header, then one relator per line (';' also
// separates), '#' comments. Words use '*', '^int' and parentheses: r^4, (r*s)^2,
// g1*g2*g3^-1. Generators without a header are registered in order of first use.
Presentation presentation_from_text(const std::string& text);
std::string presentation_text(const Presentation& p);

}  // namespace xdeg
