#pragma once

#include <cstdint>
#include <vector>

#include "xdeg/presentation.hpp"

namespace xdeg {

// Live-coset cap for enumerations; XDEG_MAX_COSETS overrides the built-in default.
std::int64_t tc_default_limit();

struct TcOptions {
  std::int64_t max_cosets = 0;  // 0 means tc_default_limit()
  bool verify = true;           // post-check columns, relators, subgroup gens
  bool standardize = true;      // BFS renumbering from coset 0
};

// Complete coset table of a subgroup. Row c, column 2k is the action of
// generator k+1, column 2k+1 of its inverse. Coset 0 is the subgroup itself.
struct CosetTable {
  int ngens = 0;
  std::int64_t ncosets = 0;
  std::vector<std::int32_t> tab;

  int width() const { return 2 * ngens; }
  std::int32_t act_col(std::int64_t c, int col) const { return tab[c * width() + col]; }
  std::int32_t act(std::int64_t c, int letter) const {
    int col = letter > 0 ? 2 * (letter - 1) : 2 * (-letter - 1) + 1;
    return tab[c * width() + col];
  }
  std::int64_t trace(std::int64_t c, const Word& w) const {
    for (int letter : w) c = act(c, letter);
    return c;
  }
};

// HLT coset enumeration with gap filling, lookahead near the cap, and table
// compaction once dead cosets pass one half. Deterministic for fixed input.
CosetTable todd_coxeter(const Presentation& p, const std::vector<Word>& subgens,
                        TcOptions opts = {});

}  // namespace xdeg
