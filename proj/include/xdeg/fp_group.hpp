#pragma once

#include <cstdint>
#include <vector>

#include "xdeg/group.hpp"
#include "xdeg/presentation.hpp"
#include "xdeg/todd_coxeter.hpp"

namespace xdeg {

// Presentation of a concrete group together with the dictionary between
// abstract generators and group elements. element_words[x] evaluates to x.
struct GroupPresentation {
  Presentation pres;
  std::vector<std::int32_t> gen_elements;
  std::vector<Word> element_words;
  bool table_based = false;
};

// Multiplication-table presentation for orders up to table_threshold, otherwise
// a greedy generating set with power relators and all products of length <= 2
// rewritten through breadth-first tree words. Verified by re-enumeration; an
// unverified presentation escalates to length-3 products before failing.
GroupPresentation presentation_of_group(const FiniteGroup& g, int table_threshold = 24);

// Evaluates a word of the presentation inside the group.
std::int32_t evaluate_word(const FiniteGroup& g, const std::vector<std::int32_t>& gen_elements,
                           const Word& w);

// Permutation group generated by the generator columns of a coset table.
FiniteGroup perm_group_from_cosets(const CosetTable& ct, const std::string& label,
                                   const GroupValidation& opts = {});

}  // namespace xdeg
