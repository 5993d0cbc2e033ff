#pragma once

#include <string>
#include <vector>

#include "xdeg/group.hpp"

namespace xdeg {

// Group file (JSON), one object:
//   {"kind":"cayley","n":<int>,"table":[[...]]}
//   {"kind":"perm","degree":<int>,"gens":["(1 2 3)(4 5)", ...]}
//   {"kind":"family","spec":"dihedral:8"}
// Cycle notation is 1-based with disjoint cycles; "label" is optional on any
// kind and defaults to the family spec or the kind name.
FiniteGroup group_from_json_text(const std::string& text, const GroupValidation& gv = {});

// arg is "family:<descriptor>" or a path to a JSON group file.
FiniteGroup load_group_arg(const std::string& arg, const GroupValidation& gv = {});

// "(1 2 3)(4 5)" -> images on 0-based points; points may also be comma
// separated. Repeated or out-of-range points are rejected.
std::vector<int> parse_cycles(const std::string& text, int degree);

}  // namespace xdeg
