#pragma once

#include <vector>

#include "xdeg/group.hpp"

namespace xdeg {

// Deterministic built-in verification corpus (37 groups, orders 2..64):
// cyclic 2..16, four small abelian types, dihedral 8/16/32, quaternion 8/16,
// semidihedral 16, both extraspecial groups of order 27, Heisenberg mod 3,
// symmetric 3/4, the first Ct level for p = 3, the Dsemi r = 1 levels up to
// order 64, and two coprime direct products. Labels are unique descriptors.
std::vector<FiniteGroup> corpus(const GroupValidation& gv = {});

}  // namespace xdeg
