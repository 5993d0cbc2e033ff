#pragma once

#include "xdeg/group.hpp"

#include <string>
#include <vector>

namespace xdeg {

// Builds a group from a family descriptor:
//   cyclic:n            abelian:[d1,d2,...]      dihedral:2m
//   quaternion:2^k      extraspecial:p,+|-       heisenberg:p
//   symmetric:n (n<=5)  Ct:p=..,t=..,level=..    Dsemi:r=..,level=..
// Identity is always element 0; elements are canonical coordinate tuples.
FiniteGroup group_from_family(const std::string& spec, const GroupValidation& opts = {});

// Split metacyclic group <t,s | t^n, s^m, s^-1 t s = t^k>, k^m = 1 (mod n).
// Element (i,j) = t^i s^j at index i*m + j. Not part of the descriptor surface;
// used directly for groups outside the family list (semidihedral and friends).
FiniteGroup metacyclic(int n, int m, long long k, const std::string& label,
                       const GroupValidation& opts = {});

}  // namespace xdeg
