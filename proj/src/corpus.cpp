#include "xdeg/corpus.hpp"

#include <string>

#include "xdeg/family.hpp"

namespace xdeg {

std::vector<FiniteGroup> corpus(const GroupValidation& gv) {
  std::vector<FiniteGroup> out;
  for (int n = 2; n <= 16; ++n) out.push_back(group_from_family("cyclic:" + std::to_string(n), gv));
  out.push_back(group_from_family("abelian:[2,2]", gv));
  out.push_back(group_from_family("abelian:[2,4]", gv));
  out.push_back(group_from_family("abelian:[3,3]", gv));
  out.push_back(group_from_family("abelian:[2,2,2]", gv));
  out.push_back(group_from_family("dihedral:8", gv));
  out.push_back(group_from_family("dihedral:16", gv));
  out.push_back(group_from_family("dihedral:32", gv));
  out.push_back(group_from_family("quaternion:8", gv));
  out.push_back(group_from_family("quaternion:16", gv));
  out.push_back(metacyclic(8, 2, 3, "semidihedral:16", gv));
  out.push_back(group_from_family("extraspecial:3,+", gv));
  out.push_back(group_from_family("extraspecial:3,-", gv));
  out.push_back(group_from_family("heisenberg:3", gv));
  out.push_back(group_from_family("symmetric:3", gv));
  out.push_back(group_from_family("symmetric:4", gv));
  out.push_back(group_from_family("Ct:p=3,t=1,level=1", gv));
  for (int level = 2; level <= 5; ++level)
    out.push_back(group_from_family("Dsemi:r=1,level=" + std::to_string(level), gv));
  out.push_back(direct_product(group_from_family("dihedral:8", gv), group_from_family("cyclic:3", gv)));
  out.push_back(direct_product(group_from_family("symmetric:3", gv), group_from_family("cyclic:5", gv)));
  return out;
}

}  // namespace xdeg
