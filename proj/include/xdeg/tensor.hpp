#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "xdeg/fp_group.hpp"
#include "xdeg/group.hpp"
#include "xdeg/presentation.hpp"

namespace xdeg {

struct TensorOptions {
  int tensor_order_cap = 128;      // tensor_square rejects larger groups
  int small_route_max = 48;        // exterior_square goes through the full pair
                                   // group up to here, relative enumeration above
  std::int64_t max_cosets = 0;     // 0: enumeration default
  bool force_large_route = false;  // cross-validation hook
};

// Presentation of the pair group on generators x_1..x_d, y_1..y_d (y = second
// copy), with both copies of the base relators and the defining conjugation
// relators. With exterior = true the diagonal and swap relators are added, so
// the pair subgroup becomes the exterior square instead of the tensor square.
struct NuPresentation {
  Presentation pres;
  GroupPresentation base;
  int d = 0;
};
NuPresentation nu_presentation(const FiniteGroup& g, bool exterior);

// Word over the pair-group alphabet for [w(x), w(y)-shifted], the pair x(x)y.
Word pair_word(const GroupPresentation& base, int d, std::int32_t x, std::int32_t y);

struct TensorSquare {
  FiniteGroup tensor;                   // G (x) G
  std::vector<std::int32_t> pair;       // n*n, x*n+y -> element of tensor
  std::vector<std::int32_t> kappa;      // tensor element -> [x,y] image in G
  std::vector<std::int32_t> nabla;      // subgroup generated by diagonal pairs
  std::int64_t nu_order = 0;
};
TensorSquare tensor_square(const FiniteGroup& g, const TensorOptions& opts = {});

struct ExteriorSquare {
  FiniteGroup w;                            // G ^ G
  std::vector<std::int32_t> wedge;          // n*n, x*n+y -> element of w
  std::vector<std::int32_t> kappa;          // w element -> commutator image in G
  std::vector<std::int32_t> mult_members;   // kernel of kappa, sorted
  AbelianInvariants multiplier;
  std::int64_t nu_order = 0;                // small route only, else 0
  std::int64_t nabla_order = 0;             // small route only, else 0
  bool via_nu = false;
};
ExteriorSquare exterior_square(const FiniteGroup& g, const TensorOptions& opts = {});

// Machine check of the pair identities, in both the tensor and the exterior
// square. Exhaustive over all quadruples for |G| <= 8, sampled otherwise.
struct IdentityReport {
  std::array<long long, 6> checked{};
  std::array<long long, 6> failed{};
  bool exhaustive = false;

  bool all_hold() const {
    for (long long f : failed)
      if (f) return false;
    return true;
  }
};
IdentityReport check_brown_identities(const FiniteGroup& g, long long samples = 1000,
                                      std::uint64_t seed = 0, const TensorOptions& opts = {});

}  // namespace xdeg
