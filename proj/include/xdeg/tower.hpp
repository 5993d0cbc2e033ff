#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "xdeg/group.hpp"
#include "xdeg/rational.hpp"
#include "xdeg/tensor.hpp"

namespace xdeg {

struct TowerOptions {
  int max_level_order = 0;  // 0 picks 512 for p = 2, 243 for p = 3, 512 otherwise
  TensorOptions tensor;     // forwarded to per-level square construction
};

// Inverse system of finite p-quotients, low level first. proj[k] sends each
// element of levels[k+1] to levels[k]; construction verifies every map is a
// surjective homomorphism whose kernel order is the level order ratio, and
// that level orders strictly increase.
struct Tower {
  std::string family;
  std::int64_t p = 0;
  std::vector<FiniteGroup> levels;
  std::vector<std::vector<std::int32_t>> proj;
};

// family: "Zp:p=..", "Ct:p=..,t=..", or "Dsemi:r=..". Levels are the family
// quotients at truncation depths 1..depth; projections reduce coordinates.
Tower build_tower(const std::string& family, int depth, const GroupValidation& gv = {});

struct HaarValue {
  enum class Status { exact, declared_zero };
  Rational value;
  Status status = Status::exact;
  std::vector<std::int64_t> indices;  // per-level subgroup index trail
};

// chain[k] lists sorted members of a subgroup of levels[k]; projections must
// send chain[k+1] into chain[k]. An index equal across the whole visible tail
// gives the exact value 1/index; an index strictly growing through the last
// stability_window levels is declared zero; anything else needs more levels.
HaarValue haar_measure(const Tower& t, const std::vector<std::vector<std::int32_t>>& chain,
                       int stability_window = 3);

enum class DegreeKind { commutativity, exterior };

struct LimitEstimate {
  std::vector<std::int64_t> orders;  // orders of the levels actually evaluated
  std::vector<Rational> sequence;
  Rational extrapolated;
  bool monotone = false;   // nonincreasing
  bool truncated = false;  // a level above the order cap stopped the walk
};

// Exact degree per level, stopping at the order cap. The extrapolated value
// assumes limit + c/order decay and applies one Richardson step to the last
// two levels; it is a heuristic, tolerance-gated downstream.
LimitEstimate tower_degree_sequence(const Tower& t, DegreeKind kind,
                                    const TowerOptions& opts = {});

struct LimitReport {
  LimitEstimate estimate;
  Rational claimed;
  Rational tol;
  Rational gap;                      // |extrapolated - claimed|
  std::vector<Rational> level_gaps;  // |sequence[k] - claimed|
  bool pass = false;
};

// Needs at least 3 evaluated exterior levels. pass means the finite data is
// consistent with the claimed limit, nothing stronger: quotient monotonicity
// bounds the limit from above only.
LimitReport check_limit(const Tower& t, const Rational& claimed, const Rational& tol,
                        const TowerOptions& opts = {});

struct CompatibilityCheck {
  int upper = 0;  // tower index of the higher level of the pair
  bool skipped = false;
  bool wedge_map_well_defined = false;  // wedge(x,y) -> wedge(pi x, pi y) is a
                                        // homomorphism on the whole square
  bool wedge_map_surjective = false;
  bool kappa_commutes = false;          // commutator maps commute with pi
  bool multiplier_central = false;      // multiplier kernels are central
};

struct CompatibilityReport {
  std::vector<CompatibilityCheck> checks;  // one per consecutive level pair
  int skipped = 0;
  bool all_hold = true;
};

// Checks that each projection induces a surjective homomorphism of exterior
// squares, via the closure of the generated pair graph. The pair-to-wedge
// quotient leg is already verified when small orders build through the full
// pair group. Pairs with a level above the order cap are skipped and counted.
CompatibilityReport tower_compatibility(const Tower& t, const TowerOptions& opts = {});

}  // namespace xdeg
