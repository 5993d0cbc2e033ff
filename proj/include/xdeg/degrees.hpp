#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "xdeg/group.hpp"
#include "xdeg/rational.hpp"
#include "xdeg/tensor.hpp"

namespace xdeg {

// Conjugacy class count over the order; equals the commuting pair probability.
Rational commutativity_degree(const FiniteGroup& g);
// Commuting pair count over n^2. Independent route, must agree with the above.
Rational commutativity_degree_brute(const FiniteGroup& g);

// {a : a wedge x = 1}. Closure and normality inside the centralizer of x are
// verified against the wedge table; a violation means the table is corrupt.
Subgroup exterior_centralizer(const FiniteGroup& g, const ExteriorSquare& e, std::int32_t x);

// Elements whose whole wedge row is trivial; always inside the center.
Subgroup exterior_center(const FiniteGroup& g, const ExteriorSquare& e);

// Class-representative sum (1/n) sum |exterior centralizer| / |centralizer|.
Rational exterior_degree(const FiniteGroup& g, const ExteriorSquare& e);
Rational exterior_degree(const FiniteGroup& g, const TensorOptions& opts = {});
// Trivial-wedge pair count over n^2. Must agree with the class-sum route.
Rational exterior_degree_brute(const FiniteGroup& g, const ExteriorSquare& e);

// One verified inequality or equivalence instance. lhs and rhs are exact; for
// applicable records holds is exactly the stated comparison of lhs and rhs.
// Records whose hypotheses fail keep applicable = false, holds = true, and an
// explanatory note, with lhs and rhs still evaluated where they make sense.
struct TheoremCheck {
  std::string id;         // stable kebab-case record name
  std::string statement;  // what is being compared
  Rational lhs;
  Rational rhs;
  bool applicable = true;
  bool holds = true;
  std::string note;
};

struct DegreeReport {
  std::string label;
  std::int64_t order = 0;
  std::int64_t p = 0;  // smallest prime divisor of the order
  bool p_group = false;
  Rational d;
  Rational d_wedge;
  AbelianInvariants multiplier;
  std::int64_t z_order = 0;
  std::int64_t z_wedge_order = 0;
  bool capable = false;  // exterior center trivial
  std::vector<TheoremCheck> checks;

  bool all_applicable_hold() const {
    for (const TheoremCheck& c : checks)
      if (c.applicable && !c.holds) return false;
    return true;
  }
  const TheoremCheck* find(const std::string& id) const {
    for (const TheoremCheck& c : checks)
      if (c.id == id) return &c;
    return nullptr;
  }
};

// Full record suite for one group. Bound records that assume a p-group are
// evaluated with p = smallest prime divisor and marked not applicable when the
// order is not a prime power.
DegreeReport degree_report(const FiniteGroup& g, const TensorOptions& opts = {});

struct QuotientCheck {
  std::int64_t n_order = 0;  // |N|
  std::int64_t q_order = 0;  // |G/N|
  Rational d_wedge_quotient;
  bool inside_z_wedge = false;     // N contained in the exterior center
  bool monotone = false;           // d_wedge(G) <= d_wedge(G/N)
  bool equality = false;           // d_wedge(G) == d_wedge(G/N)
  bool centralizer_image_ok = false;  // exterior centralizers map into the
                                      // exterior centralizers of the quotient
};

struct QuotientReport {
  std::string label;
  Rational d_wedge;
  std::vector<QuotientCheck> checks;  // one per normal subgroup
  bool all_hold = true;  // monotone, equality under the center condition,
                         // and image containment, for every normal subgroup
};

// Enumerates every normal subgroup (closures of conjugacy class unions) and
// compares the exterior degree against each quotient. Groups above the cap
// are rejected rather than truncated.
QuotientReport verify_quotient_monotonicity(const FiniteGroup& g, int order_cap = 64,
                                            const TensorOptions& opts = {});

struct ProductReport {
  std::string label;
  Rational left;     // d_wedge of the first factor
  Rational right;    // d_wedge of the second factor
  Rational product;  // d_wedge of the direct product
  bool multiplicative = false;     // product == left * right
  bool centralizers_split = false; // wedge triviality splits on every pair
  bool center_splits = false;      // exterior center is the product of the
                                   // factor exterior centers
  bool all_hold = true;
};

// Requires coprime factor orders.
ProductReport verify_product(const FiniteGroup& a, const FiniteGroup& b,
                             const TensorOptions& opts = {});

// Sorted descending prime-power exponents dominate componentwise exactly when
// one finite abelian group embeds in another; used for multiplier containment.
bool invariants_embed(const AbelianInvariants& sub, const AbelianInvariants& big);

// Minimum generating set size; Frattini rank for prime power order, bounded
// combination search otherwise.
int min_generators_any(const FiniteGroup& g);

}  // namespace xdeg
