#include "xdeg/tower.hpp"

#include <cstdint>
#include <cstdio>
#include <numeric>
#include <vector>

#include "doctest.h"
#include "xdeg/degrees.hpp"
#include "xdeg/error.hpp"
#include "xdeg/family.hpp"
#include "xdeg/tensor.hpp"

using namespace xdeg;

namespace {

Rational ratio(long long a, long long b) { return Rational(a, b); }

std::vector<std::vector<std::int32_t>> whole_chain(const Tower& t) {
  std::vector<std::vector<std::int32_t>> c;
  for (const FiniteGroup& g : t.levels) {
    std::vector<std::int32_t> m(g.n);
    std::iota(m.begin(), m.end(), 0);
    c.push_back(std::move(m));
  }
  return c;
}

// Members whose element index is a multiple of stride. For the families here
// (cyclic levels, Dsemi vector-part subgroups) these are subgroups.
std::vector<std::vector<std::int32_t>> stride_chain(const Tower& t, int stride) {
  std::vector<std::vector<std::int32_t>> c;
  for (const FiniteGroup& g : t.levels) {
    std::vector<std::int32_t> m;
    for (std::int32_t x = 0; x < g.n; x += stride) m.push_back(x);
    c.push_back(std::move(m));
  }
  return c;
}

std::vector<std::vector<std::int32_t>> trivial_chain(const Tower& t) {
  std::vector<std::vector<std::int32_t>> c;
  for (const FiniteGroup& g : t.levels) c.push_back({g.id});
  return c;
}

}  // namespace

TEST_CASE("build_tower shapes and projections") {
  Tower d = build_tower("Dsemi:r=1", 4);
  REQUIRE(d.levels.size() == 4);
  CHECK(d.p == 2);
  CHECK(d.levels[0].n == 8);
  CHECK(d.levels[1].n == 16);
  CHECK(d.levels[2].n == 32);
  CHECK(d.levels[3].n == 64);
  REQUIRE(d.proj.size() == 3);
  // construction already verifies hom/surjectivity; spot-check one value:
  // (v, c) at index 2v + c, the map reduces v mod 4 between levels 16 and 8
  CHECK(d.proj[0][2 * 5 + 1] == 2 * 1 + 1);

  Tower z = build_tower("Zp:p=2", 3);
  REQUIRE(z.levels.size() == 3);
  CHECK(z.levels[0].n == 2);
  CHECK(z.levels[1].n == 4);
  CHECK(z.levels[2].n == 8);
  CHECK(z.proj[1][5] == 1);

  Tower c = build_tower("Ct:p=3,t=1", 2);
  REQUIRE(c.levels.size() == 2);
  CHECK(c.p == 3);
  CHECK(c.levels[0].n == 27);
  CHECK(c.levels[1].n == 243);

  CHECK_THROWS_AS(build_tower("Zp:p=2", 0), error);
  CHECK_THROWS_AS(build_tower("Zp:p=4", 2), error);
  CHECK_THROWS_AS(build_tower("Zp:q=2", 2), error);
  CHECK_THROWS_AS(build_tower("Zp:p=2,t=1", 2), error);
  CHECK_THROWS_AS(build_tower("Wq:p=2", 2), error);
  CHECK_THROWS_AS(build_tower("Ct:p=3", 2), error);
  CHECK_THROWS_AS(build_tower("Dsemi:r=0", 2), error);
  CHECK_THROWS_AS(build_tower("Dsemi:r=x", 2), error);
}

TEST_CASE("haar measure on dihedral-type and procyclic towers") {
  Tower d = build_tower("Dsemi:r=1", 4);

  HaarValue whole = haar_measure(d, whole_chain(d));
  CHECK(whole.value == 1);
  CHECK(whole.status == HaarValue::Status::exact);
  CHECK(whole.indices == std::vector<std::int64_t>{1, 1, 1, 1});

  // <t> is the vector part, index 2 at every level
  HaarValue t_part = haar_measure(d, stride_chain(d, 2));
  CHECK(t_part.value == ratio(1, 2));
  CHECK(t_part.status == HaarValue::Status::exact);

  HaarValue t2_part = haar_measure(d, stride_chain(d, 4));
  CHECK(t2_part.value == ratio(1, 4));

  HaarValue triv = haar_measure(d, trivial_chain(d));
  CHECK(triv.value == 0);
  CHECK(triv.status == HaarValue::Status::declared_zero);
  CHECK(triv.indices == std::vector<std::int64_t>{8, 16, 32, 64});

  // exact values are reciprocal p-powers
  for (const HaarValue* h : {&whole, &t_part, &t2_part}) {
    long long den = (long long)denominator(h->value);
    long long q = 0;
    CHECK((den == 1 || (is_prime_power(den, &q) && q == d.p)));
  }

  Tower z = build_tower("Zp:p=2", 4);
  HaarValue half = haar_measure(z, stride_chain(z, 2));
  CHECK(half.value == ratio(1, 2));
  CHECK(half.indices == std::vector<std::int64_t>{2, 2, 2, 2});

  // chain whose level-0 entry cannot receive the projected level-1 entry
  auto broken = stride_chain(d, 2);
  broken[0] = {d.levels[0].id};
  CHECK_THROWS_AS(haar_measure(d, broken), error);

  auto short_chain = whole_chain(d);
  short_chain.pop_back();
  CHECK_THROWS_AS(haar_measure(d, short_chain), error);

  // {1, t} is not closed in the level-0 group (t has order 4)
  auto not_subgroup = whole_chain(d);
  not_subgroup[0] = {0, 2};
  CHECK_THROWS_AS(haar_measure(d, not_subgroup), error);

  // two levels of growth cannot be declared zero with a window of three
  Tower z2 = build_tower("Zp:p=2", 2);
  auto mixed = whole_chain(z2);
  mixed[1] = {0, 2};
  CHECK_THROWS_AS(haar_measure(z2, mixed), error);

  // a window longer than the tower never declares zero either
  CHECK_THROWS_AS(haar_measure(d, trivial_chain(d), 5), error);
}

TEST_CASE("degree sequences along the dihedral-type tower") {
  Tower d = build_tower("Dsemi:r=1", 4);

  // closed forms for these levels: commutativity 1/4 + 3/N, exterior 1/4 + 3/(2N)
  LimitEstimate ext = tower_degree_sequence(d, DegreeKind::exterior);
  REQUIRE(ext.sequence.size() == 4);
  CHECK(ext.orders == std::vector<std::int64_t>{8, 16, 32, 64});
  CHECK(ext.sequence[0] == ratio(7, 16));
  CHECK(ext.sequence[1] == ratio(11, 32));
  CHECK(ext.sequence[2] == ratio(19, 64));
  CHECK(ext.sequence[3] == ratio(35, 128));
  CHECK(ext.monotone);
  CHECK_FALSE(ext.truncated);
  // limit + c/N data makes the Richardson step land exactly on the limit
  CHECK(ext.extrapolated == ratio(1, 4));

  LimitEstimate com = tower_degree_sequence(d, DegreeKind::commutativity);
  REQUIRE(com.sequence.size() == 4);
  CHECK(com.sequence[0] == ratio(5, 8));
  CHECK(com.sequence[1] == ratio(7, 16));
  CHECK(com.sequence[2] == ratio(11, 32));
  CHECK(com.sequence[3] == ratio(19, 64));
  CHECK(com.monotone);
  CHECK(com.extrapolated == ratio(1, 4));

  // procyclic towers sit at 1 on both degrees
  Tower z = build_tower("Zp:p=3", 3);
  LimitEstimate zext = tower_degree_sequence(z, DegreeKind::exterior);
  CHECK(zext.sequence == std::vector<Rational>{1, 1, 1});
  CHECK(zext.extrapolated == 1);
  CHECK(zext.monotone);

  TowerOptions small;
  small.max_level_order = 16;
  LimitEstimate cut = tower_degree_sequence(d, DegreeKind::exterior, small);
  CHECK(cut.sequence.size() == 2);
  CHECK(cut.truncated);
  CHECK(cut.extrapolated == ratio(1, 4));
}

TEST_CASE("limit consistency gate") {
  Tower d = build_tower("Dsemi:r=1", 5);

  LimitReport ok = check_limit(d, ratio(1, 4), ratio(1, 50));
  CHECK(ok.pass);
  CHECK(ok.gap == 0);
  REQUIRE(ok.level_gaps.size() == 5);
  CHECK(ok.level_gaps[0] == ratio(3, 16));
  CHECK(ok.level_gaps[4] == ratio(3, 256));

  LimitReport off = check_limit(d, ratio(9, 40), ratio(1, 1000));
  CHECK_FALSE(off.pass);
  CHECK(off.gap == ratio(1, 40));

  Tower z = build_tower("Zp:p=3", 3);
  LimitReport one = check_limit(z, Rational(1), Rational(0));
  CHECK(one.pass);
  CHECK(one.gap == 0);

  Tower z2 = build_tower("Zp:p=2", 2);
  CHECK_THROWS_AS(check_limit(z2, ratio(1, 4), ratio(1, 50)), error);
}

TEST_CASE("projection compatibility of exterior squares") {
  Tower z = build_tower("Zp:p=2", 3);
  CompatibilityReport zr = tower_compatibility(z);
  REQUIRE(zr.checks.size() == 2);
  CHECK(zr.all_hold);
  CHECK(zr.skipped == 0);
  for (const CompatibilityCheck& c : zr.checks) {
    CHECK(c.wedge_map_well_defined);
    CHECK(c.wedge_map_surjective);
    CHECK(c.kappa_commutes);
    CHECK(c.multiplier_central);
    CHECK_FALSE(c.skipped);
  }

  Tower d = build_tower("Dsemi:r=1", 2);
  CompatibilityReport dr = tower_compatibility(d);
  REQUIRE(dr.checks.size() == 1);
  CHECK(dr.all_hold);
  CHECK(dr.checks[0].upper == 1);
  CHECK(dr.checks[0].wedge_map_well_defined);
  CHECK(dr.checks[0].wedge_map_surjective);
  CHECK(dr.checks[0].kappa_commutes);
  CHECK(dr.checks[0].multiplier_central);

  // single level: nothing to compare, vacuously consistent
  Tower c1 = build_tower("Ct:p=3,t=1", 1);
  CompatibilityReport cr = tower_compatibility(c1);
  CHECK(cr.checks.empty());
  CHECK(cr.all_hold);

  Tower d4 = build_tower("Dsemi:r=1", 4);
  TowerOptions small;
  small.max_level_order = 16;
  CompatibilityReport sr = tower_compatibility(d4, small);
  REQUIRE(sr.checks.size() == 3);
  CHECK(sr.skipped == 2);
  CHECK_FALSE(sr.checks[0].skipped);
  CHECK(sr.checks[1].skipped);
  CHECK(sr.checks[2].skipped);
  CHECK(sr.all_hold);
}

TEST_CASE("limit example structure at finite levels") {
  // Levels of the r = 1 tower are dihedral: the vector part <t> of index 2 is
  // the whole exterior centralizer of each of its nontrivial elements, and
  // elements outside it keep a two-element exterior centralizer at each level,
  // so their measure contribution dies along the tower.
  Tower d = build_tower("Dsemi:r=1", 3);
  for (const FiniteGroup& g : d.levels) {
    ExteriorSquare e = exterior_square(g);
    for (std::int32_t x = 1; x < g.n; ++x) {
      Subgroup hat = exterior_centralizer(g, e, x);
      if (x % 2 == 0)
        CHECK((int)hat.members.size() == g.n / 2);
      else
        CHECK(hat.members.size() == 2);
    }
    CHECK(exterior_center(g, e).members.size() == 1);
  }

  // r = 2: the square of the top generator a acts trivially on the vector
  // part, so it is central, and the computation shows it is wedge-central at
  // every level. The quotient by <a^2> is dihedral of half order, and quotient
  // equality pins each level to the dihedral value 1/4 + 3/n. The r = 2 tower
  // therefore converges to 1/4, not 1/16.
  Tower d2 = build_tower("Dsemi:r=2", 3);
  for (const FiniteGroup& g : d2.levels) {
    ExteriorSquare e = exterior_square(g);
    Subgroup zh = exterior_center(g, e);
    CHECK(zh.members == std::vector<std::int32_t>{0, 2});  // 2 = a^2 at (0, 2)
    std::int32_t t = 4;  // (v, c) at index 4v + c
    Subgroup hat = exterior_centralizer(g, e, t);
    CHECK((int)hat.members.size() == g.n / 2);  // <t, a^2>, not just <t>
    CHECK(exterior_degree(g, e) == Rational(g.n + 12, 4LL * g.n));
  }
  LimitReport honest = check_limit(d2, ratio(1, 4), ratio(1, 50));
  CHECK(honest.pass);
  CHECK(honest.gap == 0);
  LimitReport sixteenth = check_limit(d2, ratio(1, 16), ratio(1, 50));
  CHECK_FALSE(sixteenth.pass);
  CHECK(sixteenth.gap == ratio(3, 16));
}
