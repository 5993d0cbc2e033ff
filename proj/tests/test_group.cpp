#include <algorithm>
#include <vector>

#include "doctest.h"
#include "xdeg/error.hpp"
#include "xdeg/family.hpp"
#include "xdeg/group.hpp"

using namespace xdeg;

namespace {

// Independent reference computations, written against the definitions only.
std::vector<std::int32_t> brute_center(const FiniteGroup& g) {
  std::vector<std::int32_t> out;
  for (std::int32_t x = 0; x < g.n; ++x) {
    bool central = true;
    for (std::int32_t y = 0; y < g.n && central; ++y)
      if (g.mul(x, y) != g.mul(y, x)) central = false;
    if (central) out.push_back(x);
  }
  return out;
}

std::vector<std::int32_t> brute_centralizer(const FiniteGroup& g, std::int32_t x) {
  std::vector<std::int32_t> out;
  for (std::int32_t y = 0; y < g.n; ++y)
    if (g.mul(x, y) == g.mul(y, x)) out.push_back(y);
  return out;
}

int brute_class_count(const FiniteGroup& g) {
  std::vector<char> seen(g.n, 0);
  int classes = 0;
  for (std::int32_t x = 0; x < g.n; ++x) {
    if (seen[x]) continue;
    ++classes;
    for (std::int32_t u = 0; u < g.n; ++u) seen[g.conj(x, u)] = 1;
  }
  return classes;
}

}  // namespace

TEST_CASE("center and centralizer match brute force") {
  for (const char* spec : {"symmetric:3", "dihedral:8", "quaternion:8", "dihedral:12",
                           "heisenberg:3", "abelian:[2,4]"}) {
    FiniteGroup g = group_from_family(spec);
    CHECK(center(g).members == brute_center(g));
    for (std::int32_t x = 0; x < g.n; ++x)
      CHECK(centralizer(g, x).members == brute_centralizer(g, x));
  }
}

TEST_CASE("conjugacy classes match brute force and partition the group") {
  for (const char* spec : {"symmetric:3", "symmetric:4", "dihedral:8", "quaternion:8",
                           "quaternion:16", "heisenberg:3"}) {
    FiniteGroup g = group_from_family(spec);
    ConjClasses cc = conjugacy_classes(g);
    CHECK(cc.count() == brute_class_count(g));
    long long total = 0;
    for (int c = 0; c < cc.count(); ++c) {
      total += cc.sizes[c];
      // |class| * |centralizer(rep)| = |G|
      CHECK((long long)cc.sizes[c] * centralizer(g, cc.reps[c]).order() == g.n);
    }
    CHECK(total == g.n);
  }
  CHECK(conjugacy_classes(group_from_family("symmetric:3")).count() == 3);
  CHECK(conjugacy_classes(group_from_family("dihedral:8")).count() == 5);
  CHECK(conjugacy_classes(group_from_family("quaternion:8")).count() == 5);
  CHECK(conjugacy_classes(group_from_family("symmetric:4")).count() == 5);
}

TEST_CASE("quotients") {
  FiniteGroup d8 = group_from_family("dihedral:8");
  Quotient q = quotient_group(d8, center(d8));
  CHECK(q.group.n == 4);
  for (std::int32_t x = 0; x < 4; ++x) CHECK(q.group.mul(x, x) == q.group.id);
  // Projection is a homomorphism.
  for (std::int32_t a = 0; a < d8.n; ++a)
    for (std::int32_t b = 0; b < d8.n; ++b)
      CHECK(q.to_coset[d8.mul(a, b)] == q.group.mul(q.to_coset[a], q.to_coset[b]));

  FiniteGroup s3 = group_from_family("symmetric:3");
  Subgroup flip = subgroup_from_gens(s3, {1});
  bool is_n = is_normal(s3, flip.members);
  if (!is_n) CHECK_THROWS_AS(quotient_group(s3, flip), error);
  Subgroup a3 = subgroup_from_gens(s3, {(std::int32_t)3});
  if (a3.order() != 3) a3 = subgroup_from_gens(s3, {(std::int32_t)4});
  REQUIRE(a3.order() == 3);
  CHECK(is_normal(s3, a3.members));
  CHECK(quotient_group(s3, a3).group.n == 2);
}

TEST_CASE("abelian invariants") {
  CHECK(abelian_invariants(group_from_family("cyclic:12")) == AbelianInvariants{12});
  CHECK(abelian_invariants(group_from_family("abelian:[2,4]")) == AbelianInvariants{2, 4});
  CHECK(abelian_invariants(group_from_family("abelian:[2,2,2]")) == AbelianInvariants{2, 2, 2});
  CHECK(abelian_invariants(group_from_family("abelian:[2,3,4]")) == AbelianInvariants{2, 12});
  CHECK(abelian_invariants(group_from_family("abelian:[6,10]")) == AbelianInvariants{2, 30});
  CHECK(abelian_invariants(group_from_family("cyclic:1")).empty());
  CHECK_THROWS_AS(abelian_invariants(group_from_family("dihedral:8")), error);
}

TEST_CASE("generating sets") {
  CHECK(generating_set(group_from_family("cyclic:16")).size() == 1);
  CHECK(generating_set(group_from_family("dihedral:8")).size() == 2);
  CHECK(generating_set(group_from_family("abelian:[2,2]")).size() == 2);
  FiniteGroup g = group_from_family("dihedral:32");
  auto gens = generating_set(g);
  CHECK(subgroup_closure(g, gens).size() == (std::size_t)g.n);

  CHECK(min_generators(group_from_family("dihedral:8")) == 2);
  CHECK(min_generators(group_from_family("cyclic:8")) == 1);
  CHECK(min_generators(group_from_family("abelian:[2,2,2]")) == 3);
  CHECK(min_generators(group_from_family("heisenberg:3")) == 2);
  CHECK_THROWS_AS(min_generators(group_from_family("symmetric:3")), error);
}

TEST_CASE("lower central series and nilpotency class") {
  auto lcs_d8 = lower_central_series(group_from_family("dihedral:8"));
  REQUIRE(lcs_d8.size() == 3);
  CHECK(lcs_d8[0].order() == 8);
  CHECK(lcs_d8[1].order() == 2);
  CHECK(lcs_d8[2].order() == 1);

  auto lcs_d16 = lower_central_series(group_from_family("dihedral:16"));
  REQUIRE(lcs_d16.size() == 4);
  CHECK(lcs_d16[1].order() == 4);
  CHECK(lcs_d16[2].order() == 2);
  CHECK(lcs_d16[3].order() == 1);

  // Not nilpotent: the series stabilizes at a nontrivial term.
  auto lcs_s3 = lower_central_series(group_from_family("symmetric:3"));
  CHECK(lcs_s3.back().order() == 3);
}

TEST_CASE("table validation rejects non-groups") {
  CHECK_THROWS_AS(group_from_table({{0, 1}, {1, 1}}, "bad"), error);
  // Subtraction mod 3 is a quasigroup without a two-sided identity.
  CHECK_THROWS_AS(group_from_table({{0, 2, 1}, {1, 0, 2}, {2, 1, 0}}, "bad"), error);
  // Smallest nonassociative loop (order 5) with two-sided identity 0.
  CHECK_THROWS_AS(group_from_table({{0, 1, 2, 3, 4},
                                    {1, 0, 3, 4, 2},
                                    {2, 3, 4, 0, 1},
                                    {3, 4, 1, 2, 0},
                                    {4, 2, 0, 1, 3}},
                                   "bad"),
                  error);
  try {
    group_from_table({{0, 1}, {1, 1}}, "bad");
  } catch (const error& e) {
    CHECK(e.code() == errc::not_a_group);
  }
  // A valid table passes and finds the identity wherever it sits.
  FiniteGroup c2 = group_from_table({{1, 0}, {0, 1}}, "swapped");
  CHECK(c2.id == 1);
  CHECK(c2.n == 2);
}

TEST_CASE("permutation closure") {
  FiniteGroup s3 = group_from_permutations(3, {{1, 0, 2}, {1, 2, 0}}, "s3");
  CHECK(s3.n == 6);
  CHECK_FALSE(s3.is_abelian());
  GroupValidation tight;
  tight.order_cap = 5;
  CHECK_THROWS_AS(group_from_permutations(3, {{1, 0, 2}, {1, 2, 0}}, "s3", tight), error);
  try {
    group_from_permutations(3, {{1, 0, 2}, {1, 2, 0}}, "s3", tight);
  } catch (const error& e) {
    CHECK(e.code() == errc::order_cap_exceeded);
  }
}

TEST_CASE("direct products and materialization") {
  FiniteGroup g = direct_product(group_from_family("dihedral:8"), group_from_family("cyclic:3"));
  CHECK(g.n == 24);
  CHECK(center(g).order() == 6);

  FiniteGroup s3 = group_from_family("symmetric:3");
  auto a3_members = subgroup_closure(s3, {3, 4});
  SubgroupGroup sg = materialize(s3, a3_members);
  CHECK(sg.group.n == (int)a3_members.size());
  for (std::int32_t a = 0; a < sg.group.n; ++a)
    for (std::int32_t b = 0; b < sg.group.n; ++b)
      CHECK(sg.to_parent[sg.group.mul(a, b)] == s3.mul(sg.to_parent[a], sg.to_parent[b]));
}

TEST_CASE("element orders and primes") {
  FiniteGroup q8 = group_from_family("quaternion:8");
  int order4 = 0, order2 = 0;
  for (std::int32_t x = 0; x < q8.n; ++x) {
    if (q8.element_order(x) == 4) ++order4;
    if (q8.element_order(x) == 2) ++order2;
  }
  CHECK(order4 == 6);
  CHECK(order2 == 1);

  long long p = 0;
  int k = 0;
  CHECK(is_prime_power(27, &p, &k));
  CHECK(p == 3);
  CHECK(k == 3);
  CHECK_FALSE(is_prime_power(12));
  CHECK(smallest_prime_divisor(15) == 3);
  CHECK(smallest_prime_divisor(64) == 2);
}
