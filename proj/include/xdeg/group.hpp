#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace xdeg {

// Finite group as a validated multiplication table. Element indices are 0..n-1; the
// identity need not be index 0 (it is for every built-in constructor, but imported
// tables may put it anywhere). Immutable after construction.
struct FiniteGroup {
  int n = 0;
  std::vector<std::int32_t> table;  // row-major, table[a*n+b] = a*b
  std::int32_t id = 0;
  std::vector<std::int32_t> inv;
  std::string label;

  std::int32_t mul(std::int32_t a, std::int32_t b) const { return table[(std::size_t)a * n + b]; }
  std::int32_t inverse(std::int32_t a) const { return inv[a]; }
  // x^g = g^-1 x g; right action, matching [x, y] = x^-1 y^-1 x y.
  std::int32_t conj(std::int32_t x, std::int32_t g) const { return mul(mul(inv[g], x), g); }
  std::int32_t comm(std::int32_t x, std::int32_t y) const {
    return mul(mul(inv[x], inv[y]), mul(x, y));
  }
  std::int32_t pow(std::int32_t x, long long e) const;
  long long element_order(std::int32_t x) const;
  bool is_abelian() const;
};

struct Subgroup {
  const FiniteGroup* parent = nullptr;
  std::vector<std::int32_t> members;  // sorted, product/inverse closed, contains identity
  std::vector<std::int32_t> gens;     // optional generator hint

  int order() const { return (int)members.size(); }
  bool contains(std::int32_t x) const;
};

struct ConjClasses {
  std::vector<std::int32_t> class_of;  // element -> class index
  std::vector<std::int32_t> reps;      // smallest element index per class, ascending
  std::vector<std::int32_t> sizes;

  int count() const { return (int)reps.size(); }
};

// Invariant factors d1 | d2 | ... | dk, each > 1, product = group order.
using AbelianInvariants = std::vector<std::int64_t>;

struct Quotient {
  FiniteGroup group;
  std::vector<std::int32_t> to_coset;  // element of G -> element of group
};

// Subgroup materialized as a group of its own, with both direction index maps.
struct SubgroupGroup {
  FiniteGroup group;
  std::vector<std::int32_t> to_parent;
  std::vector<std::int32_t> from_parent;  // -1 outside the subgroup
};

struct GroupValidation {
  int order_cap = 20000;
  int assoc_exhaustive_max = 256;  // full O(n^3) check up to here, sampled above
  std::uint64_t seed = 0;
};

FiniteGroup group_from_table(const std::vector<std::vector<int>>& raw, const std::string& label,
                             const GroupValidation& opts = {});

// Closure of permutations of 0..degree-1 under composition (p then q). Deterministic
// breadth-first element order: identity first, then products in generator order.
FiniteGroup group_from_permutations(int degree, const std::vector<std::vector<int>>& gens,
                                    const std::string& label, const GroupValidation& opts = {});

ConjClasses conjugacy_classes(const FiniteGroup& g);

Subgroup centralizer(const FiniteGroup& g, std::int32_t x);
Subgroup center(const FiniteGroup& g);

// Closure of an arbitrary seed set. Always contains the identity.
std::vector<std::int32_t> subgroup_closure(const FiniteGroup& g,
                                           const std::vector<std::int32_t>& seed);
Subgroup subgroup_from_gens(const FiniteGroup& g, const std::vector<std::int32_t>& gens);
bool is_subgroup(const FiniteGroup& g, const std::vector<std::int32_t>& sorted_members);
bool is_normal(const FiniteGroup& g, const std::vector<std::int32_t>& sorted_members);

Quotient quotient_group(const FiniteGroup& g, const Subgroup& n);
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);
SubgroupGroup materialize(const FiniteGroup& g, const std::vector<std::int32_t>& sorted_members);

AbelianInvariants abelian_invariants(const FiniteGroup& g);

// Greedy generating set: repeatedly adjoin the smallest element outside the current
// closure, then drop members that turned out redundant.
std::vector<std::int32_t> generating_set(const FiniteGroup& g);

// Minimum size of a generating set; p-groups only (Frattini quotient rank).
int min_generators(const FiniteGroup& g);

// gamma_1 = G, gamma_{i+1} = [gamma_i, G]; stops when stable. Nilpotent groups end
// with the trivial term, class = length - 1.
std::vector<Subgroup> lower_central_series(const FiniteGroup& g);

bool is_prime_power(long long n, long long* p_out = nullptr, int* k_out = nullptr);
long long smallest_prime_divisor(long long n);

}  // namespace xdeg
