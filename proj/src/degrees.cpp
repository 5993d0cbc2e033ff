#include "xdeg/degrees.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "xdeg/error.hpp"

namespace xdeg {

namespace {

std::int64_t invariants_order(const AbelianInvariants& inv) {
  std::int64_t o = 1;
  for (std::int64_t d : inv) o *= d;
  return o;
}

// Sorted exterior centralizer membership, no verification.
std::vector<std::int32_t> wedge_row_members(const FiniteGroup& g, const ExteriorSquare& e,
                                            std::int32_t x) {
  std::vector<std::int32_t> members;
  const std::int32_t one = e.w.id;
  for (std::int32_t a = 0; a < g.n; ++a)
    if (e.wedge[(std::size_t)a * g.n + x] == one) members.push_back(a);
  return members;
}

bool sorted_contains(const std::vector<std::int32_t>& v, std::int32_t x) {
  return std::binary_search(v.begin(), v.end(), x);
}

// Per-prime exponent multisets, descending.
std::map<std::int64_t, std::vector<int>> prime_exponents(const AbelianInvariants& inv) {
  std::map<std::int64_t, std::vector<int>> out;
  for (std::int64_t d : inv) {
    for (std::int64_t p = 2; p * p <= d; ++p) {
      if (d % p) continue;
      int e = 0;
      while (d % p == 0) d /= p, ++e;
      out[p].push_back(e);
    }
    if (d > 1) out[d].push_back(1);
  }
  for (auto& [p, es] : out) std::sort(es.begin(), es.end(), std::greater<int>());
  return out;
}

}  // namespace

Rational commutativity_degree(const FiniteGroup& g) {
  ConjClasses cc = conjugacy_classes(g);
  return Rational(cc.count(), g.n);
}

Rational commutativity_degree_brute(const FiniteGroup& g) {
  long long pairs = 0;
  for (std::int32_t x = 0; x < g.n; ++x)
    for (std::int32_t y = 0; y < g.n; ++y)
      if (g.mul(x, y) == g.mul(y, x)) ++pairs;
  return Rational(pairs, (long long)g.n * g.n);
}

Subgroup exterior_centralizer(const FiniteGroup& g, const ExteriorSquare& e, std::int32_t x) {
  std::vector<std::int32_t> members = wedge_row_members(g, e, x);
  if (!is_subgroup(g, members)) fail(errc::internal, "exterior centralizer is not closed");
  Subgroup c = centralizer(g, x);
  for (std::int32_t y : c.members)
    for (std::int32_t a : members)
      if (!sorted_contains(members, g.conj(a, y)))
        fail(errc::internal, "exterior centralizer is not normal in the centralizer");
  Subgroup s;
  s.parent = &g;
  s.members = std::move(members);
  return s;
}

Subgroup exterior_center(const FiniteGroup& g, const ExteriorSquare& e) {
  std::vector<std::int32_t> members;
  const std::int32_t one = e.w.id;
  for (std::int32_t a = 0; a < g.n; ++a) {
    bool all = true;
    for (std::int32_t y = 0; y < g.n && all; ++y)
      if (e.wedge[(std::size_t)a * g.n + y] != one) all = false;
    if (all) members.push_back(a);
  }
  if (!is_subgroup(g, members)) fail(errc::internal, "exterior center is not closed");
  Subgroup z = center(g);
  for (std::int32_t a : members)
    if (!sorted_contains(z.members, a)) fail(errc::internal, "exterior center escapes the center");
  Subgroup s;
  s.parent = &g;
  s.members = std::move(members);
  return s;
}

Rational exterior_degree(const FiniteGroup& g, const ExteriorSquare& e) {
  ConjClasses cc = conjugacy_classes(g);
  const std::int32_t one = e.w.id;
  Rational sum = 0;
  for (int i = 0; i < cc.count(); ++i) {
    std::int32_t x = cc.reps[i];
    long long hat = 0;
    for (std::int32_t a = 0; a < g.n; ++a)
      if (e.wedge[(std::size_t)a * g.n + x] == one) ++hat;
    long long cent = (long long)g.n / cc.sizes[i];
    sum += Rational(hat, cent);
  }
  return sum / g.n;
}

Rational exterior_degree(const FiniteGroup& g, const TensorOptions& opts) {
  ExteriorSquare e = exterior_square(g, opts);
  return exterior_degree(g, e);
}

Rational exterior_degree_brute(const FiniteGroup& g, const ExteriorSquare& e) {
  const std::int32_t one = e.w.id;
  long long pairs = 0;
  for (std::int32_t x = 0; x < g.n; ++x)
    for (std::int32_t y = 0; y < g.n; ++y)
      if (e.wedge[(std::size_t)x * g.n + y] == one) ++pairs;
  return Rational(pairs, (long long)g.n * g.n);
}

bool invariants_embed(const AbelianInvariants& sub, const AbelianInvariants& big) {
  auto se = prime_exponents(sub);
  auto be = prime_exponents(big);
  for (const auto& [p, es] : se) {
    auto it = be.find(p);
    if (it == be.end()) return false;
    if (es.size() > it->second.size()) return false;
    for (std::size_t i = 0; i < es.size(); ++i)
      if (es[i] > it->second[i]) return false;
  }
  return true;
}

int min_generators_any(const FiniteGroup& g) {
  if (g.n == 1) return 0;
  if (is_prime_power(g.n)) return min_generators(g);
  std::vector<std::int32_t> greedy = generating_set(g);
  int ub = (int)greedy.size();
  std::vector<std::int32_t> pool;
  for (std::int32_t x = 0; x < g.n; ++x)
    if (x != g.id) pool.push_back(x);
  for (int k = 1; k < ub; ++k) {
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      std::vector<std::int32_t> seed(k);
      for (int i = 0; i < k; ++i) seed[i] = pool[idx[i]];
      if ((int)subgroup_closure(g, seed).size() == g.n) return k;
      int i = k - 1;
      while (i >= 0 && idx[i] == (int)pool.size() - k + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return ub;
}

DegreeReport degree_report(const FiniteGroup& g, const TensorOptions& opts) {
  if (g.n <= 1) fail(errc::bad_input, "degree report needs a nontrivial group");
  DegreeReport r;
  r.label = g.label;
  r.order = g.n;
  r.p = smallest_prime_divisor(g.n);
  r.p_group = is_prime_power(g.n);

  ExteriorSquare e = exterior_square(g, opts);
  const std::int32_t one = e.w.id;
  const int n = g.n;

  r.d = commutativity_degree(g);
  r.d_wedge = exterior_degree(g, e);
  r.multiplier = e.multiplier;
  Subgroup z = center(g);
  Subgroup zw = exterior_center(g, e);
  r.z_order = z.order();
  r.z_wedge_order = zw.order();
  r.capable = (r.z_wedge_order == 1);

  const std::int64_t mult_order = invariants_order(r.multiplier);
  const Rational mu_z(r.z_order, (std::int64_t)n);
  const Rational mu_zw(r.z_wedge_order, (std::int64_t)n);
  const std::string outside = "outside stated hypotheses: order is not a prime power";

  ConjClasses cc = conjugacy_classes(g);
  std::vector<std::vector<std::int32_t>> hat(cc.count());
  std::vector<Subgroup> cent(cc.count());
  for (int i = 0; i < cc.count(); ++i) {
    hat[i] = wedge_row_members(g, e, cc.reps[i]);
    cent[i] = centralizer(g, cc.reps[i]);
  }

  {
    TheoremCheck c;
    c.id = "unidegree";
    c.statement = "exterior degree at most the commutativity degree";
    c.lhs = r.d_wedge;
    c.rhs = r.d;
    c.holds = c.lhs <= c.rhs;
    r.checks.push_back(c);
  }
  {
    TheoremCheck c;
    c.id = "unidegree-equality";
    c.statement = "equal degrees force the exterior center to equal the center";
    c.lhs = mu_z;
    c.rhs = mu_zw;
    c.applicable = (r.d_wedge == r.d);
    c.holds = c.applicable ? (c.lhs == c.rhs) : true;
    if (!c.applicable) c.note = "degrees differ";
    r.checks.push_back(c);
  }
  {
    TheoremCheck c;
    c.id = "fundamental-upper";
    c.statement = "d_wedge <= d - ((p-1)/p)(mu(center) - mu(exterior center))";
    c.lhs = r.d_wedge;
    c.rhs = r.d - Rational(r.p - 1, r.p) * (mu_z - mu_zw);
    c.applicable = r.p_group;
    c.holds = c.lhs <= c.rhs;
    if (!c.applicable) c.note = outside;
    r.checks.push_back(c);
  }
  {
    TheoremCheck c;
    c.id = "fundamental-lower";
    c.statement = "d_wedge >= mu(exterior center) + (d - mu(exterior center)) / |multiplier|";
    c.lhs = mu_zw + (r.d - mu_zw) / mult_order;
    c.rhs = r.d_wedge;
    c.applicable = r.p_group;
    c.holds = c.lhs <= c.rhs;
    if (!c.applicable) c.note = outside;
    r.checks.push_back(c);
  }
  {
    TheoremCheck c;
    c.id = "t1-divisibility";
    c.statement =
        "|center / exterior center| divides |multiplier|^m, m = min generators of the "
        "quotient by the exterior center";
    Quotient qz = quotient_group(g, zw);
    int m = min_generators_any(qz.group);
    std::int64_t q = r.z_order / r.z_wedge_order;
    BigInt power = boost::multiprecision::pow(BigInt(mult_order), (unsigned)m);
    c.lhs = Rational(power % q);
    c.rhs = 0;
    c.applicable = r.p_group;
    c.holds = (c.lhs == c.rhs);
    if (!c.applicable) c.note = outside;
    r.checks.push_back(c);
  }
  {
    TheoremCheck c;
    c.id = "p1-embedding";
    c.statement = "every centralizer over exterior centralizer embeds in the multiplier";
    long long violations = 0;
    for (int i = 0; i < cc.count(); ++i) {
      if ((int)hat[i].size() == cent[i].order()) continue;
      SubgroupGroup cgrp = materialize(g, cent[i].members);
      std::vector<std::int32_t> inner;
      for (std::int32_t a : hat[i]) inner.push_back(cgrp.from_parent[a]);
      std::sort(inner.begin(), inner.end());
      Subgroup h;
      h.parent = &cgrp.group;
      h.members = std::move(inner);
      Quotient q = quotient_group(cgrp.group, h);
      if (!q.group.is_abelian() ||
          !invariants_embed(abelian_invariants(q.group), r.multiplier))
        ++violations;
    }
    c.lhs = violations;
    c.rhs = 0;
    c.holds = (c.lhs == c.rhs);
    r.checks.push_back(c);
  }
  {
    TheoremCheck c;
    c.id = "c1-contrapositive";
    c.statement = "trivial multiplier forces every exterior centralizer to equal the centralizer";
    long long gaps = 0;
    for (int i = 0; i < cc.count(); ++i)
      if ((int)hat[i].size() != cent[i].order()) ++gaps;
    c.lhs = gaps;
    c.rhs = 0;
    c.applicable = (mult_order == 1);
    c.holds = c.applicable ? (c.lhs == c.rhs) : true;
    if (!c.applicable) c.note = "multiplier is nontrivial";
    r.checks.push_back(c);
  }
  {
    TheoremCheck c;
    c.id = "application-i";
    c.statement =
        "abelian of rank >= 2: d_wedge <= (p^2+p-1)/p^3, equality exactly when the quotient "
        "by the exterior center is p x p";
    bool abelian = g.is_abelian();
    std::size_t rank = abelian ? abelian_invariants(g).size() : 0;
    c.lhs = r.d_wedge;
    c.rhs = Rational(r.p * r.p + r.p - 1, r.p * r.p * r.p);
    c.applicable = r.p_group && abelian && rank >= 2;
    if (c.applicable) {
      Quotient qz = quotient_group(g, zw);
      bool pxp = (qz.group.n == r.p * r.p) &&
                 (abelian_invariants(qz.group) == AbelianInvariants{r.p, r.p});
      c.holds = (c.lhs <= c.rhs) && ((c.lhs == c.rhs) == pxp);
      if (c.lhs == c.rhs) c.note = "equality case: quotient by the exterior center is p x p";
    } else {
      c.holds = true;
      c.note = !r.p_group ? outside : "needs an abelian group of rank at least 2";
    }
    r.checks.push_back(c);
  }
  {
    TheoremCheck c;
    c.id = "application-ii";
    c.statement = "nonabelian with exterior center below the center: d_wedge <= (p^3+p-1)/p^4";
    c.lhs = r.d_wedge;
    c.rhs = Rational(r.p * r.p * r.p + r.p - 1, r.p * r.p * r.p * r.p);
    c.applicable = r.p_group && !g.is_abelian() && (r.z_wedge_order != r.z_order);
    c.holds = c.applicable ? (c.lhs <= c.rhs) : true;
    if (!c.applicable)
      c.note = !r.p_group ? outside : "needs a nonabelian group with exterior center below the center";
    r.checks.push_back(c);
  }
  {
    TheoremCheck c;
    c.id = "l2-i";
    c.statement = "exterior centralizers are subgroups, normal in the matching centralizers";
    long long violations = 0;
    for (std::int32_t x = 0; x < n; ++x) {
      std::vector<std::int32_t> members = wedge_row_members(g, e, x);
      if (!is_subgroup(g, members)) {
        ++violations;
        continue;
      }
      Subgroup cx = centralizer(g, x);
      bool normal = true;
      for (std::int32_t y : cx.members) {
        for (std::int32_t a : members)
          if (!sorted_contains(members, g.conj(a, y))) {
            normal = false;
            break;
          }
        if (!normal) break;
      }
      if (!normal) ++violations;
    }
    c.lhs = violations;
    c.rhs = 0;
    c.holds = (c.lhs == c.rhs);
    r.checks.push_back(c);
  }
  {
    TheoremCheck c;
    c.id = "l2-ii";
    c.statement =
        "exterior center equals the intersection of all exterior centralizers and sits "
        "inside the center";
    std::vector<char> inter(n, 1);
    for (std::int32_t x = 0; x < n; ++x)
      for (std::int32_t a = 0; a < n; ++a)
        if (e.wedge[(std::size_t)a * n + x] != one) inter[a] = 0;
    std::vector<std::int32_t> im;
    for (std::int32_t a = 0; a < n; ++a)
      if (inter[a]) im.push_back(a);
    long long violations = 0;
    if (im != zw.members) ++violations;
    for (std::int32_t a : im)
      if (!sorted_contains(z.members, a)) {
        ++violations;
        break;
      }
    c.lhs = violations;
    c.rhs = 0;
    c.holds = (c.lhs == c.rhs);
    r.checks.push_back(c);
  }
  {
    TheoremCheck c;
    c.id = "l5";
    c.statement = "degree one exactly when the exterior center is the whole group";
    c.lhs = (r.d_wedge == 1) ? 1 : 0;
    c.rhs = (r.z_wedge_order == n) ? 1 : 0;
    c.holds = (c.lhs == c.rhs);
    r.checks.push_back(c);
  }
  return r;
}

QuotientReport verify_quotient_monotonicity(const FiniteGroup& g, int order_cap,
                                            const TensorOptions& opts) {
  if (g.n > order_cap)
    fail(errc::subgroup_enumeration_cap_exceeded,
         "normal subgroup enumeration capped at order " + std::to_string(order_cap));
  QuotientReport report;
  report.label = g.label;

  ExteriorSquare e = exterior_square(g, opts);
  const std::int32_t one = e.w.id;
  report.d_wedge = exterior_degree(g, e);
  Subgroup zw = exterior_center(g, e);

  ConjClasses cc = conjugacy_classes(g);
  std::vector<std::vector<std::int32_t>> cls(cc.count());
  for (std::int32_t x = 0; x < g.n; ++x) cls[cc.class_of[x]].push_back(x);

  // Every normal subgroup is the closure of the class union it contains, so
  // growing one class at a time reaches all of them.
  std::set<std::vector<std::int32_t>> seen;
  std::vector<std::vector<std::int32_t>> work;
  work.push_back({g.id});
  seen.insert(work[0]);
  for (std::size_t i = 0; i < work.size(); ++i) {
    std::vector<std::int32_t> cur = work[i];
    for (const auto& c : cls) {
      if (sorted_contains(cur, c[0])) continue;
      std::vector<std::int32_t> seed = cur;
      seed.insert(seed.end(), c.begin(), c.end());
      std::vector<std::int32_t> closed = subgroup_closure(g, seed);
      if (seen.insert(closed).second) work.push_back(closed);
    }
  }
  std::vector<std::vector<std::int32_t>> normals(seen.begin(), seen.end());
  std::stable_sort(normals.begin(), normals.end(),
                   [](const auto& a, const auto& b) { return a.size() < b.size(); });

  for (const auto& members : normals) {
    QuotientCheck qc;
    qc.n_order = (std::int64_t)members.size();
    Subgroup nsub;
    nsub.parent = &g;
    nsub.members = members;
    Quotient q = quotient_group(g, nsub);
    qc.q_order = q.group.n;
    ExteriorSquare eq = exterior_square(q.group, opts);
    qc.d_wedge_quotient = exterior_degree(q.group, eq);
    qc.inside_z_wedge = true;
    for (std::int32_t a : members)
      if (!sorted_contains(zw.members, a)) {
        qc.inside_z_wedge = false;
        break;
      }
    qc.monotone = (report.d_wedge <= qc.d_wedge_quotient);
    qc.equality = (report.d_wedge == qc.d_wedge_quotient);
    qc.centralizer_image_ok = true;
    const std::int32_t qone = eq.w.id;
    for (std::int32_t x = 0; x < g.n && qc.centralizer_image_ok; ++x)
      for (std::int32_t a = 0; a < g.n; ++a)
        if (e.wedge[(std::size_t)a * g.n + x] == one &&
            eq.wedge[(std::size_t)q.to_coset[a] * q.group.n + q.to_coset[x]] != qone) {
          qc.centralizer_image_ok = false;
          break;
        }
    if (!qc.monotone || (qc.inside_z_wedge && !qc.equality) || !qc.centralizer_image_ok)
      report.all_hold = false;
    report.checks.push_back(qc);
  }
  return report;
}

ProductReport verify_product(const FiniteGroup& a, const FiniteGroup& b,
                             const TensorOptions& opts) {
  if (std::gcd((long long)a.n, (long long)b.n) != 1)
    fail(errc::not_coprime, "direct factors must have coprime orders");
  ProductReport r;
  FiniteGroup ab = direct_product(a, b);
  r.label = ab.label;

  ExteriorSquare ea = exterior_square(a, opts);
  ExteriorSquare eb = exterior_square(b, opts);
  ExteriorSquare eab = exterior_square(ab, opts);
  r.left = exterior_degree(a, ea);
  r.right = exterior_degree(b, eb);
  r.product = exterior_degree(ab, eab);
  r.multiplicative = (r.product == r.left * r.right);

  const std::int32_t onea = ea.w.id, oneb = eb.w.id, oneab = eab.w.id;
  r.centralizers_split = true;
  for (std::int32_t x = 0; x < ab.n && r.centralizers_split; ++x)
    for (std::int32_t y = 0; y < ab.n; ++y) {
      bool split = (ea.wedge[(std::size_t)(x / b.n) * a.n + y / b.n] == onea) &&
                   (eb.wedge[(std::size_t)(x % b.n) * b.n + y % b.n] == oneb);
      bool whole = (eab.wedge[(std::size_t)x * ab.n + y] == oneab);
      if (split != whole) {
        r.centralizers_split = false;
        break;
      }
    }

  Subgroup za = exterior_center(a, ea);
  Subgroup zb = exterior_center(b, eb);
  Subgroup zab = exterior_center(ab, eab);
  std::vector<std::int32_t> expect;
  for (std::int32_t i : za.members)
    for (std::int32_t j : zb.members) expect.push_back(i * b.n + j);
  std::sort(expect.begin(), expect.end());
  r.center_splits = (zab.members == expect);

  r.all_hold = r.multiplicative && r.centralizers_split && r.center_splits;
  return r;
}

}  // namespace xdeg
