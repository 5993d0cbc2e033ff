#include "xdeg/group.hpp"

#include "xdeg/error.hpp"
#include "xdeg/snf.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

namespace xdeg {

std::int32_t FiniteGroup::pow(std::int32_t x, long long e) const {
  if (e < 0) return pow(inv[x], -e);
  std::int32_t acc = id, base = x;
  while (e > 0) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

long long FiniteGroup::element_order(std::int32_t x) const {
  long long k = 1;
  std::int32_t y = x;
  while (y != id) {
    y = mul(y, x);
    ++k;
  }
  return k;
}

bool FiniteGroup::is_abelian() const {
  for (std::int32_t a = 0; a < n; ++a)
    for (std::int32_t b = a + 1; b < n; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

bool Subgroup::contains(std::int32_t x) const {
  return std::binary_search(members.begin(), members.end(), x);
}

namespace {

void validate_table(FiniteGroup& g, const GroupValidation& opts) {
  const int n = g.n;
  if (n <= 0) fail(errc::not_a_group, "empty table");
  if (n > opts.order_cap) fail(errc::order_cap_exceeded, "order " + std::to_string(n));

  std::vector<char> seen(n);
  for (int a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int b = 0; b < n; ++b) {
      std::int32_t v = g.mul(a, b);
      if (v < 0 || v >= n) fail(errc::not_a_group, "entry out of range");
      if (seen[v]) fail(errc::not_a_group, "row " + std::to_string(a) + " is not a permutation");
      seen[v] = 1;
    }
  }
  for (int b = 0; b < n; ++b) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int a = 0; a < n; ++a) {
      std::int32_t v = g.mul(a, b);
      if (seen[v]) fail(errc::not_a_group, "column " + std::to_string(b) + " is not a permutation");
      seen[v] = 1;
    }
  }

  int id = -1;
  for (int e = 0; e < n && id < 0; ++e) {
    bool ok = true;
    for (int j = 0; j < n && ok; ++j) ok = g.mul(e, j) == j && g.mul(j, e) == j;
    if (ok) id = e;
  }
  if (id < 0) fail(errc::not_a_group, "no two-sided identity");
  g.id = id;

  g.inv.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (g.mul(a, b) == id) {
        if (g.mul(b, a) != id) fail(errc::not_a_group, "one-sided inverse");
        g.inv[a] = b;
        break;
      }
    if (g.inv[a] < 0) fail(errc::not_a_group, "missing inverse");
  }

  if (n <= opts.assoc_exhaustive_max) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        std::int32_t ab = g.mul(a, b);
        for (int c = 0; c < n; ++c)
          if (g.mul(ab, c) != g.mul(a, g.mul(b, c)))
            fail(errc::not_a_group, "associativity fails");
      }
  } else {
    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<int> dist(0, n - 1);
    long long samples = 10LL * n * n;
    for (long long s = 0; s < samples; ++s) {
      int a = dist(rng), b = dist(rng), c = dist(rng);
      if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
        fail(errc::not_a_group, "associativity fails");
    }
  }
}

}  // namespace

FiniteGroup group_from_table(const std::vector<std::vector<int>>& raw, const std::string& label,
                             const GroupValidation& opts) {
  FiniteGroup g;
  g.n = (int)raw.size();
  g.label = label;
  if (g.n > opts.order_cap) fail(errc::order_cap_exceeded, "order " + std::to_string(g.n));
  g.table.resize((std::size_t)g.n * g.n);
  for (int i = 0; i < g.n; ++i) {
    if ((int)raw[i].size() != g.n) fail(errc::not_a_group, "table is not square");
    for (int j = 0; j < g.n; ++j) g.table[(std::size_t)i * g.n + j] = raw[i][j];
  }
  validate_table(g, opts);
  return g;
}

FiniteGroup group_from_permutations(int degree, const std::vector<std::vector<int>>& gens,
                                    const std::string& label, const GroupValidation& opts) {
  if (degree <= 0) fail(errc::bad_input, "degree must be positive");
  for (const auto& p : gens) {
    if ((int)p.size() != degree) fail(errc::bad_input, "permutation degree mismatch");
    std::vector<char> seen(degree, 0);
    for (int v : p) {
      if (v < 0 || v >= degree || seen[v]) fail(errc::bad_input, "not a permutation");
      seen[v] = 1;
    }
  }

  std::vector<int> identity(degree);
  std::iota(identity.begin(), identity.end(), 0);

  std::vector<std::vector<int>> elts;
  std::map<std::vector<int>, int> index;
  elts.push_back(identity);
  index.emplace(identity, 0);
  for (std::size_t head = 0; head < elts.size(); ++head) {
    for (const auto& gperm : gens) {
      std::vector<int> next(degree);
      for (int x = 0; x < degree; ++x) next[x] = gperm[elts[head][x]];
      auto it = index.find(next);
      if (it == index.end()) {
        if ((int)elts.size() >= opts.order_cap)
          fail(errc::order_cap_exceeded, "closure exceeds " + std::to_string(opts.order_cap));
        index.emplace(next, (int)elts.size());
        elts.push_back(std::move(next));
      }
    }
  }

  const int n = (int)elts.size();
  FiniteGroup g;
  g.n = n;
  g.label = label;
  g.table.resize((std::size_t)n * n);
  std::vector<int> prod(degree);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      for (int x = 0; x < degree; ++x) prod[x] = elts[b][elts[a][x]];
      g.table[(std::size_t)a * n + b] = index.at(prod);
    }
  validate_table(g, opts);
  return g;
}

ConjClasses conjugacy_classes(const FiniteGroup& g) {
  ConjClasses cc;
  cc.class_of.assign(g.n, -1);
  for (std::int32_t x = 0; x < g.n; ++x) {
    if (cc.class_of[x] >= 0) continue;
    int cls = (int)cc.reps.size();
    cc.reps.push_back(x);
    std::int32_t size = 0;
    for (std::int32_t t = 0; t < g.n; ++t) {
      std::int32_t y = g.conj(x, t);
      if (cc.class_of[y] < 0) {
        cc.class_of[y] = cls;
        ++size;
      }
    }
    cc.sizes.push_back(size);
  }
  return cc;
}

Subgroup centralizer(const FiniteGroup& g, std::int32_t x) {
  Subgroup s;
  s.parent = &g;
  for (std::int32_t a = 0; a < g.n; ++a)
    if (g.mul(a, x) == g.mul(x, a)) s.members.push_back(a);
  return s;
}

Subgroup center(const FiniteGroup& g) {
  Subgroup s;
  s.parent = &g;
  for (std::int32_t a = 0; a < g.n; ++a) {
    bool central = true;
    for (std::int32_t x = 0; x < g.n && central; ++x) central = g.mul(a, x) == g.mul(x, a);
    if (central) s.members.push_back(a);
  }
  return s;
}

std::vector<std::int32_t> subgroup_closure(const FiniteGroup& g,
                                           const std::vector<std::int32_t>& seed) {
  std::vector<char> in(g.n, 0);
  std::vector<std::int32_t> work;
  in[g.id] = 1;
  work.push_back(g.id);
  for (std::int32_t s : seed)
    if (!in[s]) {
      in[s] = 1;
      work.push_back(s);
    }
  for (std::size_t i = 0; i < work.size(); ++i) {
    std::int32_t inv = g.inverse(work[i]);
    if (!in[inv]) {
      in[inv] = 1;
      work.push_back(inv);
    }
    for (std::size_t j = 0; j <= i; ++j) {
      std::int32_t p = g.mul(work[i], work[j]);
      if (!in[p]) {
        in[p] = 1;
        work.push_back(p);
      }
      p = g.mul(work[j], work[i]);
      if (!in[p]) {
        in[p] = 1;
        work.push_back(p);
      }
    }
  }
  std::sort(work.begin(), work.end());
  return work;
}

Subgroup subgroup_from_gens(const FiniteGroup& g, const std::vector<std::int32_t>& gens) {
  Subgroup s;
  s.parent = &g;
  s.gens = gens;
  s.members = subgroup_closure(g, gens);
  return s;
}

bool is_subgroup(const FiniteGroup& g, const std::vector<std::int32_t>& m) {
  if (!std::binary_search(m.begin(), m.end(), g.id)) return false;
  for (std::int32_t a : m) {
    if (!std::binary_search(m.begin(), m.end(), g.inverse(a))) return false;
    for (std::int32_t b : m)
      if (!std::binary_search(m.begin(), m.end(), g.mul(a, b))) return false;
  }
  return true;
}

bool is_normal(const FiniteGroup& g, const std::vector<std::int32_t>& m) {
  for (std::int32_t a : m)
    for (std::int32_t t = 0; t < g.n; ++t)
      if (!std::binary_search(m.begin(), m.end(), g.conj(a, t))) return false;
  return true;
}

Quotient quotient_group(const FiniteGroup& g, const Subgroup& nsub) {
  const auto& m = nsub.members;
  if (!is_subgroup(g, m)) fail(errc::not_normal, "member set is not a subgroup");
  if (!is_normal(g, m)) fail(errc::not_normal, "subgroup is not normal");

  // Cosets labeled by their smallest member; quotient indices follow sorted labels.
  std::vector<std::int32_t> coset_rep(g.n, -1);
  std::vector<std::int32_t> reps;
  for (std::int32_t x = 0; x < g.n; ++x) {
    if (coset_rep[x] >= 0) continue;
    reps.push_back(x);
    for (std::int32_t h : m) coset_rep[g.mul(x, h)] = x;
  }
  const int q = (int)reps.size();
  std::vector<std::int32_t> rep_index(g.n, -1);
  for (int i = 0; i < q; ++i) rep_index[reps[i]] = i;

  Quotient out;
  out.to_coset.resize(g.n);
  for (std::int32_t x = 0; x < g.n; ++x) out.to_coset[x] = rep_index[coset_rep[x]];

  FiniteGroup& qg = out.group;
  qg.n = q;
  qg.label = g.label + "/N" + std::to_string(m.size());
  qg.table.resize((std::size_t)q * q);
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j)
      qg.table[(std::size_t)i * q + j] = out.to_coset[g.mul(reps[i], reps[j])];
  qg.id = out.to_coset[g.id];
  qg.inv.resize(q);
  for (int i = 0; i < q; ++i) qg.inv[i] = out.to_coset[g.inverse(reps[i])];
  return out;
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  FiniteGroup g;
  g.n = a.n * b.n;
  g.label = a.label + "x" + b.label;
  g.table.resize((std::size_t)g.n * g.n);
  for (int i = 0; i < a.n; ++i)
    for (int j = 0; j < b.n; ++j) {
      std::int32_t x = i * b.n + j;
      for (int k = 0; k < a.n; ++k)
        for (int l = 0; l < b.n; ++l)
          g.table[(std::size_t)x * g.n + k * b.n + l] = a.mul(i, k) * b.n + b.mul(j, l);
    }
  g.id = a.id * b.n + b.id;
  g.inv.resize(g.n);
  for (int i = 0; i < a.n; ++i)
    for (int j = 0; j < b.n; ++j) g.inv[i * b.n + j] = a.inverse(i) * b.n + b.inverse(j);
  return g;
}

SubgroupGroup materialize(const FiniteGroup& g, const std::vector<std::int32_t>& m) {
  if (!is_subgroup(g, m)) fail(errc::internal, "materialize: not a subgroup");
  SubgroupGroup out;
  out.to_parent = m;
  out.from_parent.assign(g.n, -1);
  for (int i = 0; i < (int)m.size(); ++i) out.from_parent[m[i]] = i;
  const int k = (int)m.size();
  FiniteGroup& s = out.group;
  s.n = k;
  s.label = g.label + "<" + std::to_string(k) + ">";
  s.table.resize((std::size_t)k * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      s.table[(std::size_t)i * k + j] = out.from_parent[g.mul(m[i], m[j])];
  s.id = out.from_parent[g.id];
  s.inv.resize(k);
  for (int i = 0; i < k; ++i) s.inv[i] = out.from_parent[g.inverse(m[i])];
  return out;
}

AbelianInvariants abelian_invariants(const FiniteGroup& g) {
  if (!g.is_abelian()) fail(errc::not_abelian, "abelian_invariants on nonabelian group");
  if (g.n == 1) return {};

  std::vector<std::int32_t> gens = generating_set(g);
  const int d = (int)gens.size();

  // Exponent vector per element over the generating set, collected by breadth-first
  // walk; every table edge that lands on a known element contributes a relation row.
  std::vector<std::vector<BigInt>> vec(g.n);
  std::vector<std::int32_t> order;
  std::vector<char> known(g.n, 0);
  vec[g.id].assign(d, BigInt(0));
  known[g.id] = 1;
  order.push_back(g.id);
  std::vector<std::vector<BigInt>> rows;
  for (std::size_t head = 0; head < order.size(); ++head) {
    std::int32_t a = order[head];
    for (int gi = 0; gi < d; ++gi) {
      std::int32_t b = g.mul(a, gens[gi]);
      std::vector<BigInt> v = vec[a];
      v[gi] += 1;
      if (!known[b]) {
        known[b] = 1;
        vec[b] = std::move(v);
        order.push_back(b);
      } else {
        for (int j = 0; j < d; ++j) v[j] -= vec[b][j];
        rows.push_back(std::move(v));
      }
    }
  }
  if ((int)order.size() != g.n) fail(errc::internal, "generating set does not generate");
  return invariant_factors(rows, d);
}

std::vector<std::int32_t> generating_set(const FiniteGroup& g) {
  std::vector<std::int32_t> gens;
  std::vector<std::int32_t> have = {g.id};
  while ((int)have.size() < g.n) {
    std::int32_t next = -1;
    for (std::int32_t x = 0; x < g.n; ++x)
      if (!std::binary_search(have.begin(), have.end(), x)) {
        next = x;
        break;
      }
    gens.push_back(next);
    have = subgroup_closure(g, gens);
  }
  // Drop members made redundant by later picks.
  for (std::size_t i = 0; i < gens.size() && gens.size() > 1;) {
    std::vector<std::int32_t> rest;
    for (std::size_t j = 0; j < gens.size(); ++j)
      if (j != i) rest.push_back(gens[j]);
    if ((int)subgroup_closure(g, rest).size() == g.n)
      gens.erase(gens.begin() + i);
    else
      ++i;
  }
  return gens;
}

int min_generators(const FiniteGroup& g) {
  if (g.n == 1) return 0;
  long long p = 0;
  int k = 0;
  if (!is_prime_power(g.n, &p, &k)) fail(errc::not_p_group, "min_generators needs a p-group");
  std::vector<std::int32_t> seed;
  for (std::int32_t x = 0; x < g.n; ++x) seed.push_back(g.pow(x, p));
  for (std::int32_t x = 0; x < g.n; ++x)
    for (std::int32_t y = x + 1; y < g.n; ++y) seed.push_back(g.comm(x, y));
  std::sort(seed.begin(), seed.end());
  seed.erase(std::unique(seed.begin(), seed.end()), seed.end());
  std::size_t phi = subgroup_closure(g, seed).size();
  long long idx = g.n / (long long)phi;
  int rank = 0;
  while (idx > 1) {
    idx /= p;
    ++rank;
  }
  return rank;
}

std::vector<Subgroup> lower_central_series(const FiniteGroup& g) {
  std::vector<Subgroup> series;
  Subgroup g1;
  g1.parent = &g;
  g1.members.resize(g.n);
  std::iota(g1.members.begin(), g1.members.end(), 0);
  series.push_back(std::move(g1));
  while (true) {
    const auto& prev = series.back().members;
    std::vector<std::int32_t> seed;
    for (std::int32_t x : prev)
      for (std::int32_t t = 0; t < g.n; ++t) seed.push_back(g.comm(x, t));
    std::sort(seed.begin(), seed.end());
    seed.erase(std::unique(seed.begin(), seed.end()), seed.end());
    Subgroup next;
    next.parent = &g;
    next.members = subgroup_closure(g, seed);
    if (next.members == prev) break;
    bool trivial = next.members.size() == 1;
    series.push_back(std::move(next));
    if (trivial) break;
  }
  return series;
}

bool is_prime_power(long long n, long long* p_out, int* k_out) {
  if (n < 2) return false;
  long long p = smallest_prime_divisor(n);
  int k = 0;
  long long m = n;
  while (m % p == 0) {
    m /= p;
    ++k;
  }
  if (m != 1) return false;
  if (p_out) *p_out = p;
  if (k_out) *k_out = k;
  return true;
}

long long smallest_prime_divisor(long long n) {
  if (n < 2) fail(errc::bad_input, "no prime divisor of " + std::to_string(n));
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return d;
  return n;
}

}  // namespace xdeg
