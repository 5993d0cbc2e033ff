#include "xdeg/tower.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "xdeg/degrees.hpp"
#include "xdeg/error.hpp"
#include "xdeg/family.hpp"

namespace xdeg {

namespace {

long long parse_ll(const std::string& s) {
  std::size_t pos = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &pos);
  } catch (const std::exception&) {
    fail(errc::bad_family_spec, "bad integer in tower family: " + s);
  }
  if (pos != s.size()) fail(errc::bad_family_spec, "bad integer in tower family: " + s);
  return v;
}

struct FamilySpec {
  std::string name;
  std::map<std::string, long long> kv;
};

FamilySpec parse_family(const std::string& s) {
  FamilySpec out;
  auto colon = s.find(':');
  out.name = s.substr(0, colon);
  if (colon == std::string::npos) return out;
  std::string rest = s.substr(colon + 1);
  std::size_t start = 0;
  while (start <= rest.size()) {
    auto comma = rest.find(',', start);
    std::string part = rest.substr(start, comma == std::string::npos ? comma : comma - start);
    auto eq = part.find('=');
    if (eq == std::string::npos || eq == 0)
      fail(errc::bad_family_spec, "expected key=value in tower family: " + s);
    out.kv[part.substr(0, eq)] = parse_ll(part.substr(eq + 1));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

long long ipow_ll(long long b, int e) {
  long long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

bool is_prime(long long p) {
  long long q = 0;
  int k = 0;
  return is_prime_power(p, &q, &k) && k == 1;
}

// Element index = v*cyc + c where v strings d big-endian digits base mod_hi.
// Reducing every digit mod mod_lo is the coordinate form of the level map.
std::vector<std::int32_t> reduction_map(const FiniteGroup& hi, long long mod_hi, long long mod_lo,
                                        int d, long long cyc) {
  if ((long long)hi.n != ipow_ll(mod_hi, d) * cyc) fail(errc::internal, "level order mismatch");
  std::vector<std::int32_t> pi((std::size_t)hi.n);
  std::vector<long long> dig(d);
  for (std::int32_t x = 0; x < hi.n; ++x) {
    long long v = x / cyc, c = x % cyc;
    for (int i = d - 1; i >= 0; --i) {
      dig[i] = v % mod_hi;
      v /= mod_hi;
    }
    long long lo_v = 0;
    for (int i = 0; i < d; ++i) lo_v = lo_v * mod_lo + dig[i] % mod_lo;
    pi[x] = (std::int32_t)(lo_v * cyc + c);
  }
  return pi;
}

void verify_projection(const FiniteGroup& hi, const FiniteGroup& lo,
                       const std::vector<std::int32_t>& pi, long long p) {
  if (hi.n <= lo.n) fail(errc::internal, "level orders must strictly increase");
  if (pi[hi.id] != lo.id) fail(errc::internal, "projection moves the identity");
  std::vector<char> image((std::size_t)lo.n, 0);
  long long kernel = 0;
  for (std::int32_t x = 0; x < hi.n; ++x) {
    image[pi[x]] = 1;
    if (pi[x] == lo.id) ++kernel;
  }
  for (std::int32_t y = 0; y < lo.n; ++y)
    if (!image[y]) fail(errc::internal, "projection is not surjective");
  if (kernel * (long long)lo.n != (long long)hi.n) fail(errc::internal, "kernel order mismatch");
  long long q = 0;
  if (!is_prime_power(kernel, &q) || q != p) fail(errc::internal, "kernel is not a p-group");
  for (std::int32_t a = 0; a < hi.n; ++a)
    for (std::int32_t b = 0; b < hi.n; ++b)
      if (pi[hi.mul(a, b)] != lo.mul(pi[a], pi[b]))
        fail(errc::internal, "projection is not a homomorphism");
}

int level_order_cap(long long p, const TowerOptions& opts) {
  if (opts.max_level_order > 0) return opts.max_level_order;
  return p == 2 ? 512 : 243;
}

}  // namespace

Tower build_tower(const std::string& family, int depth, const GroupValidation& gv) {
  if (depth < 1) fail(errc::bad_input, "tower depth must be at least 1");
  FamilySpec spec = parse_family(family);
  Tower t;
  t.family = family;
  auto need = [&](const char* key) {
    auto it = spec.kv.find(key);
    if (it == spec.kv.end())
      fail(errc::bad_family_spec, std::string("tower family missing parameter ") + key);
    return it->second;
  };
  if (spec.name == "Zp") {
    if (spec.kv.size() != 1) fail(errc::bad_family_spec, "Zp takes exactly p");
    long long p = need("p");
    if (!is_prime(p)) fail(errc::bad_family_spec, "Zp needs a prime p");
    t.p = p;
    for (int lev = 1; lev <= depth; ++lev)
      t.levels.push_back(group_from_family("cyclic:" + std::to_string(ipow_ll(p, lev)), gv));
    for (int k = 0; k + 1 < depth; ++k) {
      const FiniteGroup& hi = t.levels[k + 1];
      std::int32_t mod_lo = t.levels[k].n;
      std::vector<std::int32_t> pi((std::size_t)hi.n);
      for (std::int32_t x = 0; x < hi.n; ++x) pi[x] = x % mod_lo;
      t.proj.push_back(std::move(pi));
    }
  } else if (spec.name == "Ct") {
    if (spec.kv.size() != 2) fail(errc::bad_family_spec, "Ct takes exactly p and t");
    long long p = need("p"), tt = need("t");
    if (!is_prime(p)) fail(errc::bad_family_spec, "Ct needs a prime p");
    if (tt < 1) fail(errc::bad_family_spec, "Ct needs t >= 1");
    t.p = p;
    int d = (int)(ipow_ll(p, (int)tt - 1) * (p - 1));
    long long cyc = ipow_ll(p, (int)tt);
    std::string stem = "Ct:p=" + std::to_string(p) + ",t=" + std::to_string(tt) + ",level=";
    for (int lev = 1; lev <= depth; ++lev)
      t.levels.push_back(group_from_family(stem + std::to_string(lev), gv));
    for (int k = 0; k + 1 < depth; ++k)
      t.proj.push_back(
          reduction_map(t.levels[k + 1], ipow_ll(p, k + 2), ipow_ll(p, k + 1), d, cyc));
  } else if (spec.name == "Dsemi") {
    if (spec.kv.size() != 1) fail(errc::bad_family_spec, "Dsemi takes exactly r");
    long long r = need("r");
    if (r < 1) fail(errc::bad_family_spec, "Dsemi needs r >= 1");
    t.p = 2;
    std::string stem = "Dsemi:r=" + std::to_string(r) + ",level=";
    for (int lev = 1; lev <= depth; ++lev)
      t.levels.push_back(group_from_family(stem + std::to_string(lev + 1), gv));
    for (int k = 0; k + 1 < depth; ++k)
      t.proj.push_back(
          reduction_map(t.levels[k + 1], ipow_ll(2, k + 3), ipow_ll(2, k + 2), 1, ipow_ll(2, (int)r)));
  } else {
    fail(errc::bad_family_spec, "unknown tower family: " + spec.name);
  }
  for (std::size_t k = 0; k + 1 < t.levels.size(); ++k)
    verify_projection(t.levels[k + 1], t.levels[k], t.proj[k], t.p);
  return t;
}

HaarValue haar_measure(const Tower& t, const std::vector<std::vector<std::int32_t>>& chain,
                       int stability_window) {
  if (stability_window < 1) fail(errc::bad_input, "stability window must be at least 1");
  if (chain.size() != t.levels.size())
    fail(errc::incompatible_chain, "chain must give one subgroup per level");
  for (std::size_t k = 0; k < chain.size(); ++k)
    if (chain[k].empty() || !is_subgroup(t.levels[k], chain[k]))
      fail(errc::incompatible_chain, "chain entry is not a subgroup of its level");
  for (std::size_t k = 0; k + 1 < chain.size(); ++k)
    for (std::int32_t x : chain[k + 1])
      if (!std::binary_search(chain[k].begin(), chain[k].end(), t.proj[k][x]))
        fail(errc::incompatible_chain, "projection leaves the chain");
  HaarValue h;
  for (std::size_t k = 0; k < chain.size(); ++k)
    h.indices.push_back((std::int64_t)t.levels[k].n / (std::int64_t)chain[k].size());
  std::size_t levels = h.indices.size();
  std::size_t w = std::min((std::size_t)stability_window, levels);
  bool tail_equal = true;
  for (std::size_t k = levels - w; k + 1 < levels; ++k)
    tail_equal = tail_equal && h.indices[k] == h.indices[k + 1];
  // A stable tail at any depth pins the value; declaring zero needs the full
  // window of strict growth, a short tower is inconclusive instead.
  bool tail_growing = w == (std::size_t)stability_window && w >= 2;
  for (std::size_t k = levels - w; tail_growing && k + 1 < levels; ++k)
    tail_growing = h.indices[k] < h.indices[k + 1];
  if (tail_equal) {
    h.value = Rational(1, h.indices.back());
    h.status = HaarValue::Status::exact;
  } else if (tail_growing) {
    h.value = Rational(0);
    h.status = HaarValue::Status::declared_zero;
  } else {
    fail(errc::insufficient_levels, "index tail neither stable nor strictly growing");
  }
  return h;
}

LimitEstimate tower_degree_sequence(const Tower& t, DegreeKind kind, const TowerOptions& opts) {
  LimitEstimate est;
  int cap = level_order_cap(t.p, opts);
  for (const FiniteGroup& g : t.levels) {
    if (g.n > cap) {
      est.truncated = true;
      break;
    }
    est.orders.push_back(g.n);
    est.sequence.push_back(kind == DegreeKind::commutativity ? commutativity_degree(g)
                                                             : exterior_degree(g, opts.tensor));
  }
  est.monotone = true;
  for (std::size_t i = 1; i < est.sequence.size(); ++i)
    if (est.sequence[i] > est.sequence[i - 1]) est.monotone = false;
  if (est.sequence.size() >= 2) {
    const Rational& a = est.sequence[est.sequence.size() - 2];
    const Rational& b = est.sequence.back();
    Rational na((long long)est.orders[est.orders.size() - 2]);
    Rational nb((long long)est.orders.back());
    est.extrapolated = (b * nb - a * na) / (nb - na);
  } else if (est.sequence.size() == 1) {
    est.extrapolated = est.sequence[0];
  }
  return est;
}

LimitReport check_limit(const Tower& t, const Rational& claimed, const Rational& tol,
                        const TowerOptions& opts) {
  LimitReport r;
  r.claimed = claimed;
  r.tol = tol;
  r.estimate = tower_degree_sequence(t, DegreeKind::exterior, opts);
  if (r.estimate.sequence.size() < 3)
    fail(errc::insufficient_levels, "limit check needs at least 3 evaluated levels");
  Rational gap = r.estimate.extrapolated - claimed;
  if (gap < 0) gap = -gap;
  r.gap = gap;
  for (const Rational& x : r.estimate.sequence) {
    Rational dgap = x - claimed;
    if (dgap < 0) dgap = -dgap;
    r.level_gaps.push_back(dgap);
  }
  r.pass = r.gap <= tol;
  return r;
}

CompatibilityReport tower_compatibility(const Tower& t, const TowerOptions& opts) {
  CompatibilityReport rep;
  int cap = level_order_cap(t.p, opts);
  std::vector<std::optional<ExteriorSquare>> sq(t.levels.size());
  auto square_at = [&](std::size_t k) -> const ExteriorSquare& {
    if (!sq[k]) sq[k] = exterior_square(t.levels[k], opts.tensor);
    return *sq[k];
  };
  for (std::size_t k = 0; k + 1 < t.levels.size(); ++k) {
    CompatibilityCheck c;
    c.upper = (int)k + 1;
    if (t.levels[k].n > cap || t.levels[k + 1].n > cap) {
      c.skipped = true;
      ++rep.skipped;
      rep.checks.push_back(c);
      continue;
    }
    const ExteriorSquare& lo = square_at(k);
    const ExteriorSquare& hi = square_at(k + 1);
    const FiniteGroup& ghi = t.levels[k + 1];
    const FiniteGroup& glo = t.levels[k];
    const std::vector<std::int32_t>& pi = t.proj[k];
    std::int64_t m = lo.w.n;
    // Closure of the pair graph {(wedge_hi(x,y), wedge_lo(pi x, pi y))} inside
    // W_hi x W_lo. The induced map is a well-defined homomorphism exactly when
    // the closure meets each W_hi fiber once.
    std::vector<char> in((std::size_t)hi.w.n * m, 0);
    std::vector<std::int64_t> gens;
    for (std::int32_t x = 0; x < ghi.n; ++x)
      for (std::int32_t y = 0; y < ghi.n; ++y) {
        std::int64_t e = (std::int64_t)hi.wedge[(std::size_t)x * ghi.n + y] * m +
                         lo.wedge[(std::size_t)pi[x] * glo.n + pi[y]];
        if (!in[e]) {
          in[e] = 1;
          gens.push_back(e);
        }
      }
    std::fill(in.begin(), in.end(), 0);
    std::vector<std::int64_t> queue;
    auto push = [&](std::int64_t e) {
      if (!in[e]) {
        in[e] = 1;
        queue.push_back(e);
      }
    };
    push((std::int64_t)hi.w.id * m + lo.w.id);
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      std::int32_t a = (std::int32_t)(queue[qi] / m), b = (std::int32_t)(queue[qi] % m);
      for (std::int64_t ge : gens)
        push((std::int64_t)hi.w.mul(a, (std::int32_t)(ge / m)) * m +
             lo.w.mul(b, (std::int32_t)(ge % m)));
    }
    std::vector<std::int32_t> fiber((std::size_t)hi.w.n, -2);
    std::vector<char> covered((std::size_t)m, 0);
    for (std::int64_t e : queue) {
      std::int32_t a = (std::int32_t)(e / m), b = (std::int32_t)(e % m);
      fiber[a] = fiber[a] == -2 ? b : -1;
      covered[b] = 1;
    }
    c.wedge_map_well_defined = true;
    for (std::int32_t a = 0; a < hi.w.n; ++a)
      if (fiber[a] < 0) c.wedge_map_well_defined = false;
    c.wedge_map_surjective = true;
    for (std::int32_t b = 0; b < (std::int32_t)m; ++b)
      if (!covered[b]) c.wedge_map_surjective = false;
    c.kappa_commutes = true;
    for (std::int32_t x = 0; x < ghi.n && c.kappa_commutes; ++x)
      for (std::int32_t y = 0; y < ghi.n; ++y) {
        std::int32_t whi = hi.wedge[(std::size_t)x * ghi.n + y];
        std::int32_t wlo = lo.wedge[(std::size_t)pi[x] * glo.n + pi[y]];
        if (pi[hi.kappa[whi]] != lo.kappa[wlo]) {
          c.kappa_commutes = false;
          break;
        }
      }
    auto multiplier_central = [](const ExteriorSquare& s) {
      for (std::int32_t mm : s.mult_members)
        for (std::int32_t wv = 0; wv < s.w.n; ++wv)
          if (s.w.mul(mm, wv) != s.w.mul(wv, mm)) return false;
      return true;
    };
    c.multiplier_central = multiplier_central(hi) && multiplier_central(lo);
    rep.all_hold = rep.all_hold && c.wedge_map_well_defined && c.wedge_map_surjective &&
                   c.kappa_commutes && c.multiplier_central;
    rep.checks.push_back(c);
  }
  return rep;
}

}  // namespace xdeg
