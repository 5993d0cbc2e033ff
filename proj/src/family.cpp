#include "xdeg/family.hpp"

#include "xdeg/error.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>

namespace xdeg {

namespace {

long long parse_ll(const std::string& s, const std::string& ctx) {
  if (s.empty()) fail(errc::bad_family_spec, "missing number in " + ctx);
  for (char c : s)
    if (!std::isdigit((unsigned char)c)) fail(errc::bad_family_spec, "bad number in " + ctx);
  return std::stoll(s);
}

bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

long long checked_order(long long n, const GroupValidation& opts, const std::string& spec) {
  if (n < 1) fail(errc::bad_family_spec, spec + " has nonpositive order");
  if (n > opts.order_cap)
    fail(errc::order_cap_exceeded, spec + " has order " + std::to_string(n));
  return n;
}

FiniteGroup from_mul(const std::string& label, const GroupValidation& opts,
                     const std::vector<std::vector<int>>& raw) {
  return group_from_table(raw, label, opts);
}

FiniteGroup cyclic_group(long long n, const std::string& label, const GroupValidation& opts) {
  checked_order(n, opts, label);
  std::vector<std::vector<int>> raw(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) raw[i][j] = int((i + j) % n);
  return from_mul(label, opts, raw);
}

FiniteGroup abelian_group(const std::vector<long long>& ds, const std::string& label,
                          const GroupValidation& opts) {
  long long n = 1;
  for (long long d : ds) {
    if (d < 2) fail(errc::bad_family_spec, "abelian factors must be >= 2");
    n *= d;
    checked_order(n, opts, label);
  }
  const int k = (int)ds.size();
  // Mixed-radix tuples, first factor most significant.
  auto add = [&](int a, int b) {
    int out = 0;
    for (int i = k - 1; i >= 0; --i) {
      int da = a % ds[i], db = b % ds[i];
      a /= (int)ds[i];
      b /= (int)ds[i];
      int w = 1;
      for (int j = k - 1; j > i; --j) w *= (int)ds[j];
      out += int((da + db) % ds[i]) * w;
    }
    return out;
  };
  std::vector<std::vector<int>> raw(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) raw[i][j] = add(i, j);
  return from_mul(label, opts, raw);
}

FiniteGroup quaternion_group(long long order, const std::string& label,
                             const GroupValidation& opts) {
  if (order < 8 || (order & (order - 1)) != 0)
    fail(errc::bad_family_spec, "quaternion order must be 2^k >= 8");
  checked_order(order, opts, label);
  const int half = (int)order / 2;  // <x> has order 2^(k-1)
  const int q = half / 2;           // y^2 = x^q
  // Element (i,j) = x^i y^j, index i*2 + j.
  auto idx = [&](int i, int j) { return ((i % half + half) % half) * 2 + j; };
  std::vector<std::vector<int>> raw(order, std::vector<int>(order));
  for (int i = 0; i < half; ++i)
    for (int j = 0; j < 2; ++j)
      for (int i2 = 0; i2 < half; ++i2)
        for (int j2 = 0; j2 < 2; ++j2) {
          int ii = j ? i - i2 : i + i2;
          int jj = j + j2;
          if (jj == 2) {
            jj = 0;
            ii += q;
          }
          raw[idx(i, j)][idx(i2, j2)] = idx(ii, jj);
        }
  return from_mul(label, opts, raw);
}

FiniteGroup heisenberg_group(long long p, const std::string& label, const GroupValidation& opts) {
  if (!is_prime(p)) fail(errc::bad_family_spec, "heisenberg parameter must be prime");
  long long n = checked_order(p * p * p, opts, label);
  auto idx = [&](long long a, long long b, long long c) {
    return int(((a % p + p) % p) * p * p + ((b % p + p) % p) * p + ((c % p + p) % p));
  };
  std::vector<std::vector<int>> raw(n, std::vector<int>(n));
  for (long long a = 0; a < p; ++a)
    for (long long b = 0; b < p; ++b)
      for (long long c = 0; c < p; ++c)
        for (long long a2 = 0; a2 < p; ++a2)
          for (long long b2 = 0; b2 < p; ++b2)
            for (long long c2 = 0; c2 < p; ++c2)
              raw[idx(a, b, c)][idx(a2, b2, c2)] = idx(a + a2, b + b2, c + c2 + a * b2);
  return from_mul(label, opts, raw);
}

FiniteGroup symmetric_group(int n, const std::string& label, const GroupValidation& opts) {
  if (n < 1 || n > 5) fail(errc::bad_family_spec, "symmetric degree must be 1..5");
  std::vector<int> base(n);
  std::iota(base.begin(), base.end(), 0);
  std::vector<std::vector<int>> perms;
  std::map<std::vector<int>, int> rank;
  do {
    rank.emplace(base, (int)perms.size());
    perms.push_back(base);
  } while (std::next_permutation(base.begin(), base.end()));
  const int ord = (int)perms.size();
  checked_order(ord, opts, label);
  std::vector<std::vector<int>> raw(ord, std::vector<int>(ord));
  std::vector<int> prod(n);
  for (int a = 0; a < ord; ++a)
    for (int b = 0; b < ord; ++b) {
      for (int x = 0; x < n; ++x) prod[x] = perms[b][perms[a][x]];
      raw[a][b] = rank.at(prod);
    }
  return from_mul(label, opts, raw);
}

// Semidirect product (Z/mod)^d x| C_{cyc} with integer action matrix psi describing
// conjugation by the inverse cyclic generator: psi column i = coordinates of g^-1 t_i g.
// Requires psi^cyc = identity over Z/mod.
FiniteGroup vector_semidirect(long long mod, int d, long long cyc,
                              const std::vector<std::vector<long long>>& psi,
                              const std::string& label, const GroupValidation& opts) {
  long long n = 1;
  for (int i = 0; i < d; ++i) n = checked_order(n * mod, opts, label);
  n = checked_order(n * cyc, opts, label);

  auto matmul = [&](const std::vector<std::vector<long long>>& a,
                    const std::vector<std::vector<long long>>& b) {
    std::vector<std::vector<long long>> c(d, std::vector<long long>(d, 0));
    for (int i = 0; i < d; ++i)
      for (int k = 0; k < d; ++k)
        for (int j = 0; j < d; ++j) c[i][j] = (c[i][j] + a[i][k] * b[k][j]) % mod;
    return c;
  };
  std::vector<std::vector<std::vector<long long>>> pw(cyc);
  pw[0].assign(d, std::vector<long long>(d, 0));
  for (int i = 0; i < d; ++i) pw[0][i][i] = 1;
  std::vector<std::vector<long long>> psi_m(d, std::vector<long long>(d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) psi_m[i][j] = ((psi[i][j] % mod) + mod) % mod;
  for (long long c = 1; c < cyc; ++c) pw[c] = matmul(pw[c - 1], psi_m);
  auto last = matmul(pw[cyc - 1], psi_m);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      if (last[i][j] != (i == j ? 1 : 0))
        fail(errc::internal, "action matrix order does not divide cyclic order");

  long long vcount = n / cyc;
  auto decode = [&](long long v, std::vector<long long>& out) {
    for (int i = d - 1; i >= 0; --i) {
      out[i] = v % mod;
      v /= mod;
    }
  };
  auto encode = [&](const std::vector<long long>& v) {
    long long x = 0;
    for (int i = 0; i < d; ++i) x = x * mod + v[i];
    return x;
  };

  // index = v * cyc + c;  (v,c)*(w,e) = (v + psi^(cyc-c)(w), c+e)
  std::vector<std::vector<int>> raw(n, std::vector<int>(n));
  std::vector<long long> vv(d), ww(d), res(d);
  for (long long v = 0; v < vcount; ++v) {
    decode(v, vv);
    for (long long c = 0; c < cyc; ++c) {
      const auto& m = pw[(cyc - c) % cyc];
      for (long long w = 0; w < vcount; ++w) {
        decode(w, ww);
        for (int i = 0; i < d; ++i) {
          long long acc = vv[i];
          for (int j = 0; j < d; ++j) acc += m[i][j] * ww[j];
          res[i] = acc % mod;
        }
        long long rv = encode(res);
        for (long long e = 0; e < cyc; ++e)
          raw[v * cyc + c][w * cyc + e] = int(rv * cyc + (c + e) % cyc);
      }
    }
  }
  return from_mul(label, opts, raw);
}

long long ipow(long long b, long long e) {
  long long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

FiniteGroup ct_group(long long p, long long t, long long level, const std::string& label,
                     const GroupValidation& opts) {
  if (!is_prime(p) || t < 1 || level < 1) fail(errc::bad_family_spec, "Ct needs prime p, t>=1, level>=1");
  const long long d = ipow(p, t - 1) * (p - 1);
  const long long block = ipow(p, t - 1);
  // Column i (0-based): image of t_{i+1} under g^-1 . g; the trailing coordinate picks
  // up -1 whenever the defining congruence holds.
  std::vector<std::vector<long long>> psi(d, std::vector<long long>(d, 0));
  psi[d - 1][0] = -1;
  for (long long i = 1; i < d; ++i) {
    psi[i - 1][i] = 1;
    if (i % block == 0) psi[d - 1][i] -= 1;
  }
  return vector_semidirect(ipow(p, level), (int)d, ipow(p, t), psi, label, opts);
}

FiniteGroup dsemi_group(long long r, long long level, const std::string& label,
                        const GroupValidation& opts) {
  if (r < 1 || level < 1) fail(errc::bad_family_spec, "Dsemi needs r>=1, level>=1");
  std::vector<std::vector<long long>> psi = {{-1}};
  return vector_semidirect(ipow(2, level), 1, ipow(2, r), psi, label, opts);
}

std::map<std::string, std::string> parse_kv(const std::string& args, const std::string& ctx) {
  std::map<std::string, std::string> kv;
  std::size_t pos = 0;
  while (pos < args.size()) {
    auto comma = args.find(',', pos);
    std::string part = args.substr(pos, comma == std::string::npos ? comma : comma - pos);
    auto eq = part.find('=');
    if (eq == std::string::npos) fail(errc::bad_family_spec, "expected key=value in " + ctx);
    kv[part.substr(0, eq)] = part.substr(eq + 1);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return kv;
}

}  // namespace

FiniteGroup metacyclic(int n, int m, long long k, const std::string& label,
                       const GroupValidation& opts) {
  if (n < 1 || m < 1) fail(errc::bad_input, "metacyclic orders must be positive");
  long long kk = ((k % n) + n) % n;
  long long check = 1;
  for (int j = 0; j < m; ++j) check = (check * kk) % n;
  if (n > 1 && check != 1 % n) fail(errc::bad_input, "k^m != 1 (mod n)");
  long long ord = checked_order((long long)n * m, opts, label);

  std::vector<long long> kpow(m);
  kpow[0] = 1 % std::max(n, 1);
  for (int j = 1; j < m; ++j) kpow[j] = (kpow[j - 1] * kk) % n;

  auto idx = [&](long long i, long long j) { return int(((i % n + n) % n) * m + (j % m + m) % m); };
  std::vector<std::vector<int>> raw(ord, std::vector<int>(ord));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j)
      for (int i2 = 0; i2 < n; ++i2)
        for (int j2 = 0; j2 < m; ++j2)
          raw[idx(i, j)][idx(i2, j2)] = idx(i + i2 * kpow[(m - j) % m], j + j2);
  return from_mul(label, opts, raw);
}

FiniteGroup group_from_family(const std::string& spec, const GroupValidation& opts) {
  auto colon = spec.find(':');
  if (colon == std::string::npos) fail(errc::bad_family_spec, "missing ':' in '" + spec + "'");
  std::string fam = spec.substr(0, colon);
  std::string args = spec.substr(colon + 1);

  if (fam == "cyclic") return cyclic_group(parse_ll(args, spec), spec, opts);

  if (fam == "abelian") {
    if (args.size() < 2 || args.front() != '[' || args.back() != ']')
      fail(errc::bad_family_spec, "abelian wants [d1,d2,...]");
    std::vector<long long> ds;
    std::string body = args.substr(1, args.size() - 2);
    std::size_t pos = 0;
    while (pos <= body.size() && !body.empty()) {
      auto comma = body.find(',', pos);
      ds.push_back(parse_ll(body.substr(pos, comma == std::string::npos ? comma : comma - pos), spec));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    if (ds.empty()) fail(errc::bad_family_spec, "abelian wants at least one factor");
    return abelian_group(ds, spec, opts);
  }

  if (fam == "dihedral") {
    long long ord = parse_ll(args, spec);
    if (ord < 2 || ord % 2) fail(errc::bad_family_spec, "dihedral order must be even and >= 2");
    return metacyclic((int)(ord / 2), 2, ord / 2 - 1, spec, opts);
  }

  if (fam == "quaternion") return quaternion_group(parse_ll(args, spec), spec, opts);

  if (fam == "extraspecial") {
    auto comma = args.find(',');
    if (comma == std::string::npos) fail(errc::bad_family_spec, "extraspecial wants p,+ or p,-");
    long long p = parse_ll(args.substr(0, comma), spec);
    std::string sign = args.substr(comma + 1);
    if (!is_prime(p) || (sign != "+" && sign != "-"))
      fail(errc::bad_family_spec, "extraspecial wants prime p and sign +/-");
    if (p == 2)
      return sign == "+" ? metacyclic(4, 2, 3, spec, opts) : quaternion_group(8, spec, opts);
    if (sign == "+") return heisenberg_group(p, spec, opts);
    return metacyclic((int)(p * p), (int)p, 1 + p, spec, opts);
  }

  if (fam == "heisenberg") return heisenberg_group(parse_ll(args, spec), spec, opts);

  if (fam == "symmetric") return symmetric_group((int)parse_ll(args, spec), spec, opts);

  if (fam == "Ct") {
    auto kv = parse_kv(args, spec);
    if (!kv.count("p") || !kv.count("t") || !kv.count("level"))
      fail(errc::bad_family_spec, "Ct wants p=,t=,level=");
    return ct_group(parse_ll(kv["p"], spec), parse_ll(kv["t"], spec), parse_ll(kv["level"], spec),
                    spec, opts);
  }

  if (fam == "Dsemi") {
    auto kv = parse_kv(args, spec);
    if (!kv.count("r") || !kv.count("level")) fail(errc::bad_family_spec, "Dsemi wants r=,level=");
    return dsemi_group(parse_ll(kv["r"], spec), parse_ll(kv["level"], spec), spec, opts);
  }

  fail(errc::bad_family_spec, "unknown family '" + fam + "'");
}

}  // namespace xdeg
