#include "xdeg/tensor.hpp"

#include <algorithm>
#include <random>
#include <numeric>
#include <set>
#include <string>

#include "xdeg/error.hpp"
#include "xdeg/todd_coxeter.hpp"

namespace xdeg {

namespace {

Word shift_word(const Word& w, int d) {
  Word out;
  out.reserve(w.size());
  for (int letter : w) out.push_back(letter > 0 ? letter + d : letter - d);
  return out;
}

Word concat(std::initializer_list<const Word*> parts) {
  Word out;
  for (const Word* p : parts) out.insert(out.end(), p->begin(), p->end());
  return out;
}

Word commutator_word(const Word& a, const Word& b) {
  Word ia = word_inverse(a), ib = word_inverse(b);
  return concat({&ia, &ib, &a, &b});
}

Word conj_word(const Word& w, const Word& by) {
  Word iby = word_inverse(by);
  return concat({&iby, &w, &by});
}

}  // namespace

Word pair_word(const GroupPresentation& base, int d, std::int32_t x, std::int32_t y) {
  return free_reduce(commutator_word(base.element_words[x], shift_word(base.element_words[y], d)));
}

NuPresentation nu_presentation(const FiniteGroup& g, bool exterior) {
  NuPresentation np;
  np.base = presentation_of_group(g, 1);
  int d = np.d = np.base.pres.ngens;
  Presentation& p = np.pres;
  p.ngens = 2 * d;
  p.label = g.label + (exterior ? " exterior pair group" : " tensor pair group");
  for (int i = 0; i < d; ++i) p.names.push_back("x" + std::to_string(i + 1));
  for (int i = 0; i < d; ++i) p.names.push_back("y" + std::to_string(i + 1));

  for (const Word& r : np.base.pres.relators) p.relators.push_back(r);
  for (const Word& r : np.base.pres.relators) p.relators.push_back(shift_word(r, d));

  // Conjugation by either copy of c, or of c^-1, moves the pair [x_a, y_b] to
  // the pair of conjugates. Both signs are needed: conjugating a generator
  // bracket by an inverse generator has no relator instance otherwise and the
  // enumerated group can come out a proper cover.
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      Word bracket{-(a + 1), -(d + b + 1), a + 1, d + b + 1};
      for (int c = 0; c < d; ++c)
        for (int sign : {1, -1}) {
          Word xa_c{-sign * (c + 1), a + 1, sign * (c + 1)};
          Word yb_c{-sign * (d + c + 1), d + b + 1, sign * (d + c + 1)};
          Word rhs = commutator_word(xa_c, yb_c);
          Word irhs = word_inverse(rhs);
          for (int outer : {sign * (c + 1), sign * (d + c + 1)}) {
            Word by{outer};
            Word lhs = conj_word(bracket, by);
            p.relators.push_back(free_reduce(concat({&lhs, &irhs})));
          }
        }
    }

  if (exterior) {
    for (int i = 0; i < d; ++i)
      p.relators.push_back(Word{-(i + 1), -(d + i + 1), i + 1, d + i + 1});
    for (int i = 0; i < d; ++i)
      for (int j = i + 1; j < d; ++j) {
        Word a{-(i + 1), -(d + j + 1), i + 1, d + j + 1};
        Word b{-(j + 1), -(d + i + 1), j + 1, d + i + 1};
        p.relators.push_back(concat({&a, &b}));
      }
  }
  p.check();
  return np;
}

namespace {

// Orbit of a start coset under right multiplication by all conjugated generator
// pairs [u^-1 g_i u, (u^-1 g_j u)-shifted]. Keeps a word per orbit element.
struct PairOrbit {
  std::vector<std::int64_t> ids;        // coset per element, breadth-first
  std::vector<Word> words;              // pair-alphabet word per element
  std::vector<std::int32_t> index_of;   // coset -> orbit index, -1 outside
};

std::vector<Word> pair_edge_words(const FiniteGroup& g, const GroupPresentation& base, int d) {
  std::vector<Word> edges;
  std::set<std::pair<std::int32_t, std::int32_t>> seen;
  for (std::int32_t u = 0; u < g.n; ++u)
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        std::int32_t a = g.conj(base.gen_elements[i], u);
        std::int32_t b = g.conj(base.gen_elements[j], u);
        if (seen.insert({a, b}).second) edges.push_back(pair_word(base, d, a, b));
      }
  return edges;
}

PairOrbit pair_orbit(const CosetTable& ct, const FiniteGroup& g, const GroupPresentation& base,
                     int d, std::int64_t start) {
  PairOrbit o;
  o.index_of.assign((std::size_t)ct.ncosets, -1);
  std::vector<Word> edges = pair_edge_words(g, base, d);
  o.ids.push_back(start);
  o.words.push_back(Word{});
  o.index_of[start] = 0;
  for (std::size_t head = 0; head < o.ids.size(); ++head)
    for (const Word& e : edges) {
      std::int64_t c = ct.trace(o.ids[head], e);
      if (o.index_of[c] < 0) {
        o.index_of[c] = (std::int32_t)o.ids.size();
        o.ids.push_back(c);
        Word w = o.words[head];
        w.insert(w.end(), e.begin(), e.end());
        o.words.push_back(free_reduce(std::move(w)));
      }
    }
  return o;
}

FiniteGroup group_from_orbit(const CosetTable& ct, const PairOrbit& o, const std::string& label) {
  int m = (int)o.ids.size();
  std::vector<std::vector<int>> raw(m, std::vector<int>(m));
  for (int c = 0; c < m; ++c)
    for (int e = 0; e < m; ++e) {
      std::int32_t v = o.index_of[ct.trace(o.ids[c], o.words[e])];
      if (v < 0) fail(errc::internal, "pair subgroup orbit not closed under itself");
      raw[c][e] = v;
    }
  GroupValidation gv;
  gv.order_cap = std::max(20000, m);
  return group_from_table(raw, label, gv);
}

// Collapses both alphabet copies onto the base generators and evaluates in g.
std::vector<std::int32_t> orbit_kappa(const FiniteGroup& g, const GroupPresentation& base, int d,
                                      const PairOrbit& o) {
  std::vector<std::int32_t> out(o.words.size());
  for (std::size_t c = 0; c < o.words.size(); ++c) {
    Word proj;
    proj.reserve(o.words[c].size());
    for (int letter : o.words[c]) {
      int idx = letter > 0 ? letter : -letter;
      if (idx > d) idx -= d;
      proj.push_back(letter > 0 ? idx : -idx);
    }
    out[c] = evaluate_word(g, base.gen_elements, proj);
  }
  return out;
}

std::vector<std::int32_t> derived_subgroup(const FiniteGroup& g) {
  std::vector<std::int32_t> comms;
  for (std::int32_t x = 0; x < g.n; ++x)
    for (std::int32_t y = 0; y < g.n; ++y) comms.push_back(g.comm(x, y));
  std::sort(comms.begin(), comms.end());
  comms.erase(std::unique(comms.begin(), comms.end()), comms.end());
  return subgroup_closure(g, comms);
}

void check_kappa_image(const FiniteGroup& g, const std::vector<std::int32_t>& kappa) {
  std::vector<std::int32_t> image(kappa);
  std::sort(image.begin(), image.end());
  image.erase(std::unique(image.begin(), image.end()), image.end());
  if (image != derived_subgroup(g))
    fail(errc::internal, "commutator map image is not the derived subgroup");
}

}  // namespace

TensorSquare tensor_square(const FiniteGroup& g, const TensorOptions& opts) {
  if (g.n > opts.tensor_order_cap)
    fail(errc::order_cap_exceeded,
         "tensor square capped at order " + std::to_string(opts.tensor_order_cap));
  NuPresentation np = nu_presentation(g, false);
  TcOptions tco;
  tco.max_cosets = opts.max_cosets;
  CosetTable ct = todd_coxeter(np.pres, {}, tco);

  TensorSquare ts;
  ts.nu_order = ct.ncosets;
  std::int64_t nsq = (std::int64_t)g.n * g.n;
  if (ct.ncosets % nsq)
    fail(errc::internal, "pair group order is not a multiple of |G|^2");
  PairOrbit o = pair_orbit(ct, g, np.base, np.d, 0);
  if ((std::int64_t)o.ids.size() != ct.ncosets / nsq)
    fail(errc::internal, "tensor subgroup orbit has unexpected size");

  ts.tensor = group_from_orbit(ct, o, g.label + " tensor-square");
  ts.kappa = orbit_kappa(g, np.base, np.d, o);
  check_kappa_image(g, ts.kappa);

  ts.pair.resize((std::size_t)nsq);
  for (std::int32_t x = 0; x < g.n; ++x)
    for (std::int32_t y = 0; y < g.n; ++y) {
      std::int32_t v = o.index_of[ct.trace(0, pair_word(np.base, np.d, x, y))];
      if (v < 0) fail(errc::internal, "pair lands outside the tensor subgroup");
      ts.pair[(std::size_t)x * g.n + y] = v;
    }

  std::vector<std::int32_t> diag;
  for (std::int32_t x = 0; x < g.n; ++x) diag.push_back(ts.pair[(std::size_t)x * g.n + x]);
  ts.nabla = subgroup_closure(ts.tensor, diag);

  // The diagonal subgroup is a quotient of the universal quadratic functor of
  // the abelianization, so its order divides that functor's order. A failure
  // here means the pair-group presentation collapsed to a proper cover.
  {
    Subgroup der;
    der.parent = &g;
    der.members = derived_subgroup(g);
    FiniteGroup ab = quotient_group(g, der).group;
    std::int64_t gamma = 1;
    if (ab.n > 1) {
      AbelianInvariants ai = abelian_invariants(ab);
      for (std::size_t i = 0; i < ai.size(); ++i) {
        gamma *= ai[i] % 2 == 0 ? 2 * ai[i] : ai[i];
        for (std::size_t j = i + 1; j < ai.size(); ++j) gamma *= std::gcd(ai[i], ai[j]);
      }
    }
    if (gamma % (std::int64_t)ts.nabla.size())
      fail(errc::internal, "diagonal subgroup exceeds the quadratic functor bound");
  }
  return ts;
}

ExteriorSquare exterior_square(const FiniteGroup& g, const TensorOptions& opts) {
  ExteriorSquare ex;
  int n = g.n;
  if (!opts.force_large_route && n <= opts.small_route_max) {
    TensorOptions lifted = opts;
    lifted.tensor_order_cap = std::max(opts.tensor_order_cap, opts.small_route_max);
    TensorSquare ts = tensor_square(g, lifted);
    ex.via_nu = true;
    ex.nu_order = ts.nu_order;
    ex.nabla_order = (std::int64_t)ts.nabla.size();

    Subgroup nab;
    nab.parent = &ts.tensor;
    nab.members = ts.nabla;
    Quotient q = quotient_group(ts.tensor, nab);
    ex.w = std::move(q.group);
    ex.w.label = g.label + " exterior-square";
    ex.wedge.resize((std::size_t)n * n);
    for (std::size_t i = 0; i < ex.wedge.size(); ++i) ex.wedge[i] = q.to_coset[ts.pair[i]];
    ex.kappa.assign(ex.w.n, -1);
    for (std::int32_t t = 0; t < ts.tensor.n; ++t) {
      std::int32_t c = q.to_coset[t];
      if (ex.kappa[c] < 0)
        ex.kappa[c] = ts.kappa[t];
      else if (ex.kappa[c] != ts.kappa[t])
        fail(errc::internal, "commutator map not constant on diagonal-subgroup cosets");
    }
  } else {
    NuPresentation np = nu_presentation(g, true);
    std::vector<Word> sub;
    for (int k = 0; k < np.d; ++k) sub.push_back(Word{np.d + k + 1});
    TcOptions tco;
    tco.max_cosets = opts.max_cosets;
    CosetTable ct = todd_coxeter(np.pres, sub, tco);
    if (ct.ncosets % n) fail(errc::internal, "coset count not divisible by |G|");
    PairOrbit o = pair_orbit(ct, g, np.base, np.d, 0);
    // The wedge subgroup meets every point stabilizer trivially, so its orbit
    // through the subgroup coset is faithful: orbit size times |G| must equal
    // the total coset count.
    if ((std::int64_t)o.ids.size() * n != ct.ncosets)
      fail(errc::internal, "wedge subgroup orbit is not free on the coset space");
    ex.w = group_from_orbit(ct, o, g.label + " exterior-square");
    ex.kappa = orbit_kappa(g, np.base, np.d, o);
    ex.wedge.resize((std::size_t)n * n);
    for (std::int32_t x = 0; x < n; ++x)
      for (std::int32_t y = 0; y < n; ++y) {
        std::int32_t v = o.index_of[ct.trace(0, pair_word(np.base, np.d, x, y))];
        if (v < 0) fail(errc::internal, "pair lands outside the wedge subgroup");
        ex.wedge[(std::size_t)x * n + y] = v;
      }
  }
  check_kappa_image(g, ex.kappa);

  for (std::int32_t c = 0; c < ex.w.n; ++c)
    if (ex.kappa[c] == g.id) ex.mult_members.push_back(c);
  if (!is_subgroup(ex.w, ex.mult_members))
    fail(errc::internal, "kernel of the commutator map is not a subgroup");
  std::vector<std::int32_t> derived = derived_subgroup(g);
  if ((std::int64_t)ex.mult_members.size() * (std::int64_t)derived.size() != ex.w.n)
    fail(errc::internal, "kernel size does not match the commutator image index");
  SubgroupGroup m = materialize(ex.w, ex.mult_members);
  ex.multiplier = m.group.n == 1 ? AbelianInvariants{} : abelian_invariants(m.group);
  return ex;
}

namespace {

struct PairTable {
  const CosetTable& ct;
  const GroupPresentation& base;
  int d;

  Word pw(std::int32_t x, std::int32_t y) const { return pair_word(base, d, x, y); }
  const Word& gw(std::int32_t x) const { return base.element_words[x]; }
  bool equal(const Word& lhs, const Word& rhs) const { return ct.trace(0, lhs) == ct.trace(0, rhs); }
};

void check_identities_on(const FiniteGroup& g, const PairTable& pt, std::int32_t x, std::int32_t y,
                         std::int32_t z, std::int32_t t, IdentityReport& rep) {
  auto inv = [&](std::int32_t a) { return g.inverse(a); };
  Word pxy = pt.pw(x, y);
  Word ipxy = word_inverse(pxy);
  Word pzt = pt.pw(z, t);

  // (x^-1 (x) y)^x = (x (x) y)^-1 = (x (x) y^-1)^y
  {
    Word lhs = conj_word(pt.pw(inv(x), y), pt.gw(x));
    Word rhs = conj_word(pt.pw(x, inv(y)), pt.gw(y));
    ++rep.checked[0];
    if (!(pt.equal(lhs, ipxy) && pt.equal(ipxy, rhs))) ++rep.failed[0];
  }
  // (z (x) t)^(yx) (x (x) y) = (x (x) y) (z (x) t)^(xy)
  {
    Word gx = pt.gw(x), gy = pt.gw(y);
    Word xy = concat({&gx, &gy});
    Word yx = concat({&gy, &gx});
    Word c1 = conj_word(pzt, yx);
    Word c2 = conj_word(pzt, xy);
    Word lhs = concat({&c1, &pxy});
    Word rhs = concat({&pxy, &c2});
    ++rep.checked[1];
    if (!pt.equal(lhs, rhs)) ++rep.failed[1];
  }
  // z (x) [x,y] = ((x (x) y)^z)^-1 (x (x) y)
  {
    Word lhs = pt.pw(z, g.comm(x, y));
    Word c = word_inverse(conj_word(pxy, pt.gw(z)));
    Word rhs = concat({&c, &pxy});
    ++rep.checked[2];
    if (!pt.equal(lhs, rhs)) ++rep.failed[2];
  }
  // [x,y] (x) t = (x (x) y)^-1 (x (x) y)^t
  {
    Word lhs = pt.pw(g.comm(x, y), t);
    Word c = conj_word(pxy, pt.gw(t));
    Word rhs = concat({&ipxy, &c});
    ++rep.checked[3];
    if (!pt.equal(lhs, rhs)) ++rep.failed[3];
  }
  // (z (x) t)^(x (x) y) = (z (x) t)^[x,y]
  {
    Word lhs = conj_word(pzt, pxy);
    Word rhs = conj_word(pzt, pt.gw(g.comm(x, y)));
    ++rep.checked[4];
    if (!pt.equal(lhs, rhs)) ++rep.failed[4];
  }
  // [x (x) y, z (x) t] = [x,y] (x) [z,t]
  {
    Word lhs = commutator_word(pxy, pzt);
    Word rhs = pt.pw(g.comm(x, y), g.comm(z, t));
    ++rep.checked[5];
    if (!pt.equal(lhs, rhs)) ++rep.failed[5];
  }
}

}  // namespace

IdentityReport check_brown_identities(const FiniteGroup& g, long long samples, std::uint64_t seed,
                                      const TensorOptions& opts) {
  NuPresentation nt = nu_presentation(g, false);
  NuPresentation ne = nu_presentation(g, true);
  TcOptions tco;
  tco.max_cosets = opts.max_cosets;
  CosetTable ctt = todd_coxeter(nt.pres, {}, tco);
  CosetTable cte = todd_coxeter(ne.pres, {}, tco);
  PairTable tens{ctt, nt.base, nt.d};
  PairTable ext{cte, ne.base, ne.d};

  IdentityReport rep;
  rep.exhaustive = g.n <= 8;
  if (rep.exhaustive) {
    for (std::int32_t x = 0; x < g.n; ++x)
      for (std::int32_t y = 0; y < g.n; ++y)
        for (std::int32_t z = 0; z < g.n; ++z)
          for (std::int32_t t = 0; t < g.n; ++t) {
            check_identities_on(g, tens, x, y, z, t, rep);
            check_identities_on(g, ext, x, y, z, t, rep);
          }
  } else {
    std::mt19937_64 rng(seed);
    auto draw = [&] { return (std::int32_t)(rng() % (std::uint64_t)g.n); };
    for (long long s = 0; s < samples; ++s) {
      std::int32_t x = draw(), y = draw(), z = draw(), t = draw();
      check_identities_on(g, tens, x, y, z, t, rep);
      check_identities_on(g, ext, x, y, z, t, rep);
    }
  }
  return rep;
}

}  // namespace xdeg
