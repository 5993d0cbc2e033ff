#include "xdeg/tensor.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "doctest.h"
#include "xdeg/error.hpp"
#include "xdeg/family.hpp"
#include "xdeg/snf.hpp"
#include "xdeg/todd_coxeter.hpp"

using namespace xdeg;

namespace {

// For abelian G with invariant factors d1 | ... | dk the tensor square is the
// direct sum of Z_gcd(di,dj) over all ordered pairs (i,j) and the exterior
// square the direct sum over i < j. Reduced to canonical form through the
// already tested Smith machinery.
AbelianInvariants abelian_square_oracle(const AbelianInvariants& inv, bool exterior) {
  std::vector<std::int64_t> cyc;
  for (std::size_t i = 0; i < inv.size(); ++i)
    for (std::size_t j = exterior ? i + 1 : 0; j < inv.size(); ++j)
      if (!exterior || j > i) cyc.push_back(std::gcd(inv[i], inv[j]));
  if (cyc.empty()) return {};
  std::vector<std::vector<BigInt>> rows(cyc.size(), std::vector<BigInt>(cyc.size(), 0));
  for (std::size_t i = 0; i < cyc.size(); ++i) rows[i][i] = cyc[i];
  return invariant_factors(rows, (int)cyc.size());
}

std::int64_t product(const AbelianInvariants& inv) {
  std::int64_t p = 1;
  for (auto d : inv) p *= d;
  return p;
}

}  // namespace

TEST_CASE("tensor and exterior squares of abelian groups match the gcd oracle") {
  for (const char* spec :
       {"cyclic:1", "cyclic:2", "cyclic:3", "cyclic:4", "cyclic:6", "cyclic:8", "abelian:[2,2]",
        "abelian:[2,4]", "abelian:[3,3]", "abelian:[2,2,2]", "abelian:[2,6]"}) {
    CAPTURE(spec);
    FiniteGroup g = group_from_family(spec);
    AbelianInvariants inv = g.n == 1 ? AbelianInvariants{} : abelian_invariants(g);

    TensorSquare ts = tensor_square(g);
    CHECK(ts.tensor.is_abelian());
    AbelianInvariants want_t = abelian_square_oracle(inv, false);
    AbelianInvariants got_t = ts.tensor.n == 1 ? AbelianInvariants{} : abelian_invariants(ts.tensor);
    CHECK(got_t == want_t);
    CHECK(ts.nu_order == (std::int64_t)ts.tensor.n * g.n * g.n);

    ExteriorSquare ex = exterior_square(g);
    AbelianInvariants want_e = abelian_square_oracle(inv, true);
    AbelianInvariants got_e = ex.w.n == 1 ? AbelianInvariants{} : abelian_invariants(ex.w);
    CHECK(got_e == want_e);

    // Abelian: every commutator is trivial and the multiplier is the whole
    // exterior square.
    for (std::int32_t c = 0; c < ex.w.n; ++c) CHECK(ex.kappa[c] == g.id);
    CHECK(ex.multiplier == want_e);
    CHECK((std::int64_t)ts.tensor.n == (std::int64_t)ts.nabla.size() * ex.w.n);
  }
}

TEST_CASE("wedge pairing is alternating and kappa tracks commutators") {
  for (const char* spec : {"dihedral:8", "quaternion:8", "symmetric:3", "abelian:[2,4]",
                           "extraspecial:3,+", "dihedral:16"}) {
    CAPTURE(spec);
    FiniteGroup g = group_from_family(spec);
    ExteriorSquare ex = exterior_square(g);
    for (std::int32_t x = 0; x < g.n; ++x) {
      CHECK(ex.wedge[(std::size_t)x * g.n + x] == ex.w.id);
      for (std::int32_t y = 0; y < g.n; ++y) {
        std::int32_t w = ex.wedge[(std::size_t)x * g.n + y];
        CHECK(ex.w.mul(w, ex.wedge[(std::size_t)y * g.n + x]) == ex.w.id);
        CHECK(ex.kappa[w] == g.comm(x, y));
      }
    }
  }
}

TEST_CASE("tensor square of dihedral 8") {
  FiniteGroup g = group_from_family("dihedral:8");
  TensorSquare ts = tensor_square(g);
  CHECK(ts.tensor.n == 32);
  CHECK(ts.nu_order == 32 * 64);
  CHECK((int)ts.nabla.size() == 8);
  // kappa onto the derived subgroup, fibers of equal size
  std::set<std::int32_t> image(ts.kappa.begin(), ts.kappa.end());
  CHECK(image.size() == 2);

  ExteriorSquare ex = exterior_square(g);
  CHECK(ex.w.n == 4);
  CHECK(ex.via_nu);
  CHECK(ex.nu_order == 2048);
  CHECK(ex.nabla_order == 8);
  CHECK(ex.multiplier == AbelianInvariants{2});
  CHECK((int)ex.mult_members.size() == 2);
}

TEST_CASE("frozen square orders for small nonabelian groups") {
  struct Row {
    const char* spec;
    int tensor_order;
    int wedge_order;
    AbelianInvariants multiplier;
  };
  // Tensor orders cross-checked against the all-element pair presentation
  // below; wedge order = |multiplier| * |derived subgroup| always.
  for (const Row& r : {Row{"quaternion:8", 64, 2, {}},
                       Row{"symmetric:3", 6, 3, {}},
                       Row{"extraspecial:3,+", 729, 27, {3, 3}}}) {
    CAPTURE(r.spec);
    FiniteGroup g = group_from_family(r.spec);
    TensorSquare ts = tensor_square(g);
    CHECK(ts.tensor.n == r.tensor_order);
    ExteriorSquare ex = exterior_square(g);
    CHECK(ex.w.n == r.wedge_order);
    CHECK(ex.multiplier == r.multiplier);
    CHECK((std::int64_t)ts.tensor.n == (std::int64_t)ts.nabla.size() * ex.w.n);
  }
}

namespace {

// Pair group presented on every element with crossed relators over every
// element triple: the definitional relator set, independent of the generator
// route inside the library. Order = |G (x) G| * |G|^2.
std::int64_t complete_pair_order(const FiniteGroup& g) {
  int n = g.n;
  Presentation p;
  p.ngens = 2 * n;
  for (std::int32_t i = 0; i < n; ++i)
    for (std::int32_t j = 0; j < n; ++j) {
      Word r{i + 1, j + 1, -(g.mul(i, j) + 1)};
      r = free_reduce(std::move(r));
      if (!r.empty()) p.relators.push_back(r);
      Word s;
      for (int l : r) s.push_back(l > 0 ? l + n : l - n);
      if (!s.empty()) p.relators.push_back(s);
    }
  for (std::int32_t a = 0; a < n; ++a)
    for (std::int32_t b = 0; b < n; ++b)
      for (std::int32_t c = 0; c < n; ++c) {
        std::int32_t ac = g.conj(a, c), bc = g.conj(b, c);
        Word bracket{-(a + 1), -(n + b + 1), a + 1, n + b + 1};
        Word rhs{-(ac + 1), -(n + bc + 1), ac + 1, n + bc + 1};
        Word irhs = word_inverse(rhs);
        for (int outer : {c + 1, n + c + 1}) {
          Word rel{-outer};
          rel.insert(rel.end(), bracket.begin(), bracket.end());
          rel.push_back(outer);
          rel.insert(rel.end(), irhs.begin(), irhs.end());
          p.relators.push_back(free_reduce(std::move(rel)));
        }
      }
  p.check();
  CosetTable ct = todd_coxeter(p, {}, {});
  return ct.ncosets;
}

}  // namespace

TEST_CASE("generator-route pair groups match the all-element presentation") {
  for (const char* spec :
       {"cyclic:4", "abelian:[2,2]", "symmetric:3", "dihedral:8", "quaternion:8"}) {
    CAPTURE(spec);
    FiniteGroup g = group_from_family(spec);
    CHECK(complete_pair_order(g) == tensor_square(g).nu_order);
  }
}

TEST_CASE("multiplier of symmetric 4 has order two") {
  FiniteGroup g = group_from_family("symmetric:4");
  ExteriorSquare ex = exterior_square(g);
  CHECK(ex.w.n == 24);
  CHECK(ex.multiplier == AbelianInvariants{2});
}

TEST_CASE("relative enumeration route agrees with the full pair group route") {
  for (const char* spec : {"dihedral:8", "dihedral:16", "dihedral:32", "quaternion:8",
                           "abelian:[2,4]", "extraspecial:3,+", "symmetric:3"}) {
    CAPTURE(spec);
    FiniteGroup g = group_from_family(spec);
    ExteriorSquare small = exterior_square(g);
    TensorOptions lo;
    lo.force_large_route = true;
    ExteriorSquare large = exterior_square(g, lo);
    CHECK(small.via_nu);
    CHECK(!large.via_nu);
    CHECK(small.w.n == large.w.n);
    CHECK(small.multiplier == large.multiplier);

    // The pair tables must agree up to a kappa-compatible bijection.
    std::vector<std::int32_t> to_large(small.w.n, -1);
    bool well_defined = true;
    for (std::size_t i = 0; i < small.wedge.size(); ++i) {
      std::int32_t a = small.wedge[i], b = large.wedge[i];
      if (to_large[a] < 0)
        to_large[a] = b;
      else if (to_large[a] != b)
        well_defined = false;
    }
    CHECK(well_defined);
    std::set<std::int32_t> hit(to_large.begin(), to_large.end());
    CHECK((int)hit.size() == small.w.n);
    CHECK(!hit.count(-1));
    for (std::int32_t c = 0; c < small.w.n; ++c)
      CHECK(small.kappa[c] == large.kappa[to_large[c]]);
  }
}

TEST_CASE("pair identities hold exhaustively on groups up to order eight") {
  for (const char* spec : {"dihedral:8", "quaternion:8", "abelian:[2,2]", "cyclic:6"}) {
    CAPTURE(spec);
    FiniteGroup g = group_from_family(spec);
    IdentityReport rep = check_brown_identities(g);
    CHECK(rep.exhaustive);
    CHECK(rep.all_hold());
    long long quads = (long long)g.n * g.n * g.n * g.n;
    for (int i = 0; i < 6; ++i) {
      CHECK(rep.checked[i] == 2 * quads);
      CHECK(rep.failed[i] == 0);
    }
  }
}

TEST_CASE("pair identities hold on random samples in larger groups") {
  for (const char* spec : {"symmetric:4", "dihedral:16", "extraspecial:3,+"}) {
    CAPTURE(spec);
    FiniteGroup g = group_from_family(spec);
    IdentityReport rep = check_brown_identities(g, 120, 7);
    CHECK(!rep.exhaustive);
    CHECK(rep.all_hold());
    for (int i = 0; i < 6; ++i) CHECK(rep.checked[i] == 240);
  }
}

TEST_CASE("trivial wedge rows pick out exactly the expected elements") {
  // Elements whose whole wedge row is trivial: just the identity for the
  // dihedral group of order 8, the center for the quaternion group.
  FiniteGroup d8 = group_from_family("dihedral:8");
  ExteriorSquare exd = exterior_square(d8);
  int trivial_rows = 0;
  for (std::int32_t x = 0; x < d8.n; ++x) {
    bool all = true;
    for (std::int32_t y = 0; y < d8.n; ++y)
      if (exd.wedge[(std::size_t)x * d8.n + y] != exd.w.id) all = false;
    if (all) ++trivial_rows;
  }
  CHECK(trivial_rows == 1);

  FiniteGroup q8 = group_from_family("quaternion:8");
  ExteriorSquare exq = exterior_square(q8);
  trivial_rows = 0;
  for (std::int32_t x = 0; x < q8.n; ++x) {
    bool all = true;
    for (std::int32_t y = 0; y < q8.n; ++y)
      if (exq.wedge[(std::size_t)x * q8.n + y] != exq.w.id) all = false;
    if (all) ++trivial_rows;
  }
  CHECK(trivial_rows == 2);
}

TEST_CASE("square construction error paths") {
  FiniteGroup g = group_from_family("dihedral:8");
  TensorOptions tiny;
  tiny.tensor_order_cap = 4;
  CHECK_THROWS_AS(tensor_square(g, tiny), const error&);
  try {
    tensor_square(g, tiny);
  } catch (const error& e) {
    CHECK(e.code() == errc::order_cap_exceeded);
  }

  TensorOptions starved;
  starved.max_cosets = 64;
  CHECK_THROWS_AS(tensor_square(g, starved), const error&);
}

TEST_CASE("product of the multiplier orders matches the wedge order") {
  for (const char* spec : {"dihedral:8", "dihedral:16", "quaternion:16", "symmetric:4"}) {
    CAPTURE(spec);
    FiniteGroup g = group_from_family(spec);
    ExteriorSquare ex = exterior_square(g);
    CHECK((std::int64_t)ex.mult_members.size() == product(ex.multiplier));
  }
}
