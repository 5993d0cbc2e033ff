#include <vector>

#include "doctest.h"
#include "xdeg/error.hpp"
#include "xdeg/snf.hpp"

using namespace xdeg;

namespace {
std::vector<std::vector<BigInt>> mat(std::vector<std::vector<long long>> rows) {
  std::vector<std::vector<BigInt>> m;
  for (auto& r : rows) m.emplace_back(r.begin(), r.end());
  return m;
}
}  // namespace

TEST_CASE("smith diagonal frozen cases") {
  CHECK(smith_diagonal(mat({{2, 0}, {0, 3}})) == std::vector<BigInt>{1, 6});
  CHECK(smith_diagonal(mat({{4, 0}, {0, 6}})) == std::vector<BigInt>{2, 12});
  CHECK(smith_diagonal(mat({{1, 0}, {0, 1}})) == std::vector<BigInt>{1, 1});
  CHECK(smith_diagonal(mat({{0, 0}, {0, 0}})) == std::vector<BigInt>{0, 0});
  CHECK(smith_diagonal(mat({{2, 4, 4}})) == std::vector<BigInt>{2});
  CHECK(smith_diagonal(mat({{2, 1}, {0, 2}})) == std::vector<BigInt>{1, 4});
  CHECK(smith_diagonal(mat({{6, 4}, {4, 6}})) == std::vector<BigInt>{2, 10});
  // 3x3 with a forced divisibility fix-up.
  CHECK(smith_diagonal(mat({{2, 0, 0}, {0, 3, 0}, {0, 0, 5}})) == std::vector<BigInt>{1, 1, 30});
  CHECK(smith_diagonal(mat({{-2, 0}, {0, -3}})) == std::vector<BigInt>{1, 6});
}

TEST_CASE("diagonal entries divide in chain order") {
  auto d = smith_diagonal(mat({{12, 8, 6}, {4, 10, 2}, {0, 6, 18}}));
  REQUIRE(d.size() == 3);
  for (std::size_t i = 0; i + 1 < d.size(); ++i) {
    if (d[i] == 0) {
      CHECK(d[i + 1] == 0);
    } else if (d[i + 1] != 0) {
      CHECK(d[i + 1] % d[i] == 0);
    }
  }
  // Determinant magnitude is preserved by unimodular moves.
  CHECK(d[0] * d[1] * d[2] == 1584);
}

TEST_CASE("invariant factors of presentation matrices") {
  CHECK(invariant_factors(mat({{12}}), 1) == std::vector<std::int64_t>{12});
  CHECK(invariant_factors(mat({{2, 0}, {0, 2}}), 2) == std::vector<std::int64_t>{2, 2});
  CHECK(invariant_factors(mat({{2, 0}, {0, 4}}), 2) == std::vector<std::int64_t>{2, 4});
  CHECK(invariant_factors(mat({{4, 0}, {0, 6}}), 2) == std::vector<std::int64_t>{2, 12});
  // Redundant relations collapse; C6 presented with three rows.
  CHECK(invariant_factors(mat({{6, 0}, {0, 1}, {6, 6}}), 2) == std::vector<std::int64_t>{6});
  // Trivial group leaves no invariant factors.
  CHECK(invariant_factors(mat({{1}}), 1).empty());
  CHECK(invariant_factors({}, 0).empty());
  // Free rank is rejected: these matrices always come from finite groups.
  CHECK_THROWS_AS(invariant_factors(mat({{0}}), 1), error);
  CHECK_THROWS_AS(invariant_factors({}, 2), error);
}
