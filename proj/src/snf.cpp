#include "xdeg/snf.hpp"

#include "xdeg/error.hpp"

#include <algorithm>
#include <cstdlib>

namespace xdeg {

namespace {

BigInt abs_bi(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

}  // namespace

std::vector<BigInt> smith_diagonal(std::vector<std::vector<BigInt>> m) {
  const int rows = (int)m.size();
  const int cols = rows ? (int)m[0].size() : 0;
  const int k = std::min(rows, cols);
  std::vector<BigInt> diag(k, BigInt(0));

  for (int t = 0; t < k; ++t) {
    // Find minimal nonzero entry in the trailing block.
    int pr = -1, pc = -1;
    BigInt best;
    for (int i = t; i < rows; ++i)
      for (int j = t; j < cols; ++j)
        if (m[i][j] != 0) {
          BigInt a = abs_bi(m[i][j]);
          if (pr < 0 || a < best) {
            best = a;
            pr = i;
            pc = j;
          }
        }
    if (pr < 0) break;  // trailing block is zero

    std::swap(m[t], m[pr]);
    for (int i = t; i < rows; ++i) std::swap(m[i][t], m[i][pc]);

    // Clear row and column t; restart pivot selection whenever a remainder appears,
    // since the remainder is strictly smaller than the pivot.
    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (int i = t + 1; i < rows; ++i) {
        if (m[i][t] == 0) continue;
        BigInt q = m[i][t] / m[t][t];
        for (int j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
        if (m[i][t] != 0) {
          std::swap(m[t], m[i]);
          dirty = true;
        }
      }
      for (int j = t + 1; j < cols; ++j) {
        if (m[t][j] == 0) continue;
        BigInt q = m[t][j] / m[t][t];
        for (int i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
        if (m[t][j] != 0) {
          for (int i = t; i < rows; ++i) std::swap(m[i][t], m[i][j]);
          dirty = true;
        }
      }
    }

    // Divisibility fix-up: the pivot must divide every entry of the trailing block.
    // Mixing an offending row in and redoing the pivot strictly shrinks it.
    bool redo = false;
    for (int i = t + 1; i < rows && !redo; ++i) {
      for (int j = t + 1; j < cols; ++j)
        if (m[i][j] % m[t][t] != 0) {
          for (int jj = t; jj < cols; ++jj) m[t][jj] += m[i][jj];
          redo = true;
          break;
        }
    }
    if (redo) {
      --t;
      continue;
    }
    diag[t] = abs_bi(m[t][t]);
  }
  return diag;
}

std::vector<std::int64_t> invariant_factors(const std::vector<std::vector<BigInt>>& rows,
                                            int cols) {
  std::vector<std::vector<BigInt>> m;
  m.reserve(rows.size());
  for (const auto& r : rows) {
    std::vector<BigInt> row(cols, BigInt(0));
    for (int j = 0; j < (int)r.size() && j < cols; ++j) row[j] = r[j];
    m.push_back(std::move(row));
  }
  if ((int)m.size() < cols) m.resize(cols, std::vector<BigInt>(cols, BigInt(0)));

  std::vector<BigInt> diag = smith_diagonal(std::move(m));
  std::vector<std::int64_t> inv;
  for (int j = 0; j < cols; ++j) {
    BigInt d = j < (int)diag.size() ? diag[j] : BigInt(0);
    if (d == 0) fail(errc::internal, "relation matrix has infinite quotient");
    if (d > 1) inv.push_back(d.convert_to<std::int64_t>());
  }
  return inv;
}

}  // namespace xdeg
