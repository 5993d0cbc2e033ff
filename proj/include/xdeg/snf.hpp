#pragma once

#include "xdeg/rational.hpp"

#include <cstdint>
#include <vector>

namespace xdeg {

// Diagonal of the Smith normal form of an integer matrix (rows x cols, row-major).
// Entries are returned non-negative with d1 | d2 | ... | dk, k = min(rows, cols);
// trailing zeros are kept. Pivoting always selects a minimal-magnitude nonzero entry,
// which keeps coefficient growth tame on the sparse relation matrices used here.
std::vector<BigInt> smith_diagonal(std::vector<std::vector<BigInt>> m);

// Invariant factors (> 1, divisor chain) of Z^cols / row span. Rows shorter than cols
// are implicitly zero-padded. A zero quotient rank is rejected: callers only pass
// relation matrices of finite groups, so every generator must get a finite order.
std::vector<std::int64_t> invariant_factors(const std::vector<std::vector<BigInt>>& rows,
                                            int cols);

}  // namespace xdeg
