#pragma once

#include <cstddef>
#include <vector>

#include "tbs/scalars.hpp"

namespace tbs {

using IntMatrix = std::vector<std::vector<Int>>;

IntMatrix identity_matrix(std::size_t n);
IntMatrix matmul(const IntMatrix& a, const IntMatrix& b);

// left * a * right = diag(diagonal) padded with zeros, with left and right
// unimodular. diagonal has min(rows, cols) entries, all >= 0, each dividing the
// next nonzero one; zeros come last.
struct SmithForm {
  IntMatrix left;
  IntMatrix right;
  std::vector<Int> diagonal;
};

SmithForm smith_normal_form(const IntMatrix& a, std::size_t rows, std::size_t cols);

}  // namespace tbs
