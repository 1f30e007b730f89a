#include "tbs/intmat.hpp"

#include <utility>

namespace tbs {

IntMatrix identity_matrix(std::size_t n) {
  IntMatrix m(n, std::vector<Int>(n, Int(0)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMatrix matmul(const IntMatrix& a, const IntMatrix& b) {
  std::size_t n = a.size();
  std::size_t k = b.size();
  std::size_t m = k ? b[0].size() : 0;
  IntMatrix out(n, std::vector<Int>(m, Int(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) out[i][j] += a[i][l] * b[l][j];
    }
  return out;
}

namespace {

struct Worker {
  IntMatrix a, left, right;
  std::size_t rows, cols;

  void swap_rows(std::size_t i, std::size_t j) {
    std::swap(a[i], a[j]);
    std::swap(left[i], left[j]);
  }
  void swap_cols(std::size_t i, std::size_t j) {
    for (auto& row : a) std::swap(row[i], row[j]);
    for (auto& row : right) std::swap(row[i], row[j]);
  }
  // row_i -= q * row_j
  void sub_row(std::size_t i, std::size_t j, const Int& q) {
    for (std::size_t c = 0; c < cols; ++c) a[i][c] -= q * a[j][c];
    for (std::size_t c = 0; c < rows; ++c) left[i][c] -= q * left[j][c];
  }
  // col_i -= q * col_j
  void sub_col(std::size_t i, std::size_t j, const Int& q) {
    for (std::size_t r = 0; r < rows; ++r) a[r][i] -= q * a[r][j];
    for (std::size_t r = 0; r < cols; ++r) right[r][i] -= q * right[r][j];
  }
  void negate_row(std::size_t i) {
    for (auto& v : a[i]) v = -v;
    for (auto& v : left[i]) v = -v;
  }

  // Moves the smallest nonzero |entry| of the trailing block to (t, t).
  bool place_pivot(std::size_t t) {
    bool found = false;
    std::size_t bi = t, bj = t;
    Int best;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j) {
        if (a[i][j] == 0) continue;
        Int v = abs(a[i][j]);
        if (!found || v < best) {
          found = true;
          best = v;
          bi = i;
          bj = j;
        }
      }
    if (!found) return false;
    if (bi != t) swap_rows(bi, t);
    if (bj != t) swap_cols(bj, t);
    return true;
  }

  void run() {
    std::size_t lim = std::min(rows, cols);
    for (std::size_t t = 0; t < lim; ++t) {
      if (!place_pivot(t)) break;
      for (;;) {
        bool dirty = false;
        for (std::size_t i = t + 1; i < rows; ++i) {
          if (a[i][t] == 0) continue;
          Int q;
          mpz_fdiv_q(q.get_mpz_t(), a[i][t].get_mpz_t(), a[t][t].get_mpz_t());
          sub_row(i, t, q);
          if (a[i][t] != 0) dirty = true;
        }
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (a[t][j] == 0) continue;
          Int q;
          mpz_fdiv_q(q.get_mpz_t(), a[t][j].get_mpz_t(), a[t][t].get_mpz_t());
          sub_col(j, t, q);
          if (a[t][j] != 0) dirty = true;
        }
        if (dirty) {
          place_pivot(t);
          continue;
        }
        // divisibility of the remaining block by the pivot
        bool fixed = false;
        for (std::size_t i = t + 1; i < rows && !fixed; ++i)
          for (std::size_t j = t + 1; j < cols; ++j) {
            if (a[i][j] % a[t][t] != 0) {
              sub_row(t, i, Int(-1));
              fixed = true;
              break;
            }
          }
        if (!fixed) break;
      }
      if (a[t][t] < 0) negate_row(t);
    }
  }
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a, std::size_t rows, std::size_t cols) {
  Worker w{a, identity_matrix(rows), identity_matrix(cols), rows, cols};
  w.run();
  SmithForm out;
  std::size_t lim = std::min(rows, cols);
  out.diagonal.reserve(lim);
  for (std::size_t t = 0; t < lim; ++t) out.diagonal.push_back(w.a[t][t]);
  out.left = std::move(w.left);
  out.right = std::move(w.right);
  return out;
}

}  // namespace tbs
